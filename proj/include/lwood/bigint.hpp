#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lwood {

/// Arbitrary-precision signed integer used for every multiplicity and
/// dimension in the library.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace lwood
