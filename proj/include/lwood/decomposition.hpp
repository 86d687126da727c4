#pragma once

#include "lwood/bigint.hpp"

#include <functional>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <map>
#include <stdexcept>
#include <utility>

namespace lwood {

/// Multiset of labels with integer multiplicities. Zero multiplicities are
/// never stored. Public operations of the library only hand out
/// nonnegative decompositions; signed entries appear in Euler sums.
template <class Label>
class Decomposition {
 public:
  using Map = std::map<Label, BigInt>;
  using const_iterator = typename Map::const_iterator;

  Decomposition() = default;
  Decomposition(std::initializer_list<std::pair<const Label, BigInt>> init) {
    for (const auto& [label, mult] : init) add(label, mult);
  }

  void add(const Label& label, const BigInt& mult) {
    if (mult == 0) return;
    auto [it, inserted] = entries_.try_emplace(label, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) entries_.erase(it);
    }
  }

  BigInt at(const Label& label) const {
    auto it = entries_.find(label);
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  bool contains(const Label& label) const { return entries_.count(label) != 0; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  const Map& entries() const { return entries_; }

  bool is_nonnegative() const {
    for (const auto& [label, mult] : entries_)
      if (mult < 0) return false;
    return true;
  }

  /// Throws unless every multiplicity is nonnegative.
  const Decomposition& require_nonnegative(const char* what) const {
    if (!is_nonnegative()) throw std::logic_error(std::string(what) + ": negative multiplicity");
    return *this;
  }

  Decomposition& operator+=(const Decomposition& other) {
    for (const auto& [label, mult] : other.entries_) add(label, mult);
    return *this;
  }
  Decomposition& operator-=(const Decomposition& other) {
    for (const auto& [label, mult] : other.entries_) add(label, -mult);
    return *this;
  }
  Decomposition& operator*=(const BigInt& scalar) {
    if (scalar == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [label, mult] : entries_) mult *= scalar;
    return *this;
  }

  friend Decomposition operator+(Decomposition a, const Decomposition& b) { return a += b; }
  friend Decomposition operator-(Decomposition a, const Decomposition& b) { return a -= b; }
  friend Decomposition operator*(Decomposition a, const BigInt& s) { return a *= s; }
  friend Decomposition operator*(const BigInt& s, Decomposition a) { return a *= s; }
  bool operator==(const Decomposition&) const = default;

  /// Sum of multiplicity times dim(label).
  BigInt total(const std::function<BigInt(const Label&)>& dim) const {
    BigInt t = 0;
    for (const auto& [label, mult] : entries_) t += mult * dim(label);
    return t;
  }

  /// Relabels every entry; colliding labels are summed.
  template <class F>
  auto map_labels(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Label&>()))>;
    Decomposition<Out> out;
    for (const auto& [label, mult] : entries_) out.add(f(label), mult);
    return out;
  }

 private:
  Map entries_;
};

}  // namespace lwood
