#pragma once

#include "lwood/graded_term.hpp"
#include "lwood/resolutions.hpp"

#include <string>
#include <vector>

namespace lwood {

/// Published resolution data used as fixed expectations. Cone cases use
/// dim E = 1 and label the E side by the one-row partition (degree).

/// Y_2 for G2 (dim E = 2), characteristic 0: the six terms.
std::vector<GradedTerm> g2_y2_expected_terms();
std::string g2_y2_betti_text();
/// Characteristic 2 table, shown for reference only.
std::string g2_y2_char2_betti_text();

/// Y_1 for G2 (dim E = 2): the listed terms (lambda_1, lambda_2; mu_1, mu_2)(-j).
std::vector<StatedTerm> g2_y1_stated_terms();
std::string g2_y1_betti_text();

/// Cone over the highest weight orbit of E6 in V_w1.
std::vector<StatedTerm> e6_cone_stated_terms();
std::string e6_cone_betti_text();
std::vector<BigInt> e6_cone_hilbert_numerator();

/// Cone over the highest weight orbit of F4 in V_w4.
std::vector<StatedTerm> f4_cone_stated_terms();

/// First three terms of the resolution of the E8 adjoint cone.
std::vector<StatedTerm> e8_cone_stated_terms();

std::vector<BigInt> betti_totals(const std::string& table_text);

}  // namespace lwood
