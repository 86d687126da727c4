#pragma once

#include "lwood/graded_term.hpp"
#include "lwood/group_case.hpp"
#include "lwood/plethysm.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lwood {

/// Graded Betti numbers beta_{i,j}: i homological, j internal degree.
struct BettiTable {
  std::map<std::pair<int, int>, BigInt> entries;  // zeros are not stored
  int ambient_dim = 0;

  BigInt at(int i, int j) const;
  void add(int i, int j, const BigInt& value);
  int max_index() const;
  /// Column sums for i = 0..max_index().
  std::vector<BigInt> totals() const;

  /// Macaulay2 layout: header of column indices, a "total:" row, then one
  /// row per j - i with "." for zero.
  std::string to_text() const;

  bool operator==(const BettiTable&) const = default;
};

/// Reads the layout produced by to_text (trailing blanks ignored).
BettiTable parse_betti_text(std::string_view text, int ambient_dim = 0);

struct HilbertData {
  std::vector<BigInt> numerator;  // coefficient of T^k at index k
  int krull_dim = 0;
};

std::string polynomial_string(const std::vector<BigInt>& coeffs);

/// K-polynomial sum (-1)^i beta_{i,j} T^j divided by (1 - T)^codim.
/// Throws ConsistencyError when the division leaves a remainder.
HilbertData hilbert_numerator(const BettiTable& b, int codim);

/// Lambda^i(Lambda^2 E) (alternating) or Lambda^i(Sym^2 E) (symmetric) for
/// dim E = m: the partitions of 2i in Q_{-1} / Q_1 with at most m parts.
/// Requires 0 <= i <= m(m -+ 1)/2.
Decomposition<Partition> koszul_terms(Form form, int m, int i);
/// The whole Koszul complex, term i at internal degree 2i, group label trivial.
std::vector<GradedTerm> koszul_complex(Form form, int m);

/// Degree d part of K[Y] = sum over |lambda| = d, l(lambda) <= dim E of
/// S_lambda E (x) ring_component(case, lambda). Requires 0 <= d <= 8.
Decomposition<TermLabel> cauchy_slice(const GroupCase& c, int d);
BigInt slice_dimension(const GroupCase& c, const Decomposition<TermLabel>& slice);
/// dim Sym^2(E (x) V) - dim K[Y]_2.
BigInt quadric_space_dimension(const GroupCase& c);

/// Dimensions of E and G labels for a group case.
TermDims case_dims(const GroupCase& c);

/// Equivariant terms of the minimal free resolution of the G2 variety Y_2
/// (dim E = 2), rebuilt degree by degree from K[Y_2] and
/// A = Sym(E (x) V). Throws ConsistencyError when a reconstructed term has
/// mixed signs.
std::vector<GradedTerm> g2_equivariant_resolution();

/// beta_{i,j} = total dimension of the (i, j) content.
BettiTable betti_of(const std::vector<GradedTerm>& terms, const TermDims& dims, int ambient_dim = 0);

/// One term S_lambda E (x) V_mu (x) A(-degree) of a stated resolution.
struct StatedTerm {
  int i = 0;
  Partition e;
  Dynkin g;
  int degree = 0;
  int mult = 1;
};

std::vector<GradedTerm> stated_to_terms(const std::vector<StatedTerm>& stated);

struct AuditRow {
  int i = 0;
  BigInt computed;
  std::optional<BigInt> expected;
  bool pass() const { return !expected || *expected == computed; }
};

struct AuditReport {
  std::string case_name;
  std::vector<AuditRow> rows;
  bool pass() const;
};

/// Per homological degree, sum of dim S_lambda E * dim V_mu over the stated
/// terms, compared with the expected Betti column totals where given.
AuditReport dimension_audit(const GroupCase& c, const std::vector<StatedTerm>& stated,
                            const std::vector<BigInt>& expected_totals = {});

}  // namespace lwood
