#ifndef SCHUBFGL_SCHUBERT_HPP
#define SCHUBFGL_SCHUBERT_HPP

#include <map>
#include <memory>
#include <vector>

#include "schubfgl/localized.hpp"
#include "schubfgl/momentgraph.hpp"

namespace schubfgl {

// The point class [Z_pt]: y_{R^-} = prod_{alpha > 0} y_{-alpha} at the
// identity vertex, zero elsewhere.  Finite types only.
Section point_class(const std::shared_ptr<const Model>& m);

// Bott-Samelson class [Z_word] = A_{i_1} A_{i_2} ... A_{i_l} [Z_pt]
// (rightmost operator applied first).
Section bott_samelson(const std::shared_ptr<const Model>& m, const std::vector<int>& word);

// Rank-2 smoothness table for the Schubert variety X_w: everything is smooth
// in A2; B2 has the one singular case s1s2s1; G2 has s1s2s1 and the four
// elements of lengths 4 and 5.
bool schubert_is_smooth(const RootDatum& rd, WeylElt w);

// sigma_w_!(1), the naive localization pushforward of 1 along the inclusion
// of the subgraph {v <= w}:
//   value at v = prod over beta > 0 with v s_beta not<= w of y_{-beta},
// which is the smooth-variety class formula applied whether or not X_w is
// smooth (the result fails the GKM condition exactly when it is not).
Section naive_class(const std::shared_ptr<const Model>& m, WeylElt w);

// Correction factor for the length-3 singular class, with j = -<alpha_2, alpha_1^vee>:
//   N = 1 + (1 - p(y_{-a2}, y_{-j a1}) y_{-a2})
//         * sum_{k=1}^{j-1} (1 - p(y_{-a1}, y_{-k a1}) y_{-k a1}).
// Specializations: N = j additively, N = 1 + e^{-a2}(e^{-a1} + ... + e^{-(j-1)a1})
// multiplicatively.  Conjectural input to the singular table, treated here as
// the definition of that table entry.
Series correction_factor_N(const Model& m);

// The Schubert class [X_w]: the naive pushforward when X_w is smooth; for the
// singular s1s2s1 the same values with the factor N inserted at the
// singular-locus vertices {e, s1}.  Unsupported for the remaining singular
// cases (G2 lengths 4 and 5) and for affine types.
Section schubert_class(const std::shared_ptr<const Model>& m, WeylElt w);

struct BasisEntry {
  WeylElt w;
  Section cls;
  // [X_w]_w = prod over alpha > 0 with w alpha > 0 of y_{-alpha}.
  Series normalization;
};

// The available Schubert classes of a model, ordered by decreasing length
// (the elimination order used by expand_in_basis).  Classes whose vertex is
// outside the supported table are listed in missing().
class SchubertBasis {
 public:
  explicit SchubertBasis(std::shared_ptr<const Model> m);

  const Model& model() const { return *model_; }
  const std::shared_ptr<const Model>& model_ptr() const { return model_; }
  const std::vector<BasisEntry>& entries() const { return entries_; }
  const std::vector<WeylElt>& missing() const { return missing_; }
  const BasisEntry* find(WeylElt w) const;

 private:
  std::shared_ptr<const Model> model_;
  std::vector<BasisEntry> entries_;
  std::vector<WeylElt> missing_;
};

struct ExpansionResult {
  // Nonzero coefficients c_w of s = sum c_w [X_w].
  std::map<WeylElt, Series> coeffs;
  // Set when the input is not exactly in the span of the available classes
  // (a division failed or support survived elimination).
  bool residual = false;
  // Whatever elimination could not remove; zero when residual is false.
  Section residue;
};

// Top-down elimination: for lengths descending, c_w = s_w / [X_w]_w, then
// subtract c_w [X_w] (triangular support keeps the process going downward).
ExpansionResult expand_in_basis(const Section& s, const SchubertBasis& basis);

// [X_u][X_v] expanded in the basis.
ExpansionResult schubert_product(const SchubertBasis& basis, WeylElt u, WeylElt v);

// x_lambda [X_w] expanded in the basis.
ExpansionResult pieri_chevalley(const SchubertBasis& basis, Weight lam, WeylElt w);

// [Z_word] - [X_w] for word in {121, 212}.  Checks the closed form before
// returning: the difference is supported on {e, s_i} (i the first letter) and
// equals c_i [X_{s_i}] with
//   c_1 = (p(y_{a1}, y_{-a1}) - p(y_{-a2}, y_{-j a1})) / y_{-s1 a2},
//   c_2 = (p(y_{a2}, y_{-a2}) - p(y_{-a1}, y_{-a2}))  / y_{-s2 a1};
// both vanish under the additive and multiplicative laws.
Section bs_minus_schubert(const std::shared_ptr<const Model>& m, int wordcase);

// The generic closed-form expansion of y_{R^-} f over the eight-element window
// (B2 pattern): coefficients of y_{R^-} f = sum coeff_w [X_w] computed
// directly from the values f_w, as localized elements.
std::map<WeylElt, Localized> closed_form_expansion_b2(const Section& f);

// Small-case closed-form product rules: the coefficients of g [X_w] for
// l(w) <= 2 in terms of divided differences of the values of g (valid for any
// rank-2 type and GKM section g).
std::map<WeylElt, Localized> product_closed_form_small(const Section& g, WeylElt w);

// One verified closed-form product identity [X_u][X_v] = sum coeff_w [X_w]
// of the rank-2 catalogue.
struct ProductCase {
  int id;                 // 1-based position in the catalogue
  std::vector<int> u, v;  // factor words
  std::vector<std::pair<std::vector<int>, Localized>> rhs;
  // Both factors collapse to the longest element in A2 and the printed
  // coefficients leave the series ring; check [X_w0]^2 = [X_w0] instead.
  bool a2_degenerate = false;
};

// All 28 closed-form products of classes of length <= 3, instantiated over
// the model's law (finite types).
std::vector<ProductCase> product_table(const std::shared_ptr<const Model>& m);

}  // namespace schubfgl

#endif
