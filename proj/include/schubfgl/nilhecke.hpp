#ifndef SCHUBFGL_NILHECKE_HPP
#define SCHUBFGL_NILHECKE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "schubfgl/localized.hpp"
#include "schubfgl/momentgraph.hpp"

namespace schubfgl {

// Coefficient of a t_w term: num / prod_k x_{mu_k}, where num is a series in
// the generators x_{b1}, x_{b2} and the denominator factors are kept as
// weights so that the Weyl action is substitution on the recorded weights.
struct OpCoeff {
  Series num;
  std::vector<Weight> den;
};

// Materialized value num / prod chern(mu_k) for comparisons.
Localized materialize(const Model& m, const OpCoeff& c);

// Operator sum_w c_w t_w in normal form: coefficients to the left of t_w,
// finitely supported inside the model's window.  Multiplication pushes
// coefficients left through t's by (c_u t_u)(d_v t_v) = c_u (u d_v) t_{uv}.
class HeckeOp {
 public:
  explicit HeckeOp(std::shared_ptr<const Model> model) : model_(std::move(model)) {}

  static HeckeOp identity(std::shared_ptr<const Model> model);
  static HeckeOp t(std::shared_ptr<const Model> model, WeylElt w);
  // Left multiplication by f(x_{b1}, x_{b2}) as the coefficient of t_e.
  static HeckeOp scalar(std::shared_ptr<const Model> model, const Series& f);
  static HeckeOp x(std::shared_ptr<const Model> model, Weight lam);      // x_lam
  static HeckeOp x_inv(std::shared_ptr<const Model> model, Weight lam);  // 1/x_lam
  // A_i = (1 + t_{s_i}) 1/x_{-alpha_i} = 1/x_{-alpha_i} + (1/x_{alpha_i}) t_{s_i}.
  static HeckeOp a(std::shared_ptr<const Model> model, int i);

  const Model& model() const { return *model_; }
  const std::shared_ptr<const Model>& model_ptr() const { return model_; }
  const std::map<WeylElt, OpCoeff>& terms() const { return terms_; }
  void set_term(WeylElt w, OpCoeff c);  // drops exact zeros; WindowError outside
  Localized coeff(WeylElt w) const;     // materialized; zero when absent

  HeckeOp operator-() const;
  friend HeckeOp operator+(const HeckeOp& a, const HeckeOp& b);
  friend HeckeOp operator-(const HeckeOp& a, const HeckeOp& b) { return a + (-b); }
  friend HeckeOp operator*(const HeckeOp& a, const HeckeOp& b);

 private:
  std::shared_ptr<const Model> model_;
  std::map<WeylElt, OpCoeff> terms_;
};

// Coefficientwise localized_eq over the union of supports.
bool op_eq(const HeckeOp& a, const HeckeOp& b);
// Lowest total degree at which some cross-multiplied coefficient difference is
// nonzero; -1 when the operators agree below the common precision.
int op_diff_degree(const HeckeOp& a, const HeckeOp& b);

// A_{i_1} A_{i_2} ... A_{i_k} expanded to normal form.
HeckeOp a_word_to_t(const std::shared_ptr<const Model>& m, const std::vector<int>& word);

enum class CoeffSide { left, right };

struct AWordTerm {
  std::vector<int> word;  // the reduced word of the A-product's Weyl element
  OpCoeff coeff;
};

// Expansion of t_{s_{i_1}} ... t_{s_{i_k}} over A-word products, coefficients
// on the chosen side, by triangular elimination against a_word_to_t leading
// terms.  The result is verified by reconstruction; a mismatch throws Error
// (it would indicate a bug, not bad input).
std::vector<AWordTerm> t_word_to_a(const std::shared_ptr<const Model>& m,
                                   const std::vector<int>& word, CoeffSide side);

// (sum_w c_w t_w) s at vertex z is sum_w eval_z(c_w) * s_{w^{-1} z}, where
// eval_z substitutes x_mu -> y_{z^{-1} mu}.  Divisions are per vertex and
// throw NotDivisible when the coefficient is not regular there.
Section op_apply(const HeckeOp& op, const Section& s);

struct IdentityCheck {
  std::string identity;
  bool pass;
  int precision;
  int first_fail_degree;  // -1 when the check passes
};

struct Section8Report {
  std::vector<IdentityCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Machine check of the operator-calculus catalogue on the given model: the
// presentations of A_i, the A_i^2 relations, t_{s_i} A_i and A_i t_{s_i}, the
// commutation rule f A_i = A_i (s_i f) + (f - s_i f)/x_{-alpha_i} on a probe
// set, the x-left and x-right expansions of t-words and t-expansions of
// A-words (length 4 when the braid order admits a reduced 4-letter word),
// the braid-order-3 deviation identity, t<->A round trips, and agreement of
// operator application with the section-level Demazure calculus.
Section8Report verify_section8(const std::shared_ptr<const Model>& m);

}  // namespace schubfgl

#endif
