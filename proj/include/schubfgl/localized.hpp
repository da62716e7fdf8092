#ifndef SCHUBFGL_LOCALIZED_HPP
#define SCHUBFGL_LOCALIZED_HPP

#include <vector>

#include "schubfgl/series.hpp"

namespace schubfgl {

// Element of the localization of the series ring at the multiplicative set
// generated by series with zero constant term and nonzero linear term
// (Chern classes of nonzero weights and their Weyl translates).  Stored as
// numerator / product(denominators); no implicit cancellation, so values stay
// exact and comparisons go through cross-multiplication at sharp precision.
class Localized {
 public:
  explicit Localized(Series num) : num_(std::move(num)) {}
  Localized(Series num, std::vector<Series> den);

  const Series& num() const { return num_; }
  const std::vector<Series>& den() const { return den_; }

  Localized operator-() const { return Localized(-num_, den_); }
  friend Localized operator+(const Localized& a, const Localized& b);
  friend Localized operator-(const Localized& a, const Localized& b) { return a + (-b); }
  friend Localized operator*(const Localized& a, const Localized& b);

  // True series representative; NotDivisible when the element is not regular.
  Series to_series() const;

 private:
  Series num_;
  std::vector<Series> den_;
};

// Equality by cross-multiplication: num_a * prod(den_b) == num_b * prod(den_a)
// as truncated series, compared below the common precision reached by
// valuation-aware products.
bool localized_eq(const Localized& a, const Localized& b);

}  // namespace schubfgl

#endif
