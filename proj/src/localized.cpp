#include "schubfgl/localized.hpp"

#include <algorithm>

namespace schubfgl {

namespace {

Series product_sharp(const Series& start, const std::vector<Series>& factors) {
  Series acc = start;
  for (const auto& f : factors) acc = Series::mul_sharp(acc, f);
  return acc;
}

}  // namespace

Localized::Localized(Series num, std::vector<Series> den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& d : den_) {
    if (d.ngens() != num_.ngens()) throw DomainError("denominator generator mismatch");
    if (d.valuation() != 1)
      throw DomainError("localized denominators need zero constant and nonzero linear term");
  }
}

Localized operator+(const Localized& a, const Localized& b) {
  // Cancel the common multiset of denominator factors first; §7-style sums
  // share most factors and this keeps cross products small.
  std::vector<Series> common, only_a = a.den_, only_b;
  std::vector<bool> used(only_a.size(), false);
  for (const auto& d : b.den_) {
    bool matched = false;
    for (std::size_t i = 0; i < only_a.size(); ++i) {
      if (!used[i] && equal(only_a[i], d)) {
        used[i] = true;
        common.push_back(d);
        matched = true;
        break;
      }
    }
    if (!matched) only_b.push_back(d);
  }
  std::vector<Series> rest_a;
  for (std::size_t i = 0; i < only_a.size(); ++i)
    if (!used[i]) rest_a.push_back(only_a[i]);

  Series num = product_sharp(a.num(), only_b) + product_sharp(b.num(), rest_a);
  std::vector<Series> den = common;
  den.insert(den.end(), rest_a.begin(), rest_a.end());
  den.insert(den.end(), only_b.begin(), only_b.end());
  return Localized(std::move(num), std::move(den));
}

Localized operator*(const Localized& a, const Localized& b) {
  Series num = Series::mul_sharp(a.num(), b.num());
  std::vector<Series> den = a.den();
  den.insert(den.end(), b.den().begin(), b.den().end());
  return Localized(std::move(num), std::move(den));
}

Series Localized::to_series() const {
  // One division against the sharp denominator product: iterated division
  // would lose a degree of precision per factor against the raw factors.
  if (den_.empty()) return num_;
  Series prod = den_.front();
  for (std::size_t i = 1; i < den_.size(); ++i) prod = Series::mul_sharp(prod, den_[i]);
  return num_.div_exact(prod);
}

bool localized_eq(const Localized& a, const Localized& b) {
  Series lhs = product_sharp(a.num(), b.den());
  Series rhs = product_sharp(b.num(), a.den());
  return equal(lhs, rhs);
}

}  // namespace schubfgl
