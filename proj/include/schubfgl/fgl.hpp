#ifndef SCHUBFGL_FGL_HPP
#define SCHUBFGL_FGL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "schubfgl/series.hpp"

namespace schubfgl {

enum class FglKind { additive, multiplicative, universal };

std::optional<FglKind> parse_fgl_kind(const std::string& name);
std::string fgl_kind_name(FglKind k);

// A one-dimensional commutative formal group law F over the coefficient ring:
// Q for additive (F = x+y) and multiplicative (F = x+y-xy), and Q[m1..m_D]
// with D = order-1 for the universal law, built from log(x) = x + sum m_k
// x^{k+1} and its compositional inverse.  All series are truncated below
// `order`.  Construction verifies unit, commutativity, associativity and the
// defining identities of the inverse and p-series; it throws on any mismatch.
class Fgl {
 public:
  static std::shared_ptr<const Fgl> build(FglKind kind, int order);

  FglKind kind() const { return kind_; }
  int order() const { return order_; }
  int nsyms() const { return nsyms_; }

  const Series& sum() const { return F_; }          // F(x, y); 2 generators
  const Series& inverse() const { return inv_; }    // iota(x) with F(x, iota(x)) = 0
  // p(x, y) = (x + y - F(x, y)) / (xy), the symmetric series with
  // p = -sum a_ij x^{i-1} y^{j-1}.  Precision order-2 for the universal law;
  // the closed-form laws store their exact p (0 resp. 1) at full precision.
  const Series& pseries() const { return p_; }
  const Series& log() const;                        // universal only
  const Series& exp() const;

  Series n_series(int n) const;                     // [n](x), memoized

  // F(a, b) etc. for series arguments with zero constant term.
  Series formal_sum(const Series& a, const Series& b) const;
  Series formal_neg(const Series& a) const;
  Series p_eval(const Series& a, const Series& b) const;

  // Symbol assignments that carry the universal law onto this target kind.
  static std::map<int, Rat> specialization(FglKind target, int nsyms);

 private:
  Fgl() = default;
  void verify() const;
  FglKind kind_ = FglKind::additive;
  int order_ = 0;
  int nsyms_ = 0;
  Series F_, inv_, p_, log_, exp_;
  mutable std::map<int, Series> nser_;
  mutable std::unique_ptr<std::mutex> mu_;
};

}  // namespace schubfgl

#endif
