#include "schubfgl/fgl.hpp"

#include <mutex>

namespace schubfgl {

std::optional<FglKind> parse_fgl_kind(const std::string& name) {
  if (name == "additive") return FglKind::additive;
  if (name == "multiplicative") return FglKind::multiplicative;
  if (name == "universal") return FglKind::universal;
  return std::nullopt;
}

std::string fgl_kind_name(FglKind k) {
  switch (k) {
    case FglKind::additive: return "additive";
    case FglKind::multiplicative: return "multiplicative";
    default: return "universal";
  }
}

namespace {

Series x_of(int prec) { return Series::gen(1, prec, 0); }

// iota solves F(x, iota) = 0, i.e. iota = -x - G(x, iota) with G = F - x - y;
// G has valuation 2, so each pass settles at least one more degree.
Series solve_inverse(const Series& F, int order) {
  Series G = F - Series::gen(2, order, 0) - Series::gen(2, order, 1);
  Series x = x_of(order);
  Series iota = -x;
  for (int pass = 0; pass < order; ++pass) iota = -x - G.substitute({x, iota});
  return iota;
}

Series compute_p(const Series& F, int order) {
  Series x = Series::gen(2, order, 0);
  Series y = Series::gen(2, order, 1);
  return (x + y - F).div_exact(x * y);
}

}  // namespace

std::shared_ptr<const Fgl> Fgl::build(FglKind kind, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Fgl>> cache;
  if (order < 4) throw DomainError("formal group law order must be at least 4");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({static_cast<int>(kind), order});
    if (it != cache.end()) return it->second;
  }

  auto fgl = std::shared_ptr<Fgl>(new Fgl());
  fgl->kind_ = kind;
  fgl->order_ = order;
  fgl->mu_ = std::make_unique<std::mutex>();
  Series x2 = Series::gen(2, order, 0);
  Series y2 = Series::gen(2, order, 1);

  if (kind == FglKind::additive) {
    fgl->F_ = x2 + y2;
    fgl->inv_ = -x_of(order);
    fgl->p_ = Series(2, order);  // exactly 0
  } else if (kind == FglKind::multiplicative) {
    fgl->F_ = x2 + y2 - x2 * y2;
    fgl->inv_ = solve_inverse(fgl->F_, order);
    fgl->p_ = Series::scalar(2, order, 1);  // (x + y - F) / xy exactly
  } else {
    fgl->nsyms_ = order - 1;
    if (fgl->nsyms_ > Mono::max_sym)
      throw DomainError("universal law supports order at most " +
                        std::to_string(Mono::max_sym + 1));
    Series log = x_of(order);
    for (int k = 1; k <= fgl->nsyms_; ++k) {
      if (k + 1 >= order) break;
      log.set_coeff({k + 1, 0, 0}, Coeff::sym(k));
    }
    // exp = compositional inverse: exp = x - sum m_k exp^{k+1}
    Series exp = x_of(order);
    Series high = log - x_of(order);  // valuation 2
    for (int pass = 0; pass < order; ++pass) exp = x_of(order) - high.substitute({exp});
    fgl->log_ = log;
    fgl->exp_ = exp;
    fgl->F_ = exp.substitute({log.substitute({x2}) + log.substitute({y2})});
    fgl->inv_ = solve_inverse(fgl->F_, order);
    fgl->p_ = compute_p(fgl->F_, order);
  }

  fgl->verify();
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(static_cast<int>(kind), order),
                                      std::move(fgl));
  return it->second;
}

void Fgl::verify() const {
  Series x2 = Series::gen(2, order_, 0);
  Series y2 = Series::gen(2, order_, 1);
  Series zero2(2, order_);
  // unit: F(x, 0) = x
  if (!equal(F_.substitute({x2, zero2}), x2)) throw Error("formal group law unit axiom failed");
  // commutativity: F(x, y) = F(y, x)
  if (!equal(F_, F_.substitute({y2, x2}))) throw Error("formal group law is not commutative");
  // associativity: F(F(x, y), z) = F(x, F(y, z))
  Series x3 = Series::gen(3, order_, 0);
  Series y3 = Series::gen(3, order_, 1);
  Series z3 = Series::gen(3, order_, 2);
  Series Fxy = F_.substitute({x3, y3});
  Series Fyz = F_.substitute({y3, z3});
  if (!equal(F_.substitute({Fxy, z3}), F_.substitute({x3, Fyz})))
    throw Error("formal group law is not associative");
  // inverse: F(x, iota(x)) = 0
  Series x1 = x_of(order_);
  if (!F_.substitute({x1, inv_}).is_zero()) throw Error("formal inverse identity failed");
  // p-series: x y p(x, y) = x + y - F
  if (!equal(Series::mul_sharp(x2 * y2, p_), x2 + y2 - F_))
    throw Error("p-series defining identity failed");
  if (kind_ == FglKind::universal) {
    if (!equal(log_.substitute({exp_}), x1) || !equal(exp_.substitute({log_}), x1))
      throw Error("exp/log are not mutually inverse");
  }
}

const Series& Fgl::log() const {
  if (kind_ != FglKind::universal) throw Unsupported("log only exists for the universal law");
  return log_;
}

const Series& Fgl::exp() const {
  if (kind_ != FglKind::universal) throw Unsupported("exp only exists for the universal law");
  return exp_;
}

Series Fgl::n_series(int n) const {
  std::lock_guard<std::mutex> lock(*mu_);
  auto it = nser_.find(n);
  if (it != nser_.end()) return it->second;
  Series x = x_of(order_);
  nser_.try_emplace(0, Series(1, order_));
  int a = n < 0 ? -n : n;
  for (int k = 1; k <= a; ++k)
    if (!nser_.count(k)) nser_.emplace(k, k == 1 ? x : F_.substitute({nser_.at(k - 1), x}));
  if (n < 0) nser_.emplace(n, inv_.substitute({nser_.at(a)}));
  return nser_.at(n);
}

Series Fgl::formal_sum(const Series& a, const Series& b) const {
  return F_.substitute({a, b});
}

Series Fgl::formal_neg(const Series& a) const { return inv_.substitute({a}); }

Series Fgl::p_eval(const Series& a, const Series& b) const {
  return p_.substitute({a, b});
}

std::map<int, Rat> Fgl::specialization(FglKind target, int nsyms) {
  std::map<int, Rat> out;
  for (int k = 1; k <= nsyms; ++k) {
    if (target == FglKind::additive) out[k] = Rat(0);
    else if (target == FglKind::multiplicative) out[k] = Rat(1, k + 1);
    else throw DomainError("specialization target must be additive or multiplicative");
  }
  return out;
}

}  // namespace schubfgl
