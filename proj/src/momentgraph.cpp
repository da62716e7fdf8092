#include "schubfgl/momentgraph.hpp"

#include <algorithm>
#include <set>

#include "schubfgl/localized.hpp"

namespace schubfgl {

namespace {

// Zero as far as the series is known (its own precision, not the model's).
bool known_zero(const Series& s) { return s.is_zero(); }

void check_parab(const Parab& J) {
  if (J.size() > 2) throw DomainError("parabolic subsets live inside {1, 2}");
  for (size_t k = 0; k < J.size(); ++k) {
    if (J[k] != 1 && J[k] != 2) throw DomainError("parabolic subsets live inside {1, 2}");
    if (k > 0 && J[k] <= J[k - 1]) throw DomainError("parabolic subset must be increasing");
  }
}

std::vector<Weight> parab_pos_roots(const Model& m, const Parab& J) {
  const RootDatum& rd = m.datum();
  if (J.empty()) return {};
  if (J.size() == 1) return {rd.simple_root(J[0])};
  if (!rd.finite()) throw Unsupported("the full parabolic subgroup is infinite here");
  std::vector<Weight> out;
  for (const auto& pr : rd.positive_roots()) out.push_back(pr.root);
  return out;
}

}  // namespace

Model::Model(const RootDatum& datum, std::shared_ptr<const Fgl> fgl, int prec, int window_len)
    : datum_(datum),
      fgl_(std::move(fgl)),
      prec_(prec),
      window_len_(window_len),
      zero_(2, prec) {
  if (!fgl_) throw DomainError("model needs a formal group law");
  if (prec_ < 2) throw DomainError("model precision must be at least 2");
  if (fgl_->order() < prec_)
    throw DomainError("formal group law must be built to at least the model precision");
  if (!datum_.finite() && window_len_ < 1)
    throw DomainError("window length must be positive");
  vertices_ = datum_.window(window_len_);
  // Each unordered edge {w, w s_beta} appears once, oriented upward in length.
  // Affine: reflections up to length 2*window_len give every edge with at
  // least one end inside the window; longer ends are flagged as boundary.
  int max_refl = datum_.finite() ? 0 : 2 * window_len_;
  auto prs = datum_.positive_roots(max_refl);
  for (const auto& w : vertices_) {
    for (const auto& pr : prs) {
      WeylElt v = datum_.mul(w, pr.refl);
      if (v.length() < w.length()) continue;
      edges_.push_back({w, v, pr.root, !in_window(v)});
    }
  }
}

std::shared_ptr<const Model> Model::make(RootDatum::Type type, FglKind kind, int prec,
                                         int window_len) {
  return std::make_shared<Model>(RootDatum(type), Fgl::build(kind, prec), prec, window_len);
}

Series Model::chern(Weight lam) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = chern_.find(lam);
  if (it != chern_.end()) return it->second;
  Series y1 = Series::gen(2, prec_, 0);
  Series y2 = Series::gen(2, prec_, 1);
  Series a = fgl_->n_series(lam.a).substitute({y1});
  Series b = fgl_->n_series(lam.b).substitute({y2});
  Series val = fgl_->formal_sum(a, b);
  chern_.emplace(lam, val);
  return val;
}

Series Model::weyl_translate(WeylElt w, const Series& g) const {
  if (g.ngens() != 2) throw DomainError("weyl_translate expects a two-generator series");
  return g.substitute({chern(datum_.act(w, Weight{1, 0})), chern(datum_.act(w, Weight{0, 1}))});
}

Series Model::point_numerator() const {
  if (!datum_.finite())
    throw Unsupported("the point class needs finitely many positive roots");
  Series out = Series::scalar(2, prec_, 1);
  for (const auto& pr : datum_.positive_roots()) out = out * chern(-pr.root);
  return out;
}

Section::Section(std::shared_ptr<const Model> model, bool complete)
    : model_(std::move(model)), complete_(complete) {
  if (!model_) throw DomainError("section needs a model");
}

const Series& Section::at(WeylElt w) const {
  auto it = vals_.find(w);
  if (it != vals_.end()) return it->second;
  if (!complete_ && !model_->in_window(w))
    throw WindowError("value at " + w.str() + " is outside the stored window");
  return model_->zero();
}

void Section::set(WeylElt w, Series value) {
  if (value.ngens() != 2) throw DomainError("section values take two generators");
  if (!model_->in_window(w)) {
    if (known_zero(value)) return;
    throw WindowError("nonzero value at " + w.str() + " does not fit in the window");
  }
  // Keep zero values of sub-model precision: they still carry what is known.
  if (known_zero(value) && value.prec() >= model_->prec())
    vals_.erase(w);
  else
    vals_[w] = std::move(value);
}

bool Section::is_zero() const {
  for (const auto& [w, v] : vals_)
    if (!known_zero(v)) return false;
  return true;
}

Section Section::operator-() const {
  Section out(model_, complete_);
  for (const auto& [w, v] : vals_) out.set(w, -v);
  return out;
}

namespace {

void require_same_model(const Section& a, const Section& b) {
  if (a.model_ptr() != b.model_ptr())
    throw DomainError("sections live over different models");
}

template <typename F>
Section combine(const Section& a, const Section& b, F&& op) {
  require_same_model(a, b);
  Section out(a.model_ptr(), a.complete() && b.complete());
  std::vector<WeylElt> keys;
  for (const auto& [w, v] : a.values()) keys.push_back(w);
  for (const auto& [w, v] : b.values()) keys.push_back(w);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& w : keys) out.set(w, op(a.at(w), b.at(w)));
  return out;
}

}  // namespace

Section operator+(const Section& a, const Section& b) {
  return combine(a, b, [](const Series& x, const Series& y) { return x + y; });
}

Section operator-(const Section& a, const Section& b) {
  return combine(a, b, [](const Series& x, const Series& y) { return x - y; });
}

Section operator*(const Section& a, const Section& b) {
  return combine(a, b, [](const Series& x, const Series& y) { return x * y; });
}

Section Section::scaled(const Series& f) const {
  if (f.ngens() != 2) throw DomainError("section scalars take two generators");
  Section out(model_, complete_);
  for (const auto& [w, v] : vals_) out.set(w, f * v);
  return out;
}

Section Section::scaled(const Coeff& c) const {
  Section out(model_, complete_);
  for (const auto& [w, v] : vals_) out.set(w, scale(c, v));
  return out;
}

bool sections_equal(const Section& a, const Section& b) {
  require_same_model(a, b);
  std::vector<WeylElt> keys;
  for (const auto& [w, v] : a.values()) keys.push_back(w);
  for (const auto& [w, v] : b.values()) keys.push_back(w);
  for (const auto& w : keys)
    if (!equal(a.at(w), b.at(w))) return false;
  return true;
}

Section phi(const std::shared_ptr<const Model>& model, const Tensor& t) {
  const RootDatum& rd = model->datum();
  Section out(model, rd.finite());
  for (const auto& term : t)
    if (term.f.ngens() != 2 || term.g.ngens() != 2)
      throw DomainError("tensor factors take two generators");
  for (const auto& w : model->vertices()) {
    Series val(2, model->prec());
    WeylElt winv = rd.inv(w);
    for (const auto& term : t) val = val + term.f * model->weyl_translate(winv, term.g);
    out.set(w, val);
  }
  return out;
}

GkmReport gkm_check(const Section& s) {
  const Model& m = s.model();
  GkmReport rep;
  for (const auto& e : m.edges()) {
    EdgeCheck c{e, EdgeStatus::pass, -1};
    if (e.boundary && !s.complete()) {
      c.status = EdgeStatus::untested;
      rep.checks.push_back(c);
      continue;
    }
    Series diff = s.at(e.u) - s.at(e.v);
    try {
      diff.div_exact(m.chern(-e.root));
    } catch (const NotDivisible& nd) {
      c.status = EdgeStatus::fail;
      c.fail_degree = nd.degree;
    }
    rep.checks.push_back(c);
  }
  return rep;
}

Section t_action(WeylElt v, const Section& s) {
  const Model& m = s.model();
  const RootDatum& rd = m.datum();
  Section out(s.model_ptr(), s.complete());
  if (s.complete()) {
    for (const auto& [w, val] : s.values()) out.set(rd.mul(v, w), val);
  } else {
    WeylElt vinv = rd.inv(v);
    for (const auto& z : m.vertices()) out.set(z, s.at(rd.mul(vinv, z)));
  }
  return out;
}

Section x_mult(Weight lam, const Section& s) {
  const Model& m = s.model();
  const RootDatum& rd = m.datum();
  Section out(s.model_ptr(), s.complete());
  for (const auto& [w, val] : s.values())
    out.set(w, m.chern(rd.act(rd.inv(w), lam)) * val);
  return out;
}

Section demazure(int i, const Section& s) {
  const Model& m = s.model();
  const RootDatum& rd = m.datum();
  if (i != 1 && i != 2) throw DomainError("simple reflection index must be 1 or 2");
  Weight ai = rd.simple_root(i);
  WeylElt si = rd.s(i);
  if (!s.complete()) {
    for (const auto& z : m.vertices())
      if (!m.in_window(rd.mul(si, z)))
        throw WindowError("divided difference needs values beyond the window");
  } else if (!rd.finite()) {
    // The result at s_i w outside the window is s_w / y_{-w^{-1} alpha_i} != 0.
    for (const auto& [w, val] : s.values())
      if (!m.in_window(rd.mul(si, w)) && !known_zero(val))
        throw WindowError("divided-difference support escapes the window");
  }
  Section out(s.model_ptr(), s.complete());
  for (const auto& z : m.vertices()) {
    WeylElt sz = rd.mul(si, z);
    // unstored entries are exact zeros: the result there is exactly zero too
    if (!s.values().count(z) && !s.values().count(sz)) continue;
    const Series& a = s.at(z);
    const Series& b = s.at(sz);
    Weight beta = rd.act(rd.inv(z), ai);  // z^{-1} alpha_i
    // (A_i s)_z = (s_z - s_{s_i z}) / y_{-beta} + s_{s_i z} p(y_beta, y_{-beta})
    Series q = (a - b).div_exact(m.chern(-beta));
    Series val = q + b * m.fgl().p_eval(m.chern(beta), m.chern(-beta));
    out.set(z, val);
  }
  return out;
}

Section demazure_word(const std::vector<int>& word, const Section& s) {
  Section out = s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = demazure(*it, out);
  return out;
}

std::vector<WeylElt> parab_elements(const Model& m, const Parab& J) {
  check_parab(J);
  const RootDatum& rd = m.datum();
  if (J.empty()) return {rd.identity()};
  if (J.size() == 1) return {rd.identity(), rd.s(J[0])};
  if (!rd.finite()) throw Unsupported("the full parabolic subgroup is infinite here");
  return rd.window(0);
}

WeylElt coset_rep(const Model& m, const Parab& J, WeylElt w) {
  check_parab(J);
  const RootDatum& rd = m.datum();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : J) {
      if (rd.has_left_descent(w, i)) {
        w = rd.mul(rd.s(i), w);
        changed = true;
        break;
      }
    }
  }
  return w;
}

std::vector<WeylElt> coset_reps(const Model& m, const Parab& J) {
  check_parab(J);
  std::vector<WeylElt> out;
  for (const auto& w : m.vertices())
    if (coset_rep(m, J, w) == w) out.push_back(w);
  return out;
}

Section pushforward_pi(const Parab& J, const Section& s) {
  const Model& m = s.model();
  const RootDatum& rd = m.datum();
  auto wj = parab_elements(m, J);
  auto roots = parab_pos_roots(m, J);
  if (!s.complete()) {
    for (const auto& [w, val] : s.values())
      for (const auto& x : wj)
        if (!m.in_window(rd.mul(x, w)))
          throw WindowError("coset sum needs values beyond the window");
  }
  std::map<WeylElt, Localized> acc;
  for (const auto& w : m.vertices()) {
    const Series& val = s.at(w);
    if (known_zero(val) && val.prec() >= m.prec()) continue;
    WeylElt winv = rd.inv(w);
    std::vector<Series> den;
    for (const auto& alpha : roots) den.push_back(m.chern(-rd.act(winv, alpha)));
    Localized contrib(val, den);
    auto it = acc.find(coset_rep(m, J, w));
    if (it == acc.end())
      acc.emplace(coset_rep(m, J, w), contrib);
    else
      it->second = it->second + contrib;
  }
  Section out(s.model_ptr(), s.complete());
  for (const auto& [rep, loc] : acc) out.set(rep, loc.to_series());
  return out;
}

Section pullback_pi(const Parab& J, const Section& s) {
  const Model& m = s.model();
  const RootDatum& rd = m.datum();
  bool complete =
      s.complete() && (rd.finite() || J.empty() || s.is_zero());
  Section out(s.model_ptr(), complete);
  for (const auto& w : m.vertices()) out.set(w, s.at(coset_rep(m, J, w)));
  return out;
}

Section euler_pushforward(const std::vector<WeylElt>& fixed, const Section& s) {
  const Model& m = s.model();
  const RootDatum& rd = m.datum();
  if (!rd.finite())
    throw Unsupported("euler pushforward needs the finite moment graph (infinitely many edges leave a finite fixed-point set)");
  std::set<WeylElt> in(fixed.begin(), fixed.end());
  Section out(s.model_ptr(), s.complete());
  for (const auto& v : fixed) {
    Series val = s.at(v);
    for (const auto& pr : rd.positive_roots())
      if (!in.count(rd.mul(v, pr.refl))) val = val * m.chern(-pr.root);
    out.set(v, std::move(val));
  }
  return out;
}

Tensor iota_cog(const Model& m, const Parab& J, const Tensor& t) {
  auto wj = parab_elements(m, J);
  auto roots = parab_pos_roots(m, J);
  const RootDatum& rd = m.datum();
  Tensor out;
  for (const auto& term : t) {
    if (term.f.ngens() != 2 || term.g.ngens() != 2)
      throw DomainError("tensor factors take two generators");
    bool first = true;
    Localized acc(Series(2, m.prec()));
    for (const auto& x : wj) {
      std::vector<Series> den;
      for (const auto& alpha : roots) den.push_back(m.chern(-rd.act(x, alpha)));
      Localized contrib(m.weyl_translate(x, term.f), den);
      acc = first ? contrib : acc + contrib;
      first = false;
    }
    out.push_back({acc.to_series(), term.g});
  }
  return out;
}

}  // namespace schubfgl
