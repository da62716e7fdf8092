#include "schubfgl/schubert.hpp"

#include <algorithm>

#include "schubfgl/errors.hpp"

namespace schubfgl {

namespace {

Series one_series(const Model& m) { return Series::scalar(2, m.prec(), 1); }

// Shorthand for the recurring edge classes of the rank-2 catalogue.
struct EdgeClasses {
  Series a1, a2, g, d, g2, d2;
  explicit EdgeClasses(const Model& m) {
    const RootDatum& rd = m.datum();
    Weight r1 = rd.simple_root(1), r2 = rd.simple_root(2);
    a1 = m.chern(-r1);
    a2 = m.chern(-r2);
    g = m.chern(-rd.act(rd.s(2), r1));
    d = m.chern(-rd.act(rd.s(1), r2));
    g2 = m.chern(-rd.act(rd.from_word({1, 2}), r1));
    d2 = m.chern(-rd.act(rd.from_word({2, 1}), r2));
  }
};

}  // namespace

Section point_class(const std::shared_ptr<const Model>& m) {
  Section s(m);
  s.set(m->datum().identity(), m->point_numerator());
  return s;
}

Section bott_samelson(const std::shared_ptr<const Model>& m, const std::vector<int>& word) {
  return demazure_word(word, point_class(m));
}

bool schubert_is_smooth(const RootDatum& rd, WeylElt w) {
  std::vector<std::vector<int>> singular;
  switch (rd.type()) {
    case RootDatum::Type::A2:
      return true;
    case RootDatum::Type::B2:
      singular = {{1, 2, 1}};
      break;
    case RootDatum::Type::G2:
      singular = {{1, 2, 1}, {1, 2, 1, 2}, {2, 1, 2, 1}, {1, 2, 1, 2, 1}, {2, 1, 2, 1, 2}};
      break;
    case RootDatum::Type::A1aff:
      throw Unsupported("no smoothness table for the affine type");
  }
  for (const auto& word : singular)
    if (w == rd.from_word(word)) return false;
  return true;
}

Section naive_class(const std::shared_ptr<const Model>& m, WeylElt w) {
  const RootDatum& rd = m->datum();
  if (!rd.finite())
    throw Unsupported("Schubert classes need the finite moment graph (y_{R^-} is an infinite product on affine types)");
  auto roots = rd.positive_roots();
  Section s(m);
  for (const auto& v : m->vertices()) {
    if (!rd.leq(v, w)) continue;
    Series val = one_series(*m);
    for (const auto& pr : roots)
      if (!rd.leq(rd.mul(v, pr.refl), w)) val = val * m->chern(-pr.root);
    s.set(v, std::move(val));
  }
  return s;
}

Series correction_factor_N(const Model& m) {
  const RootDatum& rd = m.datum();
  if (!rd.finite()) throw Unsupported("the correction factor is tabulated for finite types");
  Weight r1 = rd.simple_root(1), r2 = rd.simple_root(2);
  int j = -rd.pairing(r2, 1);
  Series one = one_series(m);
  Series sum(2, m.prec());
  for (int k = 1; k <= j - 1; ++k)
    sum += one - m.fgl().p_eval(m.chern(-r1), m.chern(-(k * r1))) * m.chern(-(k * r1));
  return one + (one - m.fgl().p_eval(m.chern(-r2), m.chern(-(j * r1))) * m.chern(-r2)) * sum;
}

Section schubert_class(const std::shared_ptr<const Model>& m, WeylElt w) {
  const RootDatum& rd = m->datum();
  if (!rd.finite())
    throw Unsupported("Schubert classes need the finite moment graph (y_{R^-} is an infinite product on affine types)");
  if (schubert_is_smooth(rd, w)) return naive_class(m, w);
  if (w == rd.from_word({1, 2, 1})) {
    Section s = naive_class(m, w);
    Series n = correction_factor_N(*m);
    Section out(m);
    for (const auto& [v, val] : s.values()) {
      bool locus = v == rd.identity() || v == rd.s(1);  // singular locus X_{s1}
      out.set(v, locus ? n * val : val);
    }
    return out;
  }
  throw Unsupported("no known moment-graph formula for the singular class [X_" + w.str() +
                    "] (outside the length-3 table)");
}

SchubertBasis::SchubertBasis(std::shared_ptr<const Model> m) : model_(std::move(m)) {
  for (const auto& w : model_->vertices()) {
    try {
      Section cls = schubert_class(model_, w);
      const RootDatum& rd = model_->datum();
      Series norm = one_series(*model_);
      for (const auto& pr : rd.positive_roots())
        if (!rd.is_root_negative(rd.act(w, pr.root))) norm = norm * model_->chern(-pr.root);
      entries_.push_back({w, std::move(cls), std::move(norm)});
    } catch (const Unsupported&) {
      missing_.push_back(w);
    }
  }
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const BasisEntry& a, const BasisEntry& b) {
                     return a.w.length() > b.w.length();
                   });
}

const BasisEntry* SchubertBasis::find(WeylElt w) const {
  for (const auto& e : entries_)
    if (e.w == w) return &e;
  return nullptr;
}

ExpansionResult expand_in_basis(const Section& s, const SchubertBasis& basis) {
  if (s.model_ptr() != basis.model_ptr())
    throw DomainError("section and basis live on different models");
  ExpansionResult out{{}, false, s};
  for (const auto& entry : basis.entries()) {
    auto it = out.residue.values().find(entry.w);
    if (it == out.residue.values().end() || it->second.is_zero()) continue;
    Series c(2, 0);
    try {
      c = it->second.div_exact(entry.normalization);
    } catch (const NotDivisible&) {
      out.residual = true;  // not in the span; leave the value for diagnostics
      continue;
    }
    Section sub(basis.model_ptr());
    for (const auto& [v, val] : entry.cls.values()) sub.set(v, Series::mul_sharp(c, val));
    out.residue = out.residue - sub;
    out.coeffs.emplace(entry.w, std::move(c));
  }
  if (!out.residue.is_zero()) out.residual = true;
  return out;
}

ExpansionResult schubert_product(const SchubertBasis& basis, WeylElt u, WeylElt v) {
  const BasisEntry* eu = basis.find(u);
  const BasisEntry* ev = basis.find(v);
  if (!eu) throw Unsupported("no Schubert class available for " + u.str());
  if (!ev) throw Unsupported("no Schubert class available for " + v.str());
  return expand_in_basis(eu->cls * ev->cls, basis);
}

ExpansionResult pieri_chevalley(const SchubertBasis& basis, Weight lam, WeylElt w) {
  const BasisEntry* ew = basis.find(w);
  if (!ew) throw Unsupported("no Schubert class available for " + w.str());
  return expand_in_basis(x_mult(lam, ew->cls), basis);
}

Section bs_minus_schubert(const std::shared_ptr<const Model>& m, int wordcase) {
  if (wordcase != 121 && wordcase != 212) throw DomainError("word case must be 121 or 212");
  const RootDatum& rd = m->datum();
  int i = wordcase == 121 ? 1 : 2, o = 3 - i;
  Weight ri = rd.simple_root(i), ro = rd.simple_root(o);
  std::vector<int> word = {i, o, i};
  Section diff = bott_samelson(m, word) - schubert_class(m, rd.from_word(word));
  // Closed form: (p(y_{a_i}, y_{-a_i}) - p(y_{-a_o}, y_{-c a_i})) / y_{-s_i a_o}
  // times [X_{s_i}], with c = -<a_o, a_i^vee>.
  int c = -rd.pairing(ro, i);
  Series pdiff = m->fgl().p_eval(m->chern(ri), m->chern(-ri)) -
                 m->fgl().p_eval(m->chern(-ro), m->chern(-(c * ri)));
  Series den = m->chern(-rd.act(rd.s(i), ro));
  Section xsi = schubert_class(m, rd.s(i));
  for (const auto& v : m->vertices()) {
    bool supp = v == rd.identity() || v == rd.s(i);
    auto it = diff.values().find(v);
    Series dv = it == diff.values().end() ? m->zero() : it->second;
    if (!supp) {
      if (!dv.is_zero())
        throw Error("Bott-Samelson minus Schubert is supported outside {e, s_i}");
      continue;
    }
    if (!localized_eq(Localized(dv), Localized(pdiff * xsi.at(v), {den})))
      throw Error("Bott-Samelson minus Schubert deviates from its closed form at " + v.str());
  }
  return diff;
}

std::map<WeylElt, Localized> closed_form_expansion_b2(const Section& f) {
  const Model& m = f.model();
  const RootDatum& rd = m.datum();
  if (rd.type() != RootDatum::Type::B2)
    throw DomainError("the eight-coefficient closed form is the B2 window pattern");
  EdgeClasses ec(m);
  Series t4 = m.chern(-rd.act(rd.from_word({1, 2, 1}), rd.simple_root(2)));
  Series n = correction_factor_N(m);
  WeylElt e = rd.identity(), s1 = rd.s(1), s2 = rd.s(2);
  WeylElt w12 = rd.from_word({1, 2}), w21 = rd.from_word({2, 1});
  WeylElt w121 = rd.from_word({1, 2, 1}), w212 = rd.from_word({2, 1, 2});
  WeylElt w0 = rd.longest();
  const Series &fe = f.at(e), &f1 = f.at(s1), &f2 = f.at(s2), &f12 = f.at(w12),
               &f21 = f.at(w21), &f121 = f.at(w121), &f212 = f.at(w212), &f0 = f.at(w0);
  std::map<WeylElt, Localized> out;
  out.emplace(w0, Localized(f0 * ec.a1 * ec.d * ec.g2 * t4));
  out.emplace(w121, Localized((f121 - f0) * ec.a1 * ec.d * ec.g2));
  out.emplace(w212, Localized((f212 - f0) * ec.a2 * ec.g * ec.d2));
  out.emplace(w12, Localized((f12 - f212) * ec.a2 * ec.g + (f0 - f121) * ec.d * ec.g2));
  out.emplace(w21, Localized((f21 - f121) * ec.a1 * ec.d + (f0 - f212) * ec.g * ec.d2));
  out.emplace(s1, Localized((f1 - f21) * ec.a1 * ec.a2 + (f212 - f12) * ec.g * ec.a2 +
                                (f0 - f121) * (n * ec.g2 * ec.a1 - ec.d * ec.g2 - ec.a1 * ec.a2),
                            {ec.a2}));
  out.emplace(s2, Localized((f2 - f12) * ec.a2 * ec.a1 + (f121 - f21) * ec.d * ec.a1 +
                                (f0 - f212) * (ec.d2 * ec.a2 - ec.g * ec.d2 - ec.a2 * ec.a1),
                            {ec.a1}));
  out.emplace(e, Localized(fe - f1 - f2 + f12 + f21 - f121 - f212 + f0));
  return out;
}

std::map<WeylElt, Localized> product_closed_form_small(const Section& g, WeylElt w) {
  const Model& m = g.model();
  const RootDatum& rd = m.datum();
  EdgeClasses ec(m);
  WeylElt e = rd.identity(), s1 = rd.s(1), s2 = rd.s(2);
  std::map<WeylElt, Localized> out;
  if (w.length() == 0) {
    out.emplace(e, Localized(g.at(e)));
    return out;
  }
  if (w.length() == 1) {
    const Series& ai = w.first() == 1 ? ec.a1 : ec.a2;
    out.emplace(w, Localized(g.at(w)));
    out.emplace(e, Localized(g.at(e) - g.at(w), {ai}));
    return out;
  }
  if (w.length() == 2 && w.first() == 1) {
    out.emplace(w, Localized(g.at(w)));
    out.emplace(s1, Localized(g.at(s1) - g.at(w), {ec.a2}));
    out.emplace(s2, Localized(g.at(s2) - g.at(w), {ec.g}));
    Localized ge = (Localized(g.at(e) - g.at(s1), {ec.a1}) -
                    Localized(g.at(s2) - g.at(w), {ec.g})) *
                   Localized(Series::scalar(2, m.prec(), 1), {ec.a2});
    out.emplace(e, ge);
    return out;
  }
  if (w.length() == 2 && w.first() == 2) {
    out.emplace(w, Localized(g.at(w)));
    out.emplace(s1, Localized(g.at(s1) - g.at(w), {ec.d}));
    out.emplace(s2, Localized(g.at(s2) - g.at(w), {ec.a1}));
    Localized ge = (Localized(g.at(e) - g.at(s2), {ec.a2}) -
                    Localized(g.at(s1) - g.at(w), {ec.d})) *
                   Localized(Series::scalar(2, m.prec(), 1), {ec.a1});
    out.emplace(e, ge);
    return out;
  }
  throw DomainError("closed-form product rules cover lengths <= 2");
}

}  // namespace schubfgl
