// The rank-2 catalogue of closed-form Schubert products: every product of two
// classes of length <= 3, with coefficients written over the edge classes
//   a1 = y_{-alpha_1}, a2 = y_{-alpha_2}, g = y_{-s2 alpha_1}, d = y_{-s1 alpha_2},
//   g2 = y_{-s1s2 alpha_1}, d2 = y_{-s2s1 alpha_2}
// and the correction factor N.  Together with [X_u][X_v] = [X_v][X_u] and the
// longest class acting as 1, these determine all products when the window has
// length-4 top (B2).

#include "schubfgl/schubert.hpp"

namespace schubfgl {

namespace {

struct Tb {
  const Model& m;
  Series a1, a2, g, d, g2, d2, yR, N, one;

  explicit Tb(const Model& model) : m(model), one(Series::scalar(2, model.prec(), 1)) {
    const RootDatum& rd = m.datum();
    Weight r1 = rd.simple_root(1), r2 = rd.simple_root(2);
    a1 = m.chern(-r1);
    a2 = m.chern(-r2);
    g = m.chern(-rd.act(rd.s(2), r1));
    d = m.chern(-rd.act(rd.s(1), r2));
    g2 = m.chern(-rd.act(rd.from_word({1, 2}), r1));
    d2 = m.chern(-rd.act(rd.from_word({2, 1}), r2));
    yR = m.point_numerator();
    N = correction_factor_N(m);
  }

  Localized L(Series num, std::vector<Series> den) const {
    return Localized(std::move(num), std::move(den));
  }
};

using Rhs = std::vector<std::pair<std::vector<int>, Localized>>;

}  // namespace

std::vector<ProductCase> product_table(const std::shared_ptr<const Model>& m) {
  if (!m->datum().finite()) throw Unsupported("the product catalogue covers finite types");
  Tb t(*m);
  const Series &a1 = t.a1, &a2 = t.a2, &g = t.g, &d = t.d, &g2 = t.g2, &d2 = t.d2, &yR = t.yR,
               &N = t.N;
  std::vector<ProductCase> out;
  auto add = [&out](int id, std::vector<int> u, std::vector<int> v, Rhs rhs,
                    bool a2_degenerate = false) {
    out.push_back({id, std::move(u), std::move(v), std::move(rhs), a2_degenerate});
  };

  // [X_1] [X_*]
  add(1, {}, {}, {{{}, t.L(yR, {})}});
  add(2, {}, {1}, {{{}, t.L(yR, {a1})}});
  add(3, {}, {2}, {{{}, t.L(yR, {a2})}});
  add(4, {}, {1, 2}, {{{}, t.L(yR, {a1, a2})}});
  add(5, {}, {2, 1}, {{{}, t.L(yR, {a2, a1})}});
  add(6, {}, {1, 2, 1}, {{{}, t.L(N * yR, {a1, a2, d})}});
  add(7, {}, {2, 1, 2}, {{{}, t.L(yR, {a2, a1, g})}});

  // [X_{s1}] [X_*]
  add(8, {1}, {1}, {{{1}, t.L(yR, {a1})}});
  add(9, {1}, {1, 2}, {{{1}, t.L(yR, {a1, a2})}});
  add(10, {1}, {1, 2, 1}, {{{1}, t.L(N * yR, {a1, a2, d})}});
  add(11, {1}, {2}, {{{}, t.L(yR, {a1, a2})}});
  add(12, {1}, {2, 1},
      {{{1}, t.L(yR, {a1, d})}, {{}, t.L(yR * (d - a2), {a2, a1, d, a1})}});
  add(13, {1}, {2, 1, 2},
      {{{1}, t.L(yR, {a2, a1, d})}, {{}, t.L(yR * (d - g), {a1, a2, d, g, a1})}});

  // [X_{s2}] [X_*]
  add(14, {2}, {2}, {{{2}, t.L(yR, {a2})}});
  add(15, {2}, {2, 1}, {{{2}, t.L(yR, {a2, a1})}});
  add(16, {2}, {2, 1, 2}, {{{2}, t.L(yR, {a2, a1, g})}});
  add(17, {2}, {1, 2},
      {{{2}, t.L(yR, {a2, g})}, {{}, t.L(yR * (g - a1), {a1, a2, g, a2})}});
  add(18, {2}, {1, 2, 1},
      {{{2}, t.L(yR, {a1, a2, g})}, {{}, t.L(yR * (N * g - d), {a1, a2, d, g, a2})}});

  // [X_{s1s2}] [X_*]
  add(19, {1, 2}, {1, 2},
      {{{1, 2}, t.L(yR, {a2, g})}, {{1}, t.L(yR * (g - a1), {a2, a1, g, a2})}});
  add(20, {1, 2}, {2, 1},
      {{{1}, t.L(yR, {a1, a2, d})},
       {{2}, t.L(yR, {a1, a2, g})},
       {{}, t.L(yR * (g - a1) * (d - a2), {a1, a2, d, g, a2, a1}) - t.L(yR, {a1, a2, d, g})}});
  add(21, {1, 2}, {1, 2, 1},
      {{{1, 2}, t.L(yR, {a1, a2, g})}, {{1}, t.L(yR * (N * g - d), {a1, a2, d, g, a2})}});
  add(22, {1, 2}, {2, 1, 2},
      {{{1, 2}, t.L(yR, {a2, g, d2})},
       {{1}, t.L(yR * (g * d2 - a1 * d), {a1, a2, g, d, d2, a2})},
       {{2}, t.L(yR * (d2 - a1), {a1, a2, g, d2, g})},
       {{}, t.L(yR, {a2, a2, a1, a1, g}) - t.L(yR, {a2, a2, g, g, a1}) -
                t.L(yR, {a2, a2, a1, a1, d}) + t.L(yR, {a2, a2, g, g, d2})}});

  // [X_{s2s1}] [X_*]
  add(23, {2, 1}, {2, 1},
      {{{2, 1}, t.L(yR, {a1, d})}, {{2}, t.L(yR * (d - a2), {a1, a2, d, a1})}});
  add(24, {2, 1}, {1, 2, 1},
      {{{2, 1}, t.L(yR, {a1, d, g2})},
       {{1}, t.L(yR * N, {a1, d, d, a2}) - t.L(yR, {a1, d, d, g2})},
       {{2}, t.L(yR, {a1, a1, g, a2}) - t.L(yR, {a1, a1, g2, d})},
       {{}, t.L(yR * N, {a1, a1, a2, a2, d}) - t.L(yR * N, {a1, a1, a2, d, d}) -
                t.L(yR, {a1, a1, a2, a2, g}) + t.L(yR, {a1, a1, d, d, g2})}});
  add(25, {2, 1}, {2, 1, 2},
      {{{2, 1}, t.L(yR, {a2, a1, d})},
       {{2}, t.L(yR, {a2, a1, a1, g}) - t.L(yR, {a2, a1, a1, d})}});

  // [X_{s1s2s1}] [X_*] and [X_{s2s1s2}] [X_*].  The trailing coefficients of
  // cases 26-28 vanish under the additive law, so only the non-additive laws
  // see them: the last coefficient of 26 sits at s1 (and of 28 at s2), and 27
  // carries an extra identity coefficient that survives in K-theory.
  add(26, {1, 2, 1}, {1, 2, 1},
      {{{1, 2, 1}, t.L(yR, {a1, d, g2})},
       {{1, 2}, t.L(yR, {a1, a1, a2, g}) - t.L(yR, {a1, a1, d, g2})},
       {{1}, t.L(yR * N * N, {a1, a2, a2, d, d}) - t.L(yR * N, {a1, a2, d, d, g2}) -
                 t.L(yR, {a1, a2, a1, a2, g}) + t.L(yR, {a1, a2, a1, d, g2})}});
  add(27, {1, 2, 1}, {2, 1, 2},
      {{{1, 2}, t.L(yR, {a1, a2, g, d2})},
       {{2, 1}, t.L(yR, {a1, a2, d, g2})},
       {{1}, t.L(yR * N, {a1, a2, a2, d, d}) - t.L(yR, {a1, a2, a2, g, d2}) -
                 t.L(yR, {a1, a2, d, d, g2})},
       {{2}, t.L(yR, {a1, a2, a1, g, g}) - t.L(yR, {a1, a2, a1, d, g2}) -
                 t.L(yR, {a1, a2, g, g, d2})},
       {{}, t.L(yR * N, {a1, a1, a2, a2, g, d}) - t.L(yR * N, {a1, a1, a2, a2, d, d}) +
                t.L(yR, {a1, a1, a2, d, d, g2}) - t.L(yR, {a1, a1, a2, a2, g, g}) +
                t.L(yR, {a1, a2, a2, g, g, d2})}},
      /*a2_degenerate=*/true);
  add(28, {2, 1, 2}, {2, 1, 2},
      {{{2, 1, 2}, t.L(yR, {a2, g, d2})},
       {{2, 1}, t.L(yR, {a2, a2, a1, d}) - t.L(yR, {a2, a2, g, d2})},
       {{2}, t.L(yR, {a1, a2, a1, g, g}) - t.L(yR, {a1, a2, g, g, d2}) -
                 t.L(yR, {a1, a2, a1, a2, d}) + t.L(yR, {a1, a2, a2, g, d2})}});

  return out;
}

}  // namespace schubfgl
