#ifndef SCHUBFGL_MOMENTGRAPH_HPP
#define SCHUBFGL_MOMENTGRAPH_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "schubfgl/fgl.hpp"
#include "schubfgl/rootdata.hpp"
#include "schubfgl/series.hpp"

namespace schubfgl {

// A root datum + formal group law + working precision, together with the
// moment graph on the (windowed) Weyl group: vertices w, edges {w, w s_beta}
// labeled by the positive root beta, tested against the class y_{-beta}.
// Owns the memoized first Chern classes y_lambda (series in y1 = y_{b1},
// y2 = y_{b2} for the lattice basis b1, b2).
class Model {
 public:
  Model(const RootDatum& datum, std::shared_ptr<const Fgl> fgl, int prec, int window_len = 6);
  static std::shared_ptr<const Model> make(RootDatum::Type type, FglKind kind, int prec,
                                           int window_len = 6);

  const RootDatum& datum() const { return datum_; }
  const Fgl& fgl() const { return *fgl_; }
  std::shared_ptr<const Fgl> fgl_ptr() const { return fgl_; }
  int prec() const { return prec_; }
  int window_len() const { return window_len_; }

  const std::vector<WeylElt>& vertices() const { return vertices_; }
  bool in_window(WeylElt w) const {
    return datum_.finite() || w.length() <= window_len_;
  }
  const Series& zero() const { return zero_; }

  Series chern(Weight lam) const;  // y_lambda, memoized, thread-safe

  // w-translate on the coefficient ring: g(y_{b1}, y_{b2}) -> g(y_{w b1}, y_{w b2}).
  Series weyl_translate(WeylElt w, const Series& g) const;

  // y_{R^-} = prod_{alpha > 0} y_{-alpha}; the point-class normalizer.
  Series point_numerator() const;

  struct Edge {
    WeylElt u, v;  // v = u s_root with l(v) > l(u)
    Weight root;
    bool boundary;  // affine only: v outside the window
  };
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  RootDatum datum_;
  std::shared_ptr<const Fgl> fgl_;
  int prec_;
  int window_len_;
  std::vector<WeylElt> vertices_;
  std::vector<Edge> edges_;
  Series zero_;
  mutable std::mutex mu_;
  mutable std::map<Weight, Series> chern_;
};

// Finitely supported assignment of coefficient-ring values to vertices.
// `complete()` distinguishes honest global objects (every unstored vertex is
// zero, including outside an affine window) from windowed representatives of
// infinitely supported sections (phi images and pullbacks on affine types),
// whose values outside the window exist but are not stored.
class Section {
 public:
  explicit Section(std::shared_ptr<const Model> model, bool complete = true);

  const Model& model() const { return *model_; }
  const std::shared_ptr<const Model>& model_ptr() const { return model_; }
  bool complete() const { return complete_; }
  void mark_incomplete() { complete_ = false; }

  // Value at w; zero for unstored window vertices and (for complete sections)
  // everything outside the window.  WindowError when the value is unknowable.
  const Series& at(WeylElt w) const;
  void set(WeylElt w, Series value);  // WindowError for nonzero values outside
  const std::map<WeylElt, Series>& values() const { return vals_; }
  bool is_zero() const;

  Section operator-() const;
  friend Section operator+(const Section& a, const Section& b);
  friend Section operator-(const Section& a, const Section& b);
  friend Section operator*(const Section& a, const Section& b);  // pointwise
  Section scaled(const Series& f) const;  // same factor at every vertex
  Section scaled(const Coeff& c) const;

 private:
  std::shared_ptr<const Model> model_;
  bool complete_;
  std::map<WeylElt, Series> vals_;
};

bool sections_equal(const Section& a, const Section& b);

// Element of S (x)_{S^W} S as a formal sum of simple tensors f (x) g.
struct TensorTerm {
  Series f, g;
};
using Tensor = std::vector<TensorTerm>;

// The section model of the tensor algebra: phi(f (x) g)_w = f * (w^{-1} g).
// Affine results are windowed representatives (marked incomplete).
Section phi(const std::shared_ptr<const Model>& model, const Tensor& t);

enum class EdgeStatus { pass, fail, untested };
struct EdgeCheck {
  Model::Edge edge;
  EdgeStatus status;
  int fail_degree;  // lowest degree at which divisibility failed (fail only)
};
struct GkmReport {
  std::vector<EdgeCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (c.status == EdgeStatus::fail) return false;
    return true;
  }
};
// Divisibility of g_u - g_{u s_beta} by y_{-beta} across every edge.
GkmReport gkm_check(const Section& s);

// (t_v s)_z = s_{v^{-1} z}
Section t_action(WeylElt v, const Section& s);
// (x_lam s)_w = y_{w^{-1} lam} s_w
Section x_mult(Weight lam, const Section& s);
// BGG/Demazure operator A_i = (1 + t_{s_i}) (1/x_{-alpha_i}) pointwise:
// (A_i s)_z = s_z / y_{-z^{-1} alpha_i} + s_{s_i z} / y_{z^{-1} alpha_i}.
Section demazure(int i, const Section& s);
// A_{i_1} ... A_{i_l} s (rightmost operator applied first).
Section demazure_word(const std::vector<int>& word, const Section& s);

// Parabolic subset of {1, 2}.
using Parab = std::vector<int>;
std::vector<WeylElt> parab_elements(const Model& m, const Parab& J);
// Minimal-length representative of the left coset W_J w.
WeylElt coset_rep(const Model& m, const Parab& J, WeylElt w);
std::vector<WeylElt> coset_reps(const Model& m, const Parab& J);

// (pi_J)_! = (sum_{v in W_J} t_v) (1/x_J), x_J = prod_{alpha in R_J^+} x_{-alpha}:
// the result is W_J-invariant and is stored on the minimal coset representatives.
Section pushforward_pi(const Parab& J, const Section& s);
// pi_J^*: constant on left cosets, reading the representative's value.
Section pullback_pi(const Parab& J, const Section& s);

// iota^J (f (x) g) = sum_{w in W_J} w(f / y_J) (x) g with y_J = prod_{alpha in
// R_J^+} y_{-alpha}; the sum collapses into the first factor.
Tensor iota_cog(const Model& m, const Parab& J, const Tensor& t);

// Localization pushforward along the inclusion of the induced subgraph on a
// fixed-point set P: the Euler ratio at v in P is the product of the ambient
// edge labels at v whose other endpoint leaves P, so
//   (f_! s)_v = s_v * prod_{beta > 0, v s_beta not in P} y_{-beta}
// and vertices outside P get zero.  Deliberately naive: the result need not
// satisfy the GKM condition (callers should run gkm_check).  Finite types only.
Section euler_pushforward(const std::vector<WeylElt>& fixed, const Section& s);

}  // namespace schubfgl

#endif
