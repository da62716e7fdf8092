#include "schubfgl/series.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>

namespace schubfgl {

namespace {
constexpr int kMaxPrec = 200;
inline int tri(int d) { return d * (d + 1) / 2; }
inline int tet(int d) { return d * (d + 1) * (d + 2) / 6; }
}  // namespace

int SeriesLayout::index(const Expo& e) const {
  int d = expo_deg(e);
  if (d >= prec) return -1;
  switch (ngens) {
    case 1: return e[0];
    case 2: return tri(d) + e[1];
    default: return tet(d) + tri(e[1] + e[2]) + e[2];
  }
}

const SeriesLayout& SeriesLayout::get(int ngens, int prec) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SeriesLayout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(ngens, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  if (ngens < 1 || ngens > 3) throw DomainError("series supports 1..3 generators");
  if (prec < 0 || prec > kMaxPrec) throw DomainError("series precision out of range");
  auto lay = std::make_unique<SeriesLayout>();
  lay->ngens = ngens;
  lay->prec = prec;
  lay->degree_start.resize(static_cast<std::size_t>(prec) + 1, 0);
  for (int d = 0; d < prec; ++d) {
    lay->degree_start[static_cast<std::size_t>(d)] = static_cast<int>(lay->expo.size());
    if (ngens == 1) {
      lay->expo.push_back({d, 0, 0});
    } else if (ngens == 2) {
      for (int e1 = 0; e1 <= d; ++e1) lay->expo.push_back({d - e1, e1, 0});
    } else {
      for (int r = 0; r <= d; ++r)
        for (int e2 = 0; e2 <= r; ++e2) lay->expo.push_back({d - r, r - e2, e2});
    }
  }
  lay->degree_start[static_cast<std::size_t>(prec)] = static_cast<int>(lay->expo.size());
  const SeriesLayout& ref = *lay;
  cache.emplace(key, std::move(lay));
  return ref;
}

Series::Series(int ngens, int prec)
    : ngens_(ngens), prec_(std::max(prec, 0)), lay_(&SeriesLayout::get(ngens, std::max(prec, 0))) {
  c_.resize(static_cast<std::size_t>(lay_->size()));
}

Series Series::scalar(int ngens, int prec, Coeff c) {
  Series s(ngens, prec);
  if (s.prec_ > 0) s.c_[0] = std::move(c);
  return s;
}

Series Series::gen(int ngens, int prec, int i) {
  if (i < 0 || i >= ngens) throw DomainError("generator index out of range");
  Series s(ngens, prec);
  Expo e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  int idx = s.lay_->index(e);
  if (idx < 0) throw DomainError("precision too small to hold a generator");
  s.c_[static_cast<std::size_t>(idx)] = Coeff(1);
  return s;
}

int Series::valuation() const {
  for (int d = 0; d < prec_; ++d) {
    int lo = lay_->degree_start[static_cast<std::size_t>(d)];
    int hi = lay_->degree_start[static_cast<std::size_t>(d) + 1];
    for (int i = lo; i < hi; ++i)
      if (!c_[static_cast<std::size_t>(i)].is_zero()) return d;
  }
  return prec_;
}

bool Series::is_zero() const { return valuation() == prec_; }

const Coeff& Series::coeff(const Expo& e) const {
  static const Coeff zero;
  int idx = lay_->index(e);
  if (idx < 0) return zero;
  return c_[static_cast<std::size_t>(idx)];
}

void Series::set_coeff(const Expo& e, Coeff c) {
  int idx = lay_->index(e);
  if (idx < 0) throw DomainError("coefficient index beyond precision");
  c_[static_cast<std::size_t>(idx)] = std::move(c);
}

Series Series::truncated(int new_prec) const {
  new_prec = std::max(new_prec, 0);
  if (new_prec >= prec_) {
    if (new_prec == prec_) return *this;
    throw DomainError("cannot raise series precision by truncation");
  }
  Series r(ngens_, new_prec);
  std::copy(c_.begin(), c_.begin() + r.lay_->size(), r.c_.begin());
  return r;
}

int Series::max_sym_used() const {
  int m = 0;
  for (const auto& c : c_) m = std::max(m, c.max_sym_used());
  return m;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {
Series add_sub(const Series& a, const Series& b, bool subtract) {
  if (a.ngens() != b.ngens()) throw DomainError("generator count mismatch");
  Series r(a.ngens(), std::min(a.prec(), b.prec()));
  const auto& lay = r.layout();
  for (int i = 0; i < lay.size(); ++i) {
    const Coeff& ca = a.at_index(i);
    const Coeff& cb = b.at_index(i);
    Coeff v = subtract ? ca - cb : ca + cb;
    if (!v.is_zero()) r.set_coeff(lay.expo[static_cast<std::size_t>(i)], std::move(v));
  }
  return r;
}
}  // namespace

Series operator+(const Series& a, const Series& b) { return add_sub(a, b, false); }
Series operator-(const Series& a, const Series& b) { return add_sub(a, b, true); }

Series scale(const Coeff& c, const Series& a) {
  Series r(a.ngens(), a.prec());
  if (c.is_zero()) return r;
  const auto& lay = r.layout();
  for (int i = 0; i < lay.size(); ++i) {
    const Coeff& ca = a.at_index(i);
    if (ca.is_zero()) continue;
    r.set_coeff(lay.expo[static_cast<std::size_t>(i)], c * ca);
  }
  return r;
}

Series Series::mul_to_prec(const Series& a, const Series& b, int out_prec) {
  if (a.ngens_ != b.ngens_) throw DomainError("generator count mismatch");
  Series r(a.ngens_, std::min(out_prec, kMaxPrec));
  const auto& la = *a.lay_;
  const auto& lb = *b.lay_;
  for (int ia = 0; ia < la.size(); ++ia) {
    const Coeff& ca = a.c_[static_cast<std::size_t>(ia)];
    if (ca.is_zero()) continue;
    const Expo& ea = la.expo[static_cast<std::size_t>(ia)];
    int da = expo_deg(ea);
    if (da >= r.prec_) break;
    for (int ib = 0; ib < lb.size(); ++ib) {
      const Expo& eb = lb.expo[static_cast<std::size_t>(ib)];
      if (da + expo_deg(eb) >= r.prec_) break;
      const Coeff& cb = b.c_[static_cast<std::size_t>(ib)];
      if (cb.is_zero()) continue;
      Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      int idx = r.lay_->index(e);
      r.c_[static_cast<std::size_t>(idx)] += ca * cb;
    }
  }
  return r;
}

Series operator*(const Series& a, const Series& b) {
  return Series::mul_to_prec(a, b, std::min(a.prec(), b.prec()));
}

Series Series::mul_sharp(const Series& a, const Series& b) {
  int out = std::min(a.prec_ + b.valuation(), b.prec_ + a.valuation());
  return mul_to_prec(a, b, out);
}

Series Series::substitute(const std::vector<Series>& images) const {
  if (static_cast<int>(images.size()) != ngens_)
    throw DomainError("substitute needs one image per generator");
  int tgt = images[0].ngens();
  int p_img = images[0].prec();
  int vmin = kMaxPrec;
  int win = kMaxPrec;
  for (const auto& im : images) {
    if (im.ngens() != tgt) throw DomainError("substitution images must share generators");
    p_img = std::min(p_img, im.prec());
    if (im.prec() > 0 && !im.coeff({0, 0, 0}).is_zero())
      throw DomainError("substitution image must have zero constant term");
    vmin = std::min(vmin, im.valuation());
    win = std::min(win, im.prec() - std::min(im.valuation(), im.prec()));
  }
  vmin = std::max(vmin, 1);
  // Degree-d parts of f land in degree >= d*vmin and their image monomials
  // are d-fold sharp products, good to their valuation plus the narrowest
  // image window; so when f has a high valuation the result stays known past
  // the raw image precision.  Both floors are sound, take the better one.
  long cap = static_cast<long>(prec_) * vmin;
  long floor_val = static_cast<long>(std::max(valuation(), 1)) * vmin + win;
  long floor_img = p_img;
  int p_out = static_cast<int>(
      std::min(std::min(cap, std::max(floor_val, floor_img)), static_cast<long>(kMaxPrec)));

  // Power tables per generator, all at output precision.
  std::vector<std::vector<Series>> pw(static_cast<std::size_t>(ngens_));
  std::vector<int> maxexp(static_cast<std::size_t>(ngens_), 0);
  for (int i = 0; i < lay_->size(); ++i) {
    if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
    const Expo& e = lay_->expo[static_cast<std::size_t>(i)];
    for (int g = 0; g < ngens_; ++g)
      maxexp[static_cast<std::size_t>(g)] =
          std::max(maxexp[static_cast<std::size_t>(g)], e[static_cast<std::size_t>(g)]);
  }
  for (int g = 0; g < ngens_; ++g) {
    auto& v = pw[static_cast<std::size_t>(g)];
    v.push_back(Series::scalar(tgt, p_out, 1));
    Series base = images[static_cast<std::size_t>(g)].prec() > p_out
                      ? images[static_cast<std::size_t>(g)].truncated(p_out)
                      : images[static_cast<std::size_t>(g)];
    for (int e = 1; e <= maxexp[static_cast<std::size_t>(g)]; ++e)
      v.push_back(mul_to_prec(v.back(), base, p_out));
  }

  Series acc(tgt, p_out);
  for (int i = 0; i < lay_->size(); ++i) {
    const Coeff& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Expo& e = lay_->expo[static_cast<std::size_t>(i)];
    Series term = scale(c, pw[0][static_cast<std::size_t>(e[0])]);
    for (int g = 1; g < ngens_; ++g)
      if (e[static_cast<std::size_t>(g)] > 0)
        term = mul_to_prec(term, pw[static_cast<std::size_t>(g)][static_cast<std::size_t>(
                                     e[static_cast<std::size_t>(g)])],
                           p_out);
    acc += term;
  }
  return acc;
}

namespace {

// Exact rational Gaussian elimination for Q-matrix rows with Coeff-valued
// right-hand sides.  Returns the unique solution, nullopt when inconsistent
// (sets *fail true); throws DomainError if the matrix lacks full column rank.
std::optional<std::vector<Coeff>> solve_rational(std::vector<std::vector<Rat>>& m,
                                                 std::vector<Coeff>& rhs) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_row(cols);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][c] != 0) { p = r; break; }
    if (p == rows) throw DomainError("degenerate lowest form in series division");
    std::swap(m[p], m[rank]);
    std::swap(rhs[p], rhs[rank]);
    Rat inv = m[rank][c];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / inv;
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
      rhs[r] -= f * rhs[rank];
    }
    pivot_row[c] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (!rhs[r].is_zero()) return std::nullopt;
  std::vector<Coeff> x(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Coeff v = rhs[pivot_row[c]];
    v.div_rat(m[pivot_row[c]][c]);
    x[c] = std::move(v);
  }
  return x;
}

}  // namespace

Series Series::div_exact(const Series& g) const {
  if (ngens_ != g.ngens_) throw DomainError("generator count mismatch");
  int k = g.valuation();
  if (k == g.prec_) throw DomainError("division by a series with no known nonzero term");

  const auto& glay = *g.lay_;
  int glo = glay.degree_start[static_cast<std::size_t>(k)];
  int ghi = glay.degree_start[static_cast<std::size_t>(k) + 1];
  for (int i = glo; i < ghi; ++i)
    if (!g.c_[static_cast<std::size_t>(i)].is_rational())
      throw DomainError("divisor lowest form must have rational coefficients");

  int common = std::min(prec_, g.prec_);
  int out_prec = std::max(common - k, 0);

  // Degrees of the dividend below val(g) must vanish outright.
  for (int d = 0; d < std::min(k, prec_); ++d) {
    int lo = lay_->degree_start[static_cast<std::size_t>(d)];
    int hi = lay_->degree_start[static_cast<std::size_t>(d) + 1];
    for (int i = lo; i < hi; ++i)
      if (!c_[static_cast<std::size_t>(i)].is_zero())
        throw NotDivisible(d, "series division failed");
  }

  Series q(ngens_, out_prec);
  Series r = prec_ > common ? truncated(common) : *this;
  const auto& rlay = *r.lay_;
  const auto& qlay = SeriesLayout::get(ngens_, std::max(out_prec, 1));
  for (int d = 0; d < out_prec; ++d) {
    int clo = qlay.degree_start[static_cast<std::size_t>(d)];
    int chi = qlay.degree_start[static_cast<std::size_t>(d) + 1];
    int rlo = rlay.degree_start[static_cast<std::size_t>(d + k)];
    int rhi = rlay.degree_start[static_cast<std::size_t>(d + k) + 1];
    std::size_t ncols = static_cast<std::size_t>(chi - clo);
    std::size_t nrows = static_cast<std::size_t>(rhi - rlo);
    std::vector<std::vector<Rat>> mat(nrows, std::vector<Rat>(ncols, Rat(0)));
    std::vector<Coeff> rhs(nrows);
    for (std::size_t row = 0; row < nrows; ++row) {
      const Expo& er = rlay.expo[static_cast<std::size_t>(rlo) + row];
      rhs[row] = r.c_[static_cast<std::size_t>(rlo) + static_cast<std::size_t>(row)];
      for (std::size_t col = 0; col < ncols; ++col) {
        const Expo& ec = qlay.expo[static_cast<std::size_t>(clo) + col];
        Expo diff{er[0] - ec[0], er[1] - ec[1], er[2] - ec[2]};
        if (diff[0] < 0 || diff[1] < 0 || diff[2] < 0) continue;
        int gi = glay.index(diff);
        const Coeff& gc = g.c_[static_cast<std::size_t>(gi)];
        if (!gc.is_zero()) mat[row][col] = gc.rational_value();
      }
    }
    auto sol = solve_rational(mat, rhs);
    if (!sol) throw NotDivisible(d + k, "series division failed");
    // Record the homogeneous quotient slice, then clear its contribution
    // r -= q_d * g on all still-relevant degrees.
    Series qd(ngens_, std::min(d + 1, out_prec));
    for (std::size_t col = 0; col < ncols; ++col) {
      const Expo& ec = qlay.expo[static_cast<std::size_t>(clo) + col];
      if (!(*sol)[col].is_zero()) {
        q.set_coeff(ec, (*sol)[col]);
        if (d < qd.prec()) qd.set_coeff(ec, (*sol)[col]);
      }
    }
    Series corr = mul_to_prec(qd, g, common);
    r -= corr;
  }
  return q;
}

bool equal(const Series& a, const Series& b) {
  if (a.ngens() != b.ngens()) throw DomainError("generator count mismatch");
  int common = std::min(a.prec(), b.prec());
  const auto& lay = SeriesLayout::get(a.ngens(), common);
  for (int i = 0; i < lay.size(); ++i) {
    const Expo& e = lay.expo[static_cast<std::size_t>(i)];
    if (!(a.coeff(e) == b.coeff(e))) return false;
  }
  return true;
}

Series Series::specialize(const std::map<int, Rat>& assign) const {
  Series r(ngens_, prec_);
  for (int i = 0; i < lay_->size(); ++i) {
    const Coeff& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rat v = c.eval(assign);
    if (v != 0) r.set_coeff(lay_->expo[static_cast<std::size_t>(i)], Coeff(v));
  }
  return r;
}

std::string Series::to_string(const std::vector<std::string>& gen_names) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < lay_->size(); ++i) {
    const Coeff& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Expo& e = lay_->expo[static_cast<std::size_t>(i)];
    std::vector<std::string> factors;
    if (expo_deg(e) == 0) {
      factors.push_back(c.to_string());
    } else {
      std::string cs = c.to_string();
      if (cs != "1") {
        bool composite = cs.find('+') != std::string::npos;
        factors.push_back(composite ? "(" + cs + ")" : cs);
      }
      for (int g = 0; g < ngens_; ++g) {
        int ee = e[static_cast<std::size_t>(g)];
        if (ee == 0) continue;
        std::string f = gen_names[static_cast<std::size_t>(g)];
        if (ee > 1) f += "^" + std::to_string(ee);
        factors.push_back(f);
      }
    }
    if (!first) os << " + ";
    first = false;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f) os << "*";
      os << factors[f];
    }
  }
  if (first) os << "0";
  os << " + O(deg " << prec_ << ")";
  return os.str();
}

}  // namespace schubfgl
