#ifndef SCHUBFGL_COEFF_HPP
#define SCHUBFGL_COEFF_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "schubfgl/errors.hpp"

namespace schubfgl {

using Rat = mpq_class;

std::string rat_to_string(const Rat& r);
Rat rat_parse(const std::string& s);

// Monomial in the coefficient symbols m1..m15.  b[k] is the exponent of m_k
// for k >= 1; b[0] caches the weighted degree sum(k * b[k]) so that raw
// memcmp gives the graded-lexicographic order used everywhere for canonical
// term output.  Symbols carry weight k because every series this engine
// manipulates is weighted-homogeneous when m_k is given degree -k; keeping
// the weighted degree first makes that structure visible in dumps.
struct Mono {
  static constexpr int max_sym = 15;
  std::array<std::uint8_t, 16> b{};

  static Mono one() { return Mono{}; }

  static Mono sym(int k) {
    if (k < 1 || k > max_sym) throw DomainError("coefficient symbol index out of range");
    Mono m;
    m.b[static_cast<std::size_t>(k)] = 1;
    m.b[0] = static_cast<std::uint8_t>(k);
    return m;
  }

  bool is_one() const { return b[0] == 0; }
  int wdeg() const { return b[0]; }

  int max_sym_used() const {
    for (int k = max_sym; k >= 1; --k)
      if (b[static_cast<std::size_t>(k)] != 0) return k;
    return 0;
  }

  friend Mono operator*(const Mono& x, const Mono& y) {
    Mono r;
    int deg = x.b[0] + y.b[0];
    if (deg > 255) throw DomainError("coefficient monomial degree overflow");
    r.b[0] = static_cast<std::uint8_t>(deg);
    for (std::size_t k = 1; k <= max_sym; ++k) {
      int e = x.b[k] + y.b[k];
      if (e > 255) throw DomainError("coefficient monomial exponent overflow");
      r.b[k] = static_cast<std::uint8_t>(e);
    }
    return r;
  }

  friend bool operator==(const Mono& x, const Mono& y) { return x.b == y.b; }
  friend bool operator<(const Mono& x, const Mono& y) {
    return std::memcmp(x.b.data(), y.b.data(), x.b.size()) < 0;
  }
};

// Sparse polynomial in m1..m15 with exact rational coefficients.  Invariant:
// terms sorted ascending by Mono order, no zero coefficients.  The constant
// polynomials double as the plain rational scalars of the additive and
// multiplicative specializations.
class Coeff {
 public:
  using Term = std::pair<Mono, Rat>;

  Coeff() = default;
  Coeff(long n) { if (n != 0) t_.emplace_back(Mono::one(), Rat(n)); }
  explicit Coeff(Rat r) {
    if (r != 0) t_.emplace_back(Mono::one(), std::move(r));
  }
  static Coeff sym(int k) {
    Coeff c;
    c.t_.emplace_back(Mono::sym(k), Rat(1));
    return c;
  }
  static Coeff term(Mono m, Rat r) {
    Coeff c;
    if (r != 0) c.t_.emplace_back(m, std::move(r));
    return c;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_rational() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  Rat rational_value() const {
    if (t_.empty()) return Rat(0);
    if (!is_rational()) throw DomainError("coefficient is not a plain rational");
    return t_[0].second;
  }
  const std::vector<Term>& terms() const { return t_; }
  int max_sym_used() const {
    int m = 0;
    for (const auto& [mono, r] : t_) m = std::max(m, mono.max_sym_used());
    return m;
  }

  Coeff operator-() const {
    Coeff r = *this;
    for (auto& [m, q] : r.t_) q = -q;
    return r;
  }
  friend Coeff operator+(const Coeff& a, const Coeff& b) { return combine(a, b, false); }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return combine(a, b, true); }
  Coeff& operator+=(const Coeff& o) { *this = *this + o; return *this; }
  Coeff& operator-=(const Coeff& o) { *this = *this - o; return *this; }
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  Coeff& operator*=(const Coeff& o) { *this = *this * o; return *this; }
  friend Coeff operator*(const Rat& a, const Coeff& b) {
    if (a == 0) return Coeff();
    Coeff r = b;
    for (auto& [m, q] : r.t_) q *= a;
    return r;
  }
  void div_rat(const Rat& a) {
    if (a == 0) throw DomainError("division of coefficient by zero rational");
    for (auto& [m, q] : t_) q /= a;
  }

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  // Substitutes rational values for the symbols; throws MissingSymbol for any
  // symbol that occurs but has no assignment.
  Rat eval(const std::map<int, Rat>& assign) const;

  // Canonical text form: "0", "p/q", or "+"-joined terms like "-3/2*m1^2*m3";
  // negative coefficients keep their sign inside the term.
  std::string to_string() const;
  static Coeff parse(const std::string& s);

 private:
  static Coeff combine(const Coeff& a, const Coeff& b, bool subtract);
  std::vector<Term> t_;
};

}  // namespace schubfgl

#endif
