#ifndef SCHUBFGL_SERIES_HPP
#define SCHUBFGL_SERIES_HPP

#include <array>
#include <string>
#include <vector>

#include "schubfgl/coeff.hpp"

namespace schubfgl {

using Expo = std::array<int, 3>;

inline int expo_deg(const Expo& e) { return e[0] + e[1] + e[2]; }

// Dense index layout for monomials y^e with total degree < prec in ngens <= 3
// generators, enumerated by total degree and lexicographically within each
// degree.  Shared immutable tables, cached per (ngens, prec).
struct SeriesLayout {
  int ngens = 0;
  int prec = 0;
  std::vector<Expo> expo;                 // index -> exponents
  std::vector<int> degree_start;          // degree d -> first index; size prec+1

  int size() const { return static_cast<int>(expo.size()); }
  int index(const Expo& e) const;         // -1 when deg >= prec
  static const SeriesLayout& get(int ngens, int prec);
};

// Truncated formal power series over Coeff: all monomials of total degree
// < prec() are known exactly; everything above is unknown (not zero).
// A zero series remembers the precision of the context that built it.
class Series {
 public:
  Series() : Series(1, 0) {}
  Series(int ngens, int prec);

  static Series scalar(int ngens, int prec, Coeff c);
  static Series scalar(int ngens, int prec, long n) { return scalar(ngens, prec, Coeff(n)); }
  static Series gen(int ngens, int prec, int i);    // the i-th generator, 0-based

  int ngens() const { return ngens_; }
  int prec() const { return prec_; }
  // Lowest total degree of a nonzero known coefficient; prec() for the zero series.
  int valuation() const;
  bool is_zero() const;                              // all known coefficients vanish

  const Coeff& coeff(const Expo& e) const;           // zero Coeff when deg >= prec
  void set_coeff(const Expo& e, Coeff c);            // DomainError when deg >= prec
  const SeriesLayout& layout() const { return *lay_; }
  const Coeff& at_index(int i) const { return c_[static_cast<std::size_t>(i)]; }

  Series truncated(int new_prec) const;              // new_prec <= prec
  int max_sym_used() const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  Series& operator+=(const Series& o) { *this = *this + o; return *this; }
  Series& operator-=(const Series& o) { *this = *this - o; return *this; }

  friend Series scale(const Coeff& c, const Series& a);

  // Documented product contract: prec = min(prec a, prec b).
  friend Series operator*(const Series& a, const Series& b);
  Series& operator*=(const Series& o) { *this = *this * o; return *this; }

  // Valuation-aware exact product: prec = min(prec_a + val_b, prec_b + val_a),
  // capped by the layout bound.  Every claimed coefficient is fully
  // determined: a term of degree d = da+db with da >= val_a, db >= val_b needs
  // da < prec_a (granted by db >= val_b, d < prec_a + val_b) and likewise for b.
  static Series mul_sharp(const Series& a, const Series& b);

  // Composition f(images...); every image needs zero constant term.  Result
  // precision: min(prec_f * vmin, min_i prec_i) with vmin = min valuation of
  // the images (truncated f-terms of degree >= prec_f only reach total degree
  // >= prec_f * vmin; an image's unknown tail first enters at its own prec).
  Series substitute(const std::vector<Series>& images) const;

  // Exact quotient q with q * g == *this; prec = min(prec f, prec g) - val(g).
  // Throws NotDivisible carrying the lowest dividend degree with no solution.
  Series div_exact(const Series& g) const;

  // Agreement of all coefficients below min(prec a, prec b).
  friend bool equal(const Series& a, const Series& b);

  // Substitutes rational values for all coefficient symbols.
  Series specialize(const std::map<int, Rat>& assign) const;

  std::string to_string(const std::vector<std::string>& gen_names) const;

 private:
  static Series mul_to_prec(const Series& a, const Series& b, int out_prec);
  int ngens_, prec_;
  const SeriesLayout* lay_;
  std::vector<Coeff> c_;
};

}  // namespace schubfgl

#endif
