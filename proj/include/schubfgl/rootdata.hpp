#ifndef SCHUBFGL_ROOTDATA_HPP
#define SCHUBFGL_ROOTDATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "schubfgl/errors.hpp"

namespace schubfgl {

// Character-lattice element in the datum's basis: fundamental weights (w1, w2)
// for the finite types, simple roots (a1, a2) for the affine one.
struct Weight {
  int a = 0;
  int b = 0;
  friend Weight operator+(Weight x, Weight y) { return {x.a + y.a, x.b + y.b}; }
  friend Weight operator-(Weight x, Weight y) { return {x.a - y.a, x.b - y.b}; }
  Weight operator-() const { return {-a, -b}; }
  friend Weight operator*(int n, Weight x) { return {n * x.a, n * x.b}; }
  friend bool operator==(Weight x, Weight y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(Weight x, Weight y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
  bool is_zero() const { return a == 0 && b == 0; }
};

// Element of a rank-2 Coxeter group (dihedral, possibly infinite): determined
// by its length and the first letter of its unique reduced word — except the
// longest element of a finite group, which has two reduced words and is
// canonicalized to first = 1.  Group structure lives on RootDatum.
class WeylElt {
 public:
  WeylElt() = default;
  int length() const { return len_; }
  int first() const { return first_; }
  std::vector<int> word() const;
  std::string str() const;  // "e", "s1", "s2s1s2", ...
  friend bool operator==(WeylElt x, WeylElt y) {
    return x.len_ == y.len_ && x.first_ == y.first_;
  }
  friend bool operator!=(WeylElt x, WeylElt y) { return !(x == y); }
  friend bool operator<(WeylElt x, WeylElt y) {
    return x.len_ != y.len_ ? x.len_ < y.len_ : x.first_ < y.first_;
  }

 private:
  friend class RootDatum;
  WeylElt(int len, int first) : len_(len), first_(first) {}
  int len_ = 0;
  int first_ = 0;
};

class RootDatum {
 public:
  enum class Type { A2, B2, G2, A1aff };

  explicit RootDatum(Type t);
  static std::optional<Type> parse_type(const std::string& name);

  Type type() const { return type_; }
  std::string name() const;
  bool finite() const { return m_ != 0; }
  // Order of s1*s2 (3, 4, 6); 0 for the infinite dihedral group.
  int braid_order() const { return m_; }

  Weight simple_root(int i) const;
  int pairing(Weight lam, int i) const;  // <lam, alpha_i_vee>
  Weight reflect(int i, Weight lam) const;
  Weight act(WeylElt w, Weight lam) const;

  WeylElt identity() const { return WeylElt(); }
  WeylElt s(int i) const;
  WeylElt rmul(WeylElt w, int i) const;  // w * s_i
  WeylElt mul(WeylElt u, WeylElt v) const;
  WeylElt inv(WeylElt w) const;
  WeylElt from_word(const std::vector<int>& word) const;
  std::optional<WeylElt> parse_elt(const std::string& s) const;
  WeylElt longest() const;  // finite types only

  bool has_right_descent(WeylElt w, int i) const;
  bool has_left_descent(WeylElt w, int i) const;
  bool leq(WeylElt u, WeylElt w) const;  // Bruhat order

  // All elements for finite types; lengths <= window_len for the affine one,
  // ordered by (length, first letter).
  std::vector<WeylElt> window(int window_len) const;

  struct PosRoot {
    Weight root;
    WeylElt refl;
  };
  // Positive roots paired with their reflections; finite types return all of
  // them (max_refl_len ignored), the affine type those with reflection length
  // <= max_refl_len.
  std::vector<PosRoot> positive_roots(int max_refl_len = 0) const;

  // {alpha > 0 : w . alpha < 0}; size = length(w) for finite types.
  std::vector<Weight> inversions(WeylElt w) const;

  bool is_root_negative(Weight beta) const;

  // Weights print in simple-root coordinates when integral there ("-a1-2*a2"),
  // otherwise in the lattice basis ("w1-w2").
  std::string weight_str(Weight lam) const;
  std::optional<Weight> parse_weight(const std::string& s) const;

 private:
  WeylElt make(int len, int first) const;
  Type type_;
  int m_;  // braid order; 0 = infinite
  int j_;  // -<alpha2, alpha1_vee> for finite types
};

}  // namespace schubfgl

#endif
