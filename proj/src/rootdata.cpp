#include "schubfgl/rootdata.hpp"

#include <algorithm>
#include <sstream>

namespace schubfgl {

std::vector<int> WeylElt::word() const {
  std::vector<int> w;
  int letter = first_;
  for (int k = 0; k < len_; ++k) {
    w.push_back(letter);
    letter = 3 - letter;
  }
  return w;
}

std::string WeylElt::str() const {
  if (len_ == 0) return "e";
  std::string s;
  for (int i : word()) s += i == 1 ? "s1" : "s2";
  return s;
}

RootDatum::RootDatum(Type t) : type_(t) {
  switch (t) {
    case Type::A2: m_ = 3; j_ = 1; break;
    case Type::B2: m_ = 4; j_ = 2; break;
    case Type::G2: m_ = 6; j_ = 3; break;
    case Type::A1aff: m_ = 0; j_ = 0; break;
  }
}

std::optional<RootDatum::Type> RootDatum::parse_type(const std::string& name) {
  if (name == "A2") return Type::A2;
  if (name == "B2") return Type::B2;
  if (name == "G2") return Type::G2;
  if (name == "A1aff") return Type::A1aff;
  return std::nullopt;
}

std::string RootDatum::name() const {
  switch (type_) {
    case Type::A2: return "A2";
    case Type::B2: return "B2";
    case Type::G2: return "G2";
    default: return "A1aff";
  }
}

Weight RootDatum::simple_root(int i) const {
  if (i != 1 && i != 2) throw DomainError("simple root index must be 1 or 2");
  if (!finite()) return i == 1 ? Weight{1, 0} : Weight{0, 1};
  return i == 1 ? Weight{2, -1} : Weight{-j_, 2};
}

int RootDatum::pairing(Weight lam, int i) const {
  if (i != 1 && i != 2) throw DomainError("coroot index must be 1 or 2");
  if (!finite()) return i == 1 ? 2 * lam.a - 2 * lam.b : 2 * lam.b - 2 * lam.a;
  return i == 1 ? lam.a : lam.b;
}

Weight RootDatum::reflect(int i, Weight lam) const {
  return lam - pairing(lam, i) * simple_root(i);
}

Weight RootDatum::act(WeylElt w, Weight lam) const {
  auto word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) lam = reflect(*it, lam);
  return lam;
}

WeylElt RootDatum::make(int len, int first) const {
  if (len == 0) return WeylElt(0, 0);
  if (m_ > 0 && len > m_) throw DomainError("length exceeds the longest element");
  if (m_ > 0 && len == m_) return WeylElt(len, 1);
  return WeylElt(len, first);
}

WeylElt RootDatum::s(int i) const {
  if (i != 1 && i != 2) throw DomainError("generator index must be 1 or 2");
  return make(1, i);
}

WeylElt RootDatum::rmul(WeylElt w, int i) const {
  if (i != 1 && i != 2) throw DomainError("generator index must be 1 or 2");
  if (w.length() == 0) return make(1, i);
  if (m_ > 0 && w.length() == m_) {
    // Both reduced words are available; pick the one ending with i to shorten.
    int start = (m_ % 2 == 1) ? i : 3 - i;
    return make(m_ - 1, start);
  }
  int last = (w.length() % 2 == 1) ? w.first() : 3 - w.first();
  if (last == i) return make(w.length() - 1, w.length() == 1 ? 0 : w.first());
  return make(w.length() + 1, w.first());
}

WeylElt RootDatum::mul(WeylElt u, WeylElt v) const {
  WeylElt w = u;
  for (int i : v.word()) w = rmul(w, i);
  return w;
}

WeylElt RootDatum::inv(WeylElt w) const {
  if (w.length() == 0) return w;
  int last = (w.length() % 2 == 1) ? w.first() : 3 - w.first();
  return make(w.length(), last);
}

WeylElt RootDatum::from_word(const std::vector<int>& word) const {
  WeylElt w;
  for (int i : word) w = rmul(w, i);
  return w;
}

std::optional<WeylElt> RootDatum::parse_elt(const std::string& s) const {
  if (s == "e" || s == "1") return WeylElt();
  std::vector<int> word;
  std::size_t p = 0;
  while (p < s.size()) {
    if (s[p] == 's') ++p;
    if (p >= s.size() || (s[p] != '1' && s[p] != '2')) return std::nullopt;
    word.push_back(s[p] - '0');
    ++p;
  }
  return from_word(word);
}

WeylElt RootDatum::longest() const {
  if (!finite()) throw Unsupported("no longest element in an infinite Weyl group");
  return make(m_, 1);
}

bool RootDatum::has_right_descent(WeylElt w, int i) const {
  return rmul(w, i).length() < w.length();
}

bool RootDatum::has_left_descent(WeylElt w, int i) const {
  return mul(s(i), w).length() < w.length();
}

bool RootDatum::leq(WeylElt u, WeylElt w) const {
  // Dihedral Bruhat order: every element of smaller length is a subword of
  // every longer reduced word (alternating words contain both alternating
  // subwords of each shorter length).
  return u == w || u.length() < w.length();
}

std::vector<WeylElt> RootDatum::window(int window_len) const {
  std::vector<WeylElt> out;
  int maxlen = finite() ? m_ : window_len;
  if (!finite() && window_len < 0) throw DomainError("window length must be >= 0");
  out.push_back(WeylElt());
  for (int len = 1; len <= maxlen; ++len) {
    out.push_back(make(len, 1));
    if (!(m_ > 0 && len == m_)) out.push_back(make(len, 2));
  }
  return out;
}

std::vector<RootDatum::PosRoot> RootDatum::positive_roots(int max_refl_len) const {
  int maxlen = finite() ? m_ : max_refl_len;
  std::vector<PosRoot> out;
  for (int len = 1; len <= maxlen; len += 2) {
    for (int first : {1, 2}) {
      if (m_ > 0 && len == m_ && first == 2) continue;  // single longest element
      WeylElt r = make(len, first);
      auto word = r.word();
      int t = (len - 1) / 2;
      Weight beta = simple_root(word[static_cast<std::size_t>(t)]);
      for (int k = t - 1; k >= 0; --k) beta = reflect(word[static_cast<std::size_t>(k)], beta);
      out.push_back(PosRoot{beta, r});
    }
  }
  return out;
}

std::vector<Weight> RootDatum::inversions(WeylElt w) const {
  std::vector<Weight> out;
  for (const auto& pr : positive_roots(finite() ? 0 : 2 * w.length() + 1))
    if (is_root_negative(act(w, pr.root))) out.push_back(pr.root);
  return out;
}

bool RootDatum::is_root_negative(Weight beta) const {
  // Every root of these rank-2 systems has simple-root coordinates of one sign.
  if (!finite()) return beta.a < 0 || beta.b < 0;
  int det = 4 - j_;  // Cartan determinant: root coords are (2a+j*b, a+2b)/det
  int r = 2 * beta.a + j_ * beta.b;
  int s = beta.a + 2 * beta.b;
  if (r % det != 0 || s % det != 0) throw DomainError("weight is not a root");
  return r < 0 || s < 0;
}

namespace {
std::string combo_str(int c1, const std::string& n1, int c2, const std::string& n2) {
  std::ostringstream os;
  bool wrote = false;
  for (auto [c, n] : {std::make_pair(c1, n1), std::make_pair(c2, n2)}) {
    if (c == 0) continue;
    if (c > 0 && wrote) os << "+";
    if (c == -1) os << "-";
    else if (c != 1) os << c << "*";
    os << n;
    wrote = true;
  }
  if (!wrote) return "0";
  return os.str();
}
}  // namespace

std::string RootDatum::weight_str(Weight lam) const {
  if (!finite()) return combo_str(lam.a, "a1", lam.b, "a2");
  int det = 4 - j_;
  int r = 2 * lam.a + j_ * lam.b;
  int s = lam.a + 2 * lam.b;
  if (r % det == 0 && s % det == 0) return combo_str(r / det, "a1", s / det, "a2");
  return combo_str(lam.a, "w1", lam.b, "w2");
}

std::optional<Weight> RootDatum::parse_weight(const std::string& s) const {
  // Linear combinations of a1, a2, w1, w2 with integer coefficients,
  // e.g. "a1+2*a2", "-w1", "0".
  if (s == "0") return Weight{0, 0};
  Weight acc{0, 0};
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+') ++pos;
    else if (s[pos] == '-') { sign = -1; ++pos; }
    int mag = 1;
    std::size_t q = pos;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q > pos) {
      mag = std::stoi(s.substr(pos, q - pos));
      pos = q;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos + 1 >= s.size()) return std::nullopt;
    char basis = s[pos];
    char idx = s[pos + 1];
    pos += 2;
    if (idx != '1' && idx != '2') return std::nullopt;
    Weight unit;
    if (basis == 'a') {
      unit = simple_root(idx - '0');
    } else if (basis == 'w' && finite()) {
      unit = idx == '1' ? Weight{1, 0} : Weight{0, 1};
    } else {
      return std::nullopt;
    }
    acc = acc + sign * mag * unit;
  }
  return acc;
}

}  // namespace schubfgl
