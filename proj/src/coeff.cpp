#include "schubfgl/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace schubfgl {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal '" + s + "'");
  r.canonicalize();
  return r;
}

Coeff Coeff::combine(const Coeff& a, const Coeff& b, bool subtract) {
  Coeff r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  auto ia = a.t_.begin(), ib = b.t_.begin();
  while (ia != a.t_.end() || ib != b.t_.end()) {
    bool take_a;
    if (ia == a.t_.end()) take_a = false;
    else if (ib == b.t_.end()) take_a = true;
    else if (ia->first == ib->first) {
      Rat q = subtract ? Rat(ia->second - ib->second) : Rat(ia->second + ib->second);
      if (q != 0) r.t_.emplace_back(ia->first, std::move(q));
      ++ia; ++ib;
      continue;
    } else take_a = ia->first < ib->first;
    if (take_a) { r.t_.push_back(*ia); ++ia; }
    else { r.t_.emplace_back(ib->first, subtract ? Rat(-ib->second) : ib->second); ++ib; }
  }
  return r;
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (a.is_zero() || b.is_zero()) return Coeff();
  std::vector<Coeff::Term> prod;
  prod.reserve(a.t_.size() * b.t_.size());
  for (const auto& [ma, qa] : a.t_)
    for (const auto& [mb, qb] : b.t_) prod.emplace_back(ma * mb, Rat(qa * qb));
  std::sort(prod.begin(), prod.end(),
            [](const Coeff::Term& x, const Coeff::Term& y) { return x.first < y.first; });
  Coeff r;
  r.t_.reserve(prod.size());
  for (auto& [m, q] : prod) {
    if (!r.t_.empty() && r.t_.back().first == m) {
      r.t_.back().second += q;
      if (r.t_.back().second == 0) r.t_.pop_back();
    } else if (q != 0) {
      r.t_.emplace_back(m, std::move(q));
    }
  }
  return r;
}

Rat Coeff::eval(const std::map<int, Rat>& assign) const {
  Rat acc(0);
  for (const auto& [m, q] : t_) {
    Rat v = q;
    for (int k = 1; k <= Mono::max_sym; ++k) {
      int e = m.b[static_cast<std::size_t>(k)];
      if (e == 0) continue;
      auto it = assign.find(k);
      if (it == assign.end()) throw MissingSymbol(k);
      for (int i = 0; i < e; ++i) v *= it->second;
    }
    acc += v;
  }
  return acc;
}

std::string Coeff::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, q] : t_) {
    if (!first) os << "+";
    first = false;
    if (m.is_one()) {
      os << rat_to_string(q);
      continue;
    }
    if (q == -1) os << "-";
    else if (q != 1) os << rat_to_string(q) << "*";
    bool firstsym = true;
    for (int k = 1; k <= Mono::max_sym; ++k) {
      int e = m.b[static_cast<std::size_t>(k)];
      if (e == 0) continue;
      if (!firstsym) os << "*";
      firstsym = false;
      os << "m" << k;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

// One factor of a term: "m3^2", "m1", or a rational literal.
void parse_factor(const std::string& f, Mono& mono, Rat& coef) {
  if (f.empty()) throw DomainError("empty factor in coefficient literal");
  if (f[0] == 'm') {
    auto caret = f.find('^');
    int k = std::stoi(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    int e = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
    if (e < 1) throw DomainError("bad exponent in coefficient literal");
    Mono p = Mono::sym(k);
    for (int i = 0; i < e; ++i) mono = mono * p;
  } else {
    coef *= rat_parse(f);
  }
}

}  // namespace

Coeff Coeff::parse(const std::string& s) {
  if (s == "0") return Coeff();
  Coeff acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    // Term boundary: '+' at top level ('-' stays inside its term's rational).
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    pos = end + 1;
    if (term.empty()) throw DomainError("empty term in coefficient literal");
    Mono mono = Mono::one();
    Rat coef(1);
    if (term[0] == '-' && term.size() > 1 && term[1] == 'm') {
      coef = -1;
      term = term.substr(1);
    }
    std::size_t fpos = 0;
    while (fpos <= term.size()) {
      std::size_t fend = term.find('*', fpos);
      if (fend == std::string::npos) fend = term.size();
      parse_factor(term.substr(fpos, fend - fpos), mono, coef);
      fpos = fend + 1;
      if (fend == term.size()) break;
    }
    acc += Coeff::term(mono, coef);
  }
  return acc;
}

}  // namespace schubfgl
