#include "prymlab/mpoly.hpp"

#include <sstream>

namespace prymlab {

namespace {

void trim(MPoly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

MPoly MPoly::var(int i) {
  MPoly p;
  Monomial m(i + 1, 0);
  m[i] = 1;
  p.terms_[m] = 1;
  return p;
}

Rational MPoly::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::num_vars() const {
  size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return static_cast<int>(n);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(m, -c);
    if (!fresh) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  MPoly::Monomial m;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      m.assign(std::max(ma.size(), mb.size()), 0);
      for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      Rational c = ca * cb;
      auto [it, fresh] = r.terms_.try_emplace(m, c);
      if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    if (var >= static_cast<int>(m.size()) || m[var] == 0) continue;
    Monomial d = m;
    Rational k = c * d[var];
    --d[var];
    trim(d);
    r.terms_[d] += k;
  }
  return r;
}

Rational MPoly::eval(const std::vector<Rational>& values) const { return evaluate<Rational>(values); }

MPoly MPoly::compose(const std::vector<MPoly>& values) const {
  MPoly acc;
  for (const auto& [mono, c] : terms_) {
    MPoly t(c);
    for (size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      MPoly v = i < values.size() ? values[i] : var(static_cast<int>(i));
      for (int e = 0; e < mono[i]; ++e) t = t * v;
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::rescale(const std::vector<int>& sign) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    int s = 1;
    for (size_t i = 0; i < m.size() && i < sign.size(); ++i)
      if (m[i] % 2 && sign[i] < 0) s = -s;
    r.terms_[m] = s > 0 ? c : Rational(-c);
  }
  return r;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest total degree first reads more naturally
  std::vector<std::pair<Monomial, Rational>> ts(terms_.rbegin(), terms_.rend());
  for (const auto& [m, c] : ts) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1 && !m.empty();
    if (!unit) os << a.get_str();
    bool need_star = !unit;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "c" + std::to_string(i));
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace prymlab
