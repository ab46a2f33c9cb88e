#include "prymlab/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "prymlab/error.hpp"

namespace prymlab {

LaurentSeries::LaurentSeries(int lo, std::vector<Rational> c, int prec) : lo_(lo), c_(std::move(c)), prec_(prec) {
  normalize();
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int e, int prec) { return LaurentSeries(e, {c}, prec); }

void LaurentSeries::normalize() {
  if (prec_ != kExact) {
    int keep = prec_ - lo_ + 1;
    if (keep < 0) keep = 0;
    if (static_cast<int>(c_.size()) > keep) c_.resize(keep);
  }
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  size_t k = 0;
  while (k < c_.size() && sgn(c_[k]) == 0) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    lo_ += static_cast<int>(k);
  }
  if (c_.empty()) lo_ = 0;
}

int LaurentSeries::valuation() const {
  if (c_.empty()) return prec_ == kExact ? kExact : prec_ + 1;
  return lo_;
}

Rational LaurentSeries::coef(int e) const {
  if (e > prec_) throw std::out_of_range("series coefficient t^" + std::to_string(e) + " beyond truncation");
  int k = e - lo_;
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

bool LaurentSeries::is_zero() const { return c_.empty(); }

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  int prec = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) {
    prec_ = prec;
    return *this;
  }
  int lo = c_.empty() ? o.lo_ : (o.c_.empty() ? lo_ : std::min(lo_, o.lo_));
  int hi = std::max(c_.empty() ? lo : lo_ + static_cast<int>(c_.size()) - 1,
                    o.c_.empty() ? lo : o.lo_ + static_cast<int>(o.c_.size()) - 1);
  hi = std::min(hi, prec);
  std::vector<Rational> r(hi >= lo ? hi - lo + 1 : 0);
  for (int e = lo; e <= hi; ++e) {
    int a = e - lo_, b = e - o.lo_;
    if (a >= 0 && a < static_cast<int>(c_.size())) r[e - lo] += c_[a];
    if (b >= 0 && b < static_cast<int>(o.c_.size())) r[e - lo] += o.c_[b];
  }
  lo_ = lo;
  c_ = std::move(r);
  prec_ = prec;
  normalize();
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  constexpr int X = LaurentSeries::kExact;
  if ((a.c_.empty() && a.exact()) || (b.c_.empty() && b.exact())) return LaurentSeries();
  int prec;
  if (a.exact() && b.exact()) {
    prec = X;
  } else {
    long pa = a.exact() ? X : static_cast<long>(a.prec_) + b.valuation();
    long pb = b.exact() ? X : static_cast<long>(b.prec_) + a.valuation();
    prec = static_cast<int>(std::min<long>({pa, pb, X}));
  }
  if (a.c_.empty() || b.c_.empty()) return LaurentSeries(0, {}, prec);
  int lo = a.lo_ + b.lo_;
  int hi = a.lo_ + static_cast<int>(a.c_.size()) - 1 + b.lo_ + static_cast<int>(b.c_.size()) - 1;
  hi = std::min(hi, prec);
  std::vector<Rational> r(hi >= lo ? hi - lo + 1 : 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      int e = a.lo_ + static_cast<int>(i) + b.lo_ + static_cast<int>(j);
      if (e > hi) break;
      r[e - lo] += a.c_[i] * b.c_[j];
    }
  }
  return LaurentSeries(lo, std::move(r), prec);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.prec_ == b.prec_ && a.lo_ == b.lo_ && a.c_ == b.c_;
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * (lo_ + static_cast<int>(i));
  return LaurentSeries(lo_ - 1, std::move(r), prec_ == kExact ? kExact : prec_ - 1);
}

LaurentSeries LaurentSeries::inverse() const {
  if (c_.empty()) throw InvariantViolation("series inverse", "no nonzero coefficient known");
  if (c_.size() == 1 && exact()) return LaurentSeries(-lo_, {Rational(1) / c_[0]}, kExact);
  if (exact()) throw InputError("inverse of an exact non-monomial series needs a truncation order");
  int v = lo_;
  int rel = prec_ - v;  // relative precision
  // b_0 = 1/a_0, b_k = -(1/a_0) sum_{j=1..k} a_j b_{k-j}
  std::vector<Rational> b(rel + 1);
  Rational inv0 = Rational(1) / c_[0];
  b[0] = inv0;
  for (int k = 1; k <= rel; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) s += c_[j] * b[k - j];
    b[k] = -inv0 * s;
  }
  return LaurentSeries(-v, std::move(b), -v + rel);
}

LaurentSeries LaurentSeries::truncated(int prec) const {
  LaurentSeries r = *this;
  r.prec_ = std::min(prec_, prec);
  r.normalize();
  return r;
}

std::string LaurentSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    int e = lo_ + static_cast<int>(i);
    os << c_[i].get_str();
    if (e != 0) os << "*" << var << "^" << e;
  }
  if (first) os << "0";
  if (!exact()) os << " + O(" << var << "^" << prec_ + 1 << ")";
  return os.str();
}

}  // namespace prymlab
