#include "prymlab/bracket.hpp"

#include <nlohmann/json.hpp>

#include "prymlab/error.hpp"

namespace prymlab {

BracketTable::BracketTable(std::vector<std::string> names)
    : names_(std::move(names)), t_(names_.size(), std::vector<MPoly>(names_.size())) {}

MPoly BracketTable::bracket(const MPoly& f, const MPoly& g) const {
  int n = size();
  std::vector<MPoly> df(n), dg(n);
  for (int i = 0; i < n; ++i) {
    df[i] = f.derivative(i);
    dg[i] = g.derivative(i);
  }
  MPoly r;
  for (int i = 0; i < n; ++i) {
    if (df[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (dg[j].is_zero() || t_[i][j].is_zero()) continue;
      r += df[i] * dg[j] * t_[i][j];
    }
  }
  return r;
}

std::vector<MPoly> BracketTable::hamiltonian_field(const MPoly& H) const {
  int n = size();
  std::vector<MPoly> dH(n), out(n);
  for (int j = 0; j < n; ++j) dH[j] = H.derivative(j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!dH[j].is_zero() && !t_[i][j].is_zero()) out[i] += t_[i][j] * dH[j];
  return out;
}

bool BracketTable::antisymmetric() const {
  for (int i = 0; i < size(); ++i) {
    if (!t_[i][i].is_zero()) return false;
    for (int j = i + 1; j < size(); ++j)
      if (!(t_[i][j] + t_[j][i]).is_zero()) return false;
  }
  return true;
}

std::optional<std::array<int, 3>> BracketTable::jacobi_failure() const {
  int n = size();
  // d[i][j][l] = d{c_i,c_j}/dc_l
  std::vector<std::vector<std::vector<MPoly>>> d(n, std::vector<std::vector<MPoly>>(n, std::vector<MPoly>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!t_[i][j].is_zero())
        for (int l = 0; l < n; ++l) d[i][j][l] = t_[i][j].derivative(l);
  auto term = [&](int i, int j, int k) {
    // {{c_i,c_j},c_k}
    MPoly s;
    for (int l = 0; l < n; ++l)
      if (!d[i][j][l].is_zero() && !t_[l][k].is_zero()) s += d[i][j][l] * t_[l][k];
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        MPoly J = term(i, j, k) + term(j, k, i) + term(k, i, j);
        if (!J.is_zero()) return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

std::vector<int> BracketTable::non_casimir_witnesses(const MPoly& f) const {
  std::vector<int> bad;
  for (int j = 0; j < size(); ++j)
    if (!bracket(f, MPoly::var(j)).is_zero()) bad.push_back(j);
  return bad;
}

std::vector<std::vector<Rational>> BracketTable::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != size()) throw InputError("point has wrong number of coordinates");
  std::vector<std::vector<Rational>> m(size(), std::vector<Rational>(size()));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) m[i][j] = t_[i][j].eval(point);
  return m;
}

int BracketTable::rank_at(const std::vector<Rational>& point) const { return matrix_rank(evaluate(point)); }

BracketTable& BracketTable::operator+=(const BracketTable& o) {
  if (names_ != o.names_) throw InputError("adding bracket tables on different coordinates");
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) t_[i][j] += o.t_[i][j];
  return *this;
}

BracketTable operator*(const Rational& s, BracketTable a) {
  for (auto& row : a.t_)
    for (auto& e : row) e = MPoly(s) * e;
  return a;
}

void BracketTable::to_json(nlohmann::json& j) const {
  j = nlohmann::json::object();
  j["coordinates"] = names_;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < size(); ++k) row.push_back(t_[i][k].to_string(names_));
    rows.push_back(row);
  }
  j["entries"] = rows;
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace prymlab
