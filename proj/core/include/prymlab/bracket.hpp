#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "prymlab/mpoly.hpp"

namespace prymlab {

// Poisson brackets {c_i, c_j} of a coordinate system, as polynomials in the
// coordinates themselves (variable k of every entry is coordinate k).
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const MPoly& at(int i, int j) const { return t_[i][j]; }
  void set(int i, int j, MPoly p) { t_[i][j] = std::move(p); }

  // {f, g} = sum_{ij} df/dc_i dg/dc_j {c_i, c_j}
  MPoly bracket(const MPoly& f, const MPoly& g) const;
  // X_i = {c_i, H}
  std::vector<MPoly> hamiltonian_field(const MPoly& H) const;

  bool antisymmetric() const;
  // First triple (i,j,k) for which {{c_i,c_j},c_k} + cyclic is not identically 0.
  std::optional<std::array<int, 3>> jacobi_failure() const;
  bool jacobi() const { return antisymmetric() && !jacobi_failure(); }
  // Coordinates j with {f, c_j} != 0. Empty means f is a Casimir.
  std::vector<int> non_casimir_witnesses(const MPoly& f) const;

  std::vector<std::vector<Rational>> evaluate(const std::vector<Rational>& point) const;
  int rank_at(const std::vector<Rational>& point) const;

  BracketTable& operator+=(const BracketTable& o);
  friend BracketTable operator+(BracketTable a, const BracketTable& b) { return a += b; }
  friend BracketTable operator*(const Rational& s, BracketTable a);
  friend bool operator==(const BracketTable& a, const BracketTable& b) {
    return a.names_ == b.names_ && a.t_ == b.t_;
  }

  void to_json(nlohmann::json& j) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<MPoly>> t_;
};

int matrix_rank(std::vector<std::vector<Rational>> m);

}  // namespace prymlab
