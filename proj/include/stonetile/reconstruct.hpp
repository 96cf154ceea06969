#pragma once

// Reconstruction of the integer inflation matrix from invariant data.
// Each eigenvector identity M*v = lambda*v over Q(tau) splits into two
// rational vector equations by decomposing in the basis {tau, 1}; with
// enough invariants the resulting matrix equation M*A = B pins M uniquely.

#include "stonetile/golden.hpp"
#include "stonetile/inflation.hpp"
#include "stonetile/tile_system.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stonetile {

struct EigenDatum {
  GoldenVector vector;  // nonzero
  GoldenNumber eigenvalue;
};

struct RationalMatrix {
  std::vector<std::vector<Rational>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }

  static RationalMatrix zero(std::size_t r, std::size_t c) {
    RationalMatrix m;
    m.rows.assign(r, std::vector<Rational>(c, Rational(0)));
    return m;
  }
};

// Each datum contributes two columns to A (the tau-parts and the rational
// parts of its vector) and two to B (the same parts of eigenvalue*vector).
// Per datum, all four columns are scaled by the common denominator so the
// constraint matrices come out integer whenever possible; the scaling does
// not affect the solved matrix.
inline std::pair<RationalMatrix, RationalMatrix> build_constraints(
    const std::vector<EigenDatum>& data) {
  if (data.empty()) throw std::invalid_argument("build_constraints: no data");
  std::size_t n = data[0].vector.size();
  for (const auto& datum : data) {
    if (datum.vector.size() != n)
      throw std::invalid_argument("build_constraints: vectors differ in length");
    bool all_zero = true;
    for (const auto& entry : datum.vector)
      if (!entry.is_zero()) all_zero = false;
    if (all_zero)
      throw std::invalid_argument("build_constraints: zero vector is not an eigenvector datum");
  }
  RationalMatrix a = RationalMatrix::zero(n, 2 * data.size());
  RationalMatrix b = RationalMatrix::zero(n, 2 * data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    const GoldenVector& v = data[k].vector;
    GoldenVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = data[k].eigenvalue * v[i];
    Integer denom(1);
    for (std::size_t i = 0; i < n; ++i)
      for (const Rational* part : {&v[i].gold(), &v[i].rat(), &w[i].gold(), &w[i].rat()})
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), part->get_den().get_mpz_t());
    Rational scale(denom);
    for (std::size_t i = 0; i < n; ++i) {
      a.rows[i][2 * k] = scale * v[i].gold();
      a.rows[i][2 * k + 1] = scale * v[i].rat();
      b.rows[i][2 * k] = scale * w[i].gold();
      b.rows[i][2 * k + 1] = scale * w[i].rat();
    }
  }
  return {std::move(a), std::move(b)};
}

enum class SolveStatus { unique, rank_deficient, inconsistent };

struct SolveReport {
  SolveStatus status = SolveStatus::rank_deficient;
  RationalMatrix matrix;     // valid when status == unique
  bool all_integer = false;  // warning flag, non-integer entries are kept exact
};

// Solves M*A = B for M by exact Gaussian elimination on the transposed
// system A^T M^T = B^T. Requires A to have full row rank; extra columns
// must be exactly consistent.
inline SolveReport solve_matrix(const RationalMatrix& a, const RationalMatrix& b) {
  std::size_t n = a.row_count();
  std::size_t cols = a.col_count();
  if (b.row_count() != n || b.col_count() != cols)
    throw std::invalid_argument("solve_matrix: A and B shapes differ");
  SolveReport report;

  // augmented rows of the transposed system: [A^T | B^T], cols x (n + n)
  std::vector<std::vector<Rational>> aug(cols, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      aug[c][i] = a.rows[i][c];
      aug[c][n + i] = b.rows[i][c];
    }

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < n && rank < cols; ++col) {
    std::size_t pivot = rank;
    while (pivot < cols && aug[pivot][col] == 0) ++pivot;
    if (pivot == cols) continue;
    std::swap(aug[rank], aug[pivot]);
    Rational inv = 1 / aug[rank][col];
    for (auto& entry : aug[rank]) entry *= inv;
    for (std::size_t r = 0; r < cols; ++r) {
      if (r == rank || aug[r][col] == 0) continue;
      Rational factor = aug[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= factor * aug[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  if (rank < n) {
    report.status = SolveStatus::rank_deficient;
    return report;
  }
  // leftover rows must be all zero on both sides
  for (std::size_t r = rank; r < cols; ++r)
    for (std::size_t j = 0; j < 2 * n; ++j)
      if (aug[r][j] != 0) {
        report.status = SolveStatus::inconsistent;
        return report;
      }

  report.status = SolveStatus::unique;
  report.matrix = RationalMatrix::zero(n, n);
  report.all_integer = true;
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      // row r of the reduced system gives M^T[pivot_cols[r]][i] = M[i][pivot_cols[r]]
      report.matrix.rows[i][pivot_cols[r]] = aug[r][n + i];
      if (aug[r][n + i].get_den() != 1) report.all_integer = false;
    }
  return report;
}

struct ReconstructionReport {
  SolveReport solve;
  bool matches_rules = false;
};

// Rebuilds the inflation matrix from the volume and Dehn invariants alone
// and compares against the matrix derived from the substitution rules.
// Requires volumes, Dehn data on exactly one angle class, and a nonzero
// Dehn coefficient vector.
inline ReconstructionReport reconstruct(const TileSystem& system) {
  if (!system.has_volumes())
    throw std::domain_error("reconstruct: system has no volume data");
  if (!system.has_dehn())
    throw std::domain_error("reconstruct: system has no Dehn data");
  std::vector<std::string> keys;
  for (const auto& tile : system.tiles())
    for (const auto& [key, coeff] : tile.dehn->terms())
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
  if (keys.size() != 1)
    throw std::domain_error(
        "reconstruct: need exactly one independent angle class, found " +
        std::to_string(keys.size()) +
        "; the constraint construction takes a single coefficient vector per invariant");

  std::vector<EigenDatum> data = {
      {volume_vector(system), system.factor().pow(system.dimension())},
      {dehn_vector(system, keys[0]), system.factor()},
  };
  auto [a, b] = build_constraints(data);
  ReconstructionReport report;
  report.solve = solve_matrix(a, b);
  if (report.solve.status == SolveStatus::unique) {
    InflationMatrix expected = build_matrix(system);
    report.matches_rules = true;
    for (std::size_t i = 0; i < expected.size(); ++i)
      for (std::size_t j = 0; j < expected.size(); ++j)
        if (report.solve.matrix.rows[i][j] != Rational(expected.entries[i][j]))
          report.matches_rules = false;
  }
  return report;
}

}  // namespace stonetile
