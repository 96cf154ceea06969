#pragma once

// Inflation matrix machinery: building the matrix from substitution rules,
// iterating exact big-integer counts, verifying eigenvector identities over
// Q(tau), exact Perron frequencies via nullspace computation, and the
// integer characteristic polynomial.

#include "stonetile/golden.hpp"
#include "stonetile/tile_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stonetile {

using GoldenVector = std::vector<GoldenNumber>;

// Row i lists how many copies of each tile appear inside the inflated
// tile i; rows follow the system's tile ordering. With this convention
// the volume vector is a right eigenvector and counts evolve as row
// vectors multiplied from the right.
struct InflationMatrix {
  std::vector<std::string> order;
  std::vector<std::vector<Integer>> entries;  // square, nonnegative

  std::size_t size() const { return order.size(); }

  std::size_t index_of(const std::string& tile) const {
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order[i] == tile) return i;
    throw std::out_of_range("InflationMatrix: unknown tile '" + tile + "'");
  }
};

inline InflationMatrix build_matrix(const TileSystem& system) {
  InflationMatrix m;
  for (const auto& tile : system.tiles()) m.order.push_back(tile.name);
  m.entries.assign(system.size(), std::vector<Integer>(system.size(), 0));
  for (std::size_t i = 0; i < system.size(); ++i)
    for (const auto& [child, count] : system.rules()[i].children)
      m.entries[i][system.tile_index(child)] = count;
  return m;
}

// Counts after n inflation steps: the seed row vector multiplied by M
// n times. Exact big integers throughout.
inline CountVector matrix_power_counts(const InflationMatrix& m, const CountVector& seed,
                                       unsigned n) {
  if (seed.size() != m.size())
    throw std::invalid_argument("matrix_power_counts: seed size mismatch");
  CountVector counts = seed;
  for (unsigned step = 0; step < n; ++step) {
    CountVector next(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (counts[i] == 0) continue;
      for (std::size_t j = 0; j < m.size(); ++j)
        next[j] += counts[i] * m.entries[i][j];
    }
    counts = std::move(next);
  }
  return counts;
}

struct EigenReport {
  bool holds = false;
  GoldenVector residual;  // M*vec - eigenvalue*vec, componentwise
};

inline GoldenVector apply_matrix(const InflationMatrix& m, const GoldenVector& vec) {
  if (vec.size() != m.size()) throw std::invalid_argument("apply: vector size mismatch");
  GoldenVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out[i] += GoldenNumber(Rational(m.entries[i][j])) * vec[j];
  return out;
}

inline EigenReport verify_eigen(const InflationMatrix& m, const GoldenVector& vec,
                                const GoldenNumber& eigenvalue) {
  GoldenVector image = apply_matrix(m, vec);
  EigenReport report;
  report.holds = true;
  report.residual.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    report.residual[i] = image[i] - eigenvalue * vec[i];
    if (!report.residual[i].is_zero()) report.holds = false;
  }
  return report;
}

// Some power of M is strictly positive; exponents checked up to n^2.
inline bool is_primitive(const InflationMatrix& m) {
  std::size_t n = m.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = m.entries[i][j] > 0;
  auto all_positive = [&] {
    for (const auto& row : reach)
      for (bool cell : row)
        if (!cell) return false;
    return true;
  };
  std::vector<std::vector<bool>> base = reach;
  for (std::size_t power = 1; power <= n * n; ++power) {
    if (all_positive()) return true;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (reach[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (base[k][j]) next[i][j] = true;
    reach = std::move(next);
  }
  return all_positive();
}

// Exact nullspace of a square matrix over Q(tau) by Gaussian elimination
// with first-nonzero pivoting. Returns a basis.
inline std::vector<GoldenVector> nullspace(std::vector<GoldenVector> a) {
  std::size_t n = a.size();
  std::vector<std::optional<std::size_t>> pivot_row_of_col(n);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) continue;
    std::swap(a[rank], a[pivot]);
    GoldenNumber inv = a[rank][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[rank][j] = inv * a[rank][j];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      GoldenNumber factor = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[rank][j];
    }
    pivot_row_of_col[col] = rank;
    ++rank;
  }
  std::vector<GoldenVector> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (pivot_row_of_col[free_col]) continue;
    GoldenVector v(n);
    v[free_col] = GoldenNumber::one();
    for (std::size_t col = 0; col < n; ++col)
      if (pivot_row_of_col[col]) v[col] = -a[*pivot_row_of_col[col]][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Asymptotic tile frequencies: the unique positive left eigenvector of M
// for the Perron eigenvalue lambda = factor^dimension, normalized to sum 1.
// Computed as the exact nullspace of (M^T - lambda I) over Q(tau).
inline GoldenVector frequencies(const InflationMatrix& m, const GoldenNumber& lambda) {
  if (!is_primitive(m))
    throw std::domain_error("frequencies: inflation matrix is not primitive");
  std::size_t n = m.size();
  std::vector<GoldenVector> shifted(n, GoldenVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      shifted[i][j] = GoldenNumber(Rational(m.entries[j][i]));  // transpose
      if (i == j) shifted[i][j] -= lambda;
    }
  std::vector<GoldenVector> basis = nullspace(std::move(shifted));
  if (basis.size() != 1)
    throw std::domain_error("frequencies: eigenspace dimension is " +
                            std::to_string(basis.size()) + ", expected 1");
  GoldenVector f = basis[0];
  GoldenNumber total;
  for (const auto& entry : f) total += entry;
  if (total.is_zero()) throw std::domain_error("frequencies: eigenvector sums to zero");
  GoldenNumber scale = total.inverse();
  for (auto& entry : f) entry = scale * entry;
  for (const auto& entry : f)
    if (entry.sign() <= 0)
      throw std::domain_error("frequencies: normalized eigenvector is not positive");
  return f;
}

namespace detail {

// dense univariate integer polynomials, coefficients low to high
using IntPoly = std::vector<Integer>;

inline IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
  IntPoly out(p.size() + q.size() - 1, Integer(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

inline void poly_add_inplace(IntPoly& p, const IntPoly& q, int sign) {
  if (p.size() < q.size()) p.resize(q.size(), Integer(0));
  for (std::size_t i = 0; i < q.size(); ++i)
    if (sign > 0)
      p[i] += q[i];
    else
      p[i] -= q[i];
}

// determinant of a polynomial matrix by Laplace expansion on the first
// column; matrices here are tiny, clarity beats asymptotics
inline IntPoly poly_det(const std::vector<std::vector<IntPoly>>& a) {
  std::size_t n = a.size();
  if (n == 1) return a[0][0];
  IntPoly det{Integer(0)};
  for (std::size_t i = 0; i < n; ++i) {
    bool zero = true;
    for (const auto& coeff : a[i][0])
      if (coeff != 0) zero = false;
    if (zero) continue;
    std::vector<std::vector<IntPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(a[r].begin() + 1, a[r].end());
    }
    IntPoly contrib = poly_mul(a[i][0], poly_det(minor));
    poly_add_inplace(det, contrib, i % 2 == 0 ? 1 : -1);
  }
  return det;
}

}  // namespace detail

// Monic characteristic polynomial det(xI - M), integer coefficients low
// to high.
inline std::vector<Integer> char_poly(const InflationMatrix& m) {
  std::size_t n = m.size();
  std::vector<std::vector<detail::IntPoly>> a(n, std::vector<detail::IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        a[i][j] = {-m.entries[i][j], Integer(1)};
      else
        a[i][j] = {-m.entries[i][j]};
    }
  detail::IntPoly det = detail::poly_det(a);
  det.resize(n + 1, Integer(0));
  return det;
}

inline GoldenNumber eval_poly(const std::vector<Integer>& coeffs, const GoldenNumber& x) {
  GoldenNumber value;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    value = value * x + GoldenNumber(Rational(coeffs[i]));
  return value;
}

inline GoldenNumber total_volume(const TileSystem& system, const CountVector& counts) {
  if (!system.has_volumes())
    throw std::domain_error("total_volume: system has no volume data");
  if (counts.size() != system.size())
    throw std::invalid_argument("total_volume: count vector size mismatch");
  GoldenNumber total;
  for (std::size_t i = 0; i < system.size(); ++i)
    total += GoldenNumber(Rational(counts[i])) * *system.tiles()[i].volume;
  return total;
}

// per-tile volume column, requires volumes present
inline GoldenVector volume_vector(const TileSystem& system) {
  if (!system.has_volumes())
    throw std::domain_error("volume_vector: system has no volume data");
  GoldenVector v;
  for (const auto& tile : system.tiles()) v.push_back(*tile.volume);
  return v;
}

// per-tile Dehn coefficient column on one angle class
inline GoldenVector dehn_vector(const TileSystem& system, const std::string& angle_key) {
  if (!system.has_dehn())
    throw std::domain_error("dehn_vector: system has no Dehn data");
  GoldenVector d;
  for (const auto& tile : system.tiles()) d.push_back(tile.dehn->coefficient(angle_key));
  return d;
}

}  // namespace stonetile
