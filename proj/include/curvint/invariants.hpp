#pragma once

#include <functional>
#include <span>

#include "curvint/fields.hpp"
#include "curvint/linalg.hpp"

namespace curvint {

/// Columns of d(phi_t) split by their t-dependence: H_j are the columns of
/// h, V_j = (a_1j, ..., a_nj, v_j).
struct ColumnSystem {
  Mat H;  // (n+1) x (n+1)
  Mat V;  // (n+1) x n

  int n() const { return static_cast<int>(V.cols()); }
};

ColumnSystem column_system(const ShapeData& data);

/// eta_0 .. eta_n, the coefficients of det(d phi_t) / sqrt(1 + t^2).
struct EtaVector {
  Vec values;
  // |eta_0 - det(h)| with det(h) taken by Eigen's direct determinant.
  double eta0_crosscheck = 0.0;

  int n() const { return static_cast<int>(values.size()) - 1; }
  double operator[](int k) const { return values[k]; }
};

/// Calls visit(columns_in_subset) for every k-subset of {0..n-1} in
/// lexicographic order; the span holds the subset's sorted indices.
void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& visit);

/// Sum over k-subsets S of det of the matrix with column j replaced by V_j
/// for j in S; the last column is always H_{n+1}.
double eta(int k, const ColumnSystem& cols);

EtaVector eta_all(const ColumnSystem& cols);

struct JacobianPhi {
  Mat matrix;
  double determinant = 0.0;
};

/// Columns H_j + t V_j (j <= n) and sqrt(1 + t^2) H_{n+1}.
JacobianPhi jacobian_phi(const ColumnSystem& cols, double t);

}  // namespace curvint
