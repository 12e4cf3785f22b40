#pragma once

#include <opdyn/types.hpp>

#include <span>
#include <vector>

namespace opdyn {

/// Default numerical tolerance for comparing row sums against 1.
inline constexpr double kClassifyTol = 1e-9;

/// Row sums of a dense matrix expression.
template <typename Derived>
Vector row_sums(const Eigen::MatrixBase<Derived>& m) {
  return m.rowwise().sum();
}

/// Infinity norm: largest absolute row sum. Zero for an empty matrix.
template <typename Derived>
double inf_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Which stochasticity notions a square matrix satisfies. The notions
/// overlap (the identity is general row-stochastic and sub-stochastic at
/// the same time), so each flag is reported independently:
///
///  - general_row_stochastic: every row sums to 1; entries may be negative.
///  - sub_stochastic: nonnegative entries, every row sum <= 1.
///  - super_stochastic: nonnegative entries, at least one row sum < 1
///    (those rows are the "deficit" rows); the remaining rows may sum to
///    1 or more.
///
/// deficit_rows lists the rows with sum < 1 - tol whenever entries are
/// nonnegative, independent of the flags.
struct StochClass {
  bool general_row_stochastic = false;
  bool sub_stochastic = false;
  bool super_stochastic = false;
  std::vector<Index> deficit_rows;

  bool none() const {
    return !(general_row_stochastic || sub_stochastic || super_stochastic);
  }
};

/// Classify a square matrix; throws std::invalid_argument if not square.
StochClass classify(const Matrix& m, double tol = kClassifyTol);

/// Ordered product S_q * ... * S_2 * S_1 for ms = [S_1, ..., S_q], i.e.
/// the matrix that maps a state at time 1 to the state after q updates.
/// Throws std::invalid_argument for an empty span or shape mismatches.
Matrix left_product_chain(std::span<const Matrix> ms);

/// Result of checking the geometric product bound for nonnegative
/// matrices: ||S_q ... S_1||_inf <= g^q where g is the largest row sum
/// appearing anywhere in the chain.
struct Lemma1Report {
  double g = 0.0;           // max row sum over all matrices in the chain
  double chain_norm = 0.0;  // inf-norm of the ordered product
  double bound = 0.0;       // g^q
  bool bound_holds = false;
};

/// Verify the product bound on a chain of nonnegative matrices. Throws
/// std::invalid_argument if any entry is below -tol or the span is empty.
Lemma1Report lemma1_bound_check(std::span<const Matrix> ms,
                                double tol = kClassifyTol);

}  // namespace opdyn
