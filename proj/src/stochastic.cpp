#include <opdyn/stochastic.hpp>

#include <cmath>
#include <stdexcept>

namespace opdyn {

StochClass classify(const Matrix& m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("classify: matrix must be square");

  StochClass out;
  if (m.rows() == 0) return out;

  const Vector sums = row_sums(m);
  const bool nonneg = (m.array() >= -tol).all();
  const bool all_one = (sums.array() - 1.0).abs().maxCoeff() <= tol;
  const bool all_le_one = (sums.array() <= 1.0 + tol).all();

  if (nonneg) {
    for (Index i = 0; i < sums.size(); ++i)
      if (sums[i] < 1.0 - tol) out.deficit_rows.push_back(i);
  }

  out.general_row_stochastic = all_one;
  out.sub_stochastic = nonneg && all_le_one;
  out.super_stochastic = nonneg && !out.deficit_rows.empty();
  return out;
}

Matrix left_product_chain(std::span<const Matrix> ms) {
  if (ms.empty())
    throw std::invalid_argument("left_product_chain: empty chain");
  for (const Matrix& m : ms) {
    if (m.rows() != m.cols() || m.rows() != ms.front().rows())
      throw std::invalid_argument(
          "left_product_chain: matrices must be square and conformable");
  }
  Matrix acc = ms.front();
  for (std::size_t t = 1; t < ms.size(); ++t) acc = ms[t] * acc;
  return acc;
}

Lemma1Report lemma1_bound_check(std::span<const Matrix> ms, double tol) {
  if (ms.empty())
    throw std::invalid_argument("lemma1_bound_check: empty chain");
  for (const Matrix& m : ms) {
    if ((m.array() < -tol).any())
      throw std::invalid_argument(
          "lemma1_bound_check: matrices must be nonnegative");
  }

  Lemma1Report rep;
  for (const Matrix& m : ms)
    rep.g = std::max(rep.g, row_sums(m).maxCoeff());
  rep.chain_norm = inf_norm(left_product_chain(ms));
  rep.bound = std::pow(rep.g, static_cast<double>(ms.size()));
  rep.bound_holds = rep.chain_norm <= rep.bound + tol;
  return rep;
}

}  // namespace opdyn
