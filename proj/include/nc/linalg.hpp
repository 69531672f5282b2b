// Exact dense linear algebra over rationals, backed by Eigen with a zero
// pivot threshold.
#pragma once

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>
#include <vector>

#include "nc/multiindex.hpp"
#include "nc/rational.hpp"

namespace nc {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline RatMatrix rows_from_exponents(const std::vector<Exponents>& rows, size_t cols) {
  RatMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Rational(rows[i][j]);
  return m;
}

inline Eigen::Index exact_rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::FullPivLU<RatMatrix> lu(m);
  lu.setThreshold(Rational(0));
  return lu.rank();
}

// Basis of the null space, as columns.  Empty when the kernel is trivial.
inline std::vector<std::vector<Rational>> exact_kernel(const RatMatrix& m) {
  std::vector<std::vector<Rational>> basis;
  if (m.cols() == 0) return basis;
  if (m.rows() == 0) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::vector<Rational> v(static_cast<size_t>(m.cols()), Rational(0));
      v[static_cast<size_t>(j)] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Eigen::FullPivLU<RatMatrix> lu(m);
  lu.setThreshold(Rational(0));
  RatMatrix k = lu.kernel();
  if (lu.dimensionOfKernel() == 0) return basis;
  for (Eigen::Index c = 0; c < k.cols(); ++c) {
    std::vector<Rational> v(static_cast<size_t>(m.cols()));
    for (Eigen::Index r = 0; r < m.cols(); ++r) v[static_cast<size_t>(r)] = k(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Clears denominators and divides by the entry gcd; sign left as-is.
inline Exponents integerize_primitive(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& q : v) {
    Integer d = denominator(q);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<Integer> w(v.size());
  Integer g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
    g = gcd(g, abs(w[i]));
  }
  Exponents out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Integer e = (g > 1) ? w[i] / g : w[i];
    out[i] = static_cast<std::int64_t>(e);
  }
  return out;
}

}  // namespace nc
