#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cuntz/fincorr.hpp"

namespace testutil {

using cuntz::fincorr::CMatrix;
using cuntz::fincorr::CVector;
using cuntz::fincorr::Complex;

inline CMatrix random_gaussian(std::mt19937& rng, int rows, int cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline CMatrix random_unitary(std::mt19937& rng, int n) {
  Eigen::HouseholderQR<CMatrix> qr(random_gaussian(rng, n, n));
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so columns are Haar distributed.
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

/// Valid tuple from slicing a random (N d) x (N d) unitary: the stacked
/// matrix S = [Z_0; ...; Z_{N-1}] is the first d columns, so
/// sum Z_l^dag Z_l = S^dag S = I.
inline cuntz::fincorr::MatrixTuple<Complex> random_tuple(std::mt19937& rng, int alphabet,
                                                         int dim) {
  CMatrix u = random_unitary(rng, alphabet * dim);
  CMatrix s = u.leftCols(dim);
  std::vector<CMatrix> ops;
  for (int l = 0; l < alphabet; ++l) ops.push_back(s.middleRows(l * dim, dim));
  return cuntz::fincorr::MatrixTuple<Complex>(alphabet, std::move(ops));
}

/// Conjugate a tuple by a unitary change of basis of M; preserves validity
/// and all classification invariants.
inline cuntz::fincorr::MatrixTuple<Complex> conjugate_tuple(
    const cuntz::fincorr::MatrixTuple<Complex>& t, const CMatrix& q) {
  std::vector<CMatrix> ops;
  for (const auto& z : t.ops) ops.push_back(q.adjoint() * z * q);
  return cuntz::fincorr::MatrixTuple<Complex>(t.alphabet, std::move(ops));
}

inline CVector random_unit_vector(std::mt19937& rng, int n) {
  CVector v = random_gaussian(rng, n, 1);
  return v / v.norm();
}

}  // namespace testutil
