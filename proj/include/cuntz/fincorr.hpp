#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cuntz/classify.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/quadfield.hpp"
#include "cuntz/words.hpp"

namespace cuntz::fincorr {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Complex = std::complex<double>;
using CMatrix = Matrix<Complex>;
using CVector = Vector<Complex>;

/// Finitely correlated representation data: ops[l] is the matrix of S_l^*
/// restricted to a d-dimensional invariant subspace M, acting on coordinate
/// columns, so that sum_l ops[l]^dagger ops[l] = I. All analysis answers
/// refer to the representation this data dilates to (the minimal one in
/// which M sits as a cyclic S_i^*-invariant subspace).
///
/// Finite dimension is essential, not a convenience: a cyclic
/// S_i^*-invariant subspace of infinite dimension need not contain the
/// cycle atoms of its ambient representation, so no infinite-dimensional
/// analogue of this analysis exists. Finite dimension also bounds the atom
/// periods (p rotated copies of a period-p atom must fit inside M), which
/// is what makes the cycle search complete.
template <class Scalar>
struct MatrixTuple {
  int alphabet{};
  int dim{};
  std::vector<Matrix<Scalar>> ops;

  MatrixTuple(int alphabet_in, std::vector<Matrix<Scalar>> ops_in)
      : alphabet(alphabet_in), dim(0), ops(std::move(ops_in)) {
    if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if ((int)ops.size() != alphabet)
      throw std::invalid_argument("need one matrix per letter");
    dim = (int)ops[0].rows();
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    for (const auto& z : ops)
      if (z.rows() != dim || z.cols() != dim)
        throw std::invalid_argument("matrices must be square of equal dimension");
  }

  /// Generic (d = 1) data: S_i^* psi = z_i psi.
  static MatrixTuple generic(const std::vector<Scalar>& z) {
    std::vector<Matrix<Scalar>> ops;
    ops.reserve(z.size());
    for (const auto& v : z) {
      Matrix<Scalar> m(1, 1);
      m(0, 0) = v;
      ops.push_back(std::move(m));
    }
    return MatrixTuple((int)z.size(), std::move(ops));
  }
};

MatrixTuple<Complex> to_complex(const MatrixTuple<exact::QuadComplex>& t);

struct Validation {
  bool ok{};
  double defect{};  // max-norm of sum ops[l]^dagger ops[l] - I
};

/// Checks the normalization identity sum_l Z_l^dagger Z_l = I (exactly for
/// the exact scalar, within tol otherwise).
template <class Scalar>
Validation validate(const MatrixTuple<Scalar>& t, double tol = 1e-10) {
  Matrix<Scalar> sum = Matrix<Scalar>::Zero(t.dim, t.dim);
  for (const auto& z : t.ops) sum += z.adjoint() * z;
  sum -= Matrix<Scalar>::Identity(t.dim, t.dim);
  double defect = 0;
  bool exact_zero = true;
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) {
      defect = std::max(defect, exact::ScalarOps<Scalar>::abs_value(sum(i, j)));
      exact_zero = exact_zero && exact::ScalarOps<Scalar>::is_zero(sum(i, j), tol);
    }
  return {exact::ScalarOps<Scalar>::exact ? exact_zero : defect <= tol, defect};
}

/// W_I, the matrix of S_I^* on M. S_I^* applies S_{i_1}^* first, so the
/// single-letter matrices compose in reversed letter order:
/// W_{i_1 ... i_p} = Z_{i_p} ... Z_{i_1}. (The dilation oracle in the test
/// suite pins this convention.)
template <class Scalar>
Matrix<Scalar> word_operator(const MatrixTuple<Scalar>& t, const words::FiniteWord& word) {
  if (word.alphabet() != t.alphabet) throw std::invalid_argument("alphabet mismatch");
  Matrix<Scalar> w = Matrix<Scalar>::Identity(t.dim, t.dim);
  for (std::size_t k = 0; k < word.size(); ++k) w = t.ops[word[k]] * w;
  return w;
}

/// mu_M(C(I)) = W_I^dagger W_I: Hermitian, positive semidefinite, <= I, with
/// mu_M(C(I)) = sum_i mu_M(C(Ii)).
template <class Scalar>
Matrix<Scalar> cylinder_measure(const MatrixTuple<Scalar>& t, const words::FiniteWord& word) {
  Matrix<Scalar> w = word_operator(t, word);
  return w.adjoint() * w;
}

/// Product-measure mass of C(I) for generic data: prod_k |z_{i_k}|^2.
/// Requires sum |z_i|^2 = 1 (exactly, or within tol).
template <class Scalar>
auto generic_cylinder_measure(const std::vector<Scalar>& z, const words::FiniteWord& word,
                              double tol = 1e-10) {
  using Ops = exact::ScalarOps<Scalar>;
  if ((int)z.size() != word.alphabet()) throw std::invalid_argument("alphabet mismatch");
  auto norm = Ops::abs2(z[0]);
  for (std::size_t i = 1; i < z.size(); ++i) norm += Ops::abs2(z[i]);
  if (!Ops::is_one(norm, tol)) throw validation_error("generic vector is not normalized");
  auto mass = Ops::abs2(z[word.empty() ? 0 : word[0]]);
  if (word.empty()) return decltype(mass)(1);
  for (std::size_t k = 1; k < word.size(); ++k) mass = mass * Ops::abs2(z[word[k]]);
  return mass;
}

/// Compression to M of the Cantor-group unitary U(xi):
/// sum over |I| = |xi| of <I, xi> mu_M(C(I)), evaluated by the one-letter
/// recursion U(xi) = sum_l <l, xi_1> Z_l^dagger U(shift xi) Z_l.
CMatrix compressed_character_operator(const MatrixTuple<Complex>& t,
                                      const words::FiniteWord& character);

/// Orthonormal basis of the unitary part of a contraction W: the largest
/// subspace on which every power of W is isometric, computed by iterated
/// kernel refinement starting from ker(I - W^dagger W). Throws
/// validation_error if ||W|| > 1 + tol.
CMatrix unitary_part(const CMatrix& w, double tol = 1e-10);

/// An atom P(cycle)H of the dilation, expressed inside M: an orthonormal
/// basis of the subspace and the compression of the word operator W_I to it
/// (a unitary; S_I restricted to the atom is its adjoint).
struct CycleAtom {
  words::EventuallyPeriodicWord cycle;
  CMatrix basis;    // dim x m, orthonormal columns
  CMatrix unitary;  // m x m, basis^dagger W_I basis
  int dim() const { return (int)basis.cols(); }
};

/// All cycle atoms with period <= max_period (every rotation of every
/// primitive cycle word), sorted by cycle label. Pass max_period <= 0 for
/// the default d, which is complete: a period-p atom forces p orthogonal
/// rotated copies inside M, so p <= d.
std::vector<CycleAtom> find_cycle_atoms(const MatrixTuple<Complex>& t,
                                        int max_period = 0, double tol = 1e-10);

/// Atomic mass of v captured by orbit points with preperiod length exactly
/// k, for k = 0..cutoff: shells[k] = sum over canonical points a.(cycle) with
/// |a| = k of ||P_atom W_a v||^2. Nondecreasing cumulative sums, bounded by
/// ||v||^2.
std::vector<double> atomic_mass_shells(const MatrixTuple<Complex>& t,
                                       std::span<const CycleAtom> atoms,
                                       const CVector& v, int cutoff);

/// Total atomic mass of v up to the preperiod cutoff.
double atomic_mass(const MatrixTuple<Complex>& t, std::span<const CycleAtom> atoms,
                   const CVector& v, int cutoff);

enum class AtomicVerdict { Proven, Numerical, Refuted };

std::string to_string(AtomicVerdict v);

/// Full classification of the representation dilated from t.
struct ClassificationReport {
  std::vector<CycleAtom> atoms;
  int atom_span_dimension{};
  AtomicVerdict purely_atomic{};
  double mass_deficit{};   // d - total atomic mass at the cutoff
  double atomic_mass_total{};
  bool block_permutative{};
  bool permutative{};
  classify::AtomicRepDescriptor descriptor;
  int cutoff_used{};
  int max_period_used{};
};

/// Decide purely-atomicity and permutativity:
///  - Proven when the atoms span M and every Z_l maps each atom subspace
///    unitarily onto another atom subspace or to zero (block permutativity).
///  - Otherwise the atomic-mass certificate on a basis of M decides between
///    Numerical (mass reaches d - tol, or still growing at the cutoff) and
///    Refuted (no atoms at all, or mass stabilized strictly below d - tol).
/// Permutative additionally requires every cycle spectrum to split into
/// complete sets of roots of unity.
ClassificationReport classify_tuple(const MatrixTuple<Complex>& t, double tol = 1e-10,
                                    int cutoff = 8, int max_period = 0);

/// Basis of the space of intertwiners in compressed form: solutions of
/// sum_i Zb_i^dagger V Za_i = V with V of shape (b.dim x a.dim). Dimension 0
/// means the dilated representations are disjoint; self-dimension 1 means
/// irreducible.
std::vector<CMatrix> intertwiner_space(const MatrixTuple<Complex>& a,
                                       const MatrixTuple<Complex>& b,
                                       double tol = 1e-10);

/// Descriptor assembled from a complete atom list (used by classify_tuple
/// and by the filter-bank pipeline).
classify::AtomicRepDescriptor descriptor_from_atoms(int alphabet,
                                                    std::span<const CycleAtom> atoms);

}  // namespace cuntz::fincorr
