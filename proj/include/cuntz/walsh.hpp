#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cuntz/classify.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/quadfield.hpp"
#include "cuntz/words.hpp"

namespace cuntz::walsh {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// N x N unitary with constant first row 1/sqrt N; rows define the
/// step-function filters m_i = sqrt N sum_j a_ij on [j/N, (j+1)/N).
template <class Scalar>
struct WalshMatrix {
  int alphabet{};
  Matrix<Scalar> coeffs;

  WalshMatrix(int alphabet_in, Matrix<Scalar> coeffs_in)
      : alphabet(alphabet_in), coeffs(std::move(coeffs_in)) {
    if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (coeffs.rows() != alphabet || coeffs.cols() != alphabet)
      throw std::invalid_argument("matrix must be N x N");
  }
};

/// Unitarity and the constant-first-row condition (exact on the exact path).
template <class Scalar>
bool walsh_matrix_valid(const WalshMatrix<Scalar>& w, double tol = 1e-12) {
  using Ops = exact::ScalarOps<Scalar>;
  Matrix<Scalar> g = w.coeffs * w.coeffs.adjoint() -
                     Matrix<Scalar>::Identity(w.alphabet, w.alphabet);
  for (int i = 0; i < w.alphabet; ++i)
    for (int j = 0; j < w.alphabet; ++j)
      if (!Ops::is_zero(g(i, j), tol)) return false;
  Scalar expected = Ops::inv_sqrt_of(w.alphabet);
  for (int j = 0; j < w.alphabet; ++j)
    if (!Ops::is_zero(w.coeffs(0, j) - expected, tol)) return false;
  return true;
}

/// A step function on [0, 1) constant on the N-adic cells of its level,
/// kept at the minimal level (no level's value list is constant on all
/// N-blocks). Values are exact for the exact scalar; all integrals are
/// finite sums.
template <class Scalar>
class StepFunction {
public:
  StepFunction(int branching, int level, std::vector<Scalar> values)
      : branching_(branching), level_(level), values_(std::move(values)) {
    if (branching_ < 2) throw std::invalid_argument("branching must be at least 2");
    std::size_t expected = 1;
    for (int i = 0; i < level_; ++i) expected *= branching_;
    if (values_.size() != expected)
      throw std::invalid_argument("value count must be branching^level");
    canonicalize();
  }
  static StepFunction constant(int branching, const Scalar& v) {
    return StepFunction(branching, 0, {v});
  }

  int branching() const { return branching_; }
  int level() const { return level_; }
  const std::vector<Scalar>& values() const { return values_; }

  /// Values refined to a coarser-than-or-equal-to target level.
  std::vector<Scalar> values_at_level(int target) const {
    if (target < level_) throw std::invalid_argument("cannot coarsen below level");
    std::size_t cells = 1;
    for (int i = 0; i < target; ++i) cells *= branching_;
    std::size_t block = cells / values_.size();
    std::vector<Scalar> out(cells);
    for (std::size_t j = 0; j < cells; ++j) out[j] = values_[j / block];
    return out;
  }

  friend StepFunction operator+(const StepFunction& f, const StepFunction& g) {
    return pointwise(f, g, [](const Scalar& a, const Scalar& b) { return a + b; });
  }
  friend StepFunction operator-(const StepFunction& f, const StepFunction& g) {
    return pointwise(f, g, [](const Scalar& a, const Scalar& b) { return a - b; });
  }
  friend StepFunction operator*(const StepFunction& f, const StepFunction& g) {
    return pointwise(f, g, [](const Scalar& a, const Scalar& b) { return a * b; });
  }
  friend StepFunction operator*(const Scalar& s, const StepFunction& f) {
    std::vector<Scalar> vals = f.values_;
    for (auto& v : vals) v = s * v;
    return StepFunction(f.branching_, f.level_, std::move(vals));
  }

  friend bool operator==(const StepFunction& f, const StepFunction& g) {
    return f.branching_ == g.branching_ && f.level_ == g.level_ &&
           f.values_ == g.values_;
  }
  friend bool operator!=(const StepFunction& f, const StepFunction& g) {
    return !(f == g);
  }

  bool approx_equal(const StepFunction& other, double tol) const {
    if (branching_ != other.branching_) return false;
    int common = std::max(level_, other.level_);
    auto a = values_at_level(common);
    auto b = other.values_at_level(common);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!exact::ScalarOps<Scalar>::is_zero(a[j] - b[j], tol)) return false;
    return true;
  }

  /// <f, g> = integral of f conj(g).
  friend Scalar inner_product(const StepFunction& f, const StepFunction& g) {
    using exact::conj;
    using std::conj;
    if (f.branching_ != g.branching_) throw std::invalid_argument("branching mismatch");
    int common = std::max(f.level_, g.level_);
    auto a = f.values_at_level(common);
    auto b = g.values_at_level(common);
    Scalar sum(0);
    for (std::size_t j = 0; j < a.size(); ++j) sum += a[j] * conj(b[j]);
    long long cells = (long long)a.size();
    return sum * exact::ScalarOps<Scalar>::from_ratio(1, cells);
  }

private:
  template <class F>
  static StepFunction pointwise(const StepFunction& f, const StepFunction& g, F&& op) {
    if (f.branching_ != g.branching_) throw std::invalid_argument("branching mismatch");
    int common = std::max(f.level_, g.level_);
    auto a = f.values_at_level(common);
    auto b = g.values_at_level(common);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = op(a[j], b[j]);
    return StepFunction(f.branching_, common, std::move(a));
  }

  void canonicalize() {
    while (level_ > 0) {
      std::size_t coarse = values_.size() / branching_;
      bool constant_blocks = true;
      for (std::size_t c = 0; c < coarse && constant_blocks; ++c)
        for (int r = 1; r < branching_ && constant_blocks; ++r)
          constant_blocks = (values_[c * branching_ + r] == values_[c * branching_]);
      if (!constant_blocks) break;
      std::vector<Scalar> reduced(coarse);
      for (std::size_t c = 0; c < coarse; ++c) reduced[c] = values_[c * branching_];
      values_ = std::move(reduced);
      --level_;
    }
  }

  int branching_;
  int level_;
  std::vector<Scalar> values_;
};

/// The filters m_i = sqrt N sum_j a_ij chi_{[j/N,(j+1)/N)}; m_0 is the
/// constant 1 because the first row is constant.
template <class Scalar>
std::vector<StepFunction<Scalar>> build_filters(const WalshMatrix<Scalar>& w,
                                                double tol = 1e-12) {
  if (!walsh_matrix_valid(w, tol))
    throw validation_error("matrix is not unitary with constant first row 1/sqrt N");
  Scalar root = exact::ScalarOps<Scalar>::sqrt_of(w.alphabet);
  std::vector<StepFunction<Scalar>> filters;
  for (int i = 0; i < w.alphabet; ++i) {
    std::vector<Scalar> vals(w.alphabet);
    for (int j = 0; j < w.alphabet; ++j) vals[j] = root * w.coeffs(i, j);
    filters.emplace_back(w.alphabet, 1, std::move(vals));
  }
  return filters;
}

/// S_i f = m_i (f o R), R(x) = N x mod 1.
template <class Scalar>
StepFunction<Scalar> apply_isometry(const WalshMatrix<Scalar>& w, int letter,
                                    const StepFunction<Scalar>& f) {
  if (letter < 0 || letter >= w.alphabet) throw std::invalid_argument("letter out of range");
  const int n = w.alphabet;
  Scalar root = exact::ScalarOps<Scalar>::sqrt_of(n);
  std::size_t fine = f.values().size() * n;
  std::vector<Scalar> vals(fine);
  std::size_t block = f.values().size();
  for (std::size_t j = 0; j < fine; ++j)
    vals[j] = root * w.coeffs(letter, (int)(j / block)) * f.values()[j % block];
  return StepFunction<Scalar>(n, f.level() + 1, std::move(vals));
}

/// S_i^* f averaged over the N branches: (S_i^* f)(x) =
/// (1/N) sum_q conj(m_i((x+q)/N)) f((x+q)/N).
template <class Scalar>
StepFunction<Scalar> apply_adjoint(const WalshMatrix<Scalar>& w, int letter,
                                   const StepFunction<Scalar>& f) {
  if (letter < 0 || letter >= w.alphabet) throw std::invalid_argument("letter out of range");
  using exact::conj;
  using std::conj;
  const int n = w.alphabet;
  Scalar inv_root = exact::ScalarOps<Scalar>::inv_sqrt_of(n);
  const auto& fv = (f.level() == 0) ? f.values_at_level(1) : f.values();
  std::size_t coarse = fv.size() / n;
  std::vector<Scalar> vals(coarse);
  for (std::size_t j = 0; j < coarse; ++j) {
    Scalar sum(0);
    for (int q = 0; q < n; ++q) sum += conj(w.coeffs(letter, q)) * fv[q * coarse + j];
    vals[j] = inv_root * sum;
  }
  return StepFunction<Scalar>(n, std::max(0, f.level() - 1), std::move(vals));
}

/// S_w 1 for a finite word (identity for the empty word).
template <class Scalar>
StepFunction<Scalar> basis_function(const WalshMatrix<Scalar>& w,
                                    const words::FiniteWord& word) {
  StepFunction<Scalar> f = StepFunction<Scalar>::constant(w.alphabet, Scalar(1));
  for (std::size_t k = word.size(); k-- > 0;) f = apply_isometry(w, word[k], f);
  return f;
}

/// Index words of the permutative basis {S_w 1}: all words of length at
/// most max_len that are empty or end in a nonzero letter (S_0 1 = 1, so
/// trailing zeros duplicate shorter words). Count for alphabet N is
/// N^max_len.
std::vector<words::FiniteWord> basis_words(int alphabet, int max_len);

/// Gram matrix of {S_w 1} over the given words, exact for the exact scalar.
template <class Scalar>
Matrix<Scalar> gram_matrix(const WalshMatrix<Scalar>& w,
                           const std::vector<words::FiniteWord>& word_list) {
  std::vector<StepFunction<Scalar>> fs;
  fs.reserve(word_list.size());
  for (const auto& word : word_list) fs.push_back(basis_function(w, word));
  Matrix<Scalar> g(word_list.size(), word_list.size());
  for (std::size_t r = 0; r < word_list.size(); ++r)
    for (std::size_t c = 0; c < word_list.size(); ++c)
      g(r, c) = inner_product(fs[r], fs[c]);
  return g;
}

/// Classification descriptor: a single orbit at (0)^inf with multiplicity 1
/// and spectrum {1} (S_0 1 = 1 spans the atom). The fixed-vector identity is
/// verified on the way.
template <class Scalar>
classify::AtomicRepDescriptor descriptor(const WalshMatrix<Scalar>& w,
                                         double tol = 1e-12) {
  auto one = StepFunction<Scalar>::constant(w.alphabet, Scalar(1));
  if (!apply_isometry(w, 0, one).approx_equal(one, tol))
    throw validation_error("S_0 1 = 1 fails; matrix is not a valid Walsh system");
  std::vector<classify::OrbitEntry> orbits{
      {words::pure_cycle(words::FiniteWord(w.alphabet, std::vector<int>{0})),
       1,
       {std::complex<double>(1.0, 0.0)}}};
  return classify::AtomicRepDescriptor(w.alphabet, std::move(orbits));
}

/// The classical 2 x 2 Walsh matrix (1/sqrt 2) [[1, 1], [1, -1]].
WalshMatrix<exact::QuadComplex> classical_walsh();
/// The N = 3 Fourier matrix (1/sqrt 3)(omega^{jk}), exact over sqrt 3.
WalshMatrix<exact::QuadComplex> fourier_walsh3();

WalshMatrix<std::complex<double>> to_complex(const WalshMatrix<exact::QuadComplex>& w);

}  // namespace cuntz::walsh
