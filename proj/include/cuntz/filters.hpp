#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "cuntz/classify.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/fincorr.hpp"
#include "cuntz/quadfield.hpp"
#include "cuntz/words.hpp"

namespace cuntz::filters {

/// Sparse Laurent polynomial over a complex scalar; zero coefficients are
/// never stored, so equality is structural.
template <class Scalar>
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::map<int, Scalar> coeffs) : c_(std::move(coeffs)) {
    prune();
  }
  static LaurentPolynomial monomial(const Scalar& a, int exponent) {
    LaurentPolynomial p;
    p.set(exponent, a);
    return p;
  }
  static LaurentPolynomial constant(const Scalar& a) { return monomial(a, 0); }

  const std::map<int, Scalar>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Scalar coeff(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? Scalar(0) : it->second;
  }

  void set(int exponent, const Scalar& a) {
    if (exact::ScalarOps<Scalar>::is_zero(a, 0.0))
      c_.erase(exponent);
    else
      c_[exponent] = a;
  }
  void add(int exponent, const Scalar& a) { set(exponent, coeff(exponent) + a); }

  int min_exponent() const { return c_.begin()->first; }
  int max_exponent() const { return c_.rbegin()->first; }
  /// Largest |exponent| in the support, 0 for the zero polynomial.
  int abs_degree() const {
    if (c_.empty()) return 0;
    return std::max(std::abs(min_exponent()), std::abs(max_exponent()));
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& x, const LaurentPolynomial& y) {
    LaurentPolynomial r = x;
    for (const auto& [k, a] : y.c_) r.add(k, a);
    return r;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& x, const LaurentPolynomial& y) {
    LaurentPolynomial r = x;
    for (const auto& [k, a] : y.c_) r.add(k, -a);
    return r;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& x, const LaurentPolynomial& y) {
    LaurentPolynomial r;
    for (const auto& [k1, a1] : x.c_)
      for (const auto& [k2, a2] : y.c_) r.add(k1 + k2, a1 * a2);
    return r;
  }
  friend LaurentPolynomial operator*(const Scalar& s, const LaurentPolynomial& x) {
    LaurentPolynomial r;
    for (const auto& [k, a] : x.c_) r.add(k, s * a);
    return r;
  }

  /// c_k -> conj(c_k) at exponent -k; on the circle this is pointwise
  /// complex conjugation.
  LaurentPolynomial conj_reflect() const {
    LaurentPolynomial r;
    using exact::conj;
    using std::conj;
    for (const auto& [k, a] : c_) r.set(-k, conj(a));
    return r;
  }

  /// Keep exponents divisible by n and divide them by n; this is
  /// (1/n) sum over the n-th roots w of z of p(w).
  LaurentPolynomial downsample(int n) const {
    LaurentPolynomial r;
    for (const auto& [k, a] : c_)
      if (k % n == 0) r.set(k / n, a);
    return r;
  }

  /// Substitute z -> z^n.
  LaurentPolynomial upsample(int n) const {
    LaurentPolynomial r;
    for (const auto& [k, a] : c_) r.set(k * n, a);
    return r;
  }

  Scalar evaluate_at_one() const {
    Scalar s(0);
    for (const auto& [k, a] : c_) s += a;
    return s;
  }

  /// (coefficient, exponent) when the support is a single term.
  std::optional<std::pair<Scalar, int>> as_monomial() const {
    if (c_.size() != 1) return std::nullopt;
    return std::make_pair(c_.begin()->second, c_.begin()->first);
  }

  friend bool operator==(const LaurentPolynomial& x, const LaurentPolynomial& y) {
    return x.c_ == y.c_;
  }
  friend bool operator!=(const LaurentPolynomial& x, const LaurentPolynomial& y) {
    return !(x == y);
  }

  double max_abs() const {
    double v = 0;
    for (const auto& [k, a] : c_)
      v = std::max(v, exact::ScalarOps<Scalar>::abs_value(a));
    return v;
  }

private:
  void prune() {
    for (auto it = c_.begin(); it != c_.end();)
      it = exact::ScalarOps<Scalar>::is_zero(it->second, 0.0) ? c_.erase(it) : ++it;
  }
  std::map<int, Scalar> c_;
};

/// N circle filters m_0, ..., m_{N-1} defining S_i f(z) = m_i(z) f(z^N).
template <class Scalar>
struct FilterBank {
  int alphabet{};
  std::vector<LaurentPolynomial<Scalar>> filters;

  FilterBank(int alphabet_in, std::vector<LaurentPolynomial<Scalar>> filters_in)
      : alphabet(alphabet_in), filters(std::move(filters_in)) {
    if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if ((int)filters.size() != alphabet)
      throw std::invalid_argument("need one filter per letter");
  }
};

struct QmfViolation {
  int i{}, j{}, exponent{};
  double magnitude{};
};

struct QmfReport {
  bool ok{};
  std::vector<QmfViolation> violations;
};

/// The QMF identity (1/N) sum_{w^N = z} m_i(w) conj(m_j(w)) = delta_ij,
/// decided as a Laurent-polynomial identity: downsample(m_i * reflect(m_j))
/// must equal delta_ij. Exact for the exact scalar.
template <class Scalar>
QmfReport qmf_check(const FilterBank<Scalar>& bank, double tol = 1e-12) {
  QmfReport report{true, {}};
  for (int i = 0; i < bank.alphabet; ++i)
    for (int j = 0; j < bank.alphabet; ++j) {
      auto q = (bank.filters[i] * bank.filters[j].conj_reflect()).downsample(bank.alphabet);
      if (i == j) q = q - LaurentPolynomial<Scalar>::constant(Scalar(1));
      for (const auto& [k, a] : q.coefficients()) {
        if (exact::ScalarOps<Scalar>::is_zero(a, tol)) continue;
        report.ok = false;
        report.violations.push_back({i, j, k, exact::ScalarOps<Scalar>::abs_value(a)});
      }
    }
  return report;
}

/// Coefficients of S_l^* z^h = sum over k in supp(m_l) with k = h (mod N) of
/// conj(a_{l,k}) z^{(h-k)/N}.
template <class Scalar>
std::map<int, Scalar> adjoint_exponent_action(const FilterBank<Scalar>& bank, int letter,
                                              int h) {
  if (letter < 0 || letter >= bank.alphabet)
    throw std::invalid_argument("letter out of range");
  using exact::conj;
  using std::conj;
  std::map<int, Scalar> out;
  for (const auto& [k, a] : bank.filters[letter].coefficients()) {
    if ((h - k) % bank.alphabet != 0) continue;
    int target = (h - k) / bank.alphabet;
    auto it = out.find(target);
    if (it == out.end())
      out[target] = conj(a);
    else
      it->second += conj(a);
  }
  return out;
}

/// Closure of the seed under h -> (h - k)/N over all filters and admissible
/// k. Finite: each step contracts |h| into [-K/(N-1) - 1, K/(N-1) + 1] where
/// K is the largest absolute filter exponent, so span{z^h : h in H} is a
/// finite-dimensional S_l^*-invariant subspace.
template <class Scalar>
std::set<int> invariant_exponent_set(const FilterBank<Scalar>& bank,
                                     const std::set<int>& seed) {
  std::set<int> closed = seed;
  std::vector<int> frontier(seed.begin(), seed.end());
  while (!frontier.empty()) {
    int h = frontier.back();
    frontier.pop_back();
    for (int l = 0; l < bank.alphabet; ++l)
      for (const auto& [target, a] : adjoint_exponent_action(bank, l, h))
        if (closed.insert(target).second) frontier.push_back(target);
  }
  return closed;
}

/// The compression of the wavelet representation to span{z^h : h in H} as
/// finitely correlated data, basis sorted by exponent. H must be closed
/// under the adjoint action; when the bank is QMF the result passes
/// fincorr::validate.
template <class Scalar>
fincorr::MatrixTuple<Scalar> compress_to_exponents(const FilterBank<Scalar>& bank,
                                                   const std::set<int>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("empty exponent set");
  std::vector<int> sorted(exponents.begin(), exponents.end());
  std::map<int, int> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = (int)i;
  const int d = (int)sorted.size();
  std::vector<fincorr::Matrix<Scalar>> ops;
  for (int l = 0; l < bank.alphabet; ++l) {
    fincorr::Matrix<Scalar> z = fincorr::Matrix<Scalar>::Zero(d, d);
    for (int j = 0; j < d; ++j)
      for (const auto& [target, a] : adjoint_exponent_action(bank, l, sorted[j])) {
        auto it = index.find(target);
        if (it == index.end())
          throw validation_error("exponent set is not invariant: S_" +
                                 std::to_string(l) + "* z^" + std::to_string(sorted[j]) +
                                 " leaves it");
        z(it->second, j) = a;
      }
    ops.push_back(std::move(z));
  }
  return fincorr::MatrixTuple<Scalar>(bank.alphabet, std::move(ops));
}

/// Certificate of a one-dimensional atom of the wavelet representation:
/// the cycle word (monomial filters a_i z^{k_i} along it), the weighted
/// exponent sum l = sum N^j k_{i_j} divisible by N^p - 1, the eigenvector
/// exponent d = l/(1 - N^p), and the eigenvalue lambda = prod a_{i_j} with
/// S_I z^d = lambda z^d.
template <class Scalar>
struct AtomCertificate {
  words::FiniteWord cycle;
  std::vector<int> exponents;     // k_{i_j} along the cycle
  long long weighted_sum{};       // l
  long long eigen_exponent{};     // d
  Scalar eigenvalue{};            // lambda
};

/// All atoms of the wavelet representation of a QMF bank (complete by the
/// monomial criterion): search the integer exponent graph d ->_i d' when
/// d = k_i + N d' over unimodular monomial filters, restricted to the
/// contraction region |d| <= K/(N-1) + 1. QMF forces the monomial exponents
/// into distinct residues mod N, so each node has at most one successor and
/// the atoms are exactly the cycles of a functional graph.
template <class Scalar>
std::vector<AtomCertificate<Scalar>> monomial_atom_search(const FilterBank<Scalar>& bank,
                                                          double tol = 1e-12) {
  const int n = bank.alphabet;
  std::vector<std::pair<int, std::pair<Scalar, int>>> monomials;  // (letter, (a, k))
  for (int i = 0; i < n; ++i) {
    auto m = bank.filters[i].as_monomial();
    if (!m) continue;
    if (!exact::ScalarOps<Scalar>::is_unimodular(m->first, tol)) continue;
    monomials.push_back({i, *m});
  }
  std::vector<AtomCertificate<Scalar>> out;
  if (monomials.empty()) return out;
  std::map<int, int> residue_letter;
  for (const auto& [i, ak] : monomials) {
    int r = ((ak.second % n) + n) % n;
    if (!residue_letter.emplace(r, i).second)
      throw validation_error("monomial filters share a residue class mod N; "
                             "the bank cannot satisfy the QMF identity");
  }
  int k_max = 0;
  for (const auto& [i, ak] : monomials) k_max = std::max(k_max, std::abs(ak.second));
  const int bound = k_max / (n - 1) + 1;

  // Unique successor map on [-bound, bound].
  const int nodes = 2 * bound + 1;
  auto node_id = [&](long long d) { return (int)(d + bound); };
  std::vector<int> succ(nodes, -1), letter_of(nodes, -1);
  std::vector<Scalar> amp(nodes, Scalar(0));
  std::vector<int> kexp(nodes, 0);
  for (long long d = -bound; d <= bound; ++d) {
    for (const auto& [i, ak] : monomials) {
      long long diff = d - ak.second;
      if (diff % n != 0) continue;
      long long next = diff / n;
      if (next < -bound || next > bound) continue;
      succ[node_id(d)] = node_id(next);
      letter_of[node_id(d)] = i;
      amp[node_id(d)] = ak.first;
      kexp[node_id(d)] = ak.second;
    }
  }

  // Cycles of the functional graph.
  std::vector<int> state(nodes, 0);  // 0 fresh, 1 on path, 2 done
  for (int start = 0; start < nodes; ++start) {
    if (state[start] != 0) continue;
    std::vector<int> path;
    int v = start;
    while (v != -1 && state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = succ[v];
    }
    if (v != -1 && state[v] == 1) {
      // Found a new cycle: the tail of the path from v onward.
      std::size_t from = 0;
      while (path[from] != v) ++from;
      std::vector<int> cycle_nodes(path.begin() + from, path.end());
      const std::size_t p = cycle_nodes.size();
      std::vector<int> letters(p);
      for (std::size_t t = 0; t < p; ++t) letters[t] = letter_of[cycle_nodes[t]];
      words::FiniteWord word(n, letters);
      words::FiniteWord least = words::least_rotation(word);
      std::size_t r = 0;
      while (words::rotate(word, r) != least) ++r;
      AtomCertificate<Scalar> cert{least, {}, 0, 0, Scalar(1)};
      long long power = 1, weighted = 0;
      for (std::size_t t = 0; t < p; ++t) {
        int node = cycle_nodes[(r + t) % p];
        cert.exponents.push_back(kexp[node]);
        weighted += power * kexp[node];
        power *= n;
        cert.eigenvalue = cert.eigenvalue * amp[node];
      }
      cert.weighted_sum = weighted;
      cert.eigen_exponent = (long long)cycle_nodes[r] - bound;
      // l = d (1 - N^p), i.e. N^p - 1 divides l.
      if (cert.eigen_exponent * (1 - power) != weighted)
        throw std::logic_error("atom certificate arithmetic mismatch");
      out.push_back(std::move(cert));
    }
    for (int u : path) state[u] = 2;
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.cycle < b.cycle; });
  return out;
}

/// Check of the defining eigen-identity, exactly as Laurent polynomials:
/// m(z) z^{d N^p} = lambda z^d with m(z) = prod_j m_{i_j}(z^{N^j}).
template <class Scalar>
bool certificate_identity_holds(const FilterBank<Scalar>& bank,
                                const AtomCertificate<Scalar>& cert) {
  LaurentPolynomial<Scalar> m = LaurentPolynomial<Scalar>::constant(Scalar(1));
  long long power = 1;
  for (std::size_t j = 0; j < cert.cycle.size(); ++j) {
    m = m * bank.filters[cert.cycle[j]].upsample((int)power);
    power *= bank.alphabet;
  }
  auto lhs = m * LaurentPolynomial<Scalar>::monomial(Scalar(1),
                                                     (int)(cert.eigen_exponent * power));
  auto rhs = LaurentPolynomial<Scalar>::monomial(cert.eigenvalue,
                                                 (int)cert.eigen_exponent);
  return lhs == rhs;
}

/// Low-pass test m_0(1) = sqrt(N); sufficient (not necessary) for the
/// representation to have no atoms. Exact for the exact scalar.
template <class Scalar>
bool low_pass_check(const FilterBank<Scalar>& bank, double tol = 1e-12) {
  Scalar value = bank.filters[0].evaluate_at_one();
  if constexpr (exact::ScalarOps<Scalar>::exact) {
    (void)tol;
    return value == exact::QuadComplex::sqrt_of(bank.alphabet);
  } else {
    return std::abs(value - exact::ScalarOps<Scalar>::sqrt_of(bank.alphabet)) <= tol;
  }
}

/// Descriptor of the purely atomic part named by the certificates: one
/// orbit per certificate, multiplicity 1, spectrum {lambda}.
template <class Scalar>
classify::AtomicRepDescriptor descriptor_from_certificates(
    int alphabet, std::span<const AtomCertificate<Scalar>> certificates) {
  std::vector<classify::OrbitEntry> orbits;
  for (const auto& c : certificates)
    orbits.push_back({words::pure_cycle(c.cycle), 1,
                      {exact::ScalarOps<Scalar>::to_complex(c.eigenvalue)}});
  return classify::AtomicRepDescriptor(alphabet, std::move(orbits));
}

/// The Haar pair (1 + z)/sqrt 2, (1 - z)/sqrt 2 over the exact scalar.
FilterBank<exact::QuadComplex> haar_bank();
/// The Cantor triple (1 + z^2)/sqrt 2, z, (1 - z^2)/sqrt 2 (N = 3).
FilterBank<exact::QuadComplex> cantor_bank();
/// Monomial bank {z^{k_0}, z^{k_1}, ...} with unit coefficients.
FilterBank<exact::QuadComplex> monomial_bank(const std::vector<int>& exponents);

FilterBank<std::complex<double>> to_complex(const FilterBank<exact::QuadComplex>& bank);

}  // namespace cuntz::filters
