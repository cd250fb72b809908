#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cuntz/classify.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/rational.hpp"
#include "cuntz/words.hpp"

namespace cuntz::hadamard {

using exact::Rational;

/// Integer data (R, B, L) whose scaled exponential matrix
/// (1/sqrt N)(e^{2 pi i b l / R}) is unitary. B and L are kept sorted;
/// word letters across the module are indices into the sorted L.
struct HadamardTriple {
  int scale{};                     // R
  std::vector<long long> base;    // B, contains 0
  std::vector<long long> digits;  // L, contains 0

  HadamardTriple(int scale_in, std::vector<long long> base_in,
                 std::vector<long long> digits_in);

  int alphabet() const { return (int)base.size(); }
  int digit_index(long long value) const;  // position in sorted L, -1 if absent
};

struct UnitarityReport {
  bool ok{};
  double defect{};     // largest |row inner product|/N over failing pairs
  std::string detail;  // human-readable reason when not unitary
};

/// Exact unitarity of (1/sqrt N)(e^{2 pi i b l / R}): each off-diagonal row
/// pair must sum to zero in Z[zeta_R], decided by reduction modulo the R-th
/// cyclotomic polynomial.
UnitarityReport hadamard_check(const HadamardTriple& t);

/// m_B(x) = (1/sqrt N) sum_b e^{2 pi i b x}.
std::complex<double> transfer_eval(const HadamardTriple& t, const Rational& x);

/// A cycle of the maps x -> (x + l)/R on which |m_B| peaks at sqrt N
/// (equivalently, b x is an integer for every b in B). points[t] steps to
/// points[t+1 mod p] under digit digit_values[t].
struct ExtremeCycle {
  std::vector<Rational> points;
  std::vector<long long> digit_values;
  int period() const { return (int)points.size(); }
};

/// Complete exact search: candidates are the rationals x in (1/g)Z (g the
/// gcd of the nonzero elements of B) inside the invariant interval
/// [min L/(R-1), max L/(R-1)]; cycles of the digit maps restricted there,
/// one representative per rotation (starting at the least point).
std::vector<ExtremeCycle> extreme_cycle_search(const HadamardTriple& t);

/// Lambda(C) truncated to |lambda| <= bound: breadth-first closure of -C
/// under lambda -> R lambda + l. Elements are exact rationals (integers for
/// integer cycles); sorted ascending.
struct SpectrumSlice {
  ExtremeCycle cycle;
  std::vector<Rational> elements;
  long long bound{};
};

SpectrumSlice lambda_set(const HadamardTriple& t, const ExtremeCycle& cycle,
                         long long bound);

class NotEncodableError : public std::runtime_error {
public:
  NotEncodableError(long long lambda, int step)
      : std::runtime_error("no digit matches lambda = " + std::to_string(lambda) +
                           " at step " + std::to_string(step)),
        lambda(lambda),
        step(step) {}
  long long lambda;
  int step;
};

/// Digit expansion of an integer: repeatedly split lambda = l + R lambda'
/// with the unique l in L congruent to lambda mod R, until the iterates
/// cycle. Letters are indices into sorted L. Throws NotEncodableError when
/// some residue has no digit (lambda is outside Lambda).
words::EventuallyPeriodicWord encode(const HadamardTriple& t, long long lambda);

/// The cyclic word E(-x_0) of an extreme cycle, read off its digits.
words::EventuallyPeriodicWord cycle_word(const HadamardTriple& t, const ExtremeCycle& c);

/// Classification descriptor of the representation: one orbit per extreme
/// cycle, multiplicity 1, spectrum {1} (the permutative basis vector e_{-x_0}
/// is fixed by the cycle isometry, verified symbolically on the way).
classify::AtomicRepDescriptor descriptor(const HadamardTriple& t);

/// Truncated Fourier-transform magnitude
/// prod_{k=1..depth} |m_B(R^{-k}(l1 - l2))| / sqrt N; equals 1 for l1 = l2
/// and tends to 0 for distinct members of one Lambda(C).
double fourier_orthogonality(const HadamardTriple& t, long long lambda1,
                             long long lambda2, int depth);

}  // namespace cuntz::hadamard
