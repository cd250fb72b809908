#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "cuntz/words.hpp"

namespace cuntz::classify {

/// One orbit of a purely atomic representation: the canonical pure-cycle
/// label, the atom dimension, and the eigenvalue multiset of the cycle
/// isometry S_I restricted to the atom subspace.
struct OrbitEntry {
  words::EventuallyPeriodicWord representative;
  int multiplicity{};
  std::vector<std::complex<double>> spectrum;  // size == multiplicity
};

/// Complete unitary invariant of a purely atomic representation with
/// eventually periodic support: orbit labels, multiplicities, and cycle
/// spectra. Orbits are kept sorted by representative; representatives are
/// normalized to orbit labels on construction.
class AtomicRepDescriptor {
public:
  AtomicRepDescriptor(int alphabet, std::vector<OrbitEntry> orbits);

  int alphabet() const { return alphabet_; }
  const std::vector<OrbitEntry>& orbits() const { return orbits_; }
  bool empty() const { return orbits_.empty(); }

private:
  int alphabet_;
  std::vector<OrbitEntry> orbits_;
};

/// Unitary equivalence: same orbit labels, same multiplicities, and per
/// cyclic orbit matching spectrum multisets (within tol; exact root-of-unity
/// indices are compared when every eigenvalue is recognized as one).
bool equivalent(const AtomicRepDescriptor& a, const AtomicRepDescriptor& b,
                double tol = 1e-9);

/// True iff no orbit label is shared.
bool disjoint(const AtomicRepDescriptor& a, const AtomicRepDescriptor& b);

/// True iff a single orbit of multiplicity one.
bool irreducible(const AtomicRepDescriptor& d);

/// One single-orbit descriptor per orbit; merge(decompose(d)) == d.
std::vector<AtomicRepDescriptor> decompose(const AtomicRepDescriptor& d);

/// Direct sum: orbit-wise union with added multiplicities and merged
/// spectrum multisets.
AtomicRepDescriptor merge(std::span<const AtomicRepDescriptor> parts);

/// Permutativity: every orbit spectrum splits into complete sets of k-th
/// roots of unity (the spectra of permutation matrices). Eigenvalues must be
/// recognized as roots of unity of order <= max_order.
///
/// Descriptors only carry cyclic orbit labels — the only orbits exact
/// finite data can produce — and on those the partition of the spectrum is
/// the exact criterion: a unitary permutes some orthonormal basis of a
/// finite-dimensional space setwise iff its eigenvalue multiset is a union
/// of complete root sets. Purely atomic representations supported on
/// non-periodic orbits are permutative with no spectral condition at all,
/// but they have no finite descriptor and do not arise here.
bool permutative(const AtomicRepDescriptor& d, double tol = 1e-9, int max_order = 64);

/// Root-of-unity recognition: smallest k <= max_order with
/// |z - e^{2 pi i j / k}| <= tol, returned as (j, k) with the fraction j/k
/// reduced. Nullopt if no such k.
std::optional<std::pair<int, int>> recognize_root_of_unity(std::complex<double> z,
                                                           double tol = 1e-9,
                                                           int max_order = 64);

/// The partition test on a bare spectrum multiset.
bool spectrum_is_permutation_spectrum(std::span<const std::complex<double>> spectrum,
                                      double tol = 1e-9, int max_order = 64);

}  // namespace cuntz::classify
