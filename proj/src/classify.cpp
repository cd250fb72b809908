#include "cuntz/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cuntz::classify {

namespace {

bool orbit_less(const OrbitEntry& a, const OrbitEntry& b) {
  return a.representative < b.representative;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Greedy multiset matching of two spectra within tol. When both spectra
/// consist entirely of recognized roots of unity, the comparison is exact on
/// the reduced (j, k) indices instead.
bool spectra_match(const std::vector<std::complex<double>>& a,
                   const std::vector<std::complex<double>>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<std::pair<int, int>> ra, rb;
  bool all_roots = true;
  for (const auto& z : a) {
    auto r = recognize_root_of_unity(z, tol);
    if (!r) { all_roots = false; break; }
    ra.push_back(*r);
  }
  if (all_roots)
    for (const auto& z : b) {
      auto r = recognize_root_of_unity(z, tol);
      if (!r) { all_roots = false; break; }
      rb.push_back(*r);
    }
  if (all_roots && !a.empty()) {
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
  }
  std::vector<bool> used(b.size(), false);
  for (const auto& z : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && std::abs(z - b[j]) <= tol) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

AtomicRepDescriptor::AtomicRepDescriptor(int alphabet, std::vector<OrbitEntry> orbits)
    : alphabet_(alphabet), orbits_(std::move(orbits)) {
  if (alphabet_ < 2) throw std::invalid_argument("alphabet size must be at least 2");
  for (auto& o : orbits_) {
    if (o.representative.alphabet() != alphabet_)
      throw std::invalid_argument("orbit alphabet mismatch");
    o.representative = words::orbit_representative(o.representative);
    if (o.multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    if ((int)o.spectrum.size() != o.multiplicity)
      throw std::invalid_argument("spectrum size must equal multiplicity");
  }
  std::sort(orbits_.begin(), orbits_.end(), orbit_less);
  for (std::size_t i = 1; i < orbits_.size(); ++i)
    if (orbits_[i].representative == orbits_[i - 1].representative)
      throw std::invalid_argument("orbit representatives must be distinct (use merge)");
}

bool equivalent(const AtomicRepDescriptor& a, const AtomicRepDescriptor& b, double tol) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("alphabet mismatch");
  if (a.orbits().size() != b.orbits().size()) return false;
  for (std::size_t i = 0; i < a.orbits().size(); ++i) {
    const auto& oa = a.orbits()[i];
    const auto& ob = b.orbits()[i];
    if (oa.representative != ob.representative) return false;
    if (oa.multiplicity != ob.multiplicity) return false;
    if (!spectra_match(oa.spectrum, ob.spectrum, tol)) return false;
  }
  return true;
}

bool disjoint(const AtomicRepDescriptor& a, const AtomicRepDescriptor& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("alphabet mismatch");
  for (const auto& oa : a.orbits())
    for (const auto& ob : b.orbits())
      if (oa.representative == ob.representative) return false;
  return true;
}

bool irreducible(const AtomicRepDescriptor& d) {
  return d.orbits().size() == 1 && d.orbits()[0].multiplicity == 1;
}

std::vector<AtomicRepDescriptor> decompose(const AtomicRepDescriptor& d) {
  std::vector<AtomicRepDescriptor> parts;
  parts.reserve(d.orbits().size());
  for (const auto& o : d.orbits())
    parts.emplace_back(d.alphabet(), std::vector<OrbitEntry>{o});
  return parts;
}

AtomicRepDescriptor merge(std::span<const AtomicRepDescriptor> parts) {
  if (parts.empty()) throw std::invalid_argument("merge of zero descriptors");
  int alphabet = parts[0].alphabet();
  std::map<words::EventuallyPeriodicWord, OrbitEntry> merged;
  for (const auto& d : parts) {
    if (d.alphabet() != alphabet) throw std::invalid_argument("alphabet mismatch");
    for (const auto& o : d.orbits()) {
      auto it = merged.find(o.representative);
      if (it == merged.end()) {
        merged.emplace(o.representative, o);
      } else {
        it->second.multiplicity += o.multiplicity;
        it->second.spectrum.insert(it->second.spectrum.end(), o.spectrum.begin(),
                                   o.spectrum.end());
      }
    }
  }
  std::vector<OrbitEntry> orbits;
  orbits.reserve(merged.size());
  for (auto& [rep, entry] : merged) orbits.push_back(std::move(entry));
  return AtomicRepDescriptor(alphabet, std::move(orbits));
}

std::optional<std::pair<int, int>> recognize_root_of_unity(std::complex<double> z,
                                                           double tol, int max_order) {
  if (std::abs(std::abs(z) - 1.0) > tol) return std::nullopt;
  for (int k = 1; k <= max_order; ++k) {
    int j = (int)std::llround(std::arg(z) / (2.0 * std::numbers::pi) * k);
    double angle = 2.0 * std::numbers::pi * j / k;
    if (std::abs(z - std::complex<double>(std::cos(angle), std::sin(angle))) <= tol) {
      j %= k;
      if (j < 0) j += k;
      int g = std::gcd(j, k);
      return std::make_pair(j / g, k / g);
    }
  }
  return std::nullopt;
}

bool spectrum_is_permutation_spectrum(std::span<const std::complex<double>> spectrum,
                                      double tol, int max_order) {
  // Count eigenvalues by primitive order, then test whether the counts are a
  // nonnegative combination of complete k-th-root sets. A complete k-set
  // holds phi(d) elements of primitive order d for each d | k, so with
  // M_k = c_k / phi(k) the number of k-sets is
  // n_k = M_k - sum_{m = 2k, 3k, ...} n_m and a partition exists iff every
  // n_k is a nonnegative integer.
  int max_present = 1;
  std::map<int, long long> count;
  for (const auto& z : spectrum) {
    auto r = recognize_root_of_unity(z, tol, max_order);
    if (!r) return false;
    int order = r->second;
    ++count[order];
    max_present = std::max(max_present, order);
  }
  std::vector<long long> copies(max_present + 1, 0);
  for (int k = max_present; k >= 1; --k) {
    long long c = count.count(k) ? count[k] : 0;
    int phi = euler_phi(k);
    if (c % phi != 0) return false;
    long long m = c / phi;
    for (int mult = 2 * k; mult <= max_present; mult += k) m -= copies[mult];
    if (m < 0) return false;
    copies[k] = m;
  }
  return true;
}

bool permutative(const AtomicRepDescriptor& d, double tol, int max_order) {
  for (const auto& o : d.orbits())
    if (!spectrum_is_permutation_spectrum(o.spectrum, tol, max_order)) return false;
  return true;
}

}  // namespace cuntz::classify
