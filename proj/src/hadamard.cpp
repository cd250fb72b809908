#include "cuntz/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace cuntz::hadamard {

namespace {

using Poly = std::vector<long long>;  // integer polynomial, ascending degree

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact division of integer polynomials; the divisor must be monic.
Poly poly_div_exact(Poly num, const Poly& den) {
  Poly q(num.size(), 0);
  while (num.size() >= den.size()) {
    long long c = num.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    poly_trim(num);
    if (num.empty()) break;
  }
  poly_trim(q);
  return q;
}

/// R-th cyclotomic polynomial: (x^R - 1) / prod of the proper-divisor ones.
Poly cyclotomic(int r) {
  Poly p(r + 1, 0);
  p[0] = -1;
  p[r] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    p = poly_div_exact(std::move(p), cyclotomic(d));
  }
  return p;
}

/// Zero test of sum_k c_k zeta_R^k in Z[zeta_R]: remainder mod Phi_R.
bool cyclotomic_sum_is_zero(std::vector<long long> c, int r) {
  poly_trim(c);
  if (c.empty()) return true;
  Poly phi = cyclotomic(r);
  while (c.size() >= phi.size()) {
    long long lead = c.back();
    std::size_t shift = c.size() - phi.size();
    for (std::size_t i = 0; i < phi.size(); ++i) c[shift + i] -= lead * phi[i];
    poly_trim(c);
  }
  return c.empty();
}

long long floor_div(long long a, long long b) {
  long long q = a / b, rem = a % b;
  return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

long long mod_nonneg(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

/// Floor of a rational.
long long rational_floor(const Rational& x) { return floor_div(x.num(), x.den()); }

double frac_phase(const Rational& x) {
  // 2 pi (x mod 1), computed on the reduced fraction for accuracy.
  long long f = x.num() - rational_floor(x) * x.den();
  return 2.0 * std::numbers::pi * double(f) / double(x.den());
}

}  // namespace

HadamardTriple::HadamardTriple(int scale_in, std::vector<long long> base_in,
                               std::vector<long long> digits_in)
    : scale(scale_in), base(std::move(base_in)), digits(std::move(digits_in)) {
  if (scale < 2) throw std::invalid_argument("scale R must be at least 2");
  if (base.size() != digits.size())
    throw std::invalid_argument("B and L must have equal size");
  if (base.size() < 2) throw std::invalid_argument("need at least two digits");
  std::sort(base.begin(), base.end());
  std::sort(digits.begin(), digits.end());
  auto has_zero = [](const std::vector<long long>& v) {
    return std::find(v.begin(), v.end(), 0LL) != v.end();
  };
  if (!has_zero(base) || !has_zero(digits))
    throw std::invalid_argument("B and L must both contain 0");
  for (std::size_t i = 1; i < base.size(); ++i)
    if (base[i] == base[i - 1] || digits[i] == digits[i - 1])
      throw std::invalid_argument("B and L entries must be distinct");
}

int HadamardTriple::digit_index(long long value) const {
  auto it = std::lower_bound(digits.begin(), digits.end(), value);
  if (it == digits.end() || *it != value) return -1;
  return (int)(it - digits.begin());
}

UnitarityReport hadamard_check(const HadamardTriple& t) {
  const int n = t.alphabet();
  // Distinctness mod R is a consequence of unitarity; report it directly
  // when violated, for a sharper diagnostic.
  auto residue_clash = [&](const std::vector<long long>& v, const char* name)
      -> std::string {
    std::set<long long> seen;
    for (long long x : v)
      if (!seen.insert(mod_nonneg(x, t.scale)).second)
        return std::string(name) + " entries collide modulo R";
    return {};
  };
  std::string clash = residue_clash(t.base, "B");
  if (clash.empty()) clash = residue_clash(t.digits, "L");

  bool ok = clash.empty();
  double defect = 0;
  std::string detail = clash;
  for (int a = 0; a < n && ok; ++a)
    for (int b = a + 1; b < n && ok; ++b) {
      long long delta = t.base[a] - t.base[b];
      std::vector<long long> coeffs(t.scale, 0);
      for (long long l : t.digits) coeffs[mod_nonneg(delta * l, t.scale)] += 1;
      if (!cyclotomic_sum_is_zero(coeffs, t.scale)) {
        ok = false;
        detail = "rows " + std::to_string(t.base[a]) + " and " +
                 std::to_string(t.base[b]) + " of the exponential matrix are not orthogonal";
      }
    }
  if (!ok) {
    // Numeric size of the worst row-pair inner product, for the report.
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::complex<double> sum = 0;
        for (long long l : t.digits) {
          double phase = 2.0 * std::numbers::pi *
                         double(mod_nonneg((t.base[a] - t.base[b]) * l, t.scale)) /
                         double(t.scale);
          sum += std::complex<double>(std::cos(phase), std::sin(phase));
        }
        defect = std::max(defect, std::abs(sum) / double(n));
      }
  }
  return {ok, defect, detail};
}

std::complex<double> transfer_eval(const HadamardTriple& t, const Rational& x) {
  std::complex<double> sum = 0;
  for (long long b : t.base) {
    double phase = frac_phase(x * Rational(b));
    sum += std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return sum / std::sqrt(double(t.alphabet()));
}

std::vector<ExtremeCycle> extreme_cycle_search(const HadamardTriple& t) {
  auto unit = hadamard_check(t);
  if (!unit.ok) throw validation_error("not a Hadamard triple: " + unit.detail);

  // Candidate extreme points: |m_B(x)| = sqrt N forces every phase
  // e^{2 pi i b x} to equal the b = 0 term, i.e. b x integral for all b,
  // which is exactly x in (1/g)Z for g = gcd of the nonzero elements of B.
  long long g = 0;
  for (long long b : t.base) g = std::gcd(g, std::llabs(b));
  if (g == 0) throw std::logic_error("B = {0} cannot happen with distinct digits");
  Rational lo = Rational(t.digits.front(), t.scale - 1);
  Rational hi = Rational(t.digits.back(), t.scale - 1);
  long long m_lo = -rational_floor(-(lo * Rational(g)));  // ceil(lo * g)
  long long m_hi = rational_floor(hi * Rational(g));
  if (m_hi - m_lo > 1000000) throw validation_error("extreme-point candidate set too large");

  std::vector<Rational> candidates;
  std::map<Rational, int> index;
  for (long long m = m_lo; m <= m_hi; ++m) {
    Rational x(m, g);
    index[x] = (int)candidates.size();
    candidates.push_back(x);
  }
  const int n = (int)candidates.size();
  // Edges x -> (x + l)/R inside the candidate set; the digit on an edge is
  // determined by its endpoints, so cycles are simple and carry their digits.
  std::vector<std::vector<std::pair<int, long long>>> out(n);
  for (int i = 0; i < n; ++i)
    for (long long l : t.digits) {
      Rational y = (candidates[i] + Rational(l)) / Rational(t.scale);
      auto it = index.find(y);
      if (it != index.end()) out[i].push_back({it->second, l});
    }

  // Enumerate simple cycles, each once, rooted at its smallest node.
  std::vector<ExtremeCycle> cycles;
  std::vector<int> path;
  std::vector<long long> path_digits;
  std::vector<bool> on_path(n, false);
  auto dfs = [&](auto&& self, int root, int v) -> void {
    on_path[v] = true;
    path.push_back(v);
    for (const auto& [w, l] : out[v]) {
      if (w == root) {
        ExtremeCycle c;
        for (std::size_t k = 0; k < path.size(); ++k) c.points.push_back(candidates[path[k]]);
        c.digit_values = path_digits;
        c.digit_values.push_back(l);
        cycles.push_back(std::move(c));
      } else if (w > root && !on_path[w]) {
        path_digits.push_back(l);
        self(self, root, w);
        path_digits.pop_back();
      }
    }
    path.pop_back();
    on_path[v] = false;
  };
  for (int root = 0; root < n; ++root) dfs(dfs, root, root);
  return cycles;
}

SpectrumSlice lambda_set(const HadamardTriple& t, const ExtremeCycle& cycle,
                         long long bound) {
  Rational rbound((long long)bound);
  std::set<Rational> seen;
  std::vector<Rational> frontier;
  for (const Rational& x : cycle.points) {
    Rational lambda = -x;
    if (lambda.abs() > rbound)
      throw std::invalid_argument("bound smaller than a seed point of -C");
    if (seen.insert(lambda).second) frontier.push_back(lambda);
  }
  while (!frontier.empty()) {
    Rational lambda = frontier.back();
    frontier.pop_back();
    for (long long l : t.digits) {
      Rational next = Rational(t.scale) * lambda + Rational(l);
      if (next.abs() > rbound) continue;
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  SpectrumSlice slice{cycle, {seen.begin(), seen.end()}, bound};
  return slice;
}

words::EventuallyPeriodicWord encode(const HadamardTriple& t, long long lambda) {
  std::map<long long, int> first_seen;
  std::vector<int> letters;
  long long current = lambda;
  int step = 0;
  while (true) {
    auto it = first_seen.find(current);
    if (it != first_seen.end()) {
      std::vector<int> pre(letters.begin(), letters.begin() + it->second);
      std::vector<int> cyc(letters.begin() + it->second, letters.end());
      return words::EventuallyPeriodicWord(words::FiniteWord(t.alphabet(), pre),
                                           words::FiniteWord(t.alphabet(), cyc));
    }
    first_seen[current] = step;
    long long residue = mod_nonneg(current, t.scale);
    int found = -1;
    for (std::size_t i = 0; i < t.digits.size(); ++i)
      if (mod_nonneg(t.digits[i], t.scale) == residue) {
        found = (int)i;
        break;
      }
    if (found < 0) throw NotEncodableError(lambda, step);
    letters.push_back(found);
    current = (current - t.digits[found]) / t.scale;
    ++step;
    if (step > 100000) throw std::logic_error("digit expansion failed to cycle");
  }
}

words::EventuallyPeriodicWord cycle_word(const HadamardTriple& t, const ExtremeCycle& c) {
  std::vector<int> letters;
  for (long long l : c.digit_values) {
    int idx = t.digit_index(l);
    if (idx < 0) throw std::invalid_argument("cycle digit not in L");
    letters.push_back(idx);
  }
  return words::pure_cycle(words::FiniteWord(t.alphabet(), letters));
}

classify::AtomicRepDescriptor descriptor(const HadamardTriple& t) {
  auto cycles = extreme_cycle_search(t);
  std::vector<classify::OrbitEntry> orbits;
  for (const auto& c : cycles) {
    // Symbolic fixed-point check: sigma_{l_0} ... sigma_{l_{p-1}} applied to
    // -x_0 returns -x_0, so S_I e_{-x_0} = e_{-x_0} and the cycle spectrum
    // is {1}.
    Rational lambda = -c.points[0];
    for (int j = c.period() - 1; j >= 0; --j)
      lambda = Rational(t.scale) * lambda + Rational(c.digit_values[j]);
    if (!(lambda == -c.points[0]))
      throw std::logic_error("extreme cycle failed the fixed-point identity");
    orbits.push_back({words::orbit_representative(cycle_word(t, c)),
                      1,
                      {std::complex<double>(1.0, 0.0)}});
  }
  return classify::AtomicRepDescriptor(t.alphabet(), std::move(orbits));
}

double fourier_orthogonality(const HadamardTriple& t, long long lambda1,
                             long long lambda2, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  double product = 1.0;
  double root_n = std::sqrt(double(t.alphabet()));
  Rational x((long long)(lambda1 - lambda2));
  for (int k = 1; k <= depth; ++k) {
    x = x / Rational(t.scale);
    product *= std::abs(transfer_eval(t, x)) / root_n;
    if (product == 0.0) break;
  }
  return product;
}

}  // namespace cuntz::hadamard
