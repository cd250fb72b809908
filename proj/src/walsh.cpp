#include "cuntz/walsh.hpp"

#include <algorithm>

namespace cuntz::walsh {

using exact::QuadComplex;
using exact::QuadRational;
using exact::Rational;

std::vector<words::FiniteWord> basis_words(int alphabet, int max_len) {
  if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
  std::vector<words::FiniteWord> out;
  out.emplace_back(alphabet, std::vector<int>{});
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int l = 0; l < alphabet; ++l) {
        std::vector<int> e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    for (const auto& w : next)
      if (w.back() != 0) out.emplace_back(alphabet, w);
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WalshMatrix<QuadComplex> classical_walsh() {
  QuadComplex h = QuadComplex::inv_sqrt_of(2);
  Matrix<QuadComplex> a(2, 2);
  a << h, h, h, -h;
  return WalshMatrix<QuadComplex>(2, std::move(a));
}

WalshMatrix<QuadComplex> fourier_walsh3() {
  // omega = e^{2 pi i/3} = -1/2 + (sqrt 3 / 2) i; all entries live in
  // Q(i, sqrt 3) once scaled by 1/sqrt 3.
  QuadRational half(Rational(-1, 2));
  QuadRational s3half(Rational(0), Rational(1, 2), 3);
  QuadComplex omega(half, s3half);
  QuadComplex omega2 = omega * omega;
  QuadComplex r = QuadComplex::inv_sqrt_of(3);
  Matrix<QuadComplex> a(3, 3);
  a << r, r, r,
      r, r * omega, r * omega2,
      r, r * omega2, r * omega;
  return WalshMatrix<QuadComplex>(3, std::move(a));
}

WalshMatrix<std::complex<double>> to_complex(const WalshMatrix<QuadComplex>& w) {
  Matrix<std::complex<double>> a(w.alphabet, w.alphabet);
  for (int i = 0; i < w.alphabet; ++i)
    for (int j = 0; j < w.alphabet; ++j) a(i, j) = w.coeffs(i, j).to_complex();
  return WalshMatrix<std::complex<double>>(w.alphabet, std::move(a));
}

}  // namespace cuntz::walsh
