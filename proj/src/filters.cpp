#include "cuntz/filters.hpp"

namespace cuntz::filters {

using exact::QuadComplex;
using exact::Rational;

FilterBank<QuadComplex> haar_bank() {
  QuadComplex h = QuadComplex::inv_sqrt_of(2);
  LaurentPolynomial<QuadComplex> m0, m1;
  m0.set(0, h);
  m0.set(1, h);
  m1.set(0, h);
  m1.set(1, -h);
  return FilterBank<QuadComplex>(2, {m0, m1});
}

FilterBank<QuadComplex> cantor_bank() {
  QuadComplex h = QuadComplex::inv_sqrt_of(2);
  LaurentPolynomial<QuadComplex> m0, m1, m2;
  m0.set(0, h);
  m0.set(2, h);
  m1.set(1, QuadComplex(1));
  m2.set(0, h);
  m2.set(2, -h);
  return FilterBank<QuadComplex>(3, {m0, m1, m2});
}

FilterBank<QuadComplex> monomial_bank(const std::vector<int>& exponents) {
  std::vector<LaurentPolynomial<QuadComplex>> filters;
  for (int k : exponents)
    filters.push_back(LaurentPolynomial<QuadComplex>::monomial(QuadComplex(1), k));
  return FilterBank<QuadComplex>((int)exponents.size(), std::move(filters));
}

FilterBank<std::complex<double>> to_complex(const FilterBank<QuadComplex>& bank) {
  std::vector<LaurentPolynomial<std::complex<double>>> filters;
  for (const auto& f : bank.filters) {
    LaurentPolynomial<std::complex<double>> g;
    for (const auto& [k, a] : f.coefficients()) g.set(k, a.to_complex());
    filters.push_back(std::move(g));
  }
  return FilterBank<std::complex<double>>(bank.alphabet, std::move(filters));
}

}  // namespace cuntz::filters
