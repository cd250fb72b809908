#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

#include <Eigen/Core>

#include "cuntz/rational.hpp"

namespace cuntz::exact {

/// Element of a real quadratic field: a + b*sqrt(d) with a, b rational and
/// d a squarefree positive integer. d == 0 encodes a plain rational (b == 0).
///
/// Values with different nonzero radicands never mix in one computation;
/// arithmetic throws if they do. This covers every worked example in scope
/// (Haar and Cantor filters live in Q(sqrt 2), N = 3 Walsh in Q(sqrt 3), ...).
class QuadRational {
public:
  QuadRational() : a_(0), b_(0), d_(0) {}
  QuadRational(int n) : a_(n), b_(0), d_(0) {}
  QuadRational(long long n) : a_(n), b_(0), d_(0) {}
  QuadRational(const Rational& a) : a_(a), b_(0), d_(0) {}
  QuadRational(const Rational& a, const Rational& b, int d) : a_(a), b_(b), d_(d) {
    normalize();
  }

  /// sqrt(n) for a nonnegative integer n, with the square part folded out.
  static QuadRational sqrt_of(long long n) {
    if (n < 0) throw std::domain_error("QuadRational: sqrt of negative integer");
    return QuadRational(Rational(0), Rational(1), (int)n);
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  int radicand() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return d_ == 0; }

  /// Exact sign of the real value.
  int sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    if (a_.sign() == b_.sign()) return a_.sign();
    // a and b of opposite signs: compare a^2 against b^2 d.
    Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;  // cannot happen for squarefree d > 1
    return (lhs > rhs) ? a_.sign() : b_.sign();
  }

  friend QuadRational operator+(const QuadRational& x, const QuadRational& y) {
    int d = unify(x, y);
    return QuadRational(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadRational operator-(const QuadRational& x, const QuadRational& y) {
    int d = unify(x, y);
    return QuadRational(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  friend QuadRational operator*(const QuadRational& x, const QuadRational& y) {
    int d = unify(x, y);
    return QuadRational(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d),
                        x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadRational operator/(const QuadRational& x, const QuadRational& y) {
    if (y.is_zero()) throw std::domain_error("QuadRational: division by zero");
    int d = unify(x, y);
    // (a - b sqrt d) / (a^2 - b^2 d) is the inverse of a + b sqrt d.
    Rational n = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
    QuadRational yinv(y.a_ / n, -(y.b_ / n), d);
    return x * yinv;
  }
  QuadRational operator-() const { return QuadRational(-a_, -b_, d_); }
  QuadRational& operator+=(const QuadRational& y) { return *this = *this + y; }
  QuadRational& operator-=(const QuadRational& y) { return *this = *this - y; }
  QuadRational& operator*=(const QuadRational& y) { return *this = *this * y; }
  QuadRational& operator/=(const QuadRational& y) { return *this = *this / y; }

  friend bool operator==(const QuadRational& x, const QuadRational& y) {
    // Normalized forms with distinct radicands denote distinct reals.
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadRational& x, const QuadRational& y) {
    return !(x == y);
  }
  friend bool operator<(const QuadRational& x, const QuadRational& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const QuadRational& x, const QuadRational& y) { return y < x; }
  friend bool operator<=(const QuadRational& x, const QuadRational& y) { return !(y < x); }
  friend bool operator>=(const QuadRational& x, const QuadRational& y) { return !(x < y); }

  QuadRational abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(double(d_));
  }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string rad = b_.str() + "*sqrt" + std::to_string(d_);
    if (a_.is_zero()) return rad;
    return a_.str() + (b_.sign() > 0 ? "+" : "") + rad;
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadRational& q) {
    return os << q.str();
  }

private:
  void normalize() {
    if (d_ < 0) throw std::domain_error("QuadRational: negative radicand");
    if (b_.is_zero() || d_ == 0) {
      if (d_ == 0 && !b_.is_zero()) a_ += b_ * Rational(0);  // sqrt 0 = 0
      b_ = Rational(0);
      d_ = 0;
      return;
    }
    // Pull square factors out of the radicand.
    int s = 1, m = d_;
    for (int p = 2; p * p <= m; ++p) {
      while (m % (p * p) == 0) {
        m /= p * p;
        s *= p;
      }
    }
    if (s > 1) b_ *= Rational(s);
    d_ = m;
    if (d_ == 1) {
      a_ += b_;
      b_ = Rational(0);
      d_ = 0;
    }
  }

  static int unify(const QuadRational& x, const QuadRational& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw std::invalid_argument("QuadRational: mixed radicands " +
                                std::to_string(x.d_) + " and " + std::to_string(y.d_));
  }

  Rational a_, b_;
  int d_;
};

inline QuadRational abs(const QuadRational& q) { return q.abs(); }

/// Exact complex scalar over the quadratic field: re + im*i.
/// This is the "Gaussian rational with a tracked radical" arithmetic used by
/// all exact pipelines; it plugs into Eigen matrices as a custom scalar.
class QuadComplex {
public:
  QuadComplex() : re_(), im_() {}
  QuadComplex(int n) : re_(n), im_() {}
  QuadComplex(long long n) : re_(n), im_() {}
  QuadComplex(const Rational& r) : re_(r), im_() {}
  QuadComplex(const QuadRational& re) : re_(re), im_() {}
  QuadComplex(const QuadRational& re, const QuadRational& im) : re_(re), im_(im) {}

  static QuadComplex i() { return QuadComplex(QuadRational(0), QuadRational(1)); }
  static QuadComplex sqrt_of(long long n) { return QuadComplex(QuadRational::sqrt_of(n)); }
  /// 1/sqrt(n) as an exact value.
  static QuadComplex inv_sqrt_of(long long n) {
    return QuadComplex(QuadRational(Rational(0), Rational(1, n), (int)n));
  }

  const QuadRational& real() const { return re_; }
  const QuadRational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  friend QuadComplex operator+(const QuadComplex& x, const QuadComplex& y) {
    return QuadComplex(x.re_ + y.re_, x.im_ + y.im_);
  }
  friend QuadComplex operator-(const QuadComplex& x, const QuadComplex& y) {
    return QuadComplex(x.re_ - y.re_, x.im_ - y.im_);
  }
  friend QuadComplex operator*(const QuadComplex& x, const QuadComplex& y) {
    return QuadComplex(x.re_ * y.re_ - x.im_ * y.im_,
                       x.re_ * y.im_ + x.im_ * y.re_);
  }
  friend QuadComplex operator/(const QuadComplex& x, const QuadComplex& y) {
    QuadRational n = y.re_ * y.re_ + y.im_ * y.im_;
    if (n.is_zero()) throw std::domain_error("QuadComplex: division by zero");
    QuadComplex num = x * QuadComplex(y.re_, -y.im_);
    return QuadComplex(num.re_ / n, num.im_ / n);
  }
  QuadComplex operator-() const { return QuadComplex(-re_, -im_); }
  QuadComplex& operator+=(const QuadComplex& y) { return *this = *this + y; }
  QuadComplex& operator-=(const QuadComplex& y) { return *this = *this - y; }
  QuadComplex& operator*=(const QuadComplex& y) { return *this = *this * y; }
  QuadComplex& operator/=(const QuadComplex& y) { return *this = *this / y; }

  friend bool operator==(const QuadComplex& x, const QuadComplex& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const QuadComplex& x, const QuadComplex& y) { return !(x == y); }

  QuadRational abs2() const { return re_ * re_ + im_ * im_; }
  bool is_unimodular() const { return abs2() == QuadRational(1); }

  std::complex<double> to_complex() const {
    return {re_.to_double(), im_.to_double()};
  }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.is_zero() ? "" : re_.str();
    s += (s.empty() ? "" : "+") + ("(" + im_.str() + ")i");
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadComplex& z) {
    return os << z.str();
  }

private:
  QuadRational re_, im_;
};

// ADL hooks used by Eigen's numext layer.
inline QuadRational real(const QuadComplex& z) { return z.real(); }
inline QuadRational imag(const QuadComplex& z) { return z.imag(); }
inline QuadComplex conj(const QuadComplex& z) {
  return QuadComplex(z.real(), -z.imag());
}
inline QuadRational abs2(const QuadComplex& z) { return z.abs2(); }
inline QuadRational real(const QuadRational& q) { return q; }
inline QuadRational imag(const QuadRational&) { return QuadRational(0); }
inline QuadRational conj(const QuadRational& q) { return q; }
inline QuadRational abs2(const QuadRational& q) { return q * q; }

}  // namespace cuntz::exact

namespace Eigen {

template <>
struct NumTraits<cuntz::exact::QuadRational> {
  using Self = cuntz::exact::QuadRational;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = Self;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<cuntz::exact::QuadComplex> {
  using Self = cuntz::exact::QuadComplex;
  using Real = cuntz::exact::QuadRational;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = Self;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 160
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace cuntz::exact {

/// Uniform scalar interface for code templated over std::complex<double>
/// and QuadComplex. Exact scalars compare against zero exactly; floating
/// scalars use the caller's tolerance.
template <class Scalar>
struct ScalarOps;

template <>
struct ScalarOps<std::complex<double>> {
  static constexpr bool exact = false;
  using real_type = double;
  static double abs_value(const std::complex<double>& z) { return std::abs(z); }
  static real_type abs2(const std::complex<double>& z) { return std::norm(z); }
  static std::complex<double> to_complex(const std::complex<double>& z) { return z; }
  static bool is_zero(const std::complex<double>& z, double tol) {
    return std::abs(z) <= tol;
  }
  static bool is_one(const real_type& x, double tol) { return std::abs(x - 1.0) <= tol; }
  static bool is_unimodular(const std::complex<double>& z, double tol) {
    return std::abs(std::abs(z) - 1.0) <= tol;
  }
  static std::complex<double> sqrt_of(long long n) { return {std::sqrt(double(n)), 0.0}; }
  static std::complex<double> inv_sqrt_of(long long n) {
    return {1.0 / std::sqrt(double(n)), 0.0};
  }
  static std::complex<double> from_ratio(long long num, long long den) {
    return {double(num) / double(den), 0.0};
  }
};

template <>
struct ScalarOps<QuadComplex> {
  static constexpr bool exact = true;
  using real_type = QuadRational;
  static double abs_value(const QuadComplex& z) {
    return std::sqrt(z.abs2().to_double());
  }
  static real_type abs2(const QuadComplex& z) { return z.abs2(); }
  static std::complex<double> to_complex(const QuadComplex& z) { return z.to_complex(); }
  static bool is_zero(const QuadComplex& z, double) { return z.is_zero(); }
  static bool is_one(const real_type& x, double) { return x == QuadRational(1); }
  static bool is_unimodular(const QuadComplex& z, double) { return z.is_unimodular(); }
  static QuadComplex sqrt_of(long long n) { return QuadComplex::sqrt_of(n); }
  static QuadComplex inv_sqrt_of(long long n) { return QuadComplex::inv_sqrt_of(n); }
  static QuadComplex from_ratio(long long num, long long den) {
    return QuadComplex(Rational(num, den));
  }
};

}  // namespace cuntz::exact
