#include "cuntz/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cuntz::io {

using exact::QuadComplex;
using exact::QuadRational;
using exact::Rational;

double canon_real(double x) {
  if (x == 0.0) return 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

json complex_to_json(std::complex<double> z) {
  return json::array({canon_real(z.real()), canon_real(z.imag())});
}

namespace {
double real_component_from_json(const json& j);
}

std::complex<double> complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex value must be [re, im]");
  return {real_component_from_json(j[0]), real_component_from_json(j[1])};
}

namespace {

Rational parse_fraction(const std::string& s, std::size_t lo, std::size_t hi) {
  std::size_t slash = std::string::npos;
  for (std::size_t i = lo; i < hi; ++i)
    if (s[i] == '/') slash = i;
  auto parse_int = [&](std::size_t a, std::size_t b) {
    if (a >= b) throw std::invalid_argument("bad rational literal '" + s + "'");
    long long v = 0;
    bool neg = false;
    std::size_t i = a;
    if (s[i] == '-' || s[i] == '+') {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= b) throw std::invalid_argument("bad rational literal '" + s + "'");
    for (; i < b; ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("bad rational literal '" + s + "'");
      v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
  };
  if (slash == std::string::npos) return Rational(parse_int(lo, hi));
  return Rational(parse_int(lo, slash), parse_int(slash + 1, hi));
}

/// Grammar: [frac] [* ] "sqrt" D  |  frac, with frac = [-]p[/q].
QuadRational parse_exact_component(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  std::size_t pos = s.find("sqrt");
  if (pos == std::string::npos) return QuadRational(parse_fraction(s, 0, s.size()));
  if (pos + 4 >= s.size())
    throw std::invalid_argument("bad radical literal '" + raw + "'");
  int radicand = 0;
  for (std::size_t i = pos + 4; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad radical literal '" + raw + "'");
    radicand = radicand * 10 + (s[i] - '0');
  }
  std::size_t end = pos;
  if (end > 0 && s[end - 1] == '*') --end;
  Rational coeff(1);
  if (end > 0) {
    if (end == 1 && s[0] == '-')
      coeff = Rational(-1);
    else
      coeff = parse_fraction(s, 0, end);
  }
  return QuadRational(Rational(0), coeff, radicand);
}

/// On the floating-point path, exact string literals are welcome too; they
/// just evaluate numerically.
double real_component_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string())
    return parse_exact_component(j.get<std::string>()).to_double();
  throw std::invalid_argument("complex component must be a number or string");
}

/// Doubles are dyadic rationals; accept only short ones so that a float
/// like 0.7071067811865476 is flagged instead of silently treated as exact.
Rational dyadic_from_double(double x) {
  if (x == std::floor(x) && std::abs(x) < 9e15) return Rational((long long)x);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  long long scaled = (long long)std::ldexp(mant, 40);
  if (std::ldexp((double)scaled, -40) != mant)
    throw std::invalid_argument(
        "float is not a short dyadic rational; use a string like \"1/2*sqrt2\" "
        "for exact input");
  int shift = 40 - exp;
  if (shift <= 0) return Rational(scaled << (-shift));
  if (shift > 62) throw std::invalid_argument("float too small for exact input");
  return Rational(scaled, 1LL << shift);
}

}  // namespace

QuadRational exact_component_from_json(const json& j) {
  if (j.is_string()) return parse_exact_component(j.get<std::string>());
  if (j.is_number_integer()) return QuadRational(Rational(j.get<long long>()));
  if (j.is_number()) return QuadRational(dyadic_from_double(j.get<double>()));
  throw std::invalid_argument("exact component must be a number or string");
}

QuadComplex exact_complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex value must be [re, im]");
  return QuadComplex(exact_component_from_json(j[0]), exact_component_from_json(j[1]));
}

json finite_word_to_json(const words::FiniteWord& w) {
  return json{{"N", w.alphabet()}, {"letters", w.letters()}};
}

words::FiniteWord finite_word_from_json(const json& j) {
  if (!j.contains("N") || !j.contains("letters"))
    throw std::invalid_argument("finite word needs fields N and letters");
  return words::FiniteWord(j.at("N").get<int>(), j.at("letters").get<std::vector<int>>());
}

json word_to_json(const words::EventuallyPeriodicWord& w) {
  return json{{"N", w.alphabet()},
              {"pre", w.preperiod().letters()},
              {"cyc", w.cycle().letters()}};
}

words::EventuallyPeriodicWord word_from_json(const json& j) {
  if (!j.contains("N") || !j.contains("pre") || !j.contains("cyc"))
    throw std::invalid_argument("word needs fields N, pre, cyc");
  int n = j.at("N").get<int>();
  return words::EventuallyPeriodicWord(
      words::FiniteWord(n, j.at("pre").get<std::vector<int>>()),
      words::FiniteWord(n, j.at("cyc").get<std::vector<int>>()));
}

json matrix_to_json(const fincorr::CMatrix& m) {
  json rowmajor = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rowmajor.push_back(complex_to_json(m(i, j)));
  return rowmajor;
}

json tuple_to_json(const fincorr::MatrixTuple<fincorr::Complex>& t) {
  json z = json::array();
  for (const auto& m : t.ops) z.push_back(matrix_to_json(m));
  return json{{"N", t.alphabet}, {"d", t.dim}, {"Z", z}};
}

namespace {

template <class Scalar, class EntryParser>
fincorr::MatrixTuple<Scalar> tuple_from_json_impl(const json& j, EntryParser&& parse) {
  if (!j.contains("N") || !j.contains("d") || !j.contains("Z"))
    throw std::invalid_argument("matrix tuple needs fields N, d, Z");
  int n = j.at("N").get<int>();
  int d = j.at("d").get<int>();
  const json& z = j.at("Z");
  if (!z.is_array() || (int)z.size() != n)
    throw std::invalid_argument("Z must hold one matrix per letter");
  std::vector<fincorr::Matrix<Scalar>> ops;
  for (const json& mj : z) {
    if (!mj.is_array() || (int)mj.size() != d * d)
      throw std::invalid_argument("each matrix must be a flat row-major list of d*d entries");
    fincorr::Matrix<Scalar> m(d, d);
    for (int k = 0; k < d * d; ++k) m(k / d, k % d) = parse(mj[k]);
    ops.push_back(std::move(m));
  }
  return fincorr::MatrixTuple<Scalar>(n, std::move(ops));
}

}  // namespace

fincorr::MatrixTuple<fincorr::Complex> tuple_from_json(const json& j) {
  return tuple_from_json_impl<fincorr::Complex>(j, complex_from_json);
}

fincorr::MatrixTuple<QuadComplex> exact_tuple_from_json(const json& j) {
  return tuple_from_json_impl<QuadComplex>(j, exact_complex_from_json);
}

json descriptor_to_json(const classify::AtomicRepDescriptor& d) {
  json orbits = json::array();
  for (const auto& o : d.orbits()) {
    json spectrum = json::array();
    for (const auto& z : o.spectrum) spectrum.push_back(complex_to_json(z));
    orbits.push_back(
        json{{"rep", word_to_json(o.representative)}, {"mult", o.multiplicity},
             {"spectrum", spectrum}});
  }
  return json{{"N", d.alphabet()}, {"orbits", orbits}};
}

classify::AtomicRepDescriptor descriptor_from_json(const json& j) {
  if (!j.contains("N") || !j.contains("orbits"))
    throw std::invalid_argument("descriptor needs fields N and orbits");
  std::vector<classify::OrbitEntry> orbits;
  for (const json& oj : j.at("orbits")) {
    classify::OrbitEntry o{word_from_json(oj.at("rep")), oj.at("mult").get<int>(), {}};
    for (const json& zj : oj.at("spectrum")) o.spectrum.push_back(complex_from_json(zj));
    orbits.push_back(std::move(o));
  }
  return classify::AtomicRepDescriptor(j.at("N").get<int>(), std::move(orbits));
}

json bank_to_json(const filters::FilterBank<fincorr::Complex>& bank) {
  json fs = json::array();
  for (const auto& f : bank.filters) {
    json coeffs = json::object();
    for (const auto& [k, a] : f.coefficients())
      coeffs[std::to_string(k)] = complex_to_json(a);
    fs.push_back(json{{"coeffs", coeffs}});
  }
  return json{{"N", bank.alphabet}, {"filters", fs}};
}

namespace {

template <class Scalar, class EntryParser>
filters::FilterBank<Scalar> bank_from_json_impl(const json& j, EntryParser&& parse) {
  if (!j.contains("N") || !j.contains("filters"))
    throw std::invalid_argument("filter bank needs fields N and filters");
  int n = j.at("N").get<int>();
  std::vector<filters::LaurentPolynomial<Scalar>> fs;
  for (const json& fj : j.at("filters")) {
    if (!fj.contains("coeffs"))
      throw std::invalid_argument("each filter needs a coeffs object");
    filters::LaurentPolynomial<Scalar> p;
    for (const auto& [key, value] : fj.at("coeffs").items())
      p.set(std::stoi(key), parse(value));
    fs.push_back(std::move(p));
  }
  return filters::FilterBank<Scalar>(n, std::move(fs));
}

}  // namespace

filters::FilterBank<fincorr::Complex> bank_from_json(const json& j) {
  return bank_from_json_impl<fincorr::Complex>(j, complex_from_json);
}

filters::FilterBank<QuadComplex> exact_bank_from_json(const json& j) {
  return bank_from_json_impl<QuadComplex>(j, exact_complex_from_json);
}

json triple_to_json(const hadamard::HadamardTriple& t) {
  return json{{"R", t.scale}, {"B", t.base}, {"L", t.digits}};
}

hadamard::HadamardTriple triple_from_json(const json& j) {
  if (!j.contains("R") || !j.contains("B") || !j.contains("L"))
    throw std::invalid_argument("Hadamard triple needs fields R, B, L");
  return hadamard::HadamardTriple(j.at("R").get<int>(),
                                  j.at("B").get<std::vector<long long>>(),
                                  j.at("L").get<std::vector<long long>>());
}

namespace {

template <class Scalar, class EntryParser>
walsh::WalshMatrix<Scalar> walsh_from_json_impl(const json& j, EntryParser&& parse) {
  if (!j.contains("N") || !j.contains("A"))
    throw std::invalid_argument("Walsh matrix needs fields N and A");
  int n = j.at("N").get<int>();
  const json& a = j.at("A");
  if (!a.is_array() || (int)a.size() != n)
    throw std::invalid_argument("A must hold N rows");
  walsh::Matrix<Scalar> m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!a[i].is_array() || (int)a[i].size() != n)
      throw std::invalid_argument("each row of A must hold N entries");
    for (int c = 0; c < n; ++c) m(i, c) = parse(a[i][c]);
  }
  return walsh::WalshMatrix<Scalar>(n, std::move(m));
}

}  // namespace

walsh::WalshMatrix<fincorr::Complex> walsh_from_json(const json& j) {
  return walsh_from_json_impl<fincorr::Complex>(j, complex_from_json);
}

walsh::WalshMatrix<QuadComplex> exact_walsh_from_json(const json& j) {
  return walsh_from_json_impl<QuadComplex>(j, exact_complex_from_json);
}

json rational_to_json(const Rational& r) {
  if (r.is_integer()) return json(r.num());
  return json(r.str());
}

json atom_to_json(const fincorr::CycleAtom& atom) {
  return json{{"cycle", word_to_json(atom.cycle)},
              {"dim", atom.dim()},
              {"basis", matrix_to_json(atom.basis)},
              {"unitary", matrix_to_json(atom.unitary)}};
}

json classification_to_json(const fincorr::ClassificationReport& report) {
  json atoms = json::array();
  for (const auto& a : report.atoms) atoms.push_back(atom_to_json(a));
  return json{{"atoms", atoms},
              {"atom_span_dimension", report.atom_span_dimension},
              {"purely_atomic",
               json{{"verdict", fincorr::to_string(report.purely_atomic)},
                    {"mass_deficit", canon_real(report.mass_deficit)},
                    {"atomic_mass", canon_real(report.atomic_mass_total)}}},
              {"block_permutative", report.block_permutative},
              {"permutative", report.permutative},
              {"descriptor", descriptor_to_json(report.descriptor)},
              {"cutoff", report.cutoff_used},
              {"max_period", report.max_period_used}};
}

}  // namespace cuntz::io
