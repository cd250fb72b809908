#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "cuntz/classify.hpp"
#include "cuntz/filters.hpp"
#include "cuntz/fincorr.hpp"
#include "cuntz/hadamard.hpp"
#include "cuntz/walsh.hpp"
#include "cuntz/words.hpp"

namespace cuntz::io {

using json = nlohmann::json;

/// Round to 15 significant digits so reports are byte-identical across
/// platforms and runs.
double canon_real(double x);

json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const json& j);

/// Exact scalar component: an integer, a small dyadic float, or a string
/// "p/q", "p/q*sqrtD", "-sqrtD", ... Non-dyadic floats are rejected with a
/// pointer at the string syntax.
exact::QuadRational exact_component_from_json(const json& j);
exact::QuadComplex exact_complex_from_json(const json& j);

json finite_word_to_json(const words::FiniteWord& w);
words::FiniteWord finite_word_from_json(const json& j);
json word_to_json(const words::EventuallyPeriodicWord& w);
words::EventuallyPeriodicWord word_from_json(const json& j);

/// Matrices are flat row-major arrays of [re, im] pairs.
json matrix_to_json(const fincorr::CMatrix& m);

json tuple_to_json(const fincorr::MatrixTuple<fincorr::Complex>& t);
fincorr::MatrixTuple<fincorr::Complex> tuple_from_json(const json& j);
fincorr::MatrixTuple<exact::QuadComplex> exact_tuple_from_json(const json& j);

json descriptor_to_json(const classify::AtomicRepDescriptor& d);
classify::AtomicRepDescriptor descriptor_from_json(const json& j);

json bank_to_json(const filters::FilterBank<fincorr::Complex>& bank);
filters::FilterBank<fincorr::Complex> bank_from_json(const json& j);
filters::FilterBank<exact::QuadComplex> exact_bank_from_json(const json& j);

json triple_to_json(const hadamard::HadamardTriple& t);
hadamard::HadamardTriple triple_from_json(const json& j);

/// Walsh matrices are nested: one array of N rows of [re, im] pairs.
walsh::WalshMatrix<fincorr::Complex> walsh_from_json(const json& j);
walsh::WalshMatrix<exact::QuadComplex> exact_walsh_from_json(const json& j);

json rational_to_json(const exact::Rational& r);  // integer, or "p/q" string

json atom_to_json(const fincorr::CycleAtom& atom);
json classification_to_json(const fincorr::ClassificationReport& report);

}  // namespace cuntz::io
