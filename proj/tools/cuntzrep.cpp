// Command-line front end: parse JSON inputs, run the analysis pipelines,
// emit deterministic JSON (or a text rendering of the same data).
// Exit codes: 0 analysis ran, 1 malformed input, 2 input fails validation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cuntz/json_io.hpp"

using namespace cuntz;
using io::json;

namespace {

struct CommonOptions {
  std::string input;
  std::string output;
  std::string format = "json";
  double tol = 1e-10;
  bool exact = false;
  bool timings = false;
};

json read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return json::parse(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  json j;
  in >> j;
  return j;
}

void render_text(const json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value[0].is_object() || value[0].is_array()))) {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "- ";
      if (j[i].is_object() || j[i].is_array()) {
        os << "\n";
        render_text(j[i], os, indent + 2);
      } else {
        os << j[i].dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void emit(const json& report, const CommonOptions& opts) {
  std::ostringstream body;
  if (opts.format == "text")
    render_text(report, body, 0);
  else
    body << report.dump(2) << "\n";
  if (opts.output.empty() || opts.output == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(opts.output);
    if (!out) throw std::invalid_argument("cannot open output file '" + opts.output + "'");
    out << body.str();
  }
}

json word_letters(const words::FiniteWord& w) { return json(w.letters()); }

std::vector<words::FiniteWord> all_words_up_to(int alphabet, int max_len) {
  std::vector<words::FiniteWord> out;
  std::vector<std::vector<int>> frontier{{}};
  out.emplace_back(alphabet, std::vector<int>{});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int l = 0; l < alphabet; ++l) {
        auto e = w;
        e.push_back(l);
        out.emplace_back(alphabet, e);
        next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
  return out;
}

int run_fincorr(const CommonOptions& opts, int cutoff, int max_period, int measure_depth) {
  json in = read_input(opts.input);
  json report{{"request",
               {{"subcommand", "analyze-fincorr"},
                {"tol", io::canon_real(opts.tol)},
                {"cutoff", cutoff},
                {"max_period", max_period},
                {"exact", opts.exact}}}};
  auto started = std::chrono::steady_clock::now();

  fincorr::MatrixTuple<fincorr::Complex> tuple(2, {fincorr::CMatrix::Zero(1, 1),
                                                   fincorr::CMatrix::Zero(1, 1)});
  json measures = json::array();
  fincorr::Validation val{};
  if (opts.exact) {
    auto exact_tuple = io::exact_tuple_from_json(in);
    val = fincorr::validate(exact_tuple);
    tuple = fincorr::to_complex(exact_tuple);
    for (const auto& w : all_words_up_to(exact_tuple.alphabet, measure_depth)) {
      auto mu = fincorr::cylinder_measure(exact_tuple, w);
      json exact_entries = json::array();
      fincorr::CMatrix numeric(mu.rows(), mu.cols());
      for (int r = 0; r < mu.rows(); ++r)
        for (int c = 0; c < mu.cols(); ++c) {
          exact_entries.push_back(mu(r, c).str());
          numeric(r, c) = mu(r, c).to_complex();
        }
      measures.push_back(json{{"letters", word_letters(w)},
                              {"measure", io::matrix_to_json(numeric)},
                              {"exact", exact_entries}});
    }
  } else {
    tuple = io::tuple_from_json(in);
    val = fincorr::validate(tuple, opts.tol);
    for (const auto& w : all_words_up_to(tuple.alphabet, measure_depth))
      measures.push_back(json{{"letters", word_letters(w)},
                              {"measure", io::matrix_to_json(
                                              fincorr::cylinder_measure(tuple, w))}});
  }
  report["validation"] = json{{"ok", val.ok}, {"defect", io::canon_real(val.defect)}};
  if (!val.ok) {
    emit(report, opts);
    return 2;
  }
  report["cylinder_measures"] = measures;
  auto classification = fincorr::classify_tuple(tuple, opts.tol, cutoff, max_period);
  report["classification"] = io::classification_to_json(classification);
  if (opts.timings)
    report["timings"] = json{{"total_ms",
                              std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - started)
                                  .count()}};
  emit(report, opts);
  return 0;
}

template <class Scalar>
json certificates_to_json(const std::vector<filters::AtomCertificate<Scalar>>& certs) {
  json out = json::array();
  for (const auto& c : certs)
    out.push_back(json{{"cycle", word_letters(c.cycle)},
                       {"exponents", c.exponents},
                       {"weighted_sum", c.weighted_sum},
                       {"eigen_exponent", c.eigen_exponent},
                       {"eigenvalue", io::complex_to_json(
                                          exact::ScalarOps<Scalar>::to_complex(c.eigenvalue))}});
  return out;
}

template <class Scalar>
int run_qmf_pipeline(const filters::FilterBank<Scalar>& bank, const CommonOptions& opts,
                     int cutoff) {
  json report{{"request",
               {{"subcommand", "analyze-qmf"},
                {"tol", io::canon_real(opts.tol)},
                {"exact", opts.exact}}}};
  auto qmf = filters::qmf_check(bank, opts.exact ? 0.0 : opts.tol);
  json violations = json::array();
  for (const auto& v : qmf.violations)
    violations.push_back(json{{"i", v.i},
                              {"j", v.j},
                              {"exponent", v.exponent},
                              {"magnitude", io::canon_real(v.magnitude)}});
  report["qmf"] = json{{"ok", qmf.ok}, {"violations", violations}};
  if (!qmf.ok) {
    emit(report, opts);
    return 2;
  }
  report["low_pass"] = filters::low_pass_check(bank, opts.exact ? 0.0 : opts.tol);
  auto certs = filters::monomial_atom_search(bank, opts.exact ? 0.0 : opts.tol);
  report["atom_certificates"] = certificates_to_json(certs);

  std::set<int> seed{0};
  for (const auto& c : certs) seed.insert((int)c.eigen_exponent);
  auto closed = filters::invariant_exponent_set(bank, seed);
  report["invariant_exponents"] = json(std::vector<int>(closed.begin(), closed.end()));

  auto compressed = filters::compress_to_exponents(bank, closed);
  fincorr::MatrixTuple<fincorr::Complex> tuple = [&] {
    if constexpr (exact::ScalarOps<Scalar>::exact)
      return fincorr::to_complex(compressed);
    else
      return compressed;
  }();
  report["compressed_tuple"] = io::tuple_to_json(tuple);
  auto classification = fincorr::classify_tuple(tuple, opts.tol, cutoff);
  report["classification"] = io::classification_to_json(classification);
  auto cert_descriptor = filters::descriptor_from_certificates<Scalar>(
      bank.alphabet, certs);
  report["certificate_descriptor"] = io::descriptor_to_json(cert_descriptor);
  report["pipelines_agree"] =
      classify::equivalent(classification.descriptor, cert_descriptor,
                           std::max(opts.tol, 1e-9));
  emit(report, opts);
  return 0;
}

int run_qmf(const CommonOptions& opts, int cutoff) {
  json in = read_input(opts.input);
  if (opts.exact) return run_qmf_pipeline(io::exact_bank_from_json(in), opts, cutoff);
  return run_qmf_pipeline(io::bank_from_json(in), opts, cutoff);
}

int run_hadamard(const CommonOptions& opts, long long bound, int depth) {
  json in = read_input(opts.input);
  auto triple = io::triple_from_json(in);
  json report{{"request",
               {{"subcommand", "hadamard-spectrum"},
                {"bound", bound},
                {"depth", depth}}},
              {"triple", io::triple_to_json(triple)}};
  auto check = hadamard::hadamard_check(triple);
  report["check"] =
      json{{"ok", check.ok}, {"defect", io::canon_real(check.defect)},
           {"detail", check.detail}};
  if (!check.ok) {
    emit(report, opts);
    return 2;
  }
  auto cycles = hadamard::extreme_cycle_search(triple);
  json cycles_json = json::array();
  for (const auto& c : cycles) {
    json points = json::array();
    for (const auto& x : c.points) points.push_back(io::rational_to_json(x));
    auto slice = hadamard::lambda_set(triple, c, bound);
    json elements = json::array();
    std::vector<long long> integer_elements;
    for (const auto& x : slice.elements) {
      elements.push_back(io::rational_to_json(x));
      if (x.is_integer()) integer_elements.push_back(x.num());
    }
    json encodings = json::array();
    for (std::size_t i = 0; i < integer_elements.size() && i < 8; ++i)
      encodings.push_back(
          json{{"lambda", integer_elements[i]},
               {"word", io::word_to_json(hadamard::encode(triple, integer_elements[i]))}});
    json orthogonality = json::array();
    for (std::size_t i = 0; i + 1 < integer_elements.size() && i < 3; ++i)
      orthogonality.push_back(json{
          {"lambda1", integer_elements[i]},
          {"lambda2", integer_elements[i + 1]},
          {"value", io::canon_real(hadamard::fourier_orthogonality(
                        triple, integer_elements[i], integer_elements[i + 1], depth))}});
    cycles_json.push_back(json{{"points", points},
                               {"digits", c.digit_values},
                               {"word", io::word_to_json(hadamard::cycle_word(triple, c))},
                               {"lambda_slice", elements},
                               {"encodings", encodings},
                               {"fourier_orthogonality", orthogonality}});
  }
  report["extreme_cycles"] = cycles_json;
  report["descriptor"] = io::descriptor_to_json(hadamard::descriptor(triple));
  emit(report, opts);
  return 0;
}

template <class Scalar>
int run_walsh_pipeline(const walsh::WalshMatrix<Scalar>& matrix, const CommonOptions& opts,
                       int max_len) {
  json report{{"request",
               {{"subcommand", "walsh"},
                {"max_len", max_len},
                {"exact", opts.exact}}}};
  bool valid = walsh::walsh_matrix_valid(matrix, opts.exact ? 0.0 : opts.tol);
  report["valid"] = valid;
  if (!valid) {
    emit(report, opts);
    return 2;
  }
  auto word_list = walsh::basis_words(matrix.alphabet, max_len);
  json words_json = json::array();
  for (const auto& w : word_list) words_json.push_back(word_letters(w));
  report["basis_words"] = words_json;
  auto gram = walsh::gram_matrix(matrix, word_list);
  double defect = 0;
  for (int r = 0; r < gram.rows(); ++r)
    for (int c = 0; c < gram.cols(); ++c) {
      Scalar expected = (r == c) ? Scalar(1) : Scalar(0);
      defect = std::max(defect,
                        exact::ScalarOps<Scalar>::abs_value(gram(r, c) - expected));
    }
  report["gram"] = json{{"size", (int)word_list.size()},
                        {"is_identity", defect == 0.0 || defect <= opts.tol},
                        {"max_defect", io::canon_real(defect)}};
  report["descriptor"] = io::descriptor_to_json(
      walsh::descriptor(matrix, opts.exact ? 0.0 : opts.tol));
  emit(report, opts);
  return 0;
}

int run_walsh(const CommonOptions& opts, int max_len) {
  json in = read_input(opts.input);
  if (opts.exact) return run_walsh_pipeline(io::exact_walsh_from_json(in), opts, max_len);
  return run_walsh_pipeline(io::walsh_from_json(in), opts, max_len);
}

int run_compare(const CommonOptions& opts, const std::string& other_path) {
  auto a = io::descriptor_from_json(read_input(opts.input));
  auto b = io::descriptor_from_json(read_input(other_path));
  json report{{"request", {{"subcommand", "compare"}, {"tol", io::canon_real(opts.tol)}}},
              {"equivalent", classify::equivalent(a, b, std::max(opts.tol, 1e-9))},
              {"disjoint", classify::disjoint(a, b)},
              {"irreducible", json::array({classify::irreducible(a),
                                           classify::irreducible(b)})},
              {"orbit_counts", json::array({a.orbits().size(), b.orbits().size()})}};
  emit(report, opts);
  return 0;
}

int run_encode(const CommonOptions& opts, long long lambda) {
  auto triple = io::triple_from_json(read_input(opts.input));
  json report{{"request", {{"subcommand", "encode-word"}, {"lambda", lambda}}}};
  try {
    report["encodable"] = true;
    report["word"] = io::word_to_json(hadamard::encode(triple, lambda));
  } catch (const hadamard::NotEncodableError& e) {
    report["encodable"] = false;
    report["failed_at_step"] = e.step;
  }
  emit(report, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis toolkit for atomic representations of Cuntz algebras"};
  app.require_subcommand(1);

  CommonOptions opts;
  int cutoff = 8, max_period = 0, measure_depth = 3, max_len = 3, depth = 30;
  long long bound = 100, lambda = 0;
  std::string other_path;

  auto add_common = [&](CLI::App* sub, bool with_exact = true) {
    sub->add_option("input", opts.input, "input JSON file, or - for stdin")->required();
    sub->add_option("-o,--output", opts.output, "output file (default stdout)");
    sub->add_option("--format", opts.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--tol", opts.tol, "numerical tolerance");
    if (with_exact) sub->add_flag("--exact", opts.exact, "exact-arithmetic input path");
  };

  auto* fincorr_cmd =
      app.add_subcommand("analyze-fincorr", "classify finitely correlated matrix data");
  add_common(fincorr_cmd);
  fincorr_cmd->add_option("--cutoff", cutoff, "preperiod cutoff for atomic mass");
  fincorr_cmd->add_option("--max-period", max_period, "cycle period bound (default d)");
  fincorr_cmd->add_option("--measure-depth", measure_depth,
                          "cylinder-measure table depth");
  fincorr_cmd->add_flag("--timings", opts.timings, "include wall-clock timings");

  auto* qmf_cmd = app.add_subcommand("analyze-qmf", "QMF filter bank atom analysis");
  add_common(qmf_cmd);
  qmf_cmd->add_option("--cutoff", cutoff, "preperiod cutoff for atomic mass");

  auto* hadamard_cmd =
      app.add_subcommand("hadamard-spectrum", "Hadamard triple spectra and encodings");
  add_common(hadamard_cmd, false);
  hadamard_cmd->add_option("--bound", bound, "lambda slice bound");
  hadamard_cmd->add_option("--depth", depth, "Fourier product depth");

  auto* walsh_cmd = app.add_subcommand("walsh", "generalized Walsh representation");
  add_common(walsh_cmd);
  walsh_cmd->add_option("--max-len", max_len, "basis word length bound");

  auto* compare_cmd = app.add_subcommand("compare", "compare two descriptors");
  add_common(compare_cmd, false);
  compare_cmd->add_option("other", other_path, "second descriptor file")->required();

  auto* encode_cmd = app.add_subcommand("encode-word", "digit expansion of an integer");
  add_common(encode_cmd, false);
  encode_cmd->add_option("--lambda", lambda, "integer to encode")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fincorr_cmd->parsed()) return run_fincorr(opts, cutoff, max_period, measure_depth);
    if (qmf_cmd->parsed()) return run_qmf(opts, cutoff);
    if (hadamard_cmd->parsed()) return run_hadamard(opts, bound, depth);
    if (walsh_cmd->parsed()) return run_walsh(opts, max_len);
    if (compare_cmd->parsed()) return run_compare(opts, other_path);
    if (encode_cmd->parsed()) return run_encode(opts, lambda);
  } catch (const validation_error& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 2;
  } catch (const io::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
