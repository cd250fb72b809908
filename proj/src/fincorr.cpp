#include "cuntz/fincorr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cuntz::fincorr {

namespace {

constexpr double kPruneThreshold = 1e-28;

double max_abs(const CMatrix& m) {
  double v = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v = std::max(v, std::abs(m(i, j)));
  return v;
}

/// Kronecker product, column-major vec convention: vec(A V B) = (B^T (x) A) vec(V).
CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

}  // namespace

MatrixTuple<Complex> to_complex(const MatrixTuple<exact::QuadComplex>& t) {
  std::vector<CMatrix> ops;
  ops.reserve(t.ops.size());
  for (const auto& z : t.ops) {
    CMatrix m(t.dim, t.dim);
    for (int i = 0; i < t.dim; ++i)
      for (int j = 0; j < t.dim; ++j) m(i, j) = z(i, j).to_complex();
    ops.push_back(std::move(m));
  }
  return MatrixTuple<Complex>(t.alphabet, std::move(ops));
}

CMatrix compressed_character_operator(const MatrixTuple<Complex>& t,
                                      const words::FiniteWord& character) {
  if (character.alphabet() != t.alphabet) throw std::invalid_argument("alphabet mismatch");
  CMatrix u = CMatrix::Identity(t.dim, t.dim);
  // Peel letters from the right: U(xi) = sum_l <l, xi_1> Z_l^dag U(shift xi) Z_l.
  for (std::size_t pos = character.size(); pos-- > 0;) {
    CMatrix next = CMatrix::Zero(t.dim, t.dim);
    for (int l = 0; l < t.alphabet; ++l) {
      double phase = 2.0 * std::numbers::pi * l * character[pos] / t.alphabet;
      Complex chi(std::cos(phase), std::sin(phase));
      next += chi * (t.ops[l].adjoint() * u * t.ops[l]);
    }
    u = std::move(next);
  }
  return u;
}

CMatrix unitary_part(const CMatrix& w, double tol) {
  const int d = (int)w.rows();
  Eigen::JacobiSVD<CMatrix> wsvd(w);
  if (wsvd.singularValues().size() > 0 && wsvd.singularValues()(0) > 1.0 + tol)
    throw validation_error("unitary_part: operator norm " +
                           std::to_string(wsvd.singularValues()(0)) +
                           " exceeds 1 + tol");
  // K_0 = ker(I - W^dag W); then K_{j+1} = {v in K_j : W v in K_j} until stable.
  CMatrix h = CMatrix::Identity(d, d) - w.adjoint() * w;
  h = (Complex(0.5) * (h + CMatrix(h.adjoint()))).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  int m = 0;
  while (m < d && es.eigenvalues()(m) <= tol) ++m;
  CMatrix basis = es.eigenvectors().leftCols(m);
  while (basis.cols() > 0) {
    CMatrix residual = w * basis - basis * (basis.adjoint() * (w * basis));
    Eigen::JacobiSVD<CMatrix> svd(residual, Eigen::ComputeFullV);
    int keep = 0;
    for (int i = 0; i < (int)basis.cols(); ++i)
      if (i >= svd.singularValues().size() || svd.singularValues()(i) <= tol) ++keep;
    if (keep == (int)basis.cols()) break;
    basis = (basis * svd.matrixV().rightCols(keep)).eval();
  }
  return basis;
}

std::vector<CycleAtom> find_cycle_atoms(const MatrixTuple<Complex>& t, int max_period,
                                        double tol) {
  if (max_period <= 0) max_period = t.dim;
  std::vector<CycleAtom> atoms;
  for (int p = 1; p <= max_period; ++p) {
    for (const auto& primitive : words::enumerate_primitive_words(t.alphabet, p)) {
      for (std::size_t k = 0; k < primitive.size(); ++k) {
        words::FiniteWord cyc = words::rotate(primitive, k);
        CMatrix w = word_operator(t, cyc);
        CMatrix basis = unitary_part(w, tol);
        if (basis.cols() == 0) continue;
        CMatrix u = basis.adjoint() * w * basis;
        atoms.push_back({words::pure_cycle(cyc), std::move(basis), std::move(u)});
      }
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const CycleAtom& a, const CycleAtom& b) { return a.cycle < b.cycle; });
  return atoms;
}

std::vector<double> atomic_mass_shells(const MatrixTuple<Complex>& t,
                                       std::span<const CycleAtom> atoms, const CVector& v,
                                       int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  std::vector<double> shells(cutoff + 1, 0.0);
  if (atoms.empty()) return shells;
  // Each orbit point is counted once, in canonical form: preperiod empty or
  // ending in a letter different from the last letter of the cycle.
  std::vector<int> last_letter(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& c = atoms[i].cycle.cycle();
    last_letter[i] = c[c.size() - 1];
  }
  struct Node {
    CVector u;  // W_a v
    int depth;
    int last;  // last letter of the preperiod a, -1 for the empty word
  };
  std::vector<Node> stack{{v, 0, -1}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (node.last >= 0 && node.last == last_letter[i]) continue;
      shells[node.depth] += (atoms[i].basis.adjoint() * node.u).squaredNorm();
    }
    if (node.depth == cutoff) continue;
    for (int l = 0; l < t.alphabet; ++l) {
      CVector next = t.ops[l] * node.u;
      if (next.squaredNorm() <= kPruneThreshold) continue;
      stack.push_back({std::move(next), node.depth + 1, l});
    }
  }
  return shells;
}

double atomic_mass(const MatrixTuple<Complex>& t, std::span<const CycleAtom> atoms,
                   const CVector& v, int cutoff) {
  auto shells = atomic_mass_shells(t, atoms, v, cutoff);
  double total = 0;
  for (double s : shells) total += s;
  return total;
}

std::string to_string(AtomicVerdict v) {
  switch (v) {
    case AtomicVerdict::Proven: return "proven";
    case AtomicVerdict::Numerical: return "numerical";
    case AtomicVerdict::Refuted: return "refuted";
  }
  return "?";
}

classify::AtomicRepDescriptor descriptor_from_atoms(int alphabet,
                                                    std::span<const CycleAtom> atoms) {
  // One orbit per rotation class; the atom at the lexicographically least
  // rotation supplies multiplicity and spectrum. The descriptor records the
  // spectrum of S_I restricted to the atom, the adjoint of the stored
  // compression of W_I = S_I^*.
  std::vector<classify::OrbitEntry> orbits;
  for (const auto& atom : atoms) {
    if (words::orbit_representative(atom.cycle) != atom.cycle) continue;
    Eigen::ComplexEigenSolver<CMatrix> es(atom.unitary.adjoint());
    std::vector<Complex> spectrum(es.eigenvalues().data(),
                                  es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(spectrum.begin(), spectrum.end(), [](Complex a, Complex b) {
      return std::arg(a) != std::arg(b) ? std::arg(a) < std::arg(b)
                                        : std::abs(a) < std::abs(b);
    });
    orbits.push_back({atom.cycle, atom.dim(), std::move(spectrum)});
  }
  return classify::AtomicRepDescriptor(alphabet, std::move(orbits));
}

namespace {

bool block_permutative(const MatrixTuple<Complex>& t, std::span<const CycleAtom> atoms,
                       double tol) {
  double slack = std::max(tol, 1e-9);
  for (const auto& atom : atoms) {
    for (int l = 0; l < t.alphabet; ++l) {
      CMatrix image = t.ops[l] * atom.basis;
      if (max_abs(image) <= slack) continue;  // Z_l kills this atom
      CMatrix gram = image.adjoint() * image;
      if (max_abs(gram - CMatrix::Identity(image.cols(), image.cols())) > slack)
        return false;
      bool landed = false;
      for (const auto& target : atoms) {
        if (target.dim() != atom.dim()) continue;
        CMatrix residual = image - target.basis * (target.basis.adjoint() * image);
        if (max_abs(residual) <= slack) {
          landed = true;
          break;
        }
      }
      if (!landed) return false;
    }
  }
  return true;
}

}  // namespace

ClassificationReport classify_tuple(const MatrixTuple<Complex>& t, double tol, int cutoff,
                                    int max_period) {
  Validation val = validate(t, tol);
  if (!val.ok)
    throw validation_error("matrix tuple fails sum Z^dag Z = I (defect " +
                           std::to_string(val.defect) + ")");
  if (max_period <= 0) max_period = t.dim;
  std::vector<CycleAtom> atoms = find_cycle_atoms(t, max_period, tol);

  int span = 0;
  for (const auto& a : atoms) span += a.dim();

  bool blocks = !atoms.empty() && block_permutative(t, atoms, tol);
  bool proven = (span == t.dim) && blocks;

  std::vector<double> shells(cutoff + 1, 0.0);
  for (int i = 0; i < t.dim; ++i) {
    CVector e = CVector::Zero(t.dim);
    e(i) = 1.0;
    auto s = atomic_mass_shells(t, atoms, e, cutoff);
    for (int k = 0; k <= cutoff; ++k) shells[k] += s[k];
  }
  double mass = 0;
  for (double s : shells) mass += s;
  double deficit = t.dim - mass;

  AtomicVerdict verdict;
  if (proven) {
    verdict = AtomicVerdict::Proven;
  } else if (atoms.empty()) {
    // The period-<=d search is complete, so the dilation has no atoms at all.
    verdict = AtomicVerdict::Refuted;
    deficit = t.dim;
  } else if (deficit <= tol * t.dim) {
    verdict = AtomicVerdict::Numerical;
  } else if (shells[cutoff] <= tol) {
    // Mass stabilized strictly below d.
    verdict = AtomicVerdict::Refuted;
  } else {
    verdict = AtomicVerdict::Numerical;
  }

  auto descriptor = descriptor_from_atoms(t.alphabet, atoms);
  bool atomic = verdict == AtomicVerdict::Proven ||
                (verdict == AtomicVerdict::Numerical && deficit <= tol * t.dim);
  bool perm = atomic && classify::permutative(descriptor, std::max(tol, 1e-9));

  ClassificationReport report{std::move(atoms),
                              span,
                              verdict,
                              deficit,
                              mass,
                              blocks,
                              perm,
                              std::move(descriptor),
                              cutoff,
                              max_period};
  return report;
}

std::vector<CMatrix> intertwiner_space(const MatrixTuple<Complex>& a,
                                       const MatrixTuple<Complex>& b, double tol) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");
  const int da = a.dim, db = b.dim, n = da * db;
  // The map V -> sum_i Zb_i^dag V Za_i on (db x da) matrices, vectorized
  // column-major: sum_i (Za_i^T (x) Zb_i^dag).
  CMatrix map = CMatrix::Zero(n, n);
  for (int i = 0; i < a.alphabet; ++i)
    map += kron(a.ops[i].transpose(), b.ops[i].adjoint());
  map -= CMatrix::Identity(n, n);
  Eigen::JacobiSVD<CMatrix> svd(map, Eigen::ComputeFullV);
  double scale = svd.singularValues().size() ? std::max(1.0, svd.singularValues()(0)) : 1.0;
  std::vector<CMatrix> basis;
  for (int i = 0; i < n; ++i) {
    if (svd.singularValues()(i) > tol * scale) continue;
    CMatrix v(db, da);
    for (int c = 0; c < da; ++c) v.col(c) = svd.matrixV().col(i).segment(c * db, db);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cuntz::fincorr
