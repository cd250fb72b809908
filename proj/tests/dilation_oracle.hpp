#pragma once

// Truncated concrete permutative representations, used as independent ground
// truth for the compression conventions (word-operator ordering, intertwiner
// map shape). Basis vectors are indexed by canonical eventually periodic
// words; the isometries act by prepending a letter and truncate to zero past
// the length bound. Compressions of adjoint words to short subspaces are not
// affected by the truncation as long as |I| stays well below the bound.

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "cuntz/fincorr.hpp"
#include "cuntz/words.hpp"

namespace oracle {

using cuntz::fincorr::CMatrix;
using cuntz::fincorr::CVector;
using cuntz::fincorr::Complex;

struct TruncatedRep {
  int alphabet{};
  std::vector<CMatrix> isometries;           // S_i on the truncated basis
  std::map<std::vector<int>, int> index;     // preperiod word -> basis index
  int dimension() const { return (int)isometries[0].rows(); }

  /// Matrix of S_I = S_{i_1} ... S_{i_p} on the truncated space.
  CMatrix word_isometry(const cuntz::words::FiniteWord& word) const {
    CMatrix s = CMatrix::Identity(dimension(), dimension());
    for (std::size_t k = 0; k < word.size(); ++k) s = s * isometries[word[k]];
    return s;
  }

  /// Compression of S_I^* to the subspace spanned by the columns of embed.
  CMatrix compress_adjoint(const cuntz::words::FiniteWord& word,
                           const CMatrix& embed) const {
    return embed.adjoint() * word_isometry(word).adjoint() * embed;
  }
};

/// The permutative representation supported on the orbit of (0)^inf, i.e.
/// the dilation of generic z = (1, 0, ..., 0): basis indexed by canonical
/// preperiods a (empty or not ending in 0) with |a| <= max_len, and
/// S_i delta_a = delta_{ia} (prepending, canonically).
inline TruncatedRep zero_tail_rep(int alphabet, int max_len) {
  TruncatedRep rep;
  rep.alphabet = alphabet;
  std::vector<std::vector<int>> basis;
  // Enumerate canonical preperiods breadth-first.
  basis.push_back({});
  for (std::size_t head = 0; head < basis.size(); ++head) {
    if ((int)basis[head].size() >= max_len) continue;
    for (int l = alphabet - 1; l >= 0; --l) {
      if (basis[head].empty() && l == 0) continue;  // 0.(0)^inf = (0)^inf
      std::vector<int> w{l};
      w.insert(w.end(), basis[head].begin(), basis[head].end());
      basis.push_back(std::move(w));
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) rep.index[basis[i]] = (int)i;
  int n = (int)basis.size();
  for (int l = 0; l < alphabet; ++l) {
    CMatrix s = CMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
      std::vector<int> target;
      if (basis[j].empty() && l == 0) {
        target = {};  // fixed point of the cycle letter
      } else {
        target.push_back(l);
        target.insert(target.end(), basis[j].begin(), basis[j].end());
      }
      auto it = rep.index.find(target);
      if (it != rep.index.end()) s(it->second, j) = 1.0;
    }
    rep.isometries.push_back(std::move(s));
  }
  return rep;
}

/// The non-injective-coding example: two cycle symbols a, b with
/// S_0 delta_a = delta_b, S_0 delta_b = delta_a, and otherwise prepending on
/// words over {0,1} in front of either symbol.
inline TruncatedRep two_symbol_swap_rep(int max_len) {
  TruncatedRep rep;
  rep.alphabet = 2;
  // Basis: (w, tag) with tag 0 = a, 1 = b, |w| <= max_len. Encode as the
  // letter vector of w followed by 8 + tag.
  std::vector<std::pair<std::vector<int>, int>> basis;
  std::vector<std::vector<int>> wordlist{{}};
  for (std::size_t head = 0; head < wordlist.size(); ++head) {
    if ((int)wordlist[head].size() >= max_len) continue;
    for (int l = 1; l >= 0; --l) {
      std::vector<int> w{l};
      w.insert(w.end(), wordlist[head].begin(), wordlist[head].end());
      wordlist.push_back(std::move(w));
    }
  }
  for (const auto& w : wordlist)
    for (int tag = 0; tag < 2; ++tag) basis.emplace_back(w, tag);
  auto key = [](const std::vector<int>& w, int tag) {
    std::vector<int> k = w;
    k.push_back(8 + tag);
    return k;
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    rep.index[key(basis[i].first, basis[i].second)] = (int)i;
  int n = (int)basis.size();
  for (int l = 0; l < 2; ++l) {
    CMatrix s = CMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
      const auto& [w, tag] = basis[j];
      std::vector<int> tw;
      int ttag = tag;
      if (l == 0 && w.empty()) {
        ttag = 1 - tag;  // S_0 swaps the two cycle symbols
      } else {
        tw.push_back(l);
        tw.insert(tw.end(), w.begin(), w.end());
      }
      auto it = rep.index.find(key(tw, ttag));
      if (it != rep.index.end()) s(it->second, j) = 1.0;
    }
    rep.isometries.push_back(std::move(s));
  }
  return rep;
}

}  // namespace oracle
