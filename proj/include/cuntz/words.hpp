#pragma once

#include <complex>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cuntz::words {

/// A finite word over the alphabet {0, ..., N-1}, possibly empty.
class FiniteWord {
public:
  FiniteWord(int alphabet, std::vector<int> letters);
  /// Convenience: parse single-digit letters, e.g. FiniteWord(2, "011").
  FiniteWord(int alphabet, const std::string& digits);

  int alphabet() const { return alphabet_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  FiniteWord concat(const FiniteWord& tail) const;
  FiniteWord prefix(std::size_t len) const;
  FiniteWord suffix_from(std::size_t start) const;

  std::string str() const;

  friend bool operator==(const FiniteWord& a, const FiniteWord& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const FiniteWord& a, const FiniteWord& b) { return !(a == b); }
  /// Length-then-lexicographic order; used for canonical sorting.
  friend bool operator<(const FiniteWord& a, const FiniteWord& b);

  friend std::ostream& operator<<(std::ostream& os, const FiniteWord& w) {
    return os << w.str();
  }

private:
  int alphabet_;
  std::vector<int> letters_;
};

/// Left rotation by k: i_{k+1} ... i_p i_1 ... i_k.
FiniteWord rotate(const FiniteWord& w, std::size_t k);
/// True iff w is not a power of a strictly shorter word.
bool is_primitive(const FiniteWord& w);
/// Shortest word whose repetition gives w.
FiniteWord primitive_root(const FiniteWord& w);
/// Lexicographically least rotation of w.
FiniteWord least_rotation(const FiniteWord& w);

/// Cylinder set C(I): all infinite words starting with the prefix.
struct Cylinder {
  FiniteWord prefix;
  explicit Cylinder(FiniteWord p) : prefix(std::move(p)) {}
};

/// An eventually periodic infinite word in canonical form
/// (minimal preperiod, primitive cycle). These are exactly the infinite
/// words the toolkit manipulates; equality is structural equality of the
/// canonical pair. Values are immutable.
class EventuallyPeriodicWord {
public:
  /// Canonicalizes (preperiod, cycle): reduces the cycle to its primitive
  /// root and absorbs trailing preperiod letters that merely unwind the
  /// cycle. Throws on an empty cycle or mismatched alphabets.
  EventuallyPeriodicWord(FiniteWord preperiod, FiniteWord cycle);

  int alphabet() const { return preperiod_.alphabet(); }
  const FiniteWord& preperiod() const { return preperiod_; }
  const FiniteWord& cycle() const { return cycle_; }
  bool is_pure_cycle() const { return preperiod_.empty(); }

  /// Letter at 0-based position i of the infinite stream.
  int letter_at(std::size_t i) const;
  int first_letter() const { return letter_at(0); }
  /// First n letters of the stream.
  std::vector<int> stream(std::size_t n) const;

  std::string str() const;

  friend bool operator==(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
    return a.preperiod_ == b.preperiod_ && a.cycle_ == b.cycle_;
  }
  friend bool operator!=(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
    return !(a == b);
  }
  friend bool operator<(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
    if (a.cycle_ != b.cycle_) return a.cycle_ < b.cycle_;
    return a.preperiod_ < b.preperiod_;
  }

  friend std::ostream& operator<<(std::ostream& os, const EventuallyPeriodicWord& w) {
    return os << w.str();
  }

private:
  FiniteWord preperiod_, cycle_;
};

/// The pure cycle word c c c ... (canonicalized).
EventuallyPeriodicWord pure_cycle(const FiniteWord& c);

/// Canonical form of the infinite word described by (preperiod, cycle).
EventuallyPeriodicWord canonicalize(const FiniteWord& preperiod, const FiniteWord& cycle);

/// sigma: drop the first letter.
EventuallyPeriodicWord shift(const EventuallyPeriodicWord& w);
/// sigma_i: prepend the letter i, so shift(prepend(i, w)) == w.
EventuallyPeriodicWord prepend(int letter, const EventuallyPeriodicWord& w);
/// Membership of w in the cylinder C(prefix).
bool in_cylinder(const EventuallyPeriodicWord& w, const Cylinder& c);
/// Smallest (k, p) with shift^{k+p}(w) == shift^k(w); for canonical words
/// this is (|preperiod|, |cycle|).
std::pair<std::size_t, std::size_t> minimal_period(const EventuallyPeriodicWord& w);
/// True iff the two words lie in one orbit under shift and its inverse
/// branches; decided by rotation-equivalence of the canonical cycles.
bool orbit_equal(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b);
/// Canonical orbit label: the pure cycle on the lexicographically least
/// rotation of the canonical cycle.
EventuallyPeriodicWord orbit_representative(const EventuallyPeriodicWord& w);

/// Fourier pairing <I, xi> = prod_k exp(2 pi i I_k xi_k / N). xi is padded
/// with zeros on the right; requires |I| >= |xi| and equal alphabets.
std::complex<double> character_pairing(const FiniteWord& word, const FiniteWord& character);

/// All primitive words of length p over Z_N, one representative per rotation
/// class, each the least rotation, in lexicographic order (Duval's algorithm).
std::vector<FiniteWord> enumerate_primitive_words(int alphabet, int length);

}  // namespace cuntz::words
