#include "cuntz/words.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cuntz::words {

namespace {

void check_alphabet(int alphabet) {
  if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
}

void check_same_alphabet(int a, int b) {
  if (a != b) throw std::invalid_argument("alphabet mismatch");
}

}  // namespace

FiniteWord::FiniteWord(int alphabet, std::vector<int> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  check_alphabet(alphabet_);
  for (int l : letters_)
    if (l < 0 || l >= alphabet_)
      throw std::invalid_argument("letter " + std::to_string(l) + " out of range [0, " +
                                  std::to_string(alphabet_) + ")");
}

FiniteWord::FiniteWord(int alphabet, const std::string& digits)
    : FiniteWord(alphabet, [&] {
        std::vector<int> ls;
        ls.reserve(digits.size());
        for (char c : digits) {
          if (c < '0' || c > '9') throw std::invalid_argument("non-digit letter");
          ls.push_back(c - '0');
        }
        return ls;
      }()) {}

FiniteWord FiniteWord::concat(const FiniteWord& tail) const {
  check_same_alphabet(alphabet_, tail.alphabet_);
  std::vector<int> ls = letters_;
  ls.insert(ls.end(), tail.letters_.begin(), tail.letters_.end());
  return FiniteWord(alphabet_, std::move(ls));
}

FiniteWord FiniteWord::prefix(std::size_t len) const {
  return FiniteWord(alphabet_, std::vector<int>(letters_.begin(), letters_.begin() + len));
}

FiniteWord FiniteWord::suffix_from(std::size_t start) const {
  return FiniteWord(alphabet_, std::vector<int>(letters_.begin() + start, letters_.end()));
}

std::string FiniteWord::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  bool dotted = alphabet_ > 10;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (dotted && i > 0) s += '.';
    s += std::to_string(letters_[i]);
  }
  return s;
}

bool operator<(const FiniteWord& a, const FiniteWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters_ < b.letters_;
}

FiniteWord rotate(const FiniteWord& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<int> ls(w.letters().begin() + k, w.letters().end());
  ls.insert(ls.end(), w.letters().begin(), w.letters().begin() + k);
  return FiniteWord(w.alphabet(), std::move(ls));
}

FiniteWord primitive_root(const FiniteWord& w) {
  std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = (w[i] == w[i - p]);
    if (ok) return w.prefix(p);
  }
  return w;
}

bool is_primitive(const FiniteWord& w) {
  return !w.empty() && primitive_root(w).size() == w.size();
}

FiniteWord least_rotation(const FiniteWord& w) {
  FiniteWord best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    FiniteWord r = rotate(w, k);
    if (r < best) best = r;
  }
  return best;
}

EventuallyPeriodicWord::EventuallyPeriodicWord(FiniteWord preperiod, FiniteWord cycle)
    : preperiod_(std::move(preperiod)), cycle_(std::move(cycle)) {
  check_same_alphabet(preperiod_.alphabet(), cycle_.alphabet());
  if (cycle_.empty()) throw std::invalid_argument("cycle must be nonempty");
  cycle_ = primitive_root(cycle_);
  // Absorb preperiod letters that only unwind the cycle:
  // a'x . (c'x)^inf  =  a' . (xc')^inf.
  while (!preperiod_.empty() &&
         preperiod_[preperiod_.size() - 1] == cycle_[cycle_.size() - 1]) {
    preperiod_ = preperiod_.prefix(preperiod_.size() - 1);
    cycle_ = rotate(cycle_, cycle_.size() - 1);
  }
}

int EventuallyPeriodicWord::letter_at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return cycle_[(i - preperiod_.size()) % cycle_.size()];
}

std::vector<int> EventuallyPeriodicWord::stream(std::size_t n) const {
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = letter_at(i);
  return s;
}

std::string EventuallyPeriodicWord::str() const {
  std::string s;
  if (!preperiod_.empty()) s += preperiod_.str() + ".";
  return s + "(" + cycle_.str() + ")^inf";
}

EventuallyPeriodicWord pure_cycle(const FiniteWord& c) {
  return EventuallyPeriodicWord(FiniteWord(c.alphabet(), std::vector<int>{}), c);
}

EventuallyPeriodicWord canonicalize(const FiniteWord& preperiod, const FiniteWord& cycle) {
  return EventuallyPeriodicWord(preperiod, cycle);
}

EventuallyPeriodicWord shift(const EventuallyPeriodicWord& w) {
  if (!w.preperiod().empty())
    return EventuallyPeriodicWord(w.preperiod().suffix_from(1), w.cycle());
  return EventuallyPeriodicWord(w.preperiod(), rotate(w.cycle(), 1));
}

EventuallyPeriodicWord prepend(int letter, const EventuallyPeriodicWord& w) {
  if (letter < 0 || letter >= w.alphabet())
    throw std::invalid_argument("letter out of range");
  std::vector<int> pre{letter};
  pre.insert(pre.end(), w.preperiod().letters().begin(), w.preperiod().letters().end());
  return EventuallyPeriodicWord(FiniteWord(w.alphabet(), std::move(pre)), w.cycle());
}

bool in_cylinder(const EventuallyPeriodicWord& w, const Cylinder& c) {
  check_same_alphabet(w.alphabet(), c.prefix.alphabet());
  for (std::size_t i = 0; i < c.prefix.size(); ++i)
    if (w.letter_at(i) != c.prefix[i]) return false;
  return true;
}

std::pair<std::size_t, std::size_t> minimal_period(const EventuallyPeriodicWord& w) {
  return {w.preperiod().size(), w.cycle().size()};
}

bool orbit_equal(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
  check_same_alphabet(a.alphabet(), b.alphabet());
  if (a.cycle().size() != b.cycle().size()) return false;
  for (std::size_t k = 0; k < a.cycle().size(); ++k)
    if (rotate(a.cycle(), k) == b.cycle()) return true;
  return false;
}

EventuallyPeriodicWord orbit_representative(const EventuallyPeriodicWord& w) {
  return pure_cycle(least_rotation(w.cycle()));
}

std::complex<double> character_pairing(const FiniteWord& word, const FiniteWord& character) {
  check_same_alphabet(word.alphabet(), character.alphabet());
  if (word.size() < character.size())
    throw std::invalid_argument("character longer than word");
  double phase = 0.0;
  for (std::size_t k = 0; k < character.size(); ++k)
    phase += double(word[k]) * double(character[k]);
  phase *= 2.0 * std::numbers::pi / double(word.alphabet());
  return {std::cos(phase), std::sin(phase)};
}

std::vector<FiniteWord> enumerate_primitive_words(int alphabet, int length) {
  check_alphabet(alphabet);
  if (length < 1) throw std::invalid_argument("length must be positive");
  // Duval's algorithm: Lyndon words of length exactly `length` are the
  // least rotations of the primitive words, one per rotation class.
  std::vector<FiniteWord> out;
  std::vector<int> word{0};
  while (!word.empty()) {
    if ((int)word.size() == length)
      out.emplace_back(alphabet, word);
    std::vector<int> w = word;
    while ((int)word.size() < length)
      word.push_back(w[(word.size()) % w.size()]);
    while (!word.empty() && word.back() == alphabet - 1) word.pop_back();
    if (!word.empty()) word.back() += 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cuntz::words
