#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "cuntz/words.hpp"

using namespace cuntz::words;

namespace {

FiniteWord fw(int alphabet, const std::string& s) { return FiniteWord(alphabet, s); }
EventuallyPeriodicWord epw(int alphabet, const std::string& pre, const std::string& cyc) {
  return EventuallyPeriodicWord(fw(alphabet, pre), fw(alphabet, cyc));
}

// Oracle: minimal (preperiod, period) of an eventually periodic letter
// stream, found by brute scan. `depth` must comfortably exceed the true
// preperiod plus twice the period.
std::pair<std::size_t, std::size_t> brute_min_period(const std::vector<int>& s) {
  std::size_t depth = s.size();
  for (std::size_t k = 0; k + 2 < depth; ++k)
    for (std::size_t p = 1; k + 2 * p < depth; ++p) {
      bool ok = true;
      for (std::size_t i = k; i + p < depth && ok; ++i) ok = (s[i + p] == s[i]);
      if (ok) return {k, p};
    }
  return {depth, 0};
}

std::mt19937 rng(20260809);

EventuallyPeriodicWord random_word(int alphabet) {
  std::uniform_int_distribution<int> len_pre(0, 4), len_cyc(1, 4),
      letter(0, alphabet - 1);
  std::vector<int> pre(len_pre(rng)), cyc(len_cyc(rng));
  for (int& l : pre) l = letter(rng);
  for (int& l : cyc) l = letter(rng);
  return EventuallyPeriodicWord(FiniteWord(alphabet, pre), FiniteWord(alphabet, cyc));
}

}  // namespace

TEST_CASE("canonicalization of stated forms") {
  CHECK(canonicalize(fw(2, "01"), fw(2, "11")) == epw(2, "0", "1"));
  CHECK(canonicalize(fw(2, ""), fw(2, "0101")) == epw(2, "", "01"));
  CHECK(canonicalize(fw(2, ""), fw(2, "0")) == epw(2, "", "0"));
  CHECK_THROWS_AS(canonicalize(fw(2, "0"), FiniteWord(2, std::vector<int>{})),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteWord(2, std::vector<int>{0, 2}), std::invalid_argument);
}

TEST_CASE("canonicalization preserves the letter stream and is idempotent") {
  for (int trial = 0; trial < 300; ++trial) {
    int alphabet = 2 + trial % 3;
    std::uniform_int_distribution<int> len_pre(0, 5), len_cyc(1, 5),
        letter(0, alphabet - 1);
    std::vector<int> pre(len_pre(rng)), cyc(len_cyc(rng));
    for (int& l : pre) l = letter(rng);
    for (int& l : cyc) l = letter(rng);
    std::size_t depth = 3 * (pre.size() + cyc.size()) + 3;
    // Raw stream of pre followed by repeated cyc.
    std::vector<int> raw(depth);
    for (std::size_t i = 0; i < depth; ++i)
      raw[i] = i < pre.size() ? pre[i] : cyc[(i - pre.size()) % cyc.size()];
    auto w = canonicalize(FiniteWord(alphabet, pre), FiniteWord(alphabet, cyc));
    CHECK(w.stream(depth) == raw);
    auto w2 = canonicalize(w.preperiod(), w.cycle());
    CHECK(w2 == w);
    CHECK(is_primitive(w.cycle()));
    if (!w.preperiod().empty())
      CHECK(w.preperiod()[w.preperiod().size() - 1] !=
            w.cycle()[w.cycle().size() - 1]);
  }
}

TEST_CASE("shift") {
  CHECK(shift(epw(2, "0", "1")) == epw(2, "", "1"));
  CHECK(shift(epw(2, "", "01")) == epw(2, "", "10"));
  CHECK(shift(epw(2, "", "0")) == epw(2, "", "0"));
}

TEST_CASE("prepend, resolved by the stream oracle") {
  CHECK(prepend(2, epw(3, "", "0")) == epw(3, "2", "0"));
  CHECK(prepend(0, epw(2, "", "0")) == epw(2, "", "0"));
  // 1 . (10)^inf has stream 1,1,0,1,0,... which is not purely periodic.
  auto w = prepend(1, epw(2, "", "10"));
  std::vector<int> expected{1, 1, 0, 1, 0, 1, 0, 1, 0};
  CHECK(w.stream(expected.size()) == expected);
  auto [k, p] = brute_min_period(w.stream(24));
  CHECK(w == epw(2, "1", "10"));
  CHECK(minimal_period(w) == std::make_pair(k, p));
  CHECK_THROWS_AS(prepend(2, epw(2, "", "0")), std::invalid_argument);
}

TEST_CASE("shift and prepend are mutually inverse") {
  for (int trial = 0; trial < 200; ++trial) {
    int alphabet = 2 + trial % 3;
    auto w = random_word(alphabet);
    for (int i = 0; i < alphabet; ++i) CHECK(shift(prepend(i, w)) == w);
    CHECK(prepend(w.first_letter(), shift(w)) == w);
  }
}

TEST_CASE("cylinder membership") {
  CHECK(in_cylinder(epw(2, "", "01"), Cylinder(fw(2, "010"))));
  CHECK_FALSE(in_cylinder(epw(2, "", "01"), Cylinder(fw(2, "1"))));
  CHECK(in_cylinder(epw(2, "1", "0"), Cylinder(fw(2, "10"))));
}

TEST_CASE("minimal period agrees with the stream oracle") {
  CHECK(minimal_period(epw(2, "", "0")) == std::make_pair<std::size_t, std::size_t>(0, 1));
  CHECK(minimal_period(epw(2, "", "011")) == std::make_pair<std::size_t, std::size_t>(0, 3));
  // 10.(01)^inf = 1,0,0,1,0,1,...: period 2 holds only from position 2 on.
  auto w = canonicalize(fw(2, "10"), fw(2, "01"));
  auto oracle = brute_min_period(w.stream(30));
  CHECK(minimal_period(w) == oracle);
  CHECK(oracle == std::make_pair<std::size_t, std::size_t>(2, 2));
  for (int trial = 0; trial < 200; ++trial) {
    auto v = random_word(2 + trial % 2);
    CHECK(minimal_period(v) == brute_min_period(v.stream(40)));
  }
}

TEST_CASE("orbit equality") {
  CHECK(orbit_equal(epw(2, "", "01"), epw(2, "1", "10")));
  CHECK_FALSE(orbit_equal(epw(2, "", "0"), epw(2, "", "1")));
  CHECK_FALSE(orbit_equal(epw(2, "", "01"), epw(2, "", "011")));
  // Shifting stays inside the orbit.
  for (int trial = 0; trial < 100; ++trial) {
    auto w = random_word(2 + trial % 3);
    auto s = shift(w);
    CHECK(orbit_equal(w, s));
    CHECK(orbit_equal(w, prepend(trial % w.alphabet(), w)));
  }
}

TEST_CASE("orbit_equal is an equivalence relation") {
  std::vector<EventuallyPeriodicWord> sample;
  for (int i = 0; i < 24; ++i) sample.push_back(random_word(2));
  for (const auto& a : sample) CHECK(orbit_equal(a, a));
  for (const auto& a : sample)
    for (const auto& b : sample) CHECK(orbit_equal(a, b) == orbit_equal(b, a));
  for (const auto& a : sample)
    for (const auto& b : sample)
      for (const auto& c : sample)
        if (orbit_equal(a, b) && orbit_equal(b, c)) CHECK(orbit_equal(a, c));
}

TEST_CASE("orbit representative") {
  CHECK(orbit_representative(epw(2, "1", "10")) == epw(2, "", "01"));
  CHECK(orbit_representative(epw(2, "", "0")) == epw(2, "", "0"));
  CHECK(orbit_representative(epw(3, "", "211")) == epw(3, "", "112"));
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_word(2 + trial % 3);
    auto b = random_word(a.alphabet());
    CHECK(orbit_equal(a, orbit_representative(a)));
    CHECK((orbit_representative(a) == orbit_representative(b)) == orbit_equal(a, b));
  }
}

TEST_CASE("character pairing") {
  using std::numbers::pi;
  CHECK(character_pairing(fw(2, "00"), fw(2, "11")) == std::complex<double>(1.0, 0.0));
  auto m1 = character_pairing(fw(2, "1"), fw(2, "1"));
  CHECK(std::abs(m1 - std::complex<double>(-1.0, 0.0)) < 1e-14);
  auto w3 = character_pairing(fw(3, "12"), fw(3, "10"));
  std::complex<double> expected(std::cos(2 * pi / 3), std::sin(2 * pi / 3));
  CHECK(std::abs(w3 - expected) < 1e-14);
  CHECK_THROWS_AS(character_pairing(fw(2, "1"), fw(3, "1")), std::invalid_argument);
  CHECK_THROWS_AS(character_pairing(fw(2, "1"), fw(2, "11")), std::invalid_argument);
  // Unimodularity on random inputs.
  for (int trial = 0; trial < 50; ++trial) {
    int alphabet = 2 + trial % 4;
    std::uniform_int_distribution<int> letter(0, alphabet - 1);
    std::vector<int> a(4), b(3);
    for (int& l : a) l = letter(rng);
    for (int& l : b) l = letter(rng);
    CHECK(std::abs(std::abs(character_pairing(FiniteWord(alphabet, a),
                                              FiniteWord(alphabet, b))) -
                   1.0) < 1e-14);
  }
}

TEST_CASE("primitive word enumeration") {
  auto p1 = enumerate_primitive_words(2, 1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == fw(2, "0"));
  CHECK(p1[1] == fw(2, "1"));
  auto p2 = enumerate_primitive_words(2, 2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0] == fw(2, "01"));
  auto p3 = enumerate_primitive_words(2, 3);
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == fw(2, "001"));
  CHECK(p3[1] == fw(2, "011"));
}

TEST_CASE("primitive word counts match brute force and the necklace formula") {
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
    if (n > 1) result = -result;
    return result;
  };
  for (int alphabet = 2; alphabet <= 3; ++alphabet)
    for (int p = 1; p <= 6; ++p) {
      // Brute force: count primitive words and classes of rotations.
      long long primitive = 0, total = 1;
      for (int i = 0; i < p; ++i) total *= alphabet;
      std::vector<int> w(p, 0);
      for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < p; ++i) {
          w[i] = int(c % alphabet);
          c /= alphabet;
        }
        if (is_primitive(FiniteWord(alphabet, w))) ++primitive;
      }
      long long formula = 0;
      for (int q = 1; q <= p; ++q)
        if (p % q == 0) {
          long long power = 1;
          for (int i = 0; i < p / q; ++i) power *= alphabet;
          formula += mobius(q) * power;
        }
      auto lyndon = enumerate_primitive_words(alphabet, p);
      CHECK((long long)lyndon.size() * p == primitive);
      CHECK((long long)lyndon.size() == formula / p);
      for (const auto& word : lyndon) {
        CHECK(is_primitive(word));
        CHECK(least_rotation(word) == word);
      }
    }
}
