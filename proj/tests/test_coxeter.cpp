#include <doctest.h>

#include <random>
#include <set>

#include "coxkit/io.hpp"
#include "coxkit/systems.hpp"
#include "oracles.hpp"

using namespace coxkit;

namespace {

Word random_word(std::mt19937& rng, std::size_t rank, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(rank) - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Generator>(pick(rng)));
  return w;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(type_a(2)->elements().size() == 6);
  CHECK(type_a(3)->elements().size() == 24);
  CHECK(type_a(4)->elements().size() == 120);
  CHECK(type_b(2)->elements().size() == 8);
  CHECK(type_b(3)->elements().size() == 48);
  for (int m = 2; m <= 7; ++m) CHECK(dihedral(m)->elements().size() == static_cast<std::size_t>(2 * m));
  CHECK_FALSE(free_coxeter(2)->is_finite());
  CHECK_FALSE(right_angled_path3()->is_finite());
}

TEST_CASE("symmetric group agrees with permutations") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto sys = type_a(n);
    std::set<oracle::Perm> perms;
    for (const Element& x : sys->elements()) {
      const oracle::Perm p = oracle::perm_of(x);
      perms.insert(p);
      CHECK(oracle::inversions(p) == x.length());
      for (Generator s = 0; s < n; ++s) {
        CHECK(sys->is_descent(x, s, Side::Right) == (p[s] > p[s + 1]));
        const oracle::Perm pinv = oracle::perm_inverse(p);
        CHECK(sys->is_descent(x, s, Side::Left) == (pinv[s] > pinv[s + 1]));
      }
      CHECK(oracle::perm_of(sys->inverse(x)) == oracle::perm_inverse(p));
    }
    CHECK(perms.size() == sys->elements().size());
  }
}

TEST_CASE("normal form of random words") {
  std::mt19937 rng(7);
  const auto sys = type_a(4);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, 4, 1 + i % 14);
    const Element x = sys->normal_form(w);
    CHECK(oracle::perm_of(x) == oracle::perm_of(w, 4));
    CHECK(oracle::inversions(oracle::perm_of(w, 4)) == x.length());
    // Canonical words are shortlex-least among reduced words.
    const auto reduced = sys->reduced_words(x);
    CHECK(std::find(reduced.begin(), reduced.end(), x.word()) != reduced.end());
    CHECK(*std::min_element(reduced.begin(), reduced.end()) == x.word());
  }
}

TEST_CASE("products match permutation composition") {
  std::mt19937 rng(11);
  const auto sys = type_a(3);
  const auto all = sys->elements();
  for (const Element& u : all)
    for (const Element& v : all)
      CHECK(oracle::perm_of(sys->multiply(u, v)) == oracle::perm_compose(oracle::perm_of(u), oracle::perm_of(v)));
  const Element s = sys->parse_element("s1");
  CHECK(sys->multiply(s, s).is_identity());
  (void)rng;
}

TEST_CASE("dihedral examples") {
  const auto sys = dihedral(3);
  CHECK(sys->format(sys->multiply(sys->parse_element("s t"), sys->parse_element("s"))) == "s t s");
  CHECK(sys->format(sys->parse_element("t s t")) == "s t s");
  CHECK(sys->format(sys->longest_element(sys->all_generators())) == "s t s");
  CHECK(sys->parse_element("s s").is_identity());
  CHECK(sys->format(sys->identity()) == "e");
  CHECK(sys->parse_element("e").is_identity());
  CHECK(sys->parse_element("").is_identity());
  const auto d4 = dihedral(4);
  CHECK(d4->longest_element(d4->all_generators()).length() == 4);
}

TEST_CASE("free group words are already reduced unless they cancel") {
  const auto sys = free_coxeter(2);
  CHECK(sys->parse_element("a b a b a").length() == 5);
  CHECK(sys->parse_element("a b b a").is_identity());
  CHECK(sys->bruhat_ball(3).size() == 1 + 2 + 2 + 2);
  CHECK_THROWS_AS(sys->longest_element(sys->all_generators()), InfiniteParabolic);
}

TEST_CASE("descents and support") {
  const auto sys = type_a(3);
  const Element x = sys->parse_element("s1 s2");
  CHECK(sys->descents(x, Side::Right) == GeneratorSet::of({1}));
  CHECK(sys->descents(x, Side::Left) == GeneratorSet::of({0}));
  CHECK(sys->support(x) == GeneratorSet::of({0, 1}));
}

TEST_CASE("connected components") {
  const auto sys = type_a(4);
  const auto parts = sys->connected_components(GeneratorSet::of({0, 1, 3}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == GeneratorSet::of({0, 1}));
  CHECK(parts[1] == GeneratorSet::of({3}));
}

TEST_CASE("resource caps fail loudly") {
  Limits limits;
  limits.ball_cap = 50;
  const auto sys = make_system({"a", "b", "c"}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, limits);
  CHECK_THROWS_AS(sys->bruhat_ball(10), ResourceLimit);
  CHECK_FALSE(sys->parabolic_is_finite(sys->all_generators()));
}

TEST_CASE("system documents") {
  const auto sys = parse_system(R"({"generators": ["s", "t"], "matrix": [[1, 3], [3, 1]]})");
  CHECK(sys->rank() == 2);
  CHECK(parse_system(system_to_json(*sys))->matrix() == sys->matrix());
  CHECK_THROWS_AS(parse_system("{"), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"generators": ["s"], "matrix": [[1, 3], [3, 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"generators": ["s", "t"], "matrix": [[1, 3], [4, 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"generators": ["s", "t"], "matrix": [[1, 1], [1, 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"generators": ["s", "s"], "matrix": [[1, 3], [3, 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"generators": ["e", "t"], "matrix": [[1, 3], [3, 1]]})"), ParseError);
  CHECK_THROWS_AS(sys->parse_word("s u"), ParseError);
}

TEST_CASE("generator sets") {
  const auto sys = type_a(3);
  CHECK(sys->parse_set("s1,s3") == GeneratorSet::of({0, 2}));
  CHECK(sys->parse_set("{s1, s3}") == GeneratorSet::of({0, 2}));
  CHECK(sys->parse_set("") == GeneratorSet{});
  CHECK(sys->format_set(GeneratorSet::of({0, 2})) == "s1,s3");
  CHECK(all_subsets(3).size() == 8);
}

TEST_CASE("elements of different systems do not mix") {
  const auto a = type_a(2);
  const auto b = type_a(2);
  CHECK_THROWS_AS(a->multiply(a->generator(0), b->generator(0)), MixedSystems);
}
