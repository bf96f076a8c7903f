#include <doctest.h>

#include "coxkit/parabolic.hpp"
#include "coxkit/systems.hpp"
#include "oracles.hpp"

using namespace coxkit;

TEST_CASE("right projection sorts blocks of positions") {
  for (std::size_t n : {3u, 4u}) {
    const auto sys = type_a(n);
    for (GeneratorSet J : all_subsets(n))
      for (const Element& w : sys->elements()) {
        const ParabolicFactorization f = factor(w, J, Side::Right);
        CHECK(oracle::perm_of(f.quotient_part) == oracle::block_sort(oracle::perm_of(w), J));
        CHECK(sys->multiply(f.quotient_part, f.subgroup_part) == w);
        CHECK(f.quotient_part.length() + f.subgroup_part.length() == w.length());
        CHECK(sys->support(f.subgroup_part).is_subset_of(J));
        CHECK((sys->descents(f.quotient_part, Side::Right) & J).empty());
      }
  }
}

TEST_CASE("left projection through inverses") {
  const auto sys = type_a(3);
  for (GeneratorSet J : all_subsets(3))
    for (const Element& w : sys->elements()) {
      const ParabolicFactorization f = factor(w, J, Side::Left);
      CHECK(sys->multiply(f.subgroup_part, f.quotient_part) == w);
      CHECK(f.quotient_part.length() + f.subgroup_part.length() == w.length());
      CHECK((sys->descents(f.quotient_part, Side::Left) & J).empty());
      const oracle::Perm inv = oracle::perm_inverse(oracle::perm_of(w));
      CHECK(oracle::perm_of(f.quotient_part) == oracle::perm_inverse(oracle::block_sort(inv, J)));
    }
}

TEST_CASE("projection examples") {
  const auto sys = dihedral(3);
  const GeneratorSet s = sys->parse_set("s");
  CHECK(sys->format(proj(sys->parse_element("s t s"), s)) == "s t");
  CHECK(sys->format(proj(sys->parse_element("s t"), s, Side::Left)) == "t");
  CHECK(proj(sys->parse_element("s"), s).is_identity());
  CHECK(sys->format(proj(sys->parse_element("t"), s)) == "t");
}

TEST_CASE("projections are idempotent, regressive and monotone") {
  const auto sys = type_b(3);
  const auto all = sys->elements();
  for (GeneratorSet J : all_subsets(3))
    for (const Element& w : all) {
      const Element p = proj(w, J);
      CHECK(proj(p, J) == p);
      CHECK(p.length() <= w.length());
    }
}

TEST_CASE("quotient enumeration") {
  const auto sys = dihedral(3);
  const auto q = quotient_enumerate(*sys, sys->parse_set("t"), 3);
  REQUIRE(q.size() == 3);
  CHECK(sys->format(q[0]) == "e");
  CHECK(sys->format(q[1]) == "s");
  CHECK(sys->format(q[2]) == "t s");
  const auto free = free_coxeter(2);
  CHECK(quotient_enumerate(*free, free->parse_set("a"), 4).size() == 5);
}

TEST_CASE("commutation criterion against exhaustive comparison") {
  for (const auto& sys : {type_a(2), type_a(3), type_b(3), dihedral(4)}) {
    const auto all = sys->elements();
    for (GeneratorSet I : all_subsets(sys->rank()))
      for (GeneratorSet J : all_subsets(sys->rank())) {
        bool commute = true;
        for (const Element& w : all)
          if (proj(proj(w, J), I) != proj(proj(w, I), J)) commute = false;
        CHECK(commute_exact(*sys, I, J) == commute);
      }
  }
}

TEST_CASE("non-commuting pairs in infinite systems have witnesses") {
  for (const auto& sys : {free_coxeter(3), right_angled_path3(), right_angled_commuting_pair()}) {
    for (GeneratorSet I : all_subsets(sys->rank()))
      for (GeneratorSet J : all_subsets(sys->rank())) {
        const auto w = find_noncommuting_witness(*sys, I, J, 6);
        if (commute_exact(*sys, I, J)) {
          CHECK_FALSE(w.has_value());
        } else {
          REQUIRE(w.has_value());
          CHECK(proj(proj(*w, J), I) != proj(proj(*w, I), J));
        }
      }
  }
}

TEST_CASE("sets_commute") {
  const auto sys = type_a(3);
  CHECK(sets_commute(*sys, sys->parse_set("s1"), sys->parse_set("s3")));
  CHECK_FALSE(sets_commute(*sys, sys->parse_set("s1"), sys->parse_set("s2")));
}
