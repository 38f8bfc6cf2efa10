#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "braces/cayley.hpp"
#include "braces/core.hpp"
#include "braces/series.hpp"

namespace {

using namespace braces;

std::vector<std::uint32_t> sizes(const std::vector<AdditiveSubgroup>& chain) {
  std::vector<std::uint32_t> out;
  for (const auto& s : chain) out.push_back(s.size());
  return out;
}

}  // namespace

TEST_CASE("left and star series of quotient braces", "[series]") {
  SECTION("d3 mod 5: left dies in 3 stages, star in 4") {
    CayleyBrace q = build_quotient({QuotientFamily::d3, 5});
    SeriesReport r = classify_NS(q);
    CHECK(sizes(r.left_chain) == std::vector<std::uint32_t>{125, 25, 1});
    CHECK(sizes(r.star_chain) == std::vector<std::uint32_t>{125, 25, 5, 1});
    REQUIRE(r.k.has_value());
    REQUIRE(r.n.has_value());
    CHECK(*r.k == 3);
    CHECK(*r.n == 4);
    CHECK(r.nilpotent_within_bound());
  }

  SECTION("d3 mod 3 and mod 7 share the (4,3) pattern") {
    for (std::int64_t m : {3, 7}) {
      INFO("m = " << m);
      SeriesReport r = classify_NS(build_quotient({QuotientFamily::d3, m}));
      CHECK(*r.k == 3);
      CHECK(*r.n == 4);
    }
  }

  SECTION("d2 mod 3: both series die in 3 stages") {
    CayleyBrace q = build_quotient({QuotientFamily::d2, 3});
    SeriesReport r = classify_NS(q);
    CHECK(sizes(r.left_chain) == std::vector<std::uint32_t>{9, 3, 1});
    CHECK(sizes(r.star_chain) == std::vector<std::uint32_t>{9, 3, 1});
    CHECK(*r.k == 3);
    CHECK(*r.n == 3);
  }

  SECTION("trivial braces: one star kills everything") {
    SeriesReport r = classify_NS(build_trivial_cyclic(6));
    CHECK(sizes(r.left_chain) == std::vector<std::uint32_t>{6, 1});
    CHECK(*r.k == 2);
    CHECK(*r.n == 2);
    SeriesReport one = classify_NS(build_trivial_cyclic(1));
    CHECK(*one.k == 1);
    CHECK(*one.n == 1);
  }

  SECTION("max_depth truncation leaves the class open") {
    CayleyBrace q = build_quotient({QuotientFamily::d3, 5});
    SeriesReport r = classify_NS(q, 2);
    CHECK(r.left_chain.size() == 2);
    CHECK_FALSE(r.k.has_value());
    CHECK_FALSE(r.nilpotent_within_bound());
  }
}

TEST_CASE("series stages are concrete subgroups", "[series]") {
  CayleyBrace q = build_quotient({QuotientFamily::d3, 3});
  auto chain = left_series(q);
  REQUIRE(chain.size() == 3);

  // A^2 consists exactly of the elements with first coordinate zero.
  const AdditiveSubgroup& a2 = chain[1];
  CHECK(a2.size() == 9);
  for (std::uint32_t e : a2.members) CHECK(q.format(e).substr(0, 3) == "(0,");

  // Every stage is closed under addition and negation.
  for (const auto& stage : chain)
    for (std::uint32_t x : stage.members) {
      CHECK(stage.contains(q.neg(x)));
      for (std::uint32_t y : stage.members) CHECK(stage.contains(q.add(x, y)));
    }

  // Stage i+1 = A * stage i, recomputed independently.
  AdditiveSubgroup whole = full_subgroup(q);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    AdditiveSubgroup next = star_subgroup(q, whole, chain[i]);
    CHECK(next.members == chain[i + 1].members);
  }
}

TEST_CASE("ideal tests", "[series]") {
  CayleyBrace q = build_quotient({QuotientFamily::d3, 3});

  SECTION("A^2 is an ideal") {
    AdditiveSubgroup a2 = left_series(q)[1];
    CHECK(is_left_ideal(q, a2).passed());
    CHECK(is_ideal(q, a2).passed());
  }

  SECTION("the whole brace and the zero subgroup are ideals") {
    CHECK(is_ideal(q, full_subgroup(q)).passed());
    CHECK(is_ideal(q, make_subgroup(q, {})).passed());
  }

  SECTION("<a2> is a left ideal but not an ideal") {
    std::uint32_t a = *q.generator();
    std::uint32_t a2 = star(q, a, a);
    REQUIRE(q.format(a2) == "(0,1,0)");
    AdditiveSubgroup L = make_subgroup(q, {a2});
    CHECK(L.members == std::vector<std::uint32_t>{0, 3, 6});

    CHECK(is_left_ideal(q, L).passed());

    auto res = is_ideal(q, L);
    REQUIRE_FALSE(res.passed());
    CHECK(res.detail == "x*a not in L");
    REQUIRE(res.witness.size() == 2);
    CHECK(q.format(res.witness[0]) == "(1,0,0)");
    CHECK(q.format(res.witness[1]) == "(0,1,0)");
    // Replay: (0,1,0) * (1,0,0) = (0,0,1), outside <a2>.
    CHECK(q.format(star(q, res.witness[1], res.witness[0])) == "(0,0,1)");
  }

  SECTION("<a1> in d2 mod 3 is not even a left ideal") {
    CayleyBrace p = build_quotient({QuotientFamily::d2, 3});
    AdditiveSubgroup L = make_subgroup(p, {*p.generator()});
    CHECK(L.members == std::vector<std::uint32_t>{0, 1, 2});
    auto res = is_left_ideal(p, L);
    REQUIRE_FALSE(res.passed());
    CHECK(res.detail == "a*x not in L");
    CHECK(res.witness == std::vector<std::uint32_t>{1, 1});
  }
}

TEST_CASE("subbrace closure", "[series]") {
  SECTION("the generator of a quotient generates everything") {
    CayleyBrace q = build_quotient({QuotientFamily::d2, 3});
    AdditiveSubgroup br = subbrace_closure(q, {*q.generator()});
    CHECK(br.size() == q.size());
  }

  SECTION("closures in the trivial brace are additive subgroups") {
    CayleyBrace t = build_trivial_cyclic(12);
    CHECK(subbrace_closure(t, {4}).members ==
          std::vector<std::uint32_t>{0, 4, 8});
    CHECK(subbrace_closure(t, {}).members == std::vector<std::uint32_t>{0});
    CHECK(subbrace_closure(t, {5}).size() == 12);
  }

  SECTION("a2 and a3 together reach only the k1 = 0 plane") {
    CayleyBrace q = build_quotient({QuotientFamily::d3, 3});
    std::uint32_t a = *q.generator();
    std::uint32_t a2 = star(q, a, a);
    std::uint32_t a3 = star(q, a2, a);
    AdditiveSubgroup br = subbrace_closure(q, {a2, a3});
    CHECK(br.size() == 9);
    for (std::uint32_t e : br.members)
      CHECK(q.format(e).substr(0, 3) == "(0,");
  }
}

TEST_CASE("classification of the free braces", "[series]") {
  SECTION("free D2 is N_S(3,3)") {
    auto c = classify_free(D2Brace(), Sampled{2000, 123});
    CHECK(c.family == "free_d2");
    REQUIRE(c.conclusive());
    CHECK(*c.n == 3);
    CHECK(*c.k == 3);
    REQUIRE(c.evidence.size() == 4);
    CHECK(c.evidence[0].name == "generator-sequence");
    CHECK(c.evidence[1].name == "star-lands-in-A2");
    CHECK(c.evidence[2].name == "A-star-A2-vanishes");
    CHECK(c.evidence[3].name == "A2-star-A-vanishes");
    for (const auto& e : c.evidence) {
      INFO(e.name);
      CHECK(e.passed());
    }
  }

  SECTION("free D3 is N_S(4,3)") {
    auto c = classify_free(D3Brace(), Sampled{2000, 123});
    CHECK(c.family == "free_d3");
    REQUIRE(c.conclusive());
    CHECK(*c.n == 4);
    CHECK(*c.k == 3);
    REQUIRE(c.evidence.size() == 5);
    CHECK(c.evidence[3].name == "A2-star-A-lands-in-A3");
    CHECK(c.evidence[4].name == "A3-star-A-vanishes");
    for (const auto& e : c.evidence) {
      INFO(e.name);
      CHECK(e.passed());
    }
  }

  SECTION("classification records the seed it used") {
    auto c = classify_free(D2Brace(), Sampled{50, 77});
    for (std::size_t i = 1; i < c.evidence.size(); ++i) {
      REQUIRE(c.evidence[i].seed.has_value());
      CHECK(*c.evidence[i].seed == 77);
      CHECK(c.evidence[i].tuples == 50);
    }
  }
}
