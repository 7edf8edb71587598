#include "doctest.h"

#include "generator.hpp"
#include "slc/errors.hpp"
#include "slc/metrics.hpp"
#include "slc/parser.hpp"
#include "slc/reduction.hpp"

using namespace slc;

TEST_CASE("generator output is well-formed and varied") {
  testing::Generator g(5);
  std::uint64_t ranked = 0, deep = 0;
  for (int i = 0; i < 500; ++i) {
    auto t = g.well_formed_up_to(40);
    auto info = analyze(t);
    REQUIRE(info.is_well_formed);
    CHECK(info.size <= 40);
    ranked += info.rank >= 2;
    deep += info.depth >= 2;
  }
  CHECK(ranked > 50);
  CHECK(deep > 50);
}

TEST_CASE("print and parse round trip") {
  testing::Generator g(6);
  for (int i = 0; i < 2000; ++i) {
    auto t = g.pseudo(1 + g.below(30));
    auto text = print(t);
    CAPTURE(text);
    CHECK(structurally_equal(parse_term(text), t));
  }
}

TEST_CASE("erase_markers is idempotent, expand_plain_let keeps free variables") {
  testing::Generator g(7);
  for (int i = 0; i < 1000; ++i) {
    auto t = g.pseudo(1 + g.below(30));
    auto e = erase_markers(t);
    CHECK(structurally_equal(erase_markers(e), e));
    CHECK(expand_plain_let(t)->free_vars() == t->free_vars());
  }
}

TEST_CASE("analyze is invariant under renaming of bound variables") {
  testing::Generator g(8);
  for (int i = 0; i < 500; ++i) {
    auto t = g.well_formed_up_to(30);
    // Re-parse after renaming every binder by a suffix.
    std::string text = print(t);
    for (std::size_t p = text.find('v'); p != std::string::npos; p = text.find('v', p + 2)) text.insert(p + 1, "r");
    auto u = parse_term(text);
    REQUIRE(alpha_eq(t, u));
    auto a = analyze(t), b = analyze(u);
    CHECK(a.size == b.size);
    CHECK(a.depth == b.depth);
    CHECK(a.rank == b.rank);
    CHECK(a.is_well_formed == b.is_well_formed);
    CHECK(a.free_vars == b.free_vars);
  }
}

TEST_CASE("reduction preserves well-formedness and every strategy agrees") {
  testing::Generator g(9);
  for (int i = 0; i < 300; ++i) {
    auto t = g.well_formed_up_to(30);
    for (const auto& r : redexes(t)) CHECK(analyze(step(t, r.path, r.rule)).is_well_formed);
    auto lo = normalize(t).final;
    CHECK(redexes(lo).empty());
    CHECK(alpha_eq(lo, normalize(t, {Strategy{StrategyKind::RightmostInnermost, 0}}).final));
    CHECK(alpha_eq(lo, normalize(t, {Strategy{StrategyKind::Random, 3}}).final));
  }
}

TEST_CASE("cached normal flag agrees with the redex search") {
  testing::Generator g(10);
  for (int i = 0; i < 500; ++i) {
    auto t = g.well_formed_up_to(30);
    for (const auto& s : testing::term_subterms(t)) CHECK(s->normal() == redexes(s).empty());
    CHECK(normalize(t).final->normal());
  }
}
