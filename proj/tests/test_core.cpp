#include "doctest.h"

#include "slc/analysis.hpp"
#include "slc/errors.hpp"
#include "slc/parser.hpp"

using namespace slc;

namespace {
TermPtr P(const char* s) { return parse_term(s); }
}

TEST_CASE("analyze: integer two") {
  auto info = analyze(P(R"(\s.\x. let s be !s' in (s' (s' x)))"));
  CHECK(info.is_term);
  CHECK(info.is_well_formed);
  CHECK(info.size == 7);
  CHECK(info.depth == 0);
  CHECK(info.rank == 2);
  CHECK(info.temp_vars.empty());
  CHECK(info.free_vars.empty());
}

TEST_CASE("analyze: failures") {
  auto a = analyze(P("\\x. !x"));
  CHECK_FALSE(a.is_term);
  REQUIRE(a.failure_witness);
  CHECK(a.failure_witness->clause.find("temporary") != std::string::npos);

  auto b = analyze(P("!(x x)"));
  CHECK_FALSE(b.is_term);
  REQUIRE(b.failure_witness);
  CHECK(b.failure_witness->path.empty());

  CHECK_THROWS_AS(analyze(P("x @[a]")), MarkerPresent);
}

TEST_CASE("analyze: variable") {
  auto info = analyze(P("x"));
  CHECK(info.is_term);
  CHECK(info.is_well_formed);
  CHECK(info.size == 1);
  CHECK(info.depth == 0);
  CHECK(info.rank == 0);
}

TEST_CASE("analyze: temporary variables and sugar") {
  auto t = analyze(P("!x"));
  CHECK(t.is_term);
  CHECK_FALSE(t.is_well_formed);
  CHECK(t.temp_vars == std::set<std::string>{"x"});
  CHECK(t.depth == 1);

  auto pair = analyze(P("let u be <x, y> in <y, x>"));
  CHECK(pair.is_term);
  CHECK(pair.size == 5);

  auto cas = analyze(P("!(case u of inl(a) => (f a) | inr(b) => (f b))"));
  CHECK(cas.is_term);
  CHECK(cas.occ.at("f") == 1);
  CHECK(cas.size == 7);
}

TEST_CASE("depth_of") {
  auto t = P("!(\\f.\\x. let f be !f' in !(f' x))");
  // Bang / Abs / Abs / LetBang body / Bang / App
  CHECK(depth_of(t, Path{{0, 0, 0, 1, 0}}) == 2);
  CHECK(structurally_equal(subterm_at(t, Path{{0, 0, 0, 1, 0}}), P("(f' x)")));
  CHECK(depth_of(t, Path{}) == 0);
  CHECK(depth_of(t, Path{{0, 0, 0, 0}}) == 1);
  CHECK(subterm_at(t, Path{{0, 0, 0, 0}})->name() == "f");
  CHECK_THROWS_AS(depth_of(t, Path{{1}}), InvalidPath);
}

TEST_CASE("substitute") {
  CHECK(structurally_equal(substitute(P("x"), "x", P("\\y.y")), P("\\y.y")));
  CHECK(structurally_equal(substitute(P("\\y.(x y)"), "x", P("y")), P("\\y$1.(y y$1)")));
  CHECK(structurally_equal(substitute(P("(x x)"), "x", P("g")), P("(g g)")));
  auto m = substitute_many(P("<x, y>"), {{"x", P("y")}, {"y", P("x")}});
  CHECK(structurally_equal(m, P("<y, x>")));
}

TEST_CASE("alpha_eq") {
  CHECK(alpha_eq(P("\\x.x"), P("\\y.y")));
  CHECK_FALSE(alpha_eq(P("\\x.\\y.x"), P("\\x.\\y.y")));
  CHECK(alpha_eq(P(R"(\s.\x. let s be !s' in (s' (s' x)))"), P(R"(\s.\x. let s be !w in (w (w x)))")));
  CHECK_FALSE(alpha_eq(P("\\x.y"), P("\\x.z")));
  CHECK(alpha_eq(P("case u of inl(a) => a | inr(b) => b"), P("case u of inl(c) => c | inr(c) => c")));
}

TEST_CASE("occurrences") {
  CHECK(occurrences(P("(x x)"), "x") == 2);
  CHECK(occurrences(P("case x of inl(a) => (y y) | inr(b) => y"), "y") == 2);
  CHECK(occurrences(P("\\x. x"), "x") == 0);
}
