#include "doctest.h"

#include "slc/parser.hpp"
#include "slc/typecheck.hpp"

using namespace slc;

namespace {
TermPtr P(const char* s) { return parse_term(s); }
FormulaPtr T(const char* s) { return type_parse(s); }

std::string kind_of(const Context& ctx, const char* term, const char* type) {
  try {
    check(ctx, P(term), T(type));
    return "ok";
  } catch (const TypeError& e) {
    return e.kind();
  }
}
}  // namespace

TEST_CASE("variable") {
  Context ctx{{"x", T("a")}};
  auto j = check(ctx, P("x"), T("a"));
  CHECK(j.context[0].usage == Usage::Used);
  CHECK(kind_of(ctx, "x", "b") == "TypeMismatch");
  CHECK(kind_of({}, "y", "a") == "UnknownVariable");
}

TEST_CASE("integer two") {
  const char* two = R"(\s : !(a -o a). \x : a. let s be !s' in (s' (s' x)))";
  CHECK(formula_alpha_eq(synthesize({}, P(two)), T("!(a -o a) -o a -o a")));
  auto g = P((std::string("gen[a] ") + two).c_str());
  CHECK(check({}, g, T("forall a. !(a -o a) -o a -o a")).formula);
  CHECK(check({}, P(R"(gen[a] \s. \x. let s be !s' in (s' (s' x)))"), T("forall b. !(b -o b) -o b -o b")).formula);
}

TEST_CASE("empty list") {
  auto L = T("mu X. 1 + (a * X)");
  CHECK(kind_of({}, "inl(())", "1 + (a * (mu X. 1 + (a * X)))") == "ok");
  CHECK(check({}, P("fold[mu X. 1 + (a * X)] inl(())"), L).formula);
  CHECK(kind_of({}, "fold[mu X. 1 + (a * X)] unfold (fold[mu X. 1 + (a * X)] inl(()))", "mu X. 1 + (a * X)") == "ok");
}

TEST_CASE("forall escape") {
  Context ctx{{"x", T("a")}};
  CHECK(kind_of(ctx, "gen[a] x", "forall a. a") == "ForallEscape");
  CHECK(kind_of(ctx, "gen[b] x", "forall b. a") == "ok");
}

TEST_CASE("linearity and depth") {
  CHECK(kind_of({}, "\\x. (x x)", "(a -o a) -o a") == "LinearityViolation");
  CHECK(kind_of({}, "\\x. !x", "a -o !a") == "DepthViolation");
  CHECK(kind_of({}, "\\y. let y be !x in !x", "!a -o !a") == "ok");
  CHECK(kind_of({}, "\\y. let y be !x in <x, x>", "!a -o (a * a)") == "ok");
  CHECK(kind_of({}, "\\y. \\f. let y be !x in (f x)", "!a -o (a -o b) -o b") == "ok");
  CHECK(kind_of({}, "\\y. \\z. let y be !x in let z be !w in !<x, w>", "!a -o !b -o !(a * b)") == "ok");
  CHECK(kind_of({}, "\\y. \\f. let y be !x in (f !x)", "!a -o (!a -o b) -o b") == "DepthViolation");
  CHECK(kind_of({}, "\\y. let y be !x in !(x x)", "!(a -o a) -o !a") == "LinearityViolation");
  CHECK(kind_of({}, "!(\\z. z)", "!(a -o a)") == "ok");
}

TEST_CASE("additive case") {
  const char* t = "\\u : 1 + 1. \\f : 1 -o b. case u of inl(x) => (f x) | inr(y) => (f y)";
  CHECK(formula_alpha_eq(synthesize({}, P(t)), T("1 + 1 -o (1 -o b) -o b")));
  CHECK(kind_of({}, "\\u. \\f. case u of inl(x) => (f x) | inr(y) => (f (f y))", "1 + 1 -o (1 -o 1) -o 1") ==
        "LinearityViolation");
}

TEST_CASE("tensor") {
  CHECK(kind_of({}, "\\p. let p be <x, y> in <y, x>", "a * b -o b * a") == "ok");
  CHECK(kind_of({}, "\\p. let p be <x, y> in <x, x>", "a * b -o a * a") == "LinearityViolation");
}

TEST_CASE("plain let and instantiation") {
  Context ctx{{"id", T("forall a. a -o a")}, {"z", T("b")}};
  CHECK(kind_of(ctx, "let (id @[b]) be f in (f z)", "b") == "ok");
  CHECK(kind_of({}, "((\\x. x) ())", "1") == "ok");
}

TEST_CASE("check_module") {
  auto good = parse("def id : forall a. a -o a = gen[a] \\x : a. x\ndef two : 1 -o 1 = (id @[1 -o 1]) (id @[1])");
  auto r = check_module(good);
  CHECK(r.ok());
  REQUIRE(r.definitions.size() == 2);
  CHECK(r.definitions[1].erased_well_formed);

  auto bad = parse("def id : forall a. a -o a = gen[a] \\x : a. x\ndef dup : (1 -o 1) -o 1 = \\x. (x x)\ndef u : 1 = ()");
  auto rb = check_module(bad);
  CHECK_FALSE(rb.ok());
  CHECK_FALSE(rb.find("id")->error);
  REQUIRE(rb.find("dup")->error);
  CHECK(rb.find("dup")->error->kind() == "LinearityViolation");
  CHECK_FALSE(rb.find("u")->error);

  CHECK(check_module(parse("")).definitions.empty());
}
