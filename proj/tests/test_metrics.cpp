#include "doctest.h"

#include "slc/errors.hpp"
#include "slc/metrics.hpp"
#include "slc/parser.hpp"

using namespace slc;

namespace {
TermPtr P(const char* s) { return parse_term(s); }
}

TEST_CASE("weight") {
  CHECK(weight(P("x"), 1) == 1);
  CHECK(weight(P("\\x. x"), 5) == 2);
  CHECK(weight(P("(f x)"), 5) == 2);
  // !(f x) at n = 3: 3*2 + 1
  CHECK(weight(P("!(f x)"), 3) == 7);
  // two at n: W = 1 + 1 + (1 + 3) = 6 for any n (no bang inside)
  CHECK(weight(P(R"(\s.\x. let s be !s' in (s' (s' x)))"), 2) == 6);
  CHECK(weight(P("<a, b>"), 1) == 3);
  CHECK(weight(P("let u be <x, y> in (x y)"), 1) == 4);
  CHECK(weight(P("inl(a)"), 1) == 2);
  CHECK(weight(P("case u of inl(x) => x | inr(y) => (y z)"), 1) == 4);
  CHECK(weight(P("()"), 9) == 1);
  CHECK_THROWS_AS(weight(P("!(x x)"), 2), NotATerm);
}

TEST_CASE("nlet and measure") {
  auto t = P("let (let a be !y in y) be !x in (x x)");
  CHECK(nlet(t) == 2);
  // W(root) = 1 + 1 + 2 = 4; bodies: inner y (1), outer (x x) (2); M = 2*4 - 3
  CHECK(measure(t, 2) == 5);
  CHECK_THROWS_AS(measure(t, 1), RankTooSmall);
  auto c = step(t, {}, RuleLabel::Com1);
  CHECK(weight(c, 2) == weight(t, 2));
  CHECK(measure(c, 2) < measure(t, 2));
}

TEST_CASE("certificate") {
  auto c = certificate(P("((\\x.x) y)"));
  CHECK(c.size == 3);
  CHECK(c.depth == 0);
  CHECK(c.degree == 3);
  CHECK(c.bound == 27);
  CHECK(c.weight_at_size == 3);
  auto deep = certificate(P("!!!!!!!!!!!!!!!!!!!!(\\x. x)"));
  CHECK(deep.bound_string() == BigInt(pow(BigInt(22), 63)).str());
}

TEST_CASE("check_step") {
  MetricSnapshot a{.n = 2, .weight = 10, .nlet = 2, .measure = 7};
  MetricSnapshot b{.n = 2, .weight = 9, .nlet = 2, .measure = 7};
  CHECK(check_step(a, b, RuleLabel::Beta).ok);
  CHECK_FALSE(check_step(a, a, RuleLabel::Bang).ok);
  CHECK(check_step(a, a, RuleLabel::Bang).clause == "bang-weight");
  MetricSnapshot c{.n = 2, .weight = 10, .nlet = 2, .measure = 6};
  CHECK(check_step(a, c, RuleLabel::Com2).ok);
  CHECK(check_step(a, b, RuleLabel::Com2).clause == "com2-weight-changed");
  CHECK(check_step(c, a, RuleLabel::Com1).clause == "com1-measure");
}

TEST_CASE("key lemma") {
  CHECK(key_lemma_check(P("(x x)"), "x", P("\\z.z"), 2).ok);
  CHECK(key_lemma_check(P("!x"), "x", P("(f g)"), 1).ok);
  CHECK_THROWS_AS(key_lemma_check(P("!(x x)"), "x", P("y"), 2), SideConditionUnmet);
  CHECK_THROWS_AS(key_lemma_check(P("let u be !x in (x x)"), "u", P("y"), 1), SideConditionUnmet);
}

TEST_CASE("case weight takes the heavier branch, so beta in the lighter one is not a decrease") {
  auto t = P("case z of inl(a) => ((\\y. y) a) | inr(b) => \\p. \\q. ((b p) q)");
  REQUIRE(analyze(t).is_well_formed);
  CHECK(weight(t, 1) == 7);
  auto r = redexes(t);
  REQUIRE(r.size() == 1);
  auto after = step(t, r[0].path, r[0].rule);
  CHECK(weight(after, 1) == 7);
  CHECK(check_step(snapshot(t, 1), snapshot(after, 1), RuleLabel::Beta).clause == "beta-weight");
  NormalizeOptions o;
  o.monitor = true;
  CHECK_THROWS_AS(normalize(t, o), MonitorViolation);
}
