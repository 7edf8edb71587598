#include "doctest.h"

#include "slc/enumerate.hpp"
#include "slc/parser.hpp"

using namespace slc;

TEST_CASE("enumerate: small sizes by hand") {
  CHECK(enumerate_well_formed(0).empty());
  auto one = enumerate_well_formed(1);
  REQUIRE(one.size() == 1);
  CHECK(print(one[0]) == "a0");
  // \x.x, \x.a, (a b)
  CHECK(enumerate_well_formed(2).size() == 3);
  // 6 abstractions, 6 applications, !(\x.x), two lets
  CHECK(enumerate_well_formed(3).size() == 15);
}

TEST_CASE("enumerate: every result is a distinct well-formed term of the size") {
  for (std::uint64_t size = 1; size <= 5; ++size) {
    std::set<std::string> keys;
    for (const auto& t : enumerate_well_formed(size)) {
      auto info = analyze(t);
      CHECK(info.is_well_formed);
      CHECK(info.size == size);
      keys.insert(alpha_key(t));
    }
    CHECK(keys.size() == enumerate_well_formed(size).size());
  }
}

TEST_CASE("bound_check") {
  auto r = bound_check(5);
  CHECK(r.ok());
  REQUIRE(r.rows.size() == 5);
  CHECK(r.rows[0].terms == 1);
  CHECK(r.rows[0].longest == 0);
  CHECK(r.terms() == 1 + 3 + 15 + 91 + 632);

  BoundCheckOptions o;
  o.tamper = [](const TermPtr&, std::vector<Trace>& seqs) {
    seqs.front().steps.resize(5, TraceStep{Path{}, RuleLabel::Beta, nullptr, std::nullopt});
  };
  auto bad = bound_check(3, o);
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.failure);
  CHECK(print(bad.failure->term) == "a0");
}

TEST_CASE("check_sequences: differing normal forms") {
  auto t = parse_term("((\\x.x) y)");
  Trace a, b;
  a.final = parse_term("y");
  b.final = parse_term("z");
  CHECK(check_sequences(t, {a}) == std::nullopt);
  CHECK(check_sequences(t, {a, b}).has_value());
}
