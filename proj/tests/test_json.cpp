#include "doctest.h"

#include "slc/json.hpp"
#include "slc/parser.hpp"

using namespace slc;

TEST_CASE("TermInfo") {
  auto j = to_json(analyze(parse_term("let y be !x in x")));
  CHECK(j["size"] == 3);
  CHECK(j["is_term"] == true);
  CHECK(j["free_vars"] == Json::array({"y"}));
  CHECK(j["temp_vars"].empty());
  auto bad = to_json(analyze(parse_term("\\x. !x")));
  CHECK(bad["is_term"] == false);
  CHECK(bad["failure_witness"]["path"] == Json::array());
}

TEST_CASE("certificate and metrics") {
  auto t = parse_term("((\\x. x) y)");
  auto c = to_json(certificate(t));
  CHECK(c["bound"] == "27");
  CHECK(c["degree"] == 3);
  auto m = to_json(snapshot(t, 1));
  CHECK(m["weight"] == 3);
  CHECK(m["n"] == 1);
}

TEST_CASE("trace") {
  NormalizeOptions o;
  o.monitor = true;
  auto j = to_json(normalize(parse_term("(((\\s.\\x. let s be !s' in (s' (s' x))) !g) z)"), o));
  CHECK(j["length"] == 3);
  CHECK(j["normal_form"] == "(g (g z))");
  CHECK(j["steps"][0]["rule"] == "beta");
  CHECK(j["steps"][0]["path"] == Json::array({0}));
  CHECK(j["steps"][2]["rule"] == "bang");
  CHECK(j["steps"][2].contains("weight_after"));
  CHECK(j["steps"][2]["size_after"] == 3);
}

TEST_CASE("type error") {
  TypeError e("LinearityViolation", Path{{1, 0}}, "application", "x used twice", "a", "b");
  auto j = to_json(e);
  CHECK(j["kind"] == "LinearityViolation");
  CHECK(j["path"] == Json::array({1, 0}));
  CHECK(j["rule"] == "application");
  CHECK(j["expected"] == "a");
  CHECK(j["found"] == "b");
}
