#include "slc/stdlib.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "slc/errors.hpp"
#include "slc/names.hpp"

#ifndef SLC_STDLIB_DIR
#define SLC_STDLIB_DIR "stdlib"
#endif

namespace slc {

namespace {

TermPtr iterate(const std::string& f, std::uint64_t n, TermPtr x) {
  for (std::uint64_t i = 0; i < n; ++i) x = Term::app(Term::var(f), std::move(x));
  return x;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NormalizeOptions quiet(const Strategy& s = {}, bool monitor = false) {
  NormalizeOptions o;
  o.strategy = s;
  o.monitor = monitor;
  o.keep_terms = false;
  return o;
}

bool is_unit_injection(const TermPtr& t, Kind k) { return t->kind() == k && t->child(0)->kind() == Kind::Unit; }

DemoRun run(const TermPtr& fn, const TermPtr& arg, const std::vector<Letter>& xs, std::uint64_t slack,
            const DemoOptions& options) {
  DemoRun r;
  r.input = xs;
  r.slack = slack;
  r.program = Term::app(fn, arg);
  r.certificate = certificate(r.program);
  r.trace = normalize(r.program, quiet(options.strategy, options.monitor));
  r.output = decode_letters(decode_counted(r.trace.final).payload);
  return r;
}

}  // namespace

TermPtr numeral(std::uint64_t n) {
  return Term::abs("s", Term::abs("x", Term::let_bang(Term::var("s"), "s'", iterate("s'", n, Term::var("x")))));
}

TermPtr numeral_typed(std::uint64_t n) {
  auto a = Formula::var("a");
  auto body = Term::let_bang(Term::var("s"), "s'", iterate("s'", n, Term::var("x")));
  return Term::gen("a", Term::abs("s", Term::abs("x", body, a), Formula::bang(Formula::lolli(a, a))));
}

TermPtr encode_letter(Letter c) {
  switch (c) {
    case 0: return Term::inl(Term::unit());
    case 1: return Term::inr(Term::inl(Term::unit()));
    case 2: return Term::inr(Term::inr(Term::unit()));
  }
  throw std::invalid_argument("letter out of range: " + std::to_string(c));
}

Letter decode_letter(const TermPtr& t) {
  if (is_unit_injection(t, Kind::Inl)) return 0;
  if (t->kind() == Kind::Inr) {
    if (is_unit_injection(t->child(0), Kind::Inl)) return 1;
    if (is_unit_injection(t->child(0), Kind::Inr)) return 2;
  }
  throw NotAListValue("not a letter: " + print(t));
}

TermPtr encode_list(const std::vector<TermPtr>& xs) {
  TermPtr l = Term::inl(Term::unit());
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) l = Term::inr(Term::pair(*it, l));
  return l;
}

TermPtr encode_list(const std::vector<Letter>& xs) {
  std::vector<TermPtr> ts;
  for (Letter c : xs) ts.push_back(encode_letter(c));
  return encode_list(ts);
}

std::vector<TermPtr> decode_list(const TermPtr& t) {
  std::vector<TermPtr> out;
  TermPtr cur = t;
  for (;;) {
    if (is_unit_injection(cur, Kind::Inl)) return out;
    if (cur->kind() != Kind::Inr || cur->child(0)->kind() != Kind::Pair)
      throw NotAListValue("not a list: " + print(t));
    out.push_back(cur->child(0)->child(0));
    cur = cur->child(0)->child(1);
  }
}

std::vector<Letter> decode_letters(const TermPtr& t) {
  std::vector<Letter> out;
  for (const auto& e : decode_list(t)) out.push_back(decode_letter(e));
  return out;
}

TermPtr encode_counted(std::uint64_t n, const TermPtr& payload) {
  std::string s = "s", x = "x";
  if (payload->has_free(s)) s = fresh_name(s, [&](const std::string& c) { return payload->has_free(c); });
  if (payload->has_free(x)) x = fresh_name(x, [&](const std::string& c) { return payload->has_free(c); });
  auto count = Term::let_bang(Term::var(s), "s'", iterate("s'", n, Term::var(x)));
  return Term::abs(s, Term::abs(x, Term::pair(payload, count)));
}

Counted decode_counted(const TermPtr& t) {
  auto taken = [&](const std::string& c) { return t->has_free(c); };
  std::string c = t->has_free("c") ? fresh_name("c", taken) : "c";
  std::string z = t->has_free("z") ? fresh_name("z", taken) : "z";
  TermPtr probe = Term::app(Term::app(t, Term::bang(Term::var(c))), Term::var(z));
  TermPtr nf;
  try {
    nf = normalize(probe, quiet()).final;
  } catch (const NotATerm& e) {
    throw NotACountedValue(std::string("probe is not a term: ") + e.what());
  }
  if (nf->kind() != Kind::Pair) throw NotACountedValue("probe result is not a pair: " + print(nf));
  Counted out;
  out.payload = nf->child(0);
  TermPtr k = nf->child(1);
  while (k->kind() == Kind::App && k->child(0)->kind() == Kind::Var && k->child(0)->name() == c) {
    ++out.n;
    k = k->child(1);
  }
  if (k->kind() != Kind::Var || k->name() != z) throw NotACountedValue("counter is not (c (c ... z)): " + print(nf));
  return out;
}

std::filesystem::path stdlib_dir() {
  if (const char* env = std::getenv("SLC_STDLIB"); env && *env) return env;
  return SLC_STDLIB_DIR;
}

Stdlib load_stdlib(const std::filesystem::path& dir) {
  Stdlib lib;
  lib.typed = parse(read_file(dir / "stdlib.typed.slc"));
  lib.bare = parse(read_file(dir / "stdlib.slc"));
  lib.env = resolve_module(lib.bare);
  return lib;
}

const Stdlib& stdlib() {
  static const Stdlib lib = load_stdlib(stdlib_dir());
  return lib;
}

const Environment& stdlib_env() { return stdlib().env; }

std::string render_erased(const SourceModule& m) {
  std::string out = "-- Generated from stdlib.typed.slc by erasing type markers and binder annotations.\n\n";
  for (const auto& d : m.definitions) out += "def " + d.name + " = " + print(erase_markers(d.body)) + "\n";
  return out;
}

DemoRun run_sort(const std::vector<Letter>& xs, std::uint64_t slack, const DemoOptions& options) {
  if (slack < xs.size()) throw SideConditionUnmet("slack must be at least the list length");
  const auto& env = stdlib_env();
  return run(env.at("sort").term, Term::bang(encode_counted(slack, encode_list(xs))), xs, slack, options);
}

std::optional<MapFn> map_fn_from_string(const std::string& s) {
  if (s == "id") return MapFn::Id;
  if (s == "succ") return MapFn::Succ;
  return std::nullopt;
}

DemoRun run_map(MapFn f, const std::vector<Letter>& xs, std::uint64_t slack, const DemoOptions& options) {
  if (slack < xs.size()) throw SideConditionUnmet("slack must be at least the list length");
  const auto& env = stdlib_env();
  TermPtr fn = env.at(f == MapFn::Id ? "id3" : "succ3").term;
  TermPtr prog = Term::app(env.at("map").term, Term::bang(fn));
  return run(prog, encode_counted(slack, encode_list(xs)), xs, slack, options);
}

}  // namespace slc
