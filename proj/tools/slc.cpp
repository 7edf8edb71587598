// slc: command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 static failure (termhood,
// typing, rank), 3 dynamic invariant violation.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "slc/enumerate.hpp"
#include "slc/errors.hpp"
#include "slc/json.hpp"
#include "slc/metrics.hpp"
#include "slc/module.hpp"
#include "slc/reduction.hpp"
#include "slc/stdlib.hpp"
#include "slc/typecheck.hpp"

namespace {

using namespace slc;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kStatic = 2;
constexpr int kDynamic = 3;

struct Config {
  std::string file;
  std::string def;
  std::string strategy = "lo";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> n;
  bool monitor = false;
  bool json = false;
  std::uint64_t max_size = 6;
  std::string list;
  std::optional<std::uint64_t> slack;
  std::string fn = "id";
  std::string program;
  bool inject_fault = false;
};

// Carries an exit code up to main.
struct Exit {
  int code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Exit{kUsage};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Config& c, const Json& j) {
  if (c.json) std::cout << j.dump(2) << "\n";
}

[[noreturn]] void fail(const Config& c, int code, const std::string& kind, const std::string& message,
                       Json extra = Json::object()) {
  std::cerr << "error: " << kind << ": " << message << "\n";
  if (c.json) {
    extra["kind"] = kind;
    extra["message"] = message;
    emit(c, Json{{"error", extra}});
  }
  throw Exit{code};
}

SourceModule load_source(const Config& c) {
  std::string text = read_file(c.file);
  try {
    return parse(text, stdlib().typed.aliases);
  } catch (const SyntaxError& e) {
    fail(c, kUsage, e.kind(), e.what(), {{"line", e.line()}, {"column", e.column()}});
  }
}

// Definitions of the file resolved on top of the bundled library.
Environment load_env(const Config& c) {
  SourceModule m = load_source(c);
  try {
    return resolve_module(m, stdlib_env());
  } catch (const Error& e) {
    fail(c, kUsage, e.kind(), e.what());
  }
}

// The selected definition, or `main`, or the last one in the file.
const ResolvedDefinition& pick(const Config& c, const Environment& env, const SourceModule& m) {
  std::string name = c.def;
  if (name.empty()) {
    if (m.definitions.empty()) fail(c, kUsage, "UnknownDefinition", "file has no definitions");
    name = m.find("main") ? "main" : m.definitions.back().name;
  }
  if (!m.find(name)) fail(c, kUsage, "UnknownDefinition", "no definition named '" + name + "' in " + c.file);
  return env.at(name);
}

Strategy strategy_of(const Config& c) {
  Strategy s;
  s.seed = c.seed;
  if (c.strategy == "lo") s.kind = StrategyKind::LeftmostOutermost;
  else if (c.strategy == "ri") s.kind = StrategyKind::RightmostInnermost;
  else if (c.strategy == "random") s.kind = StrategyKind::Random;
  else fail(c, kUsage, "Usage", "unknown strategy '" + c.strategy + "' (expected lo, ri or random)");
  return s;
}

// Engine-ready form of a definition: markers and annotations erased.
TermPtr engine_term(const ResolvedDefinition& d) { return erase_markers(d.term); }

TermInfo analyzed(const Config& c, const TermPtr& t) {
  try {
    return analyze(t);
  } catch (const Error& e) {
    fail(c, kStatic, e.kind(), e.what());
  }
}

std::string witness(const TermInfo& info) {
  if (!info.failure_witness) {
    std::string s = "not well-formed:";
    if (!info.temp_vars.empty()) s += " temporary variables remain";
    for (const auto& [x, k] : info.occ)
      if (k != 1 && info.free_vars.count(x)) s += " '" + x + "' occurs " + std::to_string(k) + " times";
    return s;
  }
  return "at " + info.failure_witness->path.to_string() + ": " + info.failure_witness->clause;
}

int cmd_check(const Config& c) {
  SourceModule m = load_source(c);
  Environment env;
  try {
    env = resolve_module(m, stdlib_env());
  } catch (const Error& e) {
    fail(c, kUsage, e.kind(), e.what());
  }
  bool all = true;
  Json out = Json::array();
  for (const auto& d : m.definitions) {
    if (!c.def.empty() && d.name != c.def) continue;
    TermInfo info = analyzed(c, engine_term(env.at(d.name)));
    all = all && info.is_well_formed;
    if (c.json) {
      Json j = to_json(info);
      j["name"] = d.name;
      out.push_back(j);
    } else {
      std::cout << d.name << ": size " << info.size << ", depth " << info.depth << ", rank " << info.rank
                << (info.is_well_formed ? ", well-formed" : info.is_term ? ", term" : ", not a term") << "\n";
      if (!info.is_well_formed) std::cout << "  " << witness(info) << "\n";
    }
  }
  emit(c, Json{{"definitions", out}, {"ok", all}});
  return all ? kOk : kStatic;
}

int cmd_stats(const Config& c) {
  SourceModule m = load_source(c);
  Environment env = load_env(c);
  TermPtr t = engine_term(pick(c, env, m));
  TermInfo info = analyzed(c, t);
  if (!info.is_term) fail(c, kStatic, "NotATerm", witness(info));
  std::uint64_t n = c.n.value_or(std::max<std::uint64_t>(1, info.rank));
  MetricSnapshot snap;
  Certificate cert;
  try {
    snap = snapshot(t, n);
    cert = certificate(t);
  } catch (const Error& e) {
    fail(c, kStatic, e.kind(), e.what());
  }
  if (c.json) {
    emit(c, Json{{"metrics", to_json(snap)}, {"certificate", to_json(cert)}});
  } else {
    std::cout << "size " << snap.size << "\ndepth " << snap.depth << "\nrank " << snap.rank << "\nn " << snap.n
              << "\nweight " << snap.weight << "\nnlet " << snap.nlet << "\nmeasure " << snap.measure
              << "\nbound " << cert.size << "^" << cert.degree << " = " << cert.bound_string() << "\n";
  }
  return kOk;
}

int cmd_reduce(const Config& c) {
  SourceModule m = load_source(c);
  Environment env = load_env(c);
  TermPtr t = engine_term(pick(c, env, m));
  TermInfo info = analyzed(c, t);
  if (!info.is_term) fail(c, kStatic, "NotATerm", witness(info));
  NormalizeOptions o;
  o.strategy = strategy_of(c);
  o.monitor = c.monitor;
  o.n = c.n;
  Trace tr;
  try {
    if (c.monitor) snapshot(t, c.n.value_or(std::max<std::uint64_t>(1, info.rank)));
    tr = normalize(t, o);
  } catch (const RankTooSmall& e) {
    fail(c, kStatic, e.kind(), e.what());
  } catch (const Error& e) {
    fail(c, kDynamic, e.kind(), e.what());
  }
  if (c.json) {
    emit(c, to_json(tr));
    return kOk;
  }
  std::cout << "strategy " << tr.strategy.name() << "\n";
  std::size_t shown = std::min<std::size_t>(tr.length(), 50);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& s = tr.steps[i];
    std::cout << "  " << i + 1 << ". " << to_string(s.rule) << " at " << s.path.to_string();
    if (s.metrics) std::cout << "  W=" << s.metrics->weight << " M=" << s.metrics->measure;
    std::cout << "\n";
  }
  if (shown < tr.length()) std::cout << "  ... " << tr.length() - shown << " more steps (use --json for all)\n";
  std::cout << "steps " << tr.length() << "\n";
  if (c.monitor) std::cout << "monitor ok\n";
  std::cout << "normal form " << print(tr.final) << "\n";
  return kOk;
}

int cmd_type(const Config& c) {
  SourceModule m = load_source(c);
  ModuleReport r;
  try {
    r = check_module(m);
  } catch (const Error& e) {
    fail(c, kStatic, e.kind(), e.what());
  }
  bool ok = true;
  Json out = Json::array();
  for (const auto& d : r.definitions) {
    if (!c.def.empty() && d.name != c.def) continue;
    bool good = !d.error && (!d.checked || d.erased_well_formed);
    ok = ok && good;
    Json j{{"name", d.name}, {"checked", d.checked}, {"erased_well_formed", d.erased_well_formed}};
    if (d.type) j["type"] = type_print(*d.type);
    if (d.error) j["error"] = to_json(*d.error);
    out.push_back(j);
    if (c.json) continue;
    if (!d.checked) {
      std::cout << d.name << ": no ascription\n";
    } else if (d.error) {
      std::cout << d.name << ": " << d.error->kind() << " at " << d.error->path().to_string() << " (rule "
                << d.error->rule() << "): " << d.error->what() << "\n";
      if (!d.error->expected().empty()) std::cout << "  expected " << d.error->expected() << "\n";
      if (!d.error->found().empty()) std::cout << "  found    " << d.error->found() << "\n";
    } else {
      std::cout << d.name << " : " << type_print(*d.type) << (d.erased_well_formed ? "" : "  (erasure not well-formed)")
                << "\n";
    }
  }
  emit(c, Json{{"definitions", out}, {"ok", ok}});
  return ok ? kOk : kStatic;
}

std::vector<Letter> parse_list(const Config& c) {
  std::vector<Letter> xs;
  std::stringstream ss(c.list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() && ss.eof() && xs.empty()) break;
    if (item != "0" && item != "1" && item != "2")
      fail(c, kUsage, "Usage", "list elements must be 0, 1 or 2 (got '" + item + "')");
    xs.push_back(static_cast<Letter>(item[0] - '0'));
  }
  return xs;
}

int cmd_demo(const Config& c) {
  std::vector<Letter> xs = parse_list(c);
  std::uint64_t slack = c.slack.value_or(xs.size());
  if (slack < xs.size()) fail(c, kUsage, "Usage", "slack must be at least the list length");
  DemoOptions o;
  o.monitor = c.monitor;
  o.strategy = strategy_of(c);
  std::vector<Letter> expected = xs;
  DemoRun run;
  try {
    if (c.program == "sort") {
      std::sort(expected.begin(), expected.end());
      run = run_sort(xs, slack, o);
    } else {
      auto f = map_fn_from_string(c.fn);
      if (!f) fail(c, kUsage, "Usage", "unknown --fn '" + c.fn + "' (expected id or succ)");
      for (auto& x : expected)
        if (*f == MapFn::Succ) x = static_cast<Letter>((x + 1) % 3);
      std::reverse(expected.begin(), expected.end());
      run = run_map(*f, xs, slack, o);
    }
  } catch (const Error& e) {
    fail(c, kDynamic, e.kind(), e.what());
  }
  auto show = [](const std::vector<Letter>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  bool oracle = run.output == expected;
  bool within = BigInt(run.trace.length()) <= run.certificate.bound;
  if (c.json) {
    emit(c, Json{{"program", c.program},
                 {"input", show(xs)},
                 {"output", show(run.output)},
                 {"expected", show(expected)},
                 {"slack", slack},
                 {"steps", run.trace.length()},
                 {"certificate", to_json(run.certificate)},
                 {"within_bound", within},
                 {"monitor", c.monitor ? "ok" : "off"}});
  } else {
    std::cout << "input " << show(xs) << "\noutput " << show(run.output) << "\nslack " << slack << "\nsteps " << run.trace.length() << "\nbound "
              << run.certificate.size << "^" << run.certificate.degree << (within ? " (within)" : " (EXCEEDED)")
              << "\nmonitor " << (c.monitor ? "ok" : "off") << "\noracle " << (oracle ? "ok" : "MISMATCH") << "\n";
  }
  return oracle && within ? kOk : kDynamic;
}

int cmd_bound_check(const Config& c) {
  BoundCheckOptions o;
  if (c.inject_fault) {
    // A fake rule that lengthens the first sequence past its bound.
    o.tamper = [done = false](const TermPtr& t, std::vector<Trace>& seqs) mutable {
      if (done || seqs.empty()) return;
      done = true;
      BigInt bound = certificate(t).bound;
      while (BigInt(seqs.front().length()) <= bound) seqs.front().steps.push_back({Path{}, RuleLabel::Beta, nullptr, {}});
    };
  }
  BoundCheckReport r = bound_check(c.max_size, o);
  if (c.json) {
    emit(c, to_json(r));
  } else {
    std::cout << "size  terms  sequences  longest\n";
    for (const auto& row : r.rows)
      std::cout << row.size << "  " << row.terms << "  " << row.sequences << "  " << row.longest << "\n";
    std::cout << "total " << r.terms() << " terms, " << r.sequences() << " sequences\n";
  }
  if (r.failure) {
    std::cerr << "counterexample: " << print(r.failure->term) << "\n  " << r.failure->reason << "\n";
    return kDynamic;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"soft lambda-calculus toolkit"};
  app.require_subcommand(1);
  Config c;

  auto file_opts = [&](CLI::App* s) {
    s->add_option("file", c.file, "source file")->required();
    s->add_option("--def", c.def, "definition (default: main, else the last one)");
    s->add_flag("--json", c.json, "JSON on stdout");
  };
  auto* check = app.add_subcommand("check", "termhood of every definition");
  file_opts(check);
  auto* stats = app.add_subcommand("stats", "metrics and certificate of a definition");
  file_opts(stats);
  stats->add_option("--n", c.n, "weight parameter (default max(1, rank))");
  auto* reduce = app.add_subcommand("reduce", "normalize a definition");
  file_opts(reduce);
  reduce->add_option("--strategy", c.strategy, "lo, ri or random");
  reduce->add_option("--seed", c.seed, "seed for the random strategy");
  reduce->add_option("--n", c.n, "weight parameter for the monitor");
  reduce->add_flag("--monitor", c.monitor, "check weight and measure at every step");
  auto* type = app.add_subcommand("type", "typecheck ascribed definitions");
  file_opts(type);
  auto* demo = app.add_subcommand("demo", "run the sort or map demo");
  demo->add_option("program", c.program, "sort or map")->required()->check(CLI::IsMember({"sort", "map"}));
  demo->add_option("--list", c.list, "elements 0,1,2 separated by commas");
  demo->add_option("--slack", c.slack, "iteration budget (default: list length)");
  demo->add_option("--fn", c.fn, "id or succ (map only)");
  demo->add_option("--strategy", c.strategy, "lo, ri or random");
  demo->add_option("--seed", c.seed, "seed for the random strategy");
  demo->add_flag("--monitor", c.monitor, "check weight and measure at every step");
  demo->add_flag("--json", c.json, "JSON on stdout");
  auto* bound = app.add_subcommand("bound-check", "exhaustive reduction bound and confluence check");
  bound->add_option("--max-size", c.max_size, "largest term size");
  bound->add_flag("--json", c.json, "JSON on stdout");
  bound->add_flag("--inject-fault", c.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(c);
    if (*stats) return cmd_stats(c);
    if (*reduce) return cmd_reduce(c);
    if (*type) return cmd_type(c);
    if (*demo) return cmd_demo(c);
    if (*bound) return cmd_bound_check(c);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
