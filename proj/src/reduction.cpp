#include "slc/reduction.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "slc/errors.hpp"
#include "slc/metrics.hpp"
#include "slc/names.hpp"

namespace slc {

namespace {

constexpr const char* kRuleNames[] = {"beta", "bang", "com1", "com2", "pair", "case-l", "case-r", "com-pair", "com-case"};

std::optional<RuleLabel> match(const Term& t) {
  switch (t.kind()) {
    case Kind::App:
      switch (t.child(0)->kind()) {
        case Kind::Abs: return RuleLabel::Beta;
        case Kind::LetBang: return RuleLabel::Com2;
        case Kind::LetPair: return RuleLabel::ComPair;
        case Kind::Case: return RuleLabel::ComCase;
        default: return std::nullopt;
      }
    case Kind::LetBang:
      if (t.child(0)->kind() == Kind::Bang) return RuleLabel::Bang;
      if (t.child(0)->kind() == Kind::LetBang) return RuleLabel::Com1;
      return std::nullopt;
    case Kind::LetPair:
      if (t.child(0)->kind() == Kind::Pair) return RuleLabel::Pair;
      return std::nullopt;
    case Kind::Case:
      if (t.child(0)->kind() == Kind::Inl) return RuleLabel::CaseL;
      if (t.child(0)->kind() == Kind::Inr) return RuleLabel::CaseR;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

void collect(const TermPtr& t, Path& at, std::vector<Redex>& out) {
  if (t->normal()) return;
  if (t->kind() == Kind::Marker) throw MarkerPresent("type marker at " + at.to_string());
  if (t->kind() == Kind::Let) throw PlainLetPresent("plain let at " + at.to_string());
  if (auto r = match(*t)) out.push_back({at, *r});
  for (std::size_t i = 0; i < t->children().size(); ++i) {
    at.steps.push_back(static_cast<std::uint8_t>(i));
    collect(t->child(i), at, out);
    at.steps.pop_back();
  }
}

bool first(const TermPtr& t, Path& at, Redex& out) {
  if (t->normal()) return false;
  if (t->kind() == Kind::Marker) throw MarkerPresent("type marker at " + at.to_string());
  if (t->kind() == Kind::Let) throw PlainLetPresent("plain let at " + at.to_string());
  if (auto r = match(*t)) {
    out = {at, *r};
    return true;
  }
  for (std::size_t i = 0; i < t->children().size(); ++i) {
    at.steps.push_back(static_cast<std::uint8_t>(i));
    if (first(t->child(i), at, out)) return true;
    at.steps.pop_back();
  }
  return false;
}

// Renames binder `x` of `body` away from the free names of `avoid`.
// Returns the (possibly new) name and rewrites `body` accordingly.
std::string rename_away(const std::string& x, TermPtr& body, const TermPtr& avoid) {
  if (!avoid->has_free(x)) return x;
  std::string y = fresh_name(x, [&](const std::string& c) { return avoid->has_free(c) || body->has_free(c); });
  body = substitute(body, x, Term::var(y));
  return y;
}

TermPtr contract(const TermPtr& r, RuleLabel rule) {
  const Term& t = *r;
  const TermPtr& head = t.child(0);
  switch (rule) {
    case RuleLabel::Beta:
      return substitute(head->child(0), head->name(), t.child(1));
    case RuleLabel::Bang:
      return substitute(t.child(1), t.name(), head->child(0));
    case RuleLabel::Com1: {
      // let (let t1 be !y in t2) be !x in t3  ->  let t1 be !y in (let t2 be !x in t3)
      TermPtr t2 = head->child(1);
      TermPtr outer_free = Term::let_bang(Term::unit(), t.name(), t.child(1));
      std::string y = rename_away(head->name(), t2, outer_free);
      return Term::let_bang(head->child(0), y, Term::let_bang(t2, t.name(), t.child(1)));
    }
    case RuleLabel::Com2: {
      TermPtr t2 = head->child(1);
      std::string x = rename_away(head->name(), t2, t.child(1));
      return Term::let_bang(head->child(0), x, Term::app(t2, t.child(1)));
    }
    case RuleLabel::Pair:
      return substitute_many(t.child(1), {{t.name(), head->child(0)}, {t.name2(), head->child(1)}});
    case RuleLabel::CaseL:
      return substitute(t.child(1), t.name(), head->child(0));
    case RuleLabel::CaseR:
      return substitute(t.child(2), t.name2(), head->child(0));
    case RuleLabel::ComPair: {
      TermPtr body = head->child(1);
      const TermPtr& v = t.child(1);
      std::string x = rename_away(head->name(), body, v);
      std::string y = rename_away(head->name2(), body, v);
      if (x == y) throw NotATerm("let-pair binds the same name twice");
      return Term::let_pair(head->child(0), x, y, Term::app(body, v));
    }
    case RuleLabel::ComCase: {
      TermPtr b1 = head->child(1);
      TermPtr b2 = head->child(2);
      const TermPtr& v = t.child(1);
      std::string x = rename_away(head->name(), b1, v);
      std::string y = rename_away(head->name2(), b2, v);
      return Term::case_of(head->child(0), x, Term::app(b1, v), y, Term::app(b2, v));
    }
  }
  throw NotARedex("unknown rule");
}

std::uint64_t cap_from(const TermPtr& t, const NormalizeOptions& o) {
  if (o.step_cap) return o.step_cap;
  BigInt bound = certificate(t).bound;
  if (bound > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(bound);
}

const Redex& choose(const std::vector<Redex>& rs, const Strategy& s, XorShift64Star& rng) {
  switch (s.kind) {
    case StrategyKind::LeftmostOutermost:
      return rs.front();
    case StrategyKind::RightmostInnermost: {
      const Redex* best = nullptr;
      for (const auto& r : rs) {
        bool innermost = std::none_of(rs.begin(), rs.end(), [&](const Redex& o) {
          return o.path.size() > r.path.size() && r.path.is_prefix_of(o.path);
        });
        if (innermost && (!best || best->path < r.path)) best = &r;
      }
      return *best;
    }
    case StrategyKind::Random:
      return rs[rng.below(rs.size())];
  }
  return rs.front();
}

std::string excerpt(const TermPtr& t) {
  std::string s = print(t);
  if (s.size() > 240) s = s.substr(0, 240) + " ...";
  return s;
}

MetricSnapshot monitored_snapshot(const TermPtr& t, std::uint64_t n, std::size_t step) {
  try {
    return snapshot(t, n);
  } catch (const RankTooSmall& e) {
    throw MonitorViolation("after step " + std::to_string(step) + ": rank exceeds n: " + e.what());
  } catch (const NotATerm& e) {
    throw MonitorViolation("after step " + std::to_string(step) + ": result is not a term: " + e.what());
  }
}

struct Explorer {
  std::uint64_t cap = 0;
  std::uint64_t visited = 0;
  std::vector<TraceStep> stack;
  std::vector<Trace> out;
  TermPtr root;

  void run(const TermPtr& t) {
    if (++visited > cap) throw CapExceeded("more than " + std::to_string(cap) + " reduction-tree nodes");
    auto rs = redexes(t);
    if (rs.empty()) {
      Trace tr;
      tr.initial = root;
      tr.steps = stack;
      tr.final = t;
      out.push_back(std::move(tr));
      return;
    }
    for (const auto& r : rs) {
      TermPtr next = step_unchecked(t, r.path, r.rule);
      stack.push_back({r.path, r.rule, next, std::nullopt});
      run(next);
      stack.pop_back();
    }
  }
};

}  // namespace

std::string to_string(RuleLabel r) { return kRuleNames[static_cast<int>(r)]; }

std::optional<RuleLabel> rule_from_string(const std::string& s) {
  if (s == "β") return RuleLabel::Beta;
  for (int i = 0; i < 9; ++i)
    if (s == kRuleNames[i]) return static_cast<RuleLabel>(i);
  return std::nullopt;
}

bool is_commutation(RuleLabel r) {
  return r == RuleLabel::Com1 || r == RuleLabel::Com2 || r == RuleLabel::ComPair || r == RuleLabel::ComCase;
}

std::string Strategy::name() const {
  switch (kind) {
    case StrategyKind::LeftmostOutermost: return "leftmost-outermost";
    case StrategyKind::RightmostInnermost: return "rightmost-innermost";
    case StrategyKind::Random: return "random(" + std::to_string(seed) + ")";
  }
  return "?";
}

std::uint64_t XorShift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t XorShift64Star::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

std::vector<Redex> redexes(const TermPtr& t) {
  std::vector<Redex> out;
  Path at;
  collect(t, at, out);
  return out;
}

TermPtr step_unchecked(const TermPtr& t, const Path& at, RuleLabel rule) {
  const TermPtr& sub = subterm_at(t, at);
  if (sub->kind() == Kind::Marker) throw MarkerPresent("type marker at " + at.to_string());
  auto m = match(*sub);
  if (!m || *m != rule) throw NotARedex("no " + to_string(rule) + " redex at " + at.to_string());
  return replace_at(t, at, contract(sub, rule));
}

TermPtr step(const TermPtr& t, const Path& at, RuleLabel rule) {
  if (!analyze(t).is_term) throw NotATerm("step on a pseudo-term that is not a term");
  return step_unchecked(t, at, rule);
}

Trace normalize(const TermPtr& t, const NormalizeOptions& options) {
  TermInfo info = analyze(t);
  if (!info.is_term) throw NotATerm("normalize requires a term");
  Trace tr;
  tr.initial = t;
  tr.strategy = options.strategy;
  std::uint64_t cap = cap_from(t, options);
  std::uint64_t n = options.n.value_or(std::max<std::uint64_t>(1, info.rank));
  if (options.monitor) tr.initial_metrics = monitored_snapshot(t, n, 0);

  XorShift64Star rng(options.strategy.seed);
  TermPtr cur = t;
  std::vector<Redex> rs;
  Redex lo;
  for (;;) {
    const Redex* pick = nullptr;
    if (options.strategy.kind == StrategyKind::LeftmostOutermost) {
      Path at;
      if (first(cur, at, lo)) pick = &lo;
    } else {
      rs = redexes(cur);
      if (!rs.empty()) pick = &choose(rs, options.strategy, rng);
    }
    if (!pick) break;
    if (tr.steps.size() >= cap)
      throw StepCapExceeded("no normal form within " + std::to_string(cap) + " steps");
    const Redex& r = *pick;
    TermPtr next = step_unchecked(cur, r.path, r.rule);
    TraceStep s{r.path, r.rule, options.keep_terms ? next : nullptr, std::nullopt};
    if (options.monitor) {
      const MetricSnapshot& before = tr.steps.empty() ? *tr.initial_metrics : *tr.steps.back().metrics;
      MetricSnapshot after = monitored_snapshot(next, n, tr.steps.size() + 1);
      Verdict v = check_step(before, after, r.rule);
      if (!v.ok)
        throw MonitorViolation("step " + std::to_string(tr.steps.size() + 1) + " (" + to_string(r.rule) + " at " +
                               r.path.to_string() + "): " + v.clause + " on " + excerpt(cur));
      s.metrics = after;
    }
    tr.steps.push_back(std::move(s));
    cur = std::move(next);
  }
  tr.final = cur;
  return tr;
}

std::vector<Trace> all_sequences(const TermPtr& t, std::uint64_t node_cap) {
  if (!analyze(t).is_term) throw NotATerm("all_sequences requires a term");
  Explorer ex;
  ex.cap = node_cap;
  ex.root = t;
  ex.run(t);
  return std::move(ex.out);
}

}  // namespace slc
