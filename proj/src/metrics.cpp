#include "slc/metrics.hpp"

#include <algorithm>

#include "slc/errors.hpp"

namespace slc {

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("weight exceeds 64 bits");
  return r;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("weight exceeds 64 bits");
  return r;
}

struct LetTally {
  std::uint64_t count = 0;
  std::uint64_t body_weights = 0;
};

// Weight of `t`, recording every let-like node's body weight on the way.
std::uint64_t weigh(const TermPtr& t, std::uint64_t n, LetTally* tally) {
  switch (t->kind()) {
    case Kind::Var:
    case Kind::Unit:
      return 1;
    case Kind::Abs:
    case Kind::Inl:
    case Kind::Inr:
      return add(weigh(t->child(0), n, tally), 1);
    case Kind::App:
      return add(weigh(t->child(0), n, tally), weigh(t->child(1), n, tally));
    case Kind::Bang:
      return add(mul(n, weigh(t->child(0), n, tally)), 1);
    case Kind::Pair:
      return add(add(weigh(t->child(0), n, tally), weigh(t->child(1), n, tally)), 1);
    case Kind::LetBang:
    case Kind::LetPair: {
      std::uint64_t body = weigh(t->child(1), n, tally);
      if (tally) {
        tally->count += 1;
        tally->body_weights = add(tally->body_weights, body);
      }
      std::uint64_t w = add(weigh(t->child(0), n, tally), body);
      return t->kind() == Kind::LetPair ? add(w, 1) : w;
    }
    case Kind::Case: {
      std::uint64_t s = weigh(t->child(0), n, tally);
      std::uint64_t b = std::max(weigh(t->child(1), n, tally), weigh(t->child(2), n, tally));
      return add(add(s, b), 1);
    }
    case Kind::Marker:
      throw MarkerPresent("type marker present; erase markers before computing metrics");
    case Kind::Let:
      throw PlainLetPresent("plain let present; expand it before computing metrics");
  }
  return 0;
}

BigInt big_weigh(const TermPtr& t, const BigInt& n) {
  switch (t->kind()) {
    case Kind::Var:
    case Kind::Unit:
      return 1;
    case Kind::Abs:
    case Kind::Inl:
    case Kind::Inr:
      return big_weigh(t->child(0), n) + 1;
    case Kind::App:
    case Kind::LetBang:
      return big_weigh(t->child(0), n) + big_weigh(t->child(1), n);
    case Kind::Bang:
      return n * big_weigh(t->child(0), n) + 1;
    case Kind::Pair:
    case Kind::LetPair:
      return big_weigh(t->child(0), n) + big_weigh(t->child(1), n) + 1;
    case Kind::Case:
      return big_weigh(t->child(0), n) + std::max(big_weigh(t->child(1), n), big_weigh(t->child(2), n)) + 1;
    case Kind::Marker:
      throw MarkerPresent("type marker present; erase markers before computing metrics");
    case Kind::Let:
      throw PlainLetPresent("plain let present; expand it before computing metrics");
  }
  return 0;
}

TermInfo require_term(const TermPtr& t) {
  TermInfo info = analyze(t);
  if (!info.is_term) {
    std::string why = info.failure_witness ? info.failure_witness->clause + " at " +
                                                 info.failure_witness->path.to_string()
                                           : "not a term";
    throw NotATerm(why);
  }
  return info;
}

std::string rule_clause(RuleLabel r, const char* what) { return to_string(r) + "-" + what; }

}  // namespace

namespace detail {

std::uint64_t raw_weight(const TermPtr& t, std::uint64_t n) { return weigh(t, n, nullptr); }

BigInt big_weight(const TermPtr& t, const BigInt& n) { return big_weigh(t, n); }

std::uint64_t raw_measure(const TermPtr& t, std::uint64_t n) {
  LetTally tally;
  std::uint64_t w = weigh(t, n, &tally);
  return mul(tally.count, w) - tally.body_weights;
}

}  // namespace detail

std::uint64_t weight(const TermPtr& t, std::uint64_t n) {
  require_term(t);
  return detail::raw_weight(t, n);
}

std::uint64_t nlet(const TermPtr& t) {
  require_term(t);
  LetTally tally;
  weigh(t, 1, &tally);
  return tally.count;
}

std::uint64_t measure(const TermPtr& t, std::uint64_t n) {
  TermInfo info = require_term(t);
  if (n < info.rank)
    throw RankTooSmall("weight parameter " + std::to_string(n) + " is below rank " + std::to_string(info.rank));
  return detail::raw_measure(t, n);
}

Certificate certificate(const TermPtr& t) {
  TermInfo info = require_term(t);
  Certificate c;
  c.size = info.size;
  c.depth = info.depth;
  c.degree = 3 * (info.depth + 1);
  c.bound = boost::multiprecision::pow(BigInt(info.size), static_cast<unsigned>(c.degree));
  c.weight_at_size = detail::big_weight(t, BigInt(info.size));
  c.weight_cube = c.weight_at_size * c.weight_at_size * c.weight_at_size;
  return c;
}

MetricSnapshot snapshot(const TermPtr& t, std::uint64_t n) {
  TermInfo info = require_term(t);
  if (n < info.rank)
    throw RankTooSmall("weight parameter " + std::to_string(n) + " is below rank " + std::to_string(info.rank));
  if (n == 0) throw RankTooSmall("weight parameter must be positive");
  MetricSnapshot s;
  s.n = n;
  LetTally tally;
  s.weight = weigh(t, n, &tally);
  s.nlet = tally.count;
  s.measure = mul(tally.count, s.weight) - tally.body_weights;
  s.rank = info.rank;
  s.size = info.size;
  s.depth = info.depth;
  return s;
}

Verdict check_step(const MetricSnapshot& before, const MetricSnapshot& after, RuleLabel rule) {
  if (before.n != after.n) return Verdict::violation("snapshots-at-different-n");
  if (before.n < before.rank) return Verdict::violation("n-below-rank");
  if (!is_commutation(rule)) {
    if (after.weight < before.weight) return Verdict::pass();
    return Verdict::violation(rule_clause(rule, "weight"));
  }
  if (after.weight != before.weight) return Verdict::violation(rule_clause(rule, "weight-changed"));
  if (after.measure < before.measure) return Verdict::pass();
  return Verdict::violation(rule_clause(rule, "measure"));
}

Verdict key_lemma_check(const TermPtr& t, const std::string& x, const TermPtr& u, std::uint64_t n) {
  TermInfo ti = analyze(t);
  if (!ti.is_term) throw SideConditionUnmet("t is not a term");
  if (!analyze(u).is_term) throw SideConditionUnmet("u is not a term");
  if (n == 0 || n < ti.rank) throw SideConditionUnmet("n must be positive and at least rank(t)");
  std::uint64_t wt = detail::raw_weight(t, n);
  std::uint64_t wu = detail::raw_weight(u, n);
  std::uint64_t after = detail::raw_weight(substitute(t, x, u), n);
  if (ti.temp_vars.count(x)) {
    if (after <= add(wt, mul(n, wu))) return Verdict::pass();
    return Verdict::violation("substitution-temporary");
  }
  std::uint64_t k = occurrences(t, x);
  if (after <= add(wt, mul(k, wu))) return Verdict::pass();
  return Verdict::violation("substitution-non-temporary");
}

}  // namespace slc
