#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "slc/reduction.hpp"

namespace slc {

using BigInt = boost::multiprecision::cpp_int;

/// Weight W(t,n):
///   W(x) = W(()) = 1            W(\x.t) = W(t) + 1
///   W(!u) = n W(u) + 1          W(t1 t2) = W(t1) + W(t2)
///   W(let u be !x in t) = W(u) + W(t)
/// extended to the derived constructs by
///   W(<t1,t2>) = W(t1) + W(t2) + 1    W(let u be <x,y> in t) = W(u) + W(t) + 1
///   W(inl t) = W(inr t) = W(t) + 1    W(case u of ..t1..t2) = W(u) + max(W(t1), W(t2)) + 1
/// Throws NotATerm, ArithmeticOverflow.
std::uint64_t weight(const TermPtr& t, std::uint64_t n);

/// Number of let-! and let-<> occurrences.
std::uint64_t nlet(const TermPtr& t);

/// Sum over let-! and let-<> occurrences t1 (with body t2) of
/// W(t,n) - W(t2,n). Throws RankTooSmall when n < rank(t).
std::uint64_t measure(const TermPtr& t, std::uint64_t n);

/// Concrete polynomial bound on the length of every reduction sequence.
struct Certificate {
  std::uint64_t size = 0;
  std::uint64_t depth = 0;
  std::uint64_t degree = 0;  // 3(d+1)
  BigInt bound;              // size^degree
  BigInt weight_at_size;     // W(t, size)
  BigInt weight_cube;        // W(t, size)^3

  std::string bound_string() const { return bound.str(); }
};

Certificate certificate(const TermPtr& t);

/// All metric values of `t` at weight parameter n. Throws RankTooSmall.
MetricSnapshot snapshot(const TermPtr& t, std::uint64_t n);

struct Verdict {
  bool ok = true;
  std::string clause;  // empty when ok, e.g. "beta-weight"

  static Verdict pass() { return {}; }
  static Verdict violation(std::string c) { return {false, std::move(c)}; }
};

/// Weight must strictly decrease under beta, bang, pair, case-l, case-r;
/// commutations must keep the weight and strictly decrease the measure.
Verdict check_step(const MetricSnapshot& before, const MetricSnapshot& after, RuleLabel rule);

/// Numerical check of the substitution bound
///   x not temporary in t, k occurrences:  W(t[u/x]) <= W(t) + k W(u)
///   x temporary in t:                     W(t[u/x]) <= W(t) + n W(u)
/// Throws SideConditionUnmet unless t and u are terms and n >= max(1, rank t).
Verdict key_lemma_check(const TermPtr& t, const std::string& x, const TermPtr& u, std::uint64_t n);

namespace detail {
/// Weight of an arbitrary pseudo-term, no termhood check.
std::uint64_t raw_weight(const TermPtr& t, std::uint64_t n);
BigInt big_weight(const TermPtr& t, const BigInt& n);
/// Measure and nlet without termhood or rank checks.
std::uint64_t raw_measure(const TermPtr& t, std::uint64_t n);
}  // namespace detail

}  // namespace slc
