#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slc/analysis.hpp"
#include "slc/term.hpp"

namespace slc {

enum class RuleLabel : std::uint8_t {
  Beta,
  Bang,
  Com1,
  Com2,
  Pair,     // let <t1,t2> be <x,y> in u
  CaseL,    // case inl(u) of ...
  CaseR,    // case inr(u) of ...
  ComPair,  // (let u be <x,y> in t) v
  ComCase,  // (case u of ...) v
};

std::string to_string(RuleLabel r);
std::optional<RuleLabel> rule_from_string(const std::string& s);
/// Commutation rules leave the weight unchanged.
bool is_commutation(RuleLabel r);

struct Redex {
  Path path;
  RuleLabel rule;
  bool operator==(const Redex&) const = default;
};

/// Per-step metric values, filled in when a trace is monitored.
struct MetricSnapshot {
  std::uint64_t n = 1;
  std::uint64_t weight = 0;
  std::uint64_t nlet = 0;
  std::uint64_t measure = 0;
  std::uint64_t rank = 0;
  std::uint64_t size = 0;
  std::uint64_t depth = 0;
};

struct TraceStep {
  Path path;
  RuleLabel rule;
  TermPtr result;
  std::optional<MetricSnapshot> metrics;  // of `result`
};

enum class StrategyKind { LeftmostOutermost, RightmostInnermost, Random };

struct Strategy {
  StrategyKind kind = StrategyKind::LeftmostOutermost;
  std::uint64_t seed = 0;

  std::string name() const;
};

struct Trace {
  TermPtr initial;
  std::optional<MetricSnapshot> initial_metrics;
  std::vector<TraceStep> steps;
  TermPtr final;
  Strategy strategy;

  std::size_t length() const noexcept { return steps.size(); }
};

/// All redexes of a marker-free term, leftmost-outermost (pre-order) first.
std::vector<Redex> redexes(const TermPtr& t);

/// Contracts the redex at `at`. Throws NotARedex if `rule` does not match
/// there and NotATerm if `t` is not a term.
TermPtr step(const TermPtr& t, const Path& at, RuleLabel rule);
/// As `step` without the termhood check; for engines that already
/// established it for the initial term.
TermPtr step_unchecked(const TermPtr& t, const Path& at, RuleLabel rule);

struct NormalizeOptions {
  Strategy strategy;
  bool monitor = false;
  /// 0 means: the certificate bound |t|^(3(d+1)).
  std::uint64_t step_cap = 0;
  /// Weight parameter for the monitor; defaults to max(1, rank(t)).
  std::optional<std::uint64_t> n;
  /// Keep every intermediate term in the trace (otherwise only `final`).
  bool keep_terms = true;
};

/// Reduces to normal form. Throws StepCapExceeded, MonitorViolation,
/// NotATerm.
Trace normalize(const TermPtr& t, const NormalizeOptions& options = {});

/// Every maximal reduction sequence of `t`. Throws CapExceeded when more
/// than `node_cap` reduction-tree nodes would be visited.
std::vector<Trace> all_sequences(const TermPtr& t, std::uint64_t node_cap);

/// Xorshift64* generator used by the random strategy: state is advanced
/// by x ^= x >> 12; x ^= x << 25; x ^= x >> 27 and the output is
/// x * 0x2545F4914F6CDD1D. A zero seed is replaced by 0x9E3779B97F4A7C15.
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}
  std::uint64_t next();
  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace slc
