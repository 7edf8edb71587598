#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slc/metrics.hpp"
#include "slc/reduction.hpp"

namespace slc {

/// Every well-formed core term (variables, abstraction, application, !,
/// let-!) of exactly `size`, one representative per alpha class. Bound
/// names are x0, x1, ... by binder nesting; free names are a0, a1, ... in
/// order of occurrence.
std::vector<TermPtr> enumerate_well_formed(std::uint64_t size);

struct BoundCheckRow {
  std::uint64_t size = 0;
  std::uint64_t terms = 0;
  std::uint64_t sequences = 0;
  std::uint64_t longest = 0;  // longest sequence seen at this size
};

struct BoundCheckFailure {
  TermPtr term;
  std::string reason;
};

struct BoundCheckReport {
  std::vector<BoundCheckRow> rows;
  std::optional<BoundCheckFailure> failure;

  bool ok() const { return !failure.has_value(); }
  std::uint64_t terms() const;
  std::uint64_t sequences() const;
};

struct BoundCheckOptions {
  /// Reduction-tree nodes explored per term before giving up.
  std::uint64_t node_cap = 1'000'000;
  /// Applied to every sequence set before checking. Test hook.
  std::function<void(const TermPtr&, std::vector<Trace>&)> tamper;
};

/// Runs all_sequences on every well-formed term up to `max_size` and checks
/// that each sequence has length at most |t|^(3(d+1)) and that all
/// sequences of a term end in alpha-equivalent normal forms. Stops at the
/// first failure.
BoundCheckReport bound_check(std::uint64_t max_size, const BoundCheckOptions& options = {});

/// The same checks for a single term. Returns the reason on failure.
std::optional<std::string> check_sequences(const TermPtr& t, const std::vector<Trace>& seqs);

}  // namespace slc
