#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slc/term.hpp"

namespace slc {

/// Address of a subterm occurrence: child indices from the root.
struct Path {
  std::vector<std::uint8_t> steps;

  bool empty() const noexcept { return steps.empty(); }
  std::size_t size() const noexcept { return steps.size(); }
  Path child(std::uint8_t i) const {
    Path p = *this;
    p.steps.push_back(i);
    return p;
  }
  bool is_prefix_of(const Path& other) const;
  std::string to_string() const;  // "[0,1,1]"

  auto operator<=>(const Path&) const = default;
};

struct FailureWitness {
  Path path;
  std::string clause;
};

/// Result of the termhood analysis of a pseudo-term.
struct TermInfo {
  std::set<std::string> free_vars;
  std::set<std::string> temp_vars;
  std::map<std::string, std::uint64_t> occ;
  std::uint64_t size = 0;
  std::uint64_t depth = 0;
  std::uint64_t rank = 0;
  bool is_term = false;
  bool is_well_formed = false;
  std::optional<FailureWitness> failure_witness;
};

/// One-pass computation of every TermInfo field. Throws MarkerPresent when
/// `t` still carries type markers; plain lets are analyzed as the redex
/// they abbreviate.
TermInfo analyze(const TermPtr& t);

const TermPtr& subterm_at(const TermPtr& t, const Path& p);
/// Rebuilds the spine of `t` with the subterm at `p` replaced.
TermPtr replace_at(const TermPtr& t, const Path& p, TermPtr replacement);

/// Number of strictly enclosing Bang nodes of the occurrence at `p`.
std::uint64_t depth_of(const TermPtr& t, const Path& p);

/// Capture-avoiding substitution t[u/x]. Binders that would capture are
/// renamed to `name$k` with the smallest unused k.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u);
/// Simultaneous substitution.
TermPtr substitute_many(const TermPtr& t, const std::map<std::string, TermPtr>& sub);

/// Equality up to consistent renaming of bound variables.
bool alpha_eq(const TermPtr& a, const TermPtr& b);
/// Print form with bound variables replaced by binding-depth indices; two
/// terms are alpha_eq iff their keys are equal.
std::string alpha_key(const TermPtr& t);

/// Free occurrences of `x` in `t`, with the additive
/// reading of case branches.
std::uint64_t occurrences(const TermPtr& t, const std::string& x);

}  // namespace slc
