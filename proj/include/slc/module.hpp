#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slc/parser.hpp"

namespace slc {

struct ResolvedDefinition {
  std::string name;
  std::optional<FormulaPtr> ascription;
  TermPtr source;  // as written
  TermPtr term;    // references inlined, plain lets expanded
};

/// Definitions with every reference to an earlier definition inlined.
/// Definitions are closed after resolution unless they mention genuinely
/// free names.
struct Environment {
  std::vector<ResolvedDefinition> definitions;
  TypeAliases aliases;

  const ResolvedDefinition* find(std::string_view name) const;
  /// Throws UnknownDefinition.
  const ResolvedDefinition& at(std::string_view name) const;
  /// Inlines references to definitions of this environment in `t`.
  TermPtr resolve(const TermPtr& t) const;
};

/// Resolves `m` on top of `prelude` (which may be empty). Names of `m`
/// shadow the prelude.
Environment resolve_module(const SourceModule& m, const Environment& prelude = {});

}  // namespace slc
