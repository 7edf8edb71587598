#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slc/formula.hpp"
#include "slc/term.hpp"

namespace slc {

/// Parametric type abbreviation, e.g. `type L(A) = mu X. 1 + (A * X)`.
/// Expanded during parsing; never part of a Formula.
struct TypeAlias {
  std::vector<std::string> params;
  FormulaPtr body;
};
using TypeAliases = std::map<std::string, TypeAlias>;

struct Definition {
  std::string name;
  std::optional<FormulaPtr> ascription;
  TermPtr body;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Parsed `.slc` source: definitions in file order plus the type
/// abbreviations declared in the file.
struct SourceModule {
  std::vector<Definition> definitions;
  TypeAliases aliases;

  const Definition* find(std::string_view name) const;
};

/// Parses a whole source file. `known_aliases` are visible to the file
/// (e.g. those of the bundled library).
SourceModule parse(std::string_view text, const TypeAliases& known_aliases = {});

TermPtr parse_term(std::string_view text, const TypeAliases& aliases = {});
FormulaPtr type_parse(std::string_view text, const TypeAliases& aliases = {});

}  // namespace slc
