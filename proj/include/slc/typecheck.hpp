#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slc/analysis.hpp"
#include "slc/errors.hpp"
#include "slc/parser.hpp"

namespace slc {

enum class Usage : std::uint8_t { Unused, Used, Promoted };

struct ContextEntry {
  std::string name;
  FormulaPtr type;
  Usage usage = Usage::Unused;
  /// Bound by let-!: may be used any number of times at depth 0, or once
  /// inside an immediately enclosed !.
  bool banged = false;
};

using Context = std::vector<ContextEntry>;

/// Closed, already-checked definitions usable anywhere by name.
using Globals = std::map<std::string, FormulaPtr>;

struct Judgement {
  Context context;  // usage-marked
  TermPtr term;
  FormulaPtr formula;
};

/// Kind is one of TypeMismatch, LinearityViolation, DepthViolation,
/// ForallEscape, UnknownVariable.
class TypeError : public Error {
 public:
  TypeError(std::string kind, Path path, std::string rule, const std::string& message,
            std::string expected = {}, std::string found = {})
      : Error(std::move(kind), message),
        path_(std::move(path)),
        rule_(std::move(rule)),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  const Path& path() const noexcept { return path_; }
  const std::string& rule() const noexcept { return rule_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  Path path_;
  std::string rule_;
  std::string expected_;
  std::string found_;
};

/// Checks `t` (markers and binder annotations allowed) against `expected`.
/// Throws TypeError. On success the erased term is a well-formed term;
/// NotATerm is thrown otherwise.
Judgement check(const Context& ctx, const TermPtr& t, const FormulaPtr& expected, const Globals& globals = {});

/// Type of `t` when it can be synthesized (annotated binders, markers).
FormulaPtr synthesize(const Context& ctx, const TermPtr& t, const Globals& globals = {});

struct DefinitionReport {
  std::string name;
  std::optional<FormulaPtr> type;  // the ascription, when it checked
  std::optional<TypeError> error;
  /// Erasure of the fully inlined definition is a well-formed term.
  bool erased_well_formed = false;
  bool checked = false;  // false when the definition has no ascription
};

struct ModuleReport {
  std::vector<DefinitionReport> definitions;

  bool ok() const;
  const DefinitionReport* find(const std::string& name) const;
};

/// Checks every ascribed definition. Earlier ascribed definitions are in
/// scope at their ascription; unascribed ones are inlined.
ModuleReport check_module(const SourceModule& m);

}  // namespace slc
