#pragma once

#include <memory>
#include <set>
#include <string>

namespace slc {

enum class FormulaKind { Var, Lolli, Forall, Bang, Mu, One, Tensor, Plus };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Types of the affine soft logic with fix-points: variables, linear
/// implication, second-order quantifier, the soft exponential, recursive
/// types, and the primitive unit, tensor and sum.
class Formula {
 public:
  static FormulaPtr var(std::string name);
  static FormulaPtr lolli(FormulaPtr from, FormulaPtr to);
  static FormulaPtr forall(std::string var, FormulaPtr body);
  static FormulaPtr bang(FormulaPtr body);
  static FormulaPtr mu(std::string var, FormulaPtr body);
  static FormulaPtr one();
  static FormulaPtr tensor(FormulaPtr left, FormulaPtr right);
  static FormulaPtr plus(FormulaPtr left, FormulaPtr right);

  FormulaKind kind() const noexcept { return kind_; }
  /// Variable name, or the bound variable of Forall/Mu.
  const std::string& name() const noexcept { return name_; }
  /// Sole child of Bang/Forall/Mu, left child of binary connectives.
  const FormulaPtr& left() const noexcept { return left_; }
  const FormulaPtr& right() const noexcept { return right_; }
  const FormulaPtr& body() const noexcept { return left_; }

 private:
  Formula(FormulaKind kind, std::string name, FormulaPtr left, FormulaPtr right)
      : kind_(kind), name_(std::move(name)), left_(std::move(left)), right_(std::move(right)) {}

  FormulaKind kind_;
  std::string name_;
  FormulaPtr left_;
  FormulaPtr right_;
};

std::set<std::string> free_type_vars(const FormulaPtr& f);

/// Capture-avoiding substitution of `replacement` for the free type
/// variable `var`.
FormulaPtr subst_type(const FormulaPtr& f, const std::string& var, const FormulaPtr& replacement);

/// Equality up to renaming of Forall/Mu binders.
bool formula_alpha_eq(const FormulaPtr& a, const FormulaPtr& b);

/// Concrete syntax: `A -o B`, `!A`, `forall a. A`, `mu X. A`, `A * B`,
/// `A + B`, `1`. Output always re-parses to an alpha-equal formula.
std::string type_print(const FormulaPtr& f);

}  // namespace slc
