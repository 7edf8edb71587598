#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "slc/formula.hpp"

namespace slc {

enum class Kind : std::uint8_t {
  Var,
  Abs,
  App,
  Bang,
  LetBang,  // let u be !x in t
  Pair,
  LetPair,  // let u be <x, y> in t
  Inl,
  Inr,
  Case,  // case u of inl(x) => t1 | inr(y) => t2
  Unit,
  Marker,
  Let,  // let u be x in t, sugar for ((\x. t) u)
};

enum class MarkerKind : std::uint8_t { Gen, Inst, Fold, Unfold };

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable pseudo-term node. Children are ordered so that their index is
/// the step of a Path: Abs body 0; App fun 0, arg 1; Bang 0; LetBang,
/// LetPair and Let subject 0, body 1; Pair 0/1; Inl/Inr 0; Case subject 0,
/// branches 1 and 2; Marker body 0.
///
/// Each node caches its size and its sorted free-variable list.
class Term {
 public:
  static TermPtr var(std::string name);
  static TermPtr abs(std::string name, TermPtr body, FormulaPtr annotation = nullptr);
  static TermPtr app(TermPtr fun, TermPtr arg);
  static TermPtr bang(TermPtr body);
  static TermPtr let_bang(TermPtr subject, std::string name, TermPtr body);
  static TermPtr pair(TermPtr left, TermPtr right);
  static TermPtr let_pair(TermPtr subject, std::string left, std::string right, TermPtr body);
  static TermPtr inl(TermPtr body);
  static TermPtr inr(TermPtr body);
  static TermPtr case_of(TermPtr subject, std::string left, TermPtr left_branch, std::string right,
                         TermPtr right_branch);
  static TermPtr unit();
  static TermPtr gen(std::string type_var, TermPtr body);
  static TermPtr inst(TermPtr body, FormulaPtr type);
  static TermPtr fold(FormulaPtr type, TermPtr body);
  static TermPtr unfold(TermPtr body);
  static TermPtr let_plain(TermPtr subject, std::string name, TermPtr body);

  /// Same constructor and payload as `self`, new children.
  static TermPtr with_children(const Term& self, std::vector<TermPtr> children);

  Kind kind() const noexcept { return kind_; }
  MarkerKind marker() const noexcept { return marker_; }
  /// Variable name, or the first bound name (Abs, LetBang, LetPair, Let,
  /// Case left branch), or the type variable of a Gen marker.
  const std::string& name() const noexcept { return name_; }
  /// Second bound name (LetPair right, Case right branch).
  const std::string& name2() const noexcept { return name2_; }
  /// Binder annotation of Abs, or the formula of Inst/Fold markers.
  const FormulaPtr& formula() const noexcept { return formula_; }
  const std::vector<TermPtr>& children() const noexcept { return children_; }
  const TermPtr& child(std::size_t i) const { return children_.at(i); }

  std::uint64_t size() const noexcept { return size_; }
  /// Sorted, duplicate-free.
  const std::vector<std::string>& free_vars() const noexcept { return free_; }
  bool has_free(const std::string& x) const;
  /// True when the subtree contains a Marker, a binder annotation or a plain let.
  bool has_sugar_annotations() const noexcept { return annotated_; }
  /// No redex, marker or plain let anywhere in the subtree.
  bool normal() const noexcept { return normal_; }

  /// Names bound by this node in child `i`.
  std::vector<std::string> binders_of(std::size_t i) const;

 private:
  Term(Kind kind, std::vector<TermPtr> children);
  static TermPtr finish(Term* raw);

  Kind kind_;
  MarkerKind marker_ = MarkerKind::Gen;
  std::string name_;
  std::string name2_;
  FormulaPtr formula_;
  std::vector<TermPtr> children_;
  std::uint64_t size_ = 0;
  std::vector<std::string> free_;
  bool annotated_ = false;
  bool normal_ = true;
};

/// Structural equality, bound names included; annotations compared up to
/// alpha-equivalence of formulas.
bool structurally_equal(const TermPtr& a, const TermPtr& b);

/// Canonical concrete syntax. Applications are always parenthesized.
std::string print(const TermPtr& t);

/// Drops every type marker and binder annotation.
TermPtr erase_markers(const TermPtr& t);

/// Rewrites `let u be x in t` into `((\x. t) u)` everywhere.
TermPtr expand_plain_let(const TermPtr& t);

}  // namespace slc
