#include "slc/term.hpp"

#include <algorithm>

namespace slc {

Term::Term(Kind kind, std::vector<TermPtr> children) : kind_(kind), children_(std::move(children)) {}

std::vector<std::string> Term::binders_of(std::size_t i) const {
  switch (kind_) {
    case Kind::Abs:
      return {name_};
    case Kind::LetBang:
    case Kind::Let:
      return i == 1 ? std::vector<std::string>{name_} : std::vector<std::string>{};
    case Kind::LetPair:
      return i == 1 ? std::vector<std::string>{name_, name2_} : std::vector<std::string>{};
    case Kind::Case:
      if (i == 1) return {name_};
      if (i == 2) return {name2_};
      return {};
    default:
      return {};
  }
}

namespace {

// Same shapes as the reduction rules. Markers and plain lets count as
// redexes so that searches reach them and report them.
bool redex_shape(const Term& t) {
  if (t.kind() == Kind::Marker || t.kind() == Kind::Let) return true;
  if (t.children().empty()) return false;
  Kind head = t.child(0)->kind();
  switch (t.kind()) {
    case Kind::App: return head == Kind::Abs || head == Kind::LetBang || head == Kind::LetPair || head == Kind::Case;
    case Kind::LetBang: return head == Kind::Bang || head == Kind::LetBang;
    case Kind::LetPair: return head == Kind::Pair;
    case Kind::Case: return head == Kind::Inl || head == Kind::Inr;
    default: return false;
  }
}

}  // namespace

TermPtr Term::finish(Term* raw) {
  std::uint64_t size = 0;
  bool annotated = raw->kind_ == Kind::Marker || raw->kind_ == Kind::Let || raw->formula_ != nullptr;
  std::vector<std::string> free;
  for (std::size_t i = 0; i < raw->children_.size(); ++i) {
    const auto& c = raw->children_[i];
    size += c->size_;
    annotated = annotated || c->annotated_;
    auto bound = raw->binders_of(i);
    for (const auto& v : c->free_)
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) free.push_back(v);
  }
  switch (raw->kind_) {
    case Kind::Var:
      size = 1;
      free.push_back(raw->name_);
      break;
    case Kind::Unit:
      size = 1;
      break;
    case Kind::App:
    case Kind::Marker:
      break;
    default:
      size += 1;
      break;
  }
  std::sort(free.begin(), free.end());
  free.erase(std::unique(free.begin(), free.end()), free.end());
  raw->size_ = size;
  raw->free_ = std::move(free);
  raw->annotated_ = annotated;
  raw->normal_ = !redex_shape(*raw) && std::all_of(raw->children_.begin(), raw->children_.end(),
                                                    [](const TermPtr& c) { return c->normal_; });
  return TermPtr(raw);
}

bool Term::has_free(const std::string& x) const { return std::binary_search(free_.begin(), free_.end(), x); }

TermPtr Term::var(std::string name) {
  auto* t = new Term(Kind::Var, {});
  t->name_ = std::move(name);
  return finish(t);
}

TermPtr Term::abs(std::string name, TermPtr body, FormulaPtr annotation) {
  auto* t = new Term(Kind::Abs, {std::move(body)});
  t->name_ = std::move(name);
  t->formula_ = std::move(annotation);
  return finish(t);
}

TermPtr Term::app(TermPtr fun, TermPtr arg) { return finish(new Term(Kind::App, {std::move(fun), std::move(arg)})); }

TermPtr Term::bang(TermPtr body) { return finish(new Term(Kind::Bang, {std::move(body)})); }

TermPtr Term::let_bang(TermPtr subject, std::string name, TermPtr body) {
  auto* t = new Term(Kind::LetBang, {std::move(subject), std::move(body)});
  t->name_ = std::move(name);
  return finish(t);
}

TermPtr Term::pair(TermPtr left, TermPtr right) {
  return finish(new Term(Kind::Pair, {std::move(left), std::move(right)}));
}

TermPtr Term::let_pair(TermPtr subject, std::string left, std::string right, TermPtr body) {
  auto* t = new Term(Kind::LetPair, {std::move(subject), std::move(body)});
  t->name_ = std::move(left);
  t->name2_ = std::move(right);
  return finish(t);
}

TermPtr Term::inl(TermPtr body) { return finish(new Term(Kind::Inl, {std::move(body)})); }
TermPtr Term::inr(TermPtr body) { return finish(new Term(Kind::Inr, {std::move(body)})); }

TermPtr Term::case_of(TermPtr subject, std::string left, TermPtr left_branch, std::string right,
                      TermPtr right_branch) {
  auto* t = new Term(Kind::Case, {std::move(subject), std::move(left_branch), std::move(right_branch)});
  t->name_ = std::move(left);
  t->name2_ = std::move(right);
  return finish(t);
}

TermPtr Term::unit() {
  static const TermPtr u = finish(new Term(Kind::Unit, {}));
  return u;
}

TermPtr Term::gen(std::string type_var, TermPtr body) {
  auto* t = new Term(Kind::Marker, {std::move(body)});
  t->marker_ = MarkerKind::Gen;
  t->name_ = std::move(type_var);
  return finish(t);
}

TermPtr Term::inst(TermPtr body, FormulaPtr type) {
  auto* t = new Term(Kind::Marker, {std::move(body)});
  t->marker_ = MarkerKind::Inst;
  t->formula_ = std::move(type);
  return finish(t);
}

TermPtr Term::fold(FormulaPtr type, TermPtr body) {
  auto* t = new Term(Kind::Marker, {std::move(body)});
  t->marker_ = MarkerKind::Fold;
  t->formula_ = std::move(type);
  return finish(t);
}

TermPtr Term::unfold(TermPtr body) {
  auto* t = new Term(Kind::Marker, {std::move(body)});
  t->marker_ = MarkerKind::Unfold;
  return finish(t);
}

TermPtr Term::let_plain(TermPtr subject, std::string name, TermPtr body) {
  auto* t = new Term(Kind::Let, {std::move(subject), std::move(body)});
  t->name_ = std::move(name);
  return finish(t);
}

TermPtr Term::with_children(const Term& self, std::vector<TermPtr> children) {
  auto* t = new Term(self.kind_, std::move(children));
  t->marker_ = self.marker_;
  t->name_ = self.name_;
  t->name2_ = self.name2_;
  t->formula_ = self.formula_;
  return finish(t);
}

bool structurally_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind() != b->kind() || a->marker() != b->marker() || a->name() != b->name() ||
      a->name2() != b->name2() || a->children().size() != b->children().size())
    return false;
  if ((a->formula() == nullptr) != (b->formula() == nullptr)) return false;
  if (a->formula() && !formula_alpha_eq(a->formula(), b->formula())) return false;
  for (std::size_t i = 0; i < a->children().size(); ++i)
    if (!structurally_equal(a->child(i), b->child(i))) return false;
  return true;
}

namespace {

// Constructs whose concrete syntax extends as far right as possible.
bool open_right(const Term& t) {
  switch (t.kind()) {
    case Kind::Abs:
    case Kind::LetBang:
    case Kind::LetPair:
    case Kind::Let:
    case Kind::Case:
      return true;
    case Kind::Marker:
      return t.marker() != MarkerKind::Inst;
    default:
      return false;
  }
}

void print_to(const TermPtr& t, std::string& out);

void print_closed(const TermPtr& t, std::string& out) {
  if (open_right(*t)) {
    out += '(';
    print_to(t, out);
    out += ')';
  } else {
    print_to(t, out);
  }
}

// Operand of `!` or of a postfix `@[A]`: must not be an application chain
// either, since both bind tighter than juxtaposition.
void print_tight(const TermPtr& t, std::string& out) {
  bool wrap = open_right(*t) || (t->kind() == Kind::Marker && t->marker() == MarkerKind::Inst &&
                                 t->child(0)->kind() != Kind::Var);
  if (wrap) out += '(';
  print_to(t, out);
  if (wrap) out += ')';
}

void print_to(const TermPtr& t, std::string& out) {
  switch (t->kind()) {
    case Kind::Var:
      out += t->name();
      return;
    case Kind::Unit:
      out += "()";
      return;
    case Kind::Abs:
      out += '\\';
      out += t->name();
      if (t->formula()) {
        out += ':';
        out += type_print(t->formula());
      }
      out += ". ";
      print_to(t->child(0), out);
      return;
    case Kind::App:
      out += '(';
      print_closed(t->child(0), out);
      out += ' ';
      print_closed(t->child(1), out);
      out += ')';
      return;
    case Kind::Bang:
      out += '!';
      print_tight(t->child(0), out);
      return;
    case Kind::LetBang:
    case Kind::LetPair:
    case Kind::Let:
      out += "let ";
      print_closed(t->child(0), out);
      out += " be ";
      if (t->kind() == Kind::LetBang) {
        out += '!' + t->name();
      } else if (t->kind() == Kind::LetPair) {
        out += '<' + t->name() + ", " + t->name2() + '>';
      } else {
        out += t->name();
      }
      out += " in ";
      print_to(t->child(1), out);
      return;
    case Kind::Pair:
      out += '<';
      print_to(t->child(0), out);
      out += ", ";
      print_to(t->child(1), out);
      out += '>';
      return;
    case Kind::Inl:
    case Kind::Inr:
      out += t->kind() == Kind::Inl ? "inl(" : "inr(";
      print_to(t->child(0), out);
      out += ')';
      return;
    case Kind::Case:
      out += "case ";
      print_closed(t->child(0), out);
      out += " of inl(" + t->name() + ") => ";
      print_to(t->child(1), out);
      out += " | inr(" + t->name2() + ") => ";
      print_to(t->child(2), out);
      return;
    case Kind::Marker:
      switch (t->marker()) {
        case MarkerKind::Gen:
          out += "gen[" + t->name() + "] ";
          print_to(t->child(0), out);
          return;
        case MarkerKind::Inst:
          if (t->child(0)->kind() == Kind::Bang) {
            out += '(';
            print_to(t->child(0), out);
            out += ')';
          } else {
            print_tight(t->child(0), out);
          }
          out += " @[" + type_print(t->formula()) + "]";
          return;
        case MarkerKind::Fold:
          out += "fold[" + type_print(t->formula()) + "] ";
          print_to(t->child(0), out);
          return;
        case MarkerKind::Unfold:
          out += "unfold ";
          print_to(t->child(0), out);
          return;
      }
  }
}

template <class F>
TermPtr map_children(const TermPtr& t, F&& f) {
  std::vector<TermPtr> kids;
  kids.reserve(t->children().size());
  bool changed = false;
  for (const auto& c : t->children()) {
    kids.push_back(f(c));
    changed = changed || kids.back() != c;
  }
  return changed ? Term::with_children(*t, std::move(kids)) : t;
}

}  // namespace

std::string print(const TermPtr& t) {
  std::string out;
  print_to(t, out);
  return out;
}

TermPtr erase_markers(const TermPtr& t) {
  if (!t->has_sugar_annotations()) return t;
  if (t->kind() == Kind::Marker) return erase_markers(t->child(0));
  if (t->kind() == Kind::Abs) return Term::abs(t->name(), erase_markers(t->child(0)));
  return map_children(t, erase_markers);
}

TermPtr expand_plain_let(const TermPtr& t) {
  if (!t->has_sugar_annotations()) return t;
  if (t->kind() == Kind::Let)
    return Term::app(Term::abs(t->name(), expand_plain_let(t->child(1))), expand_plain_let(t->child(0)));
  return map_children(t, expand_plain_let);
}

}  // namespace slc
