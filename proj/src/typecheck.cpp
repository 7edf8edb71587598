#include "slc/typecheck.hpp"

#include <algorithm>

#include "slc/module.hpp"

namespace slc {

namespace {

using Frame = std::vector<std::size_t>;

std::string show(const FormulaPtr& f) { return f ? type_print(f) : "?"; }

FormulaPtr unfold_mu(const FormulaPtr& mu) { return subst_type(mu->body(), mu->name(), mu); }

class Checker {
 public:
  Checker(Context ctx, const Globals& globals) : ctx_(std::move(ctx)), globals_(globals) {}

  Context& context() { return ctx_; }

  FormulaPtr synth(const TermPtr& t, const Frame& frame) {
    switch (t->kind()) {
      case Kind::Var:
        return use(t->name());
      case Kind::Abs: {
        if (!t->formula())
          fail("TypeMismatch", "right-arrow", "cannot synthesize the type of an unannotated abstraction");
        FormulaPtr body = bind(t->name(), t->formula(), 0, [&] { return synth(t->child(0), {}); });
        return Formula::lolli(t->formula(), body);
      }
      case Kind::App:
        return synth_app(t, nullptr);
      case Kind::Bang:
        return Formula::bang(promote(t, nullptr, frame));
      case Kind::LetBang:
        return let_bang(t, nullptr, frame);
      case Kind::Pair: {
        FormulaPtr a = at(0, [&] { return synth(t->child(0), {}); });
        FormulaPtr b = at(1, [&] { return synth(t->child(1), {}); });
        return Formula::tensor(a, b);
      }
      case Kind::LetPair:
        return let_pair(t, nullptr);
      case Kind::Inl:
      case Kind::Inr:
        fail("TypeMismatch", "plus-right", "cannot synthesize the type of an injection; check it against A + B");
      case Kind::Case:
        return case_of(t, nullptr);
      case Kind::Unit:
        return Formula::one();
      case Kind::Let:
        return plain_let(t, nullptr);
      case Kind::Marker:
        return marker(t, nullptr, frame);
    }
    fail("TypeMismatch", "?", "unknown construct");
  }

  void check(const TermPtr& t, const FormulaPtr& expected, const Frame& frame) {
    switch (t->kind()) {
      case Kind::Abs: {
        if (expected->kind() != FormulaKind::Lolli)
          mismatch("right-arrow", expected, nullptr, "abstraction checked against a non-arrow type");
        if (t->formula() && !formula_alpha_eq(t->formula(), expected->left()))
          mismatch("right-arrow", expected->left(), t->formula(), "binder annotation disagrees");
        bind(t->name(), expected->left(), 0, [&] {
          check(t->child(0), expected->right(), {});
          return expected;
        });
        return;
      }
      case Kind::App:
        if (t->child(0)->kind() == Kind::Abs && !t->child(0)->formula()) {
          synth_app(t, expected);
          return;
        }
        break;
      case Kind::Bang:
        if (expected->kind() != FormulaKind::Bang) mismatch("promotion", expected, nullptr, "! checked against a non-! type");
        promote(t, expected->body(), frame);
        return;
      case Kind::LetBang:
        let_bang(t, expected, frame);
        return;
      case Kind::Pair:
        if (expected->kind() != FormulaKind::Tensor) mismatch("tensor-right", expected, nullptr, "pair checked against a non-tensor type");
        at(0, [&] { check(t->child(0), expected->left(), {}); return expected; });
        at(1, [&] { check(t->child(1), expected->right(), {}); return expected; });
        return;
      case Kind::LetPair:
        let_pair(t, expected);
        return;
      case Kind::Inl:
      case Kind::Inr:
        if (expected->kind() != FormulaKind::Plus) mismatch("plus-right", expected, nullptr, "injection checked against a non-sum type");
        at(0, [&] {
          check(t->child(0), t->kind() == Kind::Inl ? expected->left() : expected->right(), {});
          return expected;
        });
        return;
      case Kind::Case:
        case_of(t, expected);
        return;
      case Kind::Let:
        plain_let(t, expected);
        return;
      case Kind::Marker:
        if (t->marker() == MarkerKind::Gen || t->marker() == MarkerKind::Fold) {
          marker(t, expected, frame);
          return;
        }
        break;
      default:
        break;
    }
    FormulaPtr found = synth(t, frame);
    if (!formula_alpha_eq(found, expected)) mismatch(rule_of(t), expected, found, "type mismatch");
  }

  [[noreturn]] void fail(const std::string& kind, const std::string& rule, const std::string& msg,
                         const std::string& expected = {}, const std::string& found = {}) {
    std::string full = msg + " at " + path_.to_string();
    if (!expected.empty() || !found.empty()) full += " (expected " + expected + ", found " + found + ")";
    throw TypeError(kind, path_, rule, full, expected, found);
  }

 private:
  [[noreturn]] void mismatch(const std::string& rule, const FormulaPtr& expected, const FormulaPtr& found,
                             const std::string& msg) {
    fail("TypeMismatch", rule, msg, show(expected), found ? show(found) : std::string("-"));
  }

  static std::string rule_of(const TermPtr& t) {
    switch (t->kind()) {
      case Kind::Var: return "variable";
      case Kind::App: return "application";
      case Kind::Unit: return "unit";
      case Kind::Marker:
        switch (t->marker()) {
          case MarkerKind::Inst: return "left-forall";
          case MarkerKind::Unfold: return "unfold";
          case MarkerKind::Gen: return "right-forall";
          case MarkerKind::Fold: return "fold";
        }
        return "marker";
      default: return "?";
    }
  }

  template <class F>
  FormulaPtr at(std::uint8_t i, F&& f) {
    path_.steps.push_back(i);
    FormulaPtr r = f();
    path_.steps.pop_back();
    return r;
  }

  template <class F>
  FormulaPtr bind(const std::string& x, const FormulaPtr& type, std::uint8_t child, F&& f, bool banged = false) {
    ctx_.push_back({x, type, Usage::Unused, banged});
    FormulaPtr r = at(child, f);
    ctx_.pop_back();
    return r;
  }

  ContextEntry* lookup(const std::string& x) {
    for (auto it = ctx_.rbegin(); it != ctx_.rend(); ++it)
      if (it->name == x) return &*it;
    return nullptr;
  }

  FormulaPtr use(const std::string& x) {
    if (ContextEntry* e = lookup(x)) {
      if (e->banged) {
        if (e->usage == Usage::Promoted)
          fail("DepthViolation", "mplex", "'" + x + "' is used both at depth 0 and under !");
        e->usage = Usage::Used;
        return e->type;
      }
      if (e->usage != Usage::Unused) fail("LinearityViolation", "variable", "'" + x + "' is used more than once");
      e->usage = Usage::Used;
      return e->type;
    }
    for (const Context* outer : outer_)
      for (const auto& e : *outer)
        if (e.name == x) fail("DepthViolation", "promotion", "'" + x + "' is used under ! without a let-! binder");
    if (auto g = globals_.find(x); g != globals_.end()) return g->second;
    fail("UnknownVariable", "variable", "unknown variable '" + x + "'");
  }

  // Types !t: the body sees only the let-! variables of the enclosing chain.
  FormulaPtr promote(const TermPtr& t, const FormulaPtr& expected, const Frame& frame) {
    Context inner;
    for (std::size_t idx : frame) inner.push_back({ctx_[idx].name, ctx_[idx].type, Usage::Unused, false});
    Context saved = std::move(ctx_);
    ctx_ = std::move(inner);
    outer_.push_back(&saved);
    FormulaPtr body;
    try {
      body = at(0, [&] {
        if (expected) {
          check(t->child(0), expected, {});
          return expected;
        }
        return synth(t->child(0), {});
      });
    } catch (...) {
      outer_.pop_back();
      ctx_ = std::move(saved);
      throw;
    }
    inner = std::move(ctx_);
    outer_.pop_back();
    ctx_ = std::move(saved);
    for (std::size_t i = 0; i < frame.size(); ++i) {
      if (inner[i].usage == Usage::Unused) continue;
      ContextEntry& e = ctx_[frame[i]];
      if (e.usage == Usage::Used) fail("DepthViolation", "promotion", "'" + e.name + "' is used both at depth 0 and under !");
      if (e.usage == Usage::Promoted) fail("LinearityViolation", "promotion", "'" + e.name + "' is promoted twice");
      e.usage = Usage::Promoted;
    }
    return body;
  }

  FormulaPtr let_bang(const TermPtr& t, const FormulaPtr& expected, const Frame& frame) {
    FormulaPtr s = at(0, [&] { return synth(t->child(0), {}); });
    if (s->kind() != FormulaKind::Bang) {
      path_.steps.push_back(0);
      mismatch("mplex", Formula::bang(Formula::var("_")), s, "let-! subject is not of a ! type");
    }
    ctx_.push_back({t->name(), s->body(), Usage::Unused, true});
    Frame inner = frame;
    inner.push_back(ctx_.size() - 1);
    FormulaPtr r = at(1, [&] {
      if (expected) {
        check(t->child(1), expected, inner);
        return expected;
      }
      return synth(t->child(1), inner);
    });
    ctx_.pop_back();
    return r;
  }

  FormulaPtr let_pair(const TermPtr& t, const FormulaPtr& expected) {
    FormulaPtr s = at(0, [&] { return synth(t->child(0), {}); });
    if (s->kind() != FormulaKind::Tensor) {
      path_.steps.push_back(0);
      mismatch("tensor-left", Formula::tensor(Formula::var("_"), Formula::var("_")), s, "let-<> subject is not a tensor");
    }
    ctx_.push_back({t->name(), s->left(), Usage::Unused, false});
    ctx_.push_back({t->name2(), s->right(), Usage::Unused, false});
    FormulaPtr r = at(1, [&] {
      if (expected) {
        check(t->child(1), expected, {});
        return expected;
      }
      return synth(t->child(1), {});
    });
    ctx_.pop_back();
    ctx_.pop_back();
    return r;
  }

  FormulaPtr plain_let(const TermPtr& t, const FormulaPtr& expected) {
    FormulaPtr s = at(0, [&] { return synth(t->child(0), {}); });
    return bind(t->name(), s, 1, [&] {
      if (expected) {
        check(t->child(1), expected, {});
        return expected;
      }
      return synth(t->child(1), {});
    });
  }

  FormulaPtr case_of(const TermPtr& t, FormulaPtr expected) {
    FormulaPtr s = at(0, [&] { return synth(t->child(0), {}); });
    if (s->kind() != FormulaKind::Plus) {
      path_.steps.push_back(0);
      mismatch("plus-left", Formula::plus(Formula::var("_"), Formula::var("_")), s, "case subject is not a sum");
    }
    Context before = ctx_;
    auto branch = [&](std::uint8_t i, const std::string& x, const FormulaPtr& a) {
      return bind(x, a, i, [&] {
        if (expected) {
          check(t->child(i), expected, {});
          return expected;
        }
        return synth(t->child(i), {});
      });
    };
    expected = branch(1, t->name(), s->left());
    Context left = std::move(ctx_);
    ctx_ = std::move(before);
    branch(2, t->name2(), s->right());
    for (std::size_t i = 0; i < ctx_.size(); ++i) ctx_[i].usage = std::max(ctx_[i].usage, left[i].usage);
    return expected;
  }

  FormulaPtr synth_app(const TermPtr& t, const FormulaPtr& expected) {
    const TermPtr& fun = t->child(0);
    if (fun->kind() == Kind::Abs && !fun->formula()) {
      // ((\x. u) v) with v synthesized first: the image of a cut.
      FormulaPtr a = at(1, [&] { return synth(t->child(1), {}); });
      return at(0, [&] {
        return bind(fun->name(), a, 0, [&] {
          if (expected) {
            check(fun->child(0), expected, {});
            return expected;
          }
          return synth(fun->child(0), {});
        });
      });
    }
    FormulaPtr f = at(0, [&] { return synth(fun, {}); });
    if (f->kind() != FormulaKind::Lolli) {
      path_.steps.push_back(0);
      mismatch("application", Formula::lolli(Formula::var("_"), Formula::var("_")), f, "applying a non-function");
    }
    at(1, [&] {
      check(t->child(1), f->left(), {});
      return f;
    });
    if (expected && !formula_alpha_eq(f->right(), expected)) mismatch("application", expected, f->right(), "type mismatch");
    return f->right();
  }

  void forall_side_condition(const TermPtr& body, const std::string& a) {
    for (const auto& x : body->free_vars()) {
      const ContextEntry* e = lookup(x);
      if (e && free_type_vars(e->type).count(a))
        fail("ForallEscape", "right-forall", "type variable '" + a + "' is free in the type of '" + x + "'");
    }
  }

  FormulaPtr marker(const TermPtr& t, const FormulaPtr& expected, const Frame& frame) {
    switch (t->marker()) {
      case MarkerKind::Gen: {
        const std::string& a = t->name();
        FormulaPtr body;
        if (expected) {
          if (expected->kind() != FormulaKind::Forall)
            mismatch("right-forall", expected, nullptr, "gen checked against a non-forall type");
          if (a != expected->name() && free_type_vars(expected).count(a))
            mismatch("right-forall", expected, nullptr, "gen variable '" + a + "' clashes with the expected type");
          FormulaPtr target = subst_type(expected->body(), expected->name(), Formula::var(a));
          at(0, [&] {
            check(t->child(0), target, frame);
            return target;
          });
        } else {
          body = at(0, [&] { return synth(t->child(0), frame); });
        }
        forall_side_condition(t->child(0), a);
        return expected ? expected : Formula::forall(a, body);
      }
      case MarkerKind::Inst: {
        FormulaPtr s = at(0, [&] { return synth(t->child(0), frame); });
        if (s->kind() != FormulaKind::Forall) {
          path_.steps.push_back(0);
          mismatch("left-forall", Formula::forall("_", Formula::var("_")), s, "instantiating a non-forall type");
        }
        return subst_type(s->body(), s->name(), t->formula());
      }
      case MarkerKind::Fold: {
        const FormulaPtr& mu = t->formula();
        if (mu->kind() != FormulaKind::Mu) mismatch("fold", mu, nullptr, "fold annotation is not a mu type");
        if (expected && !formula_alpha_eq(mu, expected)) mismatch("fold", expected, mu, "fold annotation disagrees");
        at(0, [&] {
          check(t->child(0), unfold_mu(mu), frame);
          return mu;
        });
        return mu;
      }
      case MarkerKind::Unfold: {
        FormulaPtr s = at(0, [&] { return synth(t->child(0), frame); });
        if (s->kind() != FormulaKind::Mu) {
          path_.steps.push_back(0);
          mismatch("unfold", Formula::mu("_", Formula::var("_")), s, "unfolding a non-mu type");
        }
        return unfold_mu(s);
      }
    }
    fail("TypeMismatch", "?", "unknown marker");
  }

  Context ctx_;
  const Globals& globals_;
  std::vector<const Context*> outer_;
  Path path_;
};

void require_well_formed(const TermPtr& t, const Context& ctx, const Globals& globals) {
  std::map<std::string, TermPtr> placeholders;
  for (const auto& x : t->free_vars()) {
    bool local = std::any_of(ctx.begin(), ctx.end(), [&](const ContextEntry& e) { return e.name == x; });
    if (!local && globals.count(x)) placeholders.emplace(x, Term::unit());
  }
  TermPtr erased = erase_markers(placeholders.empty() ? t : substitute_many(t, placeholders));
  TermInfo info = analyze(erased);
  if (!info.is_well_formed) {
    std::string why = info.failure_witness ? info.failure_witness->clause + " at " + info.failure_witness->path.to_string()
                                           : "free variable used more than once or temporary";
    throw NotATerm("accepted term does not erase to a well-formed term: " + why);
  }
}

}  // namespace

Judgement check(const Context& ctx, const TermPtr& t, const FormulaPtr& expected, const Globals& globals) {
  Checker c(ctx, globals);
  c.check(t, expected, {});
  require_well_formed(t, ctx, globals);
  return {std::move(c.context()), t, expected};
}

FormulaPtr synthesize(const Context& ctx, const TermPtr& t, const Globals& globals) {
  Checker c(ctx, globals);
  FormulaPtr f = c.synth(t, {});
  require_well_formed(t, ctx, globals);
  return f;
}

bool ModuleReport::ok() const {
  return std::all_of(definitions.begin(), definitions.end(), [](const DefinitionReport& d) {
    return !d.checked || (!d.error && d.erased_well_formed);
  });
}

const DefinitionReport* ModuleReport::find(const std::string& name) const {
  for (const auto& d : definitions)
    if (d.name == name) return &d;
  return nullptr;
}

ModuleReport check_module(const SourceModule& m) {
  ModuleReport report;
  Environment env = resolve_module(m);
  Globals globals;
  std::map<std::string, TermPtr> inlined;
  for (const auto& d : m.definitions) {
    DefinitionReport r;
    r.name = d.name;
    std::map<std::string, TermPtr> sub;
    for (const auto& x : d.body->free_vars())
      if (auto it = inlined.find(x); it != inlined.end()) sub.emplace(x, it->second);
    TermPtr body = sub.empty() ? d.body : substitute_many(d.body, sub);
    if (d.ascription) {
      r.checked = true;
      try {
        check({}, body, *d.ascription, globals);
        r.type = *d.ascription;
      } catch (const TypeError& e) {
        r.error = e;
      } catch (const NotATerm& e) {
        r.error = TypeError("NotATerm", Path{}, "well-formedness", e.what());
      }
      try {
        TermInfo info = analyze(erase_markers(env.at(d.name).term));
        r.erased_well_formed = info.is_well_formed;
      } catch (const Error&) {
        r.erased_well_formed = false;
      }
      globals[d.name] = *d.ascription;
      inlined.erase(d.name);
    } else {
      inlined[d.name] = body;
      globals.erase(d.name);
    }
    report.definitions.push_back(std::move(r));
  }
  return report;
}

}  // namespace slc
