#include "slc/formula.hpp"

#include <map>
#include <vector>

#include "slc/names.hpp"

namespace slc {

FormulaPtr Formula::var(std::string name) {
  return FormulaPtr(new Formula(FormulaKind::Var, std::move(name), nullptr, nullptr));
}
FormulaPtr Formula::lolli(FormulaPtr from, FormulaPtr to) {
  return FormulaPtr(new Formula(FormulaKind::Lolli, {}, std::move(from), std::move(to)));
}
FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
  return FormulaPtr(new Formula(FormulaKind::Forall, std::move(var), std::move(body), nullptr));
}
FormulaPtr Formula::bang(FormulaPtr body) {
  return FormulaPtr(new Formula(FormulaKind::Bang, {}, std::move(body), nullptr));
}
FormulaPtr Formula::mu(std::string var, FormulaPtr body) {
  return FormulaPtr(new Formula(FormulaKind::Mu, std::move(var), std::move(body), nullptr));
}
FormulaPtr Formula::one() {
  static const FormulaPtr unit(new Formula(FormulaKind::One, {}, nullptr, nullptr));
  return unit;
}
FormulaPtr Formula::tensor(FormulaPtr left, FormulaPtr right) {
  return FormulaPtr(new Formula(FormulaKind::Tensor, {}, std::move(left), std::move(right)));
}
FormulaPtr Formula::plus(FormulaPtr left, FormulaPtr right) {
  return FormulaPtr(new Formula(FormulaKind::Plus, {}, std::move(left), std::move(right)));
}

namespace {

void collect_free(const FormulaPtr& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (f->kind()) {
    case FormulaKind::Var:
      for (const auto& b : bound)
        if (b == f->name()) return;
      out.insert(f->name());
      return;
    case FormulaKind::One:
      return;
    case FormulaKind::Forall:
    case FormulaKind::Mu:
      bound.push_back(f->name());
      collect_free(f->body(), bound, out);
      bound.pop_back();
      return;
    case FormulaKind::Bang:
      collect_free(f->body(), bound, out);
      return;
    case FormulaKind::Lolli:
    case FormulaKind::Tensor:
    case FormulaKind::Plus:
      collect_free(f->left(), bound, out);
      collect_free(f->right(), bound, out);
      return;
  }
}

FormulaPtr rebuild(const Formula& f, FormulaPtr left, FormulaPtr right) {
  switch (f.kind()) {
    case FormulaKind::Lolli:
      return Formula::lolli(std::move(left), std::move(right));
    case FormulaKind::Tensor:
      return Formula::tensor(std::move(left), std::move(right));
    case FormulaKind::Plus:
      return Formula::plus(std::move(left), std::move(right));
    case FormulaKind::Bang:
      return Formula::bang(std::move(left));
    default:
      return nullptr;
  }
}

FormulaPtr subst(const FormulaPtr& f, const std::string& var, const FormulaPtr& repl,
                 const std::set<std::string>& repl_free) {
  switch (f->kind()) {
    case FormulaKind::Var:
      return f->name() == var ? repl : f;
    case FormulaKind::One:
      return f;
    case FormulaKind::Forall:
    case FormulaKind::Mu: {
      if (f->name() == var) return f;
      auto body_free = free_type_vars(f->body());
      if (!body_free.count(var)) return f;
      std::string binder = f->name();
      FormulaPtr body = f->body();
      if (repl_free.count(binder)) {
        std::string fresh = fresh_name(binder, [&](const std::string& c) {
          return repl_free.count(c) || body_free.count(c) || c == var;
        });
        body = subst(body, binder, Formula::var(fresh), {fresh});
        binder = fresh;
      }
      body = subst(body, var, repl, repl_free);
      return f->kind() == FormulaKind::Forall ? Formula::forall(binder, body) : Formula::mu(binder, body);
    }
    case FormulaKind::Bang:
      return Formula::bang(subst(f->body(), var, repl, repl_free));
    default:
      return rebuild(*f, subst(f->left(), var, repl, repl_free), subst(f->right(), var, repl, repl_free));
  }
}

bool alpha(const FormulaPtr& a, const FormulaPtr& b, std::vector<std::pair<std::string, std::string>>& env) {
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case FormulaKind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool left = it->first == a->name();
        bool right = it->second == b->name();
        if (left || right) return left && right;
      }
      return a->name() == b->name();
    }
    case FormulaKind::One:
      return true;
    case FormulaKind::Forall:
    case FormulaKind::Mu: {
      env.emplace_back(a->name(), b->name());
      bool r = alpha(a->body(), b->body(), env);
      env.pop_back();
      return r;
    }
    case FormulaKind::Bang:
      return alpha(a->body(), b->body(), env);
    default:
      return alpha(a->left(), b->left(), env) && alpha(a->right(), b->right(), env);
  }
}

// Precedence: 0 quantifiers and -o, 1 sums, 2 products, 3 prefix !, 4 atoms.
int level(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Forall:
    case FormulaKind::Mu:
    case FormulaKind::Lolli:
      return 0;
    case FormulaKind::Plus:
      return 1;
    case FormulaKind::Tensor:
      return 2;
    case FormulaKind::Bang:
      return 3;
    default:
      return 4;
  }
}

void print(const FormulaPtr& f, int min_level, std::string& out) {
  if (level(*f) < min_level) {
    out += '(';
    print(f, 0, out);
    out += ')';
    return;
  }
  switch (f->kind()) {
    case FormulaKind::Var:
      out += f->name();
      return;
    case FormulaKind::One:
      out += '1';
      return;
    case FormulaKind::Forall:
    case FormulaKind::Mu:
      out += f->kind() == FormulaKind::Forall ? "forall " : "mu ";
      out += f->name();
      out += ". ";
      print(f->body(), 0, out);
      return;
    case FormulaKind::Bang:
      out += '!';
      print(f->body(), 3, out);
      return;
    case FormulaKind::Lolli:
      print(f->left(), 1, out);
      out += " -o ";
      print(f->right(), 0, out);
      return;
    case FormulaKind::Plus:
      print(f->left(), 2, out);
      out += " + ";
      print(f->right(), 1, out);
      return;
    case FormulaKind::Tensor:
      print(f->left(), 3, out);
      out += " * ";
      print(f->right(), 2, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_type_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

FormulaPtr subst_type(const FormulaPtr& f, const std::string& var, const FormulaPtr& replacement) {
  return subst(f, var, replacement, free_type_vars(replacement));
}

bool formula_alpha_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  std::vector<std::pair<std::string, std::string>> env;
  return alpha(a, b, env);
}

std::string type_print(const FormulaPtr& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

}  // namespace slc
