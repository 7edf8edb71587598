#include "slc/analysis.hpp"

#include <algorithm>

#include "slc/errors.hpp"
#include "slc/names.hpp"

namespace slc {

bool Path::is_prefix_of(const Path& other) const {
  return steps.size() <= other.steps.size() && std::equal(steps.begin(), steps.end(), other.steps.begin());
}

std::string Path::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(steps[i]);
  }
  return out + "]";
}

namespace {

using Names = std::set<std::string>;
using Occ = std::map<std::string, std::uint64_t>;

struct Local {
  Names fv;
  Names tv;
  Occ occ;
  std::uint64_t size = 0;
  std::uint64_t depth = 0;
  std::uint64_t rank = 0;
};

bool disjoint(const Names& a, const Names& b) {
  const Names& small = a.size() < b.size() ? a : b;
  const Names& large = a.size() < b.size() ? b : a;
  for (const auto& x : small)
    if (large.count(x)) return false;
  return true;
}

Names minus(Names s, std::initializer_list<std::string> drop) {
  for (const auto& d : drop) s.erase(d);
  return s;
}

Occ minus(Occ s, std::initializer_list<std::string> drop) {
  for (const auto& d : drop) s.erase(d);
  return s;
}

void add_into(Occ& into, const Occ& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

std::uint64_t count(const Occ& occ, const std::string& x) {
  auto it = occ.find(x);
  return it == occ.end() ? 0 : it->second;
}

class Analyzer {
 public:
  std::optional<FailureWitness> failure;

  std::optional<Local> run(const TermPtr& t, Path& path) {
    switch (t->kind()) {
      case Kind::Var: {
        Local l;
        l.fv.insert(t->name());
        l.occ[t->name()] = 1;
        l.size = 1;
        return l;
      }
      case Kind::Unit: {
        Local l;
        l.size = 1;
        return l;
      }
      case Kind::Marker:
        throw MarkerPresent("type marker at " + path.to_string() + "; erase markers before analysis");
      case Kind::Abs: {
        auto body = sub(t, 0, path);
        if (!body) return std::nullopt;
        return abstraction(*body, t->name(), path);
      }
      case Kind::App:
      case Kind::Pair: {
        auto f = sub(t, 0, path);
        if (!f) return std::nullopt;
        auto a = sub(t, 1, path);
        if (!a) return std::nullopt;
        return juxtapose(*f, *a, t->kind() == Kind::Pair ? 1 : 0, path,
                         t->kind() == Kind::Pair ? "pair" : "application");
      }
      case Kind::Let: {
        // Analyzed as ((\x. body) subject).
        auto s = sub(t, 0, path);
        if (!s) return std::nullopt;
        auto b = sub(t, 1, path);
        if (!b) return std::nullopt;
        auto fun = abstraction(*b, t->name(), path);
        if (!fun) return std::nullopt;
        return juxtapose(*fun, *s, 0, path, "let");
      }
      case Kind::Bang: {
        auto b = sub(t, 0, path);
        if (!b) return std::nullopt;
        if (!b->tv.empty()) return fail(path, "bang over a term with temporary variables");
        for (const auto& [x, n] : b->occ)
          if (n != 1) return fail(path, "bang: free variable '" + x + "' must occur exactly once (occurs " +
                                            std::to_string(n) + " times)");
        b->tv = b->fv;
        b->size += 1;
        b->depth += 1;
        return b;
      }
      case Kind::LetBang: {
        auto u = sub(t, 0, path);
        if (!u) return std::nullopt;
        auto b = sub(t, 1, path);
        if (!b) return std::nullopt;
        const auto& x = t->name();
        Names bfv = minus(b->fv, {x});
        Names btv = minus(b->tv, {x});
        if (!disjoint(u->tv, bfv) || !disjoint(u->fv, btv))
          return fail(path, "let: temporary variable shared between subject and body");
        bool promoted = b->tv.count(x) != 0;
        Local l;
        l.rank = std::max({u->rank, b->rank, promoted ? std::uint64_t{0} : count(b->occ, x)});
        l.fv = u->fv;
        l.fv.insert(bfv.begin(), bfv.end());
        l.tv = u->tv;
        l.tv.insert(btv.begin(), btv.end());
        l.occ = u->occ;
        add_into(l.occ, minus(b->occ, {x}));
        l.size = u->size + b->size + 1;
        l.depth = std::max(u->depth, b->depth);
        return l;
      }
      case Kind::LetPair: {
        auto u = sub(t, 0, path);
        if (!u) return std::nullopt;
        auto b = sub(t, 1, path);
        if (!b) return std::nullopt;
        const auto& x = t->name();
        const auto& y = t->name2();
        if (x == y) return fail(path, "pair pattern binds '" + x + "' twice");
        if (b->tv.count(x) || b->tv.count(y)) return fail(path, "pair pattern binds a temporary variable");
        std::uint64_t nx = count(b->occ, x), ny = count(b->occ, y);
        if (nx > 1 || ny > 1) return fail(path, "pair pattern variable occurs more than once");
        Names bfv = minus(b->fv, {x, y});
        if (!disjoint(u->tv, bfv) || !disjoint(u->fv, b->tv))
          return fail(path, "pair let: temporary variable shared between subject and body");
        Local l;
        l.rank = std::max({u->rank, b->rank, nx, ny});
        l.fv = u->fv;
        l.fv.insert(bfv.begin(), bfv.end());
        l.tv = u->tv;
        l.tv.insert(b->tv.begin(), b->tv.end());
        l.occ = u->occ;
        add_into(l.occ, minus(b->occ, {x, y}));
        l.size = u->size + b->size + 1;
        l.depth = std::max(u->depth, b->depth);
        return l;
      }
      case Kind::Inl:
      case Kind::Inr: {
        auto b = sub(t, 0, path);
        if (!b) return std::nullopt;
        b->size += 1;
        return b;
      }
      case Kind::Case:
        return case_of(t, path);
    }
    return std::nullopt;
  }

 private:
  std::optional<Local> sub(const TermPtr& t, std::uint8_t i, Path& path) {
    path.steps.push_back(i);
    auto r = run(t->child(i), path);
    path.steps.pop_back();
    return r;
  }

  std::optional<Local> fail(const Path& path, std::string clause) {
    failure = FailureWitness{path, std::move(clause)};
    return std::nullopt;
  }

  std::optional<Local> abstraction(Local body, const std::string& x, const Path& path) {
    if (body.tv.count(x)) return fail(path, "abstraction over temporary variable '" + x + "'");
    if (count(body.occ, x) > 1) return fail(path, "abstracted variable '" + x + "' occurs more than once");
    body.fv.erase(x);
    body.occ.erase(x);
    body.size += 1;
    return body;
  }

  std::optional<Local> juxtapose(Local f, const Local& a, std::uint64_t extra, const Path& path,
                                 const std::string& what) {
    if (!disjoint(f.tv, a.fv) || !disjoint(f.fv, a.tv))
      return fail(path, what + ": temporary variable shared between components");
    f.fv.insert(a.fv.begin(), a.fv.end());
    f.tv.insert(a.tv.begin(), a.tv.end());
    add_into(f.occ, a.occ);
    f.size += a.size + extra;
    f.depth = std::max(f.depth, a.depth);
    f.rank = std::max(f.rank, a.rank);
    return f;
  }

  std::optional<Local> case_of(const TermPtr& t, Path& path) {
    auto s = sub(t, 0, path);
    if (!s) return std::nullopt;
    auto b1 = sub(t, 1, path);
    if (!b1) return std::nullopt;
    auto b2 = sub(t, 2, path);
    if (!b2) return std::nullopt;
    const auto& x1 = t->name();
    const auto& x2 = t->name2();
    if (b1->tv.count(x1) || b2->tv.count(x2)) return fail(path, "case branch binds a temporary variable");
    if (count(b1->occ, x1) > 1 || count(b2->occ, x2) > 1)
      return fail(path, "case branch variable occurs more than once");
    Names f1 = minus(b1->fv, {x1}), f2 = minus(b2->fv, {x2});
    const Names& t1 = b1->tv;
    const Names& t2 = b2->tv;
    if (!disjoint(s->tv, f1) || !disjoint(s->tv, f2) || !disjoint(s->fv, t1) || !disjoint(s->fv, t2))
      return fail(path, "case: temporary variable shared between subject and branches");
    for (const auto& v : t1)
      if (f2.count(v) && !t2.count(v)) return fail(path, "case: '" + v + "' temporary in one branch only");
    for (const auto& v : t2)
      if (f1.count(v) && !t1.count(v)) return fail(path, "case: '" + v + "' temporary in one branch only");
    Local l;
    l.fv = s->fv;
    l.fv.insert(f1.begin(), f1.end());
    l.fv.insert(f2.begin(), f2.end());
    l.tv = s->tv;
    l.tv.insert(t1.begin(), t1.end());
    l.tv.insert(t2.begin(), t2.end());
    l.occ = s->occ;
    Occ o1 = minus(b1->occ, {x1}), o2 = minus(b2->occ, {x2});
    Occ branch = o1;
    for (const auto& [k, v] : o2) branch[k] = std::max(branch[k], v);
    add_into(l.occ, branch);
    l.size = s->size + b1->size + b2->size + 1;
    l.depth = std::max({s->depth, b1->depth, b2->depth});
    l.rank = std::max({s->rank, b1->rank, b2->rank});
    return l;
  }
};

TermPtr rebuild(const Term& t, std::vector<TermPtr> kids, const std::string& n1, const std::string& n2) {
  switch (t.kind()) {
    case Kind::Abs:
      return Term::abs(n1, kids[0], t.formula());
    case Kind::LetBang:
      return Term::let_bang(kids[0], n1, kids[1]);
    case Kind::Let:
      return Term::let_plain(kids[0], n1, kids[1]);
    case Kind::LetPair:
      return Term::let_pair(kids[0], n1, n2, kids[1]);
    case Kind::Case:
      return Term::case_of(kids[0], n1, kids[1], n2, kids[2]);
    default:
      return Term::with_children(t, std::move(kids));
  }
}

TermPtr subst_rec(const TermPtr& t, const std::map<std::string, TermPtr>& sub) {
  std::map<std::string, TermPtr> live;
  for (const auto& [k, v] : sub)
    if (t->has_free(k)) live.emplace(k, v);
  if (live.empty()) return t;
  if (t->kind() == Kind::Var) return live.begin()->second;

  std::string n1 = t->name(), n2 = t->name2();
  std::vector<TermPtr> kids;
  kids.reserve(t->children().size());
  for (std::size_t i = 0; i < t->children().size(); ++i) {
    TermPtr child = t->child(i);
    auto bound = t->binders_of(i);
    std::map<std::string, TermPtr> inner = live;
    for (const auto& b : bound) inner.erase(b);
    for (auto it = inner.begin(); it != inner.end();)
      it = child->has_free(it->first) ? std::next(it) : inner.erase(it);
    if (inner.empty()) {
      kids.push_back(child);
      continue;
    }
    for (const auto& b : bound) {
      bool captures = false;
      for (const auto& [k, v] : inner) captures = captures || v->has_free(b);
      if (!captures) continue;
      std::string fresh = fresh_name(b, [&](const std::string& c) {
        if (child->has_free(c) || inner.count(c) || c == n1 || c == n2) return true;
        for (const auto& [k, v] : inner)
          if (v->has_free(c)) return true;
        return false;
      });
      child = subst_rec(child, {{b, Term::var(fresh)}});
      if (t->kind() == Kind::Case) {
        (i == 1 ? n1 : n2) = fresh;
      } else {
        (b == n1 ? n1 : n2) = fresh;
      }
    }
    kids.push_back(subst_rec(child, inner));
  }
  return rebuild(*t, std::move(kids), n1, n2);
}

void key_rec(const TermPtr& t, std::vector<std::string>& env, std::string& out) {
  auto bind = [&](const std::string& name) { env.push_back(name); };
  auto var = [&](const std::string& name) {
    for (std::size_t i = env.size(); i-- > 0;)
      if (env[i] == name) {
        out += '#' + std::to_string(i);
        return;
      }
    out += name;
  };
  auto child = [&](std::size_t i) {
    auto bound = t->binders_of(i);
    for (const auto& b : bound) bind(b);
    out += '(';
    key_rec(t->child(i), env, out);
    out += ')';
    env.resize(env.size() - bound.size());
  };
  switch (t->kind()) {
    case Kind::Var:
      var(t->name());
      return;
    case Kind::Unit:
      out += "()";
      return;
    default:
      break;
  }
  out += std::to_string(static_cast<int>(t->kind()));
  if (t->kind() == Kind::Marker) {
    out += 'm' + std::to_string(static_cast<int>(t->marker()));
    if (t->marker() == MarkerKind::Gen) out += t->name();
  }
  if (t->formula()) out += '{' + type_print(t->formula()) + '}';
  for (std::size_t i = 0; i < t->children().size(); ++i) child(i);
}

}  // namespace

TermInfo analyze(const TermPtr& t) {
  Analyzer a;
  Path path;
  auto local = a.run(t, path);
  TermInfo info;
  if (!local) {
    info.failure_witness = a.failure;
    info.size = t->size();
    info.free_vars = Names(t->free_vars().begin(), t->free_vars().end());
    return info;
  }
  info.free_vars = std::move(local->fv);
  info.temp_vars = std::move(local->tv);
  info.occ = std::move(local->occ);
  info.size = local->size;
  info.depth = local->depth;
  info.rank = local->rank;
  info.is_term = true;
  info.is_well_formed = info.temp_vars.empty() &&
                        std::all_of(info.occ.begin(), info.occ.end(), [](const auto& kv) { return kv.second == 1; });
  return info;
}

const TermPtr& subterm_at(const TermPtr& t, const Path& p) {
  const TermPtr* cur = &t;
  for (auto i : p.steps) {
    if (i >= (*cur)->children().size()) throw InvalidPath("path " + p.to_string() + " does not address a subterm");
    cur = &(*cur)->child(i);
  }
  return *cur;
}

TermPtr replace_at(const TermPtr& t, const Path& p, TermPtr replacement) {
  std::vector<const Term*> spine;
  const TermPtr* cur = &t;
  for (auto i : p.steps) {
    if (i >= (*cur)->children().size()) throw InvalidPath("path " + p.to_string() + " does not address a subterm");
    spine.push_back(cur->get());
    cur = &(*cur)->child(i);
  }
  TermPtr result = std::move(replacement);
  for (std::size_t k = spine.size(); k-- > 0;) {
    auto kids = spine[k]->children();
    kids[p.steps[k]] = result;
    result = Term::with_children(*spine[k], std::move(kids));
  }
  return result;
}

std::uint64_t depth_of(const TermPtr& t, const Path& p) {
  std::uint64_t d = 0;
  const TermPtr* cur = &t;
  for (auto i : p.steps) {
    if (i >= (*cur)->children().size()) throw InvalidPath("path " + p.to_string() + " does not address a subterm");
    if ((*cur)->kind() == Kind::Bang) ++d;
    cur = &(*cur)->child(i);
  }
  return d;
}

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u) { return subst_rec(t, {{x, u}}); }

TermPtr substitute_many(const TermPtr& t, const std::map<std::string, TermPtr>& sub) { return subst_rec(t, sub); }

std::string alpha_key(const TermPtr& t) {
  std::string out;
  std::vector<std::string> env;
  key_rec(t, env, out);
  return out;
}

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->size() != b->size() || a->free_vars() != b->free_vars()) return false;
  return alpha_key(a) == alpha_key(b);
}

std::uint64_t occurrences(const TermPtr& t, const std::string& x) {
  if (!t->has_free(x)) return 0;
  switch (t->kind()) {
    case Kind::Var:
      return 1;
    case Kind::Case: {
      std::uint64_t s = occurrences(t->child(0), x);
      std::uint64_t l = t->name() == x ? 0 : occurrences(t->child(1), x);
      std::uint64_t r = t->name2() == x ? 0 : occurrences(t->child(2), x);
      return s + std::max(l, r);
    }
    default: {
      std::uint64_t n = 0;
      for (std::size_t i = 0; i < t->children().size(); ++i) {
        auto bound = t->binders_of(i);
        if (std::find(bound.begin(), bound.end(), x) == bound.end()) n += occurrences(t->child(i), x);
      }
      return n;
    }
  }
}

}  // namespace slc
