#include "generator.hpp"

#include <stdexcept>

#include "slc/analysis.hpp"
#include "slc/formula.hpp"

namespace slc::testing {

std::string Generator::fresh(const char* prefix) { return prefix + std::to_string(counter_++); }

TermPtr Generator::variable(std::uint64_t level) {
  std::vector<Binding*> usable;
  for (auto& b : scope_) {
    bool ok = false;
    switch (b.use) {
      case Use::Linear: ok = b.level == level && b.uses == 0; break;
      case Use::Mplex: ok = b.level == level; break;
      case Use::Promoted: ok = b.level + 1 == level && b.uses == 0; break;
    }
    if (ok) usable.push_back(&b);
  }
  // Mplex variables are preferred so that ranks above one are common.
  if (!usable.empty() && (level > 0 || below(5) != 0)) {
    Binding* b = usable[below(usable.size())];
    for (auto* c : usable)
      if (c->use == Use::Mplex && below(2) == 0) b = c;
    ++b->uses;
    return Term::var(b->name);
  }
  if (level == 0) return Term::var(fresh("f"));
  std::string y = fresh("v");
  return Term::abs(y, Term::var(y));
}

TermPtr Generator::let_bang(TermPtr subject, std::uint64_t body_size, std::uint64_t level) {
  std::string x = fresh("v");
  scope_.push_back({x, below(2) == 0 ? Use::Mplex : Use::Promoted, level});
  TermPtr body = gen(body_size, level);
  scope_.pop_back();
  return Term::let_bang(std::move(subject), x, std::move(body));
}

TermPtr Generator::gen(std::uint64_t size, std::uint64_t level) {
  if (size <= 1) return variable(level);
  auto split = [&](std::uint64_t total) { return 1 + below(total - 1); };  // [1, total-1]
  for (;;) {
    switch (below(9)) {
      case 0: {
        std::string x = fresh("v");
        scope_.push_back({x, Use::Linear, level});
        TermPtr body = gen(size - 1, level);
        scope_.pop_back();
        return Term::abs(x, body);
      }
      case 1:
        return Term::bang(gen(size - 1, level + 1));
      case 2: {
        std::uint64_t a = split(size);
        TermPtr f = gen(a, level);
        return Term::app(f, gen(size - a, level));
      }
      case 3:
      case 4: {  // beta redex
        if (size < 3) break;
        std::uint64_t arg = split(size - 1);
        std::string x = fresh("v");
        scope_.push_back({x, Use::Linear, level});
        TermPtr body = gen(size - 1 - arg, level);
        scope_.pop_back();
        return Term::app(Term::abs(x, body), gen(arg, level));
      }
      case 5:
      case 6: {  // let-!, often a bang redex
        if (size < 3) break;
        std::uint64_t s = split(size - 1);
        TermPtr subject = (s >= 2 && below(3) != 0) ? Term::bang(gen(s - 1, level + 1)) : gen(s, level);
        return let_bang(subject, size - 1 - s, level);
      }
      case 7: {  // com2 shape
        if (size < 4) break;
        std::uint64_t arg = split(size - 2);
        std::uint64_t s = split(size - 1 - arg);
        TermPtr subject = gen(s, level);
        TermPtr head = let_bang(subject, size - 1 - arg - s, level);
        return Term::app(head, gen(arg, level));
      }
      case 8: {  // com1 shape
        if (size < 5) break;
        std::uint64_t inner = 3 + below(size - 4);  // [3, size-2]
        std::uint64_t s = split(inner - 1);
        TermPtr subject = let_bang(gen(s, level), inner - 1 - s, level);
        return let_bang(subject, size - 1 - inner, level);
      }
    }
  }
}

TermPtr Generator::well_formed(std::uint64_t size) {
  size = std::max<std::uint64_t>(size, 1);
  // Closed fillers under a bang can overshoot; draw again, aiming lower
  // after repeated misses.
  for (std::uint64_t attempt = 0;; ++attempt) {
    scope_.clear();
    std::uint64_t target = size > attempt / 4 ? size - attempt / 4 : 1;
    TermPtr t = gen(target, 0);
    TermInfo info = analyze(t);
    if (!info.is_well_formed) throw std::logic_error("generator produced a non-well-formed term: " + print(t));
    if (info.size <= size) return t;
  }
}

TermPtr Generator::well_formed_up_to(std::uint64_t max_size) { return well_formed(1 + below(max_size)); }

FormulaPtr Generator::formula(std::uint64_t size) {
  static const char* vars[] = {"a", "b", "X"};
  if (size <= 1) return below(4) == 0 ? Formula::one() : Formula::var(vars[below(3)]);
  std::uint64_t l = 1 + below(size - 1);
  switch (below(6)) {
    case 0: return Formula::lolli(formula(l), formula(size - l));
    case 1: return Formula::tensor(formula(l), formula(size - l));
    case 2: return Formula::plus(formula(l), formula(size - l));
    case 3: return Formula::bang(formula(size - 1));
    case 4: return Formula::forall(vars[below(2)], formula(size - 1));
    default: return Formula::mu("X", formula(size - 1));
  }
}

TermPtr Generator::pseudo(std::uint64_t size) {
  static const char* names[] = {"x", "y", "z", "s'", "l1"};
  auto name = [&] { return std::string(names[below(5)]); };
  if (size <= 1) return below(6) == 0 ? Term::unit() : Term::var(name());
  std::uint64_t rest = size - 1;
  std::uint64_t l = 1 + below(std::max<std::uint64_t>(rest, 2) - 1);
  if (l >= rest) l = rest > 1 ? rest - 1 : 1;
  std::uint64_t r = rest > l ? rest - l : 1;
  switch (below(16)) {
    case 0: return Term::abs(name(), pseudo(rest));
    case 1: return Term::abs(name(), pseudo(rest), formula(1 + below(4)));
    case 2:
    case 3: return Term::app(pseudo(l), pseudo(r));
    case 4: return Term::bang(pseudo(rest));
    case 5: return Term::let_bang(pseudo(l), name(), pseudo(r));
    case 6: return Term::pair(pseudo(l), pseudo(r));
    case 7: return Term::let_pair(pseudo(l), name(), name(), pseudo(r));
    case 8: return Term::inl(pseudo(rest));
    case 9: return Term::inr(pseudo(rest));
    case 10: {
      std::uint64_t b = r > 1 ? 1 + below(r - 1) : 1;
      return Term::case_of(pseudo(l), name(), pseudo(b), name(), pseudo(r > b ? r - b : 1));
    }
    case 11: return Term::let_plain(pseudo(l), name(), pseudo(r));
    case 12: return Term::gen("a", pseudo(rest));
    case 13: return Term::inst(pseudo(rest), formula(1 + below(4)));
    case 14: return Term::fold(formula(1 + below(4)), pseudo(rest));
    default: return Term::unfold(pseudo(rest));
  }
}

std::vector<TermPtr> corpus(std::size_t count, std::uint64_t seed, std::uint64_t max_size) {
  Generator g(seed);
  std::vector<TermPtr> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(g.well_formed_up_to(max_size));
  return out;
}

namespace {

void collect_terms(const TermPtr& t, std::vector<TermPtr>& out) {
  if (analyze(t).is_term) out.push_back(t);
  for (const auto& c : t->children()) collect_terms(c, out);
}

}  // namespace

std::vector<TermPtr> term_subterms(const TermPtr& t) {
  std::vector<TermPtr> out;
  collect_terms(t, out);
  return out;
}

}  // namespace slc::testing
