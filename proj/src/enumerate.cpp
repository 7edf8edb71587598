#include "slc/enumerate.hpp"

#include <tuple>

#include "slc/errors.hpp"

namespace slc {

namespace {

const std::string kFree = "?";

// Pseudo-terms by size. `scope` holds one letter per enclosing binder:
// 'l' lambda, 'b' let-!, 'p' let-! seen through one bang, '-' unusable.
// Lambda variables and free names never occur under a bang in a
// well-formed term, and let-! variables only one bang deep.
class Grammar {
 public:
  const std::vector<TermPtr>& at(std::uint64_t size, const std::string& scope, bool boxed) {
    auto key = std::make_tuple(size, scope, boxed);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<TermPtr> out;
    if (size == 1) {
      for (std::size_t i = 0; i < scope.size(); ++i)
        if (scope[i] != '-') out.push_back(Term::var(bound(i)));
      if (!boxed) out.push_back(Term::var(kFree));
    } else {
      for (const auto& b : at(size - 1, scope + 'l', boxed)) out.push_back(Term::abs(bound(scope.size()), b));
      for (const auto& b : at(size - 1, enter_bang(scope), true)) out.push_back(Term::bang(b));
      for (std::uint64_t i = 1; i < size; ++i) {
        const auto& fs = at(i, scope, boxed);
        const auto& as = at(size - i, scope, boxed);
        for (const auto& f : fs)
          for (const auto& a : as) out.push_back(Term::app(f, a));
      }
      for (std::uint64_t i = 1; i + 1 <= size - 1; ++i) {
        const auto& us = at(i, scope, boxed);
        const auto& bs = at(size - 1 - i, scope + 'b', boxed);
        for (const auto& u : us)
          for (const auto& b : bs) out.push_back(Term::let_bang(u, bound(scope.size()), b));
      }
    }
    return memo_[key] = std::move(out);
  }

 private:
  static std::string bound(std::size_t i) { return "x" + std::to_string(i); }

  static std::string enter_bang(std::string scope) {
    for (auto& c : scope) c = c == 'b' ? 'p' : '-';
    return scope;
  }

  std::map<std::tuple<std::uint64_t, std::string, bool>, std::vector<TermPtr>> memo_;
};

TermPtr name_free(const TermPtr& t, std::uint64_t& next) {
  switch (t->kind()) {
    case Kind::Var:
      return t->name() == kFree ? Term::var("a" + std::to_string(next++)) : t;
    case Kind::Abs:
      return Term::abs(t->name(), name_free(t->child(0), next));
    case Kind::App: {
      auto f = name_free(t->child(0), next);
      return Term::app(f, name_free(t->child(1), next));
    }
    case Kind::Bang:
      return Term::bang(name_free(t->child(0), next));
    case Kind::LetBang: {
      auto u = name_free(t->child(0), next);
      return Term::let_bang(u, t->name(), name_free(t->child(1), next));
    }
    default:
      throw std::logic_error("enumerator produced a non-core node");
  }
}

}  // namespace

std::vector<TermPtr> enumerate_well_formed(std::uint64_t size) {
  std::vector<TermPtr> out;
  if (size == 0) return out;
  Grammar g;
  for (const auto& t : g.at(size, "", false)) {
    std::uint64_t next = 0;
    TermPtr named = name_free(t, next);
    if (analyze(named).is_well_formed) out.push_back(named);
  }
  return out;
}

std::uint64_t BoundCheckReport::terms() const {
  std::uint64_t n = 0;
  for (const auto& r : rows) n += r.terms;
  return n;
}

std::uint64_t BoundCheckReport::sequences() const {
  std::uint64_t n = 0;
  for (const auto& r : rows) n += r.sequences;
  return n;
}

std::optional<std::string> check_sequences(const TermPtr& t, const std::vector<Trace>& seqs) {
  if (seqs.empty()) return "no maximal sequence";
  BigInt bound = certificate(t).bound;
  for (const auto& s : seqs)
    if (BigInt(s.length()) > bound)
      return "sequence of length " + std::to_string(s.length()) + " exceeds bound " + bound.str();
  for (const auto& s : seqs)
    if (!alpha_eq(s.final, seqs.front().final))
      return "normal forms differ: " + print(seqs.front().final) + " and " + print(s.final);
  return std::nullopt;
}

BoundCheckReport bound_check(std::uint64_t max_size, const BoundCheckOptions& options) {
  BoundCheckReport report;
  for (std::uint64_t size = 1; size <= max_size; ++size) {
    BoundCheckRow row;
    row.size = size;
    for (const auto& t : enumerate_well_formed(size)) {
      std::vector<Trace> seqs;
      try {
        seqs = all_sequences(t, options.node_cap);
      } catch (const CapExceeded& e) {
        report.failure = BoundCheckFailure{t, e.what()};
      }
      if (!report.failure) {
        if (options.tamper) options.tamper(t, seqs);
        if (auto why = check_sequences(t, seqs)) report.failure = BoundCheckFailure{t, *why};
      }
      ++row.terms;
      row.sequences += seqs.size();
      for (const auto& s : seqs) row.longest = std::max<std::uint64_t>(row.longest, s.length());
      if (report.failure) break;
    }
    report.rows.push_back(row);
    if (report.failure) break;
  }
  return report;
}

}  // namespace slc
