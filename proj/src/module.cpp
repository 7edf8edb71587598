#include "slc/module.hpp"

#include <map>

#include "slc/analysis.hpp"
#include "slc/errors.hpp"

namespace slc {

const ResolvedDefinition* Environment::find(std::string_view name) const {
  for (auto it = definitions.rbegin(); it != definitions.rend(); ++it)
    if (it->name == name) return &*it;
  return nullptr;
}

const ResolvedDefinition& Environment::at(std::string_view name) const {
  if (const auto* d = find(name)) return *d;
  throw UnknownDefinition("no definition named '" + std::string(name) + "'");
}

TermPtr Environment::resolve(const TermPtr& t) const {
  TermPtr expanded = expand_plain_let(t);
  std::map<std::string, TermPtr> sub;
  for (const auto& x : expanded->free_vars())
    if (const auto* d = find(x)) sub.emplace(x, d->term);
  return sub.empty() ? expanded : substitute_many(expanded, sub);
}

Environment resolve_module(const SourceModule& m, const Environment& prelude) {
  Environment env = prelude;
  for (const auto& [name, alias] : m.aliases) env.aliases[name] = alias;
  for (const auto& d : m.definitions) {
    ResolvedDefinition r;
    r.name = d.name;
    r.ascription = d.ascription;
    r.source = d.body;
    r.term = env.resolve(d.body);
    env.definitions.push_back(std::move(r));
  }
  return env;
}

}  // namespace slc
