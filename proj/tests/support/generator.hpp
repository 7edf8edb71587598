#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slc/term.hpp"

namespace slc::testing {

/// Random terms for property tests.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  /// A well-formed core term of at most `size` nodes, usually exactly
  /// `size`, biased towards beta, bang and commutation redexes and
  /// towards let-! variables used several times.
  TermPtr well_formed(std::uint64_t size);
  /// well_formed with a size drawn uniformly from [1, max_size].
  TermPtr well_formed_up_to(std::uint64_t max_size);

  /// Any pseudo-term, sugar and type markers included; not necessarily a
  /// term.
  TermPtr pseudo(std::uint64_t size);

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

 private:
  enum class Use { Linear, Mplex, Promoted };

  struct Binding {
    std::string name;
    Use use;
    std::uint64_t level;
    std::uint64_t uses = 0;
  };

  TermPtr gen(std::uint64_t size, std::uint64_t level);
  TermPtr variable(std::uint64_t level);
  TermPtr let_bang(TermPtr subject, std::uint64_t body_size, std::uint64_t level);
  std::string fresh(const char* prefix);
  FormulaPtr formula(std::uint64_t size);

  std::mt19937_64 rng_;
  std::vector<Binding> scope_;
  std::uint64_t counter_ = 0;
};

/// `count` well-formed core terms of size at most `max_size`.
std::vector<TermPtr> corpus(std::size_t count, std::uint64_t seed, std::uint64_t max_size = 40);

/// Every subterm occurrence of `t` that is itself a term (possibly with
/// temporary variables).
std::vector<TermPtr> term_subterms(const TermPtr& t);

}  // namespace slc::testing
