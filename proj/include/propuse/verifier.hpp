#ifndef PROPUSE_VERIFIER_HPP
#define PROPUSE_VERIFIER_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "propuse/corpus.hpp"

namespace propuse {

struct VerifierOptions {
  // Hard cap on ground axiom instances per problem.
  std::size_t instance_budget = 50'000;
  // Maximum atom count the brute-force verdict will enumerate over.
  std::size_t oracle_bound = 24;
};

// A self-contained verification problem: the item's own premises plus the
// statements of every used item, the goal, and the environment restricted
// to the item's imports.
struct Problem {
  std::vector<Formula> premises;
  Formula goal;
  Environment env;
};

struct TermUniverse {
  std::vector<Term> terms;  // sorted by printed form, subterm-closed
};

// Countermodel: a truth assignment over the problem's ground atoms together
// with the equality partition of the post-instantiation term set.
struct Witness {
  std::vector<std::pair<Atom, bool>> assignment;  // sorted by atom
  std::vector<std::vector<Term>> equality_classes;
  std::string str() const;
};

struct Verdict {
  bool verified = false;
  std::optional<Witness> witness;  // engaged iff !verified

  static Verdict pass() { return {true, std::nullopt}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
};

// All subterms of the problem's premises and goal, closed under subterm.
// Terms created later by axiom instantiation are not included.
TermUniverse term_universe(const Problem& p);

// Ground instances of every attached property schema over the universe:
// one-variable schemas at every term, two-variable schemas at every ordered
// pair. Instances are normalized (equalities oriented by printed form,
// t = t identities dropped, duplicates removed) and sorted. Throws
// BudgetExceeded when the raw instance count passes `instance_budget`.
std::vector<Formula> instantiate_axioms(const Environment& env,
                                        const TermUniverse& u,
                                        std::size_t instance_budget = 50'000);

// Builds the problem for an item of the library. Throws MalformedItem when
// the item (or one of its uses) is not in the library, or when the override
// is not a subset of the library environment restricted to the imports.
Problem make_problem(const Item& item, const Library& lib,
                     const std::optional<Environment>& env_override =
                         std::nullopt);

class Verifier {
 public:
  Verifier() = default;
  explicit Verifier(VerifierOptions opts) : opts_(opts) {}

  // Refutation check: Verified iff premises + axioms + negated goal are
  // unsatisfiable in ground first-order logic with equality. Complete
  // propositional search over the clause set, with congruence-closure
  // consistency checking of each full assignment's equalities.
  Verdict check(const Item& item, const Library& lib,
                const std::optional<Environment>& env_override =
                    std::nullopt) const;
  Verdict check_problem(const Problem& p) const;

  // Independent oracle: enumerates every truth assignment over the ground
  // atoms, keeps those whose equality part extends to a congruence (checked
  // by saturating reflexivity/symmetry/transitivity and functional/predicate
  // congruence instances over the post-instantiation term set), and fails
  // iff a surviving assignment satisfies premises, axioms, and negated goal.
  Verdict brute_force_verdict(const Problem& p) const;

  const VerifierOptions& options() const { return opts_; }

  std::uint64_t check_calls() const { return check_calls_.load(); }
  void reset_check_calls() const { check_calls_.store(0); }

 private:
  VerifierOptions opts_;
  mutable std::atomic<std::uint64_t> check_calls_{0};
};

// Number of distinct ground atoms in premises + instantiated axioms + goal;
// the enumeration width of the brute-force verdict.
std::size_t ground_atom_count(const Problem& p,
                              std::size_t instance_budget = 50'000);

// Replays a witness: true iff the assignment satisfies every premise and
// axiom, falsifies the goal, and its equality part passes the congruence
// check. Used by tests; independent of the search that produced the witness.
bool witness_satisfies(const Problem& p, const Witness& w,
                       std::size_t instance_budget = 50'000);

}  // namespace propuse

#endif
