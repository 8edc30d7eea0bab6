#include <doctest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "propuse/frontend.hpp"
#include "propuse/verifier.hpp"

using namespace propuse;
using propuse::testing::Rng;

namespace {

const Term a("a"), b("b"), c("c");

Problem make(std::vector<Formula> premises, Formula goal,
             std::vector<Attachment> attachments = {}) {
  Problem p;
  p.premises = std::move(premises);
  p.goal = std::move(goal);
  for (Attachment& att : attachments) p.env.insert(std::move(att));
  return p;
}

std::vector<std::string> universe_strings(const Problem& p) {
  std::vector<std::string> out;
  for (const Term& t : term_universe(p).terms) out.push_back(t.str());
  return out;
}

std::vector<std::string> axiom_strings(const Environment& env,
                                       const TermUniverse& u) {
  std::vector<std::string> out;
  for (const Formula& f : instantiate_axioms(env, u)) out.push_back(f.str());
  return out;
}

}  // namespace

TEST_CASE("term universe is the subterm closure of premises and goal") {
  CHECK(universe_strings(make({Formula::atom("R", {Term("f", {a}), b})},
                              Formula::atom("R", {a, b}))) ==
        std::vector<std::string>{"(f a)", "a", "b"});
  CHECK(universe_strings(make({}, Formula::equality(a, a))) ==
        std::vector<std::string>{"a"});
  CHECK(universe_strings(make({Formula::equality(Term("g", {a, b}), c)},
                              Formula::equality(c, c))) ==
        std::vector<std::string>{"(g a b)", "a", "b", "c"});
}

TEST_CASE("axiom instantiation covers the universe once") {
  SUBCASE("irreflexivity at a single term") {
    Environment env;
    env.insert({"R", PropertyKind::Irreflexivity});
    CHECK(axiom_strings(env, {{a}}) ==
          std::vector<std::string>{"(not (R a a))"});
  }
  SUBCASE("projectivity instance introduces a deeper term, no second round") {
    Environment env;
    env.insert({"f", PropertyKind::Projectivity});
    CHECK(axiom_strings(env, {{a}}) ==
          std::vector<std::string>{"(= (f (f a)) (f a))"});
  }
  SUBCASE("commutativity instances normalize to one formula") {
    Environment env;
    env.insert({"g", PropertyKind::Commutativity});
    CHECK(axiom_strings(env, {{a, b}}) ==
          std::vector<std::string>{"(= (g a b) (g b a))"});
  }
  SUBCASE("identity instances are dropped") {
    Environment env;
    env.insert({"g", PropertyKind::Idempotence});
    // g(a,a)=a survives, but nothing of the form t=t may appear
    for (const std::string& s : axiom_strings(env, {{a}})) {
      CHECK(s == "(= (g a a) a)");
    }
  }
  SUBCASE("budget is enforced") {
    Environment env;
    env.insert({"g", PropertyKind::Commutativity});
    TermUniverse u{{a, b, c}};
    CHECK_THROWS_AS(instantiate_axioms(env, u, 8), BudgetExceeded);
    CHECK_NOTHROW(instantiate_axioms(env, u, 9));
  }
}

TEST_CASE("every instance is a substitution instance of its schema") {
  // orientation-insensitive membership: the instance or its mirror must be
  // produced by substituting universe terms into some attached schema
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Rng rng(seed);
    Problem p = propuse::testing::random_problem(rng);
    TermUniverse u = term_universe(p);
    std::set<std::string> allowed;
    for (const Attachment& att : p.env.attachments()) {
      const PropertySchema& schema = property_schema(att.property);
      for (const Term& t1 : u.terms) {
        if (schema.variables.size() == 1) {
          allowed.insert(
              instantiate_schema(schema, att.constructor, t1).str());
        } else {
          for (const Term& t2 : u.terms) {
            allowed.insert(
                instantiate_schema(schema, att.constructor, t1, &t2).str());
          }
        }
      }
    }
    for (const Formula& f : instantiate_axioms(p.env, u)) {
      bool found = allowed.count(f.str()) > 0;
      if (!found && f.kind() == Formula::Kind::Atom &&
          f.atom_ref().is_equality()) {
        Formula mirror = Formula::equality(f.atom_ref().args[1],
                                           f.atom_ref().args[0]);
        found = allowed.count(mirror.str()) > 0;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("check decides ground entailment with equality") {
  Verifier verifier;
  SUBCASE("goal among premises") {
    Formula rab = Formula::atom("R", {a, b});
    CHECK(verifier.check_problem(make({rab}, rab)).verified);
  }
  SUBCASE("symmetry closes the gap, its absence yields a countermodel") {
    Formula rab = Formula::atom("R", {a, b});
    Formula rba = Formula::atom("R", {b, a});
    CHECK(verifier
              .check_problem(make({rab}, rba,
                                  {{"R", PropertyKind::Symmetry}}))
              .verified);
    Verdict failed = verifier.check_problem(make({rab}, rba));
    REQUIRE(!failed.verified);
    REQUIRE(failed.witness.has_value());
    CHECK(failed.witness->str() ==
          "atoms: (R a b)=true (R b a)=false; identified: none");
  }
  SUBCASE("commutativity instance is analytically forced") {
    Formula goal =
        Formula::equality(Term("add", {a, c}), Term("add", {c, a}));
    CHECK(verifier
              .check_problem(
                  make({}, goal, {{"add", PropertyKind::Commutativity}}))
              .verified);
    CHECK(!verifier.check_problem(make({}, goal)).verified);
  }
  SUBCASE("proper-prefix contradiction needs irreflexivity") {
    const Term sn("sn"), sm("sm");
    Formula pp = Formula::atom("pp", {sn, sm});
    Formula pf = Formula::atom("pf", {sn, sm});
    std::vector<Formula> premises = {
        Formula::implication(pp, pf),
        Formula::implication(pf, Formula::equality(sn, sm))};
    Formula goal = Formula::negation(pp);

    CHECK(verifier
              .check_problem(make(premises, goal,
                                  {{"pp", PropertyKind::Irreflexivity}}))
              .verified);

    Verdict detached = verifier.check_problem(make(premises, goal));
    REQUIRE(!detached.verified);
    // countermodel keeps the proper prefix while identifying sn with sm
    CHECK(detached.witness->str() ==
          "atoms: (= sn sm)=true (pf sn sm)=true (pp sn sm)=true; "
          "identified: {sm sn}");
  }
}

TEST_CASE("exhaustive verdict matches its own examples") {
  Verifier verifier;
  CHECK(!verifier.brute_force_verdict(make({}, Formula::atom("R", {a, a})))
             .verified);
  CHECK(verifier
            .brute_force_verdict(
                make({Formula::equality(a, b)}, Formula::equality(b, a)))
            .verified);
}

TEST_CASE("oracle bound is enforced") {
  Environment env;
  env.insert({"R", PropertyKind::Symmetry});
  std::vector<Formula> premises;
  const std::vector<Term> terms = {a, b, c, Term("d"), Term("e"), Term("f2")};
  for (const Term& t : terms) {
    premises.push_back(Formula::atom("R", {t, t}));
  }
  Problem p = make(premises, Formula::atom("R", {a, b}));
  p.env = env;  // 36 ordered pairs -> more than 24 atoms
  Verifier verifier;
  CHECK(ground_atom_count(p) > 24);
  CHECK_THROWS_AS(verifier.brute_force_verdict(p), OracleBoundExceeded);
  // the checker has no such bound; a countermodel leaves a,b unrelated
  CHECK(!verifier.check_problem(p).verified);
}

TEST_CASE("checker agrees with the exhaustive verdict") {
  Verifier verifier;
  std::size_t kept = 0;
  for (std::uint64_t seed = 1; kept < 300; ++seed) {
    REQUIRE(seed < 5000);
    Rng rng(seed);
    Problem p = propuse::testing::random_problem(rng);
    if (ground_atom_count(p) > 24) continue;
    ++kept;
    Verdict fast = verifier.check_problem(p);
    Verdict slow = verifier.brute_force_verdict(p);
    REQUIRE(fast.verified == slow.verified);
    if (!fast.verified) {
      // both witnesses replay against the same set of constraints
      CHECK(witness_satisfies(p, *fast.witness));
      CHECK(witness_satisfies(p, *slow.witness));
    }
  }
}

TEST_CASE("verdicts are monotone in the environment") {
  Verifier verifier;
  std::size_t grown = 0;
  for (std::uint64_t seed = 1; seed <= 400 || grown < 50; ++seed) {
    REQUIRE(seed < 5000);
    Rng rng(seed);
    Problem p = propuse::testing::random_problem(rng);
    if (ground_atom_count(p) > 20) continue;
    bool before = verifier.check_problem(p).verified;
    // grow the environment by one attachment not already present
    Problem bigger = p;
    for (PropertyKind kind : kAllProperties) {
      std::string ctor =
          property_constructor_kind(kind) == ConstructorKind::Relation
              ? "r"
              : (property_arity(kind) == 1 ? "f" : "g");
      Attachment extra{ctor, kind};
      if (!p.env.contains(extra)) {
        bigger.env.insert(extra);
        break;
      }
    }
    if (ground_atom_count(bigger) > 24) continue;
    ++grown;
    if (before) CHECK(verifier.check_problem(bigger).verified);
  }
}

TEST_CASE("identical inputs give identical witnesses") {
  Verifier verifier;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed);
    Problem p = propuse::testing::random_problem(rng);
    if (ground_atom_count(p) > 24) continue;
    Verdict first = verifier.check_problem(p);
    Verdict second = verifier.check_problem(p);
    REQUIRE(first.verified == second.verified);
    if (!first.verified) {
      CHECK(first.witness->str() == second.witness->str());
    }
  }
}

TEST_CASE("problems assemble premises, used statements, and environment") {
  Library lib = parse_library(R"(
    (constant a) (constant b)
    (constructor r :kind relation :arity 2)
    (constructor q :kind relation :arity 2)
    (attach r symmetry) (attach q reflexivity)
    (item base_th :imports (r) :premises ((r a b)) :goal (r b a) :uses ())
    (item next_th :imports (r) :premises () :goal (implies (r a b) (r b a))
      :uses (base_th))
  )");
  const Item& next = lib.items[1];

  Problem p = make_problem(next, lib);
  REQUIRE(p.premises.size() == 1);
  CHECK(p.premises[0].str() == "(implies (r a b) (r b a))");
  // environment restricted to imports: q's attachment is not applicable
  CHECK(p.env.attachments() ==
        std::set<Attachment>{{"r", PropertyKind::Symmetry}});

  SUBCASE("override must stay within the importable attachments") {
    Environment empty;
    CHECK_NOTHROW(make_problem(next, lib, empty));
    Environment foreign;
    foreign.insert({"q", PropertyKind::Reflexivity});
    CHECK_THROWS_AS(make_problem(next, lib, foreign), MalformedItem);
  }
  SUBCASE("item must belong to the library") {
    Item ghost = next;
    ghost.id = "ghost_th";
    CHECK_THROWS_AS(make_problem(ghost, lib), MalformedItem);
  }
  SUBCASE("the used statement makes the derived item verify") {
    Verifier verifier;
    CHECK(verifier.check(next, lib, Environment{}).verified);
  }
}

TEST_CASE("tight budgets raise instead of guessing") {
  Library lib = parse_library(R"(
    (constant a) (constant b) (constant c)
    (constructor g :kind function :arity 2)
    (attach g commutativity)
    (item big_th :imports (g) :premises ((= (g a b) c)) :goal (= (g b a) c)
      :uses ())
  )");
  Verifier tight({4, 24});
  CHECK_THROWS_AS(tight.check(lib.items[0], lib), BudgetExceeded);
  Verifier roomy;
  CHECK(roomy.check(lib.items[0], lib).verified);
}

TEST_CASE("check call counter tracks every verification") {
  Library lib = parse_library(R"(
    (constant a)
    (constructor r :kind relation :arity 2)
    (item t0 :imports (r) :premises ((r a a)) :goal (r a a) :uses ())
  )");
  Verifier verifier;
  CHECK(verifier.check_calls() == 0);
  verifier.check(lib.items[0], lib);
  verifier.check(lib.items[0], lib);
  CHECK(verifier.check_calls() == 2);
  verifier.reset_check_calls();
  CHECK(verifier.check_calls() == 0);
}
