#include "propuse/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace propuse {

namespace {

// Hash-consed ground terms; ids double as union-find nodes.
struct TermTable {
  std::vector<std::string> heads;
  std::vector<std::vector<int>> args;
  std::vector<std::string> printed;
  std::map<std::string, int> index;

  int intern(const Term& t) {
    std::vector<int> arg_ids;
    arg_ids.reserve(t.args().size());
    for (const Term& arg : t.args()) arg_ids.push_back(intern(arg));
    std::string text = t.str();
    auto it = index.find(text);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(heads.size());
    heads.push_back(t.head());
    args.push_back(std::move(arg_ids));
    printed.push_back(text);
    index.emplace(printed.back(), id);
    return id;
  }

  Term rebuild(int id) const {
    std::vector<Term> sub;
    sub.reserve(args[id].size());
    for (int a : args[id]) sub.push_back(rebuild(a));
    return sub.empty() ? Term(heads[id]) : Term(heads[id], std::move(sub));
  }

  std::size_t size() const { return heads.size(); }
};

// The grounded problem: every occurring atom (sorted by printed form), the
// clause set for the checker, and the original formulas for the oracle.
struct Grounding {
  std::vector<Formula> premises_and_axioms;
  Formula goal;

  TermTable terms;
  std::vector<Atom> atoms;             // sorted by printed form
  std::vector<std::string> atom_preds;
  std::vector<std::vector<int>> atom_args;  // term ids
  std::map<std::string, int> atom_index;    // printed form -> id

  int atom_id(const Atom& a) const {
    auto it = atom_index.find(a.str());
    return it == atom_index.end() ? -1 : it->second;
  }
  bool is_equality(int id) const { return atom_preds[id] == "="; }
};

Grounding ground_problem(const Problem& p, std::size_t instance_budget) {
  Grounding g;
  g.premises_and_axioms = p.premises;
  std::vector<Formula> axioms =
      instantiate_axioms(p.env, term_universe(p), instance_budget);
  g.premises_and_axioms.insert(g.premises_and_axioms.end(), axioms.begin(),
                               axioms.end());
  g.goal = p.goal;

  std::set<Atom> atom_set;
  auto visit = [&atom_set](const Atom& a) { atom_set.insert(a); };
  for (const Formula& f : g.premises_and_axioms) f.for_each_atom(visit);
  g.goal.for_each_atom(visit);

  for (const Atom& a : atom_set) {
    int id = static_cast<int>(g.atoms.size());
    g.atoms.push_back(a);
    g.atom_preds.push_back(a.pred);
    std::vector<int> arg_ids;
    arg_ids.reserve(a.args.size());
    for (const Term& t : a.args) arg_ids.push_back(g.terms.intern(t));
    g.atom_args.push_back(std::move(arg_ids));
    g.atom_index.emplace(a.str(), id);
  }
  return g;
}

// ----- clausal form (checker side) -----

using Clause = std::vector<int>;  // literal: +(atom+1) or -(atom+1)

Clause merge_clause(const Clause& a, const Clause& b) {
  Clause out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Clause> cross(const std::vector<Clause>& a,
                          const std::vector<Clause>& b, std::size_t cap) {
  if (a.size() * b.size() > cap) {
    throw BudgetExceeded("clause budget exceeded during clausal conversion");
  }
  std::vector<Clause> out;
  out.reserve(a.size() * b.size());
  for (const Clause& ca : a) {
    for (const Clause& cb : b) out.push_back(merge_clause(ca, cb));
  }
  return out;
}

std::vector<Clause> concat(std::vector<Clause> a, std::vector<Clause> b) {
  a.insert(a.end(), std::make_move_iterator(b.begin()),
           std::make_move_iterator(b.end()));
  return a;
}

// Negation-normal distribution without fresh atoms; the clause atom set
// stays exactly the formula atom set.
std::vector<Clause> to_clauses(const Formula& f, bool positive,
                               const Grounding& g, std::size_t cap) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      int id = g.atom_id(f.atom_ref());
      return {{positive ? id + 1 : -(id + 1)}};
    }
    case Formula::Kind::Not:
      return to_clauses(f.children().front(), !positive, g, cap);
    case Formula::Kind::And: {
      if (positive) {
        std::vector<Clause> out;
        for (const Formula& c : f.children()) {
          out = concat(std::move(out), to_clauses(c, true, g, cap));
        }
        return out;
      }
      std::vector<Clause> out = {{}};
      for (const Formula& c : f.children()) {
        out = cross(out, to_clauses(c, false, g, cap), cap);
      }
      return out;
    }
    case Formula::Kind::Or: {
      if (!positive) {
        std::vector<Clause> out;
        for (const Formula& c : f.children()) {
          out = concat(std::move(out), to_clauses(c, false, g, cap));
        }
        return out;
      }
      std::vector<Clause> out = {{}};
      for (const Formula& c : f.children()) {
        out = cross(out, to_clauses(c, true, g, cap), cap);
      }
      return out;
    }
    case Formula::Kind::Implies: {
      const Formula& lhs = f.children()[0];
      const Formula& rhs = f.children()[1];
      if (positive) {
        return cross(to_clauses(lhs, false, g, cap),
                     to_clauses(rhs, true, g, cap), cap);
      }
      return concat(to_clauses(lhs, true, g, cap),
                    to_clauses(rhs, false, g, cap));
    }
    case Formula::Kind::Iff: {
      const Formula& lhs = f.children()[0];
      const Formula& rhs = f.children()[1];
      if (positive) {
        return concat(cross(to_clauses(lhs, false, g, cap),
                            to_clauses(rhs, true, g, cap), cap),
                      cross(to_clauses(rhs, false, g, cap),
                            to_clauses(lhs, true, g, cap), cap));
      }
      return concat(cross(to_clauses(lhs, true, g, cap),
                          to_clauses(rhs, true, g, cap), cap),
                    cross(to_clauses(lhs, false, g, cap),
                          to_clauses(rhs, false, g, cap), cap));
    }
  }
  throw Error("unreachable");
}

std::vector<Clause> refutation_clauses(const Grounding& g, std::size_t cap) {
  std::vector<Clause> clauses;
  for (const Formula& f : g.premises_and_axioms) {
    clauses = concat(std::move(clauses), to_clauses(f, true, g, cap));
    if (clauses.size() > cap) {
      throw BudgetExceeded("clause budget exceeded during clausal conversion");
    }
  }
  clauses = concat(std::move(clauses), to_clauses(g.goal, false, g, cap));
  if (clauses.size() > cap) {
    throw BudgetExceeded("clause budget exceeded during clausal conversion");
  }
  return clauses;
}

// ----- congruence closure over the grounded term set (checker side) -----

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // smaller root wins, keeping class representatives deterministic
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// True iff the assignment's equality part extends to a congruence that is
// consistent with every assigned atom. Sound on partial assignments:
// the closure only grows as atoms get assigned, so an inconsistency seen
// here persists in every extension. Fills `repr` with the class
// representative of each term when non-null.
bool congruence_consistent(const Grounding& g, const std::vector<int8_t>& val,
                           std::vector<int>* repr) {
  UnionFind uf(g.terms.size());
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    if (g.is_equality(static_cast<int>(i)) && val[i] == 1) {
      uf.unite(g.atom_args[i][0], g.atom_args[i][1]);
    }
  }
  // functional congruence, saturated
  std::vector<int> apps;
  for (std::size_t t = 0; t < g.terms.size(); ++t) {
    if (!g.terms.args[t].empty()) apps.push_back(static_cast<int>(t));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < apps.size(); ++i) {
      for (std::size_t j = i + 1; j < apps.size(); ++j) {
        int s = apps[i], t = apps[j];
        if (uf.find(s) == uf.find(t)) continue;
        if (g.terms.heads[s] != g.terms.heads[t]) continue;
        const auto& sa = g.terms.args[s];
        const auto& ta = g.terms.args[t];
        if (sa.size() != ta.size()) continue;
        bool congruent = true;
        for (std::size_t k = 0; k < sa.size(); ++k) {
          if (uf.find(sa[k]) != uf.find(ta[k])) {
            congruent = false;
            break;
          }
        }
        if (congruent) {
          uf.unite(s, t);
          changed = true;
        }
      }
    }
  }
  // disequalities must not be merged
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    if (g.is_equality(static_cast<int>(i)) && val[i] == 0 &&
        uf.find(g.atom_args[i][0]) == uf.find(g.atom_args[i][1])) {
      return false;
    }
  }
  // congruent predicate atoms must agree (skip pairs not yet both assigned)
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    if (g.is_equality(static_cast<int>(i)) || val[i] == -1) continue;
    for (std::size_t j = i + 1; j < g.atoms.size(); ++j) {
      if (g.is_equality(static_cast<int>(j)) || val[j] == -1) continue;
      if (val[i] == val[j]) continue;
      if (g.atom_preds[i] != g.atom_preds[j]) continue;
      if (g.atom_args[i].size() != g.atom_args[j].size()) continue;
      bool congruent = true;
      for (std::size_t k = 0; k < g.atom_args[i].size(); ++k) {
        if (uf.find(g.atom_args[i][k]) != uf.find(g.atom_args[j][k])) {
          congruent = false;
          break;
        }
      }
      if (congruent) return false;
    }
  }
  if (repr != nullptr) {
    repr->resize(g.terms.size());
    for (std::size_t t = 0; t < g.terms.size(); ++t) {
      (*repr)[t] = uf.find(static_cast<int>(t));
    }
  }
  return true;
}

// ----- complete propositional search (checker side) -----

// false on conflict; otherwise extends `val` with every forced literal
bool propagate(const std::vector<Clause>& clauses, std::vector<int8_t>& val) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& clause : clauses) {
      bool satisfied = false;
      int unassigned = 0;
      int last_free = 0;
      for (int lit : clause) {
        int atom = std::abs(lit) - 1;
        if (val[atom] == -1) {
          ++unassigned;
          last_free = lit;
        } else if ((lit > 0) == (val[atom] == 1)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return false;
      if (unassigned == 1) {
        val[std::abs(last_free) - 1] = last_free > 0 ? 1 : 0;
        changed = true;
      }
    }
  }
  return true;
}

// Lexicographically first (atoms in printed order, false before true)
// clause-satisfying assignment whose equality part is congruence-consistent.
// The per-node congruence check prunes subtrees that cannot recover; it
// never skips a consistent assignment, so the found witness is the same one
// a leaves-only check would find.
std::optional<std::vector<int8_t>> search(const Grounding& g,
                                          const std::vector<Clause>& clauses,
                                          std::vector<int8_t> val) {
  if (!propagate(clauses, val)) return std::nullopt;
  if (!congruence_consistent(g, val, nullptr)) return std::nullopt;
  auto free_it = std::find(val.begin(), val.end(), int8_t{-1});
  if (free_it == val.end()) return val;
  std::size_t idx = static_cast<std::size_t>(free_it - val.begin());
  for (int8_t branch : {int8_t{0}, int8_t{1}}) {
    std::vector<int8_t> next = val;
    next[idx] = branch;
    if (auto found = search(g, clauses, std::move(next))) return found;
  }
  return std::nullopt;
}

Witness build_witness(const Grounding& g, const std::vector<int8_t>& val) {
  Witness w;
  w.assignment.reserve(g.atoms.size());
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    w.assignment.emplace_back(g.atoms[i], val[i] == 1);
  }
  std::vector<int> repr;
  congruence_consistent(g, val, &repr);
  std::map<int, std::vector<Term>> classes;
  for (std::size_t t = 0; t < g.terms.size(); ++t) {
    classes[repr[t]].push_back(g.terms.rebuild(static_cast<int>(t)));
  }
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    w.equality_classes.push_back(std::move(members));
  }
  std::sort(w.equality_classes.begin(), w.equality_classes.end(),
            [](const std::vector<Term>& a, const std::vector<Term>& b) {
              return a.front() < b.front();
            });
  return w;
}

}  // namespace

std::string Witness::str() const {
  std::string out = "atoms:";
  for (const auto& [atom, value] : assignment) {
    out += ' ';
    atom.print(out);
    out += value ? "=true" : "=false";
  }
  std::string merged;
  for (const auto& cls : equality_classes) {
    if (cls.size() < 2) continue;
    merged += " {";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i > 0) merged += ' ';
      cls[i].print(merged);
    }
    merged += '}';
  }
  out += "; identified:";
  out += merged.empty() ? " none" : merged;
  return out;
}

TermUniverse term_universe(const Problem& p) {
  std::set<Term> terms;
  auto add = [&terms](auto&& self, const Term& t) -> void {
    terms.insert(t);
    for (const Term& arg : t.args()) self(self, arg);
  };
  auto visit = [&](const Atom& a) {
    for (const Term& arg : a.args) add(add, arg);
  };
  for (const Formula& f : p.premises) f.for_each_atom(visit);
  p.goal.for_each_atom(visit);
  return {std::vector<Term>(terms.begin(), terms.end())};
}

std::vector<Formula> instantiate_axioms(const Environment& env,
                                        const TermUniverse& u,
                                        std::size_t instance_budget) {
  std::set<Formula> out;
  std::size_t count = 0;
  auto keep = [&out](Formula f) {
    if (f.kind() == Formula::Kind::Atom && f.atom_ref().is_equality()) {
      const Atom& a = f.atom_ref();
      if (a.args[0] == a.args[1]) return;  // t = t identity
      if (a.args[1] < a.args[0]) {
        f = Formula::equality(a.args[1], a.args[0]);
      }
    }
    out.insert(std::move(f));
  };
  for (const Attachment& att : env.attachments()) {
    const PropertySchema& schema = property_schema(att.property);
    if (schema.variables.size() == 1) {
      for (const Term& t : u.terms) {
        if (++count > instance_budget) {
          throw BudgetExceeded("instance budget exceeded (" +
                               std::to_string(instance_budget) + ")");
        }
        keep(instantiate_schema(schema, att.constructor, t));
      }
    } else {
      for (const Term& t1 : u.terms) {
        for (const Term& t2 : u.terms) {
          if (++count > instance_budget) {
            throw BudgetExceeded("instance budget exceeded (" +
                                 std::to_string(instance_budget) + ")");
          }
          keep(instantiate_schema(schema, att.constructor, t1, &t2));
        }
      }
    }
  }
  return std::vector<Formula>(out.begin(), out.end());
}

Problem make_problem(const Item& item, const Library& lib,
                     const std::optional<Environment>& env_override) {
  const Item* in_lib = lib.find_item(item.id);
  if (in_lib == nullptr || !(*in_lib == item)) {
    throw MalformedItem("item not in library: " + item.id);
  }
  Problem p;
  p.premises = item.premises;
  for (const std::string& used : item.uses) {
    const Item* u = lib.find_item(used);
    if (u == nullptr) {
      throw MalformedItem("used item not in library: " + used);
    }
    p.premises.push_back(u->statement());
  }
  p.goal = item.goal;
  Environment base = lib.environment.restricted_to(item.imports);
  if (env_override.has_value()) {
    if (!env_override->subset_of(base)) {
      throw MalformedItem(
          "environment override is not a subset of the importable "
          "attachments of item " +
          item.id);
    }
    p.env = *env_override;
  } else {
    p.env = std::move(base);
  }
  return p;
}

Verdict Verifier::check(const Item& item, const Library& lib,
                        const std::optional<Environment>& env_override) const {
  return check_problem(make_problem(item, lib, env_override));
}

Verdict Verifier::check_problem(const Problem& p) const {
  check_calls_.fetch_add(1);
  Grounding g = ground_problem(p, opts_.instance_budget);
  std::vector<Clause> clauses = refutation_clauses(g, opts_.instance_budget);
  std::vector<int8_t> unassigned(g.atoms.size(), int8_t{-1});
  if (auto model = search(g, clauses, std::move(unassigned))) {
    return Verdict::fail(build_witness(g, *model));
  }
  return Verdict::pass();
}

std::size_t ground_atom_count(const Problem& p, std::size_t instance_budget) {
  return ground_problem(p, instance_budget).atoms.size();
}

// ----- brute-force oracle -----

namespace {

// Formula compiled to atom indices for fast repeated evaluation.
struct Compiled {
  Formula::Kind kind;
  int atom = -1;
  std::vector<Compiled> children;
};

Compiled compile(const Formula& f, const Grounding& g) {
  Compiled c;
  c.kind = f.kind();
  if (f.kind() == Formula::Kind::Atom) {
    c.atom = g.atom_id(f.atom_ref());
    return c;
  }
  c.children.reserve(f.children().size());
  for (const Formula& child : f.children()) {
    c.children.push_back(compile(child, g));
  }
  return c;
}

bool eval(const Compiled& c, const std::vector<int8_t>& val) {
  switch (c.kind) {
    case Formula::Kind::Atom:
      return val[c.atom] == 1;
    case Formula::Kind::Not:
      return !eval(c.children.front(), val);
    case Formula::Kind::And:
      for (const Compiled& child : c.children) {
        if (!eval(child, val)) return false;
      }
      return true;
    case Formula::Kind::Or:
      for (const Compiled& child : c.children) {
        if (eval(child, val)) return true;
      }
      return false;
    case Formula::Kind::Implies:
      return !eval(c.children[0], val) || eval(c.children[1], val);
    case Formula::Kind::Iff:
      return eval(c.children[0], val) == eval(c.children[1], val);
  }
  return false;
}

// Saturation-style congruence test: seeds the relation with the true
// equality atoms, closes it under reflexivity/symmetry/transitivity and
// functional congruence instances, then checks the assignment against the
// closure. Independent of the checker's union-find path.
struct SaturationResult {
  bool consistent = false;
  std::vector<std::vector<uint8_t>> related;
};

SaturationResult saturate_equalities(const Grounding& g,
                                     const std::vector<int8_t>& val) {
  const std::size_t n = g.terms.size();
  SaturationResult res;
  res.related.assign(n, std::vector<uint8_t>(n, 0));
  auto& eq = res.related;
  for (std::size_t t = 0; t < n; ++t) eq[t][t] = 1;  // reflexivity
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    if (g.is_equality(static_cast<int>(i)) && val[i] == 1) {
      int a = g.atom_args[i][0];
      int b = g.atom_args[i][1];
      eq[a][b] = eq[b][a] = 1;  // symmetry
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // transitivity instances
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (eq[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (eq[k][j] == 1 && eq[i][j] == 0) {
            eq[i][j] = eq[j][i] = 1;
            changed = true;
          }
        }
      }
    }
    // functional congruence instances
    for (std::size_t s = 0; s < n; ++s) {
      if (g.terms.args[s].empty()) continue;
      for (std::size_t t = s + 1; t < n; ++t) {
        if (eq[s][t] == 1) continue;
        if (g.terms.heads[s] != g.terms.heads[t]) continue;
        if (g.terms.args[s].size() != g.terms.args[t].size()) continue;
        bool argwise = true;
        for (std::size_t k = 0; k < g.terms.args[s].size(); ++k) {
          if (eq[g.terms.args[s][k]][g.terms.args[t][k]] == 0) {
            argwise = false;
            break;
          }
        }
        if (argwise) {
          eq[s][t] = eq[t][s] = 1;
          changed = true;
        }
      }
    }
  }
  // equality atoms assigned false must stay outside the closure
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    if (g.is_equality(static_cast<int>(i)) && val[i] == 0 &&
        eq[g.atom_args[i][0]][g.atom_args[i][1]] == 1) {
      return res;
    }
  }
  // predicate congruence instances
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    if (g.is_equality(static_cast<int>(i))) continue;
    for (std::size_t j = i + 1; j < g.atoms.size(); ++j) {
      if (g.is_equality(static_cast<int>(j))) continue;
      if (val[i] == val[j] || g.atom_preds[i] != g.atom_preds[j]) continue;
      if (g.atom_args[i].size() != g.atom_args[j].size()) continue;
      bool argwise = true;
      for (std::size_t k = 0; k < g.atom_args[i].size(); ++k) {
        if (eq[g.atom_args[i][k]][g.atom_args[j][k]] == 0) {
          argwise = false;
          break;
        }
      }
      if (argwise) return res;
    }
  }
  res.consistent = true;
  return res;
}

Witness oracle_witness(const Grounding& g, const std::vector<int8_t>& val,
                       const SaturationResult& sat) {
  Witness w;
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    w.assignment.emplace_back(g.atoms[i], val[i] == 1);
  }
  std::vector<bool> placed(g.terms.size(), false);
  for (std::size_t t = 0; t < g.terms.size(); ++t) {
    if (placed[t]) continue;
    std::vector<Term> cls;
    for (std::size_t u = t; u < g.terms.size(); ++u) {
      if (sat.related[t][u] == 1) {
        placed[u] = true;
        cls.push_back(g.terms.rebuild(static_cast<int>(u)));
      }
    }
    std::sort(cls.begin(), cls.end());
    w.equality_classes.push_back(std::move(cls));
  }
  std::sort(w.equality_classes.begin(), w.equality_classes.end(),
            [](const std::vector<Term>& a, const std::vector<Term>& b) {
              return a.front() < b.front();
            });
  return w;
}

}  // namespace

Verdict Verifier::brute_force_verdict(const Problem& p) const {
  Grounding g = ground_problem(p, opts_.instance_budget);
  const std::size_t n = g.atoms.size();
  if (n > opts_.oracle_bound) {
    throw OracleBoundExceeded("oracle bound exceeded: " + std::to_string(n) +
                              " atoms > " + std::to_string(opts_.oracle_bound));
  }
  std::vector<Compiled> constraints;
  constraints.reserve(g.premises_and_axioms.size());
  for (const Formula& f : g.premises_and_axioms) {
    constraints.push_back(compile(f, g));
  }
  Compiled goal = compile(g.goal, g);

  std::vector<int8_t> val(n, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      val[i] = static_cast<int8_t>((mask >> i) & 1U);
    }
    bool satisfies = !eval(goal, val);
    for (std::size_t i = 0; satisfies && i < constraints.size(); ++i) {
      satisfies = eval(constraints[i], val);
    }
    if (!satisfies) continue;
    SaturationResult sat = saturate_equalities(g, val);
    if (sat.consistent) {
      return Verdict::fail(oracle_witness(g, val, sat));
    }
  }
  return Verdict::pass();
}

bool witness_satisfies(const Problem& p, const Witness& w,
                       std::size_t instance_budget) {
  Grounding g = ground_problem(p, instance_budget);
  if (w.assignment.size() != g.atoms.size()) return false;
  std::vector<int8_t> val(g.atoms.size(), -1);
  for (const auto& [atom, value] : w.assignment) {
    int id = g.atom_id(atom);
    if (id < 0) return false;
    val[id] = value ? 1 : 0;
  }
  for (int8_t v : val) {
    if (v == -1) return false;
  }
  for (const Formula& f : g.premises_and_axioms) {
    if (!eval(compile(f, g), val)) return false;
  }
  if (eval(compile(g.goal, g), val)) return false;
  return saturate_equalities(g, val).consistent;
}

}  // namespace propuse
