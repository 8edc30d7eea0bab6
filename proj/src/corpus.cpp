#include "propuse/corpus.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace propuse {

namespace {

constexpr std::array<std::string_view, 9> kPropertyNames = {
    "reflexivity",  "symmetry",       "asymmetry",
    "connectedness", "irreflexivity", "projectivity",
    "involutiveness", "idempotence",  "commutativity",
};

}  // namespace

ValidationFailed::ValidationFailed(std::vector<Diagnostic> diags)
    : Error([&diags] {
        std::string msg = "library validation failed";
        for (const Diagnostic& d : diags) {
          msg += "\n  ";
          msg += d.str();
        }
        return msg;
      }()),
      diagnostics(std::move(diags)) {}

std::string_view property_name(PropertyKind kind) {
  return kPropertyNames[static_cast<std::size_t>(kind)];
}

std::optional<PropertyKind> property_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kPropertyNames.size(); ++i) {
    if (kPropertyNames[i] == name) return kAllProperties[i];
  }
  return std::nullopt;
}

ConstructorKind property_constructor_kind(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Reflexivity:
    case PropertyKind::Symmetry:
    case PropertyKind::Asymmetry:
    case PropertyKind::Connectedness:
    case PropertyKind::Irreflexivity:
      return ConstructorKind::Relation;
    default:
      return ConstructorKind::Function;
  }
}

int property_arity(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Projectivity:
    case PropertyKind::Involutiveness:
      return 1;
    default:
      return 2;
  }
}

int property_variable_count(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Symmetry:
    case PropertyKind::Asymmetry:
    case PropertyKind::Connectedness:
    case PropertyKind::Commutativity:
      return 2;
    default:
      return 1;
  }
}

std::string_view constructor_kind_name(ConstructorKind kind) {
  return kind == ConstructorKind::Relation ? "relation" : "function";
}

bool Attachment::operator<(const Attachment& other) const {
  if (constructor != other.constructor) return constructor < other.constructor;
  return property_name(property) < property_name(other.property);
}

std::string Attachment::str() const {
  return "(" + constructor + " " + std::string(property_name(property)) + ")";
}

Environment Environment::detached(const std::string& ctor,
                                  PropertyKind property) const {
  Attachment target{ctor, property};
  if (!contains(target)) {
    throw AttachmentNotFound("no attachment " + target.str() +
                             " in environment");
  }
  std::set<Attachment> rest = attachments_;
  rest.erase(target);
  return Environment(std::move(rest));
}

Environment Environment::restricted_to(
    const std::set<std::string>& ctors) const {
  std::set<Attachment> kept;
  for (const Attachment& a : attachments_) {
    if (ctors.count(a.constructor) > 0) kept.insert(a);
  }
  return Environment(std::move(kept));
}

bool Environment::subset_of(const Environment& other) const {
  return std::includes(other.attachments_.begin(), other.attachments_.end(),
                       attachments_.begin(), attachments_.end());
}

Environment detach(const Environment& env, const std::string& ctor,
                   PropertyKind property) {
  return env.detached(ctor, property);
}

Formula Item::statement() const {
  if (premises.empty()) return goal;
  if (premises.size() == 1) return Formula::implication(premises.front(), goal);
  return Formula::implication(Formula::conjunction(premises), goal);
}

const ConstructorDecl* Library::find_constructor(std::string_view id) const {
  for (const ConstructorDecl& c : constructors) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const Item* Library::find_item(std::string_view id) const {
  for (const Item& item : items) {
    if (item.id == id) return &item;
  }
  return nullptr;
}

bool Library::operator==(const Library& other) const {
  auto sorted = [](std::vector<ConstructorDecl> cs) {
    std::sort(cs.begin(), cs.end(),
              [](const ConstructorDecl& a, const ConstructorDecl& b) {
                return a.id < b.id;
              });
    return cs;
  };
  return sorted(constructors) == sorted(other.constructors) &&
         constants == other.constants && environment == other.environment &&
         items == other.items;
}

namespace {

class Validator {
 public:
  explicit Validator(const Library& lib) : lib_(lib) {}

  std::vector<Diagnostic> run() {
    check_constructors();
    check_attachments();
    check_items();
    check_uses_graph();
    return std::move(diags_);
  }

 private:
  void report(std::string subject, std::string reason) {
    diags_.push_back({std::move(subject), std::move(reason)});
  }

  void check_constructors() {
    for (const ConstructorDecl& c : lib_.constructors) {
      auto [it, inserted] = ctors_.emplace(c.id, &c);
      if (!inserted) {
        report(c.id, "duplicate constructor");
        continue;
      }
      if (c.arity != 1 && c.arity != 2) report(c.id, "arity must be 1 or 2");
      if (lib_.constants.count(c.id) > 0) {
        report(c.id, "symbol declared as both constant and constructor");
      }
    }
  }

  void check_attachments() {
    for (const Attachment& a : lib_.environment.attachments()) {
      auto it = ctors_.find(a.constructor);
      if (it == ctors_.end()) {
        report(a.constructor, "attachment references undeclared constructor");
        continue;
      }
      const ConstructorDecl& c = *it->second;
      if (c.kind != property_constructor_kind(a.property) ||
          c.arity != property_arity(a.property)) {
        report(a.constructor, "property/kind mismatch");
      }
    }
  }

  void check_term(const Item& item, const Term& term) {
    if (term.is_constant()) {
      if (lib_.constants.count(term.head()) == 0) {
        report(item.id, "undeclared symbol: " + term.head());
      }
      return;
    }
    auto it = ctors_.find(term.head());
    if (it == ctors_.end()) {
      report(item.id, "undeclared symbol: " + term.head());
    } else {
      const ConstructorDecl& c = *it->second;
      if (c.kind != ConstructorKind::Function) {
        report(item.id, "relation used as function: " + term.head());
      } else if (static_cast<std::size_t>(c.arity) != term.args().size()) {
        report(item.id, "arity mismatch for " + term.head());
      }
    }
    for (const Term& arg : term.args()) check_term(item, arg);
  }

  void check_atom(const Item& item, const Atom& atom) {
    if (atom.is_equality()) {
      for (const Term& arg : atom.args) check_term(item, arg);
      return;
    }
    auto it = ctors_.find(atom.pred);
    if (it == ctors_.end()) {
      report(item.id, "undeclared symbol: " + atom.pred);
    } else {
      const ConstructorDecl& c = *it->second;
      if (c.kind != ConstructorKind::Relation) {
        report(item.id, "function used as relation: " + atom.pred);
      } else if (static_cast<std::size_t>(c.arity) != atom.args.size()) {
        report(item.id, "arity mismatch for " + atom.pred);
      }
    }
    for (const Term& arg : atom.args) check_term(item, arg);
  }

  void check_items() {
    std::unordered_set<std::string> ids;
    for (const Item& item : lib_.items) {
      if (!ids.insert(item.id).second) {
        report(item.id, "duplicate item");
        continue;
      }
      for (const std::string& imp : item.imports) {
        if (ctors_.count(imp) == 0) report(item.id, "undeclared import: " + imp);
      }
      auto visit = [&](const Atom& atom) { check_atom(item, atom); };
      for (const Formula& p : item.premises) p.for_each_atom(visit);
      item.goal.for_each_atom(visit);
      for (const std::string& used : item.uses) {
        if (used == item.id) {
          report(item.id, "self-reference in uses");
        } else if (lib_.find_item(used) == nullptr) {
          report(item.id, "unknown item in uses: " + used);
        }
      }
    }
  }

  // Tarjan SCC over the uses graph; any SCC with more than one node is a
  // cycle (self-references are reported separately above).
  void check_uses_graph() {
    std::map<std::string, const Item*> by_id;
    for (const Item& item : lib_.items) by_id.emplace(item.id, &item);

    std::map<std::string, int> index, low;
    std::vector<std::string> stack;
    std::unordered_set<std::string> on_stack;
    int counter = 0;

    std::vector<std::vector<std::string>> cycles;
    auto strongconnect = [&](auto&& self, const std::string& v) -> void {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack.insert(v);
      auto it = by_id.find(v);
      if (it != by_id.end()) {
        for (const std::string& w : it->second->uses) {
          if (by_id.count(w) == 0 || w == v) continue;
          if (index.count(w) == 0) {
            self(self, w);
            low[v] = std::min(low[v], low[w]);
          } else if (on_stack.count(w) > 0) {
            low[v] = std::min(low[v], index[w]);
          }
        }
      }
      if (low[v] == index[v]) {
        std::vector<std::string> component;
        for (;;) {
          std::string w = stack.back();
          stack.pop_back();
          on_stack.erase(w);
          component.push_back(w);
          if (w == v) break;
        }
        if (component.size() > 1) {
          std::sort(component.begin(), component.end());
          cycles.push_back(std::move(component));
        }
      }
    };
    for (const Item& item : lib_.items) {
      if (index.count(item.id) == 0) strongconnect(strongconnect, item.id);
    }
    std::sort(cycles.begin(), cycles.end());
    for (const auto& cycle : cycles) {
      std::string members;
      for (const std::string& id : cycle) {
        if (!members.empty()) members += ',';
        members += id;
      }
      report(cycle.front(), "cycle: " + members);
    }
  }

  const Library& lib_;
  std::map<std::string, const ConstructorDecl*> ctors_;
  std::vector<Diagnostic> diags_;
};

Term var(const char* name) { return Term(name); }

PropertySchema make_schema(PropertyKind kind) {
  const Term x = var("x");
  const Term y = var("y");
  switch (kind) {
    case PropertyKind::Reflexivity:
      return {kind, "R", {"x"}, Formula::atom("R", {x, x})};
    case PropertyKind::Symmetry:
      return {kind, "R", {"x", "y"},
              Formula::implication(Formula::atom("R", {x, y}),
                                   Formula::atom("R", {y, x}))};
    case PropertyKind::Asymmetry:
      return {kind, "R", {"x", "y"},
              Formula::implication(
                  Formula::atom("R", {x, y}),
                  Formula::negation(Formula::atom("R", {y, x})))};
    case PropertyKind::Connectedness:
      return {kind, "R", {"x", "y"},
              Formula::disjunction(
                  {Formula::atom("R", {x, y}), Formula::atom("R", {y, x})})};
    case PropertyKind::Irreflexivity:
      return {kind, "R", {"x"},
              Formula::negation(Formula::atom("R", {x, x}))};
    case PropertyKind::Projectivity:
      return {kind, "f", {"x"},
              Formula::equality(Term("f", {Term("f", {x})}), Term("f", {x}))};
    case PropertyKind::Involutiveness:
      return {kind, "f", {"x"},
              Formula::equality(Term("f", {Term("f", {x})}), x)};
    case PropertyKind::Idempotence:
      return {kind, "g", {"x"}, Formula::equality(Term("g", {x, x}), x)};
    case PropertyKind::Commutativity:
      return {kind, "g", {"x", "y"},
              Formula::equality(Term("g", {x, y}), Term("g", {y, x}))};
  }
  throw Error("unknown property kind");
}

}  // namespace

std::vector<Diagnostic> validate_library(const Library& lib) {
  return Validator(lib).run();
}

std::string PropertySchema::str() const {
  std::string out = "(forall (";
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (i > 0) out += ' ';
    out += variables[i];
  }
  out += ") ";
  body.print(out);
  out += ')';
  return out;
}

const PropertySchema& property_schema(PropertyKind kind) {
  static const std::array<PropertySchema, 9> schemas = [] {
    std::array<PropertySchema, 9> out{};
    for (std::size_t i = 0; i < kAllProperties.size(); ++i) {
      out[i] = make_schema(kAllProperties[i]);
    }
    return out;
  }();
  return schemas[static_cast<std::size_t>(kind)];
}

namespace {

Term substitute_term(const Term& pattern, const PropertySchema& schema,
                     const std::string& ctor, const Term& first,
                     const Term* second) {
  if (pattern.is_constant()) {
    if (pattern.head() == schema.variables.front()) return first;
    if (schema.variables.size() > 1 && pattern.head() == schema.variables[1]) {
      return *second;
    }
    return pattern;
  }
  std::vector<Term> args;
  args.reserve(pattern.args().size());
  for (const Term& arg : pattern.args()) {
    args.push_back(substitute_term(arg, schema, ctor, first, second));
  }
  std::string head =
      pattern.head() == schema.metavariable ? ctor : pattern.head();
  return Term(std::move(head), std::move(args));
}

Formula substitute_formula(const Formula& pattern, const PropertySchema& schema,
                           const std::string& ctor, const Term& first,
                           const Term* second) {
  if (pattern.kind() == Formula::Kind::Atom) {
    const Atom& a = pattern.atom_ref();
    std::vector<Term> args;
    args.reserve(a.args.size());
    for (const Term& arg : a.args) {
      args.push_back(substitute_term(arg, schema, ctor, first, second));
    }
    std::string pred = a.pred == schema.metavariable ? ctor : a.pred;
    return Formula::atom(std::move(pred), std::move(args));
  }
  std::vector<Formula> children;
  children.reserve(pattern.children().size());
  for (const Formula& child : pattern.children()) {
    children.push_back(
        substitute_formula(child, schema, ctor, first, second));
  }
  switch (pattern.kind()) {
    case Formula::Kind::Not:
      return Formula::negation(std::move(children.front()));
    case Formula::Kind::And:
      return Formula::conjunction(std::move(children));
    case Formula::Kind::Or:
      return Formula::disjunction(std::move(children));
    case Formula::Kind::Implies:
      return Formula::implication(std::move(children[0]), std::move(children[1]));
    case Formula::Kind::Iff:
      return Formula::equivalence(std::move(children[0]), std::move(children[1]));
    case Formula::Kind::Atom:
      break;
  }
  throw Error("unreachable");
}

}  // namespace

Formula instantiate_schema(const PropertySchema& schema,
                           const std::string& ctor, const Term& first,
                           const Term* second) {
  if ((schema.variables.size() == 2) != (second != nullptr)) {
    throw Error("schema variable count mismatch");
  }
  return substitute_formula(schema.body, schema, ctor, first, second);
}

}  // namespace propuse
