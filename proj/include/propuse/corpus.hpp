#ifndef PROPUSE_CORPUS_HPP
#define PROPUSE_CORPUS_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "propuse/ast.hpp"
#include "propuse/errors.hpp"

namespace propuse {

enum class ConstructorKind { Relation, Function };

// The nine properties attachable to constructors, in fixed report order.
enum class PropertyKind {
  Reflexivity,
  Symmetry,
  Asymmetry,
  Connectedness,
  Irreflexivity,
  Projectivity,
  Involutiveness,
  Idempotence,
  Commutativity,
};

inline constexpr std::array<PropertyKind, 9> kAllProperties = {
    PropertyKind::Reflexivity,    PropertyKind::Symmetry,
    PropertyKind::Asymmetry,      PropertyKind::Connectedness,
    PropertyKind::Irreflexivity,  PropertyKind::Projectivity,
    PropertyKind::Involutiveness, PropertyKind::Idempotence,
    PropertyKind::Commutativity,
};

std::string_view property_name(PropertyKind kind);
std::optional<PropertyKind> property_from_name(std::string_view name);

// Kind and arity of constructor a property may be attached to.
ConstructorKind property_constructor_kind(PropertyKind kind);
int property_arity(PropertyKind kind);
// Number of universally quantified variables in the property's schema.
int property_variable_count(PropertyKind kind);

std::string_view constructor_kind_name(ConstructorKind kind);

struct ConstructorDecl {
  std::string id;
  ConstructorKind kind = ConstructorKind::Relation;
  int arity = 2;

  bool operator==(const ConstructorDecl&) const = default;
};

// One (constructor, property) pair. Ordered by constructor id, then
// property name, which fixes the elicitation and report order.
struct Attachment {
  std::string constructor;
  PropertyKind property = PropertyKind::Reflexivity;

  bool operator==(const Attachment&) const = default;
  bool operator<(const Attachment& other) const;
  std::string str() const;  // "(ctor property)"
};

class Environment {
 public:
  Environment() = default;
  explicit Environment(std::set<Attachment> attachments)
      : attachments_(std::move(attachments)) {}

  const std::set<Attachment>& attachments() const { return attachments_; }
  bool empty() const { return attachments_.empty(); }
  std::size_t size() const { return attachments_.size(); }
  bool contains(const Attachment& a) const { return attachments_.count(a) > 0; }

  void insert(Attachment a) { attachments_.insert(std::move(a)); }

  // New environment without (ctor, property); throws AttachmentNotFound.
  Environment detached(const std::string& ctor, PropertyKind property) const;
  Environment detached(const Attachment& a) const {
    return detached(a.constructor, a.property);
  }
  // New environment keeping only attachments whose constructor is in `ctors`.
  Environment restricted_to(const std::set<std::string>& ctors) const;
  bool subset_of(const Environment& other) const;

  bool operator==(const Environment&) const = default;

 private:
  std::set<Attachment> attachments_;
};

// Functional removal of one attachment (input unchanged).
Environment detach(const Environment& env, const std::string& ctor,
                   PropertyKind property);

struct Item {
  std::string id;
  std::set<std::string> imports;
  std::vector<Formula> premises;
  Formula goal;
  std::set<std::string> uses;

  // The exportable statement: the goal, guarded by the premises when present.
  Formula statement() const;

  bool operator==(const Item&) const = default;
};

struct Library {
  std::vector<ConstructorDecl> constructors;
  std::set<std::string> constants;
  Environment environment;
  std::vector<Item> items;

  const ConstructorDecl* find_constructor(std::string_view id) const;
  const Item* find_item(std::string_view id) const;

  bool operator==(const Library& other) const;
};

// Returns every invariant violation; empty means the library is well formed.
std::vector<Diagnostic> validate_library(const Library& lib);

// Universal axiom schema of one property. The body is a formula over the
// constructor metavariable and the bound variables.
struct PropertySchema {
  PropertyKind kind;
  std::string metavariable;            // "R", "f", or "g"
  std::vector<std::string> variables;  // {"x"} or {"x", "y"}
  Formula body;

  std::string str() const;  // "(forall (x y) <body>)"
};

const PropertySchema& property_schema(PropertyKind kind);

// Substitutes the constructor id for the metavariable and the given terms
// for the bound variables. `second` is required iff the schema binds two.
Formula instantiate_schema(const PropertySchema& schema,
                           const std::string& ctor, const Term& first,
                           const Term* second = nullptr);

}  // namespace propuse

#endif
