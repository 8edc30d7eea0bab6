#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "propuse/corpus.hpp"

using namespace propuse;

TEST_CASE("property names round-trip and follow the fixed table order") {
  const std::vector<std::string> expected = {
      "reflexivity",    "symmetry",      "asymmetry",
      "connectedness",  "irreflexivity", "projectivity",
      "involutiveness", "idempotence",   "commutativity"};
  REQUIRE(kAllProperties.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(property_name(kAllProperties[i]) == expected[i]);
    CHECK(property_from_name(expected[i]) == kAllProperties[i]);
  }
  CHECK(!property_from_name("transitivity").has_value());
  CHECK(!property_from_name("").has_value());
}

TEST_CASE("property kind/arity restrictions") {
  for (PropertyKind p :
       {PropertyKind::Reflexivity, PropertyKind::Symmetry,
        PropertyKind::Asymmetry, PropertyKind::Connectedness,
        PropertyKind::Irreflexivity}) {
    CHECK(property_constructor_kind(p) == ConstructorKind::Relation);
    CHECK(property_arity(p) == 2);
  }
  for (PropertyKind p :
       {PropertyKind::Projectivity, PropertyKind::Involutiveness}) {
    CHECK(property_constructor_kind(p) == ConstructorKind::Function);
    CHECK(property_arity(p) == 1);
  }
  for (PropertyKind p :
       {PropertyKind::Idempotence, PropertyKind::Commutativity}) {
    CHECK(property_constructor_kind(p) == ConstructorKind::Function);
    CHECK(property_arity(p) == 2);
  }
}

TEST_CASE("property schemas are the nine universal axioms") {
  auto body = [](PropertyKind p) { return property_schema(p).body.str(); };
  CHECK(body(PropertyKind::Reflexivity) == "(R x x)");
  CHECK(body(PropertyKind::Symmetry) == "(implies (R x y) (R y x))");
  CHECK(body(PropertyKind::Asymmetry) == "(implies (R x y) (not (R y x)))");
  CHECK(body(PropertyKind::Connectedness) == "(or (R x y) (R y x))");
  CHECK(body(PropertyKind::Irreflexivity) == "(not (R x x))");
  CHECK(body(PropertyKind::Projectivity) == "(= (f (f x)) (f x))");
  CHECK(body(PropertyKind::Involutiveness) == "(= (f (f x)) x)");
  CHECK(body(PropertyKind::Idempotence) == "(= (g x x) x)");
  CHECK(body(PropertyKind::Commutativity) == "(= (g x y) (g y x))");

  CHECK(property_schema(PropertyKind::Symmetry).str() ==
        "(forall (x y) (implies (R x y) (R y x)))");
  for (PropertyKind p : kAllProperties) {
    const PropertySchema& s = property_schema(p);
    CHECK(s.kind == p);
    CHECK(static_cast<int>(s.variables.size()) == property_variable_count(p));
  }
}

TEST_CASE("schema instantiation substitutes constructor and terms") {
  const Term a("a"), b("b"), c("c");
  CHECK(instantiate_schema(property_schema(PropertyKind::Irreflexivity), "lt",
                           a)
            .str() == "(not (lt a a))");
  CHECK(instantiate_schema(property_schema(PropertyKind::Commutativity), "g",
                           a, &b)
            .str() == "(= (g a b) (g b a))");
  CHECK(instantiate_schema(property_schema(PropertyKind::Involutiveness), "f",
                           c)
            .str() == "(= (f (f c)) c)");
  const Term fa("f", {a});
  CHECK(instantiate_schema(property_schema(PropertyKind::Projectivity), "cl",
                           fa)
            .str() == "(= (cl (cl (f a))) (cl (f a)))");
}

TEST_CASE("environment detach is functional and checked") {
  Environment env;
  env.insert({"lt", PropertyKind::Irreflexivity});
  env.insert({"lt", PropertyKind::Asymmetry});
  env.insert({"add", PropertyKind::Commutativity});

  Environment smaller = env.detached("lt", PropertyKind::Asymmetry);
  CHECK(smaller.size() == 2);
  CHECK(env.size() == 3);  // input unchanged
  CHECK(!smaller.contains({"lt", PropertyKind::Asymmetry}));
  CHECK(smaller.subset_of(env));
  CHECK(!env.subset_of(smaller));

  // detach then re-attach is identity
  Environment back = smaller;
  back.insert({"lt", PropertyKind::Asymmetry});
  CHECK(back == env);

  CHECK_THROWS_AS(env.detached("lt", PropertyKind::Reflexivity),
                  AttachmentNotFound);
  CHECK_THROWS_AS(detach(env, "nosuch", PropertyKind::Commutativity),
                  AttachmentNotFound);

  Environment only_lt = env.restricted_to({"lt"});
  CHECK(only_lt.size() == 2);
  CHECK(only_lt.contains({"lt", PropertyKind::Irreflexivity}));
  CHECK(env.restricted_to({}).empty());
}

TEST_CASE("attachments order by constructor id then property name") {
  Attachment a1{"add", PropertyKind::Commutativity};
  Attachment a2{"lt", PropertyKind::Asymmetry};
  Attachment a3{"lt", PropertyKind::Irreflexivity};
  CHECK(a1 < a2);
  CHECK(a2 < a3);  // "asymmetry" < "irreflexivity"
  CHECK(a1.str() == "(add commutativity)");
}

TEST_CASE("item statement guards the goal with its premises") {
  Item bare;
  bare.goal = Formula::atom("le", {Term("d"), Term("d")});
  CHECK(bare.statement().str() == "(le d d)");

  Item guarded;
  guarded.premises = {Formula::atom("lt", {Term("a"), Term("b")})};
  guarded.goal = Formula::negation(Formula::atom("lt", {Term("b"), Term("a")}));
  CHECK(guarded.statement().str() == "(implies (lt a b) (not (lt b a)))");

  guarded.premises.push_back(Formula::atom("lt", {Term("b"), Term("c")}));
  guarded.goal = Formula::atom("lt", {Term("a"), Term("c")});
  CHECK(guarded.statement().str() ==
        "(implies (and (lt a b) (lt b c)) (lt a c))");
}

namespace {

Library two_item_library() {
  Library lib;
  lib.constants = {"a", "b"};
  lib.constructors = {{"lt", ConstructorKind::Relation, 2}};
  lib.environment.insert({"lt", PropertyKind::Asymmetry});
  Item first;
  first.id = "first_th";
  first.imports = {"lt"};
  first.premises = {Formula::atom("lt", {Term("a"), Term("b")})};
  first.goal = Formula::negation(Formula::atom("lt", {Term("b"), Term("a")}));
  Item second;
  second.id = "second_th";
  second.imports = {"lt"};
  second.premises = first.premises;
  second.goal = first.goal;
  second.uses = {"first_th"};
  lib.items = {first, second};
  return lib;
}

bool has_diagnostic(const std::vector<Diagnostic>& diags,
                    const std::string& subject, const std::string& reason) {
  return std::any_of(diags.begin(), diags.end(), [&](const Diagnostic& d) {
    return d.subject == subject && d.reason == reason;
  });
}

}  // namespace

TEST_CASE("well-formed two-item library validates cleanly") {
  CHECK(validate_library(two_item_library()).empty());
}

TEST_CASE("validation rejects property/kind mismatches") {
  Library lib;
  lib.constructors = {{"subset", ConstructorKind::Relation, 2}};
  lib.environment.insert({"subset", PropertyKind::Commutativity});
  auto diags = validate_library(lib);
  CHECK(has_diagnostic(diags, "subset", "property/kind mismatch"));
}

TEST_CASE("validation finds structural problems") {
  Library lib = two_item_library();

  SUBCASE("duplicate constructor") {
    lib.constructors.push_back({"lt", ConstructorKind::Function, 1});
    CHECK(has_diagnostic(validate_library(lib), "lt",
                         "duplicate constructor"));
  }
  SUBCASE("constant/constructor collision") {
    lib.constants.insert("lt");
    CHECK(has_diagnostic(validate_library(lib), "lt",
                         "symbol declared as both constant and constructor"));
  }
  SUBCASE("attachment on undeclared constructor") {
    lib.environment.insert({"ghost", PropertyKind::Reflexivity});
    CHECK(has_diagnostic(validate_library(lib), "ghost",
                         "attachment references undeclared constructor"));
  }
  SUBCASE("duplicate item id") {
    lib.items.push_back(lib.items.front());
    CHECK(has_diagnostic(validate_library(lib), "first_th",
                         "duplicate item"));
  }
  SUBCASE("undeclared symbol in a formula") {
    lib.items[0].goal = Formula::atom("lt", {Term("z"), Term("b")});
    CHECK(has_diagnostic(validate_library(lib), "first_th",
                         "undeclared symbol: z"));
  }
  SUBCASE("undeclared import") {
    lib.items[0].imports.insert("ghost");
    CHECK(has_diagnostic(validate_library(lib), "first_th",
                         "undeclared import: ghost"));
  }
  SUBCASE("relation symbol used as a function") {
    lib.items[0].goal =
        Formula::equality(Term("lt", {Term("a"), Term("b")}), Term("a"));
    CHECK(has_diagnostic(validate_library(lib), "first_th",
                         "relation used as function: lt"));
  }
  SUBCASE("arity mismatch") {
    lib.items[0].goal = Formula::atom("lt", {Term("a")});
    CHECK(has_diagnostic(validate_library(lib), "first_th",
                         "arity mismatch for lt"));
  }
  SUBCASE("self-reference") {
    lib.items[0].uses.insert("first_th");
    CHECK(has_diagnostic(validate_library(lib), "first_th",
                         "self-reference in uses"));
  }
  SUBCASE("unknown uses target") {
    lib.items[0].uses.insert("phantom_th");
    CHECK(has_diagnostic(validate_library(lib), "first_th",
                         "unknown item in uses: phantom_th"));
  }
  SUBCASE("reference cycle names its members") {
    lib.items[0].uses = {"second_th"};  // second_th already uses first_th
    auto diags = validate_library(lib);
    CHECK(has_diagnostic(diags, "first_th", "cycle: first_th,second_th"));
  }
}
