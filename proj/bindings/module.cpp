#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "propuse/depgraph.hpp"
#include "propuse/frontend.hpp"
#include "propuse/report.hpp"

namespace py = pybind11;
using namespace propuse;

namespace {

using PairList = std::vector<std::pair<std::string, std::string>>;

PairList to_pairs(const std::set<Attachment>& atts) {
  PairList out;
  for (const Attachment& att : atts) {
    out.emplace_back(att.constructor, std::string(property_name(att.property)));
  }
  return out;
}

std::map<std::string, PairList> needs_to_dict(
    const std::map<std::string, NeedSet>& needs) {
  std::map<std::string, PairList> out;
  for (const auto& [id, ns] : needs) out[id] = to_pairs(ns.pairs);
  return out;
}

const Item& item_or_throw(const Library& lib, const std::string& id) {
  const Item* item = lib.find_item(id);
  if (item == nullptr) throw UnknownItem("unknown item: " + id);
  return *item;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "property-detachment elicitation over ground proof corpora";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationFailed>(m, "ValidationFailed",
                                           PyExc_ValueError);
  py::register_exception<BaselineFailed>(m, "BaselineFailed",
                                         PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                         PyExc_RuntimeError);
  py::register_exception<UnknownItem>(m, "UnknownItem", PyExc_KeyError);

  py::class_<Library>(m, "Library")
      .def_property_readonly("items",
                             [](const Library& lib) {
                               std::vector<std::string> ids;
                               for (const Item& item : lib.items)
                                 ids.push_back(item.id);
                               return ids;
                             })
      .def_property_readonly("constants",
                             [](const Library& lib) { return lib.constants; })
      .def_property_readonly(
          "attachments",
          [](const Library& lib) {
            return to_pairs(lib.environment.attachments());
          })
      .def("__repr__", [](const Library& lib) {
        return "<Library with " + std::to_string(lib.items.size()) +
               " items>";
      });

  m.def("load_library", &load_library, py::arg("path"),
        "Read and validate a corpus file.");
  m.def(
      "parse_library",
      [](const std::string& text) { return parse_library(text); },
      py::arg("text"), "Parse and validate corpus text.");
  m.def("serialize_library", &serialize_library, py::arg("library"),
        "Canonical corpus text for a library.");

  m.def(
      "check",
      [](const Library& lib, const std::optional<std::string>& item) {
        Verifier verifier;
        std::vector<std::tuple<std::string, bool, std::optional<std::string>>>
            results;
        auto one = [&](const Item& it) {
          Verdict v = verifier.check(it, lib);
          std::optional<std::string> witness;
          if (!v.verified) witness = v.witness->str();
          results.emplace_back(it.id, v.verified, std::move(witness));
        };
        if (item) {
          one(item_or_throw(lib, *item));
        } else {
          for (const Item& it : lib.items) one(it);
        }
        return results;
      },
      py::arg("library"), py::arg("item") = std::nullopt,
      "Verify items; yields (id, verified, countermodel-or-None) tuples.");

  m.def(
      "elicit",
      [](const Library& lib, const std::optional<std::string>& item,
         std::size_t jobs) {
        Verifier verifier;
        if (item) {
          NeedSet needs =
              direct_needs(item_or_throw(lib, *item), lib, verifier);
          return std::map<std::string, PairList>{
              {needs.item, to_pairs(needs.pairs)}};
        }
        return needs_to_dict(direct_needs_all(lib, verifier, jobs));
      },
      py::arg("library"), py::arg("item") = std::nullopt, py::arg("jobs") = 1,
      "Directly needed (constructor, property) pairs per item.");

  m.def(
      "minimize",
      [](const Library& lib, const std::string& item) {
        Verifier verifier;
        return to_pairs(
            minimize_attachments(item_or_throw(lib, item), lib, verifier)
                .attachments());
      },
      py::arg("library"), py::arg("item"),
      "Locally minimal attachment environment still verifying the item.");

  m.def(
      "closure",
      [](const Library& lib, std::size_t jobs) {
        Verifier verifier;
        auto direct = direct_needs_all(lib, verifier, jobs);
        return needs_to_dict(indirect_needs_all(build_graph(lib), direct));
      },
      py::arg("library"), py::arg("jobs") = 1,
      "Needed pairs per item, unioned over transitive uses.");

  m.def(
      "report",
      [](const Library& lib, const std::string& corpus_id,
         const std::string& format, std::size_t jobs) {
        Verifier verifier;
        auto direct = direct_needs_all(lib, verifier, jobs);
        auto indirect = indirect_needs_all(build_graph(lib), direct);
        UsageReport table =
            property_usage_table(lib, direct, indirect, corpus_id);
        if (format == "tsv") return emit_tsv(table);
        if (format == "json") return emit_json(table);
        throw py::value_error("format must be 'tsv' or 'json'");
      },
      py::arg("library"), py::arg("corpus_id"), py::arg("format") = "tsv",
      py::arg("jobs") = 1, "Usage table as a tsv or json string.");

  m.attr("__version__") = kToolVersion;
}
