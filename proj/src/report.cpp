#include "propuse/report.hpp"

#include <json.hpp>

namespace propuse {

namespace {

std::size_t items_needing(const std::map<std::string, NeedSet>& needs,
                          const Attachment& att) {
  std::size_t count = 0;
  for (const auto& [item, ns] : needs) {
    count += ns.pairs.count(att);
  }
  return count;
}

std::size_t items_needing(const std::map<std::string, NeedSet>& needs,
                          PropertyKind property) {
  std::size_t count = 0;
  for (const auto& [item, ns] : needs) {
    for (const Attachment& att : ns.pairs) {
      if (att.property == property) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace

UsageReport property_usage_table(const Library& lib,
                                 const std::map<std::string, NeedSet>& direct,
                                 const std::map<std::string, NeedSet>& indirect,
                                 std::string corpus_id) {
  UsageReport report;
  report.corpus = std::move(corpus_id);
  for (PropertyKind kind : kAllProperties) {
    report.properties.push_back({kind, items_needing(direct, kind),
                                 items_needing(indirect, kind)});
  }
  for (const Attachment& att : lib.environment.attachments()) {
    report.pairs.push_back({att.constructor, att.property,
                            items_needing(direct, att),
                            items_needing(indirect, att)});
  }
  return report;
}

std::string emit_tsv(const UsageReport& report) {
  std::string out = "property\tdirect\tindirect\n";
  for (const PropertyUsageRow& row : report.properties) {
    out += property_name(row.property);
    out += '\t';
    out += std::to_string(row.direct_items);
    out += '\t';
    out += std::to_string(row.indirect_items);
    out += '\n';
  }
  return out;
}

std::string emit_json(const UsageReport& report) {
  nlohmann::ordered_json doc;
  doc["corpus"] = report.corpus;
  doc["version"] = report.version;
  doc["properties"] = nlohmann::ordered_json::array();
  for (const PropertyUsageRow& row : report.properties) {
    doc["properties"].push_back({{"property", property_name(row.property)},
                                 {"direct", row.direct_items},
                                 {"indirect", row.indirect_items}});
  }
  doc["pairs"] = nlohmann::ordered_json::array();
  for (const PairUsageRow& row : report.pairs) {
    doc["pairs"].push_back({{"constructor", row.constructor},
                            {"property", property_name(row.property)},
                            {"direct", row.direct_items},
                            {"indirect", row.indirect_items}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace propuse
