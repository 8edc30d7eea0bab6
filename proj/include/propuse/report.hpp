#pragma once

#include <map>
#include <string>
#include <vector>

#include "propuse/corpus.hpp"
#include "propuse/elicitor.hpp"

namespace propuse {

inline constexpr const char* kToolVersion = "0.1.0";

struct PropertyUsageRow {
  PropertyKind property;
  std::size_t direct_items = 0;    // items directly needing the property
  std::size_t indirect_items = 0;  // items needing it directly or transitively

  bool operator==(const PropertyUsageRow&) const = default;
};

struct PairUsageRow {
  std::string constructor;
  PropertyKind property;
  std::size_t direct_items = 0;
  std::size_t indirect_items = 0;

  bool operator==(const PairUsageRow&) const = default;
};

// Per-property and per-attachment usage counts over a whole corpus. Counts
// are numbers of distinct items; every item of the library is counted,
// definitional or not. direct <= indirect holds in every row.
struct UsageReport {
  std::string corpus;
  std::string version = kToolVersion;
  std::vector<PropertyUsageRow> properties;  // all nine, fixed table order
  std::vector<PairUsageRow> pairs;           // library attachments, sorted

  bool operator==(const UsageReport&) const = default;
};

UsageReport property_usage_table(const Library& lib,
                                 const std::map<std::string, NeedSet>& direct,
                                 const std::map<std::string, NeedSet>& indirect,
                                 std::string corpus_id);

// Header `property<TAB>direct<TAB>indirect`, then the nine property rows in
// fixed order, one line each, trailing newline.
std::string emit_tsv(const UsageReport& report);

// Stable-key JSON object: corpus, version, properties, pairs.
std::string emit_json(const UsageReport& report);

}  // namespace propuse
