#pragma once

#include <map>
#include <string>

#include "propuse/corpus.hpp"
#include "propuse/verifier.hpp"

namespace propuse {

// Which attachments an item needs. Direct mode: detaching the pair makes the
// item itself fail. Indirect mode: the union of direct needs over everything
// the item transitively uses, itself included.
struct NeedSet {
  enum class Mode { Direct, Indirect };

  std::string item;
  std::set<Attachment> pairs;
  Mode mode = Mode::Direct;

  // e.g. "proper_prefix_th direct (pp irreflexivity)"
  std::string str() const;

  bool operator==(const NeedSet& other) const = default;
};

// Detach-and-recheck elicitation: one baseline check under the item's full
// importable environment, then one check per applicable attachment with just
// that attachment removed. Exactly 1 + |applicable| verifier calls.
// Throws BaselineFailed when the item does not verify to begin with.
NeedSet direct_needs(const Item& item, const Library& lib,
                     const Verifier& verifier);

// Greedy single-pass minimization in attachment order (constructor id, then
// property name): drop each attachment iff the item still verifies without
// it. The result verifies and admits no further single detachment. Note the
// result's complement is not necessarily the direct need set: two
// attachments can be jointly needed yet individually removable.
Environment minimize_attachments(const Item& item, const Library& lib,
                                 const Verifier& verifier);

// Direct needs for every item of the library, keyed by item id. `jobs`
// worker threads share the verifier; results (and the first error, if any)
// are merged in library item order, so output is independent of scheduling.
std::map<std::string, NeedSet> direct_needs_all(const Library& lib,
                                                const Verifier& verifier,
                                                std::size_t jobs = 1);

}  // namespace propuse
