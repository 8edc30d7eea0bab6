#include "propuse/elicitor.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace propuse {

std::string NeedSet::str() const {
  std::string out = item;
  out += mode == Mode::Direct ? " direct" : " indirect";
  for (const Attachment& att : pairs) {
    out += ' ';
    out += att.str();
  }
  return out;
}

NeedSet direct_needs(const Item& item, const Library& lib,
                     const Verifier& verifier) {
  if (!verifier.check(item, lib).verified) {
    throw BaselineFailed("item " + item.id +
                         " does not verify under its full environment");
  }
  Environment applicable = lib.environment.restricted_to(item.imports);
  NeedSet needs{item.id, {}, NeedSet::Mode::Direct};
  for (const Attachment& att : applicable.attachments()) {
    if (!verifier.check(item, lib, applicable.detached(att)).verified) {
      needs.pairs.insert(att);
    }
  }
  return needs;
}

Environment minimize_attachments(const Item& item, const Library& lib,
                                 const Verifier& verifier) {
  Environment current = lib.environment.restricted_to(item.imports);
  if (!verifier.check(item, lib).verified) {
    throw BaselineFailed("item " + item.id +
                         " does not verify under its full environment");
  }
  const std::vector<Attachment> order(current.attachments().begin(),
                                      current.attachments().end());
  for (const Attachment& att : order) {
    Environment candidate = current.detached(att);
    if (verifier.check(item, lib, candidate).verified) {
      current = std::move(candidate);
    }
  }
  return current;
}

std::map<std::string, NeedSet> direct_needs_all(const Library& lib,
                                                const Verifier& verifier,
                                                std::size_t jobs) {
  const std::size_t n = lib.items.size();
  std::vector<NeedSet> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      try {
        results[i] = direct_needs(lib.items[i], lib, verifier);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1 || n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::min(jobs, n));
    for (std::size_t t = 0; t < std::min(jobs, n); ++t) {
      pool.emplace_back(worker);
    }
    for (std::thread& t : pool) t.join();
  }
  // first failure in item order, so behavior matches a sequential run
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::map<std::string, NeedSet> out;
  for (NeedSet& ns : results) {
    std::string key = ns.item;
    out.emplace(std::move(key), std::move(ns));
  }
  return out;
}

}  // namespace propuse
