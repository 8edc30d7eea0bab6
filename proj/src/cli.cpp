#include "propuse/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <thread>

#include <CLI11.hpp>

#include "propuse/depgraph.hpp"
#include "propuse/elicitor.hpp"
#include "propuse/frontend.hpp"
#include "propuse/report.hpp"
#include "propuse/verifier.hpp"

namespace propuse {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

// Apply fn to indices 0..n-1 on `jobs` threads; exceptions surface in index
// order so a parallel run fails identically to a sequential one.
void for_each_index(std::size_t n, std::size_t jobs,
                    const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1 || n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(jobs, n); ++t) {
      pool.emplace_back(worker);
    }
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<const Item*> select_items(const Library& lib,
                                      const std::string& item_id) {
  if (!item_id.empty()) {
    const Item* item = lib.find_item(item_id);
    if (item == nullptr) throw UnknownItem("unknown item: " + item_id);
    return {item};
  }
  std::vector<const Item*> items;
  items.reserve(lib.items.size());
  for (const Item& item : lib.items) items.push_back(&item);
  return items;
}

struct Options {
  std::string corpus;
  std::string item;
  std::size_t budget = VerifierOptions{}.instance_budget;
  std::size_t oracle_bound = VerifierOptions{}.oracle_bound;
  std::size_t jobs = 1;
  bool minimize = false;
  std::string format = "tsv";
};

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  Library lib = load_library(opt.corpus);
  Verifier verifier({opt.budget, opt.oracle_bound});
  std::vector<const Item*> items = select_items(lib, opt.item);
  std::vector<Verdict> verdicts(items.size());
  for_each_index(items.size(), opt.jobs, [&](std::size_t i) {
    verdicts[i] = verifier.check(*items[i], lib);
  });
  bool any_failed = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    out << items[i]->id << (verdicts[i].verified ? " verified" : " failed")
        << "\n";
    if (!verdicts[i].verified) {
      any_failed = true;
      err << items[i]->id << ": " << verdicts[i].witness->str() << "\n";
    }
  }
  return any_failed ? kExitVerificationFailed : kExitOk;
}

int cmd_elicit(const Options& opt, std::ostream& out) {
  Library lib = load_library(opt.corpus);
  Verifier verifier({opt.budget, opt.oracle_bound});
  std::vector<const Item*> items = select_items(lib, opt.item);
  std::vector<NeedSet> needs(items.size());
  std::vector<Environment> minimal(items.size());
  for_each_index(items.size(), opt.jobs, [&](std::size_t i) {
    needs[i] = direct_needs(*items[i], lib, verifier);
    if (opt.minimize) {
      minimal[i] = minimize_attachments(*items[i], lib, verifier);
    }
  });
  for (std::size_t i = 0; i < items.size(); ++i) {
    out << needs[i].str() << "\n";
    if (opt.minimize) {
      out << items[i]->id << " minimal";
      for (const Attachment& att : minimal[i].attachments()) {
        out << ' ' << att.str();
      }
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_closure(const Options& opt, std::ostream& out) {
  Library lib = load_library(opt.corpus);
  Verifier verifier({opt.budget, opt.oracle_bound});
  auto direct = direct_needs_all(lib, verifier, opt.jobs);
  auto indirect = indirect_needs_all(build_graph(lib), direct);
  for (const Item& item : lib.items) {
    out << indirect.at(item.id).str() << "\n";
  }
  return kExitOk;
}

int cmd_report(const Options& opt, std::ostream& out) {
  Library lib = load_library(opt.corpus);
  Verifier verifier({opt.budget, opt.oracle_bound});
  auto direct = direct_needs_all(lib, verifier, opt.jobs);
  auto indirect = indirect_needs_all(build_graph(lib), direct);
  UsageReport report = property_usage_table(
      lib, direct, indirect,
      std::filesystem::path(opt.corpus).stem().string());
  out << (opt.format == "json" ? emit_json(report) : emit_tsv(report));
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"elicit which constructor properties a proof corpus needs"};
  app.name("propuse");
  app.require_subcommand(1);
  Options opt;
  app.add_option("--budget", opt.budget,
                 "axiom instantiation budget per check")
      ->capture_default_str();
  app.add_option("--oracle-bound", opt.oracle_bound,
                 "atom limit for the exhaustive cross-check verdict")
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "worker threads for per-item runs")
      ->capture_default_str();

  auto add_corpus = [&opt](CLI::App* sub) {
    sub->add_option("--corpus", opt.corpus, "corpus file to load")
        ->required();
    sub->fallthrough();
  };
  CLI::App* check = app.add_subcommand("check", "verify items");
  add_corpus(check);
  check->add_option("--item", opt.item, "verify a single item");
  CLI::App* elicit =
      app.add_subcommand("elicit", "report directly needed attachments");
  add_corpus(elicit);
  elicit->add_option("--item", opt.item, "elicit a single item");
  elicit->add_flag("--minimize", opt.minimize,
                   "also print a locally minimal attachment set");
  CLI::App* closure = app.add_subcommand(
      "closure", "report indirectly needed attachments for every item");
  add_corpus(closure);
  CLI::App* report =
      app.add_subcommand("report", "per-property usage counts");
  add_corpus(report);
  report->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitBadInput;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out, err);
    if (elicit->parsed()) return cmd_elicit(opt, out);
    if (closure->parsed()) return cmd_closure(opt, out);
    return cmd_report(opt, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const OracleBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const BaselineFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const ParseError& e) {
    err << opt.corpus << ":" << e.line << ":" << e.column << ": "
        << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace propuse
