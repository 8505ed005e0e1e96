#include "fockcb/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "fockcb/render.hpp"

namespace fockcb {

namespace {

const std::vector<Method> kClosedFormulas = {
    Method::lm2, Method::asymptotic, Method::ordered, Method::spine, Method::good_monomial_l3};

bool method_applicable(Method m, const Symbol& s) {
  switch (m) {
    case Method::lm2:
      return s.level() == 2;
    case Method::asymptotic: {
      auto split = asymptotic_split(s, s.size());
      return split && split->size() >= 2;
    }
    case Method::ordered:
      return is_ordered(s);
    case Method::spine:
      return heart_check(s);
    case Method::good_monomial_l3:
      return s.level() == 3;
    default:
      return false;
  }
}

struct BlockTask {
  BlockKey key;
  std::vector<Symbol> standard_members;
};

struct BlockOutcome {
  std::string line;
  long standard_symbols = 0;
  long checks = 0;
  long mismatches = 0;
  std::map<Method, MethodStats> per_method;
  double elapsed_ms = 0.0;
};

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  const auto t_start = std::chrono::steady_clock::now();
  std::vector<Method> methods = options.methods.empty() ? kClosedFormulas : options.methods;

  CanonicalContext context(CanonicalContext::Options{options.cache_dir});

  std::vector<BlockTask> tasks;
  for (int n = 0; n <= options.max_size; ++n) {
    auto grouped = group_by_block(enumerate_standard_symbols(options.v, n));
    for (auto& [key, members] : grouped)
      tasks.push_back(BlockTask{key, std::move(members)});
  }

  std::vector<BlockOutcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      const BlockTask& task = tasks[idx];
      BlockOutcome& outcome = outcomes[idx];
      const auto t0 = std::chrono::steady_clock::now();
      std::ostringstream line;
      line << "size=" << task.key.size << " block=" << task.key.entry_signature()
           << " standard=" << task.standard_members.size();
      outcome.standard_symbols = static_cast<long>(task.standard_members.size());
      std::ostringstream bad;
      for (const Symbol& s : task.standard_members) {
        const CanonicalExpansion reference = context.canonical_oracle(s);
        for (Method m : methods) {
          if (!method_applicable(m, s)) continue;
          CanonicalExpansion candidate = context.canonical(s, m);
          ++outcome.checks;
          ++outcome.per_method[m].checked;
          if (candidate.vector != reference.vector) {
            ++outcome.mismatches;
            ++outcome.per_method[m].mismatched;
            bad << "  MISMATCH method=" << method_name(m) << " source="
                << render_symbol_inline(s) << "\n";
          }
        }
      }
      line << " checks=" << outcome.checks;
      for (Method m : methods) {
        auto it = outcome.per_method.find(m);
        if (it == outcome.per_method.end() || it->second.checked == 0) continue;
        line << " " << method_name(m) << "=" << it->second.checked;
      }
      line << (outcome.mismatches == 0 ? " ok" : " MISMATCH") << "\n" << bad.str();
      outcome.line = line.str();
      outcome.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerifyReport report;
  std::ostringstream text;
  text << "verify multicharge=(";
  for (int i = 1; i <= options.v.level(); ++i)
    text << (i > 1 ? "," : "") << options.v.charge(i);
  text << ") max_size=" << options.max_size << " methods=";
  for (std::size_t k = 0; k < methods.size(); ++k)
    text << (k > 0 ? "," : "") << method_name(methods[k]);
  text << "\n";

  for (const auto& outcome : outcomes) {
    text << outcome.line;
    report.standard_symbols += outcome.standard_symbols;
    report.checks += outcome.checks;
    report.mismatches += outcome.mismatches;
    for (const auto& [m, stats] : outcome.per_method) {
      report.per_method[m].checked += stats.checked;
      report.per_method[m].mismatched += stats.mismatched;
    }
  }
  report.blocks = static_cast<long>(tasks.size());
  report.ok = report.mismatches == 0;

  text << "total blocks=" << report.blocks << " standard=" << report.standard_symbols
       << " checks=" << report.checks << " mismatches=" << report.mismatches << "\n";
  for (const auto& [m, stats] : report.per_method)
    text << "method " << method_name(m) << ": checked=" << stats.checked
         << " mismatched=" << stats.mismatched << "\n";
  text << "result: " << (report.ok ? "OK" : "MISMATCH") << "\n";

  const double total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start).count();
  for (std::size_t idx = 0; idx < outcomes.size(); ++idx)
    text << "# block " << idx << " ms=" << outcomes[idx].elapsed_ms << "\n";
  text << "# total ms=" << total_ms << "\n";

  report.text = text.str();
  return report;
}

}  // namespace fockcb
