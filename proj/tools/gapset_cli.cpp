// Command-line front end: inspect gapsets, count families, emit count
// tables, verify the sandwich bounds over a range, and audit the
// coordinate maps at a single cell.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 budget exceeded.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "gapset/bounds.hpp"
#include "gapset/count_table.hpp"
#include "gapset/enumerate.hpp"
#include "gapset/format.hpp"
#include "gapset/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr gapset::Int kMaxGenus = 10000;
constexpr gapset::Int kMaxLevel = 10000;
// Full counts stay inside 64 bits up to here; level-bounded counts are
// dominated by them.
constexpr gapset::Int kMaxFullCountGenus = 80;

struct Cache {
  std::string path;  // empty = caching disabled
  gapset::CountTable table;

  void open(const std::string& flag_path) {
    const char* env = std::getenv("GAPSET_CACHE");
    path = (env != nullptr && *env != '\0') ? std::string(env) : flag_path;
    if (path.empty()) return;
    if (auto loaded = gapset::CountTable::load(path)) table = std::move(*loaded);
  }
  void save() {
    if (!path.empty()) table.save(path);
  }
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw gapset::Error("cannot write output file: " + out_path);
  out << text;
}

int run_inspect(const std::string& spec) {
  gapset::Gapset g;
  if (spec.rfind("gaps:", 0) == 0) {
    g = gapset::Gapset::parse(spec.substr(5));
  } else if (spec.rfind("kunz:", 0) == 0) {
    g = gapset::gapset_from_kunz(gapset::KunzTuple::parse(spec.substr(5)));
  } else {
    throw gapset::ParseError("spec must start with \"gaps:\" or \"kunz:\"");
  }
  std::cout << gapset::render_inspection(g);
  return kExitOk;
}

int run_count(gapset::Int genus, gapset::Int level, int jobs,
              gapset::Budget* budget, Cache& cache) {
  gapset::Int result = 0;
  if (level < 0) {
    if (genus > kMaxFullCountGenus) {
      throw gapset::DomainError("full counts are limited to genus <= " +
                                std::to_string(kMaxFullCountGenus));
    }
    if (auto hit = cache.table.n_full(genus)) {
      result = *hit;
    } else {
      result = gapset::count_n(genus, jobs, budget);
      cache.table.set_n_full(genus, result);
    }
  } else {
    if (auto hit = cache.table.n_prime(genus, level)) {
      result = *hit;
    } else {
      result = gapset::count_n_prime(genus, level, budget);
      cache.table.set_n_prime(genus, level, result);
    }
  }
  std::cout << result << '\n';
  cache.save();
  return kExitOk;
}

int run_table(gapset::Int g_max, gapset::Int l_max, const std::string& format_name,
              const std::string& out_path, int jobs, gapset::Budget* budget,
              Cache& cache) {
  const auto format = gapset::table_format_from_string(format_name);
  if (!format) {
    throw gapset::ParseError("format must be one of csv, json, md");
  }
  gapset::extend_table(cache.table, g_max, l_max, {jobs, budget});
  write_output(gapset::render_table(cache.table, g_max, l_max, *format), out_path);
  cache.save();
  return kExitOk;
}

int run_verify(gapset::Int g_max, gapset::Int l_max, int jobs,
               gapset::Budget* budget, Cache& cache) {
  using gapset::GammaPrimeColumn;
  using gapset::Int;

  // One column walk per level supplies every n'_{g,l} and the slice
  // counts the per-cell checks need.
  std::vector<GammaPrimeColumn> columns;
  columns.reserve(static_cast<std::size_t>(l_max));
  for (Int l = 1; l <= l_max; ++l) columns.emplace_back(0, l);
  {
    std::atomic<Int> next{1};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&]() {
      try {
        for (;;) {
          const Int l = next.fetch_add(1, std::memory_order_relaxed);
          if (l > l_max) return;
          columns[static_cast<std::size_t>(l - 1)] =
              gapset::count_gamma_prime_column(g_max, l, budget);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    };
    std::vector<std::thread> threads;
    const int spawn = std::min<int>(jobs, static_cast<int>(l_max));
    threads.reserve(static_cast<std::size_t>(spawn));
    for (int j = 0; j < spawn; ++j) threads.emplace_back(work);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  const std::size_t cell_count = static_cast<std::size_t>(g_max * l_max);
  std::vector<std::string> lines(cell_count);
  std::vector<char> passed(cell_count, 0);
  {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&]() {
      try {
        for (;;) {
          const std::size_t idx = next.fetch_add(1, std::memory_order_relaxed);
          if (idx >= cell_count) return;
          const Int g = static_cast<Int>(idx) / l_max + 1;
          const Int l = static_cast<Int>(idx) % l_max + 1;
          gapset::VerifyOptions options;
          options.budget = budget;
          options.column = &columns[static_cast<std::size_t>(l - 1)];
          const auto report = gapset::verify_counting_bounds(g, l, options);
          lines[idx] = report.to_json();
          passed[idx] = report.passed() ? 1 : 0;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (const std::string& line : lines) std::cout << line << '\n';

  for (Int l = 1; l <= l_max; ++l) {
    for (Int g = 1; g <= g_max; ++g) {
      if (!cache.table.n_prime(g, l)) {
        cache.table.set_n_prime(g, l,
                                columns[static_cast<std::size_t>(l - 1)].count(g));
      }
    }
  }
  cache.save();

  for (std::size_t idx = 0; idx < cell_count; ++idx) {
    if (!passed[idx]) {
      const Int g = static_cast<Int>(idx) / l_max + 1;
      const Int l = static_cast<Int>(idx) % l_max + 1;
      std::cerr << "verification failed at cell g=" << g << " l=" << l << '\n';
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

int run_maps(gapset::Int genus, gapset::Int level, gapset::Budget* budget) {
  std::cout << gapset::render_maps_listing(genus, level, budget);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gapsets, Kunz coordinates and the counting families n'_{g,l}"};
  app.require_subcommand(1);

  std::string cache_path;
  gapset::Int budget_limit = 0;
  app.add_option("--cache", cache_path,
                 "count cache file (the GAPSET_CACHE env var overrides this)");
  app.add_option("--budget", budget_limit,
                 "node-expansion budget, 0 = unlimited")
      ->check(CLI::Range(gapset::Int{0}, gapset::Int{1} << 62));

  auto* inspect = app.add_subcommand(
      "inspect", "print every invariant of one gapset (\"gaps:...\" or \"kunz:(...)\")");
  std::string spec;
  inspect->add_option("spec", spec, "gapset specification")->required();

  auto* count = app.add_subcommand("count", "count gapsets of one genus");
  gapset::Int count_genus = 0;
  gapset::Int count_level = -1;
  int count_jobs = 1;
  count->add_option("--genus", count_genus, "genus")
      ->required()
      ->check(CLI::Range(gapset::Int{0}, kMaxGenus));
  count->add_option("--level", count_level,
                    "restrict to Kunz coordinates in [L, 2L+1]")
      ->check(CLI::Range(gapset::Int{1}, kMaxLevel));
  count->add_option("--jobs", count_jobs, "worker threads")
      ->check(CLI::Range(1, 256));

  auto* table = app.add_subcommand("table", "emit the n'_{g,l} grid");
  gapset::Int table_g_max = 0;
  gapset::Int table_l_max = 0;
  std::string table_format = "csv";
  std::string table_out;
  int table_jobs = 1;
  table->add_option("--max-genus", table_g_max, "largest genus")
      ->required()
      ->check(CLI::Range(gapset::Int{1}, kMaxGenus));
  table->add_option("--max-level", table_l_max, "largest level")
      ->required()
      ->check(CLI::Range(gapset::Int{1}, kMaxLevel));
  table->add_option("--format", table_format, "csv, json or md");
  table->add_option("--out", table_out, "output file (default stdout)");
  table->add_option("--jobs", table_jobs, "worker threads")
      ->check(CLI::Range(1, 256));

  auto* verify = app.add_subcommand(
      "verify", "check the sandwich bounds and map properties on a range");
  gapset::Int verify_g_max = 0;
  gapset::Int verify_l_max = 0;
  int verify_jobs = 1;
  verify->add_option("--max-genus", verify_g_max, "largest genus")
      ->required()
      ->check(CLI::Range(gapset::Int{1}, kMaxGenus));
  verify->add_option("--max-level", verify_l_max, "largest level")
      ->required()
      ->check(CLI::Range(gapset::Int{1}, kMaxLevel));
  verify->add_option("--jobs", verify_jobs, "worker threads")
      ->check(CLI::Range(1, 256));

  auto* maps = app.add_subcommand(
      "maps", "list the append/drop images at one (genus, level) cell");
  gapset::Int maps_genus = 0;
  gapset::Int maps_level = 0;
  maps->add_option("--genus", maps_genus, "genus")
      ->required()
      ->check(CLI::Range(gapset::Int{1}, kMaxGenus));
  maps->add_option("--level", maps_level, "level")
      ->required()
      ->check(CLI::Range(gapset::Int{1}, kMaxLevel));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  gapset::Budget budget(budget_limit);
  Cache cache;

  try {
    cache.open(cache_path);
    if (app.got_subcommand(inspect)) return run_inspect(spec);
    if (app.got_subcommand(count)) {
      return run_count(count_genus, count_level, count_jobs, &budget, cache);
    }
    if (app.got_subcommand(table)) {
      return run_table(table_g_max, table_l_max, table_format, table_out,
                       table_jobs, &budget, cache);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(verify_g_max, verify_l_max, verify_jobs, &budget, cache);
    }
    if (app.got_subcommand(maps)) return run_maps(maps_genus, maps_level, &budget);
  } catch (const gapset::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const gapset::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
