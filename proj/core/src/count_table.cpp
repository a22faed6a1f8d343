#include "gapset/count_table.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "gapset/version.hpp"

namespace gapset {

using nlohmann::ordered_json;

CountTable::CountTable() {
  meta.strategy = std::string(kCountStrategy);
  meta.code_hash = kCodeHash;
}

std::optional<Int> CountTable::n_prime(Int g, Int l) const {
  const auto it = n_prime_.find({g, l});
  if (it == n_prime_.end()) return std::nullopt;
  return it->second;
}

std::optional<Int> CountTable::n_full(Int g) const {
  const auto it = n_full_.find(g);
  if (it == n_full_.end()) return std::nullopt;
  return it->second;
}

void CountTable::set_n_prime(Int g, Int l, Int count) {
  n_prime_[{g, l}] = count;
  meta.g_max = std::max(meta.g_max, g);
  meta.l_max = std::max(meta.l_max, l);
}

void CountTable::set_n_full(Int g, Int count) {
  n_full_[g] = count;
  meta.g_max = std::max(meta.g_max, g);
}

std::string CountTable::to_json() const {
  ordered_json doc;
  doc["meta"] = {{"version", std::string(kVersion)},
                 {"strategy", meta.strategy},
                 {"code_hash", meta.code_hash},
                 {"g_max", meta.g_max},
                 {"l_max", meta.l_max}};
  ordered_json prime = ordered_json::array();
  for (const auto& [cell, count] : n_prime_) {
    prime.push_back({cell.first, cell.second, count});
  }
  ordered_json full = ordered_json::array();
  for (const auto& [g, count] : n_full_) {
    full.push_back({g, count});
  }
  doc["n_prime"] = std::move(prime);
  doc["n_full"] = std::move(full);
  return doc.dump();
}

CountTable CountTable::from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad count table document: ") + e.what());
  }
  CountTable table;
  try {
    const auto& meta = doc.at("meta");
    table.meta.strategy = meta.at("strategy").get<std::string>();
    table.meta.code_hash = meta.at("code_hash").get<std::uint64_t>();
    table.meta.g_max = meta.at("g_max").get<Int>();
    table.meta.l_max = meta.at("l_max").get<Int>();
    for (const auto& cell : doc.at("n_prime")) {
      table.n_prime_[{cell.at(0).get<Int>(), cell.at(1).get<Int>()}] =
          cell.at(2).get<Int>();
    }
    for (const auto& cell : doc.at("n_full")) {
      table.n_full_[cell.at(0).get<Int>()] = cell.at(1).get<Int>();
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad count table document: ") + e.what());
  }
  return table;
}

std::optional<CountTable> CountTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CountTable table;
  try {
    table = from_json(buffer.str());
  } catch (const ParseError&) {
    return std::nullopt;
  }
  if (table.meta.code_hash != kCodeHash ||
      table.meta.strategy != std::string(kCountStrategy)) {
    return std::nullopt;  // stale cache
  }
  return table;
}

void CountTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write count table: " + path);
  out << to_json() << '\n';
}

void extend_table(CountTable& table, Int g_max, Int l_max,
                  const BuildOptions& options) {
  if (g_max < 1 || l_max < 1) throw DomainError("table bounds must be positive");

  std::vector<Int> missing_levels;
  for (Int l = 1; l <= l_max; ++l) {
    for (Int g = 1; g <= g_max; ++g) {
      if (!table.n_prime(g, l)) {
        missing_levels.push_back(l);
        break;
      }
    }
  }
  if (missing_levels.empty()) return;

  std::vector<GammaPrimeColumn> columns;
  columns.reserve(missing_levels.size());
  for (Int l : missing_levels) columns.emplace_back(g_max, l);

  const int jobs = std::max(options.jobs, 1);
  if (jobs == 1 || missing_levels.size() == 1) {
    for (std::size_t i = 0; i < missing_levels.size(); ++i) {
      columns[i] = count_gamma_prime_column(g_max, missing_levels[i], options.budget);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&]() {
      try {
        for (;;) {
          const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= missing_levels.size()) return;
          columns[i] =
              count_gamma_prime_column(g_max, missing_levels[i], options.budget);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    };
    std::vector<std::thread> threads;
    const std::size_t spawn =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), missing_levels.size());
    threads.reserve(spawn);
    for (std::size_t j = 0; j < spawn; ++j) threads.emplace_back(work);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (std::size_t i = 0; i < missing_levels.size(); ++i) {
    const Int l = missing_levels[i];
    for (Int g = 1; g <= g_max; ++g) {
      if (!table.n_prime(g, l)) table.set_n_prime(g, l, columns[i].count(g));
    }
  }
}

CountTable build_table(Int g_max, Int l_max, const BuildOptions& options) {
  CountTable table;
  extend_table(table, g_max, l_max, options);
  return table;
}

}  // namespace gapset
