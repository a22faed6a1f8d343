#pragma once
//
// Persisted count table: the grid n'_{g,l} plus full per-genus counts n_g,
// stored as one JSON document and invalidated when the code hash changes.
//

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gapset/enumerate.hpp"

namespace gapset {

struct CountTableMeta {
  Int g_max = 0;
  Int l_max = 0;
  std::string strategy;
  std::uint64_t code_hash = 0;  // defaults filled by CountTable()
};

class CountTable {
 public:
  CountTable();

  std::optional<Int> n_prime(Int g, Int l) const;
  std::optional<Int> n_full(Int g) const;
  void set_n_prime(Int g, Int l, Int count);
  void set_n_full(Int g, Int count);

  const std::map<std::pair<Int, Int>, Int>& n_prime_cells() const {
    return n_prime_;
  }
  const std::map<Int, Int>& n_full_cells() const { return n_full_; }

  CountTableMeta meta;

  // Document shape: {"meta": {...}, "n_prime": [[g,l,count], ...],
  // "n_full": [[g,count], ...]}, both arrays sorted.
  std::string to_json() const;
  static CountTable from_json(const std::string& text);  // throws ParseError

  // nullopt when the file is missing, unreadable, or stamped with a
  // different code hash / strategy.
  static std::optional<CountTable> load(const std::string& path);
  void save(const std::string& path) const;

 private:
  std::map<std::pair<Int, Int>, Int> n_prime_;
  std::map<Int, Int> n_full_;
};

struct BuildOptions {
  int jobs = 1;
  Budget* budget = nullptr;
};

// Fills every missing cell of [1, g_max] x [1, l_max]; existing cells are
// kept. Column counting runs once per level and is fanned out over jobs.
void extend_table(CountTable& table, Int g_max, Int l_max,
                  const BuildOptions& options = {});
CountTable build_table(Int g_max, Int l_max, const BuildOptions& options = {});

}  // namespace gapset
