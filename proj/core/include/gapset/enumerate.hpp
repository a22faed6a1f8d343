#pragma once
//
// Enumeration of gapsets by genus, three ways:
//
//  * enumerate_gapsets_naive -- brute force over all genus-sized subsets of
//    [1, 2g-1]; the independent oracle the other enumerators are tested
//    against.
//  * for_each_gapset / count_n -- depth-first walk of the gapset tree
//    rooted at the empty gapset, where a child adjoins one gap larger than
//    every existing gap (the parent of G is G minus its largest gap).
//  * enumerate_gamma_prime / count_gamma_prime_column -- the families
//    Gamma'(g, l) of gapsets whose Kunz coordinates all lie in [l, 2l+1],
//    enumerated as constrained integer compositions.
//

#include <atomic>
#include <functional>
#include <vector>

#include "gapset/gapset.hpp"
#include "gapset/kunz.hpp"

namespace gapset {

// Shared node-expansion budget. limit == 0 means unlimited. charge() is
// safe to call from several worker threads.
class Budget {
 public:
  Budget() = default;
  explicit Budget(Int limit) : limit_(limit) {}

  void charge(Int nodes) {
    if (limit_ == 0) return;
    if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > limit_) {
      throw BudgetExceeded("node-expansion budget exceeded");
    }
  }
  Int used() const { return used_.load(std::memory_order_relaxed); }
  Int limit() const { return limit_; }

 private:
  std::atomic<Int> used_{0};
  Int limit_ = 0;
};

inline constexpr Int kNaiveGenusLimit = 14;

// All gapsets of the given genus, in lexicographic order of their
// ascending gap lists. Throws DomainError past kNaiveGenusLimit.
std::vector<Gapset> enumerate_gapsets_naive(Int genus);

// Streams every gapset of the given genus exactly once (single consumer).
void for_each_gapset(Int genus, const std::function<void(const Gapset&)>& visit,
                     Budget* budget = nullptr);
std::vector<Gapset> enumerate_gapsets(Int genus, Budget* budget = nullptr);

// Number of gapsets of the given genus. jobs > 1 splits root subtrees
// across threads; the result does not depend on jobs.
Int count_n(Int genus, int jobs = 1, Budget* budget = nullptr);

struct GammaPrimeFamily {
  Int g = 0;
  Int level = 0;
  std::vector<KunzTuple> members;  // ordered by (multiplicity, coords)
};

// Members of Gamma'(g, l): Kunz tuples with coordinates in [l, 2l+1]
// summing to g. Gamma'(0, l) is the singleton {()}.
GammaPrimeFamily enumerate_gamma_prime(Int g, Int level, Budget* budget = nullptr);
void for_each_gamma_prime(Int g, Int level,
                          const std::function<void(const KunzTuple&)>& visit,
                          Budget* budget = nullptr);

// Count-only walk of one level column: n'_{g,l} for every g in [0, g_max]
// plus the split of each count by final coordinate.
class GammaPrimeColumn {
 public:
  GammaPrimeColumn(Int g_max, Int level);

  Int level() const { return level_; }
  Int g_max() const { return g_max_; }
  Int count(Int g) const;                // n'_{g, level}; 0 outside [0, g_max]
  Int count_by_last(Int g, Int z) const; // members with final coordinate z

 private:
  friend GammaPrimeColumn count_gamma_prime_column(Int, Int, Budget*);
  Int g_max_ = 0;
  Int level_ = 0;
  std::vector<Int> by_genus_;
  std::vector<Int> by_last_;  // (g_max+1) x (level+2), z - level major-minor
};

GammaPrimeColumn count_gamma_prime_column(Int g_max, Int level,
                                          Budget* budget = nullptr);

Int count_n_prime(Int g, Int level, Budget* budget = nullptr);

}  // namespace gapset
