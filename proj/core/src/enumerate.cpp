#include "gapset/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

namespace gapset {

namespace {

constexpr Int kChargeBatch = 4096;

// ---------------------------------------------------------------------
// brute-force oracle
// ---------------------------------------------------------------------

// Gapset test on a one-word universe (bit i <=> i in the set, i <= 63).
bool word_is_gapset(std::uint64_t bits, Int max_z) {
  for (Int z = 2; z <= max_z; ++z) {
    if (!((bits >> z) & 1)) continue;
    for (Int x = 1; 2 * x <= z; ++x) {
      if (!((bits >> x) & 1) && !((bits >> (z - x)) & 1)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------
// gapset tree
// ---------------------------------------------------------------------

class TreeWalker {
 public:
  TreeWalker(Int target, Budget* budget,
             const std::function<void(const Gapset&)>* visit)
      : target_(target), budget_(budget), visit_(visit) {
    // Candidate generators reach frobenius + multiplicity <= 3*target - 1;
    // only gaps <= 2*target - 1 are ever set.
    const std::size_t bits = static_cast<std::size_t>(3 * std::max<Int>(target, 1) + 2);
    gapbits_.assign(bits / 64 + 1, 0);
  }

  Int run() {
    charge();
    if (target_ == 0) {
      emit();
    } else {
      // The only child of the empty gapset is {1}.
      set(1);
      descend(/*frob=*/1, /*mult=*/2, /*genus=*/1);
      clear(1);
    }
    flush();
    return count_;
  }

  // Continues the walk from an interior node of the tree.
  Int run_from(const Gapset& node, Int genus) {
    for (std::size_t w = 0; w < node.bits().size(); ++w) gapbits_[w] = node.bits()[w];
    descend(node.max_gap(), node.multiplicity(), genus);
    flush();
    return count_;
  }

 private:
  void descend(Int frob, Int mult, Int genus) {
    charge();
    if (genus == target_) {
      emit();
      return;
    }
    // A removable generator exceeds the frobenius number and, being the
    // largest gap of the child, stays within (frob, frob + mult].
    for (Int x = frob + 1; x <= frob + mult; ++x) {
      if (!is_minimal_generator(x, mult)) continue;
      set(x);
      descend(x, x == mult ? mult + 1 : mult, genus + 1);
      clear(x);
    }
  }

  bool is_minimal_generator(Int x, Int mult) const {
    // x > frob is in the semigroup; reject if x = s + (x - s) with both
    // parts nonzero semigroup elements. Parts below mult are gaps.
    for (Int s = mult; 2 * s <= x; ++s) {
      if (!gap(s) && !gap(x - s)) return false;
    }
    return true;
  }

  void emit() {
    ++count_;
    if (visit_ != nullptr) {
      (*visit_)(Gapset::from_bits_unchecked(std::vector<std::uint64_t>(gapbits_)));
    }
  }

  bool gap(Int i) const {
    return (gapbits_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
  }
  void set(Int i) {
    gapbits_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
  }
  void clear(Int i) {
    gapbits_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
  }

  void charge() {
    if (++pending_ >= kChargeBatch) flush();
  }
  void flush() {
    if (budget_ != nullptr && pending_ > 0) budget_->charge(pending_);
    pending_ = 0;
  }

  Int target_;
  Budget* budget_;
  const std::function<void(const Gapset&)>* visit_;
  std::vector<std::uint64_t> gapbits_;
  Int count_ = 0;
  Int pending_ = 0;
};

// ---------------------------------------------------------------------
// Gamma'(g, l) composition search
// ---------------------------------------------------------------------

class GammaPrimeWalker {
 public:
  GammaPrimeWalker(Int g, Int level, Budget* budget,
                   const std::function<void(const KunzTuple&)>& visit)
      : g_(g), level_(level), top_(2 * level + 1), budget_(budget), visit_(visit) {}

  void run() {
    if (g_ == 0) {
      visit_(KunzTuple{});
      return;
    }
    const Int n_min = std::max<Int>((g_ + top_ - 1) / top_, 1);
    const Int n_max = g_ / level_;
    for (Int n = n_min; n <= n_max; ++n) {
      coords_.assign(static_cast<std::size_t>(n), 0);
      place(0, g_, n);
    }
    flush();
  }

 private:
  void place(Int t, Int remaining, Int n) {
    charge();
    if (t == n) {
      // The value windows force the exact sum; the incremental prune is a
      // necessary condition only, so run the full system check here.
      if (!check_kunz_system(coords_)) visit_(KunzTuple{coords_});
      return;
    }
    const Int slots_after = n - t - 1;
    const Int v_lo = std::max(level_, remaining - slots_after * top_);
    const Int v_hi = std::min(top_, remaining - slots_after * level_);
    for (Int v = v_lo; v <= v_hi; ++v) {
      coords_[static_cast<std::size_t>(t)] = v;
      if (!prefix_ok(t + 1)) continue;
      place(t + 1, remaining - v, n);
    }
  }

  // Constraints whose indices all lie in the placed prefix: the direct
  // family k_i + k_j >= k_t for i + j = t (the wrapped family cannot fail
  // inside [level, 2*level + 1]).
  bool prefix_ok(Int t) const {
    const Int kt = coords_[static_cast<std::size_t>(t - 1)];
    for (Int i = 1; 2 * i <= t; ++i) {
      if (coords_[static_cast<std::size_t>(i - 1)] +
              coords_[static_cast<std::size_t>(t - i - 1)] <
          kt) {
        return false;
      }
    }
    return true;
  }

  void charge() {
    if (++pending_ >= kChargeBatch) flush();
  }
  void flush() {
    if (budget_ != nullptr && pending_ > 0) budget_->charge(pending_);
    pending_ = 0;
  }

  Int g_;
  Int level_;
  Int top_;
  Budget* budget_;
  const std::function<void(const KunzTuple&)>& visit_;
  std::vector<Int> coords_;
  Int pending_ = 0;
};

// ---------------------------------------------------------------------
// count-only column walk
// ---------------------------------------------------------------------

void or_shifted(std::uint64_t* dst, std::size_t dst_words,
                const std::uint64_t* src, std::size_t src_words, Int shift) {
  const std::size_t word_shift = static_cast<std::size_t>(shift >> 6);
  const int bit_shift = static_cast<int>(shift & 63);
  for (std::size_t w = 0; w < src_words; ++w) {
    if (src[w] == 0) continue;
    const std::size_t lo = w + word_shift;
    if (lo < dst_words) dst[lo] |= src[w] << bit_shift;
    if (bit_shift != 0 && lo + 1 < dst_words) dst[lo + 1] |= src[w] >> (64 - bit_shift);
  }
}

class ColumnWalker {
 public:
  ColumnWalker(Int g_max, Int level, Budget* budget)
      : g_max_(g_max),
        level_(level),
        top_(2 * level + 1),
        budget_(budget),
        n_max_(g_max / level),
        pos_words_(static_cast<std::size_t>(n_max_ / 64 + 1)),
        sum_words_(static_cast<std::size_t>(2 * n_max_ / 64 + 1)) {
    level_positions_.assign(pos_words_, 0);
    sum_rows_.assign(static_cast<std::size_t>(n_max_ + 1) * sum_words_, 0);
    by_genus_.assign(static_cast<std::size_t>(g_max_ + 1), 0);
    by_last_.assign(static_cast<std::size_t>((g_max_ + 1) * (level_ + 2)), 0);
  }

  void run() {
    walk(0, 0, 0, sum_rows_.data());
    flush();
  }

  std::vector<Int> take_by_genus() { return std::move(by_genus_); }
  std::vector<Int> take_by_last() { return std::move(by_last_); }

 private:
  // Every valid prefix is itself a member of Gamma'(sum, level), so each
  // node of the walk is counted exactly once. S is the sumset bitmask
  // {i + j : k_i = k_j = level}; a new coordinate 2*level + 1 at position p
  // is admissible iff p is not in S (the only way the system can fail
  // inside the box).
  void walk(Int t, Int sum, Int last, const std::uint64_t* S) {
    charge();
    ++by_genus_[static_cast<std::size_t>(sum)];
    if (t > 0) {
      ++by_last_[static_cast<std::size_t>(sum * (level_ + 2) + (last - level_))];
    }
    const Int v_max = std::min(top_, g_max_ - sum);
    if (v_max < level_) return;
    const Int p = t + 1;
    assert(p <= n_max_);
    const bool top_blocked =
        (S[static_cast<std::size_t>(p >> 6)] >> (p & 63)) & 1;
    for (Int v = level_; v <= v_max; ++v) {
      if (v == top_ && top_blocked) continue;
      if (v == level_) {
        std::uint64_t* child = row(p);
        std::copy(S, S + sum_words_, child);
        or_shifted(child, sum_words_, level_positions_.data(), pos_words_, p);
        child[static_cast<std::size_t>((2 * p) >> 6)] |= std::uint64_t{1}
                                                         << ((2 * p) & 63);
        set_level_position(p);
        walk(p, sum + v, v, child);
        clear_level_position(p);
      } else {
        walk(p, sum + v, v, S);
      }
    }
  }

  std::uint64_t* row(Int t) {
    return sum_rows_.data() + static_cast<std::size_t>(t) * sum_words_;
  }
  void set_level_position(Int p) {
    level_positions_[static_cast<std::size_t>(p >> 6)] |= std::uint64_t{1} << (p & 63);
  }
  void clear_level_position(Int p) {
    level_positions_[static_cast<std::size_t>(p >> 6)] &= ~(std::uint64_t{1} << (p & 63));
  }

  void charge() {
    if (++pending_ >= kChargeBatch) flush();
  }
  void flush() {
    if (budget_ != nullptr && pending_ > 0) budget_->charge(pending_);
    pending_ = 0;
  }

  Int g_max_;
  Int level_;
  Int top_;
  Budget* budget_;
  Int n_max_;
  std::size_t pos_words_;
  std::size_t sum_words_;
  std::vector<std::uint64_t> level_positions_;
  std::vector<std::uint64_t> sum_rows_;
  std::vector<Int> by_genus_;
  std::vector<Int> by_last_;
  Int pending_ = 0;
};

}  // namespace

std::vector<Gapset> enumerate_gapsets_naive(Int genus) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  if (genus > kNaiveGenusLimit) {
    throw DomainError("brute-force enumeration is limited to genus <= " +
                      std::to_string(kNaiveGenusLimit));
  }
  std::vector<Gapset> out;
  if (genus == 0) {
    out.emplace_back();
    return out;
  }
  // Every nonempty gapset contains 1, so fix it and choose the remaining
  // gaps from [2, 2g-1]; combinations advance in lexicographic order.
  const Int universe = 2 * genus - 1;
  const Int k = genus - 1;
  std::vector<Int> pick(static_cast<std::size_t>(genus));
  pick[0] = 1;
  for (Int t = 1; t <= k; ++t) pick[static_cast<std::size_t>(t)] = t + 1;
  for (;;) {
    std::uint64_t word = 0;
    for (Int v : pick) word |= std::uint64_t{1} << v;
    if (word_is_gapset(word, universe)) {
      out.push_back(Gapset::from_bits_unchecked({word}));
    }
    Int t = k;
    while (t >= 1 && pick[static_cast<std::size_t>(t)] == universe - (k - t)) --t;
    if (t < 1) break;
    ++pick[static_cast<std::size_t>(t)];
    for (Int s = t + 1; s <= k; ++s) {
      pick[static_cast<std::size_t>(s)] = pick[static_cast<std::size_t>(s - 1)] + 1;
    }
  }
  return out;
}

void for_each_gapset(Int genus, const std::function<void(const Gapset&)>& visit,
                     Budget* budget) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  TreeWalker walker(genus, budget, &visit);
  walker.run();
}

std::vector<Gapset> enumerate_gapsets(Int genus, Budget* budget) {
  std::vector<Gapset> out;
  for_each_gapset(
      genus, [&out](const Gapset& g) { out.push_back(g); }, budget);
  return out;
}

Int count_n(Int genus, int jobs, Budget* budget) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  constexpr Int kSplitDepth = 8;
  if (jobs <= 1 || genus <= kSplitDepth) {
    TreeWalker walker(genus, budget, nullptr);
    return walker.run();
  }
  const std::vector<Gapset> frontier = enumerate_gapsets(kSplitDepth, budget);
  std::vector<Int> partial(frontier.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&]() {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= frontier.size()) return;
        TreeWalker walker(genus, budget, nullptr);
        partial[i] = walker.run_from(frontier[i], kSplitDepth);
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
  Int total = 0;
  for (Int c : partial) total += c;
  return total;
}

void for_each_gamma_prime(Int g, Int level,
                          const std::function<void(const KunzTuple&)>& visit,
                          Budget* budget) {
  if (g < 0) throw DomainError("genus must be nonnegative");
  if (level < 1) throw DomainError("level must be positive");
  GammaPrimeWalker walker(g, level, budget, visit);
  walker.run();
}

GammaPrimeFamily enumerate_gamma_prime(Int g, Int level, Budget* budget) {
  GammaPrimeFamily family;
  family.g = g;
  family.level = level;
  for_each_gamma_prime(
      g, level, [&family](const KunzTuple& k) { family.members.push_back(k); },
      budget);
  return family;
}

GammaPrimeColumn::GammaPrimeColumn(Int g_max, Int level)
    : g_max_(g_max), level_(level) {
  by_genus_.assign(static_cast<std::size_t>(g_max + 1), 0);
  by_last_.assign(static_cast<std::size_t>((g_max + 1) * (level + 2)), 0);
}

Int GammaPrimeColumn::count(Int g) const {
  if (g < 0 || g > g_max_) return 0;
  return by_genus_[static_cast<std::size_t>(g)];
}

Int GammaPrimeColumn::count_by_last(Int g, Int z) const {
  if (g < 0 || g > g_max_ || z < level_ || z > 2 * level_ + 1) return 0;
  return by_last_[static_cast<std::size_t>(g * (level_ + 2) + (z - level_))];
}

GammaPrimeColumn count_gamma_prime_column(Int g_max, Int level, Budget* budget) {
  if (g_max < 0) throw DomainError("genus must be nonnegative");
  if (level < 1) throw DomainError("level must be positive");
  GammaPrimeColumn column(g_max, level);
  ColumnWalker walker(g_max, level, budget);
  walker.run();
  column.by_genus_ = walker.take_by_genus();
  column.by_last_ = walker.take_by_last();
  return column;
}

Int count_n_prime(Int g, Int level, Budget* budget) {
  if (g < 0) throw DomainError("genus must be nonnegative");
  if (level < 1) throw DomainError("level must be positive");
  return count_gamma_prime_column(g, level, budget).count(g);
}

}  // namespace gapset
