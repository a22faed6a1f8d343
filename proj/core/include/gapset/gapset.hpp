#pragma once
//
// Gapsets: finite sets G of positive integers such that for every z in G
// and every decomposition z = x + y into positive integers, x or y lies in
// G. These are exactly the gap sets of numerical semigroups. A gapset is
// stored as a bit vector over [1, max gap]; the classical bound
// max(G) <= 2#G - 1 keeps it small.
//

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gapset/errors.hpp"

namespace gapset {

class Gapset {
 public:
  Gapset() = default;  // the empty gapset

  // Validates the gapset property; throws InvalidGapset with a witness
  // decomposition, or DomainError on nonpositive input.
  static Gapset from_gaps(std::span<const Int> gaps);
  static Gapset from_gaps(std::initializer_list<Int> gaps);

  // Trusted constructor for enumerators and conversions. `bits` must
  // describe a gapset (bit i set <=> i is a gap; bit 0 clear).
  static Gapset from_bits_unchecked(std::vector<std::uint64_t> bits);

  bool empty() const { return genus_ == 0; }
  Int genus() const { return genus_; }
  bool contains(Int x) const;
  Int max_gap() const;  // 0 for the empty gapset

  Int multiplicity() const;  // least positive non-gap; 1 for the empty gapset
  Int conductor() const;     // max gap + 1; 0 for the empty gapset
  Int depth() const;         // ceil(conductor / multiplicity)
  Int ratio() const;         // least non-gap not divisible by m; requires m >= 2
  Int level() const;         // floor(ratio / multiplicity); requires m >= 2

  std::vector<Int> gaps() const;  // ascending
  std::string to_string() const;  // "1,2,4,5,8,11"; "" for the empty gapset
  static Gapset parse(std::string_view text);

  const std::vector<std::uint64_t>& bits() const { return bits_; }

  friend bool operator==(const Gapset&, const Gapset&) = default;
  // Lexicographic order on the ascending gap lists.
  friend std::strong_ordering operator<=>(const Gapset& a, const Gapset& b);

 private:
  // Trailing zero words are trimmed so equality is word-wise.
  std::vector<std::uint64_t> bits_;
  Int genus_ = 0;
};

bool is_gapset(std::span<const Int> candidate);
std::optional<GapsetViolation> gapset_violation(std::span<const Int> candidate);

// Apery set of the complement semigroup: w_0 = 0 and, for i in [1, m-1],
// w_i is the least non-gap congruent to i mod m; w_i = m*k_i + i.
struct AperySet {
  std::vector<Int> elements;
};

// Slices of the gapset by multiplicity windows: part a is
// G intersected with [a*m + 1, (a+1)*m - 1], for a in [0, depth).
struct CanonicalPartition {
  std::vector<std::vector<Int>> parts;
};

AperySet apery_set(const Gapset& g);
CanonicalPartition canonical_partition(const Gapset& g);

}  // namespace gapset
