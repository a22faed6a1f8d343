#pragma once
//
// Kunz coordinates. A gapset with multiplicity m is determined by the
// tuple (k_1, ..., k_{m-1}) where k_i counts its gaps congruent to i mod m;
// each residue class is the initial run {i, i+m, ..., i+(k_i-1)m}. A tuple
// of positive integers arises this way iff it satisfies
//
//   k_i + k_j     >= k_{i+j}    for 1 <= i <= j <= m-1, i + j < m,
//   k_i + k_j + 1 >= k_{i+j-m}  for 1 <= i <= j <= m-1, i + j > m.
//
// The genus is the coordinate sum, the depth the maximum coordinate and
// the level the minimum coordinate.
//

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gapset/errors.hpp"
#include "gapset/gapset.hpp"

namespace gapset {

struct KunzTuple {
  std::vector<Int> coords;  // (k_1, ..., k_{m-1}); empty for the empty gapset

  KunzTuple() = default;
  explicit KunzTuple(std::vector<Int> c) : coords(std::move(c)) {}
  KunzTuple(std::initializer_list<Int> c) : coords(c) {}

  Int size() const { return static_cast<Int>(coords.size()); }
  Int multiplicity() const { return size() + 1; }
  Int genus() const;  // sum of coordinates
  Int depth() const;  // max coordinate; 0 when empty
  Int level() const;  // min coordinate; throws DomainError when empty

  std::string to_string() const;  // "(2,4)"; "()" when empty
  static KunzTuple parse(std::string_view text);

  friend bool operator==(const KunzTuple&, const KunzTuple&) = default;
  friend auto operator<=>(const KunzTuple& a, const KunzTuple& b) {
    return a.coords <=> b.coords;
  }
};

// First violation in lexicographic (i, j) order, or nullopt when the
// tuple satisfies the system (nonpositive entries are reported first).
std::optional<KunzViolation> check_kunz_system(std::span<const Int> coords);
inline std::optional<KunzViolation> check_kunz_system(const KunzTuple& k) {
  return check_kunz_system(std::span<const Int>(k.coords));
}

KunzTuple kunz_from_gapset(const Gapset& g);

// Inverse direction; throws InvalidKunzTuple when the system is violated.
Gapset gapset_from_kunz(const KunzTuple& k);

}  // namespace gapset
