#include "gapset/gapset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <charconv>
#include <sstream>

namespace gapset {

namespace {

constexpr Int kMaxParseGap = 1 << 22;  // keeps the bit vector small

void trim(std::vector<std::uint64_t>& words) {
  while (!words.empty() && words.back() == 0) words.pop_back();
}

bool test_bit(const std::vector<std::uint64_t>& words, Int i) {
  const auto w = static_cast<std::size_t>(i >> 6);
  if (w >= words.size()) return false;
  return (words[w] >> (i & 63)) & 1;
}

void set_bit(std::vector<std::uint64_t>& words, Int i) {
  const auto w = static_cast<std::size_t>(i >> 6);
  if (w >= words.size()) words.resize(w + 1, 0);
  words[w] |= std::uint64_t{1} << (i & 63);
}

}  // namespace

std::string GapsetViolation::describe() const {
  std::ostringstream os;
  os << z << " = " << x << " + " << y << " with neither summand in the set";
  return os.str();
}

InvalidGapset::InvalidGapset(const GapsetViolation& v)
    : Error("not a gapset: " + v.describe()), violation_(v) {}

std::optional<GapsetViolation> gapset_violation(std::span<const Int> candidate) {
  std::vector<std::uint64_t> bits;
  Int max_gap = 0;
  for (Int z : candidate) {
    if (z < 1) return GapsetViolation{z, 0, 0};  // caller rejects nonpositive first
    set_bit(bits, z);
    max_gap = std::max(max_gap, z);
  }
  // Smallest violating z, then smallest x.
  for (Int z = 1; z <= max_gap; ++z) {
    if (!test_bit(bits, z)) continue;
    for (Int x = 1; 2 * x <= z; ++x) {
      if (!test_bit(bits, x) && !test_bit(bits, z - x)) {
        return GapsetViolation{z, x, z - x};
      }
    }
  }
  return std::nullopt;
}

bool is_gapset(std::span<const Int> candidate) {
  for (Int z : candidate) {
    if (z < 1) return false;
  }
  return !gapset_violation(candidate).has_value();
}

Gapset Gapset::from_gaps(std::span<const Int> gaps) {
  Gapset g;
  for (Int z : gaps) {
    if (z < 1) throw DomainError("gaps must be positive integers");
    if (!test_bit(g.bits_, z)) {
      set_bit(g.bits_, z);
      ++g.genus_;
    }
  }
  for (Int z = 1, hi = g.max_gap(); z <= hi; ++z) {
    if (!test_bit(g.bits_, z)) continue;
    for (Int x = 1; 2 * x <= z; ++x) {
      if (!test_bit(g.bits_, x) && !test_bit(g.bits_, z - x)) {
        throw InvalidGapset(GapsetViolation{z, x, z - x});
      }
    }
  }
  // Frobenius bound, implied by closure; the enumerators rely on it.
  assert(g.empty() || g.max_gap() <= 2 * g.genus() - 1);
  return g;
}

Gapset Gapset::from_gaps(std::initializer_list<Int> gaps) {
  return from_gaps(std::span<const Int>(gaps.begin(), gaps.size()));
}

Gapset Gapset::from_bits_unchecked(std::vector<std::uint64_t> bits) {
  Gapset g;
  g.bits_ = std::move(bits);
  trim(g.bits_);
  g.genus_ = 0;
  for (std::uint64_t w : g.bits_) g.genus_ += std::popcount(w);
  assert(g.empty() || g.max_gap() <= 2 * g.genus() - 1);
  return g;
}

bool Gapset::contains(Int x) const {
  if (x < 1) return false;
  return test_bit(bits_, x);
}

Int Gapset::max_gap() const {
  if (bits_.empty()) return 0;
  const auto last = bits_.size() - 1;
  return static_cast<Int>(last * 64 + 63 - std::countl_zero(bits_[last]));
}

Int Gapset::multiplicity() const {
  Int s = 1;
  while (contains(s)) ++s;
  return s;
}

Int Gapset::conductor() const { return empty() ? 0 : max_gap() + 1; }

Int Gapset::depth() const {
  if (empty()) return 0;
  const Int c = conductor();
  const Int m = multiplicity();
  return (c + m - 1) / m;
}

Int Gapset::ratio() const {
  const Int m = multiplicity();
  if (m < 2) throw DomainError("ratio is undefined for multiplicity 1");
  // Least non-gap not divisible by m; exists at latest just past the conductor.
  for (Int x = 1;; ++x) {
    if (x % m != 0 && !contains(x)) return x;
  }
}

Int Gapset::level() const { return ratio() / multiplicity(); }

std::vector<Int> Gapset::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word != 0) {
      const int b = std::countr_zero(word);
      out.push_back(static_cast<Int>(w * 64 + static_cast<std::size_t>(b)));
      word &= word - 1;
    }
  }
  return out;
}

std::string Gapset::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (Int z : gaps()) {
    if (!first) os << ',';
    os << z;
    first = false;
  }
  return os.str();
}

Gapset Gapset::parse(std::string_view text) {
  std::vector<Int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    Int value = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("bad gap list entry: '" + std::string(item) + "'");
    }
    if (value < 1 || value > kMaxParseGap) {
      throw ParseError("gap out of range: " + std::string(item));
    }
    if (!values.empty() && value <= values.back()) {
      throw ParseError("gaps must be strictly ascending");
    }
    values.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return from_gaps(values);
}

std::strong_ordering operator<=>(const Gapset& a, const Gapset& b) {
  // Lexicographic on the ascending gap lists. Let d be the smallest
  // element in one set but not the other: the set containing d wins the
  // slot comparison unless the other set has nothing beyond the shared
  // prefix, in which case the other set is a proper prefix and smaller.
  const std::size_t n = std::max(a.bits_.size(), b.bits_.size());
  for (std::size_t w = 0; w < n; ++w) {
    const std::uint64_t aw = w < a.bits_.size() ? a.bits_[w] : 0;
    const std::uint64_t bw = w < b.bits_.size() ? b.bits_[w] : 0;
    const std::uint64_t diff = aw ^ bw;
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    const bool d_in_a = (aw & low) != 0;
    const auto& other_bits = d_in_a ? b.bits_ : a.bits_;
    bool other_continues = ((d_in_a ? bw : aw) & ~(low | (low - 1))) != 0;
    for (std::size_t v = w + 1; !other_continues && v < other_bits.size(); ++v) {
      other_continues = other_bits[v] != 0;
    }
    if (d_in_a) {
      return other_continues ? std::strong_ordering::less
                             : std::strong_ordering::greater;
    }
    return other_continues ? std::strong_ordering::greater
                           : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

AperySet apery_set(const Gapset& g) {
  const Int m = g.multiplicity();
  AperySet ap;
  ap.elements.assign(static_cast<std::size_t>(m), 0);
  // w_i = m + (largest gap congruent to i); class i is nonempty since i < m
  // is itself a gap of any nonempty gapset.
  for (Int z : g.gaps()) {
    const Int i = z % m;
    ap.elements[static_cast<std::size_t>(i)] =
        std::max(ap.elements[static_cast<std::size_t>(i)], m + z);
  }
  return ap;
}

CanonicalPartition canonical_partition(const Gapset& g) {
  CanonicalPartition p;
  if (g.empty()) return p;
  const Int m = g.multiplicity();
  p.parts.resize(static_cast<std::size_t>(g.depth()));
  for (Int z : g.gaps()) {
    p.parts[static_cast<std::size_t>(z / m)].push_back(z);
  }
  return p;
}

}  // namespace gapset
