#include "gapset/kunz.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace gapset {

namespace {

constexpr Int kMaxConversionGenus = 1 << 22;

}  // namespace

std::string KunzViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kNonPositive:
      os << "k_" << i << " = " << lhs << " is not a positive integer";
      break;
    case Kind::kDirect:
      os << "k_" << i << " + k_" << j << " = " << lhs << " < " << rhs << " = k_"
         << target_index();
      break;
    case Kind::kWrapped:
      if (i == j) {
        os << "2k_" << i << " + 1 = ";
      } else {
        os << "k_" << i << " + k_" << j << " + 1 = ";
      }
      os << lhs << " < " << rhs << " = k_" << target_index();
      break;
  }
  return os.str();
}

InvalidKunzTuple::InvalidKunzTuple(const KunzViolation& v)
    : Error("not a Kunz tuple: " + v.describe()), violation_(v) {}

Int KunzTuple::genus() const {
  return std::accumulate(coords.begin(), coords.end(), Int{0});
}

Int KunzTuple::depth() const {
  if (coords.empty()) return 0;
  return *std::max_element(coords.begin(), coords.end());
}

Int KunzTuple::level() const {
  if (coords.empty()) throw DomainError("level is undefined for the empty tuple");
  return *std::min_element(coords.begin(), coords.end());
}

std::string KunzTuple::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) os << ',';
    os << coords[i];
  }
  os << ')';
  return os.str();
}

KunzTuple KunzTuple::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("Kunz tuple must look like \"(2,4)\"");
  }
  text = text.substr(1, text.size() - 2);
  KunzTuple k;
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
      throw ParseError("bad Kunz coordinate: '" + std::string(item) + "'");
    }
    k.coords.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return k;
}

std::optional<KunzViolation> check_kunz_system(std::span<const Int> coords) {
  const Int n = static_cast<Int>(coords.size());
  const Int m = n + 1;
  for (Int i = 1; i <= n; ++i) {
    if (coords[static_cast<std::size_t>(i - 1)] < 1) {
      KunzViolation v;
      v.kind = KunzViolation::Kind::kNonPositive;
      v.i = i;
      v.j = i;
      v.lhs = coords[static_cast<std::size_t>(i - 1)];
      v.rhs = 1;
      v.m = m;
      return v;
    }
  }
  const auto k = [&](Int t) { return coords[static_cast<std::size_t>(t - 1)]; };
  for (Int i = 1; i <= n; ++i) {
    for (Int j = i; j <= n; ++j) {
      if (i + j < m) {
        if (k(i) + k(j) < k(i + j)) {
          KunzViolation v;
          v.kind = KunzViolation::Kind::kDirect;
          v.i = i;
          v.j = j;
          v.lhs = k(i) + k(j);
          v.rhs = k(i + j);
          v.m = m;
          return v;
        }
      } else if (i + j > m) {
        if (k(i) + k(j) + 1 < k(i + j - m)) {
          KunzViolation v;
          v.kind = KunzViolation::Kind::kWrapped;
          v.i = i;
          v.j = j;
          v.lhs = k(i) + k(j) + 1;
          v.rhs = k(i + j - m);
          v.m = m;
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

KunzTuple kunz_from_gapset(const Gapset& g) {
  const Int m = g.multiplicity();
  KunzTuple k;
  k.coords.assign(static_cast<std::size_t>(m - 1), 0);
  for (Int z : g.gaps()) {
    ++k.coords[static_cast<std::size_t>(z % m - 1)];
  }
  return k;
}

Gapset gapset_from_kunz(const KunzTuple& k) {
  if (auto v = check_kunz_system(k)) throw InvalidKunzTuple(*v);
  if (k.genus() > kMaxConversionGenus) {
    throw DomainError("Kunz tuple genus too large to materialize");
  }
  const Int m = k.multiplicity();
  std::vector<std::uint64_t> bits;
  if (!k.coords.empty()) {
    Int max_gap = 0;
    for (Int i = 1; i < m; ++i) {
      const Int top = i + (k.coords[static_cast<std::size_t>(i - 1)] - 1) * m;
      max_gap = std::max(max_gap, top);
    }
    bits.assign(static_cast<std::size_t>(max_gap / 64 + 1), 0);
    for (Int i = 1; i < m; ++i) {
      for (Int a = 0; a < k.coords[static_cast<std::size_t>(i - 1)]; ++a) {
        const Int z = i + a * m;
        bits[static_cast<std::size_t>(z >> 6)] |= std::uint64_t{1} << (z & 63);
      }
    }
  }
  return Gapset::from_bits_unchecked(std::move(bits));
}

}  // namespace gapset
