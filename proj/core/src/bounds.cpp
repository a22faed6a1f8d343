#include "gapset/bounds.hpp"

#include <array>
#include <optional>
#include <utility>

#include "json.hpp"

namespace gapset {

namespace {

bool in_box(const KunzTuple& k, Int level) {
  for (Int c : k.coords) {
    if (c < level || c > 2 * level + 1) return false;
  }
  return true;
}

// Family enumeration order: ascending length, then lexicographic.
bool family_less(const KunzTuple& a, const KunzTuple& b) {
  if (a.coords.size() != b.coords.size()) {
    return a.coords.size() < b.coords.size();
  }
  return a.coords < b.coords;
}

void note_witness(MapChecks& mc, const KunzTuple& k) {
  if (mc.witness.empty()) mc.witness = k.to_string();
}

}  // namespace

KunzTuple append_coordinate(const KunzTuple& k, Int z, Int level) {
  if (level < 1) throw DomainError("level must be positive");
  if (z < level || z > 2 * level) {
    throw DomainError("appended coordinate must lie in [level, 2*level]");
  }
  if (!in_box(k, level)) {
    throw DomainError("tuple coordinates must lie in [level, 2*level+1]");
  }
  KunzTuple out = k;
  out.coords.push_back(z);
  if (auto v = check_kunz_system(out)) throw InvalidKunzTuple(*v);
  return out;
}

Gapset append_coordinate(const Gapset& g, Int z, Int level) {
  return gapset_from_kunz(append_coordinate(kunz_from_gapset(g), z, level));
}

KunzTuple drop_last_coordinate(const KunzTuple& k, Int level) {
  if (level < 1) throw DomainError("level must be positive");
  if (k.coords.empty()) {
    throw DomainError("cannot drop the final coordinate of the empty tuple");
  }
  if (!in_box(k, level)) {
    throw DomainError("tuple coordinates must lie in [level, 2*level+1]");
  }
  KunzTuple out = k;
  out.coords.pop_back();
  if (auto v = check_kunz_system(out)) throw InvalidKunzTuple(*v);
  return out;
}

Gapset drop_last_coordinate(const Gapset& g, Int level) {
  return gapset_from_kunz(drop_last_coordinate(kunz_from_gapset(g), level));
}

std::map<Int, std::vector<KunzTuple>> partition_by_last_coordinate(Int g, Int level,
                                                                   Budget* budget) {
  if (g < 1) throw DomainError("genus must be positive");
  if (level < 1) throw DomainError("level must be positive");
  std::map<Int, std::vector<KunzTuple>> slices;
  for (Int z = level; z <= 2 * level + 1; ++z) slices[z];
  for_each_gamma_prime(
      g, level,
      [&slices](const KunzTuple& k) { slices[k.coords.back()].push_back(k); },
      budget);
  return slices;
}

bool MapChecks::all_pass() const {
  return append_valid && append_injective && images_disjoint && images_in_family &&
         truncate_valid && truncate_in_family && truncate_injective &&
         sections_hold && partition_complete;
}

bool VerificationReport::passed() const {
  return lower_holds && upper_holds && map_checks.all_pass();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["g"] = g;
  doc["l"] = level;
  doc["lower_lhs"] = lower_lhs;
  doc["n"] = n;
  doc["upper_rhs"] = upper_rhs;
  doc["lower_holds"] = lower_holds;
  doc["upper_holds"] = upper_holds;
  nlohmann::ordered_json checks;
  checks["mode"] =
      map_checks.mode == MapChecks::Mode::kElementwise ? "elementwise" : "counting";
  checks["append_valid"] = map_checks.append_valid;
  checks["append_injective"] = map_checks.append_injective;
  checks["images_disjoint"] = map_checks.images_disjoint;
  checks["images_in_family"] = map_checks.images_in_family;
  checks["truncate_valid"] = map_checks.truncate_valid;
  checks["truncate_in_family"] = map_checks.truncate_in_family;
  checks["truncate_injective"] = map_checks.truncate_injective;
  checks["sections_hold"] = map_checks.sections_hold;
  checks["partition_complete"] = map_checks.partition_complete;
  if (!map_checks.witness.empty()) checks["witness"] = map_checks.witness;
  doc["map_checks"] = std::move(checks);
  return doc.dump();
}

VerificationReport verify_counting_bounds(Int g, Int level,
                                          const VerifyOptions& options) {
  if (g < 1) throw DomainError("genus must be positive");
  if (level < 1) throw DomainError("level must be positive");

  VerificationReport report;
  report.g = g;
  report.level = level;

  std::optional<GammaPrimeColumn> own_column;
  const GammaPrimeColumn* column = options.column;
  if (column == nullptr || column->level() != level || column->g_max() < g) {
    own_column = count_gamma_prime_column(g, level, options.budget);
    column = &*own_column;
  }
  const auto np = [&](Int gg) -> Int { return gg < 0 ? 0 : column->count(gg); };

  const Int top = 2 * level + 1;
  report.n = np(g);
  Int lower = 0;
  for (Int i = level; i <= 2 * level; ++i) lower += np(g - i);
  report.lower_lhs = lower;
  report.upper_rhs = lower + np(g - top);
  report.lower_holds = report.lower_lhs <= report.n;
  report.upper_holds = report.n <= report.upper_rhs;

  MapChecks& mc = report.map_checks;

  // Slice identities, checked at every scale: appending z is a bijection
  // between Gamma'(g-z, l) and the z-slice for z <= 2l, the top slice
  // injects into Gamma'(g-2l-1, l), and the slices partition the family.
  Int slice_total = 0;
  for (Int z = level; z <= top; ++z) {
    const Int slice = column->count_by_last(g, z);
    slice_total += slice;
    if (z <= 2 * level) {
      if (slice != np(g - z)) {
        mc.append_injective = false;
        mc.images_in_family = false;
        if (mc.witness.empty()) {
          mc.witness = "slice z=" + std::to_string(z) + " has " +
                       std::to_string(slice) + " members, expected " +
                       std::to_string(np(g - z));
        }
      }
    } else if (slice > np(g - z)) {
      mc.truncate_injective = false;
      if (mc.witness.empty()) {
        mc.witness = "top slice has " + std::to_string(slice) +
                     " members, more than n'_{g-" + std::to_string(z) + "}";
      }
    }
  }
  mc.partition_complete = slice_total == report.n;

  Int stream_size = report.n;
  for (Int z = level; z <= 2 * level; ++z) stream_size += np(g - z);
  const bool elementwise = stream_size <= options.elementwise_cap;
  mc.mode = elementwise ? MapChecks::Mode::kElementwise : MapChecks::Mode::kCounting;
  if (!elementwise) return report;

  // Element-by-element exercise of the maps. Families stream in
  // (length, lex) order, so injectivity reduces to strict growth of
  // consecutive images.
  for (Int z = level; z <= 2 * level; ++z) {
    const Int source = g - z;
    if (source < 0) continue;
    KunzTuple previous;
    bool have_previous = false;
    for_each_gamma_prime(
        source, level,
        [&](const KunzTuple& t) {
          KunzTuple image;
          try {
            image = append_coordinate(t, z, level);
          } catch (const Error&) {
            mc.append_valid = false;
            note_witness(mc, t);
            return;
          }
          if (image.coords.back() != z) {
            mc.images_disjoint = false;
            note_witness(mc, image);
          }
          if (image.genus() != g || !in_box(image, level) ||
              check_kunz_system(image)) {
            mc.images_in_family = false;
            note_witness(mc, image);
          }
          if (have_previous && !family_less(previous, image)) {
            mc.append_injective = false;
            note_witness(mc, image);
          }
          try {
            if (drop_last_coordinate(image, level) != t) {
              mc.sections_hold = false;
              note_witness(mc, image);
            }
          } catch (const Error&) {
            mc.sections_hold = false;
            note_witness(mc, image);
          }
          previous = std::move(image);
          have_previous = true;
        },
        options.budget);
  }

  std::map<Int, Int> slice_counts;
  std::map<Int, KunzTuple> previous_truncation;
  for_each_gamma_prime(
      g, level,
      [&](const KunzTuple& u) {
        const Int z = u.coords.back();
        ++slice_counts[z];
        KunzTuple truncated;
        try {
          truncated = drop_last_coordinate(u, level);
        } catch (const Error&) {
          mc.truncate_valid = false;
          note_witness(mc, u);
          return;
        }
        if (truncated.genus() != g - z || !in_box(truncated, level) ||
            check_kunz_system(truncated)) {
          mc.truncate_in_family = false;
          note_witness(mc, u);
        }
        const auto it = previous_truncation.find(z);
        if (it != previous_truncation.end() && !family_less(it->second, truncated)) {
          mc.truncate_injective = false;
          note_witness(mc, u);
        }
        if (z <= 2 * level) {
          try {
            if (append_coordinate(truncated, z, level) != u) {
              mc.sections_hold = false;
              note_witness(mc, u);
            }
          } catch (const Error&) {
            mc.sections_hold = false;
            note_witness(mc, u);
          }
        }
        previous_truncation[z] = std::move(truncated);
      },
      options.budget);

  for (Int z = level; z <= top; ++z) {
    const Int streamed = slice_counts.count(z) ? slice_counts.at(z) : 0;
    if (streamed != column->count_by_last(g, z)) {
      mc.partition_complete = false;
      if (mc.witness.empty()) {
        mc.witness = "slice z=" + std::to_string(z) +
                     " disagrees between enumeration and counting";
      }
    }
  }

  return report;
}

}  // namespace gapset
