#include "gapset/format.hpp"

#include <sstream>

#include "json.hpp"

namespace gapset {

std::optional<TableFormat> table_format_from_string(std::string_view text) {
  if (text == "csv") return TableFormat::kCsv;
  if (text == "json") return TableFormat::kJson;
  if (text == "md") return TableFormat::kMarkdown;
  return std::nullopt;
}

namespace {

Int cell_or_throw(const CountTable& table, Int g, Int l) {
  const auto value = table.n_prime(g, l);
  if (!value) {
    throw Error("count table is missing cell (" + std::to_string(g) + ", " +
                std::to_string(l) + ")");
  }
  return *value;
}

}  // namespace

std::string render_table_csv(const CountTable& table, Int g_max, Int l_max) {
  std::ostringstream os;
  os << "g,l,count\n";
  for (Int g = 1; g <= g_max; ++g) {
    for (Int l = 1; l <= l_max; ++l) {
      os << g << ',' << l << ',' << cell_or_throw(table, g, l) << '\n';
    }
  }
  return os.str();
}

std::string render_table_markdown(const CountTable& table, Int g_max, Int l_max) {
  std::ostringstream os;
  os << "| g\\l |";
  for (Int l = 1; l <= l_max; ++l) os << ' ' << l << " |";
  os << "\n|---:|";
  for (Int l = 1; l <= l_max; ++l) os << "---:|";
  os << '\n';
  for (Int g = 1; g <= g_max; ++g) {
    os << "| " << g << " |";
    for (Int l = 1; l <= l_max; ++l) {
      if (l > g) {
        os << "  |";  // blank above the diagonal
      } else {
        os << ' ' << cell_or_throw(table, g, l) << " |";
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_table_json(const CountTable& table, Int g_max, Int l_max) {
  CountTable grid;
  for (Int g = 1; g <= g_max; ++g) {
    for (Int l = 1; l <= l_max; ++l) {
      grid.set_n_prime(g, l, cell_or_throw(table, g, l));
    }
  }
  return grid.to_json() + "\n";
}

std::string render_table(const CountTable& table, Int g_max, Int l_max,
                         TableFormat format) {
  switch (format) {
    case TableFormat::kCsv:
      return render_table_csv(table, g_max, l_max);
    case TableFormat::kJson:
      return render_table_json(table, g_max, l_max);
    case TableFormat::kMarkdown:
      return render_table_markdown(table, g_max, l_max);
  }
  throw Error("unknown table format");
}

std::string render_inspection(const Gapset& g) {
  std::ostringstream os;
  const Int m = g.multiplicity();
  os << "gaps: " << (g.empty() ? "(none)" : g.to_string()) << '\n';
  os << "multiplicity: " << m << '\n';
  os << "genus: " << g.genus() << '\n';
  os << "conductor: " << g.conductor() << '\n';
  os << "depth: " << g.depth() << '\n';
  if (m >= 2) {
    os << "ratio: " << g.ratio() << '\n';
    os << "level: " << g.level() << '\n';
  } else {
    os << "ratio: undefined (multiplicity 1)\n";
    os << "level: undefined (multiplicity 1)\n";
  }
  const AperySet ap = apery_set(g);
  os << "apery: ";
  for (std::size_t i = 0; i < ap.elements.size(); ++i) {
    if (i > 0) os << ',';
    os << ap.elements[i];
  }
  os << '\n';
  const KunzTuple k = kunz_from_gapset(g);
  os << "kunz: " << k.to_string() << '\n';
  os << "partition:";
  const CanonicalPartition parts = canonical_partition(g);
  if (parts.parts.empty()) {
    os << " (none)";
  } else {
    for (const auto& part : parts.parts) {
      os << " {";
      for (std::size_t i = 0; i < part.size(); ++i) {
        if (i > 0) os << ',';
        os << part[i];
      }
      os << '}';
    }
  }
  os << '\n';
  // Levels whose family contains this gapset: l <= min coordinate and
  // 2l + 1 >= max coordinate. The empty gapset belongs to every family.
  os << "families: ";
  if (g.empty()) {
    os << "all levels\n";
  } else {
    const Int lo = k.depth() / 2;  // smallest l with 2l+1 >= depth
    const Int hi = k.level();
    bool any = false;
    for (Int l = std::max<Int>(lo, 1); l <= hi; ++l) {
      if (any) os << ',';
      os << l;
      any = true;
    }
    if (!any) os << "(none)";
    os << '\n';
  }
  return os.str();
}

std::string render_maps_listing(Int g, Int level, Budget* budget) {
  std::ostringstream os;
  const Int top = 2 * level + 1;
  os << "cell g=" << g << " l=" << level << '\n';
  for (Int z = level; z <= 2 * level; ++z) {
    os << "append z=" << z << " : Gamma'(" << (g - z) << "," << level
       << ") -> Gamma'(" << g << "," << level << ")\n";
    if (g - z < 0) continue;
    for_each_gamma_prime(
        g - z, level,
        [&](const KunzTuple& t) {
          os << "  " << t.to_string() << " -> "
             << append_coordinate(t, z, level).to_string() << '\n';
        },
        budget);
  }
  const auto slices = partition_by_last_coordinate(g, level, budget);
  for (Int z = level; z <= top; ++z) {
    os << "drop z=" << z << " : slice of Gamma'(" << g << "," << level
       << ") -> Gamma'(" << (g - z) << "," << level << ")\n";
    for (const KunzTuple& u : slices.at(z)) {
      os << "  " << u.to_string() << " -> "
         << drop_last_coordinate(u, level).to_string() << '\n';
    }
  }
  return os.str();
}

}  // namespace gapset
