#pragma once
//
// Rendering side of the command-line front end: count tables as csv, json
// or markdown, human-readable gapset inspection reports, and the audit
// listing of the coordinate maps at one (g, l) cell.
//

#include <optional>
#include <string>
#include <string_view>

#include "gapset/bounds.hpp"
#include "gapset/count_table.hpp"

namespace gapset {

enum class TableFormat { kCsv, kJson, kMarkdown };

std::optional<TableFormat> table_format_from_string(std::string_view text);

// Grid over g in [1, g_max], l in [1, l_max]; every cell must be present
// in the table. csv rows are sorted by (g, l) with header "g,l,count";
// markdown mirrors the triangular layout with blank cells where l > g;
// json reuses the count-cache document shape.
std::string render_table_csv(const CountTable& table, Int g_max, Int l_max);
std::string render_table_markdown(const CountTable& table, Int g_max, Int l_max);
std::string render_table_json(const CountTable& table, Int g_max, Int l_max);
std::string render_table(const CountTable& table, Int g_max, Int l_max,
                         TableFormat format);

std::string render_inspection(const Gapset& g);

std::string render_maps_listing(Int g, Int level, Budget* budget = nullptr);

}  // namespace gapset
