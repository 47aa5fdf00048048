#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqbrace/skew_brace.hpp"

namespace pqbrace {

/// Flat record describing one brace, the unit of JSON/CSV export.
struct BraceDescriptor {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::optional<std::int64_t> g;
  std::string label;
  Kind add_kind = Kind::C;
  Kind circ_iso = Kind::C;
  std::int64_t ker_lambda = 0;
  bool biskew = false;
  std::optional<std::vector<std::int32_t>> add_table;
  std::optional<std::vector<std::int32_t>> circ_table;
};

BraceDescriptor describe(const SkewBrace& b, bool include_tables);

nlohmann::json descriptor_to_json(const BraceDescriptor& d);
BraceDescriptor descriptor_from_json(const nlohmann::json& j);

/// Top-level schema: {p, q, g, braces: [descriptor...]}.
nlohmann::json catalog_to_json(const Params& pr,
                               const std::vector<SkewBrace>& braces,
                               bool include_tables);
std::vector<BraceDescriptor> catalog_from_json(const nlohmann::json& j);

/// Rebuilds the brace value from a descriptor that carries both tables.
SkewBrace brace_from_descriptor(const BraceDescriptor& d);

/// One Cayley table as CSV: header row of flat indices, then rows.
void write_table_csv(std::ostream& os, const std::vector<std::int32_t>& table,
                     std::int64_t n);

}  // namespace pqbrace
