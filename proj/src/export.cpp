#include "pqbrace/export.hpp"

#include <ostream>

namespace pqbrace {

namespace {

Kind kind_from_name(const std::string& s) {
  if (s == "C") return Kind::C;
  if (s == "M") return Kind::M;
  throw std::invalid_argument("kind_from_name: expected C or M");
}

}  // namespace

BraceDescriptor describe(const SkewBrace& b, bool include_tables) {
  BraceDescriptor d;
  d.p = b.params.p;
  d.q = b.params.q;
  if (b.params.congruent) d.g = b.params.g;
  d.label = b.label;
  d.add_kind = b.add_kind;
  d.circ_iso = circ_iso_type(b);
  d.ker_lambda = static_cast<std::int64_t>(lambda_of(b).kernel.size());
  d.biskew = is_biskew(b);
  if (include_tables) {
    d.add_table = b.add;
    d.circ_table = b.circ;
  }
  return d;
}

nlohmann::json descriptor_to_json(const BraceDescriptor& d) {
  nlohmann::json j{{"label", d.label},
                   {"add_kind", kind_name(d.add_kind)},
                   {"circ_iso", kind_name(d.circ_iso)},
                   {"ker_lambda", d.ker_lambda},
                   {"biskew", d.biskew}};
  if (d.add_table) j["add_table"] = *d.add_table;
  if (d.circ_table) j["circ_table"] = *d.circ_table;
  return j;
}

BraceDescriptor descriptor_from_json(const nlohmann::json& j) {
  BraceDescriptor d;
  d.label = j.at("label").get<std::string>();
  d.add_kind = kind_from_name(j.at("add_kind").get<std::string>());
  d.circ_iso = kind_from_name(j.at("circ_iso").get<std::string>());
  d.ker_lambda = j.at("ker_lambda").get<std::int64_t>();
  d.biskew = j.at("biskew").get<bool>();
  if (j.contains("add_table"))
    d.add_table = j["add_table"].get<std::vector<std::int32_t>>();
  if (j.contains("circ_table"))
    d.circ_table = j["circ_table"].get<std::vector<std::int32_t>>();
  return d;
}

nlohmann::json catalog_to_json(const Params& pr,
                               const std::vector<SkewBrace>& braces,
                               bool include_tables) {
  nlohmann::json j;
  j["p"] = pr.p;
  j["q"] = pr.q;
  j["g"] = pr.congruent ? nlohmann::json(pr.g) : nlohmann::json(nullptr);
  j["braces"] = nlohmann::json::array();
  for (const SkewBrace& b : braces)
    j["braces"].push_back(descriptor_to_json(describe(b, include_tables)));
  return j;
}

std::vector<BraceDescriptor> catalog_from_json(const nlohmann::json& j) {
  std::vector<BraceDescriptor> out;
  std::int64_t p = j.at("p").get<std::int64_t>();
  std::int64_t q = j.at("q").get<std::int64_t>();
  for (const auto& bj : j.at("braces")) {
    BraceDescriptor d = descriptor_from_json(bj);
    d.p = p;
    d.q = q;
    if (!j.at("g").is_null()) d.g = j["g"].get<std::int64_t>();
    out.push_back(std::move(d));
  }
  return out;
}

SkewBrace brace_from_descriptor(const BraceDescriptor& d) {
  if (!d.add_table || !d.circ_table)
    throw std::invalid_argument("brace_from_descriptor: tables missing");
  Params pr = d.g ? make_params_with_g(d.p, d.q, *d.g) : make_params(d.p, d.q);
  return brace_from_tables(pr, d.add_kind, *d.add_table, *d.circ_table, d.label);
}

void write_table_csv(std::ostream& os, const std::vector<std::int32_t>& table,
                     std::int64_t n) {
  for (std::int64_t j = 0; j < n; ++j) os << (j ? "," : "") << j;
  os << '\n';
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j)
      os << (j ? "," : "") << table[i * n + j];
    os << '\n';
  }
}

}  // namespace pqbrace
