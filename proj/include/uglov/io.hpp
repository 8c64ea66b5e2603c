#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "uglov/admissible.hpp"

namespace uglov {

using Json = nlohmann::ordered_json;

Json to_json(const Bipartition& bp);
Json to_json(const Charge& charge);
Json to_json(const ExtNode& node);
Json to_json(const FockVector& v);
Json to_json(const MovePath& path);
Json to_json(const DjmReport& report);
Json to_json(const ConverseReport& report);
Json to_json(const CorollaryReport& report);
Json to_json(const PropbReport& report);

Bipartition bipartition_from_json(const Json& j);

/// Comma-joined residues, e.g. "1,0,2".
std::string join_residues(const ResidueSeq& seq);

/// Three aligned rows: Component, Content, and the natures of bp.
std::string render_nature_table(const Bipartition& bp, const NatureTable& table);
Json nature_table_json(const NatureTable& table);

/// Crystal graph on the Uglov bipartitions of rank <= n, edges labelled by residue.
void write_crystal_dot(std::ostream& out, int n, const CrystalParams& p);

}  // namespace uglov
