#pragma once

#include <json.hpp>

#include "kalai/hanner.hpp"
#include "kalai/lab.hpp"
#include "kalai/polytope.hpp"
#include "kalai/proof.hpp"
#include "kalai/special.hpp"

namespace kalai {

using Json = nlohmann::json;

// {"dim": d, "vertices": [["a","b/c",...],...], "facets":[{"normal":[...],
//  "offset":"..."}]}; rationals serialize as "a" or "a/b" with b > 0, so
// canonical polytopes round-trip bit-exactly.
Json to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);
Polytope read_polytope(const std::string& path);
void write_polytope(const Polytope& p, const std::string& path);

// {"n": d, "edges": [[i,j],...]} with 1-based coordinates.
Json to_json(const GPGraph& g);

Json to_json(const ClassificationReport& r);

// {"f_vector": [...], "s": n, "euler_ok": bool}
Json face_summary_json(const FaceLattice& l);

Json to_json(const SpecialCensus& census, const FaceLattice& l);

Json to_json(const PartitionReport& r);
Json to_json(const BoundReport& r);

}  // namespace kalai
