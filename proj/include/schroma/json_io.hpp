#ifndef SCHROMA_JSON_IO_HPP
#define SCHROMA_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "schroma/colorings.hpp"
#include "schroma/rational.hpp"
#include "schroma/udg.hpp"
#include "schroma/verifier.hpp"

namespace schroma {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "sphere-chroma/1";

// Graph wire format:
// { "radius": r, "tol": t, "exact": bool, "points": [[x,y,z],...],
//   "edges": [[i,j],...] }
json graph_to_json(const UnitDistanceGraph& g);
UnitDistanceGraph graph_from_json(const json& j);

json cap_params_to_json(const CapStripesParams& p);
CapStripesParams cap_params_from_json(const json& j);

// Report fields mirror VerificationReport; elapsed is intentionally omitted
// so identical seeds give byte-identical payloads.
json report_to_json(const VerificationReport& rep);

json classification_to_json(const Classification& c);
json ratio_match_to_json(const RatioMatch& m);

std::string verdict_name(Verdict v);

UnitDistanceGraph load_graph_file(const std::string& path);
void save_graph_file(const UnitDistanceGraph& g, const std::string& path);

CapStripesParams load_cap_params_file(const std::string& path);

}  // namespace schroma

#endif  // SCHROMA_JSON_IO_HPP
