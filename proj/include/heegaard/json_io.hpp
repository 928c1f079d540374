#pragma once

#include <json.hpp>

#include "heegaard/boundary.hpp"
#include "heegaard/encode.hpp"
#include "heegaard/permdata.hpp"
#include "heegaard/presentation.hpp"
#include "heegaard/search.hpp"
#include "heegaard/surface.hpp"

// Wire formats. Object keys are emitted in sorted order by the JSON
// library, so identical values serialize to identical bytes.
//
//   Presentation: {"generators": ["x","y"],
//                  "relators": [[[1,1],[2,1],[1,-1],[2,-1]]]}
//   Data set:     {"d": 6, "alpha": [[1,2],[3,4,5,6]],
//                  "beta": [[1,6,4],[2,3,5]], "epsilon": [1,1,-1,-1,-1,-1]}
//   Report:       {"d":6,"b":4,"genusS":2,
//                  "x":{"components":1,"curves":2,"boundaryGenus":0,"empty":true},
//                  "y":{...},"closed":false,"presentsGroup":true}
namespace heegaard {

void to_json(nlohmann::json& j, const Presentation& p);
void from_json(const nlohmann::json& j, Presentation& p);

void to_json(nlohmann::json& j, const PermutationDataSet& ds);
void from_json(const nlohmann::json& j, PermutationDataSet& ds);

void to_json(nlohmann::json& j, const SideSummary& s);
void to_json(nlohmann::json& j, const AnalysisReport& r);

void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const SearchResult& r);

// Counts that fit a double-safe integer are numbers; larger ones become
// decimal strings, and saturated ones the string "overflow".
nlohmann::json class_size_json(const ClassSize& size);

// Boundary orbits as lists of [point, quadrant] pairs.
nlohmann::json orbits_json(const OrbitPartition& orbits);

} // namespace heegaard
