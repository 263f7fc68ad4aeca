#pragma once

#include <string>

#include "hilbcover/cover.hpp"
#include "hilbcover/measures.hpp"

namespace hilbcover {

// Accepts either the JSON body schema {"dim": n, "vertices": [[..],..],
// "name": str?} or a generator string: cube | cross | simplex | ngon:k |
// interval:a,b | random_hull:n,seed=s. Generators honor dim_hint where it
// applies.
ConvexBody parse_body_spec(const std::string& text, int dim_hint = 2);

std::string body_to_json(const ConvexBody& body);
std::string measure_to_json(const MeasureEstimate& m);
std::string net_to_json(const Net& net);
std::string cover_to_json(const CoverEstimate& est);

}  // namespace hilbcover
