#pragma once

#include <vector>

#include "sfcplace/ilp.hpp"
#include "sfcplace/placement.hpp"

namespace sfcplace {

// Reads X/U/Phi/A/Fhop values of a full model assignment.
Placement decode_placement(const IlpModel& model, const std::vector<Rational>& assignment);

// Full 0/1 (plus continuous) assignment for a placement, with VNFIs
// relabelled into the model's canonical pool order. Throws
// std::invalid_argument when the placement cannot be expressed (unknown
// ids, a VNFI mixing types, more VNFIs of a type than its pool block).
std::vector<Rational> encode_placement(const IlpModel& model, const Placement& placement);

}  // namespace sfcplace
