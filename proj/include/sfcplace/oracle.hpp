#pragma once

// Ground truth for the solver: a semantic validator for placements and an
// exhaustive search for tiny instances. Works on domain types only.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfcplace/model.hpp"
#include "sfcplace/placement.hpp"
#include "sfcplace/rational.hpp"

namespace sfcplace {

enum class ViolationKind {
  VnfAssignment,      // a VNF is missing or placed more than once
  SfcSharing,         // two VNFs of one SFC on the same VNFI
  TypeMix,            // VNFs of different types on one VNFI
  Conflict,           // conflicting VNFs on one VNFI
  VnfiInconsistent,   // one VNFI reported on several clouds or flavors
  Capacity,           // cloud resource overcommitted
  Delay,              // chain delay above the SFC limit
  Security,           // hop over a link below the SFC's security level
  Bandwidth,          // link traffic above its bandwidth (opt-in)
  CostMismatch,       // reported total cost differs from the flavor prices
  DelayMismatch,      // reported chain delay differs from the topology
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string subject;  // id of the VNF, VNFI, cloud, SFC or link involved
  std::string detail;
};

// The placement references ids that the scenario does not define.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidationOptions {
  bool bandwidth = false;
  // Count ingress (user to first cloud) and egress (last cloud to IoT
  // domain) hops in the chain delay.
  bool endpoints = false;
};

std::vector<Violation> validate_solution(const Scenario& scenario, const Placement& placement,
                                         const ValidationOptions& options = {});

struct BruteForceLimits {
  std::uint64_t max_points = 10'000'000;
};

class SpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteForceResult {
  bool feasible = false;
  std::optional<Rational> objective;
  std::optional<Placement> placement;
  // Size of the search space: sum over VNF groupings of (clouds * flavors)^groups.
  std::uint64_t space = 0;
  std::uint64_t validated = 0;
};

// Minimum-cost valid placement by enumerating every grouping of VNFs into
// VNFIs (same type, distinct SFCs, no conflicts) and every cloud and flavor
// per VNFI. Throws SpaceTooLarge before searching when the space exceeds the
// limit.
BruteForceResult brute_force(const Scenario& scenario, const BruteForceLimits& limits = {},
                             const ValidationOptions& options = {});

enum class MutationKind { MoveVnf, SwapFlavor, InsecureHop };

const char* to_string(MutationKind kind);

struct Mutation {
  MutationKind kind;
  std::string description;
  Placement placement;
};

// Single edits of a valid placement that each break at least one rule:
// moving a VNF onto an incompatible VNFI, changing a VNFI's flavor to one
// with a different price while keeping the reported cost, and moving a VNFI
// so that one of its hops crosses a link below the chain's security level.
std::vector<Mutation> single_mutations(const Scenario& scenario, const Placement& placement);

}  // namespace sfcplace
