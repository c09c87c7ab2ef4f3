// Robot states over the joint cover: L(.) pair lists, their contraction to
// canonical L^c(.) with a Goedel-style integer encoding, loop-free path
// representations, the path-class equality test, and the 2D h-signature
// homotopy oracle.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pathclass/jointcover.hpp"
#include "pathclass/robot.hpp"

namespace pathclass {

struct StateRep {
  std::vector<int> region_of_kp;  // region id per key point
  std::uint64_t provenance = 0;   // decomposition fingerprint
};

struct ContractedPair {
  std::vector<int> regions;     // sorted region ids the block occupies
  std::vector<int> key_points;  // sorted key point ids
  auto operator<=>(const ContractedPair&) const = default;
};

struct ContractedRep {
  std::vector<ContractedPair> pairs;  // sorted
  BigInt encoding;
  std::uint64_t provenance = 0;  // decomposition + robot fingerprint

  bool operator==(const ContractedRep& o) const { return pairs == o.pairs; }
  bool operator!=(const ContractedRep& o) const { return !(*this == o); }
};

struct PathRepresentation {
  std::vector<ContractedRep> sequence;  // consecutive-duplicate-free, loop-free
  std::uint64_t provenance = 0;
};

// Maps each key point to its region (throws ContainmentError when a key
// point sits inside an obstacle).
StateRep state_of(const Configuration& config, const Decomposition& d);

// Algorithm 2: collapse same-region links, then contract links across
// S_W-adjacent compact region pairs; canonical fixed point.
ContractedRep contract(const StateRep& state, const Decomposition& d, const RobotComplex& rc);

// Injective Goedel-style encoding of the canonical pair list.
BigInt encode_contracted(const std::vector<ContractedPair>& pairs);

// Contract every sampled configuration, drop consecutive duplicates, excise
// loops. Throws ResolutionError when a key point crosses more than one
// region boundary in a single step.
PathRepresentation path_representation(const std::vector<Configuration>& configs,
                                       const Decomposition& d, const RobotComplex& rc);

// Element-wise sequence equality; throws ComparisonError when the
// representations were built over different covers or robots.
bool same_class(const PathRepresentation& a, const PathRepresentation& b);

// Freely reduced obstacle-ray crossing word; letters +i / -i are crossings
// of the downward ray below obstacle i's representative point.
struct HSignature {
  std::vector<int> word;
  bool operator==(const HSignature& o) const { return word == o.word; }
  bool operator!=(const HSignature& o) const { return word != o.word; }
  std::string str() const;
};

HSignature h_signature(const std::vector<Position>& polyline, const Scene& scene);

// Deterministic interior representative point of an obstacle (the ray
// anchor used by h_signature).
Point obstacle_anchor(const Scene& scene, const Obstacle& ob);

}  // namespace pathclass
