#pragma once

#include <string>
#include <utility>
#include <vector>

#include "princong/poset.hpp"

namespace princong {

// Reflexive transitive relation on a finite carrier.
class QuasiOrder {
 public:
  QuasiOrder(Carrier carrier, RelMatrix rel);

  int size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  const RelMatrix& rel() const { return rel_; }
  bool related(int a, int b) const { return rel_.get(a, b); }

  bool operator==(const QuasiOrder& other) const {
    return carrier_ == other.carrier_ && rel_ == other.rel_;
  }

 private:
  Carrier carrier_;
  RelMatrix rel_;
};

// Least quasiorder containing the seed pairs: the reflexive-transitive
// closure of the seed.
QuasiOrder quasiorder_generated(Carrier carrier,
                                const std::vector<std::pair<int, int>>& seed);
QuasiOrder quasiorder_generated(Carrier carrier,
                                const std::vector<std::pair<std::string, std::string>>& seed);

// Quotient of a quasiorder by its kernel theta = q ∩ q⁻¹. Blocks are ordered
// by least member index and labelled by that member's label; the block order
// [x] <= [y] iff <x, y> ∈ q is antisymmetric by construction.
struct Quotient {
  Poset poset;
  std::vector<int> projection;            // element index -> block index
  std::vector<std::vector<int>> blocks;   // block index -> ascending member indices
};

Quotient quotient_by_kernel(const QuasiOrder& q);

}  // namespace princong
