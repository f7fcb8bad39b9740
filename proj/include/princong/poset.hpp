#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "princong/core.hpp"

namespace princong {

// Finite partially ordered set with optional least/greatest elements cached
// at construction. Immutable after construction.
class Poset {
 public:
  // Validates reflexivity, transitivity and antisymmetry.
  Poset(Carrier carrier, RelMatrix rel);
  // One-point poset labelled "0".
  Poset();

  // Order generated by `le` pairs; reflexive-transitive closure is applied,
  // then antisymmetry is validated.
  static Poset from_le_pairs(Carrier carrier,
                             const std::vector<std::pair<std::string, std::string>>& le);
  static Poset chain(std::vector<std::string> labels);

  int size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  const RelMatrix& rel() const { return rel_; }
  const std::string& label(int i) const { return carrier_.label(i); }
  int index_of(const std::string& label) const { return carrier_.index_of(label); }

  bool leq(int a, int b) const { return rel_.get(a, b); }
  bool lt(int a, int b) const { return a != b && rel_.get(a, b); }

  std::optional<int> least() const { return least_; }
  std::optional<int> greatest() const { return greatest_; }
  bool bounded() const { return least_.has_value() && greatest_.has_value(); }
  int zero() const;  // InputError when no least element
  int one() const;   // InputError when no greatest element

  // Hasse edges (a, b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
  // Deterministic topological order: repeatedly removes the least-index
  // remaining minimal element.
  std::vector<int> linear_extension() const;

  std::vector<int> downset_sizes() const;
  std::vector<int> upset_sizes() const;
  // Length of the longest chain ending at each element (minimal elements
  // have height 0).
  std::vector<int> heights() const;

  bool operator==(const Poset& other) const {
    return carrier_ == other.carrier_ && rel_ == other.rel_;
  }

 private:
  Carrier carrier_;
  RelMatrix rel_;
  std::optional<int> least_;
  std::optional<int> greatest_;
};

// Equality up to the order in which the carrier lists its labels.
bool same_poset_by_labels(const Poset& p, const Poset& q);

// Pair x <= y of a poset.
struct OrderedPair {
  int lo = 0;
  int hi = 0;
};

// All ordered pairs of P, row-major.
std::vector<OrderedPair> ordered_pairs(const Poset& p);

}  // namespace princong
