#pragma once

#include <string>
#include <utility>
#include <vector>

#include "princong/poset.hpp"

namespace princong {

// Total map between posets, stored as a table of target indices. Totality
// and range are validated at construction; monotonicity is not, so that
// report-style checks can describe violating maps.
struct MonotoneMap {
  Poset source;
  Poset target;
  std::vector<int> table;

  MonotoneMap(Poset src, Poset tgt, std::vector<int> tbl);
  static MonotoneMap identity(const Poset& p);

  int operator()(int x) const { return table[static_cast<size_t>(x)]; }

  bool operator==(const MonotoneMap& other) const {
    return source == other.source && target == other.target && table == other.table;
  }
};

bool is_monotone(const MonotoneMap& f);
bool is_bijective(const MonotoneMap& f);
// Bijective with x <= y iff f(x) <= f(y).
bool is_order_isomorphism(const MonotoneMap& f);

// g ∘ f; throws InputError when f's target differs from g's source.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);
// Inverse of an order isomorphism.
MonotoneMap inverse(const MonotoneMap& f);

struct Violation {
  std::string code;
  std::string message;
  std::vector<std::pair<std::string, std::string>> witness;
};

struct Report {
  bool ok = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
};

// Morphism test for the category of bounded posets with 0-separating
// {0,1}-preserving monotone maps: monotone, f(0) = 0, f(1) = 1 and f⁻¹(0)
// = {0}. Each failed clause is reported with a witness. Unbounded source
// or target is an input error.
Report is_catb_morphism(const MonotoneMap& f);

}  // namespace princong
