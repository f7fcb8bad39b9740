#include "princong/quasiorder.hpp"

namespace princong {

QuasiOrder::QuasiOrder(Carrier carrier, RelMatrix rel)
    : carrier_(std::move(carrier)), rel_(std::move(rel)) {
  if (rel_.size() != carrier_.size()) {
    throw InputError("relation size does not match carrier size");
  }
  if (!rel_.reflexive()) throw InputError("quasiorder is not reflexive");
  if (!rel_.transitive()) throw InputError("quasiorder is not transitive");
}

QuasiOrder quasiorder_generated(Carrier carrier,
                                const std::vector<std::pair<int, int>>& seed) {
  RelMatrix rel(carrier.size());
  for (const auto& [a, b] : seed) {
    if (a < 0 || a >= carrier.size() || b < 0 || b >= carrier.size()) {
      throw InputError("seed pair index out of range");
    }
    rel.set(a, b);
  }
  rel.add_diagonal();
  rel.transitive_close();
  return QuasiOrder(std::move(carrier), std::move(rel));
}

QuasiOrder quasiorder_generated(
    Carrier carrier, const std::vector<std::pair<std::string, std::string>>& seed) {
  std::vector<std::pair<int, int>> indexed;
  indexed.reserve(seed.size());
  for (const auto& [a, b] : seed) {
    indexed.emplace_back(carrier.index_of(a), carrier.index_of(b));
  }
  return quasiorder_generated(std::move(carrier), indexed);
}

Quotient quotient_by_kernel(const QuasiOrder& q) {
  const int n = q.size();

  // theta-blocks keyed by least member index.
  std::vector<int> rep(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (rep[static_cast<size_t>(x)] != -1) continue;
    rep[static_cast<size_t>(x)] = x;
    for (int y = x + 1; y < n; ++y) {
      if (q.related(x, y) && q.related(y, x)) rep[static_cast<size_t>(y)] = x;
    }
  }

  std::vector<int> block_index(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> blocks;
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    if (rep[static_cast<size_t>(x)] != x) continue;
    block_index[static_cast<size_t>(x)] = static_cast<int>(blocks.size());
    blocks.push_back({});
    labels.push_back(q.carrier().label(x));
  }
  std::vector<int> projection(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    const int b = block_index[static_cast<size_t>(rep[static_cast<size_t>(x)])];
    projection[static_cast<size_t>(x)] = b;
    blocks[static_cast<size_t>(b)].push_back(x);
  }

  const int m = static_cast<int>(blocks.size());
  RelMatrix rel(m);
  for (int x = 0; x < n; ++x) {
    if (rep[static_cast<size_t>(x)] != x) continue;
    for (int y = 0; y < n; ++y) {
      if (rep[static_cast<size_t>(y)] != y) continue;
      if (q.related(x, y)) {
        rel.set(projection[static_cast<size_t>(x)], projection[static_cast<size_t>(y)]);
      }
    }
  }

  return Quotient{Poset(Carrier(std::move(labels)), std::move(rel)),
                  std::move(projection), std::move(blocks)};
}

}  // namespace princong
