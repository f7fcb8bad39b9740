#include "princong/iso.hpp"

#include <array>

namespace princong {

namespace {

struct SearchState {
  const Poset& p;
  const Poset& q;
  const std::function<bool(const MonotoneMap&)>& visit;
  std::vector<std::array<int, 3>> p_profile;
  std::vector<std::array<int, 3>> q_profile;
  std::vector<int> assignment;
  std::vector<bool> used;
  bool stopped = false;

  bool consistent(int x, int y) const {
    if (p_profile[static_cast<size_t>(x)] != q_profile[static_cast<size_t>(y)]) {
      return false;
    }
    for (int prev = 0; prev < x; ++prev) {
      const int img = assignment[static_cast<size_t>(prev)];
      if (p.leq(prev, x) != q.leq(img, y)) return false;
      if (p.leq(x, prev) != q.leq(y, img)) return false;
    }
    return true;
  }

  // Depth-first over source elements in index order; target candidates in
  // index order give lexicographically ordered assignments.
  void run(int x) {
    if (stopped) return;
    if (x == p.size()) {
      if (!visit(MonotoneMap(p, q, assignment))) stopped = true;
      return;
    }
    for (int y = 0; y < q.size() && !stopped; ++y) {
      if (used[static_cast<size_t>(y)]) continue;
      if (!consistent(x, y)) continue;
      assignment[static_cast<size_t>(x)] = y;
      used[static_cast<size_t>(y)] = true;
      run(x + 1);
      used[static_cast<size_t>(y)] = false;
    }
  }
};

std::vector<std::array<int, 3>> profiles(const Poset& p) {
  const auto down = p.downset_sizes();
  const auto up = p.upset_sizes();
  const auto h = p.heights();
  std::vector<std::array<int, 3>> out(static_cast<size_t>(p.size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = {down[i], up[i], h[i]};
  return out;
}

}  // namespace

bool enumerate_isomorphisms(const Poset& p, const Poset& q,
                            const std::function<bool(const MonotoneMap&)>& visit) {
  if (p.size() != q.size()) return true;
  SearchState state{p,
                    q,
                    visit,
                    profiles(p),
                    profiles(q),
                    std::vector<int>(static_cast<size_t>(p.size()), -1),
                    std::vector<bool>(static_cast<size_t>(q.size()), false)};
  state.run(0);
  return !state.stopped;
}

std::vector<MonotoneMap> all_isomorphisms(const Poset& p, const Poset& q) {
  std::vector<MonotoneMap> out;
  enumerate_isomorphisms(p, q, [&out](const MonotoneMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::optional<MonotoneMap> find_order_isomorphism(const Poset& p, const Poset& q) {
  std::optional<MonotoneMap> found;
  enumerate_isomorphisms(p, q, [&found](const MonotoneMap& f) {
    found = f;
    return false;
  });
  return found;
}

bool order_isomorphic(const Poset& p, const Poset& q) {
  return find_order_isomorphism(p, q).has_value();
}

}  // namespace princong
