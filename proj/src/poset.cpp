#include "princong/poset.hpp"

#include <algorithm>

namespace princong {

namespace {

std::optional<int> find_least(const RelMatrix& rel) {
  const int n = rel.size();
  for (int c = 0; c < n; ++c) {
    bool below_all = true;
    for (int x = 0; x < n; ++x) {
      if (!rel.get(c, x)) {
        below_all = false;
        break;
      }
    }
    if (below_all) return c;
  }
  return std::nullopt;
}

std::optional<int> find_greatest(const RelMatrix& rel) {
  const int n = rel.size();
  for (int c = 0; c < n; ++c) {
    bool above_all = true;
    for (int x = 0; x < n; ++x) {
      if (!rel.get(x, c)) {
        above_all = false;
        break;
      }
    }
    if (above_all) return c;
  }
  return std::nullopt;
}

}  // namespace

Poset::Poset(Carrier carrier, RelMatrix rel)
    : carrier_(std::move(carrier)), rel_(std::move(rel)) {
  if (rel_.size() != carrier_.size()) {
    throw InputError("relation size does not match carrier size");
  }
  if (!rel_.reflexive()) throw InputError("order relation is not reflexive");
  if (!rel_.transitive()) throw InputError("order relation is not transitive");
  if (auto viol = rel_.antisymmetry_violation()) {
    throw InputError("order relation is not antisymmetric: elements '" +
                     carrier_.label(viol->first) + "' and '" + carrier_.label(viol->second) +
                     "' are mutually comparable");
  }
  least_ = find_least(rel_);
  greatest_ = find_greatest(rel_);
}

namespace {
RelMatrix one_point_rel() {
  RelMatrix rel(1);
  rel.add_diagonal();
  return rel;
}
}  // namespace

Poset::Poset() : Poset(Carrier({"0"}), one_point_rel()) {}

Poset Poset::from_le_pairs(Carrier carrier,
                           const std::vector<std::pair<std::string, std::string>>& le) {
  RelMatrix rel(carrier.size());
  for (const auto& [a, b] : le) {
    rel.set(carrier.index_of(a), carrier.index_of(b));
  }
  rel.add_diagonal();
  rel.transitive_close();
  return Poset(std::move(carrier), std::move(rel));
}

Poset Poset::chain(std::vector<std::string> labels) {
  Carrier carrier(std::move(labels));
  RelMatrix rel(carrier.size());
  for (int a = 0; a < carrier.size(); ++a) {
    for (int b = a; b < carrier.size(); ++b) rel.set(a, b);
  }
  return Poset(std::move(carrier), std::move(rel));
}

int Poset::zero() const {
  if (!least_) throw InputError("poset has no least element");
  return *least_;
}

int Poset::one() const {
  if (!greatest_) throw InputError("poset has no greatest element");
  return *greatest_;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool is_cover = true;
      for (int c = 0; c < n; ++c) {
        if (c != a && c != b && lt(a, c) && lt(c, b)) {
          is_cover = false;
          break;
        }
      }
      if (is_cover) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> Poset::linear_extension() const {
  const int n = size();
  std::vector<bool> placed(static_cast<size_t>(n), false);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  for (int step = 0; step < n; ++step) {
    for (int c = 0; c < n; ++c) {
      if (placed[static_cast<size_t>(c)]) continue;
      bool minimal = true;
      for (int below = 0; below < n; ++below) {
        if (below != c && !placed[static_cast<size_t>(below)] && lt(below, c)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(c);
        placed[static_cast<size_t>(c)] = true;
        break;
      }
    }
  }
  return out;
}

std::vector<int> Poset::downset_sizes() const {
  const int n = size();
  std::vector<int> out(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int below = 0; below < n; ++below) {
      if (leq(below, x)) ++out[static_cast<size_t>(x)];
    }
  }
  return out;
}

std::vector<int> Poset::upset_sizes() const {
  const int n = size();
  std::vector<int> out(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int above = 0; above < n; ++above) {
      if (leq(x, above)) ++out[static_cast<size_t>(x)];
    }
  }
  return out;
}

std::vector<int> Poset::heights() const {
  const int n = size();
  std::vector<int> h(static_cast<size_t>(n), 0);
  for (int x : linear_extension()) {
    int best = 0;
    for (int below = 0; below < n; ++below) {
      if (lt(below, x)) best = std::max(best, h[static_cast<size_t>(below)] + 1);
    }
    h[static_cast<size_t>(x)] = best;
  }
  return h;
}

bool same_poset_by_labels(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  std::vector<int> to_q(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    auto j = q.carrier().find(p.label(i));
    if (!j) return false;
    to_q[static_cast<size_t>(i)] = *j;
  }
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) !=
          q.leq(to_q[static_cast<size_t>(a)], to_q[static_cast<size_t>(b)])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<OrderedPair> ordered_pairs(const Poset& p) {
  std::vector<OrderedPair> out;
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (p.leq(a, b)) out.push_back(OrderedPair{a, b});
    }
  }
  return out;
}

}  // namespace princong
