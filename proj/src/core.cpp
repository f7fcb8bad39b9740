#include "princong/core.hpp"

#include <bit>

namespace princong {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw InputError("carrier must contain at least one element");
  }
  index_.reserve(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
    (void)it;
    if (!inserted) {
      throw InputError("duplicate element label '" + labels_[i] + "'");
    }
  }
}

std::optional<int> Carrier::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Carrier::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw InputError("unknown element label '" + label + "'");
  }
  return it->second;
}

RelMatrix::RelMatrix(int n) : n_(n), words_((n + 63) / 64) {
  if (n <= 0) throw InputError("relation matrix needs a positive carrier size");
  bits_.assign(static_cast<size_t>(n_) * static_cast<size_t>(words_), 0);
}

void RelMatrix::add_diagonal() {
  for (int i = 0; i < n_; ++i) set(i, i);
}

void RelMatrix::transitive_close() {
  for (int k = 0; k < n_; ++k) {
    const size_t rk = row(k);
    for (int i = 0; i < n_; ++i) {
      if (!get(i, k)) continue;
      const size_t ri = row(i);
      for (int w = 0; w < words_; ++w) {
        bits_[ri + static_cast<size_t>(w)] |= bits_[rk + static_cast<size_t>(w)];
      }
    }
  }
}

bool RelMatrix::reflexive() const {
  for (int i = 0; i < n_; ++i) {
    if (!get(i, i)) return false;
  }
  return true;
}

bool RelMatrix::transitive() const {
  for (int i = 0; i < n_; ++i) {
    const size_t ri = row(i);
    for (int k = 0; k < n_; ++k) {
      if (!get(i, k)) continue;
      const size_t rk = row(k);
      for (int w = 0; w < words_; ++w) {
        const std::uint64_t extra =
            bits_[rk + static_cast<size_t>(w)] & ~bits_[ri + static_cast<size_t>(w)];
        if (extra != 0) return false;
      }
    }
  }
  return true;
}

std::optional<std::pair<int, int>> RelMatrix::antisymmetry_violation() const {
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (get(a, b) && get(b, a)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool RelMatrix::subset_of(const RelMatrix& other) const {
  for (size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

RelMatrix RelMatrix::transposed() const {
  RelMatrix t(n_);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (get(a, b)) t.set(b, a);
    }
  }
  return t;
}

RelMatrix RelMatrix::intersected_with(const RelMatrix& other) const {
  RelMatrix r(n_);
  for (size_t w = 0; w < bits_.size(); ++w) {
    r.bits_[w] = bits_[w] & other.bits_[w];
  }
  return r;
}

int RelMatrix::count() const {
  int c = 0;
  for (std::uint64_t w : bits_) c += std::popcount(w);
  return c;
}

std::vector<std::pair<int, int>> RelMatrix::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(count()));
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (get(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace princong
