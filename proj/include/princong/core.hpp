#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace princong {

// Malformed or semantically invalid input: unknown labels, relations that
// violate order axioms, cover sets that do not describe a bounded lattice.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or search exceeded its configured budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem-backed invariant failed at runtime. Signals a bug or a broken
// precondition, never a recoverable input condition.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Finite set of distinct opaque labels. All algorithms operate on indices
// 0..n-1; labels exist only at the I/O boundary.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(const std::string& label) const;
  int index_of(const std::string& label) const;  // InputError on unknown label
  bool contains(const std::string& label) const { return find(label).has_value(); }

  bool operator==(const Carrier& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// Dense n x n boolean relation stored as per-row bit vectors, so closure,
// inclusion and intersection are word operations.
class RelMatrix {
 public:
  explicit RelMatrix(int n);

  int size() const { return n_; }
  bool get(int a, int b) const {
    return (bits_[row(a) + static_cast<size_t>(b >> 6)] >> (b & 63)) & 1u;
  }
  void set(int a, int b) { bits_[row(a) + static_cast<size_t>(b >> 6)] |= word(b); }
  void unset(int a, int b) { bits_[row(a) + static_cast<size_t>(b >> 6)] &= ~word(b); }

  void add_diagonal();
  // Warshall closure by row OR; one k-sweep suffices.
  void transitive_close();

  bool reflexive() const;
  bool transitive() const;
  // First (a, b), a < b, with both directions present; nullopt if antisymmetric.
  std::optional<std::pair<int, int>> antisymmetry_violation() const;

  bool subset_of(const RelMatrix& other) const;
  RelMatrix transposed() const;
  RelMatrix intersected_with(const RelMatrix& other) const;

  int count() const;
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const RelMatrix& other) const = default;

 private:
  size_t row(int a) const { return static_cast<size_t>(a) * static_cast<size_t>(words_); }
  static std::uint64_t word(int b) { return std::uint64_t{1} << (b & 63); }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace princong
