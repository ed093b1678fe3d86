#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace srg {

/// A lattice point of the n-th dilate of the standard simplex: d nonnegative
/// coordinates summing to n. Ordered lexicographically.
struct Vertex {
  std::vector<int> coords;

  Vertex() = default;
  explicit Vertex(std::vector<int> c) : coords(std::move(c)) {}
  Vertex(std::initializer_list<int> c) : coords(c) {}

  int dim() const { return static_cast<int>(coords.size()); }
  int total() const;
  int operator[](std::size_t i) const { return coords[i]; }

  auto operator<=>(const Vertex&) const = default;
  bool operator==(const Vertex&) const = default;

  /// "(1,0,2)"
  std::string str() const;
  /// "102" when every coordinate is a single digit, otherwise str().
  std::string compact() const;
};

/// Binomial coefficient in 64 bits; throws OverflowError if it does not fit.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Lexicographic ranking of weak compositions of n into d parts.
///
/// rank(x) is the position of x in the lexicographically sorted list of
/// V(d,n); it is computed arithmetically in O(d) from hockey-stick sums of
/// binomials, so no lookup table over the vertices is needed.
class LatticeIndex {
 public:
  LatticeIndex(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t size() const { return size_; }

  bool contains(const Vertex& x) const;
  /// Requires contains(x).
  std::size_t rank(const Vertex& x) const;
  std::size_t rank(const int* coords) const;
  Vertex unrank(std::size_t r) const;

 private:
  // count_[k][s] = number of weak compositions of s into k parts.
  std::uint64_t count(int parts, int sum) const;
  // tail_[k][s] = sum_{v <= s} count(k, v) = C(s + k, k).
  std::uint64_t prefix(int parts, int sum) const;

  int d_;
  int n_;
  std::size_t size_;
  std::vector<std::uint64_t> table_;  // (d+1) x (n+1) of C(s + k, k)
};

/// Process-wide cache of ranking tables; thread safe.
std::shared_ptr<const LatticeIndex> shared_lattice_index(int d, int n);

/// All weak compositions of n into d parts in lexicographic order.
/// Throws DomainError for d < 1 or n < 0.
std::vector<Vertex> enumerate_vertices(int d, int n);

}  // namespace srg
