#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "srg/vertex.hpp"

namespace srg {

class IntMatrix;
class SparseVector;

/// Default vertex cap for graph construction; SRG_VERTEX_CAP overrides it.
inline constexpr std::size_t kDefaultVertexCap = 200'000;

/// kDefaultVertexCap unless the SRG_VERTEX_CAP environment variable holds a
/// positive integer.
std::size_t default_vertex_cap();

/// Number of vertices C(n+d-1, d-1) of SR(d,n). Throws ResourceError when the
/// count does not fit in 64 bits.
std::uint64_t vertex_count(int d, int n);

/// The simplicial rook graph SR(d,n).
///
/// Vertices are the weak compositions of n into d parts in lexicographic
/// order; u ~ v iff they differ in exactly two coordinates. The graph is
/// immutable after construction and safe to share between threads.
/// Adjacency is held as per-row sorted neighbour lists (CSR).
class SRGraph {
 public:
  SRGraph(int d, int n, std::size_t vertex_cap = default_vertex_cap());

  int d() const { return index_.d(); }
  int n() const { return index_.n(); }
  std::size_t size() const { return vertices_.size(); }
  /// (d-1) n
  int degree() const { return (d() - 1) * n(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  const LatticeIndex& index() const { return index_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
  std::size_t index_of(const Vertex& x) const;  // throws DomainError if absent
  bool contains(const Vertex& x) const { return index_.contains(x); }

  std::span<const std::uint32_t> neighbors(std::size_t i) const {
    return {neighbors_.data() + offsets_[i], neighbors_.data() + offsets_[i + 1]};
  }
  bool adjacent(std::size_t u, std::size_t v) const;

  /// Dense 0/1 adjacency matrix.
  IntMatrix adjacency_matrix() const;
  /// A - shift * I, dense.
  IntMatrix shifted_adjacency(long shift) const;

 private:
  LatticeIndex index_;
  std::vector<Vertex> vertices_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> neighbors_;
};

/// Convenience wrapper with the same semantics as the constructor.
inline SRGraph build_graph(int d, int n, std::size_t vertex_cap = default_vertex_cap()) {
  return SRGraph(d, n, vertex_cap);
}

/// L = (d-1) n I - A.
IntMatrix laplacian(const SRGraph& g);

/// Two vertices lie on a common lattice line in direction e_i - e_j iff they
/// agree outside coordinates i and j.
struct LatticeLine {
  Vertex base;
  int i;  // 1-based, i < j
  int j;

  /// Members in lexicographic order; there are base_i + base_j + 1 of them.
  std::vector<Vertex> members() const;
  /// Representative independent of the base point chosen on the line.
  Vertex canonical_base() const;
};

/// Characteristic vector of the lattice line through `base` in direction
/// e_i - e_j (1-based, i < j). Throws IndexError if i == j or out of range,
/// DomainError if base is not a vertex of g.
SparseVector lattice_line_vector(const SRGraph& g, const Vertex& base, int i, int j);

/// One "u v" line per edge (u < v), 0-based lexicographic indices.
void write_edge_list(const SRGraph& g, std::ostream& out);
/// {"d","n","N","degree","vertices":[[...],...]}
void write_graph_json(const SRGraph& g, std::ostream& out);

}  // namespace srg
