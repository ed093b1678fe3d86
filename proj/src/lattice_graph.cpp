#include "srg/lattice_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "srg/errors.hpp"
#include "srg/exact_linalg.hpp"
#include "srg/sparse_vector.hpp"

namespace srg {

// ---------------------------------------------------------------------------
// Vertex

int Vertex::total() const {
  int s = 0;
  for (int c : coords) s += c;
  return s;
}

std::string Vertex::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

std::string Vertex::compact() const {
  if (std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0 && c <= 9; })) {
    std::string out;
    for (int c : coords) out += static_cast<char>('0' + c);
    return out;
  }
  return str();
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw OverflowError("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                          ") exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

// ---------------------------------------------------------------------------
// LatticeIndex

LatticeIndex::LatticeIndex(int d, int n) : d_(d), n_(n) {
  if (d < 1) throw DomainError("SR(d,n) requires d >= 1 (got d = " + std::to_string(d) + ")");
  if (n < 0) throw DomainError("SR(d,n) requires n >= 0 (got n = " + std::to_string(n) + ")");
  size_ = binomial(n + d - 1, d - 1);
  // prefix(k, s) = C(s + k, k) for k in [0, d-1], s in [0, n]
  table_.resize(static_cast<std::size_t>(d) * (n + 1));
  for (int k = 0; k < d; ++k)
    for (int s = 0; s <= n; ++s) table_[static_cast<std::size_t>(k) * (n + 1) + s] = binomial(s + k, k);
}

std::uint64_t LatticeIndex::prefix(int parts, int sum) const {
  if (sum < 0) return 0;
  return table_[static_cast<std::size_t>(parts) * (n_ + 1) + sum];
}

std::uint64_t LatticeIndex::count(int parts, int sum) const {
  if (sum < 0) return 0;
  if (parts == 0) return sum == 0 ? 1 : 0;
  return prefix(parts - 1, sum);
}

bool LatticeIndex::contains(const Vertex& x) const {
  if (x.dim() != d_) return false;
  int s = 0;
  for (int c : x.coords) {
    if (c < 0 || c > n_) return false;
    s += c;
  }
  return s == n_;
}

std::size_t LatticeIndex::rank(const int* coords) const {
  // Vertices before x that share x's first i-1 coordinates and have a smaller
  // i-th coordinate: sum_{v < x_i} count(d-i, r-v) = prefix(d-i, r) - prefix(d-i, r-x_i).
  std::uint64_t r = 0;
  int remaining = n_;
  for (int i = 0; i + 1 < d_; ++i) {
    const int parts = d_ - i - 1;
    r += prefix(parts, remaining) - prefix(parts, remaining - coords[i]);
    remaining -= coords[i];
  }
  return static_cast<std::size_t>(r);
}

std::size_t LatticeIndex::rank(const Vertex& x) const { return rank(x.coords.data()); }

Vertex LatticeIndex::unrank(std::size_t r) const {
  if (r >= size_) throw IndexError("vertex rank " + std::to_string(r) + " out of range");
  std::vector<int> c(d_);
  int remaining = n_;
  std::uint64_t left = r;
  for (int i = 0; i + 1 < d_; ++i) {
    const int parts = d_ - i - 1;
    int v = 0;
    for (;; ++v) {
      const std::uint64_t block = count(parts, remaining - v);
      if (left < block) break;
      left -= block;
    }
    c[i] = v;
    remaining -= v;
  }
  c[d_ - 1] = remaining;
  return Vertex(std::move(c));
}

std::shared_ptr<const LatticeIndex> shared_lattice_index(int d, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const LatticeIndex>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{d, n}];
  if (!slot) slot = std::make_shared<const LatticeIndex>(d, n);
  return slot;
}

namespace {

void compositions(int d, int n, std::vector<int>& prefix, std::vector<Vertex>& out) {
  if (static_cast<int>(prefix.size()) == d - 1) {
    prefix.push_back(n);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int x = 0; x <= n; ++x) {
    prefix.push_back(x);
    compositions(d, n - x, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Vertex> enumerate_vertices(int d, int n) {
  if (d < 1) throw DomainError("enumerate_vertices: d must be >= 1 (got " + std::to_string(d) + ")");
  if (n < 0) throw DomainError("enumerate_vertices: n must be >= 0 (got " + std::to_string(n) + ")");
  std::vector<Vertex> out;
  out.reserve(binomial(n + d - 1, d - 1));
  std::vector<int> prefix;
  compositions(d, n, prefix, out);
  return out;
}

// ---------------------------------------------------------------------------
// SRGraph

std::size_t default_vertex_cap() {
  if (const char* env = std::getenv("SRG_VERTEX_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultVertexCap;
}

std::uint64_t vertex_count(int d, int n) {
  if (d < 1) throw DomainError("SR(d,n) requires d >= 1 (got d = " + std::to_string(d) + ")");
  if (n < 0) throw DomainError("SR(d,n) requires n >= 0 (got n = " + std::to_string(n) + ")");
  try {
    return binomial(n + d - 1, d - 1);
  } catch (const OverflowError&) {
    throw ResourceError("SR(" + std::to_string(d) + "," + std::to_string(n) +
                        ") has more than 2^64 vertices");
  }
}

namespace {

LatticeIndex checked_index(int d, int n, std::size_t cap) {
  const std::uint64_t count = vertex_count(d, n);
  if (count > cap)
    throw ResourceError("SR(" + std::to_string(d) + "," + std::to_string(n) + ") has " +
                        std::to_string(count) + " vertices, above the cap of " + std::to_string(cap));
  return LatticeIndex(d, n);
}

}  // namespace

SRGraph::SRGraph(int d, int n, std::size_t vertex_cap) : index_(checked_index(d, n, vertex_cap)) {
  vertices_ = enumerate_vertices(d, n);
  const std::size_t N = vertices_.size();
  const std::size_t deg = static_cast<std::size_t>(degree());
  offsets_.resize(N + 1);
  neighbors_.reserve(N * deg);
  std::vector<int> y;
  for (std::size_t u = 0; u < N; ++u) {
    offsets_[u] = neighbors_.size();
    const auto& x = vertices_[u].coords;
    y = x;
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        const int s = x[i] + x[j];
        for (int a = 0; a <= s; ++a) {
          if (a == x[i]) continue;
          y[i] = a;
          y[j] = s - a;
          neighbors_.push_back(static_cast<std::uint32_t>(index_.rank(y.data())));
        }
        y[i] = x[i];
        y[j] = x[j];
      }
    }
    std::sort(neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]), neighbors_.end());
  }
  offsets_[N] = neighbors_.size();
}

std::size_t SRGraph::index_of(const Vertex& x) const {
  if (!index_.contains(x))
    throw DomainError(x.str() + " is not a vertex of SR(" + std::to_string(d()) + "," +
                      std::to_string(n()) + ")");
  return index_.rank(x);
}

bool SRGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(v));
}

IntMatrix SRGraph::adjacency_matrix() const { return shifted_adjacency(0); }

IntMatrix SRGraph::shifted_adjacency(long shift) const {
  IntMatrix m(size(), size());
  for (std::size_t u = 0; u < size(); ++u) {
    for (auto v : neighbors(u)) m(u, v) = 1;
    if (shift != 0) m(u, u) = -shift;
  }
  return m;
}

IntMatrix laplacian(const SRGraph& g) {
  IntMatrix m(g.size(), g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (auto v : g.neighbors(u)) m(u, v) = -1;
    m(u, u) = g.degree();
  }
  return m;
}

// ---------------------------------------------------------------------------
// Lattice lines

Vertex LatticeLine::canonical_base() const {
  Vertex c = base;
  const int s = c.coords[i - 1] + c.coords[j - 1];
  c.coords[i - 1] = 0;
  c.coords[j - 1] = s;
  return c;
}

std::vector<Vertex> LatticeLine::members() const {
  std::vector<Vertex> out;
  Vertex y = base;
  const int s = base.coords[i - 1] + base.coords[j - 1];
  for (int a = 0; a <= s; ++a) {
    y.coords[i - 1] = a;
    y.coords[j - 1] = s - a;
    out.push_back(y);
  }
  return out;  // increasing in coordinate i, hence lexicographic
}

SparseVector lattice_line_vector(const SRGraph& g, const Vertex& base, int i, int j) {
  if (i == j) throw IndexError("lattice line needs two distinct coordinates (i = j = " + std::to_string(i) + ")");
  if (i < 1 || j < 1 || i > g.d() || j > g.d())
    throw IndexError("lattice line coordinates (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range 1.." + std::to_string(g.d()));
  if (i > j) std::swap(i, j);
  g.index_of(base);  // validates
  SparseVector v(g.d(), g.n());
  for (const auto& y : LatticeLine{base, i, j}.members()) v.add(y, 1);
  return v;
}

// ---------------------------------------------------------------------------
// Export

void write_edge_list(const SRGraph& g, std::ostream& out) {
  for (std::size_t u = 0; u < g.size(); ++u)
    for (auto v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

void write_graph_json(const SRGraph& g, std::ostream& out) {
  nlohmann::ordered_json j;
  j["d"] = g.d();
  j["n"] = g.n();
  j["N"] = g.size();
  j["degree"] = g.degree();
  auto verts = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) verts.push_back(v.coords);
  j["vertices"] = std::move(verts);
  out << j.dump() << '\n';
}

}  // namespace srg
