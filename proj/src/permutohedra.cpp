#include "srg/permutohedra.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include <omp.h>

#include "json.hpp"

#include "srg/errors.hpp"
#include "srg/kernels.hpp"

namespace srg::perm {

OffsetVector standard_offset(int d) {
  if (d < 1) throw DomainError("standard offset needs d >= 1");
  OffsetVector v;
  for (int i = 1; i <= d; ++i) v.emplace_back(2 * i - 1 - d, 2);
  for (auto& q : v) q.canonicalize();
  return v;
}

std::vector<Rational> permuted_point(const PermutohedronSpec& spec, const Permutation& sigma) {
  const int d = sigma.size();
  if (static_cast<int>(spec.center.size()) != d || static_cast<int>(spec.offset.size()) != d)
    throw MismatchError("permutohedron centre, offset and permutation lengths differ");
  std::vector<Rational> x(d);
  for (int i = 0; i < d; ++i) x[i] = spec.center[i] + spec.offset[sigma.images()[i] - 1];
  return x;
}

SparseVector permutohedron_vector(const SRGraph& g, const PermutohedronSpec& spec) {
  const int d = g.d();
  if (static_cast<int>(spec.center.size()) != d || static_cast<int>(spec.offset.size()) != d)
    throw MismatchError("permutohedron spec has the wrong dimension for SR(" + std::to_string(d) + "," +
                        std::to_string(g.n()) + ")");
  std::vector<Rational> w = spec.offset;
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end())
    throw DomainError("permutohedron offset has repeated entries");

  SparseVector h(d, g.n());
  std::string bad;
  for (const auto& sigma : all_permutations(d)) {
    const auto x = permuted_point(spec, sigma);
    Vertex v;
    bool ok = true;
    for (const auto& q : x) {
      if (q.get_den() != 1 || !q.get_num().fits_sint_p()) {
        ok = false;
        break;
      }
      v.coords.push_back(static_cast<int>(q.get_num().get_si()));
    }
    if (!ok || !g.contains(v)) {
      bad += (bad.empty() ? "" : ", ") + sigma.str();
      continue;
    }
    h.add(v, sigma.sign());
  }
  if (!bad.empty()) throw DomainError("permutohedron leaves V(d,n) for sigma in {" + bad + "}");
  return h;
}

std::uint64_t center_count(int d, int n) {
  if (d < 2) throw DomainError("permutohedron centres need d >= 2");
  const long top = n - static_cast<long>(d - 1) * (d - 2) / 2;
  if (n < d * (d - 1) / 2) return 0;
  return binomial(top, d - 1);
}

std::vector<PermutohedronSpec> enumerate_centers(int d, int n) {
  if (d < 2) throw DomainError("permutohedron centres need d >= 2");
  const int slack = n - d * (d - 1) / 2;
  std::vector<PermutohedronSpec> out;
  if (slack < 0) return out;
  Rational half(d - 1, 2);
  half.canonicalize();
  const auto nu = standard_offset(d);
  for (const auto& b : enumerate_vertices(d, slack)) {
    PermutohedronSpec s;
    for (int c : b.coords) s.center.push_back(Rational(c) + half);
    s.offset = nu;
    out.push_back(std::move(s));
  }
  return out;
}

FamilyCheck verify_permutohedron_family(const SRGraph& g, Execution exec) {
  const auto centers = enumerate_centers(g.d(), g.n());
  const Coeff lambda = -static_cast<Coeff>(g.d()) * (g.d() - 1) / 2;
  // One scatter workspace per thread; each is as long as the vertex set.
  std::vector<std::unique_ptr<AdjacencyWorkspace>> spaces(static_cast<std::size_t>(kernels::max_threads()));
  std::vector<char> ok(centers.size(), 0);
  kernels::for_each_index(centers.size(), exec, [&](std::size_t i) {
    auto& ws = spaces[exec == Execution::serial ? 0 : static_cast<std::size_t>(omp_get_thread_num())];
    if (!ws) ws = std::make_unique<AdjacencyWorkspace>(g);
    ok[i] = ws->is_eigenvector(permutohedron_vector(g, centers[i]), lambda);
  });
  FamilyCheck r;
  r.count = centers.size();
  r.failures = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
  return r;
}

std::vector<LatticeLine> distinct_lattice_lines(int d, int n) {
  // Each line in direction (i,j) has exactly one member with coordinate i = 0.
  std::vector<LatticeLine> out;
  for (const auto& v : enumerate_vertices(d, n))
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        if (v.coords[i - 1] == 0) out.push_back(LatticeLine{v, i, j});
  return out;
}

SpanReport span_conjecture_check(int d, int n, std::size_t vertex_cap, Execution exec) {
  const SRGraph g(d, n, vertex_cap);
  SpanReport r;
  r.d = d;
  r.n = n;
  r.N = g.size();
  const auto lines = distinct_lattice_lines(d, n);
  r.num_lines = lines.size();
  r.num_centers = d >= 2 ? center_count(d, n) : 0;
  IntMatrix m(lines.size(), g.size());
  for (std::size_t k = 0; k < lines.size(); ++k)
    for (const auto& y : lines[k].members()) m(k, g.index_of(y)) = 1;
  r.rank_lines = rank(m, exec);
  r.rank_sum_equals_N = r.rank_lines + r.num_centers == r.N;
  r.verdict = std::string(r.rank_sum_equals_N ? "holds" : "fails") + " at (" + std::to_string(d) + "," +
              std::to_string(n) + ")";
  return r;
}

std::size_t permutohedron_family_rank(const SRGraph& g, Execution exec) {
  const auto centers = enumerate_centers(g.d(), g.n());
  if (centers.empty()) return 0;
  std::vector<SparseVector> vs;
  std::set<std::uint32_t> cols;
  for (const auto& c : centers) {
    vs.push_back(permutohedron_vector(g, c));
    for (const auto& e : vs.back().entries()) cols.insert(e.index);
  }
  std::map<std::uint32_t, std::size_t> at;
  for (auto c : cols) at.emplace(c, at.size());
  IntMatrix m(vs.size(), cols.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (const auto& e : vs[i].entries()) m(i, at[e.index]) = static_cast<long>(e.value);
  return rank(m, exec);
}

Rational coverage_ratio(int d, int n) {
  Rational r(BigInt(std::to_string(center_count(d, n))), BigInt(std::to_string(vertex_count(d, n))));
  r.canonicalize();
  return r;
}

std::optional<int> first_n_with_coverage_above(int d, const Rational& threshold, int n_max) {
  for (int n = 1; n <= n_max; ++n)
    if (coverage_ratio(d, n) > threshold) return n;
  return std::nullopt;
}

std::string span_report_json(const SpanReport& r) {
  nlohmann::ordered_json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["N"] = r.N;
  j["num_lines"] = r.num_lines;
  j["num_centers"] = r.num_centers;
  j["rank_lines"] = r.rank_lines;
  j["rank_sum_equals_N"] = r.rank_sum_equals_N;
  j["verdict"] = r.verdict;
  return j.dump();
}

}  // namespace srg::perm
