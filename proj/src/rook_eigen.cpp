#include "srg/rook_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "json.hpp"

#include "srg/errors.hpp"
#include "srg/float_spectrum.hpp"
#include "srg/kernels.hpp"
#include "srg/modular.hpp"

namespace srg::rook {

Vertex inversion_word(const Permutation& pi) {
  const auto& p = pi.images();
  std::vector<int> a(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) a[i] += p[i] > p[j];
  return Vertex(std::move(a));
}

std::vector<BigInt> mahonian_row(int d) {
  if (d < 1) throw DomainError("Mahonian numbers need d >= 1");
  // M(k, .) from M(k-1, .) by M(k, n) = sum_{j=0}^{min(n, k-1)} M(k-1, n-j).
  std::vector<BigInt> row{1};
  for (int k = 2; k <= d; ++k) {
    std::vector<BigInt> next(row.size() + k - 1);
    for (std::size_t n = 0; n < next.size(); ++n)
      for (int j = 0; j <= std::min<int>(static_cast<int>(n), k - 1); ++j)
        if (n - j < row.size()) next[n] += row[n - j];
    row = std::move(next);
  }
  return row;
}

BigInt mahonian(int d, int n) {
  if (n < 0) throw DomainError("Mahonian numbers need n >= 0");
  const auto row = mahonian_row(d);
  return static_cast<std::size_t>(n) < row.size() ? row[n] : BigInt(0);
}

std::vector<Permutation> permutations_with_inversions(int d, int n) {
  std::vector<Permutation> out;
  if (n < 0 || n > d * (d - 1) / 2) return out;
  // Build one-line notation left to right; position i can contribute at most
  // d - i further inversions, which prunes hopeless prefixes.
  std::vector<int> cur;
  std::vector<bool> used(d + 1, false);
  std::function<void(int)> go = [&](int left) {
    const int i = static_cast<int>(cur.size());
    if (i == d) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    const int rest = d - i - 1;
    int smaller_unused = 0;
    for (int v = 1; v <= d; ++v) {
      if (used[v]) continue;
      // v placed here forms an inversion with every smaller unused value.
      if (smaller_unused <= left && left - smaller_unused <= rest * (rest - 1) / 2) {
        used[v] = true;
        cur.push_back(v);
        go(left - smaller_unused);
        cur.pop_back();
        used[v] = false;
      }
      ++smaller_unused;
    }
  };
  go(n);
  return out;
}

bool SkylineBoard::admits(const Permutation& sigma) const {
  if (sigma.size() != static_cast<int>(column_heights.size())) return false;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma.images()[i] > column_heights[i]) return false;
  return true;  // rows are distinct because sigma is a bijection
}

SkylineBoard skyline_board(const Permutation& pi) {
  const Vertex a = inversion_word(pi);
  SkylineBoard b;
  for (int i = 0; i < a.dim(); ++i) b.column_heights.push_back(a.coords[i] + i + 1);
  return b;
}

PartialPermutohedron admissible_set(const Permutation& pi) {
  PartialPermutohedron pp;
  pp.pi = pi;
  pp.word = inversion_word(pi);
  const int d = pi.size();
  const auto board = skyline_board(pi);
  std::vector<int> cur;
  std::vector<bool> used(d + 1, false);
  std::function<void()> go = [&] {
    const int i = static_cast<int>(cur.size());
    if (i == d) {
      pp.admissible.emplace_back(cur);
      return;
    }
    for (int v = 1; v <= board.column_heights[i] && v <= d; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      go();
      cur.pop_back();
      used[v] = false;
    }
  };
  go();
  std::set<Vertex> seen;
  for (const auto& s : pp.admissible) {
    std::vector<int> x(d);
    for (int i = 0; i < d; ++i) x[i] = pp.word.coords[i] + (i + 1) - s.images()[i];
    pp.points.emplace_back(std::move(x));
    if (!seen.insert(pp.points.back()).second) pp.injective = false;
  }
  return pp;
}

SparseVector f_vector(const SRGraph& g, const Permutation& pi) {
  if (pi.size() != g.d()) throw MismatchError("permutation length differs from d");
  if (pi.inversions() != g.n())
    throw MismatchError(pi.str() + " has " + std::to_string(pi.inversions()) + " inversions, SR(" +
                        std::to_string(g.d()) + "," + std::to_string(g.n()) + ") needs " + std::to_string(g.n()));
  const auto pp = admissible_set(pi);
  if (!pp.injective) throw ConsistencyError("two admissible permutations of " + pi.str() + " share a point");
  SparseVector f(g.d(), g.n());
  for (std::size_t k = 0; k < pp.admissible.size(); ++k) f.add(pp.points[k], pp.admissible[k].sign());
  return f;
}

bool MahonianReport::passed() const {
  const bool rank_ok = all_eigenvectors && leading_terms_distinct && BigInt(rank) == mahonian &&
                       BigInt(num_vectors) == mahonian;
  const bool null_ok = !exact_nullity || BigInt(*exact_nullity) == mahonian;
  const bool min_ok = !min_eig_float || min_eig_is_minus_n;
  return rank_ok && null_ok && min_ok;
}

MahonianReport mahonian_eigenspace_check(int d, int n, const MahonianOptions& opt) {
  if (n < 0 || n >= d * (d - 1) / 2)
    throw DomainError("the Mahonian check needs 0 <= n < C(d,2) (d = " + std::to_string(d) +
                      ", n = " + std::to_string(n) + ")");
  const SRGraph g(d, n, opt.vertex_cap);
  MahonianReport r;
  r.d = d;
  r.n = n;
  r.N = g.size();
  r.mahonian = mahonian(d, n);

  const auto perms = permutations_with_inversions(d, n);
  r.num_vectors = perms.size();
  std::vector<std::optional<SparseVector>> fs(perms.size());
  std::vector<char> ok(perms.size(), 0);
  kernels::for_each_index(perms.size(), opt.exec, [&](std::size_t i) {
    fs[i] = f_vector(g, perms[i]);
    AdjacencyWorkspace ws(g);
    ok[i] = ws.is_eigenvector(*fs[i], -n) && fs[i]->lex_max_index() == g.index_of(inversion_word(perms[i])) &&
            fs[i]->at(fs[i]->lex_max_index()) == 1;
  });
  r.all_eigenvectors = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });

  std::set<std::size_t> leads;
  std::set<std::uint32_t> cols;
  for (const auto& f : fs) {
    leads.insert(f->lex_max_index());
    for (const auto& e : f->entries()) cols.insert(e.index);
  }
  r.leading_terms_distinct = leads.size() == fs.size();
  std::map<std::uint32_t, std::size_t> at;
  for (auto c : cols) at.emplace(c, at.size());
  IntMatrix fm(fs.size(), cols.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& e : fs[i]->entries()) fm(i, at[e.index]) = static_cast<long>(e.value);
  r.rank = fs.empty() ? 0 : srg::rank(fm, opt.exec);

  // rank{F} <= nullity over Q <= nullity mod p, so equality of the outer two
  // pins the exact nullity.
  r.nullity_method = "skipped";
  if (r.N <= opt.modular_cap) {
    const std::size_t upper = modular::nullity_mod_p(g.shifted_adjacency(-n), modular::large_primes(1).front());
    if (upper == r.rank) {
      r.exact_nullity = upper;
      r.nullity_method = "rank-squeeze-mod-p";
    }
  }
  if (!r.exact_nullity && r.N <= opt.bareiss_cap) {
    r.exact_nullity = nullity(g.shifted_adjacency(-n), opt.exec);
    r.nullity_method = "bareiss";
  }
  if (r.N <= opt.float_cap) {
    const auto ev = adjacency_eigenvalues(g);
    r.min_eig_float = ev.front();
    r.min_eig_is_minus_n = std::abs(ev.front() + n) < 1e-8;
  }
  return r;
}

InducedReport induced_subgraph_check(const SRGraph& g, const Permutation& pi, Execution exec) {
  if (pi.inversions() != g.n() || pi.size() != g.d())
    throw MismatchError(pi.str() + " does not have " + std::to_string(g.n()) + " inversions in S_" +
                        std::to_string(g.d()));
  const auto pp = admissible_set(pi);
  InducedReport r;
  r.pi = pi;
  r.n = g.n();
  for (const auto& x : pp.points) r.vertices.push_back(g.index_of(x));
  const std::size_t m = r.vertices.size();

  IntMatrix lap(m, m);
  r.regular = true;
  for (std::size_t i = 0; i < m; ++i) {
    long deg = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && g.adjacent(r.vertices[i], r.vertices[j])) {
        lap(i, j) = -1;
        ++deg;
      }
    lap(i, i) = deg;
    if (deg != g.n()) r.regular = false;
  }

  const auto ev = symmetric_eigenvalues(lap);
  r.max_float_gap = max_integrality_gap(ev);
  const auto cands = integer_candidates(ev, 1e-8);
  std::vector<std::size_t> mult(cands.size());
  kernels::for_each_index(cands.size(), exec, [&](std::size_t k) {
    IntMatrix shifted = lap;
    shifted.add_diagonal(BigInt(-cands[k]));
    mult[k] = nullity(shifted, Execution::serial);
  });
  std::size_t total = 0;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (mult[k] == 0) r.discrepancy = true;
    total += mult[k];
    if (mult[k]) r.laplacian_spectrum[cands[k]] = mult[k];
  }
  r.laplacian_integral = !r.discrepancy && total == m;
  if (r.laplacian_integral) {
    r.distinct_eigs = r.laplacian_spectrum.size();
  } else {
    r.laplacian_spectrum.clear();
    std::vector<double> s = ev;
    r.distinct_eigs = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i == 0 || s[i] - s[i - 1] > 1e-6) ++r.distinct_eigs;
  }
  return r;
}

std::string mahonian_report_json(const MahonianReport& r) {
  nlohmann::ordered_json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["N"] = r.N;
  j["mahonian"] = r.mahonian.get_str();
  j["num_vectors"] = r.num_vectors;
  j["all_eigenvectors"] = r.all_eigenvectors;
  j["rank"] = r.rank;
  j["exact_nullity"] = r.exact_nullity ? nlohmann::ordered_json(*r.exact_nullity) : nlohmann::ordered_json();
  j["nullity_method"] = r.nullity_method;
  j["min_eig_float"] = r.min_eig_float ? nlohmann::ordered_json(*r.min_eig_float) : nlohmann::ordered_json();
  j["min_eig_is_minus_n"] = r.min_eig_is_minus_n;
  j["passed"] = r.passed();
  return j.dump();
}

std::string induced_report_json(const InducedReport& r) {
  nlohmann::ordered_json j;
  j["pi"] = r.pi.str();
  j["n"] = r.n;
  j["size"] = r.vertices.size();
  j["vertices"] = r.vertices;
  j["regular"] = r.regular;
  j["laplacian_integral"] = r.laplacian_integral;
  j["discrepancy"] = r.discrepancy;
  auto spec = nlohmann::ordered_json::array();
  for (const auto& [l, m] : r.laplacian_spectrum) spec.push_back({l, m});
  j["laplacian_spectrum"] = std::move(spec);
  j["distinct_eigs"] = r.distinct_eigs;
  return j.dump();
}

}  // namespace srg::rook
