#include "srg/spectral_analysis.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <ostream>

#include "json.hpp"

#include "srg/errors.hpp"
#include "srg/float_spectrum.hpp"
#include "srg/kernels.hpp"
#include "srg/modular.hpp"
#include "srg/sparse_vector.hpp"

namespace srg::spectral {

std::size_t Spectrum::total() const {
  std::size_t t = 0;
  for (const auto& [l, m] : pairs) t += m;
  return t;
}

Spectrum integral_spectrum(const SRGraph& g, Screen screen, Execution exec) {
  Spectrum s;
  s.N = g.size();
  const long delta = g.degree();
  std::vector<long> cands;
  if (screen == Screen::exact_only) {
    s.method = "exact-only";
    for (long l = -delta; l <= delta; ++l) cands.push_back(l);
  } else {
    s.method = "float-screen";
    const std::size_t N = g.size();
    std::vector<double> dense(N * N, 0.0);
    for (std::size_t u = 0; u < N; ++u)
      for (auto v : g.neighbors(u)) dense[u * N + v] = 1.0;
    const auto ev = symmetric_eigenvalues(dense, N);
    cands = integer_candidates(ev, kScreenTolerance);
    if (max_integrality_gap(ev) >= kScreenTolerance) {
      s.non_integral = true;
      const auto res = symmetric_residuals(dense, N);
      for (std::size_t i = 0; i < ev.size(); ++i)
        if (std::abs(ev[i] - std::round(ev[i])) >= kScreenTolerance) s.evidence.emplace_back(ev[i], res[i]);
    }
  }

  // One exact nullity per candidate; the jobs share only the read-only graph.
  std::vector<std::size_t> mult(cands.size(), 0);
  kernels::for_each_index(cands.size(), exec, [&](std::size_t i) {
    mult[i] = nullity(g.shifted_adjacency(cands[i]), Execution::serial);
  });
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (mult[i]) s.pairs[cands[i]] = mult[i];
  s.certified = !s.non_integral && s.total() == s.N;
  return s;
}

std::map<long, std::size_t> laplacian_spectrum(const std::map<long, std::size_t>& adjacency, long degree) {
  std::map<long, std::size_t> out;
  for (const auto& [l, m] : adjacency) out[degree - l] += m;
  return out;
}

bool trace_identities_hold(const std::map<long, std::size_t>& spectrum, std::size_t N, std::uint64_t edges) {
  BigInt count = 0, t1 = 0, t2 = 0;
  for (const auto& [l, m] : spectrum) {
    const BigInt bm(std::to_string(m));
    count += bm;
    t1 += BigInt(l) * bm;
    t2 += BigInt(l) * BigInt(l) * bm;
  }
  return count == BigInt(std::to_string(N)) && t1 == 0 && t2 == 2 * BigInt(std::to_string(edges));
}

BigInt spanning_trees_formula(int n) {
  if (n < 1) throw DomainError("spanning-tree formula needs n >= 1");
  const BigInt N = n;
  BigInt num = 32;
  BigInt pw;
  mpz_pow_ui(pw.get_mpz_t(), BigInt(2 * n + 3).get_mpz_t(), static_cast<unsigned long>(n - 1) * (n - 2) / 2);
  num *= pw;
  for (long a = n + 2; a <= 2L * n + 2; ++a) num *= BigInt(a) * a * a;
  BigInt den;
  if (n % 2 == 1) {
    const BigInt c = 3 * N + 5;
    den = 3 * (N + 1) * (N + 1) * (N + 2) * c * c * c;
  } else {
    const BigInt c = 3 * N + 4;
    den = 3 * (N + 1) * (N + 2) * (N + 2) * c * c * c;
  }
  Rational q(num, den);
  q.canonicalize();
  if (q.get_den() != 1 || sgn(q) <= 0)
    throw ConsistencyError("spanning-tree formula gave " + q.get_str() + " at n = " + std::to_string(n));
  return q.get_num();
}

BigInt spanning_trees_matrix_tree(const SRGraph& g, std::size_t deleted, std::size_t cap, Execution exec) {
  if (g.size() > cap)
    throw ResourceError("matrix-tree determinant capped at N = " + std::to_string(cap) + " (got " +
                        std::to_string(g.size()) + ")");
  if (deleted >= g.size()) throw IndexError("deleted vertex out of range");
  return determinant(laplacian(g).without(deleted, deleted), exec);
}

Rational spanning_trees_from_spectrum(const std::map<long, std::size_t>& laplacian, std::size_t N) {
  Rational p = 1;
  for (const auto& [l, m] : laplacian) {
    if (l == 0) continue;
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), BigInt(l).get_mpz_t(), m);
    p *= pw;
  }
  p /= BigInt(std::to_string(N));
  p.canonicalize();
  return p;
}

// ---------------------------------------------------------------------------
// Quotient matrices

namespace {

Vertex sorted_copy(const Vertex& x) {
  Vertex s = x;
  std::sort(s.coords.begin(), s.coords.end());
  return s;
}

BigInt orbit_size(const Vertex& rep) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(rep.dim()));
  std::size_t i = 0;
  while (i < rep.coords.size()) {
    std::size_t j = i;
    while (j < rep.coords.size() && rep.coords[j] == rep.coords[i]) ++j;
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), j - i);
    f /= r;
    i = j;
  }
  return f;
}

// Representatives in lexicographic order of their sorted coordinates.
std::vector<Vertex> representatives(int d, int n) {
  std::vector<Vertex> out;
  std::vector<int> cur;
  // nondecreasing sequences of length d summing to n
  auto go = [&](auto&& self, int left, int lo) -> void {
    if (static_cast<int>(cur.size()) == d - 1) {
      if (left >= lo) {
        cur.push_back(left);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    const int slots = d - static_cast<int>(cur.size());
    for (int v = lo; v * slots <= left; ++v) {
      cur.push_back(v);
      self(self, left - v, v);
      cur.pop_back();
    }
  };
  if (d == 1) {
    out.emplace_back(std::vector<int>{n});
    return out;
  }
  go(go, n, 0);
  return out;
}

}  // namespace

QuotientMatrix quotient_matrix(int d, int n) {
  if (d < 1 || n < 0) throw DomainError("quotient needs d >= 1 and n >= 0");
  QuotientMatrix q;
  q.d = d;
  q.n = n;
  q.orbits = representatives(d, n);
  std::map<Vertex, std::size_t> at;
  for (const auto& r : q.orbits) {
    at.emplace(r, at.size());
    q.orbit_sizes.push_back(orbit_size(r));
  }
  const std::size_t k = q.orbits.size();
  q.entries = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& x = q.orbits[i].coords;
    Vertex y = q.orbits[i];
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        const int s = x[a] + x[b];
        for (int t = 0; t <= s; ++t) {
          if (t == x[a]) continue;
          y.coords[a] = t;
          y.coords[b] = s - t;
          q.entries(i, at.at(sorted_copy(y))) += 1;
        }
        y.coords[a] = x[a];
        y.coords[b] = x[b];
      }
  }
  return q;
}

QuotientMatrix quotient_matrix(const SRGraph& g) {
  QuotientMatrix q;
  q.d = g.d();
  q.n = g.n();
  q.orbits = representatives(g.d(), g.n());
  std::map<Vertex, std::size_t> at;
  for (const auto& r : q.orbits) {
    at.emplace(r, at.size());
    q.orbit_sizes.push_back(orbit_size(r));
  }
  const std::size_t k = q.orbits.size();
  std::vector<std::size_t> block(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) block[u] = at.at(sorted_copy(g.vertex(u)));

  q.entries = IntMatrix(k, k);
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> witness(k);
  std::vector<long> row(k);
  for (std::size_t u = 0; u < g.size(); ++u) {
    std::fill(row.begin(), row.end(), 0);
    for (auto v : g.neighbors(u)) ++row[block[v]];
    const std::size_t i = block[u];
    if (!seen[i]) {
      seen[i] = true;
      witness[i] = u;
      for (std::size_t j = 0; j < k; ++j) q.entries(i, j) = row[j];
      continue;
    }
    for (std::size_t j = 0; j < k; ++j)
      if (q.entries(i, j) != row[j])
        throw ConsistencyError("partition is not equitable: " + g.vertex(u).str() + " and " +
                               g.vertex(witness[i]).str() + " see different counts in orbit of " +
                               q.orbits[j].str());
  }
  return q;
}

std::optional<bool> lifts_to_eigenvector(const SRGraph& g, const QuotientMatrix& q, long lambda) {
  IntMatrix m = q.entries;
  m.add_diagonal(BigInt(-lambda));
  const auto kernel = null_space(m);
  if (kernel.empty()) return false;
  const auto& v = kernel.front().entries;  // primitive integer vector
  std::map<Vertex, std::size_t> at;
  for (std::size_t i = 0; i < q.orbits.size(); ++i) at.emplace(q.orbits[i], i);
  std::vector<Coeff> dense(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    const Vertex s = sorted_copy(g.vertex(u));
    const BigInt& c = v[at.at(s)].get_num();
    if (!c.fits_slong_p()) return std::nullopt;
    dense[u] = c.get_si();
  }
  try {
    return is_eigenvector(g, SparseVector::from_dense(g.d(), g.n(), dense), lambda);
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

QuotientReport quotient_spectrum_integral(int d, int n, const QuotientOptions& opt) {
  const QuotientMatrix q = quotient_matrix(d, n);
  QuotientReport r;
  r.d = d;
  r.n = n;
  r.k = q.orbits.size();
  const std::size_t k = r.k;

  // D^{1/2} P D^{-1/2} is symmetric because |O_i| f(i,j) = |O_j| f(j,i).
  std::vector<double> sym(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      sym[i * k + j] = std::sqrt(q.orbit_sizes[i].get_d() / q.orbit_sizes[j].get_d()) * q.entries(i, j).get_d();
  const auto ev = symmetric_eigenvalues(sym, k);
  r.max_float_gap = max_integrality_gap(ev);
  const auto cands = integer_candidates(ev, kScreenTolerance);

  std::vector<std::size_t> mult(cands.size(), 0);
  bool exact_total = false;
  if (k <= opt.bareiss_cap) {
    r.method = "bareiss";
    kernels::for_each_index(cands.size(), opt.exec, [&](std::size_t i) {
      IntMatrix m = q.entries;
      m.add_diagonal(BigInt(-cands[i]));
      mult[i] = nullity(m, Execution::serial);
    });
    exact_total = true;
  } else {
    // q(P) = prod (P - c I) = 0 with distinct integer c makes P diagonalizable
    // with spectrum inside the candidates, so the exact nullities sum to k.
    // Each is at most its value mod p; a mod-p total of k forces equality.
    r.method = "annihilator-mod-p";
    const auto check = modular::check_annihilator(q.entries, cands, opt.exec);
    r.primes = check.primes;
    if (check.annihilates) {
      const auto p = modular::large_primes(1).front();
      kernels::for_each_index(cands.size(), opt.exec, [&](std::size_t i) {
        IntMatrix m = q.entries;
        m.add_diagonal(BigInt(-cands[i]));
        mult[i] = modular::nullity_mod_p(m, p);
      });
      exact_total = true;
    }
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    total += mult[i];
    if (mult[i]) r.spectrum[cands[i]] = mult[i];
  }
  r.integral = exact_total && total == k;

  if (r.integral && k <= opt.containment_k_cap && vertex_count(d, n) <= opt.containment_vertex_cap) {
    const SRGraph g(d, n, opt.containment_vertex_cap);
    bool all = true;
    for (const auto& [l, m] : r.spectrum) {
      const auto ok = lifts_to_eigenvector(g, q, l);
      if (!ok) {
        all = false;
        r.contained_in_A.reset();
        break;
      }
      if (!*ok) all = false;
      r.contained_in_A = all;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Independence

Rational ratio_bound(int d, int n) {
  const long tau = -static_cast<long>(d) * (d - 1) / 2;
  if (n < -tau)
    throw DomainError("ratio bound needs n >= C(d,2) so that the least eigenvalue is known (d = " +
                      std::to_string(d) + ", n = " + std::to_string(n) + ")");
  const BigInt N(std::to_string(vertex_count(d, n)));
  const long delta = static_cast<long>(d - 1) * n;
  Rational r(-tau * N, BigInt(delta - tau));
  r.canonicalize();
  return r;
}

namespace {

using Bits = std::bitset<kIndependenceCap + 8>;

struct IndependenceSearch {
  std::vector<Bits> adj;
  int best = 0;

  void expand(Bits P, int size) {
    // Candidates by residual degree, high first; ties by index.
    std::vector<std::pair<int, int>> byDeg;
    for (std::size_t v = P._Find_first(); v < P.size(); v = P._Find_next(v))
      byDeg.emplace_back(-static_cast<int>((adj[v] & P).count()), static_cast<int>(v));
    std::sort(byDeg.begin(), byDeg.end());

    // Greedy clique cover: an independent set uses at most one vertex per
    // clique, so the colour index bounds what a suffix can add.
    std::vector<int> order, bound;
    Bits uncovered = P;
    int colours = 0;
    while (uncovered.any()) {
      ++colours;
      Bits clique_ok = uncovered;
      for (const auto& [negdeg, v] : byDeg) {
        if (!clique_ok[v]) continue;
        clique_ok &= adj[v];
        uncovered.reset(v);
        order.push_back(v);
        bound.push_back(colours);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best) return;
      const int v = order[i];
      Bits next = P & ~adj[v];
      next.reset(v);
      if (next.none())
        best = std::max(best, size + 1);
      else
        expand(next, size + 1);
      P.reset(v);
    }
  }
};

}  // namespace

int independence_number(const SRGraph& g, std::size_t cap) {
  const std::size_t N = g.size();
  if (N > cap || N > kIndependenceCap)
    throw ResourceError("independence search capped at N = " + std::to_string(std::min(cap, kIndependenceCap)) +
                        " (got " + std::to_string(N) + ")");
  IndependenceSearch s;
  s.adj.assign(N, Bits());
  for (std::size_t u = 0; u < N; ++u)
    for (auto v : g.neighbors(u)) s.adj[u].set(v);

  // Greedy start: repeatedly take a minimum-degree vertex of what is left.
  Bits left;
  for (std::size_t u = 0; u < N; ++u) left.set(u);
  while (left.any()) {
    std::size_t pick = N;
    std::size_t pick_deg = N + 1;
    for (std::size_t v = left._Find_first(); v < left.size(); v = left._Find_next(v)) {
      const std::size_t deg = (s.adj[v] & left).count();
      if (deg < pick_deg) pick = v, pick_deg = deg;
    }
    ++s.best;
    left &= ~s.adj[pick];
    left.reset(pick);
  }

  Bits all;
  for (std::size_t u = 0; u < N; ++u) all.set(u);
  if (N > 0) s.expand(all, 0);
  return s.best;
}

// ---------------------------------------------------------------------------
// Output

void write_spectrum_csv(const Spectrum& s, int d, int n, std::ostream& out, bool header) {
  if (header) out << "d,n,eigenvalue,multiplicity,certified\n";
  for (auto it = s.pairs.rbegin(); it != s.pairs.rend(); ++it)
    out << d << ',' << n << ',' << it->first << ',' << it->second << ',' << (s.certified ? "true" : "false")
        << '\n';
}

std::string spectrum_json(const Spectrum& s, int d, int n) {
  nlohmann::ordered_json j;
  j["d"] = d;
  j["n"] = n;
  j["N"] = s.N;
  j["method"] = s.method;
  j["certified"] = s.certified;
  j["non_integral"] = s.non_integral;
  auto pairs = nlohmann::ordered_json::array();
  for (auto it = s.pairs.rbegin(); it != s.pairs.rend(); ++it) pairs.push_back({it->first, it->second});
  j["spectrum"] = std::move(pairs);
  auto ev = nlohmann::ordered_json::array();
  for (const auto& [v, res] : s.evidence) ev.push_back({{"eigenvalue", v}, {"residual", res}});
  j["evidence"] = std::move(ev);
  return j.dump();
}

std::string quotient_report_json(const QuotientReport& r) {
  nlohmann::ordered_json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["partition"] = QuotientMatrix::kPartition;
  j["k"] = r.k;
  j["integral"] = r.integral;
  j["method"] = r.method;
  auto pairs = nlohmann::ordered_json::array();
  for (auto it = r.spectrum.rbegin(); it != r.spectrum.rend(); ++it) pairs.push_back({it->first, it->second});
  j["spectrum"] = std::move(pairs);
  j["primes"] = r.primes.size();
  j["contained_in_A"] = r.contained_in_A ? nlohmann::ordered_json(*r.contained_in_A) : nlohmann::ordered_json();
  return j.dump();
}

}  // namespace srg::spectral
