#include "srg/eigenbasis3.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>
#include <set>

#include "json.hpp"

#include "srg/errors.hpp"
#include "srg/kernels.hpp"

namespace srg::eigen3 {

namespace {

constexpr std::array<int, 3> kSigma{1, 2, 0};
constexpr std::array<int, 3> kRho{1, 0, 2};

void require_n(int n) {
  if (n < 0) throw DomainError("SR(3,n) needs n >= 0 (got " + std::to_string(n) + ")");
}

SparseVector scaled(const SparseVector& v, Coeff c) {
  SparseVector r = v;
  r *= c;
  return r;
}

}  // namespace

LineVectors xyz_vectors(int n) {
  require_n(n);
  LineVectors L;
  for (int i = 0; i <= n; ++i) {
    SparseVector x(3, n), y(3, n), z(3, n);
    for (int j = 0; j + i <= n; ++j) {
      const int k = n - i - j;
      x.add(Vertex{{i, j, k}}, 1);
      y.add(Vertex{{j, i, k}}, 1);
      z.add(Vertex{{j, k, i}}, 1);
    }
    L.X.push_back(std::move(x));
    L.Y.push_back(std::move(y));
    L.Z.push_back(std::move(z));
  }
  return L;
}

SparseVector j_vector(int d, int n) {
  const std::size_t N = vertex_count(d, n);
  std::vector<SparseVector::Entry> e;
  e.reserve(N);
  for (std::size_t i = 0; i < N; ++i) e.push_back({static_cast<std::uint32_t>(i), 1});
  return SparseVector(d, n, std::move(e));
}

SparseVector hexagon_vector(int n, int a, int b, int c) {
  require_n(n);
  if (a <= 0 || b <= 0 || c <= 0)
    throw DomainError("hexagon (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ") needs a, b, c > 0");
  if (a + b + c != n) throw DomainError("hexagon centre must sum to n");
  SparseVector h(3, n);
  h.add(Vertex{{a - 1, b, c + 1}}, 1);
  h.add(Vertex{{a, b - 1, c + 1}}, -1);
  h.add(Vertex{{a + 1, b - 1, c}}, 1);
  h.add(Vertex{{a + 1, b, c - 1}}, -1);
  h.add(Vertex{{a, b + 1, c - 1}}, 1);
  h.add(Vertex{{a - 1, b + 1, c}}, -1);
  return h;
}

SparseVector apply_sigma(const SparseVector& v) { return v.permute_coordinates(kSigma); }
SparseVector apply_rho(const SparseVector& v) { return v.permute_coordinates(kRho); }

std::string family_name(Family f) {
  switch (f) {
    case Family::J: return "J";
    case Family::Hexagon: return "Hexagon";
    case Family::R: return "R";
    case Family::P: return "P";
    case Family::Q: return "Q";
    case Family::OrbitImage: return "OrbitImage";
  }
  return "?";
}

EigenClaim::EigenClaim(const SRGraph& g, Family family, std::vector<int> parameters, SparseVector vector,
                       long eigenvalue, Family origin)
    : family_(family),
      origin_(family == Family::OrbitImage ? origin : family),
      parameters_(std::move(parameters)),
      vector_(std::move(vector)),
      eigenvalue_(eigenvalue) {
  if (vector_.is_zero()) throw ConsistencyError(label() + " is the zero vector");
  if (!is_eigenvector(g, vector_, eigenvalue_))
    throw ConsistencyError(label() + " fails A v = " + std::to_string(eigenvalue_) + " v on SR(" +
                           std::to_string(g.d()) + "," + std::to_string(g.n()) + ")");
}

std::string EigenClaim::label() const {
  std::string s = family_name(family_);
  if (family_ == Family::OrbitImage) s += "[" + family_name(origin_) + "]";
  s += "(";
  for (std::size_t i = 0; i < parameters_.size(); ++i) s += (i ? "," : "") + std::to_string(parameters_[i]);
  return s + ")";
}

int p_max_k(int n) { return (n - 3) >= 0 ? (n - 3) / 2 : -1; }
int q_max_k(int n) { return (n - 2) >= 0 ? (n - 2) / 2 : -1; }

long r_eigenvalue(int n) { return n % 2 == 0 ? (n - 6) / 2 : (n - 3) / 2; }

SparseVector r_raw(int n) {
  if (n < 1) throw DomainError("R needs n >= 1");
  const auto L = xyz_vectors(n);
  const int k = n / 2;
  SparseVector r = L.X[k];
  r -= L.Y[k];
  r -= L.X[k + 1];
  r += L.Y[k + 1];
  return r;
}

SparseVector p_raw(int n, int k) {
  if (k < 0 || k > p_max_k(n))
    throw DomainError("P_k needs 0 <= k <= floor((n-3)/2); got k = " + std::to_string(k) + ", n = " +
                      std::to_string(n));
  const auto L = xyz_vectors(n);
  SparseVector p = scaled(L.Z[n - k], -static_cast<Coeff>(n - 2 * k - 1) * (n - 2 * k - 2));
  for (int i = k + 1; i <= n - k - 1; ++i) {
    p += scaled(L.Z[i], 2 * (i - k - 1));
    p += scaled(L.X[i], 2 * i - n);
    p += scaled(L.Y[i], 2 * i - n);
  }
  return p;
}

SparseVector q_raw(int n, int k) {
  if (k < 0 || k > q_max_k(n))
    throw DomainError("Q_k needs 0 <= k <= floor((n-2)/2); got k = " + std::to_string(k) + ", n = " +
                      std::to_string(n));
  const auto L = xyz_vectors(n);
  SparseVector q = scaled(L.Z[k], static_cast<Coeff>(n - 2 * k + 1) * (n - 2 * k + 2));
  for (int j = k; j <= n - k; ++j) {
    q += scaled(L.X[j], 2 * j - n);
    q += scaled(L.Y[j], 2 * j - n);
    q += scaled(L.Z[j], -2 * (n - j - k + 1));
  }
  return q;
}

SparseVector q_raw_alternate(int n, int k) {
  if (k < 0 || k > q_max_k(n))
    throw DomainError("Q_k needs 0 <= k <= floor((n-2)/2); got k = " + std::to_string(k));
  const auto L = xyz_vectors(n);
  SparseVector q = scaled(L.Z[k], static_cast<Coeff>(n - 2 * k + 1) * (n - 2 * k));
  q += scaled(L.X[k], 2 * k - n);
  q += scaled(L.Y[k], 2 * k - n);
  for (int j = k + 1; j <= n - k; ++j) {
    q += scaled(L.X[j], 2 * j - n);
    q += scaled(L.Y[j], 2 * j - n);
    q += scaled(L.Z[j], -2 * (n - j - k + 1));
  }
  return q;
}

EigenClaim r_vector(const SRGraph& g) {
  return EigenClaim(g, Family::R, {g.n() / 2}, r_raw(g.n()), r_eigenvalue(g.n()));
}
EigenClaim p_vector(const SRGraph& g, int k) { return EigenClaim(g, Family::P, {k}, p_raw(g.n(), k), k - 2); }
EigenClaim q_vector(const SRGraph& g, int k) {
  return EigenClaim(g, Family::Q, {k}, q_raw(g.n(), k), g.n() - k - 2);
}
EigenClaim r_vector(int n) { return r_vector(SRGraph(3, n)); }
EigenClaim p_vector(int n, int k) {
  p_raw(n, k);  // range check before building the graph
  return p_vector(SRGraph(3, n), k);
}
EigenClaim q_vector(int n, int k) {
  q_raw(n, k);
  return q_vector(SRGraph(3, n), k);
}

std::map<long, std::size_t> theorem_table(int n) {
  if (n < 1) throw DomainError("the eigenvalue table needs n >= 1");
  std::map<long, std::size_t> t;
  const long m = n / 2;
  if (n % 2 == 1) {
    if (m >= 1) t[-3] += static_cast<std::size_t>(m * (2 * m - 1));  // C(2m,2)
    for (long e = -2; e <= m - 3; ++e) t[e] += 3;
    t[m - 1] += 2;
    for (long e = m; e <= 2 * m - 1; ++e) t[e] += 3;
    t[4 * m + 2] += 1;
  } else {
    if (m >= 2) t[-3] += static_cast<std::size_t>((2 * m - 1) * (2 * m - 2) / 2);  // C(2m-1,2)
    for (long e = -2; e <= m - 4; ++e) t[e] += 3;
    t[m - 3] += 2;
    for (long e = m - 1; e <= 2 * m - 2; ++e) t[e] += 3;
    t[4 * m] += 1;
  }
  return t;
}

std::map<long, std::size_t> Eigenbasis::multiplicities() const {
  std::map<long, std::size_t> t;
  for (const auto& c : claims) ++t[c.eigenvalue()];
  return t;
}

namespace {

// Dense integer rows of the given vectors restricted to the union of their
// supports; rank is unaffected by dropping all-zero columns.
IntMatrix compressed_rows(const std::vector<const SparseVector*>& vs) {
  std::set<std::uint32_t> cols;
  for (auto* v : vs)
    for (const auto& e : v->entries()) cols.insert(e.index);
  std::map<std::uint32_t, std::size_t> at;
  for (auto c : cols) at.emplace(c, at.size());
  IntMatrix m(vs.size(), cols.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (const auto& e : vs[i]->entries()) m(i, at[e.index]) = static_cast<long>(e.value);
  return m;
}

}  // namespace

bool leading_term_certificate(const std::vector<EigenClaim>& claims, Execution exec) {
  std::map<long, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < claims.size(); ++i) groups[claims[i].eigenvalue()].push_back(i);

  // Across eigenvalues: pairwise orthogonal.
  std::vector<long> eig(claims.size());
  for (std::size_t i = 0; i < claims.size(); ++i) eig[i] = claims[i].eigenvalue();
  std::vector<char> ok(claims.size(), 1);
  kernels::for_each_index(claims.size(), exec, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < claims.size(); ++j)
      if (eig[i] != eig[j] && claims[i].vector().dot(claims[j].vector()) != 0) {
        ok[i] = 0;
        return;
      }
  });
  if (std::find(ok.begin(), ok.end(), 0) != ok.end()) return false;

  // Within an eigenvalue: distinct leading terms, else exact rank.
  for (const auto& [lambda, idx] : groups) {
    std::set<std::size_t> leads;
    for (auto i : idx) leads.insert(claims[i].vector().lex_min_index());
    if (leads.size() == idx.size()) continue;
    std::vector<const SparseVector*> vs;
    for (auto i : idx) vs.push_back(&claims[i].vector());
    if (rank(compressed_rows(vs), exec) != idx.size()) return false;
  }
  return true;
}

Eigenbasis full_eigenbasis(int n, int exact_rank_limit, Execution exec) {
  if (n < 1) throw DomainError("full_eigenbasis needs n >= 1 (got " + std::to_string(n) + ")");
  const SRGraph g(3, n);

  // Each job yields one claim; order is fixed so output is deterministic.
  struct Job {
    Family family;
    std::vector<int> params;
    int power;  // sigma^power applied to the base vector
  };
  std::vector<Job> jobs;
  jobs.push_back({Family::J, {}, 0});
  for (int a = 1; a <= n; ++a)
    for (int b = 1; a + b < n; ++b) jobs.push_back({Family::Hexagon, {a, b, n - a - b}, 0});
  for (int p = 0; p < 2; ++p) jobs.push_back({Family::R, {n / 2}, p});
  for (int k = 0; k <= p_max_k(n); ++k)
    for (int p = 0; p < 3; ++p) jobs.push_back({Family::P, {k}, p});
  for (int k = 0; k <= q_max_k(n); ++k)
    for (int p = 0; p < 3; ++p) jobs.push_back({Family::Q, {k}, p});

  std::vector<std::optional<EigenClaim>> built(jobs.size());
  kernels::for_each_index(jobs.size(), exec, [&](std::size_t i) {
    const Job& job = jobs[i];
    SparseVector v(3, n);
    long lambda = 0;
    switch (job.family) {
      case Family::J: v = j_vector(3, n), lambda = 2L * n; break;
      case Family::Hexagon: v = hexagon_vector(n, job.params[0], job.params[1], job.params[2]), lambda = -3; break;
      case Family::R: v = r_raw(n), lambda = r_eigenvalue(n); break;
      case Family::P: v = p_raw(n, job.params[0]), lambda = job.params[0] - 2; break;
      case Family::Q: v = q_raw(n, job.params[0]), lambda = n - job.params[0] - 2; break;
      case Family::OrbitImage: break;
    }
    for (int p = 0; p < job.power; ++p) v = apply_sigma(v);
    if (job.power == 0) {
      built[i].emplace(g, job.family, job.params, std::move(v), lambda);
    } else {
      auto params = job.params;
      params.push_back(job.power);
      built[i].emplace(g, Family::OrbitImage, std::move(params), std::move(v), lambda, job.family);
    }
  });

  Eigenbasis out;
  out.n = n;
  for (auto& c : built) out.claims.push_back(std::move(*c));
  if (out.claims.size() != vertex_count(3, n))
    throw ConsistencyError("eigenbasis has " + std::to_string(out.claims.size()) + " vectors, expected " +
                           std::to_string(vertex_count(3, n)));

  if (n <= exact_rank_limit) {
    out.independence_method = "exact-rank";
    IntMatrix m(out.claims.size(), g.size());
    for (std::size_t i = 0; i < out.claims.size(); ++i)
      for (const auto& e : out.claims[i].vector().entries()) m(i, e.index) = static_cast<long>(e.value);
    out.independent = rank(m, exec) == out.claims.size();
  } else {
    out.independence_method = "leading-terms";
    out.independent = leading_term_certificate(out.claims, exec);
  }
  return out;
}

std::optional<std::vector<Rational>> basis_prime_expand(int n, const SparseVector& v) {
  if (n < 1) throw DomainError("B'_n needs n >= 1");
  if (v.d() != 3 || v.n() != n) throw MismatchError("vector does not live on SR(3,n)");
  const auto L = xyz_vectors(n);
  const std::size_t N = v.dimension();
  const std::size_t cols = 3 * static_cast<std::size_t>(n) + 1;
  IntMatrix m(N, cols);
  std::size_t c = 0;
  for (const auto* fam : {&L.X, &L.Y, &L.Z}) {
    for (int i = 0; i < n; ++i, ++c)
      for (const auto& e : (*fam)[i].entries()) m(e.index, c) = static_cast<long>(e.value);
  }
  for (const auto& e : v.entries()) m(e.index, c) = -static_cast<long>(e.value);

  for (const auto& k : null_space(m)) {
    const Rational& last = k.entries.back();
    if (sgn(last) == 0) continue;
    std::vector<Rational> coeffs(k.entries.begin(), k.entries.end() - 1);
    for (auto& q : coeffs) q /= last;
    return coeffs;
  }
  return std::nullopt;
}

void write_eigenbasis_json(const Eigenbasis& basis, std::ostream& out) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : basis.claims) {
    nlohmann::ordered_json j;
    j["family"] = family_name(c.family());
    if (c.family() == Family::OrbitImage) j["origin"] = family_name(c.origin());
    j["parameters"] = c.parameters();
    j["eigenvalue"] = c.eigenvalue();
    auto sup = nlohmann::ordered_json::array();
    for (const auto& [x, coeff] : c.vector().support()) sup.push_back({x.coords, coeff});
    j["support"] = std::move(sup);
    arr.push_back(std::move(j));
  }
  out << arr.dump() << '\n';
}

}  // namespace srg::eigen3
