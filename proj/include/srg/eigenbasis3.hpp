#pragma once

// Explicit eigenvectors of A(SR(3,n)): lattice-line sums X_i, Y_j, Z_k, the
// all-ones vector J, hexagons H_{a,b,c}, and the R, P_k, Q_k families with
// their images under the coordinate action of S_3.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srg/exact_linalg.hpp"
#include "srg/lattice_graph.hpp"
#include "srg/sparse_vector.hpp"

namespace srg::eigen3 {

struct LineVectors {
  std::vector<SparseVector> X, Y, Z;  // index i = value of the fixed coordinate
};

LineVectors xyz_vectors(int n);
SparseVector j_vector(int d, int n);

/// e_{a-1,b,c+1} - e_{a,b-1,c+1} + e_{a+1,b-1,c} - e_{a+1,b,c-1} + e_{a,b+1,c-1} - e_{a-1,b+1,c}
SparseVector hexagon_vector(int n, int a, int b, int c);

// sigma = (1 2 3) sends X_i -> Y_i -> Z_i -> X_i; rho = (1 2) swaps X and Y.
SparseVector apply_sigma(const SparseVector& v);
SparseVector apply_rho(const SparseVector& v);

enum class Family { J, Hexagon, R, P, Q, OrbitImage };
std::string family_name(Family f);

/// An eigenvector together with its eigenvalue. The constructor checks
/// A v = lambda v exactly and throws ConsistencyError naming the family if
/// it fails.
class EigenClaim {
 public:
  EigenClaim(const SRGraph& g, Family family, std::vector<int> parameters, SparseVector vector,
             long eigenvalue, Family origin = Family::J);

  Family family() const { return family_; }
  /// For OrbitImage claims, the family that was rotated; otherwise family().
  Family origin() const { return origin_; }
  /// Hexagon: (a,b,c). R: (k). P, Q: (k). OrbitImage: (k, power of sigma).
  const std::vector<int>& parameters() const { return parameters_; }
  const SparseVector& vector() const { return vector_; }
  long eigenvalue() const { return eigenvalue_; }
  long laplacian_eigenvalue() const { return 2L * vector_.n() - eigenvalue_; }
  std::string label() const;

 private:
  Family family_;
  Family origin_;
  std::vector<int> parameters_;
  SparseVector vector_;
  long eigenvalue_;
};

/// Largest valid k for P_k, floor((n-3)/2); negative when the family is empty.
int p_max_k(int n);
/// Largest valid k for Q_k, floor((n-2)/2).
int q_max_k(int n);
/// R uses k = floor(n/2); eigenvalue (n-6)/2 for even n, (n-3)/2 for odd n.
long r_eigenvalue(int n);

SparseVector r_raw(int n);
SparseVector p_raw(int n, int k);
SparseVector q_raw(int n, int k);
/// The second closed form for Q_k, kept as a cross-check of the first.
SparseVector q_raw_alternate(int n, int k);

EigenClaim r_vector(const SRGraph& g);
EigenClaim p_vector(const SRGraph& g, int k);
EigenClaim q_vector(const SRGraph& g, int k);
EigenClaim r_vector(int n);
EigenClaim p_vector(int n, int k);
EigenClaim q_vector(int n, int k);

/// Eigenvalue -> multiplicity from the closed-form parity tables.
std::map<long, std::size_t> theorem_table(int n);

struct Eigenbasis {
  int n = 0;
  std::vector<EigenClaim> claims;
  /// "exact-rank" (dense Bareiss on all claims) or "leading-terms"
  /// (orthogonality across eigenvalues, distinct leading terms or exact
  /// rank within each eigenvalue).
  std::string independence_method;
  bool independent = false;
  std::map<long, std::size_t> multiplicities() const;
};

/// Exact rank is used for n <= exact_rank_limit.
constexpr int kExactRankLimit = 25;

Eigenbasis full_eigenbasis(int n, int exact_rank_limit = kExactRankLimit,
                           Execution exec = Execution::parallel);

/// Independence certificate without a full-size rank computation.
bool leading_term_certificate(const std::vector<EigenClaim>& claims, Execution exec);

/// Coefficients of v in B'_n = (X_0..X_{n-1}, Y_0..Y_{n-1}, Z_0..Z_{n-1}),
/// or nullopt when v is outside the span.
std::optional<std::vector<Rational>> basis_prime_expand(int n, const SparseVector& v);

void write_eigenbasis_json(const Eigenbasis& basis, std::ostream& out);

}  // namespace srg::eigen3
