#pragma once

// Exact spectrum certification, spanning-tree counts, S_d-orbit quotient
// matrices, the ratio bound and exact independence numbers.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srg/exact_linalg.hpp"
#include "srg/lattice_graph.hpp"

namespace srg::spectral {

struct Spectrum {
  std::size_t N = 0;
  std::map<long, std::size_t> pairs;  // eigenvalue -> multiplicity (exact)
  /// Multiplicities come from exact nullities and sum to N.
  bool certified = false;
  /// The float screen saw an eigenvalue away from every integer.
  bool non_integral = false;
  /// Float eigenvalues not within the screen tolerance of an integer, with
  /// their eigenpair residuals.
  std::vector<std::pair<double, double>> evidence;
  std::string method;  // "float-screen" or "exact-only"

  std::size_t total() const;
};

enum class Screen { float_screen, exact_only };

/// Float tolerance used to propose integer candidates.
constexpr double kScreenTolerance = 1e-6;

Spectrum integral_spectrum(const SRGraph& g, Screen screen = Screen::float_screen,
                           Execution exec = Execution::parallel);

/// {degree - lambda : lambda in spectrum}.
std::map<long, std::size_t> laplacian_spectrum(const std::map<long, std::size_t>& adjacency, long degree);

/// sum m = N, sum lambda m = 0 and sum lambda^2 m = 2|E|, exactly.
bool trace_identities_hold(const std::map<long, std::size_t>& spectrum, std::size_t N, std::uint64_t edges);

/// Closed form for the number of spanning trees of SR(3,n); throws
/// ConsistencyError if it does not evaluate to a positive integer.
BigInt spanning_trees_formula(int n);

constexpr std::size_t kMatrixTreeCap = 600;

/// det of the Laplacian with row and column `deleted` removed.
BigInt spanning_trees_matrix_tree(const SRGraph& g, std::size_t deleted = 0,
                                  std::size_t cap = kMatrixTreeCap, Execution exec = Execution::parallel);

/// (1/N) * product of the nonzero Laplacian eigenvalues.
Rational spanning_trees_from_spectrum(const std::map<long, std::size_t>& laplacian, std::size_t N);

/// Quotient of SR(d,n) by the coordinate-permutation action of S_d. This is
/// an equitable partition; it need not be the orbit partition of the full
/// automorphism group.
struct QuotientMatrix {
  int d = 0;
  int n = 0;
  std::vector<Vertex> orbits;       // representatives, coordinates nondecreasing
  std::vector<BigInt> orbit_sizes;  // |O_i|
  IntMatrix entries;                // f(i,j) = |N(x) cap O_j| for x in O_i
  static constexpr const char* kPartition = "S_d coordinate-permutation orbits";
};

/// Built from the graph; every vertex of every orbit is checked, and a
/// ConsistencyError names the first witness of non-equitability.
QuotientMatrix quotient_matrix(const SRGraph& g);
/// Built from orbit representatives alone, without the graph.
QuotientMatrix quotient_matrix(int d, int n);

struct QuotientOptions {
  /// Exact nullities by Bareiss up to this k; above it the annihilator route.
  std::size_t bareiss_cap = 60;
  /// spec(P) in spec(A) is checked by lifting eigenvectors when k and N are
  /// at most these.
  std::size_t containment_k_cap = 80;
  std::size_t containment_vertex_cap = 20000;
  Execution exec = Execution::parallel;
};

struct QuotientReport {
  int d = 0;
  int n = 0;
  std::size_t k = 0;
  std::map<long, std::size_t> spectrum;  // exact when integral
  bool integral = false;
  std::string method;  // "bareiss" or "annihilator-mod-p"
  double max_float_gap = 0.0;
  std::vector<std::uint64_t> primes;   // primes used by the annihilator route
  std::optional<bool> contained_in_A;  // unset when not computed
};

QuotientReport quotient_spectrum_integral(int d, int n, const QuotientOptions& opt = {});

/// Checks lambda in spec(A) by lifting a rational kernel vector of P - lambda I
/// to the graph and verifying A v = lambda v exactly. nullopt when the lifted
/// vector does not fit 64-bit coefficients.
std::optional<bool> lifts_to_eigenvector(const SRGraph& g, const QuotientMatrix& q, long lambda);

/// -tau N / (delta - tau) with tau = -C(d,2), delta = (d-1)n. DomainError
/// when n < C(d,2).
Rational ratio_bound(int d, int n);

constexpr std::size_t kIndependenceCap = 120;

/// Exact independence number by branch and bound (greedy start, clique-cover
/// bound). ResourceError above the cap.
int independence_number(const SRGraph& g, std::size_t cap = kIndependenceCap);

void write_spectrum_csv(const Spectrum& s, int d, int n, std::ostream& out, bool header = true);
std::string spectrum_json(const Spectrum& s, int d, int n);
std::string quotient_report_json(const QuotientReport& r);

}  // namespace srg::spectral
