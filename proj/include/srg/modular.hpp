#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srg/exact_linalg.hpp"

namespace srg::modular {

/// Primes below 2^31 in decreasing order, the first `count` of them.
std::vector<std::uint64_t> large_primes(std::size_t count);

/// Rank of m reduced modulo p. Never exceeds the rank over Q.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);
/// cols - rank_mod_p; an upper bound for the nullity over Q.
std::size_t nullity_mod_p(const IntMatrix& m, std::uint64_t p);

/// Outcome of testing whether q(M) = prod_j (M - r_j I) is the zero matrix.
struct AnnihilatorCheck {
  bool annihilates = false;
  /// Bound on |entries of q(M)| (product of ||M||_inf + |r_j|).
  BigInt entry_bound;
  /// Primes whose product exceeds entry_bound; all of them were checked when
  /// annihilates is true, otherwise the last one exposed a nonzero residue.
  std::vector<std::uint64_t> primes;
};

/// Decides q(M) = 0 exactly for a square integer matrix with small entries.
///
/// q(M) is evaluated modulo a set of 31-bit primes whose product exceeds the
/// entry bound, so vanishing modulo all of them implies vanishing over Z.
/// When the roots are distinct integers and q(M) = 0, every eigenvalue of M
/// is one of the roots and M is diagonalizable.
AnnihilatorCheck check_annihilator(const IntMatrix& m, std::span<const long> roots,
                                   Execution exec = Execution::parallel);

/// q(M) mod p for a single prime; the serial building block of
/// check_annihilator, exposed for tests and benchmarks.
std::vector<std::uint64_t> annihilator_residue(const IntMatrix& m, std::span<const long> roots,
                                               std::uint64_t p);

}  // namespace srg::modular
