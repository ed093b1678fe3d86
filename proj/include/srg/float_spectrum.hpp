#pragma once

// Floating-point eigenvalues, used only to propose candidates that exact code
// then confirms or refutes.

#include <cstddef>
#include <span>
#include <vector>

#include "srg/exact_linalg.hpp"

namespace srg {

class SRGraph;

/// Eigenvalues of a dense symmetric row-major n x n matrix, ascending.
std::vector<double> symmetric_eigenvalues(std::span<const double> dense, std::size_t n);

/// Adjacency eigenvalues of g, ascending.
std::vector<double> adjacency_eigenvalues(const SRGraph& g);

/// Eigenvalues of an integer matrix known to be symmetric, ascending.
std::vector<double> symmetric_eigenvalues(const IntMatrix& m);

/// Residual ||M v - lambda v|| / ||v|| of the best float eigenvector for each
/// returned eigenvalue, same order as symmetric_eigenvalues.
std::vector<double> symmetric_residuals(std::span<const double> dense, std::size_t n);

/// Distinct integers within tol of some value; ascending.
std::vector<long> integer_candidates(std::span<const double> values, double tol);

/// Largest |v - round(v)|.
double max_integrality_gap(std::span<const double> values);

}  // namespace srg
