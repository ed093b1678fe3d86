#include "srg/float_spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "srg/errors.hpp"
#include "srg/lattice_graph.hpp"

namespace srg {

namespace {

Eigen::MatrixXd to_eigen(std::span<const double> dense, std::size_t n) {
  if (dense.size() != n * n) throw MismatchError("dense matrix size is not n*n");
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dense[i * n + j];
  return m;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::span<const double> dense, std::size_t n) {
  if (n == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(dense, n), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConsistencyError("symmetric eigensolver did not converge");
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> symmetric_residuals(std::span<const double> dense, std::size_t n) {
  if (n == 0) return {};
  const Eigen::MatrixXd m = to_eigen(dense, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw ConsistencyError("symmetric eigensolver did not converge");
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::VectorXd v = es.eigenvectors().col(static_cast<Eigen::Index>(k));
    out[k] = (m * v - es.eigenvalues()(static_cast<Eigen::Index>(k)) * v).norm() / v.norm();
  }
  return out;
}

std::vector<double> adjacency_eigenvalues(const SRGraph& g) {
  const std::size_t N = g.size();
  std::vector<double> dense(N * N, 0.0);
  for (std::size_t u = 0; u < N; ++u)
    for (auto v : g.neighbors(u)) dense[u * N + v] = 1.0;
  return symmetric_eigenvalues(dense, N);
}

std::vector<double> symmetric_eigenvalues(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("eigenvalues of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<double> dense(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dense[i * n + j] = m(i, j).get_d();
  return symmetric_eigenvalues(dense, n);
}

std::vector<long> integer_candidates(std::span<const double> values, double tol) {
  std::vector<long> out;
  for (double v : values) {
    const double r = std::round(v);
    if (std::abs(v - r) < tol) out.push_back(static_cast<long>(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double max_integrality_gap(std::span<const double> values) {
  double gap = 0.0;
  for (double v : values) gap = std::max(gap, std::abs(v - std::round(v)));
  return gap;
}

}  // namespace srg
