#include "srg/kernels.hpp"

#include <omp.h>

#include <limits>

#include "srg/errors.hpp"
#include "srg/lattice_graph.hpp"

namespace srg::kernels {

namespace {

void bareiss_row(IntMatrix& m, std::size_t i, std::size_t pivot_row, std::size_t c, const BigInt& p,
                 const BigInt& prev, BigInt& t) {
  auto row = m.row(i);
  const auto top = m.row(pivot_row);
  const BigInt f = row[c];
  for (std::size_t j = c + 1; j < m.cols(); ++j) {
    mpz_mul(t.get_mpz_t(), p.get_mpz_t(), row[j].get_mpz_t());
    if (sgn(f) != 0) mpz_submul(t.get_mpz_t(), f.get_mpz_t(), top[j].get_mpz_t());
    mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
  }
  row[c] = 0;
}

}  // namespace

void bareiss_update(IntMatrix& m, std::size_t pivot_row, std::size_t pivot_col, const BigInt& prev,
                    Execution exec) {
  const BigInt p = m(pivot_row, pivot_col);
  const long first = static_cast<long>(pivot_row) + 1;
  const long last = static_cast<long>(m.rows());
  if (exec == Execution::serial || last - first < 2) {
    BigInt t;
    for (long i = first; i < last; ++i) bareiss_row(m, static_cast<std::size_t>(i), pivot_row, pivot_col, p, prev, t);
    return;
  }
#pragma omp parallel
  {
    BigInt t;  // one scratch integer per thread
#pragma omp for schedule(static)
    for (long i = first; i < last; ++i) bareiss_row(m, static_cast<std::size_t>(i), pivot_row, pivot_col, p, prev, t);
  }
}

void adjacency_gather(const SRGraph& g, std::span<const Coeff> in, std::span<Coeff> out,
                      Execution exec) {
  if (in.size() != g.size() || out.size() != g.size())
    throw MismatchError("adjacency_gather: vector length differs from vertex count");
  const long N = static_cast<long>(g.size());
  bool overflow = false;
  auto row = [&](long u) {
    __int128 s = 0;
    for (auto w : g.neighbors(static_cast<std::size_t>(u))) s += in[w];
    if (s > std::numeric_limits<Coeff>::max() || s < std::numeric_limits<Coeff>::min()) return true;
    out[static_cast<std::size_t>(u)] = static_cast<Coeff>(s);
    return false;
  };
  if (exec == Execution::serial) {
    for (long u = 0; u < N; ++u) overflow |= row(u);
  } else {
#pragma omp parallel for schedule(static) reduction(|| : overflow)
    for (long u = 0; u < N; ++u) overflow = row(u) || overflow;
  }
  if (overflow) throw OverflowError("adjacency product overflowed 64 bits");
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace srg::kernels
