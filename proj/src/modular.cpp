#include "srg/modular.hpp"

#include <algorithm>
#include <cstdlib>

#include "srg/errors.hpp"
#include "srg/kernels.hpp"

namespace srg::modular {

namespace {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t f = 3; f * f <= v; f += 2)
    if (v % f == 0) return false;
  return true;
}

std::uint64_t reduce(const BigInt& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), p);  // fdiv: always in [0, p)
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Entries of M - rI must stay below this in magnitude so that 64 products
// with 31-bit residues accumulate safely in an int64.
constexpr long kSmallEntry = 1L << 24;

struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<long> vals;
};

std::vector<SparseRow> sparse_rows(const IntMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt& x = m(i, j);
      if (sgn(x) == 0) continue;
      if (!x.fits_slong_p() || std::labs(x.get_si()) >= kSmallEntry)
        throw DomainError("annihilator check needs matrix entries below 2^24");
      rows[i].cols.push_back(static_cast<std::uint32_t>(j));
      rows[i].vals.push_back(x.get_si());
    }
  return rows;
}

std::vector<std::uint64_t> residue(const std::vector<SparseRow>& rows, std::span<const long> roots,
                                   std::uint64_t p) {
  const std::size_t k = rows.size();
  const long sp = static_cast<long>(p);
  std::vector<std::uint64_t> q(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) q[i * k + i] = 1;
  std::vector<std::uint64_t> next(k * k);
  std::vector<long> acc(k);
  for (long r : roots) {
    // next = (M - rI) q, row by row.
    for (std::size_t i = 0; i < k; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      auto axpy = [&](long a, std::size_t j) {
        const std::uint64_t* src = &q[j * k];
        for (std::size_t c = 0; c < k; ++c) acc[c] += a * static_cast<long>(src[c]);
      };
      std::size_t terms = 0;
      auto settle = [&] {
        for (auto& v : acc) v %= sp;
        terms = 0;
      };
      for (std::size_t t = 0; t < rows[i].cols.size(); ++t) {
        long a = rows[i].vals[t];
        if (rows[i].cols[t] == i) a -= r;
        if (a != 0) axpy(a, rows[i].cols[t]);
        if (++terms == 64) settle();
      }
      if (std::find(rows[i].cols.begin(), rows[i].cols.end(), i) == rows[i].cols.end() && r != 0) {
        axpy(-r, i);
        ++terms;
      }
      settle();
      for (std::size_t c = 0; c < k; ++c) next[i * k + c] = static_cast<std::uint64_t>(acc[c] < 0 ? acc[c] + sp : acc[c]);
    }
    q.swap(next);
  }
  return q;
}

}  // namespace

std::vector<std::uint64_t> large_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = (1ULL << 31) - 1; out.size() < count && v > 2; v -= 2)
    if (is_prime(v)) out.push_back(v);
  return out;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  std::vector<std::uint64_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = reduce(m(i, j), p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    const std::uint64_t inv = pow_mod(a[r * C + c], p - 2, p);
    for (std::size_t j = c; j < C; ++j) a[r * C + j] = a[r * C + j] * inv % p;
    for (std::size_t i = r + 1; i < R; ++i) {
      const std::uint64_t f = a[i * C + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < C; ++j) a[i * C + j] = (a[i * C + j] + (p - f) * a[r * C + j]) % p;
    }
    ++r;
  }
  return r;
}

std::size_t nullity_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (!m.is_square()) throw DomainError("nullity_mod_p needs a square matrix");
  return m.cols() - rank_mod_p(m, p);
}

std::vector<std::uint64_t> annihilator_residue(const IntMatrix& m, std::span<const long> roots,
                                               std::uint64_t p) {
  if (!m.is_square()) throw DomainError("annihilator needs a square matrix");
  return residue(sparse_rows(m), roots, p);
}

AnnihilatorCheck check_annihilator(const IntMatrix& m, std::span<const long> roots, Execution exec) {
  if (!m.is_square()) throw DomainError("annihilator needs a square matrix");
  for (long r : roots)
    if (std::labs(r) >= kSmallEntry) throw DomainError("annihilator roots must be below 2^24");
  const auto rows = sparse_rows(m);

  AnnihilatorCheck out;
  out.entry_bound = 1;
  for (long r : roots) {
    long norm = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      long s = 0;
      bool diag = false;
      for (std::size_t t = 0; t < rows[i].cols.size(); ++t) {
        long a = rows[i].vals[t];
        if (rows[i].cols[t] == i) {
          a -= r;
          diag = true;
        }
        s += std::labs(a);
      }
      if (!diag) s += std::labs(r);
      norm = std::max(norm, s);
    }
    out.entry_bound *= norm;
  }
  if (rows.empty()) {
    out.annihilates = true;
    return out;
  }

  // Residues mod primes with product > 2 * bound pin down every entry of q(M).
  const BigInt target = 2 * out.entry_bound;
  BigInt product = 1;
  std::size_t want = 0;
  for (std::size_t batch = 8;; batch *= 2) {
    auto primes = large_primes(batch);
    product = 1;
    want = 0;
    for (auto p : primes) {
      product *= static_cast<unsigned long>(p);
      ++want;
      if (product > target) break;
    }
    if (product > target) {
      primes.resize(want);
      out.primes = std::move(primes);
      break;
    }
  }

  std::vector<char> zero(out.primes.size(), 0);
  // The first prime alone refutes most wrong root sets; try it before fanning out.
  const auto first = residue(rows, roots, out.primes.front());
  zero[0] = std::all_of(first.begin(), first.end(), [](std::uint64_t v) { return v == 0; });
  if (!zero[0]) {
    out.primes.resize(1);
    return out;
  }
  kernels::for_each_index(out.primes.size() - 1, exec, [&](std::size_t i) {
    const auto q = residue(rows, roots, out.primes[i + 1]);
    zero[i + 1] = std::all_of(q.begin(), q.end(), [](std::uint64_t v) { return v == 0; });
  });
  const auto bad = std::find(zero.begin(), zero.end(), 0);
  if (bad != zero.end()) {
    out.primes.resize(static_cast<std::size_t>(bad - zero.begin()) + 1);
    return out;
  }
  out.annihilates = true;
  return out;
}

}  // namespace srg::modular
