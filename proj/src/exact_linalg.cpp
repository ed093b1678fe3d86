#include "srg/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

#include "srg/errors.hpp"
#include "srg/kernels.hpp"

namespace srg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MismatchError("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = row(a);
  auto rb = row(b);
  for (std::size_t j = 0; j < cols_; ++j) mpz_swap(ra[j].get_mpz_t(), rb[j].get_mpz_t());
}

IntMatrix& IntMatrix::add_diagonal(const BigInt& s) {
  if (!is_square()) throw DomainError("add_diagonal needs a square matrix");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, i) += s;
  return *this;
}

IntMatrix IntMatrix::without(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw IndexError("without: index out of range");
  IntMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
      if (j == c) continue;
      m(ii, jj++) = (*this)(i, j);
    }
    ++ii;
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw MismatchError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

std::vector<Rational> IntMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw MismatchError("apply: vector length differs from column count");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) s += Rational((*this)(i, j)) * v[j];
    out[i] = s;
  }
  return out;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

bool RationalVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool RationalVector::is_integral() const {
  return std::all_of(entries.begin(), entries.end(), [](const Rational& q) { return q.get_den() == 1; });
}

EchelonForm bareiss_echelon(IntMatrix m, Execution exec) {
  EchelonForm out;
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      if (piv == R || mpz_cmpabs(m(i, c).get_mpz_t(), m(piv, c).get_mpz_t()) > 0) piv = i;
    }
    if (piv == R) continue;
    if (piv != r) {
      m.swap_rows(r, piv);
      out.permutation_sign = -out.permutation_sign;
    }
    kernels::bareiss_update(m, r, c, prev, exec);
    prev = m(r, c);
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const IntMatrix& m, Execution exec) { return bareiss_echelon(m, exec).rank(); }

std::size_t nullity(const IntMatrix& m, Execution exec) {
  if (!m.is_square())
    throw DomainError("nullity of a non-square " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " matrix");
  return m.cols() - rank(m, exec);
}

BigInt determinant(const IntMatrix& m, Execution exec) {
  if (!m.is_square())
    throw DomainError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " matrix");
  if (m.rows() == 0) return 1;
  const EchelonForm e = bareiss_echelon(m, exec);
  if (e.rank() < m.rows()) return 0;
  // The last Bareiss pivot is the determinant of the row-permuted matrix.
  return e.permutation_sign * e.reduced(m.rows() - 1, m.cols() - 1);
}

std::vector<RationalVector> null_space(const IntMatrix& m, Execution exec) {
  const EchelonForm e = bareiss_echelon(m, exec);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(C);
    x[f] = 1;
    for (std::size_t k = e.rank(); k-- > 0;) {
      const std::size_t c = e.pivots[k];
      const auto row = e.reduced.row(k);
      Rational s = 0;
      for (std::size_t j = c + 1; j < C; ++j)
        if (sgn(row[j]) != 0 && sgn(x[j]) != 0) s += Rational(row[j]) * x[j];
      x[c] = -s / Rational(row[c]);
    }
    // Clear denominators, then remove the content.
    BigInt l = 1;
    for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    BigInt g = 0;
    for (auto& q : x) {
      q *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    for (auto& q : x) q /= g;
    basis.push_back(RationalVector{std::move(x)});
  }
  return basis;
}

}  // namespace srg
