#include "srg/sparse_vector.hpp"

#include <algorithm>
#include <sstream>

#include "srg/errors.hpp"
#include "srg/kernels.hpp"
#include "srg/lattice_graph.hpp"

namespace srg {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient addition overflowed 64 bits");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient product overflowed 64 bits");
  return r;
}

SparseVector::SparseVector(int d, int n)
    : d_(d), n_(n), index_(shared_lattice_index(d, n)), dimension_(index_->size()) {}

SparseVector::SparseVector(int d, int n, std::vector<Entry> entries) : SparseVector(d, n) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (const auto& e : entries) {
    if (e.index >= dimension_) throw IndexError("sparse vector index out of range");
    if (!entries_.empty() && entries_.back().index == e.index)
      entries_.back().value = checked_add(entries_.back().value, e.value);
    else
      entries_.push_back(e);
  }
  std::erase_if(entries_, [](const Entry& e) { return e.value == 0; });
}

Coeff SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  return (it != entries_.end() && it->index == index) ? it->value : 0;
}

Coeff SparseVector::at(const Vertex& x) const {
  if (!index_->contains(x)) throw DomainError(x.str() + " is not a lattice point of this space");
  return at(index_->rank(x));
}

void SparseVector::add_index(std::size_t index, Coeff c) {
  if (index >= dimension_) throw IndexError("sparse vector index out of range");
  if (c == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) {
    it->value = checked_add(it->value, c);
    if (it->value == 0) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{static_cast<std::uint32_t>(index), c});
  }
}

void SparseVector::add(const Vertex& x, Coeff c) {
  if (!index_->contains(x)) throw DomainError(x.str() + " is not a lattice point of this space");
  add_index(index_->rank(x), c);
}

void SparseVector::check_same_space(const SparseVector& o) const {
  if (d_ != o.d_ || n_ != o.n_) throw MismatchError("sparse vectors live on different SR(d,n)");
}

void SparseVector::merge(const SparseVector& o, Coeff sign) {
  check_same_space(o);
  std::vector<Entry> out;
  out.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      out.push_back(*a++);
    } else if (a == entries_.end() || b->index < a->index) {
      out.push_back(Entry{b->index, checked_mul(sign, b->value)});
      ++b;
    } else {
      const Coeff v = checked_add(a->value, checked_mul(sign, b->value));
      if (v != 0) out.push_back(Entry{a->index, v});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVector& SparseVector::operator+=(const SparseVector& o) {
  merge(o, 1);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& o) {
  merge(o, -1);
  return *this;
}

SparseVector& SparseVector::operator*=(Coeff c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.value = checked_mul(e.value, c);
  return *this;
}

SparseVector SparseVector::operator-() const {
  SparseVector r = *this;
  r *= -1;
  return r;
}

bool SparseVector::operator==(const SparseVector& o) const {
  return d_ == o.d_ && n_ == o.n_ && entries_ == o.entries_;
}

Coeff SparseVector::dot(const SparseVector& o) const {
  check_same_space(o);
  Coeff s = 0;
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() && b != o.entries_.end()) {
    if (a->index < b->index) {
      ++a;
    } else if (b->index < a->index) {
      ++b;
    } else {
      s = checked_add(s, checked_mul(a->value, b->value));
      ++a;
      ++b;
    }
  }
  return s;
}

std::size_t SparseVector::lex_min_index() const {
  if (entries_.empty()) throw DomainError("zero vector has no leading term");
  return entries_.front().index;
}

std::size_t SparseVector::lex_max_index() const {
  if (entries_.empty()) throw DomainError("zero vector has no leading term");
  return entries_.back().index;
}

SparseVector SparseVector::permute_coordinates(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != d_) throw MismatchError("permutation length differs from d");
  std::vector<Entry> out;
  out.reserve(entries_.size());
  std::vector<int> y(d_);
  for (const auto& e : entries_) {
    const Vertex x = index_->unrank(e.index);
    for (int i = 0; i < d_; ++i) y[perm[i]] = x.coords[i];
    out.push_back(Entry{static_cast<std::uint32_t>(index_->rank(y.data())), e.value});
  }
  return SparseVector(d_, n_, std::move(out));
}

std::vector<Coeff> SparseVector::dense() const {
  std::vector<Coeff> out(dimension_, 0);
  for (const auto& e : entries_) out[e.index] = e.value;
  return out;
}

SparseVector SparseVector::from_dense(int d, int n, std::span<const Coeff> values) {
  SparseVector v(d, n);
  if (values.size() != v.dimension_) throw MismatchError("dense vector has the wrong length");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) v.entries_.push_back(Entry{static_cast<std::uint32_t>(i), values[i]});
  return v;
}

std::vector<std::pair<Vertex, Coeff>> SparseVector::support() const {
  std::vector<std::pair<Vertex, Coeff>> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.emplace_back(index_->unrank(e.index), e.value);
  return out;
}

std::string SparseVector::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : support()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Coeff a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << "e" << x.compact();
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Adjacency products

AdjacencyWorkspace::AdjacencyWorkspace(const SRGraph& g) : g_(g), acc_(g.size(), 0) {}

SparseVector AdjacencyWorkspace::apply(const SparseVector& v) {
  if (v.d() != g_.d() || v.n() != g_.n()) throw MismatchError("vector and graph differ in (d,n)");
  for (const auto& e : v.entries()) {
    for (auto w : g_.neighbors(e.index)) {
      if (acc_[w] == 0) touched_.push_back(w);
      acc_[w] = checked_add(acc_[w], e.value);
      // A slot that returns to zero may be listed twice; the reset below keeps
      // the output unique.
    }
  }
  std::vector<SparseVector::Entry> out;
  out.reserve(touched_.size());
  for (auto w : touched_) {
    if (acc_[w] != 0) out.push_back(SparseVector::Entry{w, acc_[w]});
    acc_[w] = 0;
  }
  touched_.clear();
  return SparseVector(g_.d(), g_.n(), std::move(out));
}

bool AdjacencyWorkspace::is_eigenvector(const SparseVector& v, Coeff lambda) {
  SparseVector lv = v;
  lv *= lambda;
  return apply(v) == lv;
}

SparseVector apply_adjacency(const SRGraph& g, const SparseVector& v) {
  if (v.d() != g.d() || v.n() != g.n()) throw MismatchError("vector and graph differ in (d,n)");
  // Dense supports: gather over rows, which parallelizes without write races.
  if (v.support_size() * 8 >= g.size()) {
    const auto in = v.dense();
    std::vector<Coeff> out(g.size());
    kernels::adjacency_gather(g, in, out, Execution::parallel);
    return SparseVector::from_dense(g.d(), g.n(), out);
  }
  AdjacencyWorkspace ws(g);
  return ws.apply(v);
}

bool is_eigenvector(const SRGraph& g, const SparseVector& v, Coeff lambda) {
  SparseVector lv = v;
  lv *= lambda;
  return apply_adjacency(g, v) == lv;
}

}  // namespace srg
