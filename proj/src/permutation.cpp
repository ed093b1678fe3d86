#include "srg/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "srg/errors.hpp"

namespace srg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> s = images_;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 1) throw DomainError("not a permutation of 1.." + std::to_string(s.size()));
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversal(int d) {
  std::vector<int> v(d);
  for (int i = 0; i < d; ++i) v[i] = d - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& word) {
  std::vector<int> v;
  for (char ch : word) {
    if (ch < '1' || ch > '9') throw DomainError("bad permutation word \"" + word + "\"");
    v.push_back(ch - '0');
  }
  return Permutation(std::move(v));
}

int Permutation::inversions() const {
  int c = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j) c += images_[i] > images_[j];
  return c;
}

std::string Permutation::str() const {
  std::string s;
  const bool compact = images_.size() <= 9;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!compact && i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s;
}

std::vector<Permutation> all_permutations(int d) {
  if (d < 0) throw DomainError("S_d needs d >= 0");
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace srg
