#pragma once

#include <string>
#include <vector>

namespace srg {

/// Bijection on {1..d} in one-line notation: images()[i-1] = pi_i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int d);
  static Permutation reversal(int d);
  /// One-line notation "3142"; single digits only (d <= 9).
  static Permutation parse(const std::string& word);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }  // 1-based
  const std::vector<int>& images() const { return images_; }

  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// All of S_d in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int d);

}  // namespace srg
