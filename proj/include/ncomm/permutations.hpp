#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ncomm/polynomial.hpp"

namespace ncomm {

/// A permutation of {1,...,m}, stored as the image sequence sigma(1..m).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  /// sigma(i), positions 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  /// Parity: +1 for even, -1 for odd.
  int sign() const;

  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// A family of shuffle permutations: sigma is strictly increasing on each of
/// the consecutive blocks, and satisfies the extra positional constraints.
/// Zero-length blocks are allowed (they contribute no positions).
struct ShuffleSpec {
  std::vector<int> block_lengths;
  /// (position, required value), 1-based positions.
  std::vector<std::pair<int, int>> fixed_points;
  /// (a, b) requiring sigma(a) < sigma(b).
  std::vector<std::pair<int, int>> order_links;

  int size() const;
  void validate() const;
};

/// All permutations matching the spec, in lexicographic order of the image
/// sequence, without duplicates. Inconsistent constraints yield an empty
/// result. Blocks are filled by ordered value selection, never by filtering
/// the full symmetric group.
std::vector<Permutation> enumerate_shuffles(const ShuffleSpec& spec);

/// Streaming variant of enumerate_shuffles, same order.
void for_each_shuffle(const ShuffleSpec& spec,
                      const std::function<void(const Permutation&)>& fn);

/// The canonical extraction word of width 3n-2 with letter 1 at position i:
/// (2, 3, ..., i, 1, i+1, ..., 3n-2).
Word basis_word(int n, int i);

}  // namespace ncomm
