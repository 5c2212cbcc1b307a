#include "ncomm/permutations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ncomm/errors.hpp"

namespace ncomm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int m = size();
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v)])
      throw ShapeError("permutation images must be a bijection of 1..m");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

int Permutation::sign() const {
  int inversions = 0;
  const int m = size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)])
        ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw ShapeError("composed permutations must act on the same set");
  std::vector<int> images(static_cast<std::size_t>(size()));
  for (int i = 1; i <= size(); ++i)
    images[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(images));
}

int ShuffleSpec::size() const {
  return std::accumulate(block_lengths.begin(), block_lengths.end(), 0);
}

void ShuffleSpec::validate() const {
  const int m = size();
  for (int len : block_lengths)
    if (len < 0) throw ShapeError("block lengths must be nonnegative");
  for (auto [pos, value] : fixed_points)
    if (pos < 1 || pos > m || value < 1 || value > m)
      throw ShapeError("fixed point out of range");
  for (auto [a, b] : order_links)
    if (a < 1 || a > m || b < 1 || b > m || a == b)
      throw ShapeError("order link out of range");
}

namespace {

// Positions are filled left to right; within a block each value must exceed
// the previous one, so every block comes out strictly increasing and choices
// enumerate in lexicographic image order. Constraints prune as soon as the
// positions they mention are filled.
struct ShuffleEnumerator {
  const ShuffleSpec& spec;
  const std::function<void(const Permutation&)>& emit;
  int m;
  std::vector<int> block_start_of;  // position (0-based) -> block start
  std::vector<int> images;          // 0-based positions, values 1-based
  std::vector<bool> used;
  // constraints indexed by the position at which they become decidable
  std::vector<std::vector<int>> fixed_at;                   // required value
  std::vector<std::vector<std::pair<int, bool>>> links_at;  // (other pos, this_is_left)

  ShuffleEnumerator(const ShuffleSpec& s,
                    const std::function<void(const Permutation&)>& fn)
      : spec(s), emit(fn), m(s.size()) {
    images.assign(static_cast<std::size_t>(m), 0);
    used.assign(static_cast<std::size_t>(m) + 1, false);
    block_start_of.reserve(static_cast<std::size_t>(m));
    int start = 0;
    for (int len : spec.block_lengths) {
      for (int k = 0; k < len; ++k) block_start_of.push_back(start);
      start += len;
    }
    fixed_at.assign(static_cast<std::size_t>(m), {});
    links_at.assign(static_cast<std::size_t>(m), {});
    for (auto [pos, value] : spec.fixed_points)
      fixed_at[static_cast<std::size_t>(pos - 1)].push_back(value);
    for (auto [a, b] : spec.order_links) {
      const int later = std::max(a, b) - 1;
      const int other = (std::max(a, b) == a ? b : a) - 1;
      links_at[static_cast<std::size_t>(later)].push_back({other, later == a - 1});
    }
  }

  bool admissible(int pos, int value) const {
    for (int required : fixed_at[static_cast<std::size_t>(pos)])
      if (value != required) return false;
    for (auto [other, this_is_left] : links_at[static_cast<std::size_t>(pos)]) {
      const int ov = images[static_cast<std::size_t>(other)];
      if (this_is_left ? (value >= ov) : (ov >= value)) return false;
    }
    return true;
  }

  void fill(int pos) {
    if (pos == m) {
      emit(Permutation(images));
      return;
    }
    const int lower =
        (pos > block_start_of[static_cast<std::size_t>(pos)])
            ? images[static_cast<std::size_t>(pos - 1)] + 1
            : 1;
    for (int v = lower; v <= m; ++v) {
      if (used[static_cast<std::size_t>(v)] || !admissible(pos, v)) continue;
      used[static_cast<std::size_t>(v)] = true;
      images[static_cast<std::size_t>(pos)] = v;
      fill(pos + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  }
};

}  // namespace

void for_each_shuffle(const ShuffleSpec& spec,
                      const std::function<void(const Permutation&)>& fn) {
  spec.validate();
  if (spec.size() == 0) return;
  ShuffleEnumerator(spec, fn).fill(0);
}

std::vector<Permutation> enumerate_shuffles(const ShuffleSpec& spec) {
  std::vector<Permutation> out;
  for_each_shuffle(spec, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

Word basis_word(int n, int i) {
  const int m = 3 * n - 2;
  if (n < 2 || m > Word::kMaxLetters)
    throw CapacityError("basis words are limited to 16 letters (n <= 6)");
  if (i < 1 || i > m) throw RangeError("basis word index must lie in 1..3n-2");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(m));
  for (int v = 2; v <= i; ++v) letters.push_back(v);
  letters.push_back(1);
  for (int v = i + 1; v <= m; ++v) letters.push_back(v);
  return Word(letters);
}

}  // namespace ncomm
