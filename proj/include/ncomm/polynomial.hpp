#pragma once

#include <absl/container/flat_hash_map.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncomm/errors.hpp"

namespace ncomm {

/// Exact signed integer coefficient, arbitrary precision.
using Coeff = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;

/// A flat associative monomial: a sequence of distinct variable indices.
/// Letters are packed four bits per position into a 64-bit key, which caps
/// both the word length and the letter values at 16.
class Word {
 public:
  static constexpr int kMaxLetters = 16;

  Word() = default;  // empty sentinel; not a valid monomial
  Word(std::initializer_list<int> letters);
  explicit Word(std::span<const int> letters);
  static Word from_packed(std::uint64_t bits, int length);

  int size() const { return len_; }
  bool empty() const { return len_ == 0; }
  /// Letter at 0-based position.
  int letter_at(int pos) const {
    return static_cast<int>((bits_ >> (4 * pos)) & 0xF) + 1;
  }
  std::vector<int> letters() const;

  std::uint64_t packed() const { return bits_; }
  /// Bit (letter-1) set for every letter present.
  std::uint16_t letter_mask() const;

  /// Concatenation; the letter sets must be disjoint.
  Word concat(const Word& other) const;

  bool operator==(const Word&) const = default;
  /// Lexicographic order on the letter sequences.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  std::uint64_t bits_ = 0;
  int len_ = 0;
};

std::uint16_t packed_letter_mask(std::uint64_t bits, int length);

/// Homogeneous multilinear polynomial with exact integer coefficients:
/// a finite map from words to nonzero coefficients. All stored words share
/// one length and one letter set; the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  static Poly monomial(const Word& w, Coeff c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int word_length() const { return len_; }
  std::uint16_t letter_mask() const { return mask_; }

  /// Stored coefficient, or zero if the word is absent.
  Coeff coefficient_of(const Word& w) const;

  /// Adds c * w, keeping the homogeneity invariant and purging zeros.
  void add_term(const Word& w, const Coeff& c);

  /// a + scalar * b. Both operands must be zero or share one variable set.
  friend Poly combine(const Poly& a, const Poly& b, const Coeff& scalar);

  /// Distributes word concatenation over the factors; the factor variable
  /// sets must be pairwise disjoint.
  static Poly concat_product(std::span<const Poly> factors);

  /// Every coefficient reduced to its least residue in [0, modulus).
  Poly reduce_mod(std::uint64_t modulus) const;

  /// Letters substituted through image_of_letter (1-based: letter l becomes
  /// image_of_letter[l-1]); the image letters must again be distinct.
  Poly relabeled(std::span<const int> image_of_letter) const;

  Poly negated() const;

  /// Terms in lexicographic word order.
  std::vector<std::pair<Word, Coeff>> sorted_terms() const;
  /// Lexicographically least term, if any.
  std::optional<std::pair<Word, Coeff>> leading_witness() const;

  /// Merges a polynomial with a disjoint word support (used to splice
  /// independently accumulated slices of one expansion).
  void absorb_disjoint(Poly&& other);

  bool operator==(const Poly& other) const;

 private:
  friend class PolyAccumulator;
  int len_ = 0;
  std::uint16_t mask_ = 0;
  absl::flat_hash_map<std::uint64_t, Coeff> terms_;
};

Poly combine(const Poly& a, const Poly& b, const Coeff& scalar);

/// Mutable accumulator for building a Poly from a large stream of signed
/// words. Small coefficients ride a checked 64-bit fast path; any overflow
/// promotes the running value into an exact big-integer side store, so the
/// final coefficients are always exact. Merging is commutative and
/// associative: the resulting Poly does not depend on insertion or merge
/// order.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(int word_length);

  void add(std::uint64_t packed_word, std::int64_t delta);
  void add_big(std::uint64_t packed_word, const Coeff& delta);
  void merge(PolyAccumulator&& other);

  std::uint64_t insertions() const { return insertions_; }

  /// Consumes the accumulator; validates homogeneity of the survivors.
  Poly take_poly() &&;

 private:
  void promote(std::uint64_t packed_word, std::int64_t value);

  int len_;
  absl::flat_hash_map<std::uint64_t, std::int64_t> fast_;
  absl::flat_hash_map<std::uint64_t, Coeff> big_;
  std::uint64_t insertions_ = 0;
};

}  // namespace ncomm
