#include "ncomm/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace ncomm {

namespace {

void check_letter(int letter) {
  if (letter < 1) throw ShapeError("letters are positive variable indices");
  if (letter > Word::kMaxLetters)
    throw CapacityError("letters above 16 do not fit the packed encoding");
}

}  // namespace

Word::Word(std::initializer_list<int> letters)
    : Word(std::span<const int>(letters.begin(), letters.size())) {}

Word::Word(std::span<const int> letters) {
  if (letters.size() > static_cast<std::size_t>(kMaxLetters))
    throw CapacityError("words are limited to 16 letters");
  std::uint16_t mask = 0;
  for (int l : letters) {
    check_letter(l);
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << (l - 1));
    if (mask & bit) throw ShapeError("multilinear words need distinct letters");
    mask = static_cast<std::uint16_t>(mask | bit);
    bits_ |= static_cast<std::uint64_t>(l - 1) << (4 * len_);
    ++len_;
  }
}

Word Word::from_packed(std::uint64_t bits, int length) {
  if (length < 0 || length > kMaxLetters)
    throw CapacityError("words are limited to 16 letters");
  Word w;
  w.bits_ = (length == 16) ? bits : (bits & ((std::uint64_t{1} << (4 * length)) - 1));
  w.len_ = length;
  return w;
}

std::vector<int> Word::letters() const {
  std::vector<int> out(static_cast<std::size_t>(len_));
  for (int i = 0; i < len_; ++i) out[static_cast<std::size_t>(i)] = letter_at(i);
  return out;
}

std::uint16_t packed_letter_mask(std::uint64_t bits, int length) {
  std::uint16_t mask = 0;
  for (int i = 0; i < length; ++i)
    mask = static_cast<std::uint16_t>(mask | (1u << ((bits >> (4 * i)) & 0xF)));
  return mask;
}

std::uint16_t Word::letter_mask() const { return packed_letter_mask(bits_, len_); }

Word Word::concat(const Word& other) const {
  if (len_ + other.len_ > kMaxLetters)
    throw CapacityError("concatenation exceeds the 16-letter limit");
  if (letter_mask() & other.letter_mask())
    throw ShapeError("concatenated words must have disjoint letter sets");
  Word w;
  w.bits_ = bits_ | (other.bits_ << (4 * len_));
  w.len_ = len_ + other.len_;
  return w;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  const int common = std::min(len_, other.len_);
  for (int i = 0; i < common; ++i) {
    const int a = letter_at(i), b = other.letter_at(i);
    if (a != b) return a <=> b;
  }
  return len_ <=> other.len_;
}

Poly Poly::monomial(const Word& w, Coeff c) {
  Poly p;
  p.add_term(w, c);
  return p;
}

Coeff Poly::coefficient_of(const Word& w) const {
  if (w.size() != len_) return 0;
  auto it = terms_.find(w.packed());
  return it == terms_.end() ? Coeff(0) : it->second;
}

void Poly::add_term(const Word& w, const Coeff& c) {
  if (c == 0) return;
  if (w.empty()) throw ShapeError("the empty word is not a monomial");
  if (terms_.empty()) {
    len_ = w.size();
    mask_ = w.letter_mask();
  } else if (w.size() != len_ || w.letter_mask() != mask_) {
    throw ShapeError("polynomial terms must share one variable set");
  }
  auto [it, inserted] = terms_.try_emplace(w.packed(), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  if (terms_.empty()) {
    len_ = 0;
    mask_ = 0;
  }
}

Poly combine(const Poly& a, const Poly& b, const Coeff& scalar) {
  if (!a.is_zero() && !b.is_zero() &&
      (a.len_ != b.len_ || a.mask_ != b.mask_))
    throw ShapeError("combined polynomials must share one variable set");
  Poly out = a;
  if (scalar == 0 || b.is_zero()) return out;
  if (out.is_zero()) {
    out.len_ = b.len_;
    out.mask_ = b.mask_;
  }
  for (const auto& [word, c] : b.terms_) {
    auto [it, inserted] = out.terms_.try_emplace(word, c * scalar);
    if (!inserted) {
      it->second += c * scalar;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  if (out.terms_.empty()) {
    out.len_ = 0;
    out.mask_ = 0;
  }
  return out;
}

Poly Poly::concat_product(std::span<const Poly> factors) {
  Poly acc;
  bool first = true;
  int total_len = 0;
  std::uint16_t total_mask = 0;
  for (const Poly& f : factors) {
    if (f.is_zero()) return Poly{};
    if (total_len + f.len_ > Word::kMaxLetters)
      throw CapacityError("product exceeds the 16-letter limit");
    if (total_mask & f.mask_)
      throw ShapeError("product factors must have disjoint variable sets");
    if (first) {
      acc = f;
      first = false;
    } else {
      Poly next;
      next.len_ = total_len + f.len_;
      next.mask_ = static_cast<std::uint16_t>(total_mask | f.mask_);
      next.terms_.reserve(acc.terms_.size() * f.terms_.size());
      for (const auto& [wa, ca] : acc.terms_)
        for (const auto& [wb, cb] : f.terms_)
          next.terms_.try_emplace(wa | (wb << (4 * total_len)), ca * cb);
      acc = std::move(next);
    }
    total_len += f.len_;
    total_mask = static_cast<std::uint16_t>(total_mask | f.mask_);
  }
  return acc;
}

Poly Poly::reduce_mod(std::uint64_t modulus) const {
  if (modulus < 2) throw RangeError("modulus must be at least 2");
  Poly out;
  const Coeff m(modulus);
  for (const auto& [word, c] : terms_) {
    Coeff r = c % m;
    if (r < 0) r += m;
    if (r != 0) out.add_term(Word::from_packed(word, len_), r);
  }
  return out;
}

Poly Poly::relabeled(std::span<const int> image_of_letter) const {
  Poly out;
  for (const auto& [word, c] : terms_) {
    std::vector<int> letters(static_cast<std::size_t>(len_));
    for (int i = 0; i < len_; ++i) {
      const int l = static_cast<int>((word >> (4 * i)) & 0xF) + 1;
      if (static_cast<std::size_t>(l) > image_of_letter.size())
        throw RangeError("relabeling map does not cover letter");
      letters[static_cast<std::size_t>(i)] =
          image_of_letter[static_cast<std::size_t>(l - 1)];
    }
    out.add_term(Word(letters), c);
  }
  return out;
}

Poly Poly::negated() const {
  Poly out = *this;
  for (auto& [word, c] : out.terms_) c = -c;
  return out;
}

std::vector<std::pair<Word, Coeff>> Poly::sorted_terms() const {
  std::vector<std::pair<Word, Coeff>> out;
  out.reserve(terms_.size());
  for (const auto& [word, c] : terms_)
    out.emplace_back(Word::from_packed(word, len_), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::optional<std::pair<Word, Coeff>> Poly::leading_witness() const {
  std::optional<std::pair<Word, Coeff>> best;
  for (const auto& [word, c] : terms_) {
    Word w = Word::from_packed(word, len_);
    if (!best || w < best->first) best = {std::move(w), c};
  }
  return best;
}

void Poly::absorb_disjoint(Poly&& other) {
  if (other.is_zero()) return;
  if (is_zero()) {
    *this = std::move(other);
    return;
  }
  if (other.len_ != len_ || other.mask_ != mask_)
    throw ShapeError("spliced polynomials must share one variable set");
  for (auto& [word, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(word, std::move(c));
    if (!inserted) throw ShapeError("spliced polynomials must have disjoint words");
    (void)it;
  }
}

bool Poly::operator==(const Poly& other) const {
  return len_ == other.len_ && terms_ == other.terms_;
}

PolyAccumulator::PolyAccumulator(int word_length) : len_(word_length) {
  if (word_length < 1 || word_length > Word::kMaxLetters)
    throw CapacityError("accumulator word length must lie in 1..16");
}

void PolyAccumulator::promote(std::uint64_t packed_word, std::int64_t value) {
  auto [it, inserted] = big_.try_emplace(packed_word, value);
  if (!inserted) it->second += value;
}

void PolyAccumulator::add(std::uint64_t packed_word, std::int64_t delta) {
  ++insertions_;
  auto [it, inserted] = fast_.try_emplace(packed_word, delta);
  if (inserted) return;
  std::int64_t sum;
  if (__builtin_add_overflow(it->second, delta, &sum)) {
    // Move the running value aside and restart the fast cell; the final
    // coefficient is the sum of both stores, so no precision is lost.
    promote(packed_word, it->second);
    it->second = delta;
    return;
  }
  if (sum == 0) {
    fast_.erase(it);
  } else {
    it->second = sum;
  }
}

void PolyAccumulator::add_big(std::uint64_t packed_word, const Coeff& delta) {
  ++insertions_;
  if (delta == 0) return;
  promote(packed_word, 0);
  big_[packed_word] += delta;
}

void PolyAccumulator::merge(PolyAccumulator&& other) {
  if (other.len_ != len_)
    throw ShapeError("merged accumulators must share the word length");
  const std::uint64_t total = insertions_ + other.insertions_;
  if (fast_.size() < other.fast_.size()) std::swap(fast_, other.fast_);
  for (const auto& [word, v] : other.fast_) add(word, v);
  for (auto& [word, v] : other.big_) {
    auto [it, inserted] = big_.try_emplace(word, std::move(v));
    if (!inserted) it->second += v;
  }
  other.fast_.clear();
  other.big_.clear();
  insertions_ = total;
}

Poly PolyAccumulator::take_poly() && {
  Poly out;
  std::uint16_t mask = 0;
  bool first = true;
  auto push = [&](std::uint64_t word, Coeff&& c) {
    if (c == 0) return;
    const std::uint16_t wmask = packed_letter_mask(word, len_);
    if (first) {
      mask = wmask;
      first = false;
    } else if (wmask != mask) {
      throw ShapeError("accumulated words must share one variable set");
    }
    out.terms_.try_emplace(word, std::move(c));
  };
  if (big_.empty()) {
    out.terms_.reserve(fast_.size());
    for (const auto& [word, v] : fast_) push(word, Coeff(v));
  } else {
    for (const auto& [word, v] : fast_) {
      auto [it, inserted] = big_.try_emplace(word, v);
      if (!inserted) it->second += v;
    }
    for (auto& [word, c] : big_) push(word, std::move(c));
  }
  fast_.clear();
  big_.clear();
  if (!out.terms_.empty()) {
    out.len_ = len_;
    out.mask_ = mask;
  }
  return out;
}

}  // namespace ncomm
