#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ncomm/expansion.hpp"

namespace ncomm {

/// Dense square matrix over Z/p, p prime.
class MatMod {
 public:
  MatMod(int dim, std::uint64_t modulus);

  int dim() const { return dim_; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }
  void set(int r, int c, std::uint64_t v) {
    a_[static_cast<std::size_t>(r) * dim_ + c] = v % p_;
  }

  bool is_zero() const;
  void add_scaled(const MatMod& other, std::uint64_t scalar);

  static MatMod product(const MatMod& a, const MatMod& b);

  bool operator==(const MatMod&) const = default;

 private:
  int dim_;
  std::uint64_t p_;
  std::vector<std::uint64_t> a_;
};

struct MatrixRingConfig {
  int dimension = 3;
  std::uint64_t modulus = 101;  // prime
  std::uint64_t seed = 0;
  int trials = 100;
};

/// Sum over all argument orders of the n-fold matrix product, signed for the
/// Lie kind and unsigned for Jordan.
MatMod eval_commutator(CommutatorKind kind, std::span<const MatMod> args);

/// Bracket template evaluated on a concrete matrix assignment (leaf letter l
/// maps to assignment[l-1]), each node applied as an n-commutator.
MatMod eval_term(const TermTree& t, CommutatorKind kind,
                 std::span<const MatMod> assignment);

struct FuzzReport {
  int theorem = 0;
  int n = 0;
  MatrixRingConfig config;
  bool all_zero = false;
  std::optional<int> witness_trial;  // 0-based index of first nonzero trial
  int trials_run = 0;
};

/// Evaluates the defining sum of the theorem (the generalized Jacobi sum for
/// theorem 1, the difference of the two degree-3 forms for theorems 2 and 3)
/// on independently sampled random matrices, one nested commutator
/// evaluation per shuffle term. Trials draw from per-trial generators
/// derived from the seed, so reports are reproducible. A nonzero trial is a
/// counterexample witness, not an error.
FuzzReport fuzz_identity(int theorem, int n, const MatrixRingConfig& config);

}  // namespace ncomm
