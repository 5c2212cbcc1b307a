#include "ncomm/matrix_oracle.hpp"

#include <random>

#include "ncomm/errors.hpp"
#include "ncomm/identities.hpp"

namespace ncomm {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_config(const MatrixRingConfig& cfg) {
  if (cfg.dimension < 2) throw RangeError("matrix dimension must be at least 2");
  if (!is_prime(cfg.modulus)) throw DomainError("the matrix modulus must be prime");
  if (cfg.modulus >= (std::uint64_t{1} << 31))
    throw CapacityError("matrix moduli are limited to 31 bits");
  if (cfg.trials < 1) throw RangeError("at least one trial is required");
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  // splitmix64 of (seed, trial) so trials are independent reproducible
  // streams regardless of evaluation order.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z = z ^ (z >> 31);
  return std::mt19937_64(z);
}

MatMod random_matrix(int dim, std::uint64_t p, std::mt19937_64& rng) {
  MatMod m(dim, p);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m.set(r, c, rng() % p);
  return m;
}

}  // namespace

MatMod::MatMod(int dim, std::uint64_t modulus)
    : dim_(dim), p_(modulus), a_(static_cast<std::size_t>(dim) * dim, 0) {
  if (dim < 1) throw RangeError("matrix dimension must be positive");
  if (modulus < 2 || modulus >= (std::uint64_t{1} << 31))
    throw RangeError("matrix modulus must lie in [2, 2^31)");
}

bool MatMod::is_zero() const {
  for (std::uint64_t v : a_)
    if (v != 0) return false;
  return true;
}

void MatMod::add_scaled(const MatMod& other, std::uint64_t scalar) {
  if (other.dim_ != dim_ || other.p_ != p_)
    throw ShapeError("matrix shapes and moduli must match");
  const std::uint64_t s = scalar % p_;
  for (std::size_t i = 0; i < a_.size(); ++i)
    a_[i] = (a_[i] + other.a_[i] * s) % p_;
}

MatMod MatMod::product(const MatMod& a, const MatMod& b) {
  if (a.dim_ != b.dim_ || a.p_ != b.p_)
    throw ShapeError("matrix shapes and moduli must match");
  const int k = a.dim_;
  MatMod out(k, a.p_);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      std::uint64_t acc = 0;
      for (int t = 0; t < k; ++t)
        acc = (acc + a.at(r, t) * b.at(t, c)) % a.p_;
      out.a_[static_cast<std::size_t>(r) * k + c] = acc;
    }
  return out;
}

MatMod eval_commutator(CommutatorKind kind, std::span<const MatMod> args) {
  if (args.size() < 2) throw ShapeError("a commutator needs at least two arguments");
  const int dim = args[0].dim();
  const std::uint64_t p = args[0].modulus();
  for (const MatMod& m : args)
    if (m.dim() != dim || m.modulus() != p)
      throw ShapeError("matrix shapes and moduli must match");
  MatMod sum(dim, p);
  for (const SlotPerm& sp : slot_perm_table(static_cast<int>(args.size()))) {
    MatMod prod = args[sp.idx[0]];
    for (std::size_t s = 1; s < args.size(); ++s)
      prod = MatMod::product(prod, args[sp.idx[s]]);
    const bool negative = (kind == CommutatorKind::kLie && sp.sign < 0);
    sum.add_scaled(prod, negative ? p - 1 : 1);
  }
  return sum;
}

MatMod eval_term(const TermTree& t, CommutatorKind kind,
                 std::span<const MatMod> assignment) {
  if (t.is_leaf()) {
    const std::size_t idx = static_cast<std::size_t>(t.leaf_letter() - 1);
    if (idx >= assignment.size())
      throw RangeError("assignment does not cover leaf variable");
    return assignment[idx];
  }
  std::vector<MatMod> kids;
  kids.reserve(t.children().size());
  for (const TermTree& c : t.children())
    kids.push_back(eval_term(c, kind, assignment));
  return eval_commutator(kind, kids);
}

FuzzReport fuzz_identity(int theorem, int n, const MatrixRingConfig& config) {
  if (n < 2) throw RangeError("the bracket width n must be at least 2");
  check_config(config);
  FuzzReport report;
  report.theorem = theorem;
  report.n = n;
  report.config = config;
  report.all_zero = true;

  struct Piece {
    Permutation sigma;
    TermTree term;
    int sign;
  };
  std::vector<Piece> pieces;
  auto add_pieces = [&](const ShapeTerm& shape, const ShuffleSpec& spec,
                        bool signed_outer, int global_sign) {
    for (const Permutation& sigma : enumerate_shuffles(spec)) {
      const int s = signed_outer ? sigma.sign() : 1;
      pieces.push_back({sigma, instantiate(shape, sigma), s * global_sign});
    }
  };

  CommutatorKind kind = CommutatorKind::kLie;
  int var_count = 0;
  switch (theorem) {
    case 1:
      kind = CommutatorKind::kLie;
      var_count = 2 * n - 1;
      add_pieces(homotopy_shape(n), homotopy_shuffles(n), true, 1);
      break;
    case 2:
    case 3:
      kind = (theorem == 2) ? CommutatorKind::kLie : CommutatorKind::kJordan;
      var_count = 3 * n - 2;
      add_pieces(nested_shape(n), nested_shuffles(n),
                 kind == CommutatorKind::kLie, 1);
      add_pieces(split_shape(n), split_shuffles(n),
                 kind == CommutatorKind::kLie, -1);
      break;
    default:
      throw RangeError("theorem id must be 1, 2 or 3");
  }

  const std::uint64_t p = config.modulus;
  for (int trial = 0; trial < config.trials; ++trial) {
    auto rng = trial_rng(config.seed, trial);
    std::vector<MatMod> assignment;
    assignment.reserve(static_cast<std::size_t>(var_count));
    for (int v = 0; v < var_count; ++v)
      assignment.push_back(random_matrix(config.dimension, p, rng));
    MatMod total(config.dimension, p);
    for (const Piece& piece : pieces)
      total.add_scaled(eval_term(piece.term, kind, assignment),
                       piece.sign > 0 ? 1 : p - 1);
    ++report.trials_run;
    if (!total.is_zero()) {
      report.all_zero = false;
      report.witness_trial = trial;
      break;
    }
  }
  return report;
}

}  // namespace ncomm
