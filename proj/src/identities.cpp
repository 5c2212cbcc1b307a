#include "ncomm/identities.hpp"

#include <chrono>

#include "ncomm/errors.hpp"

namespace ncomm {

namespace {

int pow_sign(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

void check_arity(int n) {
  if (n < 2) throw RangeError("the bracket width n must be at least 2");
}

}  // namespace

ShapeTerm homotopy_shape(int n) {
  check_arity(n);
  std::vector<ShapeTerm> inner;
  for (int k = n; k <= 2 * n - 1; ++k) inner.push_back(ShapeTerm::slot_ref(k));
  std::vector<ShapeTerm> outer;
  for (int k = 1; k <= n - 1; ++k) outer.push_back(ShapeTerm::slot_ref(k));
  outer.push_back(ShapeTerm::node(std::move(inner)));
  return ShapeTerm::node(std::move(outer));
}

ShuffleSpec homotopy_shuffles(int n) {
  check_arity(n);
  return ShuffleSpec{{n - 1, n}, {}, {}};
}

ShapeTerm nested_shape(int n) {
  check_arity(n);
  std::vector<ShapeTerm> inner;
  for (int k = 2 * n - 1; k <= 3 * n - 2; ++k)
    inner.push_back(ShapeTerm::slot_ref(k));
  std::vector<ShapeTerm> middle;
  middle.push_back(ShapeTerm::var(1));
  for (int k = n + 1; k <= 2 * n - 2; ++k)
    middle.push_back(ShapeTerm::slot_ref(k));
  middle.push_back(ShapeTerm::node(std::move(inner)));
  std::vector<ShapeTerm> outer;
  for (int k = 1; k <= n - 1; ++k) outer.push_back(ShapeTerm::slot_ref(k));
  outer.push_back(ShapeTerm::node(std::move(middle)));
  return ShapeTerm::node(std::move(outer));
}

ShuffleSpec nested_shuffles(int n) {
  check_arity(n);
  // Blocks n-1 / n-1 / n on 3n-2 positions, with 1 pinned to the head of
  // the middle block.
  return ShuffleSpec{{n - 1, n - 1, n}, {{n, 1}}, {}};
}

ShapeTerm split_shape(int n) {
  check_arity(n);
  std::vector<ShapeTerm> middle;
  middle.push_back(ShapeTerm::var(1));
  for (int k = n; k <= 2 * n - 2; ++k) middle.push_back(ShapeTerm::slot_ref(k));
  std::vector<ShapeTerm> tail;
  for (int k = 2 * n - 1; k <= 3 * n - 2; ++k)
    tail.push_back(ShapeTerm::slot_ref(k));
  std::vector<ShapeTerm> outer;
  for (int k = 1; k <= n - 2; ++k) outer.push_back(ShapeTerm::slot_ref(k));
  outer.push_back(ShapeTerm::node(std::move(middle)));
  outer.push_back(ShapeTerm::node(std::move(tail)));
  return ShapeTerm::node(std::move(outer));
}

ShuffleSpec split_shuffles(int n) {
  check_arity(n);
  // Blocks n-2 / n / n, 1 pinned to the head of the second block. The order
  // link between the two bracket heads is implied by the pin; it is kept so
  // the enumeration matches the family definition literally.
  return ShuffleSpec{{n - 2, n, n}, {{n - 1, 1}}, {{n - 1, 2 * n - 1}}};
}

Poly homotopy_poly(int n, const ExpandOptions& opts) {
  check_arity(n);
  if (n > kMaxHomotopyN)
    throw CapacityError(
        "full expansion of the generalized Jacobi sum is budgeted to n <= 6; "
        "use homotopy_leading_coeff for the leading coefficient at larger n");
  const ShapeTerm shape = homotopy_shape(n);
  const ShuffleSpec spec = homotopy_shuffles(n);
  if (n <= 5 || opts.first_letter != 0)
    return expand_shuffle_sum(shape, spec, CommutatorKind::kLie, true, opts);
  // At n = 6 the live map would span most of the 11-letter words, so the
  // expansion runs once per leading letter; the slices have disjoint
  // supports and splice back into the exact sum.
  Poly total;
  for (int letter = 1; letter <= 2 * n - 1; ++letter) {
    ExpandOptions slice = opts;
    slice.first_letter = letter;
    total.absorb_disjoint(
        expand_shuffle_sum(shape, spec, CommutatorKind::kLie, true, slice));
  }
  return total;
}

Poly form_poly(FormKind form, CommutatorKind kind, int n,
               const ExpandOptions& opts) {
  check_arity(n);
  if (n > kMaxFormN)
    throw CapacityError(
        "full expansion of the degree-3 forms is budgeted to n <= 4; use the "
        "targeted coefficient table for larger n");
  const bool signed_outer = (kind == CommutatorKind::kLie);
  if (form == FormKind::kNested)
    return expand_shuffle_sum(nested_shape(n), nested_shuffles(n), kind,
                              signed_outer, opts);
  return expand_shuffle_sum(split_shape(n), split_shuffles(n), kind,
                            signed_outer, opts);
}

Poly form_combination(const Coeff& lambda, CommutatorKind kind, int n,
                      const ExpandOptions& opts) {
  return combine(form_poly(FormKind::kNested, kind, n, opts),
                 form_poly(FormKind::kSplit, kind, n, opts), lambda);
}

long long coeff_via_cases(FormKind form, CommutatorKind kind, int n, int i) {
  check_arity(n);
  if (i < 1 || i > 3 * n - 2)
    throw RangeError("coefficient index must lie in 1..3n-2");
  const bool lie = (kind == CommutatorKind::kLie);
  long long total = 0;
  if (form == FormKind::kNested) {
    // Chains [2,3n-2] > [p+1,p+2n-2] > [q,q+n-1]. The contribution of a
    // chain is its window signature times the sign of routing letter 1 to
    // position i inside the middle window; i outside both admissible
    // stretches contributes nothing.
    for (int p = 1; p <= n; ++p) {
      const int q_hi = std::min(p + n - 1, 2 * n - 1);
      for (int q = p + 1; q <= q_hi; ++q) {
        int placement;
        if (p <= i && i <= q - 1) {
          placement = pow_sign(i + 1 + p - q);
        } else if (q + n - 1 <= i && i <= p + 2 * n - 2) {
          placement = pow_sign(n + p + i - q);
        } else {
          continue;
        }
        const int shuffle_sign = pow_sign((p + 1 - q) * n + 1);
        total += lie ? placement * shuffle_sign : 1;
      }
    }
    return total;
  }
  // Split form: the two bracket windows [p+1,p+n-1] and [q,q+n-1] are
  // disjoint, with letter 1 landing inside the first one (p <= i <= p+n-1).
  // Window order gives the two cases q >= p+n and p >= q+n-1; the signature
  // is the same expression in both.
  for (int p = 1; p <= 2 * n - 1; ++p) {
    if (i < p || i > p + n - 1) continue;
    for (int q = 2; q <= 2 * n - 1; ++q) {
      const bool case_one = (q >= p + n);
      const bool case_two = (p >= q + n - 1);
      if (!case_one && !case_two) continue;
      if (lie) {
        const int shuffle_sign = pow_sign((p + q + 1) * n + p + 1);
        const int placement = pow_sign(i + q + n);
        total += placement * shuffle_sign;
      } else {
        total += 1;
      }
    }
  }
  return total;
}

CoeffTable coeff_table(FormKind form, CommutatorKind kind, int n,
                       TableMethod method, const ExpandOptions& opts) {
  check_arity(n);
  CoeffTable table;
  table.n = n;
  table.variant = kind;
  const int m = 3 * n - 2;
  table.values.reserve(static_cast<std::size_t>(m));
  if (method == TableMethod::kFullExpansion) {
    table.source = CoeffTable::Source::kFullExpansion;
    const Poly p = form_poly(form, kind, n, opts);
    for (int i = 1; i <= m; ++i)
      table.values.push_back(p.coefficient_of(basis_word(n, i)));
  } else {
    if (n > kMaxTargetedN)
      throw CapacityError("targeted coefficient tables are budgeted to n <= 8");
    table.source = CoeffTable::Source::kCaseAnalysis;
    for (int i = 1; i <= m; ++i)
      table.values.push_back(coeff_via_cases(form, kind, n, i));
  }
  return table;
}

long long homotopy_leading_coeff(int n) {
  check_arity(n);
  long long sum = 0;
  for (int i = 0; i <= n - 1; ++i)
    sum += pow_sign(static_cast<long long>(n - 1 - i) * (n + 1));
  return sum;
}

namespace {

IdentityReport verify_form_difference(int theorem, int n,
                                      std::optional<std::uint64_t> modulus,
                                      VerifyMethod method,
                                      const ExpandOptions& opts) {
  const CommutatorKind kind =
      (theorem == 2) ? CommutatorKind::kLie : CommutatorKind::kJordan;
  IdentityReport report;
  report.theorem = theorem;
  report.n = n;
  report.modulus = modulus;

  const bool full_ok = n <= kMaxFormN;
  const bool want_full = (method == VerifyMethod::kFull) ||
                         (method == VerifyMethod::kAuto && full_ok);
  if (want_full) {
    if (!full_ok)
      throw CapacityError("full expansion of the degree-3 forms needs n <= 4");
    ExpandStats stats;
    ExpandOptions run = opts;
    run.stats = &stats;
    Poly diff = form_combination(-1, kind, n, run);
    if (modulus) diff = diff.reduce_mod(*modulus);
    report.method = "full-expansion";
    report.generated_terms = stats.generated_terms;
    report.distinct_terms = diff.term_count();
    report.holds = diff.is_zero();
    if (!report.holds) {
      auto witness = diff.leading_witness();
      report.witness_word = witness->first;
      report.witness_coeff = witness->second;
    }
    return report;
  }
  if (n > kMaxTargetedN)
    throw CapacityError("theorem verification is budgeted to n <= 8");
  report.method = "targeted-mu";
  const CoeffTable a =
      coeff_table(FormKind::kNested, kind, n, TableMethod::kCaseAnalysis);
  const CoeffTable b =
      coeff_table(FormKind::kSplit, kind, n, TableMethod::kCaseAnalysis);
  report.holds = true;
  for (int i = 1; i <= 3 * n - 2; ++i) {
    Coeff d = a.at(i) - b.at(i);
    if (modulus) {
      d %= static_cast<long long>(*modulus);
      if (d < 0) d += static_cast<long long>(*modulus);
    }
    if (d != 0) {
      report.holds = false;
      if (3 * n - 2 <= Word::kMaxLetters) report.witness_word = basis_word(n, i);
      report.witness_coeff = d;
      break;
    }
  }
  report.distinct_terms = static_cast<std::uint64_t>(3 * n - 2);
  return report;
}

}  // namespace

IdentityReport verify_theorem(int theorem, int n,
                              std::optional<std::uint64_t> modulus,
                              VerifyMethod method, const ExpandOptions& opts) {
  check_arity(n);
  if (modulus && *modulus < 2) throw RangeError("modulus must be at least 2");
  const auto started = std::chrono::steady_clock::now();
  IdentityReport report;
  switch (theorem) {
    case 1: {
      if (method == VerifyMethod::kTargeted)
        throw CapacityError("theorem 1 is verified by full expansion only");
      if (n > kMaxHomotopyN)
        throw CapacityError("theorem 1 verification is budgeted to n <= 6");
      report.theorem = 1;
      report.n = n;
      report.modulus = modulus;
      report.method = "full-expansion";
      ExpandStats stats;
      ExpandOptions run = opts;
      run.stats = &stats;
      Poly sum = homotopy_poly(n, run);
      if (modulus) sum = sum.reduce_mod(*modulus);
      report.generated_terms = stats.generated_terms;
      report.distinct_terms = sum.term_count();
      report.holds = sum.is_zero();
      if (!report.holds) {
        auto witness = sum.leading_witness();
        report.witness_word = witness->first;
        report.witness_coeff = witness->second;
      }
      break;
    }
    case 2:
    case 3:
      report = verify_form_difference(theorem, n, modulus, method, opts);
      break;
    default:
      throw RangeError("theorem id must be 1, 2 or 3");
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

}  // namespace ncomm
