#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncomm/expansion.hpp"
#include "ncomm/polynomial.hpp"

namespace ncomm {

/// The two bracket shapes of omega-degree three: the fully nested comb
/// (form 1) and the split shape with two sibling brackets (form 2).
enum class FormKind { kNested = 1, kSplit = 2 };

enum class TableMethod { kFullExpansion, kCaseAnalysis };

/// Coefficients of a symmetrized degree-3 form at the basis words
/// basis_word(n, i), i = 1..3n-2.
struct CoeffTable {
  int n = 0;
  CommutatorKind variant = CommutatorKind::kLie;
  enum class Source { kFullExpansion, kCaseAnalysis, kClosedForm } source =
      Source::kFullExpansion;
  std::vector<Coeff> values;  // values[i-1] is the coefficient at basis word i

  const Coeff& at(int i) const { return values.at(static_cast<std::size_t>(i - 1)); }
};

struct IdentityReport {
  int theorem = 0;
  int n = 0;
  std::optional<std::uint64_t> modulus;
  bool holds = false;
  std::optional<Word> witness_word;  // lexicographically least nonzero word
  Coeff witness_coeff = 0;
  std::string method;  // "full-expansion" or "targeted-mu"
  std::uint64_t distinct_terms = 0;
  std::uint64_t generated_terms = 0;
  double elapsed_seconds = 0.0;
};

enum class VerifyMethod { kAuto, kFull, kTargeted };

// Full-expansion budgets. Beyond them the targeted coefficient extractor is
// the only route; theorem 1 has no targeted route.
inline constexpr int kMaxHomotopyN = 6;
inline constexpr int kMaxFormN = 4;
inline constexpr int kMaxTargetedN = 8;

/// The degree-2 generalized Jacobi sum over (n-1,n)-shuffles, expanded under
/// the Lie n-commutator. Exact zero for even n.
Poly homotopy_poly(int n, const ExpandOptions& opts = {});

/// The degree-3 symmetrized form over 3n-2 variables with t1 fixed at the
/// head of the middle bracket; signed shuffles for the Lie variant, unsigned
/// for Jordan.
Poly form_poly(FormKind form, CommutatorKind kind, int n,
               const ExpandOptions& opts = {});

/// form_poly(kNested) + lambda * form_poly(kSplit).
Poly form_combination(const Coeff& lambda, CommutatorKind kind, int n,
                      const ExpandOptions& opts = {});

/// Coefficient table of one form, by full expansion (n <= 4) or by the
/// targeted segment-sum extractor (n <= 8).
CoeffTable coeff_table(FormKind form, CommutatorKind kind, int n,
                       TableMethod method, const ExpandOptions& opts = {});

/// Coefficient at basis word i computed directly from the segment-chain
/// decomposition of the form, without expanding anything: every contributing
/// shuffle corresponds to a placement of the bracket windows inside
/// [2, 3n-2], summed with the window signature. The Jordan variant counts
/// the same placements unsigned.
long long coeff_via_cases(FormKind form, CommutatorKind kind, int n, int i);

/// Coefficient of the generalized Jacobi sum at the fully nested word, by
/// the literal alternating sum; 0 for even n and n for odd n.
long long homotopy_leading_coeff(int n);

/// Verifies one of the three identities. Theorem 1 expands the generalized
/// Jacobi sum (n <= 6, reduced mod `modulus` when given). Theorems 2 and 3
/// test the difference of the two forms: by full expansion within budget,
/// otherwise by comparing the two targeted coefficient tables.
IdentityReport verify_theorem(int theorem, int n,
                              std::optional<std::uint64_t> modulus = {},
                              VerifyMethod method = VerifyMethod::kAuto,
                              const ExpandOptions& opts = {});

// Shape and shuffle-family builders, exposed for tests and the oracle.
ShapeTerm homotopy_shape(int n);
ShapeTerm nested_shape(int n);
ShapeTerm split_shape(int n);
ShuffleSpec homotopy_shuffles(int n);
ShuffleSpec nested_shuffles(int n);
ShuffleSpec split_shuffles(int n);

}  // namespace ncomm
