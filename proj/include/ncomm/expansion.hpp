#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ncomm/permutations.hpp"
#include "ncomm/polynomial.hpp"
#include "ncomm/term_tree.hpp"

namespace ncomm {

/// Which n-commutator replaces each bracket: the alternating (Lie) sum over
/// all argument orders, or the unsigned (Jordan) sum.
enum class CommutatorKind { kLie, kJordan };

struct ExpandStats {
  std::uint64_t generated_terms = 0;
};

struct ExpandOptions {
  /// Worker threads; 0 resolves to NCOMM_JOBS, then hardware concurrency.
  int jobs = 0;
  /// When nonzero, only terms whose flat word starts with this letter are
  /// accumulated. Slicing an expansion by first letter bounds the live map;
  /// the slices have disjoint supports and splice back losslessly.
  int first_letter = 0;
  ExpandStats* stats = nullptr;
};

/// Expands a bracket template under the chosen n-commutator into a flat
/// polynomial: bottom-up, each node becomes the (signed) sum over all
/// orderings of the concatenation of its expanded children. Leaves must be
/// distinct.
Poly expand(const TermTree& t, CommutatorKind kind,
            const ExpandOptions& opts = {});

/// A bracket template with unresolved leaves: positive `slot` values name
/// shuffle positions (filled with sigma(slot)), `var` leaves name literal
/// variables inserted verbatim.
struct ShapeTerm {
  int slot = 0;  // >0: sigma(slot); <0: literal variable -slot; 0: node
  std::vector<ShapeTerm> kids;

  static ShapeTerm slot_ref(int position);
  static ShapeTerm var(int letter);
  static ShapeTerm node(std::vector<ShapeTerm> kids);

  int slot_count() const;
};

TermTree instantiate(const ShapeTerm& shape, const Permutation& sigma);

/// Sum over the enumerated shuffle family of
///   (sign sigma when signed_outer) * expand(shape instantiated at sigma).
/// The shuffle stream is partitioned across workers into local accumulators
/// and merged; the result is independent of worker count and merge order.
Poly expand_shuffle_sum(const ShapeTerm& shape, const ShuffleSpec& spec,
                        CommutatorKind kind, bool signed_outer,
                        const ExpandOptions& opts = {});

/// (permutation of 0..n-1, parity) pairs for one bracket width, cached.
struct SlotPerm {
  std::array<std::uint8_t, 16> idx;
  std::int8_t sign;
};
std::span<const SlotPerm> slot_perm_table(int n);

/// Worker count resolution used by the expansion engine (options value,
/// else NCOMM_JOBS, else hardware concurrency).
int resolve_jobs(int requested);

}  // namespace ncomm
