#include "ncomm/expansion.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "ncomm/errors.hpp"

namespace ncomm {

namespace {

constexpr int kMaxBracketWidth = 9;  // widest cached permutation table

std::vector<SlotPerm> build_slot_perms(int n) {
  // Lexicographic generation; picking the value at sorted index j of the
  // remaining pool contributes j inversions.
  std::vector<SlotPerm> out;
  std::vector<std::uint8_t> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  SlotPerm current{};
  auto rec = [&](auto&& self, int depth, std::vector<std::uint8_t>& avail,
                 int inversions) -> void {
    if (depth == n) {
      current.sign = (inversions % 2 == 0) ? 1 : -1;
      out.push_back(current);
      return;
    }
    for (std::size_t j = 0; j < avail.size(); ++j) {
      const std::uint8_t v = avail[j];
      current.idx[static_cast<std::size_t>(depth)] = v;
      avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(j));
      self(self, depth + 1, avail, inversions + static_cast<int>(j));
      avail.insert(avail.begin() + static_cast<std::ptrdiff_t>(j), v);
    }
  };
  rec(rec, 0, pool, 0);
  return out;
}

std::vector<SlotPerm> g_perm_tables[kMaxBracketWidth + 1];
std::once_flag g_perm_once[kMaxBracketWidth + 1];

}  // namespace

std::span<const SlotPerm> slot_perm_table(int n) {
  if (n < 1 || n > kMaxBracketWidth)
    throw CapacityError("bracket width is limited to 9 arguments");
  std::call_once(g_perm_once[n], [n] { g_perm_tables[n] = build_slot_perms(n); });
  return g_perm_tables[n];
}

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("NCOMM_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Signed packed words of one subtree's expansion. Words within one list are
// pairwise distinct, so a plain vector suffices below the accumulator.
struct TermList {
  int len = 0;
  std::vector<std::pair<std::uint64_t, std::int8_t>> terms;
};

TermList expand_subtree(const TermTree& t, CommutatorKind kind) {
  if (t.is_leaf()) {
    TermList l;
    const int letter = t.leaf_letter();
    if (letter > Word::kMaxLetters)
      throw CapacityError("letters above 16 do not fit the packed encoding");
    l.len = 1;
    l.terms.push_back({static_cast<std::uint64_t>(letter - 1), 1});
    return l;
  }
  const int n = static_cast<int>(t.children().size());
  std::vector<TermList> kids;
  kids.reserve(static_cast<std::size_t>(n));
  int total_len = 0;
  std::size_t combos = 1;
  std::uint32_t seen_mask = 0;
  for (const TermTree& c : t.children()) {
    kids.push_back(expand_subtree(c, kind));
    total_len += kids.back().len;
    combos *= kids.back().terms.size();
    const std::uint32_t mask =
        packed_letter_mask(kids.back().terms.front().first, kids.back().len);
    if (seen_mask & mask)
      throw ShapeError("expansion requires distinct leaf variables");
    seen_mask |= mask;
  }
  if (total_len > Word::kMaxLetters)
    throw CapacityError("expansion exceeds the 16-letter limit");

  TermList out;
  out.len = total_len;
  const auto perms = slot_perm_table(n);
  out.terms.reserve(perms.size() * combos);
  const bool lie = (kind == CommutatorKind::kLie);
  for (const SlotPerm& sp : perms) {
    const std::int8_t base_sign = lie ? sp.sign : std::int8_t{1};
    // Cross product of the child term lists, taken in slot order.
    auto rec = [&](auto&& self, int slot, int offset, std::uint64_t word,
                   std::int8_t sign) -> void {
      if (slot == n) {
        out.terms.push_back({word, sign});
        return;
      }
      const TermList& kid = kids[sp.idx[static_cast<std::size_t>(slot)]];
      for (const auto& [w, s] : kid.terms)
        self(self, slot + 1, offset + kid.len, word | (w << (4 * offset)),
             static_cast<std::int8_t>(sign * s));
    };
    rec(rec, 0, 0, 0, base_sign);
  }
  return out;
}

// Expands the top bracket of `t` directly into the accumulator. Child terms
// with a single word are folded into a fixed prefix per slot order, so the
// inner loop runs over the genuinely branching children only.
void emit_template(const TermTree& t, CommutatorKind kind, int outer_sign,
                   int first_letter, PolyAccumulator& acc) {
  if (t.is_leaf()) throw ShapeError("expansion needs at least one bracket");
  const int n = static_cast<int>(t.children().size());
  std::vector<TermList> kids;
  kids.reserve(static_cast<std::size_t>(n));
  int total_len = 0;
  std::uint32_t seen_mask = 0;
  for (const TermTree& c : t.children()) {
    kids.push_back(expand_subtree(c, kind));
    total_len += kids.back().len;
    const std::uint32_t mask =
        packed_letter_mask(kids.back().terms.front().first, kids.back().len);
    if (seen_mask & mask)
      throw ShapeError("expansion requires distinct leaf variables");
    seen_mask |= mask;
  }
  if (total_len > Word::kMaxLetters)
    throw CapacityError("expansion exceeds the 16-letter limit");

  const bool lie = (kind == CommutatorKind::kLie);
  const std::uint64_t want_first =
      first_letter > 0 ? static_cast<std::uint64_t>(first_letter - 1) : 0;

  struct Branching {
    const TermList* list;
    int offset;
  };
  for (const SlotPerm& sp : slot_perm_table(n)) {
    std::uint64_t fixed = 0;
    int sign = outer_sign * (lie ? sp.sign : 1);
    int offset = 0;
    Branching branching[16];
    int branching_count = 0;
    bool skip = false;
    for (int slot = 0; slot < n; ++slot) {
      const TermList& kid = kids[sp.idx[static_cast<std::size_t>(slot)]];
      if (kid.terms.size() == 1) {
        if (first_letter > 0 && offset == 0 &&
            (kid.terms[0].first & 0xF) != want_first) {
          skip = true;
          break;
        }
        fixed |= kid.terms[0].first << (4 * offset);
        sign *= kid.terms[0].second;
      } else {
        branching[branching_count++] = {&kid, offset};
      }
      offset += kid.len;
    }
    if (skip) continue;
    auto rec = [&](auto&& self, int b, std::uint64_t word, int sign_so_far)
        -> void {
      if (b == branching_count) {
        acc.add(word, sign_so_far);
        return;
      }
      const auto& [list, off] = branching[b];
      const bool filter_here = first_letter > 0 && off == 0;
      for (const auto& [w, s] : list->terms) {
        if (filter_here && (w & 0xF) != want_first) continue;
        self(self, b + 1, word | (w << (4 * off)), sign_so_far * s);
      }
    };
    rec(rec, 0, fixed, sign);
  }
}

}  // namespace

Poly expand(const TermTree& t, CommutatorKind kind, const ExpandOptions& opts) {
  const Word flat = t.flatten();  // validates shape and leaf distinctness
  PolyAccumulator acc(flat.size());
  emit_template(t, kind, 1, opts.first_letter, acc);
  if (opts.stats) opts.stats->generated_terms += acc.insertions();
  return std::move(acc).take_poly();
}

ShapeTerm ShapeTerm::slot_ref(int position) {
  if (position < 1) throw ShapeError("slot positions are 1-based");
  return ShapeTerm{position, {}};
}

ShapeTerm ShapeTerm::var(int letter) {
  if (letter < 1) throw ShapeError("variables are positive indices");
  return ShapeTerm{-letter, {}};
}

ShapeTerm ShapeTerm::node(std::vector<ShapeTerm> kids) {
  if (kids.size() < 2) throw ShapeError("bracket nodes need at least two children");
  return ShapeTerm{0, std::move(kids)};
}

int ShapeTerm::slot_count() const {
  if (kids.empty()) return slot > 0 ? 1 : 0;
  int c = 0;
  for (const ShapeTerm& k : kids) c += k.slot_count();
  return c;
}

TermTree instantiate(const ShapeTerm& shape, const Permutation& sigma) {
  if (shape.kids.empty()) {
    if (shape.slot > 0) {
      if (shape.slot > sigma.size())
        throw ShapeError("shape slot exceeds the permutation size");
      return TermTree::leaf(sigma(shape.slot));
    }
    return TermTree::leaf(-shape.slot);
  }
  std::vector<TermTree> kids;
  kids.reserve(shape.kids.size());
  for (const ShapeTerm& k : shape.kids) kids.push_back(instantiate(k, sigma));
  return TermTree::node(std::move(kids));
}

Poly expand_shuffle_sum(const ShapeTerm& shape, const ShuffleSpec& spec,
                        CommutatorKind kind, bool signed_outer,
                        const ExpandOptions& opts) {
  if (shape.slot_count() > spec.size())
    throw ShapeError("shape references slots beyond the shuffle size");
  const std::vector<Permutation> shuffles = enumerate_shuffles(spec);
  if (shuffles.empty()) return Poly{};

  const TermTree probe = instantiate(shape, shuffles.front());
  const int word_len = probe.flatten().size();

  const int jobs =
      std::min<int>(resolve_jobs(opts.jobs), static_cast<int>(shuffles.size()));
  auto run_chunk = [&](std::size_t begin, std::size_t end,
                       PolyAccumulator& acc) {
    for (std::size_t s = begin; s < end; ++s) {
      const Permutation& sigma = shuffles[s];
      const int outer = signed_outer ? sigma.sign() : 1;
      emit_template(instantiate(shape, sigma), kind, outer, opts.first_letter,
                    acc);
    }
  };

  PolyAccumulator result(word_len);
  if (jobs <= 1) {
    run_chunk(0, shuffles.size(), result);
  } else {
    std::vector<PolyAccumulator> partial;
    partial.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) partial.emplace_back(word_len);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    const std::size_t chunk =
        std::max<std::size_t>(1, shuffles.size() / (4 * static_cast<std::size_t>(jobs)));
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        for (;;) {
          const std::size_t begin = next.fetch_add(chunk);
          if (begin >= shuffles.size()) break;
          run_chunk(begin, std::min(begin + chunk, shuffles.size()), partial[static_cast<std::size_t>(j)]);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& acc : partial) result.merge(std::move(acc));
  }
  if (opts.stats) opts.stats->generated_terms += result.insertions();
  return std::move(result).take_poly();
}

}  // namespace ncomm
