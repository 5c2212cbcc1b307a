// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ncomm/closed_forms.hpp"
#include "ncomm/errors.hpp"
#include "ncomm/identities.hpp"
#include "ncomm/matrix_oracle.hpp"
#include "ncomm/term_tree.hpp"

using namespace ncomm;

namespace {

Poly standard_poly(int m) {
  std::vector<int> letters(static_cast<std::size_t>(m));
  std::iota(letters.begin(), letters.end(), 1);
  Poly p;
  do {
    int inv = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (letters[static_cast<std::size_t>(i)] > letters[static_cast<std::size_t>(j)])
          ++inv;
    p.add_term(Word(letters), inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return p;
}

// The four full n=4 form expansions dominate the runtime; computed once and
// shared by criteria 4, 6 and 7.
struct FormCache {
  std::map<std::pair<int, int>, Poly> polys;  // (form, kind) for n in key? see get
  Poly& get(FormKind form, CommutatorKind kind, int n) {
    const int key_form = static_cast<int>(form) * 10 + n;
    const int key_kind = static_cast<int>(kind);
    auto it = polys.find({key_form, key_kind});
    if (it == polys.end())
      it = polys.emplace(std::make_pair(key_form, key_kind),
                         form_poly(form, kind, n)).first;
    return it->second;
  }
};
FormCache g_forms;

std::vector<long long> table_values(const CoeffTable& t) {
  std::vector<long long> out;
  for (const Coeff& c : t.values) out.push_back(static_cast<long long>(c));
  return out;
}

long long multinomial(const std::vector<int>& blocks) {
  long long result = 1;
  int total = 0;
  for (int b : blocks)
    for (int k = 1; k <= b; ++k) result = result * (++total) / k;
  return result;
}

bool check(bool condition, const std::string& what, std::string& message) {
  if (!condition && message.empty()) message = what;
  return condition;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string summary;
    std::function<bool(std::string&)> run;
  };

  std::vector<Criterion> criteria;

  criteria.push_back({1, "theorem 2 holds by full expansion at n = 2, 3, 4",
                      [](std::string& msg) {
    bool ok = true;
    for (int n = 2; n <= 4; ++n) {
      const IdentityReport r = verify_theorem(2, n);
      ok &= check(r.holds && r.method == "full-expansion",
                  "verdict not holds/full at n=" + std::to_string(n), msg);
      if (n == 3)
        ok &= check(r.elapsed_seconds < 1.0, "n=3 exceeded 1 s", msg);
      if (n == 4)
        ok &= check(r.elapsed_seconds < 120.0, "n=4 exceeded 120 s", msg);
    }
    return ok;
  }});

  criteria.push_back({2, "theorem 3 holds at n = 2, 3, 4; n = 2 is the classical Jordan identity",
                      [](std::string& msg) {
    bool ok = true;
    for (int n = 2; n <= 4; ++n) {
      const IdentityReport r = verify_theorem(3, n);
      ok &= check(r.holds && r.method == "full-expansion",
                  "verdict not holds/full at n=" + std::to_string(n), msg);
      if (n == 3)
        ok &= check(r.elapsed_seconds < 1.0, "n=3 exceeded 1 s", msg);
      if (n == 4)
        ok &= check(r.elapsed_seconds < 120.0, "n=4 exceeded 120 s", msg);
    }
    // n = 2: the two forms are exactly the two halves of the classical
    // degree-4 Jordan identity, built here term by term.
    const CommutatorKind J = CommutatorKind::kJordan;
    auto bracket2 = [](TermTree a, TermTree b) {
      return TermTree::node({std::move(a), std::move(b)});
    };
    Poly nested_half, split_half;
    const int others[3][3] = {{2, 3, 4}, {3, 2, 4}, {4, 2, 3}};
    for (const auto& [a, b, c] : others) {
      nested_half = combine(
          nested_half,
          expand(bracket2(TermTree::leaf(a),
                          bracket2(TermTree::leaf(1),
                                   bracket2(TermTree::leaf(b), TermTree::leaf(c)))),
                 J),
          1);
      split_half = combine(
          split_half,
          expand(bracket2(bracket2(TermTree::leaf(1), TermTree::leaf(a)),
                          bracket2(TermTree::leaf(b), TermTree::leaf(c))),
                 J),
          1);
    }
    ok &= check(g_forms.get(FormKind::kNested, J, 2) == nested_half,
                "nested form differs from the Jordan nesting terms", msg);
    ok &= check(g_forms.get(FormKind::kSplit, J, 2) == split_half,
                "split form differs from the Jordan pairing terms", msg);
    ok &= check(combine(nested_half, split_half, -1).is_zero(),
                "classical Jordan identity did not vanish", msg);
    return ok;
  }});

  criteria.push_back({3, "theorem 1: zero at n = 2, 4, 6; n-fold standard polynomial at n = 3, 5; leading coefficients to n = 100",
                      [](std::string& msg) {
    bool ok = true;
    for (int n : {2, 4, 6})
      ok &= check(homotopy_poly(n).is_zero(),
                  "nonzero at even n=" + std::to_string(n), msg);
    for (int n : {3, 5}) {
      const Poly h = homotopy_poly(n);
      const Poly expected = combine(Poly{}, standard_poly(2 * n - 1), n);
      ok &= check(h == expected,
                  "not n times the standard polynomial at n=" + std::to_string(n),
                  msg);
      ok &= check(h.reduce_mod(static_cast<std::uint64_t>(n)).is_zero(),
                  "not zero mod n at n=" + std::to_string(n), msg);
    }
    for (int n = 2; n <= 100; n += 2)
      ok &= check(homotopy_leading_coeff(n) == 0,
                  "leading coefficient not 0 at n=" + std::to_string(n), msg);
    for (int n = 3; n <= 99; n += 2)
      ok &= check(homotopy_leading_coeff(n) == n,
                  "leading coefficient not n at n=" + std::to_string(n), msg);
    return ok;
  }});

  criteria.push_back({4, "coefficient tables: form equality for n <= 6 and the reference vectors",
                      [](std::string& msg) {
    bool ok = true;
    for (const CommutatorKind kind : {CommutatorKind::kLie, CommutatorKind::kJordan}) {
      for (int n = 2; n <= 4; ++n) {
        CoeffTable a, b;
        a.n = b.n = n;
        a.values.clear();
        b.values.clear();
        for (int i = 1; i <= 3 * n - 2; ++i) {
          a.values.push_back(
              g_forms.get(FormKind::kNested, kind, n).coefficient_of(basis_word(n, i)));
          b.values.push_back(
              g_forms.get(FormKind::kSplit, kind, n).coefficient_of(basis_word(n, i)));
        }
        ok &= check(a.values == b.values,
                    "full tables differ at n=" + std::to_string(n), msg);
      }
      for (int n = 5; n <= 6; ++n) {
        const CoeffTable a =
            coeff_table(FormKind::kNested, kind, n, TableMethod::kCaseAnalysis);
        const CoeffTable b =
            coeff_table(FormKind::kSplit, kind, n, TableMethod::kCaseAnalysis);
        ok &= check(a.values == b.values,
                    "targeted tables differ at n=" + std::to_string(n), msg);
      }
    }
    const CoeffTable lie3 =
        coeff_table(FormKind::kNested, CommutatorKind::kLie, 3,
                    TableMethod::kFullExpansion);
    ok &= check(table_values(lie3) ==
                    std::vector<long long>{2, -3, 3, -2, 3, -3, 2},
                "Lie n=3 reference vector", msg);
    CoeffTable lie4;
    for (int i = 1; i <= 10; ++i)
      lie4.values.push_back(g_forms.get(FormKind::kNested, CommutatorKind::kLie, 4)
                                .coefficient_of(basis_word(4, i)));
    ok &= check(table_values(lie4) ==
                    std::vector<long long>{1, -1, 2, -2, 0, 0, -2, 2, -1, 1},
                "Lie n=4 reference vector", msg);
    ok &= check(table_values(lie4) == lie_genpoly(4).coeffs,
                "Lie n=4 differs from its generating polynomial", msg);
    const CoeffTable jordan2 =
        coeff_table(FormKind::kNested, CommutatorKind::kJordan, 2,
                    TableMethod::kFullExpansion);
    ok &= check(table_values(jordan2) == std::vector<long long>{1, 1, 1, 1},
                "Jordan n=2 reference vector", msg);
    return ok;
  }});

  criteria.push_back({5, "closed-form consistency through n = 50 in under a second",
                      [](std::string& msg) {
    const auto t0 = std::chrono::steady_clock::now();
    const ConsistencyReport r = check_consistency(50);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = check(r.ok, "closed-form crosscheck failed", msg);
    if (r.first_failure) {
      std::ostringstream os;
      os << "first failure " << r.first_failure->check << " at n="
         << r.first_failure->n << " i=" << r.first_failure->i;
      msg = os.str();
    }
    ok &= check(elapsed < 1.0, "consistency check exceeded 1 s", msg);
    return ok;
  }});

  criteria.push_back({6, "segment-sum extractor matches full expansion on every table entry, n <= 4",
                      [](std::string& msg) {
    bool ok = true;
    for (const FormKind form : {FormKind::kNested, FormKind::kSplit})
      for (const CommutatorKind kind :
           {CommutatorKind::kLie, CommutatorKind::kJordan})
        for (int n = 2; n <= 4; ++n) {
          const Poly& p = g_forms.get(form, kind, n);
          for (int i = 1; i <= 3 * n - 2; ++i) {
            const Coeff expected = p.coefficient_of(basis_word(n, i));
            if (Coeff(coeff_via_cases(form, kind, n, i)) != expected) {
              std::ostringstream os;
              os << "mismatch at form=" << static_cast<int>(form)
                 << " kind=" << static_cast<int>(kind) << " n=" << n
                 << " i=" << i;
              ok = check(false, os.str(), msg);
            }
          }
        }
    return ok;
  }});

  criteria.push_back({7, "property suites: form symmetries, bracket expansions, slides, shuffle counts",
                      [](std::string& msg) {
    bool ok = true;
    // (a) adjacent transpositions of the unpinned variables
    for (int n = 2; n <= 4; ++n) {
      const int m = 3 * n - 2;
      for (const FormKind form : {FormKind::kNested, FormKind::kSplit}) {
        const Poly& lie = g_forms.get(form, CommutatorKind::kLie, n);
        const Poly& jordan = g_forms.get(form, CommutatorKind::kJordan, n);
        for (int j = 2; j + 1 <= m; ++j) {
          std::vector<int> swap_j(static_cast<std::size_t>(m));
          std::iota(swap_j.begin(), swap_j.end(), 1);
          std::swap(swap_j[static_cast<std::size_t>(j - 1)],
                    swap_j[static_cast<std::size_t>(j)]);
          ok &= check(lie.relabeled(swap_j) == lie.negated(),
                      "Lie form not alternating at n=" + std::to_string(n), msg);
          ok &= check(jordan.relabeled(swap_j) == jordan,
                      "Jordan form not symmetric at n=" + std::to_string(n), msg);
        }
      }
    }
    // (b) single-bracket expansions carry one signed word per ordering
    for (int m = 2; m <= 5; ++m) {
      std::vector<TermTree> kids;
      for (int l = 1; l <= m; ++l) kids.push_back(TermTree::leaf(l));
      const TermTree t = TermTree::node(std::move(kids));
      const Poly lie = expand(t, CommutatorKind::kLie);
      ok &= check(lie == standard_poly(m),
                  "bracket expansion differs from the standard polynomial",
                  msg);
      const Poly jordan = expand(t, CommutatorKind::kJordan);
      std::size_t factorial = 1;
      for (int k = 2; k <= m; ++k) factorial *= static_cast<std::size_t>(k);
      bool all_one = jordan.term_count() == factorial;
      for (const auto& [w, c] : jordan.sorted_terms()) all_one &= (c == 1);
      ok &= check(all_one, "unsigned expansion has a wrong coefficient", msg);
    }
    // (c) flatten is invariant under every slide, exhaustively to degree 3
    for (int arity : {2, 3}) {
      std::vector<int> letters(static_cast<std::size_t>(3 * (arity - 1) + 1));
      std::iota(letters.begin(), letters.end(), 1);
      for (const TermTree& t : all_bracketings(letters, arity, 3)) {
        auto walk = [&](auto&& self, const TermTree& node,
                        std::vector<int>& path) -> void {
          for (int k = 0; k < static_cast<int>(node.children().size()); ++k) {
            const TermTree& child = node.children()[static_cast<std::size_t>(k)];
            if (child.is_leaf()) continue;
            path.push_back(k);
            for (SlideDirection dir :
                 {SlideDirection::kLeft, SlideDirection::kRight}) {
              try {
                ok &= check(t.slide(path, dir).flatten() == t.flatten(),
                            "slide changed the flat word", msg);
              } catch (const RewriteError&) {
              }
            }
            self(self, child, path);
            path.pop_back();
          }
        };
        std::vector<int> path;
        walk(walk, t, path);
      }
    }
    // (d) shuffle family sizes are multinomial coefficients
    for (int m = 2; m <= 12; ++m)
      for (int k = 1; k < m; ++k)
        ok &= check(enumerate_shuffles({{k, m - k}, {}, {}}).size() ==
                        static_cast<std::size_t>(multinomial({k, m - k})),
                    "two-block count", msg);
    for (int m = 3; m <= 9; ++m)
      for (int a = 1; a < m - 1; ++a)
        for (int b = 1; a + b < m; ++b)
          ok &= check(
              enumerate_shuffles({{a, b, m - a - b}, {}, {}}).size() ==
                  static_cast<std::size_t>(multinomial({a, b, m - a - b})),
              "three-block count", msg);
    ok &= check(enumerate_shuffles({{4, 4, 4}, {}, {}}).size() == 34650,
                "12-position three-block count", msg);
    return ok;
  }});

  criteria.push_back({8, "matrix oracle: seeded trials confirm and refute as expected in under 10 s",
                      [](std::string& msg) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    MatrixRingConfig cfg;
    cfg.dimension = 3;
    cfg.modulus = 101;
    cfg.seed = 20240601;
    cfg.trials = 100;
    for (int theorem : {2, 3})
      for (int n : {2, 3}) {
        const FuzzReport r = fuzz_identity(theorem, n, cfg);
        ok &= check(r.all_zero && r.trials_run == 100,
                    "theorem " + std::to_string(theorem) + " nonzero at n=" +
                        std::to_string(n), msg);
      }
    const FuzzReport odd = fuzz_identity(1, 3, cfg);
    ok &= check(!odd.all_zero && odd.witness_trial.has_value(),
                "no counterexample for theorem 1 at n=3", msg);
    MatrixRingConfig char3 = cfg;
    char3.modulus = 3;
    ok &= check(fuzz_identity(1, 3, char3).all_zero,
                "theorem 1 not zero in characteristic 3", msg);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok &= check(elapsed < 10.0, "matrix oracle exceeded 10 s", msg);
    return ok;
  }});

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string message;
    bool ok = false;
    try {
      ok = c.run(message);
    } catch (const std::exception& e) {
      message = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d [%s] %s (%.2fs)%s%s\n", c.id,
                ok ? "PASS" : "FAIL", c.summary.c_str(), elapsed,
                message.empty() ? "" : " -- ", message.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
