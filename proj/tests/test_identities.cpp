#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "ncomm/closed_forms.hpp"
#include "ncomm/errors.hpp"
#include "ncomm/identities.hpp"

using namespace ncomm;

namespace {

// Alternating sum over all orders of m letters by direct enumeration.
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

std::vector<long long> table_as_int64(const CoeffTable& t) {
  std::vector<long long> out;
  for (const Coeff& c : t.values) out.push_back(static_cast<long long>(c));
  return out;
}

}  // namespace

TEST_CASE("generalized Jacobi sums") {
  SECTION("vanishes at even widths") {
    CHECK(homotopy_poly(2).is_zero());
    CHECK(homotopy_poly(4).is_zero());
  }

  SECTION("width three equals three times the degree-5 standard polynomial") {
    const Poly h = homotopy_poly(3);
    CHECK(h.term_count() == 120);
    CHECK(h == combine(Poly{}, standard_poly(5), 3));
    CHECK(h.reduce_mod(3).is_zero());
  }

  SECTION("scales as the leading coefficient times the standard polynomial") {
    for (int n = 2; n <= 4; ++n) {
      const Poly expected =
          combine(Poly{}, standard_poly(2 * n - 1), homotopy_leading_coeff(n));
      CHECK(homotopy_poly(n) == expected);
    }
  }

  CHECK_THROWS_AS(homotopy_poly(7), CapacityError);
  CHECK_THROWS_AS(homotopy_poly(1), RangeError);
}

TEST_CASE("leading coefficient of the Jacobi sum") {
  CHECK(homotopy_leading_coeff(3) == 3);
  CHECK(homotopy_leading_coeff(4) == 0);
  CHECK(homotopy_leading_coeff(9) == 9);
  CHECK(homotopy_leading_coeff(9) % 3 == 0);
  for (int n = 2; n <= 30; ++n)
    CHECK(homotopy_leading_coeff(n) == (n % 2 == 0 ? 0 : n));
}

TEST_CASE("degree-3 forms") {
  SECTION("the Jordan nested form at width two") {
    const Poly p = form_poly(FormKind::kNested, CommutatorKind::kJordan, 2);
    CHECK_FALSE(p.is_zero());
    CHECK(p.term_count() == 24);
    CHECK(p.word_length() == 4);
    CHECK(p.coefficient_of(Word({1, 2, 3, 4})) == 1);
    for (const auto& [w, c] : p.sorted_terms()) CHECK(c == 1);
  }

  SECTION("the two forms agree: Lie width three") {
    CHECK(form_combination(-1, CommutatorKind::kLie, 3).is_zero());
  }

  SECTION("the two forms agree: Jordan width three") {
    CHECK(form_combination(-1, CommutatorKind::kJordan, 3).is_zero());
  }

  SECTION("width two Jordan difference is the classical Jordan identity") {
    CHECK(form_combination(-1, CommutatorKind::kJordan, 2).is_zero());
  }

  SECTION("lambda zero leaves the nested form") {
    const Poly f = form_combination(0, CommutatorKind::kLie, 3);
    CHECK(f == form_poly(FormKind::kNested, CommutatorKind::kLie, 3));
    CHECK_FALSE(f.is_zero());
  }

  SECTION("skew symmetry in every variable but the pinned one") {
    for (int n = 2; n <= 3; ++n) {
      for (const FormKind form : {FormKind::kNested, FormKind::kSplit}) {
        const Poly lie = form_poly(form, CommutatorKind::kLie, n);
        const Poly jordan = form_poly(form, CommutatorKind::kJordan, n);
        const int m = 3 * n - 2;
        for (int j = 2; j + 1 <= m; ++j) {
          std::vector<int> swap_j(static_cast<std::size_t>(m));
          std::iota(swap_j.begin(), swap_j.end(), 1);
          std::swap(swap_j[static_cast<std::size_t>(j - 1)],
                    swap_j[static_cast<std::size_t>(j)]);
          CHECK(lie.relabeled(swap_j) == lie.negated());
          CHECK(jordan.relabeled(swap_j) == jordan);
        }
      }
    }
  }

  CHECK_THROWS_AS(form_poly(FormKind::kNested, CommutatorKind::kLie, 5),
                  CapacityError);
}

TEST_CASE("coefficient tables") {
  SECTION("Lie width 3 reference values") {
    const CoeffTable t = coeff_table(FormKind::kNested, CommutatorKind::kLie, 3,
                                     TableMethod::kFullExpansion);
    CHECK(table_as_int64(t) == std::vector<long long>{2, -3, 3, -2, 3, -3, 2});
  }

  SECTION("Jordan width 2 reference values") {
    const CoeffTable t = coeff_table(FormKind::kNested, CommutatorKind::kJordan,
                                     2, TableMethod::kFullExpansion);
    CHECK(table_as_int64(t) == std::vector<long long>{1, 1, 1, 1});
  }

  SECTION("both forms give one table, full expansion") {
    for (int n = 2; n <= 3; ++n)
      for (const CommutatorKind kind :
           {CommutatorKind::kLie, CommutatorKind::kJordan}) {
        const CoeffTable a =
            coeff_table(FormKind::kNested, kind, n, TableMethod::kFullExpansion);
        const CoeffTable b =
            coeff_table(FormKind::kSplit, kind, n, TableMethod::kFullExpansion);
        CHECK(a.values == b.values);
      }
  }

  SECTION("table symmetry under i <-> 3n-1-i") {
    for (int n = 2; n <= 3; ++n)
      for (const CommutatorKind kind :
           {CommutatorKind::kLie, CommutatorKind::kJordan}) {
        const CoeffTable t = coeff_table(FormKind::kNested, kind, n,
                                         TableMethod::kFullExpansion);
        for (int i = 1; i <= 3 * n - 2; ++i)
          CHECK(t.at(i) == t.at(3 * n - 1 - i));
      }
  }

  SECTION("case analysis agrees with full expansion everywhere (n <= 3)") {
    for (int n = 2; n <= 3; ++n)
      for (const FormKind form : {FormKind::kNested, FormKind::kSplit})
        for (const CommutatorKind kind :
             {CommutatorKind::kLie, CommutatorKind::kJordan}) {
          const CoeffTable full =
              coeff_table(form, kind, n, TableMethod::kFullExpansion);
          for (int i = 1; i <= 3 * n - 2; ++i)
            CHECK(Coeff(coeff_via_cases(form, kind, n, i)) == full.at(i));
        }
  }

  SECTION("case analysis spot values") {
    CHECK(coeff_via_cases(FormKind::kNested, CommutatorKind::kLie, 3, 1) == 2);
    CHECK(coeff_via_cases(FormKind::kSplit, CommutatorKind::kLie, 4, 5) == 0);
    CHECK(coeff_via_cases(FormKind::kNested, CommutatorKind::kJordan, 3, 4) == 2);
  }

  SECTION("targeted tables match the closed forms out to n = 8") {
    for (int n = 2; n <= 8; ++n) {
      const CoeffTable lie = coeff_table(FormKind::kNested, CommutatorKind::kLie,
                                         n, TableMethod::kCaseAnalysis);
      const CoeffTable lie2 = coeff_table(FormKind::kSplit, CommutatorKind::kLie,
                                          n, TableMethod::kCaseAnalysis);
      const CoeffTable jordan = coeff_table(
          FormKind::kNested, CommutatorKind::kJordan, n, TableMethod::kCaseAnalysis);
      for (int i = 1; i <= 3 * n - 2; ++i) {
        CHECK(lie.at(i) == lie_coeff(n, i));
        CHECK(lie2.at(i) == lie_coeff(n, i));
        CHECK(jordan.at(i) == jordan_coeff(n, i));
      }
    }
  }

  SECTION("odd-width sign relation between the two variants") {
    for (int n : {3, 5}) {
      const CoeffTable lie = coeff_table(FormKind::kNested, CommutatorKind::kLie,
                                         n, TableMethod::kCaseAnalysis);
      const CoeffTable jordan = coeff_table(
          FormKind::kNested, CommutatorKind::kJordan, n, TableMethod::kCaseAnalysis);
      for (int i = 1; i <= 3 * n - 2; ++i)
        CHECK(lie.at(i) == (i % 2 == 0 ? -jordan.at(i) : jordan.at(i)));
    }
  }

  CHECK_THROWS_AS(coeff_table(FormKind::kNested, CommutatorKind::kLie, 5,
                              TableMethod::kFullExpansion),
                  CapacityError);
  CHECK_THROWS_AS(coeff_table(FormKind::kNested, CommutatorKind::kLie, 9,
                              TableMethod::kCaseAnalysis),
                  CapacityError);
  CHECK_THROWS_AS(coeff_via_cases(FormKind::kNested, CommutatorKind::kLie, 3, 8),
                  RangeError);
}

TEST_CASE("theorem verification") {
  SECTION("theorem 1 fails at width 3 with the identity word as witness") {
    const IdentityReport r = verify_theorem(1, 3);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness_word.has_value());
    CHECK(*r.witness_word == Word({1, 2, 3, 4, 5}));
    CHECK(r.witness_coeff == 3);
    CHECK(r.method == "full-expansion");
  }

  SECTION("theorem 1 holds at width 3 modulo 3") {
    const IdentityReport r = verify_theorem(1, 3, 3);
    CHECK(r.holds);
  }

  SECTION("theorem 1 holds at even widths") {
    CHECK(verify_theorem(1, 2).holds);
    CHECK(verify_theorem(1, 4).holds);
  }

  SECTION("theorems 2 and 3 hold at small widths, full expansion") {
    for (int n = 2; n <= 3; ++n) {
      const IdentityReport r2 = verify_theorem(2, n);
      CHECK(r2.holds);
      CHECK(r2.method == "full-expansion");
      const IdentityReport r3 = verify_theorem(3, n);
      CHECK(r3.holds);
    }
  }

  SECTION("theorems 2 and 3 hold at large widths, targeted") {
    for (int n = 5; n <= 8; ++n) {
      const IdentityReport r2 = verify_theorem(2, n);
      CHECK(r2.holds);
      CHECK(r2.method == "targeted-mu");
      CHECK(verify_theorem(3, n).holds);
    }
  }

  SECTION("capacity gates") {
    CHECK_THROWS_AS(verify_theorem(1, 7), CapacityError);
    CHECK_THROWS_AS(verify_theorem(2, 9), CapacityError);
    CHECK_THROWS_AS(verify_theorem(2, 5, {}, VerifyMethod::kFull),
                    CapacityError);
    CHECK_THROWS_AS(verify_theorem(1, 3, {}, VerifyMethod::kTargeted),
                    CapacityError);
    CHECK_THROWS_AS(verify_theorem(4, 3), RangeError);
    CHECK_THROWS_AS(verify_theorem(1, 3, 1), RangeError);
  }
}
