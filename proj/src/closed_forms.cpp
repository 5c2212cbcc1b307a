#include "ncomm/closed_forms.hpp"

#include <string>

#include "ncomm/errors.hpp"

namespace ncomm {

namespace {

void check_index(int n, int i) {
  if (n < 2) throw RangeError("the bracket width n must be at least 2");
  if (i < 1 || i > 3 * n - 2)
    throw RangeError("coefficient index must lie in 1..3n-2");
}

long long sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

// Dense product of coefficient vectors indexed from degree 0.
std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

long long lie_coeff(int n, int i) {
  check_index(n, i);
  const long long nn = n, ii = i;
  if (n % 2 == 0) {
    if (i <= n) return sign_pow(ii + 1) * ((ii + 1) / 2);
    if (i <= 2 * n - 2)
      // (n - i - 1) is negative here; the tables need division truncated
      // toward zero, which is what C++ integer division does.
      return sign_pow(ii + 1) * (nn / 2 + 2 * ((nn - ii - 1) / 2));
    return sign_pow(ii) * ((3 * nn - ii) / 2);
  }
  if (i <= n) return sign_pow(ii + 1) * ((2 * nn - ii - 1) * ii / 2);
  if (i <= 2 * n - 2)
    return sign_pow(ii + 1) *
           (nn * (nn - 1) / 2 + (ii - nn) * (-2 * nn + ii + 1));
  return sign_pow(ii) * ((3 * nn - ii - 1) * (nn - ii) / 2);
}

long long jordan_coeff(int n, int i) {
  check_index(n, i);
  const long long nn = n, ii = i;
  if (i <= n) return (2 * nn - ii - 1) * ii / 2;
  if (i <= 2 * n - 2)
    return nn * (nn - 1) / 2 + (ii - nn) * (-2 * nn + ii + 1);
  return (3 * nn - ii - 1) * (ii - nn) / 2;
}

GenPoly jordan_genpoly(int n) {
  if (n < 2) throw RangeError("the bracket width n must be at least 2");
  // (x + ... + x^n) * (sum_{i=1}^{n-1} (n-i) x^{i-1} + i x^{i+n-1})
  std::vector<long long> left(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) left[static_cast<std::size_t>(i)] = 1;
  std::vector<long long> right(static_cast<std::size_t>(2 * n - 1), 0);
  for (int i = 1; i <= n - 1; ++i) {
    right[static_cast<std::size_t>(i - 1)] += n - i;
    right[static_cast<std::size_t>(i + n - 1)] += i;
  }
  const std::vector<long long> product = poly_mul(left, right);
  GenPoly g;
  g.n = n;
  g.coeffs.assign(product.begin() + 1,
                  product.begin() + (3 * n - 2) + 1);
  return g;
}

GenPoly lie_genpoly(int n) {
  if (n < 2) throw RangeError("the bracket width n must be at least 2");
  if (n % 2 != 0)
    throw DomainError("the Lie generating polynomial is defined for even n");
  // x (x-1)^2 (x+1) (1 + x^2 + ... + x^{n-2})^3
  std::vector<long long> base = {0, 1};                    // x
  base = poly_mul(base, {1, -2, 1});                       // (x-1)^2
  base = poly_mul(base, {1, 1});                           // (x+1)
  std::vector<long long> geo(static_cast<std::size_t>(n - 1), 0);
  for (int i = 0; i <= n - 2; i += 2) geo[static_cast<std::size_t>(i)] = 1;
  base = poly_mul(base, poly_mul(geo, poly_mul(geo, geo)));
  base.resize(static_cast<std::size_t>(3 * n - 2) + 1, 0);
  GenPoly g;
  g.n = n;
  g.coeffs.assign(base.begin() + 1, base.end());
  return g;
}

ConsistencyReport check_consistency(int n_max) {
  return check_consistency(n_max, &lie_coeff, &jordan_coeff);
}

ConsistencyReport check_consistency(int n_max, long long (*lie_fn)(int, int),
                                    long long (*jordan_fn)(int, int)) {
  if (n_max < 2) throw RangeError("n_max must be at least 2");
  ConsistencyReport report;
  report.n_max = n_max;
  auto fail = [&](int n, int i, long long lhs, long long rhs,
                  const std::string& check) {
    if (!report.ok) return;
    report.ok = false;
    report.first_failure = ConsistencyFailure{n, i, lhs, rhs, check};
  };
  for (int n = 2; n <= n_max && report.ok; ++n) {
    const int m = 3 * n - 2;
    const GenPoly jordan = jordan_genpoly(n);
    for (int i = 1; i <= m && report.ok; ++i) {
      const long long mu = lie_fn(n, i);
      const long long mu_plus = jordan_fn(n, i);
      if (jordan.at_degree(i) != mu_plus)
        fail(n, i, jordan.at_degree(i), mu_plus, "jordan-genpoly");
      if (lie_fn(n, 3 * n - 1 - i) != mu)
        fail(n, i, lie_fn(n, 3 * n - 1 - i), mu, "lie-symmetry");
      if (jordan_fn(n, 3 * n - 1 - i) != mu_plus)
        fail(n, i, jordan_fn(n, 3 * n - 1 - i), mu_plus, "jordan-symmetry");
      if (n % 2 != 0) {
        const long long expected = (i % 2 == 0) ? -mu_plus : mu_plus;
        if (mu != expected) fail(n, i, mu, expected, "odd-n-sign-relation");
        // -J(-x) flips the sign of the even-degree coefficients.
        const long long reflected =
            (i % 2 == 0) ? -jordan.at_degree(i) : jordan.at_degree(i);
        if (mu != reflected) fail(n, i, mu, reflected, "odd-n-reflection");
      }
    }
    if (n % 2 == 0) {
      const GenPoly lie = lie_genpoly(n);
      for (int i = 1; i <= m && report.ok; ++i)
        if (lie.at_degree(i) != lie_fn(n, i))
          fail(n, i, lie.at_degree(i), lie_fn(n, i), "lie-genpoly");
    }
  }
  return report;
}

}  // namespace ncomm
