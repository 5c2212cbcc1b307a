#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ncomm {

/// Closed-form coefficient of the Lie-variant table at basis word i,
/// piecewise over the three ranges i <= n, n < i < 2n-1, i >= 2n-1.
long long lie_coeff(int n, int i);

/// Closed-form coefficient of the Jordan-variant table at basis word i.
long long jordan_coeff(int n, int i);

/// Generating polynomial: coefficient of degree i is the table value at i.
struct GenPoly {
  int n = 0;
  std::vector<long long> coeffs;  // degree i stored at coeffs[i-1], i = 1..3n-2

  long long at_degree(int i) const {
    return coeffs.at(static_cast<std::size_t>(i - 1));
  }
};

/// Product form for the Jordan table, defined for every n >= 2:
/// (sum_{i=1}^n x^i) * (sum_{i=1}^{n-1} (n-i) x^{i-1} + i x^{i+n-1}).
GenPoly jordan_genpoly(int n);

/// Product form for the Lie table, defined for even n only:
/// x (x-1)^2 (x+1) (1 + x^2 + ... + x^{n-2})^3.
GenPoly lie_genpoly(int n);

struct ConsistencyFailure {
  int n = 0;
  int i = 0;
  long long lhs = 0;
  long long rhs = 0;
  std::string check;
};

struct ConsistencyReport {
  bool ok = true;
  int n_max = 0;
  std::optional<ConsistencyFailure> first_failure;
};

/// For every 2 <= n <= n_max checks, in exact arithmetic:
///  - jordan_genpoly coefficients equal jordan_coeff at every degree;
///  - (even n) lie_genpoly coefficients equal lie_coeff;
///  - (odd n) lie_coeff(i) = (-1)^{i+1} jordan_coeff(i), and equals the
///    degree-i coefficient of -J(-x) where J is the Jordan polynomial;
///  - both tables are symmetric under i <-> 3n-1-i.
/// Reports the first failing (n, i, lhs, rhs).
ConsistencyReport check_consistency(int n_max);

/// Same harness with injectable coefficient functions, so tests can plant a
/// defect and confirm the report pinpoints it.
ConsistencyReport check_consistency(int n_max, long long (*lie)(int, int),
                                    long long (*jordan)(int, int));

}  // namespace ncomm
