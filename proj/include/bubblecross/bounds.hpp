#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bubblecross/errors.hpp"
#include "bubblecross/mesh.hpp"

namespace bubblecross {

using BigCount = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

// Small-case constants read off hand-made drawings; not recomputable here.
struct BaseValues {
  int cr_b2 = 0;
  int cr_b3 = 0;
  int cr_b4 = 0;
  int cr_b5_upper = 120;
  int nu_d6 = 5196;
  int nu_prime_d6 = 866;  // nu(D_6) / 6: one of six symmetric copies
};

inline constexpr BaseValues base_values() { return {}; }

inline BigCount big_factorial(int n) {
  BigCount f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace detail {

inline BigCount exact_quotient(const BigCount& num, const BigCount& den, const std::string& what) {
  if (num % den != 0) throw invariant_violation(what + ": division is not exact");
  return num / den;
}

inline BigCount to_integer(const ExactRational& q, const std::string& what) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw invariant_violation(what + ": value " + q.str() + " is not an integer");
  }
  return boost::multiprecision::numerator(q);
}

}  // namespace detail

// Crossings added when every vertex of D'_n (n even) becomes an (n+1)-path:
// n!/144 * (3n^4 - 13n^3 + 18n^2 - 8n).
inline BigCount even_increment(int n) {
  if (n < 6 || n % 2 != 0) throw invalid_input("even_increment needs even n >= 6, got " + std::to_string(n));
  const BigCount x = n;
  const BigCount poly = 3 * x * x * x * x - 13 * x * x * x + 18 * x * x - 8 * x;
  return detail::exact_quotient(big_factorial(n) * poly, 144, "even_increment(" + std::to_string(n) + ")");
}

// Same increment from the mesh side: n!/6 vertices, each bounded by the
// odd-dimension worst case of M_{n+1, a}.
inline BigCount even_increment_from_mesh(int n) {
  if (n < 6 || n % 2 != 0) throw invalid_input("even_increment_from_mesh needs even n >= 6");
  const int m = (n + 2) / 2;  // n + 1 = 2m - 1
  const CrossingCount worst = mesh_max(n + 1, m - 1);
  if (mesh_max(n + 1, m - 2) != worst) throw invariant_violation("odd-dimension mesh maxima disagree");
  return detail::exact_quotient(big_factorial(n), 6, "n!/6") * worst;
}

// (n-1)!/144 * (3n^5 - 13n^4 + 21n^3 - 17n^2 + 6) for odd n.
inline BigCount odd_increment(int n) {
  if (n < 7 || n % 2 != 1) throw invalid_input("odd_increment needs odd n >= 7, got " + std::to_string(n));
  const BigCount x = n;
  const BigCount poly = 3 * x * x * x * x * x - 13 * x * x * x * x + 21 * x * x * x - 17 * x * x + 6;
  return detail::exact_quotient(big_factorial(n - 1) * poly, 144, "odd_increment(" + std::to_string(n) + ")");
}

// Mesh side for odd n: a fraction (n+1)/(2n) of the new vertices are balanced
// (worst case with a = m-1), the remaining (n-1)/(2n) have |l-r| = 2
// (worst case with a in {m-2, m}).
inline BigCount odd_increment_from_mesh(int n) {
  if (n < 7 || n % 2 != 1) throw invalid_input("odd_increment_from_mesh needs odd n >= 7");
  const int m = (n + 1) / 2;  // n + 1 = 2m
  const CrossingCount balanced = mesh_max(n + 1, m - 1);
  const CrossingCount skewed = mesh_max(n + 1, m);
  if (mesh_max(n + 1, m - 2) != skewed) throw invariant_violation("even-dimension mesh maxima disagree");
  const ExactRational per_vertex =
      ExactRational(BigCount(n + 1) * balanced + BigCount(n - 1) * skewed, BigCount(2 * n));
  const ExactRational total = ExactRational(big_factorial(n), 6) * per_vertex;
  return detail::to_integer(total, "odd_increment_from_mesh(" + std::to_string(n) + ")");
}

inline BigCount recurrence_even(int n, const BigCount& nu_prime) {
  const BigCount inc = even_increment(n);
  if (inc != even_increment_from_mesh(n)) {
    throw invariant_violation("recurrence_even(" + std::to_string(n) + "): polynomial and mesh increments differ");
  }
  return BigCount(n) * n * nu_prime + inc;
}

inline BigCount recurrence_odd(int n, const BigCount& nu_prime) {
  const BigCount inc = odd_increment(n);
  if (inc != odd_increment_from_mesh(n)) {
    throw invariant_violation("recurrence_odd(" + std::to_string(n) + "): polynomial and mesh increments differ");
  }
  return BigCount(n) * n * nu_prime + inc;
}

// Upper bound on nu(D'_n), iterated from nu(D'_6).
inline BigCount nu_prime_dn(int n) {
  if (n < 6) throw invalid_input("nu_prime_dn needs n >= 6, got " + std::to_string(n));
  BigCount nu = base_values().nu_prime_d6;
  for (int k = 6; k < n; ++k) nu = (k % 2 == 0) ? recurrence_even(k, nu) : recurrence_odd(k, nu);
  return nu;
}

inline BigCount nu_dn(int n) { return 6 * nu_prime_dn(n); }

// Closed sum over all generations from 7 to n:
//   ((n-1)!/5!)^2 nu(D_6)
//   + sum over odd i:  ((n-1)!/(i-1)!)^2 (i-1)!/24 (3i^4 - 25i^3 + 75i^2 - 95i + 42)
//   + sum over even i: ((n-1)!/(i-1)!)^2 (i-2)!/24 (3i^5 - 28i^4 + 103i^3 - 188i^2 + 164i - 48)
inline BigCount generation_sum(int n) {
  if (n < 7) throw invalid_input("generation_sum needs n >= 7, got " + std::to_string(n));
  const BigCount top = big_factorial(n - 1);
  const BigCount lead = detail::exact_quotient(top, 120, "(n-1)!/5!");
  ExactRational sum = ExactRational(lead * lead * base_values().nu_d6);
  for (int i = 7; i <= n; ++i) {
    const BigCount x = i;
    const BigCount ratio = detail::exact_quotient(top, big_factorial(i - 1), "(n-1)!/(i-1)!");
    if (i % 2 == 1) {
      const BigCount poly = 3 * x * x * x * x - 25 * x * x * x + 75 * x * x - 95 * x + 42;
      sum += ExactRational(ratio * ratio * big_factorial(i - 1) * poly, 24);
    } else {
      const BigCount poly =
          3 * x * x * x * x * x - 28 * x * x * x * x + 103 * x * x * x - 188 * x * x + 164 * x - 48;
      sum += ExactRational(ratio * ratio * big_factorial(i - 2) * poly, 24);
    }
  }
  return detail::to_integer(sum, "generation_sum(" + std::to_string(n) + ")");
}

// 127/300 + 5/(24 (n-4)!) + sum_{i=3}^{n-5} 1/(3 i!)
//   + sum_{even i=8}^{n} [1/(8 (i-3)!) - 1/(4 (i-2)!) + 1/(4 (i-1)! (i-1))]
inline ExactRational closed_form_bracket(int n) {
  if (n < 7) throw invalid_input("closed_form_bracket needs n >= 7, got " + std::to_string(n));
  ExactRational b = ExactRational(127, 300) + ExactRational(BigCount(5), 24 * big_factorial(n - 4));
  for (int i = 3; i <= n - 5; ++i) b += ExactRational(BigCount(1), 3 * big_factorial(i));
  for (int i = 8; i <= n; i += 2) {
    b += ExactRational(BigCount(1), 8 * big_factorial(i - 3));
    b -= ExactRational(BigCount(1), 4 * big_factorial(i - 2));
    b += ExactRational(BigCount(1), 4 * big_factorial(i - 1) * (i - 1));
  }
  return b;
}

inline BigCount closed_form_bound(int n) {
  const BigCount top = big_factorial(n - 1);
  return detail::to_integer(ExactRational(top * top) * closed_form_bracket(n), "closed_form_bound(" + std::to_string(n) + ")");
}

struct BoundRow {
  int n = 0;
  BigCount nu_recurrence;
  BigCount nu_generation_sum;
  BigCount nu_closed_form;
};

inline constexpr int kDefaultBoundNMax = 30;
inline constexpr int kMaxBoundN = 200;

// Rows n = 7..n_max; throws at the first n where the three routes disagree.
inline std::vector<BoundRow> bound_table(int n_max, int limit = kMaxBoundN) {
  if (n_max < 7 || n_max > limit) {
    throw dimension_out_of_range("bound_table: n_max=" + std::to_string(n_max) + " outside [7, " +
                                 std::to_string(limit) + "]");
  }
  std::vector<BoundRow> rows;
  BigCount nu_prime = recurrence_even(6, base_values().nu_prime_d6);
  for (int n = 7; n <= n_max; ++n) {
    if (n > 7) nu_prime = (n - 1) % 2 == 0 ? recurrence_even(n - 1, nu_prime) : recurrence_odd(n - 1, nu_prime);
    BoundRow row{n, 6 * nu_prime, generation_sum(n), closed_form_bound(n)};
    if (row.nu_recurrence != row.nu_generation_sum || row.nu_recurrence != row.nu_closed_form) {
      throw invariant_violation("bound routes diverge at n=" + std::to_string(n) + ": recurrence " +
                                row.nu_recurrence.str() + ", closed sum " + row.nu_generation_sum.str() + ", closed form " +
                                row.nu_closed_form.str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bubblecross
