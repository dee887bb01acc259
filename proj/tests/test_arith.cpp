#include "doctest.h"

#include <cstdlib>
#include <numeric>

#include "cyclotome/arith.hpp"

using namespace cyclotome;

namespace {

// Independent class number oracle: Dirichlet's finite formula
//   h(d) = (w / (2|d|)) |sum_{a=1}^{|d|-1} (d|a) a|
// for a fundamental discriminant d < 0, with the Kronecker symbol (d|a).
// Shares no code with the reduced-form enumerator under test.
int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int k = 1;
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v % 2 == 1) {
    long long m = ((a % 8) + 8) % 8;
    if (m == 3 || m == 5) k = -k;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  while (a != 0) {
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) {
      long long m = n % 8;
      if (m == 3 || m == 5) k = -k;
    }
    if (((a % 4 + 4) % 4 == 3) && (n % 4 == 3)) k = -k;
    long long r = a < 0 ? -a : a;
    a = n % r;
    n = r;
  }
  return n > 1 ? 0 : k;
}

u64 class_number_oracle(u64 D) {
  long long d = (D % 4 == 3) ? -(long long)D : -4 * (long long)D;
  long long w = (d == -3) ? 6 : (d == -4) ? 4 : 2;
  long long sum = 0;
  for (long long a = 1; a < -d; ++a) sum += kronecker(d, a) * a;
  if (sum < 0) sum = -sum;
  return (u64)(w * sum / (2 * (-d)));
}

}  // namespace

TEST_CASE("i128 decimal formatting") {
  CHECK(to_string_i128(0) == "0");
  CHECK(to_string_i128(-1) == "-1");
  CHECK(to_string_i128(1234567890123456789LL) == "1234567890123456789");
  i128 big = (i128)1000000000000000000LL * 1000000000;
  CHECK(to_string_i128(big) == "1000000000000000000000000000");
  CHECK(to_string_i128(-big) == "-1000000000000000000000000000");
}

TEST_CASE("factorize reconstructs its input from prime powers") {
  for (u64 n : {2ull, 12ull, 45ull, 97ull, 1024ull, 600851475143ull}) {
    u64 prod = 1;
    u64 last = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      CHECK(p > last);
      last = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
  CHECK(factorize(1).empty());
}

TEST_CASE("Miller-Rabin agrees with a sieve up to 10000") {
  const int LIM = 10000;
  std::vector<bool> comp(LIM + 1, false);
  for (int i = 2; i * i <= LIM; ++i)
    if (!comp[i])
      for (int j = i * i; j <= LIM; j += i) comp[j] = true;
  for (int n = 0; n <= LIM; ++n) CHECK(is_prime((u64)n) == (n >= 2 && !comp[n]));
  // A few larger pinned cases.
  CHECK(is_prime(2147483647ull));         // 2^31 - 1
  CHECK(!is_prime(2147483649ull));        // 3 * 715827883
  CHECK(is_prime(67280421310721ull));     // factor of 2^64 + 1
  CHECK(!is_prime(3215031751ull));        // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("euler_phi matches the gcd-counting definition") {
  for (u64 n = 1; n <= 500; ++n) {
    u64 cnt = 0;
    for (u64 a = 1; a <= n; ++a)
      if (std::gcd(a, n) == 1) ++cnt;
    CHECK(euler_phi(n) == cnt);
  }
}

TEST_CASE("mult_order is the exact order of the unit") {
  CHECK(mult_order(2, 45) == 12);
  CHECK(mult_order(3, 22) == 5);
  CHECK(mult_order(2, 75) == 20);
  CHECK(mult_order(3, 35) == 12);
  CHECK(mult_order(5, 38) == 9);
  for (u64 n : {7ull, 22ull, 45ull, 75ull, 97ull, 105ull}) {
    for (u64 a = 2; a < n; ++a) {
      if (std::gcd(a, n) != 1) {
        CHECK_THROWS_AS((void)mult_order(a, n), Error);
        continue;
      }
      u64 t = mult_order(a, n);
      CHECK(powmod(a, t, n) == 1);
      CHECK(euler_phi(n) % t == 0);
      // Minimality: no proper divisor of t works.
      for (u64 d = 1; d < t; ++d)
        if (t % d == 0) CHECK(powmod(a, d, n) != 1);
    }
  }
}

TEST_CASE("subgroup_index is phi(N)/ord and equals 2 on the index-2 instances") {
  CHECK(subgroup_index(2, 45) == 2);
  CHECK(subgroup_index(2, 75) == 2);
  CHECK(subgroup_index(3, 35) == 2);
  CHECK(subgroup_index(3, 22) == 2);
  CHECK(subgroup_index(5, 38) == 2);
  CHECK(subgroup_index(2, 15) == 2);
  for (u64 n : {9ull, 22ull, 45ull})
    for (u64 a = 2; a < n; ++a)
      if (std::gcd(a, n) == 1)
        CHECK(subgroup_index(a, n) * mult_order(a, n) == euler_phi(n));
}

TEST_CASE("class_number matches the Dirichlet formula for all squarefree D <= 2000") {
  for (u64 D = 1; D <= 2000; ++D) {
    if (!is_squarefree(D)) continue;
    CHECK_MESSAGE(class_number(D) == class_number_oracle(D), "D = ", D);
  }
}

TEST_CASE("class_number pinned values") {
  CHECK(class_number(15) == 2);
  CHECK(class_number(35) == 2);
  CHECK(class_number(323) == 4);
  CHECK(class_number(11) == 1);
  CHECK(class_number(19) == 1);
  CHECK(class_number(67) == 1);
  CHECK(class_number(107) == 3);
  CHECK(class_number(163) == 1);
  CHECK(class_number(499) == 3);
  CHECK_THROWS_AS((void)class_number(12), Error);
  CHECK_THROWS_AS((void)class_number(0), Error);
}

TEST_CASE("legendre symbol: Euler criterion and multiplicativity") {
  for (u64 p : {3ull, 5ull, 13ull, 17ull, 101ull}) {
    int residues = 0;
    for (u64 a = 1; a < p; ++a)
      if (legendre((i64)a, p) == 1) ++residues;
    CHECK((u64)residues == (p - 1) / 2);
    CHECK(legendre(0, p) == 0);
    CHECK(legendre((i64)p, p) == 0);
    for (u64 a = 1; a < p; ++a)
      for (u64 b = 1; b < p; ++b)
        CHECK(legendre((i64)(a * b), p) == legendre((i64)a, p) * legendre((i64)b, p));
    // Negative arguments reduce mod p.
    CHECK(legendre(-1, p) == legendre((i64)(p - 1), p));
  }
}

TEST_CASE("norm equation 4p^h = b^2 + D c^2 with the sign congruence") {
  SUBCASE("two-prime mode, pinned instances") {
    NormSolution s = solve_norm_equation(2, 2, 15, NormMode::TwoPrimes, 4);
    CHECK(s.b == 1);
    CHECK(s.c == 1);
    s = solve_norm_equation(3, 2, 35, NormMode::TwoPrimes, 12);
    CHECK(s.b == -1);
    CHECK(s.c == 1);
    s = solve_norm_equation(3, 4, 323, NormMode::TwoPrimes, 144);
    CHECK(s.b * s.b + 323 * s.c * s.c == 4 * 81);
  }
  SUBCASE("one-prime mode, pinned instances") {
    NormSolution s = solve_norm_equation(3, 1, 11, NormMode::OnePrime, 5);
    CHECK(s.b == 1);
    CHECK(s.c == 1);
    s = solve_norm_equation(5, 1, 19, NormMode::OnePrime, 9);
    CHECK(s.b == 1);
    CHECK(s.c == 1);
    s = solve_norm_equation(3, 3, 107, NormMode::OnePrime, 53);
    CHECK(s.b * s.b + 107 * s.c * s.c == 4 * 27);
  }
  SUBCASE("every returned solution satisfies the identity and congruence") {
    struct Row {
      u64 p, h, D, f;
      NormMode mode;
    };
    for (Row r : {Row{2, 2, 15, 4, NormMode::TwoPrimes}, Row{3, 2, 35, 12, NormMode::TwoPrimes},
                  Row{3, 1, 11, 5, NormMode::OnePrime}, Row{5, 1, 19, 9, NormMode::OnePrime},
                  Row{17, 1, 67, 33, NormMode::OnePrime}, Row{41, 1, 163, 81, NormMode::OnePrime},
                  Row{5, 3, 499, 249, NormMode::OnePrime}}) {
      NormSolution s = solve_norm_equation(r.p, r.h, r.D, r.mode, r.f);
      i128 target = 4;
      for (u64 i = 0; i < r.h; ++i) target *= r.p;
      CHECK((i128)s.b * s.b + (i128)r.D * s.c * s.c == target);
      CHECK(s.b % (i64)r.p != 0);
      CHECK(s.c % (i64)r.p != 0);
      u64 want = r.mode == NormMode::TwoPrimes ? 2 % r.D : (r.D - 2) % r.D;
      u64 bmod = (u64)(((s.b % (i64)r.D) + (i64)r.D) % (i64)r.D);
      CHECK(mulmod(bmod, powmod(r.p, (r.f - r.h) / 2, r.D), r.D) == want);
    }
  }
  SUBCASE("no solution raises") {
    // 4*7 = 28; 28 - 21c^2: c=1 gives 7, not a square; no valid (b,c).
    CHECK_THROWS_AS((void)solve_norm_equation(7, 1, 21, NormMode::TwoPrimes, 6), Error);
  }
}
