#include "cyclotome/arith.hpp"

#include <cmath>
#include <numeric>

namespace cyclotome {

std::string to_string_i128(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 x = neg ? (u128)(-v) : (u128)v;
  std::string s;
  while (x) {
    s.push_back(char('0' + int(x % 10)));
    x /= 10;
  }
  if (neg) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all n < 3.3e24, far above 64 bits.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

u64 mult_order(u64 a, u64 n) {
  a %= n;
  if (n < 2 || gcd_u64(a, n) != 1)
    throw Error(Errc::NotCoprime, "mult_order: gcd(a,n) != 1");
  u64 t = euler_phi(n);
  for (auto [p, e] : factorize(t)) {
    for (int i = 0; i < e; ++i) {
      if (powmod(a, t / p, n) == 1)
        t /= p;
      else
        break;
    }
  }
  return t;
}

u64 subgroup_index(u64 p, u64 N) { return euler_phi(N) / mult_order(p, N); }

bool is_squarefree(u64 D) {
  for (auto [p, e] : factorize(D))
    if (e > 1) return false;
  return true;
}

u64 class_number(u64 D) {
  if (D == 0 || !is_squarefree(D))
    throw Error(Errc::NotSquarefree, "class_number: D must be squarefree and positive");
  i64 disc = (D % 4 == 3) ? -(i64)D : -4 * (i64)D;
  // Reduced primitive forms (a,b,c): b^2 - 4ac = disc, |b| <= a <= c,
  // gcd(a,b,c) = 1, and b >= 0 when |b| = a or a = c.
  u64 count = 0;
  i64 amax = (i64)std::sqrt((double)(-disc) / 3.0) + 2;
  for (i64 a = 1; a <= amax; ++a) {
    if (3 * a * a > -disc) break;
    for (i64 b = -a + 1; b <= a; ++b) {
      i64 num = b * b - disc;
      if (num % (4 * a)) continue;
      i64 c = num / (4 * a);
      if (c < a) continue;
      i64 g = std::gcd(std::gcd(a, b < 0 ? -b : b), c);
      if (g != 1) continue;
      if (a == c && b < 0) continue;
      count++;
    }
  }
  return count;
}

int legendre(i64 a, u64 p) {
  i64 r = a % (i64)p;
  if (r < 0) r += (i64)p;
  if (r == 0) return 0;
  u64 v = powmod((u64)r, (p - 1) / 2, p);
  return v == 1 ? 1 : -1;
}

NormSolution solve_norm_equation(u64 p, u64 h, u64 D, NormMode mode, u64 f) {
  i128 target = 4;
  for (u64 i = 0; i < h; ++i) target *= (i128)p;
  if (target > (i128)1 << 100)
    throw Error(Errc::SizeExceeded, "solve_norm_equation: p^h out of range");
  u64 want = (mode == NormMode::TwoPrimes) ? 2 % D : (D - 2) % D;
  u64 pe = powmod(p, (f - h) / 2, D);
  bool saw_solution = false;
  for (i64 c = 1; (i128)D * c * c <= target; ++c) {
    i128 rem = target - (i128)D * c * c;
    if (rem <= 0) break;
    i64 b = (i64)std::llround(std::sqrt((double)(i64)rem));
    while ((i128)b * b > rem) --b;
    while ((i128)(b + 1) * (b + 1) <= rem) ++b;
    if ((i128)b * b != rem) continue;
    saw_solution = true;
    if (b % (i64)p == 0 || c % (i64)p == 0) continue;
    u64 bp = mulmod((u64)(b % (i64)D), pe, D);
    u64 bn = (D - bp) % D;
    NormSolution sol;
    sol.p = p;
    sol.h = h;
    sol.D = D;
    sol.c = c;
    if (bp == want) {
      sol.b = b;
      return sol;
    }
    if (bn == want) {
      sol.b = -b;
      return sol;
    }
  }
  if (saw_solution)
    throw Error(Errc::PCongruenceFails,
                "solve_norm_equation: no solution passes the b,c != 0 (mod p) and sign congruence checks");
  throw Error(Errc::NoSolution, "solve_norm_equation: no (b,c) with 4p^h = b^2 + D c^2");
}

}  // namespace cyclotome
