#ifndef CYCLOTOME_ARITH_HPP
#define CYCLOTOME_ARITH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclotome/errors.hpp"

namespace cyclotome {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string_i128(i128 v);

// Trial-division factorization, (prime, exponent) pairs in increasing order.
std::vector<std::pair<u64, int>> factorize(u64 n);

u64 gcd_u64(u64 a, u64 b);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

u64 euler_phi(u64 n);

// Least t >= 1 with a^t = 1 (mod n). Throws NotCoprime.
u64 mult_order(u64 a, u64 n);

// phi(N) / ord_N(p). Throws NotCoprime.
u64 subgroup_index(u64 p, u64 N);

// Class number of Q(sqrt(-D)) for squarefree D > 0, by counting reduced
// primitive forms of discriminant -D (D = 3 mod 4) or -4D (otherwise).
u64 class_number(u64 D);

bool is_squarefree(u64 D);

// Legendre symbol a over odd prime p: -1, 0, +1.
int legendre(i64 a, u64 p);

struct NormSolution {
  i64 b = 0;
  i64 c = 0;
  u64 p = 0;
  u64 h = 0;
  u64 D = 0;
};

enum class NormMode { TwoPrimes, OnePrime };

// Solves 4 p^h = b^2 + D c^2 with b, c != 0 (mod p) and the sign of b fixed
// by b * p^((f-h)/2) = +2 (mod D) in TwoPrimes mode, -2 (mod D) in OnePrime
// mode. c is reported positive; the smallest |c| solution wins.
// Throws NoSolution / PCongruenceFails.
NormSolution solve_norm_equation(u64 p, u64 h, u64 D, NormMode mode, u64 f);

}  // namespace cyclotome

#endif
