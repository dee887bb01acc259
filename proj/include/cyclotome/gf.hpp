#ifndef CYCLOTOME_GF_HPP
#define CYCLOTOME_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotome/arith.hpp"

namespace cyclotome {

struct FieldSpec {
  u64 p = 0;
  int f = 0;
  // Monic modulus, low-degree-first, without the leading 1 (f coefficients).
  std::vector<int> modulus;
  u64 q = 0;
};

// Complete exp/log/trace tables for GF(p^f). Elements are base-p packed
// integers in [0, q); gamma is the residue of x modulo the field modulus.
struct FieldTable {
  FieldSpec spec;
  std::vector<uint32_t> exp;    // length q-1, exp[a] = gamma^a
  std::vector<uint32_t> log;    // length q, log[exp[a]] = a; log[0] = LOG_ZERO
  std::vector<uint8_t> trace;   // length q, Tr_{q/p}(element) in [0, p)

  static constexpr uint32_t LOG_ZERO = 0xFFFFFFFFu;

  u64 q() const { return spec.q; }
  u64 p() const { return spec.p; }
  int f() const { return spec.f; }

  // Packed field negation: digitwise -x mod p.
  u64 neg(u64 x) const;
  // Packed field subtraction: digitwise (x - y) mod p.
  u64 sub(u64 x, u64 y) const;
};

// Smallest monic degree-f polynomial over Z_p (by the base-p encoding with
// the degree-i coefficient weighted p^i) that is irreducible with a
// primitive root. Throws SizeExceeded if p^f > 2^31.
FieldSpec find_modulus(u64 p, int f);

FieldTable build_field(const FieldSpec& spec, int threads = 1);

inline int trace_of(const FieldTable& t, u64 x) {
  if (x >= t.q()) throw Error(Errc::OutOfRange, "trace: element out of range");
  return t.trace[x];
}

// Binary cache: "CYGF1" header, p, f, modulus coefficients, q as LE u64,
// then exp_table and trace_table as LE u32. log_table rebuilt on load.
void save_field(const FieldTable& t, const std::string& path);
FieldTable load_field(const std::string& path);

// Build with a (p, f, modulus)-keyed cache under cache_dir; empty cache_dir
// builds from scratch.
FieldTable build_field_cached(u64 p, int f, const std::string& cache_dir, int threads = 1);

}  // namespace cyclotome

#endif
