#include "cyclotome/gf.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <thread>

namespace cyclotome {

namespace {

using Poly = std::vector<int>;  // low-degree-first coefficients mod p

int deg(const Poly& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

// a * b mod (monic modulus of degree f given by its low f coefficients)
Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& mod, u64 p, int f) {
  std::vector<i64> res(2 * f, 0);
  for (int i = 0; i < f; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < f; ++j) {
      if (b[j]) res[i + j] += (i64)a[i] * b[j];
    }
  }
  for (int i = 2 * f - 1; i >= f; --i) {
    i64 c = res[i] % (i64)p;
    if (c) {
      for (int j = 0; j < f; ++j) res[i - f + j] -= c * mod[j];
    }
    res[i] = 0;
  }
  Poly out(f);
  for (int i = 0; i < f; ++i) {
    i64 v = res[i] % (i64)p;
    if (v < 0) v += (i64)p;
    out[i] = (int)v;
  }
  return out;
}

Poly pow_x(u64 e, const Poly& mod, u64 p, int f) {
  Poly result(f, 0);
  result[0] = 1;
  Poly base(f, 0);
  if (f == 1)
    base[0] = (int)((p - mod[0] % p) % p);
  else
    base[1] = 1;
  while (e) {
    if (e & 1) result = mulmod_poly(result, base, mod, p, f);
    base = mulmod_poly(base, base, mod, p, f);
    e >>= 1;
  }
  return result;
}

// gcd of polynomials over Z_p (p prime), arbitrary degrees
Poly poly_gcd(Poly a, Poly b, u64 p) {
  while (true) {
    int db = deg(b);
    if (db < 0) return a;
    int da = deg(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    u64 inv = powmod((u64)b[db], p - 2, p);
    while (deg(a) >= db) {
      int d = deg(a);
      i64 c = (i64)mulmod((u64)a[d], inv, p);
      for (int j = 0; j <= db; ++j) {
        i64 v = a[d - db + j] - c * b[j];
        v %= (i64)p;
        if (v < 0) v += (i64)p;
        a[d - db + j] = (int)v;
      }
    }
    std::swap(a, b);
  }
}

bool is_irreducible(const Poly& mod, u64 p, int f) {
  if (f == 1) return true;
  if (mod[0] == 0) return false;  // divisible by x
  // Rabin: x^(p^(f/r)) - x coprime to modulus for each prime r | f,
  // and x^(p^f) == x.
  Poly full(mod);
  full.push_back(1);
  for (auto [r, e] : factorize((u64)f)) {
    u64 k = (u64)f / r;
    // x^(p^k): k rounds of raising to the p-th power
    Poly t(f, 0);
    t[1] = 1;
    for (u64 i = 0; i < k; ++i) {
      Poly s(f, 0);
      s[0] = 1;
      Poly base = t;
      u64 ee = p;
      while (ee) {
        if (ee & 1) s = mulmod_poly(s, base, mod, p, f);
        base = mulmod_poly(base, base, mod, p, f);
        ee >>= 1;
      }
      t = s;
    }
    Poly diff = t;
    diff[1] = (int)(((i64)diff[1] - 1 % (i64)p + (i64)p) % (i64)p);
    Poly g = poly_gcd(full, diff, p);
    if (deg(g) > 0) return false;
  }
  Poly t(f, 0);
  t[1] = 1;
  for (int i = 0; i < f; ++i) {
    Poly s(f, 0);
    s[0] = 1;
    Poly base = t;
    u64 ee = p;
    while (ee) {
      if (ee & 1) s = mulmod_poly(s, base, mod, p, f);
      base = mulmod_poly(base, base, mod, p, f);
      ee >>= 1;
    }
    t = s;
  }
  Poly x(f, 0);
  x[1] = 1;
  return t == x;
}

bool root_is_primitive(const Poly& mod, u64 p, int f, u64 q) {
  Poly one(f, 0);
  one[0] = 1;
  if (f == 1) {
    u64 root = (p - (u64)mod[0] % p) % p;
    if (root == 0) return false;
    for (auto [r, e] : factorize(p - 1))
      if (powmod(root, (p - 1) / r, p) == 1) return false;
    return true;
  }
  if (pow_x(q - 1, mod, p, f) != one) return false;
  for (auto [r, e] : factorize(q - 1)) {
    if (pow_x((q - 1) / r, mod, p, f) == one) return false;
  }
  return true;
}

}  // namespace

FieldSpec find_modulus(u64 p, int f) {
  if (!is_prime(p)) throw Error(Errc::ConditionViolation, "find_modulus: p must be prime");
  if (f < 1) throw Error(Errc::OutOfRange, "find_modulus: f must be positive");
  u64 q = 1;
  for (int i = 0; i < f; ++i) {
    if (q > (u64(1) << 31) / p)
      throw Error(Errc::SizeExceeded, "find_modulus: p^f > 2^31");
    q *= p;
  }
  // Enumerate candidates by the standard table encoding: the degree-i
  // coefficient carries weight p^i, so high-degree terms are minimized first
  // (GF(16) gets x^4 + x + 1, not x^4 + x^3 + 1).
  std::vector<u64> place(f);
  {
    u64 v = 1;
    for (int i = 0; i < f; ++i) {
      place[i] = v;
      v *= p;
    }
  }
  Poly mod(f);
  for (u64 M = 0; M < q; ++M) {
    for (int i = 0; i < f; ++i) mod[i] = (int)(M / place[i] % p);
    if (f > 1 && mod[0] == 0) continue;
    if (!is_irreducible(mod, p, f)) continue;
    if (!root_is_primitive(mod, p, f, q)) continue;
    FieldSpec spec;
    spec.p = p;
    spec.f = f;
    spec.modulus = mod;
    spec.q = q;
    return spec;
  }
  throw Error(Errc::NoSolution, "find_modulus: no primitive polynomial found");
}

u64 FieldTable::neg(u64 x) const {
  u64 p = spec.p;
  if (p == 2) return x;
  u64 out = 0, mult = 1;
  while (x) {
    u64 d = x % p;
    out += (d ? p - d : 0) * mult;
    x /= p;
    mult *= p;
  }
  return out;
}

u64 FieldTable::sub(u64 x, u64 y) const {
  u64 p = spec.p;
  if (p == 2) return x ^ y;
  u64 out = 0, mult = 1;
  while (x || y) {
    u64 d = (x % p + p - y % p) % p;
    out += d * mult;
    x /= p;
    y /= p;
    mult *= p;
  }
  return out;
}

FieldTable build_field(const FieldSpec& spec, int threads) {
  const u64 p = spec.p;
  const int f = spec.f;
  const u64 q = spec.q;
  FieldTable t;
  t.spec = spec;
  t.exp.assign(q - 1, 0);
  t.log.assign(q, FieldTable::LOG_ZERO);
  t.trace.assign(q, 0);

  // exp chain: iterated multiplication by gamma (= residue of x)
  std::vector<int> cur(f, 0);
  cur[0] = 1;
  for (u64 a = 0; a < q - 1; ++a) {
    u64 packed = 0;
    for (int i = f - 1; i >= 0; --i) packed = packed * p + (u64)cur[i];
    if (a > 0 && packed == 1)
      throw Error(Errc::NotPrimitive, "build_field: gamma has order < q-1");
    t.exp[a] = (uint32_t)packed;
    t.log[packed] = (uint32_t)a;
    if (f == 1) {
      u64 root = (p - (u64)spec.modulus[0] % p) % p;
      cur[0] = (int)mulmod((u64)cur[0], root, p);
    } else {
      int top = cur[f - 1];
      for (int i = f - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top) {
        for (int i = 0; i < f; ++i) {
          i64 v = cur[i] - (i64)top * spec.modulus[i];
          v %= (i64)p;
          if (v < 0) v += (i64)p;
          cur[i] = (int)v;
        }
      }
    }
  }

  // traces of basis monomials x^i via Frobenius orbits
  std::vector<int> tr_basis(f, 0);
  for (int i = 0; i < f; ++i) {
    Poly el(f, 0);
    el[i] = 1;
    std::vector<i64> acc(f, 0);
    Poly curp = el;
    for (int k = 0; k < f; ++k) {
      for (int j = 0; j < f; ++j) acc[j] += curp[j];
      Poly s(f, 0);
      s[0] = 1;
      Poly base = curp;
      u64 ee = p;
      while (ee) {
        if (ee & 1) s = mulmod_poly(s, base, spec.modulus, p, f);
        base = mulmod_poly(base, base, spec.modulus, p, f);
        ee >>= 1;
      }
      curp = s;
    }
    for (int j = 1; j < f; ++j) {
      if (acc[j] % (i64)p != 0)
        throw Error(Errc::NotPrimitive, "build_field: trace of basis monomial not scalar");
    }
    tr_basis[i] = (int)(((acc[0] % (i64)p) + (i64)p) % (i64)p);
  }

  auto fill_trace = [&](u64 lo, u64 hi) {
    for (u64 e = lo; e < hi; ++e) {
      u64 x = e, s = 0;
      for (int i = 0; i < f && x; ++i) {
        s += (x % p) * (u64)tr_basis[i];
        x /= p;
      }
      t.trace[e] = (uint8_t)(s % p);
    }
  };
  int nth = threads > 1 ? threads : 1;
  if (nth > 1) {
    std::vector<std::thread> ws;
    u64 chunk = (q + nth - 1) / nth;
    for (int w = 0; w < nth; ++w) {
      u64 lo = (u64)w * chunk, hi = std::min(q, lo + chunk);
      if (lo < hi) ws.emplace_back(fill_trace, lo, hi);
    }
    for (auto& w : ws) w.join();
  } else {
    fill_trace(0, q);
  }
  return t;
}

void save_field(const FieldTable& t, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw Error(Errc::Io, "save_field: cannot open " + path);
  auto w64 = [&](u64 v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = (unsigned char)(v >> (8 * i));
    std::fwrite(b, 1, 8, fp);
  };
  std::fwrite("CYGF1", 1, 5, fp);
  w64(t.spec.p);
  w64((u64)t.spec.f);
  for (int c : t.spec.modulus) w64((u64)c);
  w64(t.spec.q);
  auto w32block = [&](const void* data, size_t n) { std::fwrite(data, 4, n, fp); };
  w32block(t.exp.data(), t.exp.size());
  std::vector<uint32_t> tr32(t.trace.begin(), t.trace.end());
  w32block(tr32.data(), tr32.size());
  std::fclose(fp);
}

FieldTable load_field(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw Error(Errc::Io, "load_field: cannot open " + path);
  char magic[5];
  if (std::fread(magic, 1, 5, fp) != 5 || std::memcmp(magic, "CYGF1", 5) != 0) {
    std::fclose(fp);
    throw Error(Errc::Io, "load_field: bad magic");
  }
  auto r64 = [&]() {
    unsigned char b[8];
    if (std::fread(b, 1, 8, fp) != 8) throw Error(Errc::Io, "load_field: truncated");
    u64 v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  };
  FieldTable t;
  t.spec.p = r64();
  t.spec.f = (int)r64();
  t.spec.modulus.resize(t.spec.f);
  for (int i = 0; i < t.spec.f; ++i) t.spec.modulus[i] = (int)r64();
  t.spec.q = r64();
  u64 q = t.spec.q;
  t.exp.resize(q - 1);
  if (std::fread(t.exp.data(), 4, q - 1, fp) != q - 1) {
    std::fclose(fp);
    throw Error(Errc::Io, "load_field: truncated exp table");
  }
  std::vector<uint32_t> tr32(q);
  if (std::fread(tr32.data(), 4, q, fp) != q) {
    std::fclose(fp);
    throw Error(Errc::Io, "load_field: truncated trace table");
  }
  std::fclose(fp);
  t.trace.assign(tr32.begin(), tr32.end());
  t.log.assign(q, FieldTable::LOG_ZERO);
  for (u64 a = 0; a < q - 1; ++a) t.log[t.exp[a]] = (uint32_t)a;
  return t;
}

FieldTable build_field_cached(u64 p, int f, const std::string& cache_dir, int threads) {
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(cache_dir);
    std::string path = cache_dir + "/cygf_" + std::to_string(p) + "_" + std::to_string(f) + ".bin";
    if (std::filesystem::exists(path)) {
      FieldTable t = load_field(path);
      if (t.spec.p == p && t.spec.f == f) return t;
    }
    FieldTable t = build_field(find_modulus(p, f), threads);
    save_field(t, path);
    return t;
  }
  return build_field(find_modulus(p, f), threads);
}

}  // namespace cyclotome
