#include "doctest.h"

#include <numeric>
#include <set>

#include "cyclotome/verify.hpp"

using namespace cyclotome;

namespace {

struct Instance {
  FieldTable field;
  PeriodTable pt;
};

Instance instance(u64 p, int f, u64 N) {
  FieldTable field = build_field(find_modulus(p, f), 2);
  PeriodTable pt = build_period_table(field, N, 2);
  return {std::move(field), std::move(pt)};
}

void check_same_certificate(const SrgCertificate& a, const SrgCertificate& b) {
  CHECK(a.v == b.v);
  CHECK(a.k == b.k);
  CHECK(a.lambda == b.lambda);
  CHECK(a.mu == b.mu);
  CHECK(a.rational == b.rational);
  CHECK(a.m_r == b.m_r);
  CHECK(a.m_s == b.m_s);
  CHECK(a.connected == b.connected);
  CHECK(a.r_str == b.r_str);
  CHECK(a.s_str == b.s_str);
}

}  // namespace

TEST_CASE("restricted spectrum of the (4096, 273, 20, 18) graph") {
  Instance in = instance(2, 12, 45);
  ConnectionSet D = build_connection_set(in.field, 45, {0, 5, 10});
  auto spec = restricted_spectrum(in.pt, D);
  REQUIRE(spec.size() == 2);
  // Map order puts -15 (canonical vector) deterministically; check as a set.
  std::set<i64> values;
  u64 total_mult = 0;
  for (const auto& s : spec) {
    REQUIRE(s.value.is_rational());
    values.insert(s.value.rational_value());
    total_mult += s.multiplicity;
    CHECK(s.multiplicity == s.a_count * in.pt.class_size());
  }
  CHECK(values == std::set<i64>{17, -15});
  CHECK(total_mult == in.field.q() - 1);
}

TEST_CASE("spectral and direct SRG verdicts agree wherever both run") {
  SUBCASE("the (4096, 273, 20, 18) graph") {
    Instance in = instance(2, 12, 45);
    ConnectionSet D = build_connection_set(in.field, 45, {0, 5, 10});
    SrgCertificate spectral = verify_srg(in.pt, D);
    SrgCertificate direct = verify_srg_direct(in.field, D);
    CHECK(spectral.method == "spectral");
    CHECK(direct.method == "direct");
    check_same_certificate(spectral, direct);
    CHECK(spectral.k == 273);
    CHECK(spectral.lambda == 20);
    CHECK(spectral.mu == 18);
    CHECK(spectral.r == 17);
    CHECK(spectral.s == -15);
    CHECK(spectral.m_r == 1911);
    CHECK(spectral.m_s == 2184);
    CHECK(spectral.connected);
  }
  SUBCASE("the degenerate one-class graph on GF(16) is a perfect matching") {
    Instance in = instance(2, 4, 15);
    ConnectionSet D = build_connection_set(in.field, 15, {0});
    SrgCertificate spectral = verify_srg(in.pt, D);
    SrgCertificate direct = verify_srg_direct(in.field, D);
    check_same_certificate(spectral, direct);
    CHECK(spectral.k == 1);
    CHECK(spectral.lambda == 0);
    CHECK(spectral.mu == 0);
    CHECK(!spectral.connected);  // r = k flags the disconnected case
  }
  SUBCASE("the Paley graph on GF(13)") {
    Instance in = instance(13, 1, 2);
    ConnectionSet D = build_connection_set(in.field, 2, {0});  // quadratic residues
    SrgCertificate spectral = verify_srg(in.pt, D);
    SrgCertificate direct = verify_srg_direct(in.field, D);
    check_same_certificate(spectral, direct);
    CHECK(spectral.v == 13);
    CHECK(spectral.k == 6);
    CHECK(spectral.lambda == 2);
    CHECK(spectral.mu == 3);
    CHECK(!spectral.rational);
    CHECK(spectral.r_str == "(-1+sqrt(13))/2");
    CHECK(spectral.s_str == "(-1-sqrt(13))/2");
  }
}

TEST_CASE("non-SRG inputs are rejected by both methods") {
  SUBCASE("more than two restricted values") {
    Instance in = instance(2, 4, 15);
    ConnectionSet D = build_connection_set(in.field, 15, {0, 1});
    CHECK_THROWS_AS((void)verify_srg(in.pt, D), Error);
    CHECK_THROWS_AS((void)verify_srg_direct(in.field, D), Error);
  }
  SUBCASE("asymmetric connection set in odd characteristic") {
    Instance in = instance(3, 5, 22);
    ConnectionSet D = build_connection_set(in.field, 22, {0});
    CHECK_THROWS_AS((void)verify_srg(in.pt, D), Error);
    CHECK_THROWS_AS((void)verify_srg_direct(in.field, D), Error);
  }
  SUBCASE("complete and edgeless graphs") {
    Instance in = instance(2, 4, 15);
    std::vector<u64> all(15);
    std::iota(all.begin(), all.end(), 0);
    ConnectionSet complete = build_connection_set(in.field, 15, all);
    CHECK_THROWS_AS((void)verify_srg_direct(in.field, complete), Error);
    ConnectionSet empty = build_connection_set(in.field, 15, {});
    CHECK_THROWS_AS((void)verify_srg_direct(in.field, empty), Error);
  }
  SUBCASE("the direct method refuses oversized fields") {
    Instance in = instance(5, 6, 6);  // v = 15625 > 10^4
    ConnectionSet D = build_connection_set(in.field, 6, {0, 3});
    CHECK_THROWS_AS((void)verify_srg_direct(in.field, D), Error);
  }
}

TEST_CASE("skew Hadamard difference set in GF(3^5)") {
  Instance in = instance(3, 5, 22);
  IndexTwoParams params = make_params_B(3, 11, 1);
  // Exactly one of the two cosets is the difference set for this gamma.
  int good = -1;
  for (int coset : {0, 1}) {
    ConnectionSet D = build_D_B(in.field, params, coset);
    try {
      SkewVerdict v = verify_skew_hds(in.field, in.pt, D);
      CHECK(v.v == 243);
      CHECK(v.k == 121);
      CHECK(v.census_value == 60);
      CHECK(v.census_ran);
      CHECK(v.value_plus == "(-1+sqrt(-243))/2");
      CHECK(v.value_minus == "(-1-sqrt(-243))/2");
      CHECK(good == -1);  // at most one coset verifies
      good = coset;
    } catch (const Error&) {
    }
  }
  CHECK(good != -1);
  // The skew check refuses characteristics p = 1 (mod 4).
  Instance p13 = instance(13, 1, 2);
  ConnectionSet qr = build_connection_set(p13.field, 2, {0});
  CHECK_THROWS_AS((void)verify_skew_hds(p13.field, p13.pt, qr), Error);
}

TEST_CASE("Paley-type partial difference sets") {
  SUBCASE("odd extension degree: GF(13) quadratic residues") {
    Instance in = instance(13, 1, 2);
    ConnectionSet D = build_connection_set(in.field, 2, {0});
    PaleyVerdict v = verify_paley_pds(in.field, in.pt, D);
    CHECK(v.v == 13);
    CHECK(v.k == 6);
    CHECK(v.value_plus == "(-1+sqrt(13))/2");
  }
  SUBCASE("even extension degree: GF(25) quadratic residues") {
    Instance in = instance(5, 2, 2);
    ConnectionSet D = build_connection_set(in.field, 2, {0});
    PaleyVerdict v = verify_paley_pds(in.field, in.pt, D);
    CHECK(v.v == 25);
    CHECK(v.k == 12);
    CHECK(v.value_plus == "2");   // (-1 + 5)/2
    CHECK(v.value_minus == "-3");  // (-1 - 5)/2
  }
  SUBCASE("wrong characteristic class is refused") {
    Instance in = instance(3, 5, 22);
    ConnectionSet D = build_D_B(in.field, make_params_B(3, 11, 1), 0);
    CHECK_THROWS_AS((void)verify_paley_pds(in.field, in.pt, D), Error);
  }
}

TEST_CASE("fifteen-class association scheme on GF(2^12)") {
  Instance in = instance(2, 12, 45);
  IndexTwoParams params = make_params_A(2, 5, 3, 1, 2);
  auto rels = build_scheme_relations(in.field, params);
  SchemeReport rep = verify_scheme(in.field, in.pt, rels);

  CHECK(rep.classes == 15);
  CHECK(rep.valency == 273);
  CHECK(rep.valencies_equal);
  CHECK(rep.multiplicity == 273);
  CHECK(rep.pseudocyclic);
  CHECK(rep.intersection_checked);
  REQUIRE(rep.certificates.size() == 15);
  for (const auto& c : rep.certificates) {
    CHECK(c.v == 4096);
    CHECK(c.k == 273);
    CHECK(c.connected);
  }
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness_value_count > 2);

  // Intersection tensor sanity: symmetry, diagonal identity row, and the
  // row-sum identity sum_j p_ij^k = n_i for every i, k.
  size_t nc = rep.pnum.size();
  REQUIRE(nc == 16);
  for (size_t k = 0; k < nc; ++k)
    for (size_t i = 0; i < nc; ++i) {
      i64 row = 0;
      for (size_t j = 0; j < nc; ++j) {
        CHECK(rep.pnum[k][i][j] == rep.pnum[k][j][i]);
        row += rep.pnum[k][i][j];
      }
      CHECK(row == (i == 0 ? 1 : (i64)rels[i - 1].size));
    }
  for (size_t i = 1; i < nc; ++i) CHECK(rep.pnum[0][i][i] == (i64)rels[i - 1].size);

  // Overlapping relations are not a partition.
  auto bad = rels;
  bad.push_back(rels[0]);
  CHECK_THROWS_AS((void)verify_scheme(in.field, in.pt, bad), Error);
}

TEST_CASE("exact value formatting") {
  CHECK(value_string(CycIntValue::rational(3, -15), 2, 12) == "-15");
  PredictedPairB pv = predicted_values_B(3, 5);
  CycIntValue x = pv.tplus;  // 2x+1 shape: recover x = (t-1)/2 coefficientwise
  // Use a value that is not one of the +-sqrt shapes: fall back to vector form.
  CycIntValue odd(3);
  odd.c = {0, 1, 0};
  std::string s = value_string(odd, 3, 5);
  CHECK(s.find('[') != std::string::npos);
}
