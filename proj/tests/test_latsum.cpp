// Lattice sums: Kober series against the theta-series oracle
// (tests/oracles/theta_oracle.py) and the disc sums of lattice_oracle.py,
// plus the identity systems and the functional equation.
#include <angsum/latsum.hpp>

#include <gtest/gtest.h>

using namespace angsum;
using namespace angsum::latsum;

namespace {

const EvalConfig kD = EvalConfig::native<double>();
const EvalConfig kQ = EvalConfig::native<quad>();

using PD = ComplexPoint<double>;
using PQ = ComplexPoint<quad>;

double rel(cplx<double> a, cplx<double> b) { return std::abs(a - b) / std::abs(b); }
quad relq(cplx<quad> a, cplx<quad> b) { return cabs(a - b) / cabs(b); }

cplx<quad> qc(const char* re, const char* im = "0") { return {quad(re), quad(im)}; }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::io_failure;
}

}  // namespace

TEST(Kober, PlainSumAtTwo) {
  const auto k = c2n1_kober(0, PD(2, 0), kD);
  EXPECT_NEAR(k.total.real(), 6.02681203969194012354626, 1e-12);
  EXPECT_EQ(k.total, k.axial + k.zeta_line + k.double_sum);
  EXPECT_GT(k.P_used, 0);
}

TEST(Kober, PlainSumMatchesClosedFormInQuad) {
  for (auto s : {PQ(2, 0), PQ(quad("0.5"), 9), PQ(quad("-1.25"), quad("3.5"))})
    EXPECT_LT(relq(c2n1_kober(0, s, kQ).total, c01(s, kQ.prec)), quad(1e-26)) << s.sigma() << " " << s.t();
}

TEST(Kober, HalfRelationAtTwo) {
  const auto c0 = c01(PD(2, 0), kD.prec), c2 = c2n1_kober(1, PD(2, 0), kD).total;
  EXPECT_LT(rel(c2, c0 / 2.0), 1e-13);
}

TEST(Kober, PoleOfZetaLineTerm) {
  EXPECT_EQ(kind_of([] { c2n1_kober(0, PD(1, 0), kD); }), ErrorKind::pole_of_sum);
  EXPECT_EQ(kind_of([] { c01(PD(1, 0), kD.prec); }), ErrorKind::pole_at_one);
}

TEST(Kober, ConjugateSymmetry) {
  for (int n : {0, 2, 4}) {
    const PD s(0.5, 11.3);
    const auto a = c2n1_kober(n, s, kD).total, b = c2n1_kober(n, s.conj(), kD).total;
    EXPECT_LT(std::abs(a - std::conj(b)), 1e-12 * std::abs(a)) << n;
  }
}

TEST(Kober, TruncationStability) {
  const PD s(0.5, 17.0);
  EvalConfig wide = kD;
  wide.truncation_P = c2n1_kober(2, s, kD).P_used + 5;
  EXPECT_LT(rel(c2n1_kober(2, s, kD).total, c2n1_kober(2, s, wide).total), 1e-12);
}

TEST(C14m, ThetaOracleQuad) {
  EXPECT_LT(relq(c14m(1, PQ(quad("2.5"), 0), kQ), qc("3.37386569646798629199447")), quad(1e-23));
  EXPECT_LT(relq(c14m(1, PQ(quad("0.5"), 14), kQ), qc("14.01863101230438379596944", "-7.620979851437886674902295")),
            quad(1e-23));
}

TEST(C14m, ThetaOracleDouble) {
  EXPECT_NEAR(c14m(1, PD(4, 0), kD).real(), 3.761766026165830301802935, 1e-12);
  EXPECT_NEAR(c14m(1, PD(3, 0), kD).real(), 3.542919888131992462095626, 1e-12);
  EXPECT_NEAR(c14m(2, PD(2, 0), kD).real(), 5.03066621465736540724979, 1e-12);
  EXPECT_LT(rel(c14m(1, PD(-1.5, 3), kD), {-3.344697525550138852208265, 7.434866173184789908955367}), 1e-11);
}

TEST(C14m, RealOnRealAxis) {
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(c14m(m, PD(2.2, 0), kD).imag(), 0.0) << m;
}

TEST(C14m, LowestOrderCombination) {
  const PD s(3, 0);
  const auto c4 = c2n1_kober(2, s, kD).total, c0 = c01(s, kD.prec);
  EXPECT_LT(rel(c14m(1, s, kD), 8.0 * c4 - 3.0 * c0), 1e-13);
}

TEST(C14m, ChebyshevWeightsForFirstTwo) {
  EXPECT_EQ(chebyshev_basis_weights(4), (std::vector<specfun::cpp_int>{1, -8, 8}));
  EXPECT_EQ(chebyshev_basis_weights(8), (std::vector<specfun::cpp_int>{1, -32, 160, -256, 128}));
  // with the odd orders folded away: 8C(4,1) - 3C(0,1) and 128C(8,1) - 224C(4,1) + 49C(0,1)
  EXPECT_EQ(c14m_combination(1, true), (Combination{{0, -3}, {2, 8}}));
  EXPECT_EQ(c14m_combination(2, true), (Combination{{0, 49}, {2, -224}, {4, 128}}));
}

TEST(C14m, PairSumAndDifference) {
  const PD s(2, 0);
  const auto [c, sn] = c2_2m_and_s2_2m(1, s, kD);
  const auto c0 = c01(s, kD.prec), c4 = c2n1_kober(2, s, kD).total;
  EXPECT_LT(rel(c + sn, c0), 1e-14);
  EXPECT_LT(rel(c - sn, c14m(1, s, kD)), 1e-13);
  EXPECT_LT(rel(c, 4.0 * c4 - c0), 1e-13);
}

TEST(Structural, OddPowersAndTwistedHarmonicsVanish) {
  EXPECT_EQ(evaluate(SumSpec(SumKind::COS, 3, 1), PD(0.5, 4), kD), cplx<double>(0));
  EXPECT_EQ(evaluate(SumSpec(SumKind::COS, 1, 2), PD(2.5, 1), kD), cplx<double>(0));
  EXPECT_EQ(evaluate(SumSpec(SumKind::COS, 1, 6), PD(0.5, 20), kD), cplx<double>(0));
  EXPECT_TRUE(reduce(SumSpec(SumKind::COS, 1, 10)).structural_zero());
  EXPECT_FALSE(reduce(SumSpec(SumKind::COS, 1, 8)).structural_zero());
}

TEST(Structural, ChebyshevAssemblyOfTwistedHarmonicIsNoise) {
  // without the shortcut, C(1,4m-2) comes out as rounding noise
  for (int M : {2, 6, 10}) {
    const auto v = c1_chebyshev(M, PD(2.5, 3), kD);
    EXPECT_LT(std::abs(v), 1e-10) << M;
  }
}

TEST(Direct, FourfoldHarmonicAtFour) {
  const auto d = direct_sum(SumSpec(SumKind::COS, 1, 4), PD(4, 0), 200);
  EXPECT_NEAR(d.value.real(), 3.76176602616583, 1e-13);
  EXPECT_LE(std::abs(d.value - c14m(1, PD(4, 0), kD)), d.tail_bound + 1e-13);
  EXPECT_LT(d.tail_bound, 1e-13);
}

TEST(Direct, DoubledAngleSquareIsHalfPlainSum) {
  const auto d = direct_sum(SumSpec(SumKind::COS, 2, 3), PD(3, 0), 600);
  EXPECT_LE(std::abs(d.value - c01(PD(3, 0), kD.prec) / 2.0), d.tail_bound + 1e-12);
}

TEST(Direct, OddPowerIsExactZero) {
  EXPECT_EQ(direct_sum(SumSpec(SumKind::COS, 3, 1), PD(2, 1), 50).value, cplx<double>(0));
}

TEST(Direct, DivergentRegionRejected) {
  EXPECT_EQ(kind_of([] { direct_sum(SumSpec(SumKind::COS, 0, 1), PD(1, 3), 50); }),
            ErrorKind::not_absolutely_convergent);
}

TEST(Rays, PlainSumAtTwo) {
  const auto r = ray_sum(RayForm::C01, 0, PD(2, 0), 2000);
  EXPECT_NEAR(r.value.real(), 6.02681203969194, 1e-6);
  EXPECT_LE(std::abs(r.value - c01(PD(2, 0), kD.prec)), r.tail_bound);
}

TEST(Rays, ComplexPointAgreesWithKober) {
  const PD s(2.5, 6);
  const auto r = ray_sum(RayForm::C14m, 1, s, 600);
  EXPECT_LE(std::abs(r.value - c14m(1, s, kD)), r.tail_bound);
  const auto q = ray_sum(RayForm::C22m, 2, s, 600);
  EXPECT_LE(std::abs(q.value - c2_2m_and_s2_2m(2, s, kD).first), q.tail_bound);
}

TEST(Rays, HighPowerFormApproachesLimit) {
  const PD s(3, 0);
  const auto lim = 2.0 * specfun::riemann_zeta(cplx<double>(6, 0));
  const auto r = ray_sum(RayForm::C2m1, 40, s, 200);
  EXPECT_LT(rel(r.value, lim), 1e-3);
  EXPECT_LT(rel(r.value, c2n1_kober(40, s, kD).total), 1e-8);
}

TEST(Rays, DivergentRegionRejected) {
  EXPECT_EQ(kind_of([] { ray_sum(RayForm::C01, 0, PD(1, 2), 100); }), ErrorKind::divergent_region);
}

TEST(Limit, ConvergesInHigherPowers) {
  const PD s(0.5, 5);
  const auto a = limit_check(10, s, kD), b = limit_check(100, s, kD);
  EXPECT_LT(b.difference, a.difference);
  const auto r = limit_check(10, PD(2, 0), kD);
  EXPECT_EQ(r.sum.imag(), 0.0);
  EXPECT_EQ(r.limit.imag(), 0.0);
}

TEST(Limit, SlowAtSmallOrdinate) {
  // at m = 100 the gap at s = 1/2 + 2i is still 6% of |2 zeta(2s)|; the
  // reference is an mpmath evaluation of the same Kober series
  const PD s(0.5, 2);
  const auto r = limit_check(100, s, kD);
  EXPECT_NEAR(r.difference, 0.0851043952399048624, 1e-11);
  EXPECT_GT(r.difference / std::abs(r.limit), 1e-2);
}

TEST(SumRule, ZeroWeightAndAbelLimit) {
  const PD s(2.5, 0);
  EXPECT_EQ(sum_rule_abel(s, 0.0, 10, 50).lhs, cplx<double>(0));
  double prev = 1e300;
  for (double x : {0.9, 0.99, 0.999}) {
    const auto a = sum_rule_abel(s, x, 20000, 400);
    const double err = std::abs(a.lhs - a.axis_part - a.regular_limit);
    EXPECT_LT(err, prev) << x;
    prev = err;
  }
  EXPECT_LT(prev, 1e-2);
}

TEST(Identities, FullSuiteInQuad) {
  for (auto s : {PQ(quad("0.5"), 7), PQ(2, 0), PQ(quad("-0.75"), quad("12.5"))}) {
    for (const auto& r : identity_suite(s, kQ)) EXPECT_LT(r.residual, quad(1e-24)) << r.name << " at t=" << s.t();
  }
}

TEST(Identities, VanishingSumForEvenOrder) {
  const auto r = recurrence_check(2, PQ(quad("0.5"), 7), kQ);
  EXPECT_TRUE(r.even);
  EXPECT_LT(r.recurrence, quad(1e-20));
  const auto r4 = recurrence_check(4, PQ(quad("1.5"), -3), kQ);
  EXPECT_LT(r4.recurrence, quad(1e-20));
}

TEST(Identities, OddOrderReductions) {
  const auto c = reduce_to_even(odd_order_expansion(5));
  // C(10,1) = 1/2 C(0,1) - 5/2 C(4,1) + 5/2 C(8,1)
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.at(0), rational(1, 2));
  EXPECT_EQ(c.at(2), rational(-5, 2));
  EXPECT_EQ(c.at(4), rational(5, 2));
  const auto c1 = odd_order_expansion(1);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1.at(0), rational(1, 2));
  EXPECT_LT(recurrence_check(3, PD(2, 0), kD).recurrence, 1e-13);
}

TEST(Identities, MixedPowers) {
  const PD s(2, 0);
  const auto b = c2n1_basis<double>(4, s.z(), kD);
  EXPECT_LT(rel(mixed_power_sum(3, 1, s, kD), -b[4] + 1.5 * b[2] - 0.25 * b[0]), 1e-13);
  EXPECT_LT(rel(mixed_power_sum(2, 2, s, kD), b[4] - 2.0 * b[2] + 0.5 * b[0]), 1e-13);
  const PD z(0.5, 9);
  EXPECT_LT(rel(mixed_power_sum(3, 2, z, kD), 0.5 * mixed_power_sum(2, 2, z, kD)), 1e-12);
}

TEST(FunctionalEquation, CompletedSumsQuad) {
  for (int m = 0; m <= 3; ++m)
    for (auto s : {PQ(quad("0.2"), quad("4.5")), PQ(quad("2.5"), 18), PQ(quad("-1.1"), quad("0.7"))})
      EXPECT_LT(functional_equation_residual(m, s, kQ), quad(1e-24)) << "m=" << m << " t=" << s.t();
}
