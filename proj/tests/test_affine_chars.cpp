#include "hookdual/affine_chars.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace hookdual;

namespace {

LevelScalar k() { return LevelScalar::k(); }

// Number of partitions of n into parts of `colours` colours.
long coloured_partitions(int n, int colours) {
    std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int c = 0; c < colours; ++c)
        for (int part = 1; part <= n; ++part)
            for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    return p[static_cast<std::size_t>(n)];
}

// Swap the two single-algebra slots of a two-factor series.
std::map<int, CharTerms> swapped(const GradedSeries& s, int first_width) {
    std::map<int, CharTerms> out;
    for (const auto& [d, terms] : s.coeffs())
        for (const auto& [w, m] : terms) {
            std::vector<int> v(w.begin() + first_width, w.end());
            v.insert(v.end(), w.begin(), w.begin() + first_width);
            out[d][v] = m;
        }
    return out;
}

// Parity of the highest weight vector in the standard defining module.
int standard_top_parity(const AlgebraId& id) { return id.family == Family::OSP ? 1 : 0; }

}  // namespace

TEST(DeltaLowest, SmallCases) {
    EXPECT_TRUE(delta_lowest(Weight::zero(sl(3))).value().is_zero());
    EXPECT_EQ(delta_lowest(Weight::fundamental(sl(2), 1)).value(),
              LevelScalar(Rational(3, 4)) / (k() + LevelScalar(2)));
    EXPECT_EQ(delta_lowest(Weight::fundamental(so(5), 1)).value(), LevelScalar(2) / (k() + LevelScalar(3)));
    // gl_1 charge a: a^2 / 2k.
    EXPECT_EQ(delta_lowest(Weight{gl(1), {3}}).value(), LevelScalar(Rational(9, 2)) / k());
    // sp_2 = sl_2 with the same Casimir.
    EXPECT_EQ(delta_lowest(Weight::fundamental(sp(2), 1)).value(), delta_lowest(Weight::fundamental(sl(2), 1)).value());
}

TEST(WeylModule, Gl1VacuumIsPartitions) {
    GradedSeries s = weyl_module_char(Weight::zero(gl(1)), k(), 20);
    for (int d = 0; d <= 20; d += 2) {
        const CharTerms& c = s.coeff(d);
        ASSERT_EQ(c.size(), 1u);
        EXPECT_EQ(c.at({0}).even, coloured_partitions(d / 2, 1));
    }
    EXPECT_TRUE(s.coeff(1).empty());
}

TEST(WeylModule, Sl2FundamentalMatchesPbwCount) {
    const int order2 = 6;
    GradedSeries s = weyl_module_char(Weight::fundamental(sl(2), 1), k(), order2);
    EXPECT_EQ(s.shift().value(), LevelScalar(Rational(3, 4)) / (k() + LevelScalar(2)));
    EXPECT_EQ(s.coeff(0), (CharTerms{{{-1}, {1, 0}}, {{1}, {1, 0}}}));

    // Brute force: multisets of x_{-j} (x in {e,h,f}, j >= 1) of total degree d, times L_{varpi_1}.
    std::map<std::pair<int, int>, long> count;
    const int gens_weight[3] = {2, 0, -2};
    std::function<void(int, int, int, int)> rec = [&](int next, int deg, int wt, int) {
        for (int top : {1, -1}) count[{deg, wt + top}] += 1;
        for (int g = next; g < 3 * (order2 / 2); ++g) {
            const int j = g / 3 + 1;
            if (deg + j > order2 / 2) break;
            rec(g, deg + j, wt + gens_weight[g % 3], 0);
        }
    };
    rec(0, 0, 0, 0);
    for (int d = 0; d <= order2 / 2; ++d) {
        std::map<std::vector<int>, long> want;
        for (const auto& [key, n] : count)
            if (key.first == d) want[{key.second}] = n;
        std::map<std::vector<int>, long> got;
        for (const auto& [w, m] : s.coeff(2 * d)) got[w] = m.even;
        EXPECT_EQ(got, want) << "degree " << d;
    }
}

TEST(Kernel, GluingAndNaturalSectorAllFamilies) {
    std::vector<AlgebraId> algs;
    for (int m = 1; m <= 3; ++m) {
        algs.push_back(gl(m));
        algs.push_back(so(2 * m + 1));
        algs.push_back(sp(2 * m));
        algs.push_back(so(2 * m));
        algs.push_back(osp1(2 * m));
    }
    const std::map<Family, std::vector<Rational>> abc{
        {Family::GL, {1, 1, 1}},  {Family::SO_ODD, {1, 2, 1}}, {Family::SP, {1, 1, 2}},
        {Family::SO_EVEN, {1, 1, 1}}, {Family::OSP, {2, 1, 1}}};
    for (const auto& g : algs)
        for (int n : {1, -1, 2, -2}) {
            SCOPED_TRACE(g.name() + " n=" + std::to_string(n));
            const KernelSpec s = kernel_spec(g, n);
            EXPECT_EQ((std::vector<Rational>{s.a, s.b, s.c}), abc.at(g.family));
            EXPECT_TRUE(s.gluing_residual().is_zero());
            const KernelSector nat = natural_sector(s);
            const Rational m = g.rank_param;
            Rational want;
            switch (g.family) {
                case Family::GL: want = n * m / 2; break;
                case Family::SP: want = n * (m + Rational(1, 2)); break;
                case Family::SO_EVEN: want = n * (m - Rational(1, 2)); break;
                default: want = n * m; break;
            }
            EXPECT_EQ(nat.lowest, want);
            EXPECT_EQ(nat.lowest, s.delta_K);
            const bool pi_n = g.family == Family::GL || g.family == Family::SP || g.family == Family::SO_EVEN;
            EXPECT_EQ(s.natural_odd, pi_n && n % 2 != 0);
            const int top = standard_top_parity(g) ^ standard_top_parity(s_algebra(g));
            EXPECT_EQ(nat.parity, (s.natural_odd ? 1 : 0) ^ top);
        }
}

TEST(Kernel, Sp2GluingShape) {
    const KernelSpec s = kernel_spec(sp(2), 1);
    EXPECT_EQ((k() + LevelScalar(2)).inverse() + (s.ell + LevelScalar(2)).inverse(), LevelScalar(2));
    EXPECT_EQ(s.h, Rational(2));
}

TEST(Kernel, WrongGluingIsDetected) {
    KernelSpec s = kernel_spec(so(5), 1);
    s.ell = gluing_partner_level(sp(4), 1, s.k);  // (1,1,2) relation in place of (1,2,1)
    EXPECT_THROW(natural_sector(s), LevelMismatch);
}

TEST(Kernel, Gl1IsLatticeTimesHeisenberg) {
    const int order2 = 16;
    const KernelChar kc = kernel_char(kernel_spec(gl(1), 1), order2);
    EXPECT_EQ(kc.series.alphabet(), (Alphabet{gl(1)}));
    std::map<int, CharTerms> want;
    for (int a = -5; a <= 5; ++a)
        for (int d2 = a * a; d2 <= order2; d2 += 2) {
            const long c = coloured_partitions((d2 - a * a) / 2, 2);
            want[d2][{a}] = (a % 2 != 0) ? ParityMult{0, c} : ParityMult{c, 0};
        }
    EXPECT_EQ(kc.series.coeffs(), want);
}

TEST(Kernel, BAndOKernelsCoincide) {
    for (int m : {1, 2}) {
        const int order2 = m == 1 ? 6 : 4;
        const KernelChar b = kernel_char(kernel_spec(so(2 * m + 1), 1), order2);
        const KernelChar o = kernel_char(kernel_spec(osp1(2 * m), 1), order2);
        EXPECT_EQ(b.conjectural, m > 1);
        EXPECT_EQ(swapped(b.series, m), o.series.coeffs());
        EXPECT_EQ(b.sectors.size(), o.sectors.size());
    }
}

TEST(Kernel, SelfDualSymmetry) {
    for (const auto& g : {sp(2), so(4), sp(4)}) {
        const KernelChar kc = kernel_char(kernel_spec(g, 1), 4);
        EXPECT_EQ(swapped(kc.series, g.rank()), kc.series.coeffs()) << g.name();
    }
}

TEST(Kernel, CertifiedBoundIsStable) {
    const KernelSpec s = kernel_spec(sp(2), 1);
    const KernelChar small = kernel_char(s, 8, 0);
    const KernelChar large = kernel_char(s, 8, small.weight_bound + 3);
    EXPECT_EQ(small.series.coeffs(), large.series.coeffs());
    const KernelChar g2 = kernel_char(kernel_spec(gl(2), 1), 6);
    const KernelChar g2l = kernel_char(kernel_spec(gl(2), 1), 6, g2.weight_bound + 2);
    EXPECT_EQ(g2.series.coeffs(), g2l.series.coeffs());
}

TEST(Kernel, Gl2LowestTerms) {
    // Vacuum at q^0; the natural sector C^2 (x) C^2-bar with charge +-1 at q^1, odd for n = 1.
    const KernelChar kc = kernel_char(kernel_spec(gl(2), 1), 2);
    EXPECT_EQ(kc.series.coeff(0), (CharTerms{{{0, 0, 0}, {1, 0}}}));
    EXPECT_TRUE(kc.series.coeff(1).empty());
    ParityMult natural{};
    for (const auto& [w, m] : kc.series.coeff(2))
        if (w[2] == 1) natural = natural + m;
    EXPECT_EQ(natural, (ParityMult{0, 4}));
}

TEST(Kernel, RejectsNonPositiveN) {
    EXPECT_THROW(kernel_char(kernel_spec(sp(2), -1), 4), std::invalid_argument);
    EXPECT_THROW(kernel_spec(sp(2), 0), std::invalid_argument);
    EXPECT_THROW(kernel_spec(sl(2), 1), std::invalid_argument);
}

TEST(Kernel, NaturalPairingNondegenerate) {
    for (const auto& g : {gl(1), gl(2), gl(3), so(3), so(4), so(5), sp(2), sp(4), osp1(2), osp1(4)})
        EXPECT_TRUE(kernel_pairing_check(g)) << g.name();
}
