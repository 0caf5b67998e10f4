#include "hookdual/superalgebra.hpp"

#include <gtest/gtest.h>

using namespace hookdual;

namespace {

const std::vector<std::string> kAlgebras = {"gl1", "gl2", "gl3", "sl2", "sl3", "sl4", "so2", "so3", "so4",
                                            "so5", "so6", "so7", "sp2", "sp4", "sp6", "osp12", "osp14"};

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Rational mat_trace(const Mat& m) {
    Rational t = 0;
    for (int i = 0; i < m.n; ++i) t += m(i, i);
    return t;
}

}  // namespace

TEST(AlgebraId, NamesAndInvariants) {
    EXPECT_EQ(AlgebraId::parse("osp14"), osp1(4));
    EXPECT_EQ(AlgebraId::parse("so5"), so(5));
    EXPECT_EQ(so(4).name(), "so4");
    EXPECT_EQ(so(5).dual_coxeter(), Rational(3));
    EXPECT_EQ(so(3).dual_coxeter(), Rational(1));
    EXPECT_EQ(so(2).dual_coxeter(), Rational(0));
    EXPECT_EQ(sp(4).dual_coxeter(), Rational(3));
    EXPECT_EQ(osp1(2).dual_coxeter(), Rational(3, 2));
    EXPECT_EQ(gl(3).dual_coxeter(), Rational(3));
    EXPECT_EQ(osp1(4).dim(), 14);
    EXPECT_EQ(osp1(4).odd_dim(), 4);
    EXPECT_THROW(AlgebraId::parse("e8"), std::invalid_argument);
    EXPECT_THROW(AlgebraId::parse("sl"), std::invalid_argument);
    EXPECT_THROW(sl(1), std::invalid_argument);
}

TEST(RootDatum, WeylOrders) {
    EXPECT_EQ(RootDatum(sl(4)).weyl_order(), factorial(4));
    EXPECT_EQ(RootDatum(gl(3)).weyl_order(), factorial(3));
    EXPECT_EQ(RootDatum(so(7)).weyl_order(), 8 * factorial(3));
    EXPECT_EQ(RootDatum(sp(6)).weyl_order(), 8 * factorial(3));
    EXPECT_EQ(RootDatum(so(8)).weyl_order(), 8 * factorial(4));
    EXPECT_EQ(RootDatum(osp1(4)).weyl_order(), 4 * factorial(2));
    EXPECT_EQ(RootDatum(so(2)).weyl_order(), 1);
}

TEST(RootDatum, RhoAndFundamentals) {
    for (const auto& name : kAlgebras) {
        RootDatum rd(AlgebraId::parse(name));
        const auto& simple = rd.simple_roots();
        for (std::size_t i = 0; i < simple.size(); ++i) {
            EXPECT_EQ(rd.inner(rd.rho(), simple[i].eps), rd.inner(simple[i].eps, simple[i].eps) / 2) << name;
            // Fundamental weights are dual to simple coroots.
            const EpsVec& a = rd.weyl_roots()[i];
            for (std::size_t j = 0; j < simple.size(); ++j) {
                Rational pairing = 2 * rd.inner(rd.fundamental()[j], a) / rd.inner(a, a);
                EXPECT_EQ(pairing, Rational(i == j ? 1 : 0)) << name;
            }
        }
        std::vector<int> c(static_cast<std::size_t>(rd.rank()));
        for (int i = 0; i < rd.rank(); ++i) c[static_cast<std::size_t>(i)] = i + 1;
        EXPECT_EQ(rd.to_fund(rd.to_eps(c)), c) << name;
    }
}

TEST(RootDatum, LongestWordMapsToAntidominant) {
    for (const auto& name : kAlgebras) {
        RootDatum rd(AlgebraId::parse(name));
        EpsVec v = rd.rho();
        for (int i : rd.longest_word()) v = rd.reflect(i, v);
        for (auto& x : v) x = -x;
        EXPECT_EQ(v, rd.rho()) << name;
    }
}

TEST(SuperBasis, StructureConstants) {
    for (const auto& name : kAlgebras) {
        AlgebraId id = AlgebraId::parse(name);
        SuperBasis b = build_algebra(id);
        EXPECT_EQ(b.dim, id.dim()) << name;
        int odd = 0;
        for (int p : b.parity) odd += p;
        EXPECT_EQ(odd, id.odd_dim()) << name;
        EXPECT_TRUE(b.super_antisymmetric()) << name;
        EXPECT_TRUE(b.super_jacobi()) << name;
        EXPECT_TRUE(b.form_invariant()) << name;
    }
}

TEST(SuperBasis, KillingIsTwiceDualCoxeterForm) {
    for (const auto& name : kAlgebras) {
        AlgebraId id = AlgebraId::parse(name);
        if (id.family == Family::GL) continue;
        SuperBasis b = build_algebra(id);
        Rational h = id.dual_coxeter();
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                ASSERT_EQ(b.killing(i, j), 2 * h * b.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) << name;
    }
}

TEST(SuperBasis, FormAgainstTraces) {
    // Long roots of sp have square length 2: the trace form.
    SuperBasis s = build_algebra(sp(4));
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j)
            EXPECT_EQ(s.form[i][j], mat_trace(s.matrices[i] * s.matrices[j]));
    SuperBasis o = build_algebra(so(7));
    for (int i = 0; i < o.dim; ++i)
        for (int j = 0; j < o.dim; ++j)
            EXPECT_EQ(o.form[i][j], mat_trace(o.matrices[i] * o.matrices[j]) / 2);
}

TEST(SuperBasis, ChevalleyTranspose) {
    for (const auto& name : kAlgebras) {
        SuperBasis b = build_algebra(AlgebraId::parse(name));
        auto t = chevalley_transpose(b);
        for (int i = 0; i < b.dim; ++i) {
            // Involution with (t a|t b) = (b|a), exchanging n+ and n-.
            SparseVec<Rational> back;
            for (const auto& [j, c] : t[i]) axpy(back, c, t[j]);
            EXPECT_EQ(back, (SparseVec<Rational>{{i, Rational(1)}})) << name;
            for (int j = 0; j < b.dim; ++j)
                EXPECT_EQ(b.form_value(t[i], t[j]), b.form[j][i]) << name;
        }
        for (std::size_t a = 0; a < b.positive.size(); ++a) {
            ASSERT_EQ(t[b.positive[a]].size(), 1u) << name;
            EXPECT_EQ(t[b.positive[a]].begin()->first, b.negative[a]) << name;
        }
        // Anti-homomorphism: t[x,y] = [t y, t x].
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j) {
                SparseVec<Rational> lhs;
                for (const auto& [l, c] : b.br(i, j)) axpy(lhs, c, t[l]);
                EXPECT_EQ(lhs, b.bracket_of(t[j], t[i])) << name << " " << i << " " << j;
            }
    }
}
