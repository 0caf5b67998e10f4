#include "hookdual/semicoh.hpp"

#include <gtest/gtest.h>

using namespace hookdual;

namespace {

void add(FockVec& v, const FockState& s, const LevelScalar& c) {
    if (c.is_zero()) return;
    auto& x = v[s];
    x += c;
    if (x.is_zero()) v.erase(s);
}

// x(y v) - (-1)^{xy} y(x v) - [x,y] v and x(d v) + (-1)^{x} d(x v) over all states of a complex.
struct Violations {
    long representation = 0;
    long commutation = 0;
};

Violations check_actions(const RelativeComplex& c) {
    const auto& b = algebra_basis(c.algebra());
    Violations out;
    for (int w = 0; w <= c.max_weight(); ++w)
        for (int deg = -w; deg <= w; ++deg)
            for (const auto& st : c.states(w, deg)) {
                const FockVec v{{st, LevelScalar(1)}};
                for (int x = 0; x < b.dim; ++x) {
                    FockVec com = c.g_action(x, c.d(v));
                    for (const auto& [s, a] : c.d(c.g_action(x, v))) add(com, s, LevelScalar(b.parity[x] ? 1 : -1) * a);
                    if (!com.empty()) ++out.commutation;
                    for (int y = 0; y < b.dim; ++y) {
                        FockVec r = c.g_action(x, c.g_action(y, v));
                        const LevelScalar sign(b.parity[x] && b.parity[y] ? 1 : -1);
                        for (const auto& [s, a] : c.g_action(y, c.g_action(x, v))) add(r, s, sign * a);
                        for (const auto& [z, cz] : b.br(x, y))
                            for (const auto& [s, a] : c.g_action(z, v)) add(r, s, LevelScalar(-cz) * a);
                        if (!r.empty()) ++out.representation;
                    }
                }
            }
    return out;
}

Weight fock(int a) { return Weight{gl(1), {a}}; }

}  // namespace

TEST(ComplementLevel, FromKilling) {
    const LevelScalar k = LevelScalar::k();
    EXPECT_EQ(complement_level(gl(1)), -k);
    EXPECT_EQ(complement_level(sl(2)), -k - LevelScalar(4));
    EXPECT_EQ(complement_level(osp1(2)), -k - LevelScalar(3));
}

TEST(RelativeComplex, GhostActionAndDifferentialSl2) {
    const RelativeComplex c(Weight::fundamental(sl(2), 1), Weight::fundamental(sl(2), 1), 2);
    const Violations v = check_actions(c);
    EXPECT_EQ(v.representation, 0);
    EXPECT_EQ(v.commutation, 0);
}

TEST(RelativeComplex, GhostActionAndDifferentialOsp12) {
    const RelativeComplex c(Weight::fundamental(osp1(2), 1), Weight::fundamental(osp1(2), 1), 2, 4);
    const Violations v = check_actions(c);
    EXPECT_EQ(v.representation, 0);
    EXPECT_EQ(v.commutation, 0);
}

TEST(RelativeComplex, GradingsOfStates) {
    const RelativeComplex c(Weight::fundamental(osp1(2), 1), Weight::fundamental(osp1(2), 1), 2);
    for (int w = 0; w <= 2; ++w)
        for (int deg = -w; deg <= w; ++deg)
            for (const auto& st : c.states(w, deg)) {
                EXPECT_EQ(c.weight(st), w);
                EXPECT_EQ(c.degree(st), deg);
            }
    // Weight 0: the zero-weight states of L (x) L, one per weight of L.
    EXPECT_EQ(c.states(0, 0).size(), 3u);
    EXPECT_EQ(c.invariants(0, 0).size(), 1u);
}

TEST(Semicoh, Gl1FockPairs) {
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            const SemicohReport r = relative_semicoh(fock(a), fock(b), 3);
            EXPECT_TRUE(r.failures.empty());
            EXPECT_TRUE(r.concentrated_in_degree_zero());
            EXPECT_EQ(r.total_dim(), a + b == 0 ? 1 : 0) << a << " " << b;
        }
}

TEST(Semicoh, Sl2Cases) {
    const Weight w1 = Weight::fundamental(sl(2), 1), zero = Weight::zero(sl(2));
    const SemicohReport same = relative_semicoh(w1, w1, 3, 4);
    EXPECT_TRUE(same.failures.empty());
    EXPECT_EQ(same.total_dim(), 1);
    EXPECT_EQ(same.dim(0, 0), 1);
    ASSERT_TRUE(same.witness.has_value());
    EXPECT_TRUE(same.witness->invariant);
    EXPECT_TRUE(same.witness->closed);
    EXPECT_TRUE(same.witness->non_exact);
    EXPECT_EQ(same.witness->terms.size(), 2u);

    const SemicohReport other = relative_semicoh(w1, zero, 3, 4);
    EXPECT_TRUE(other.failures.empty());
    EXPECT_EQ(other.total_dim(), 0);
    EXPECT_FALSE(other.witness.has_value());
}

TEST(Semicoh, Osp12Fundamental) {
    const Weight w1 = Weight::fundamental(osp1(2), 1);
    const SemicohReport r = relative_semicoh(w1, w1, 3, 8);
    EXPECT_TRUE(r.failures.empty());
    EXPECT_TRUE(r.relative);
    EXPECT_TRUE(r.square_zero);
    EXPECT_EQ(r.dim(0, 0), 1);
    EXPECT_EQ(r.total_dim(), 1);
    for (int w = 1; w <= 3; ++w) {
        EXPECT_EQ(r.dim(w, 1), 0);
        EXPECT_EQ(r.dim(w, -1), 0);
    }
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->terms.size(), 3u);
    EXPECT_TRUE(r.witness->closed && r.witness->non_exact && r.witness->invariant);
}

TEST(EulerPoincare, Series) {
    const Weight w1 = Weight::fundamental(sl(2), 1);
    const auto rep = ep_check(w1, w1, 3);
    EXPECT_TRUE(rep.matches_delta);
    EXPECT_TRUE(rep.consistent);
    EXPECT_EQ(rep.ep_coeff, (std::vector<long>{1, 0, 0, 0}));
    const auto off = ep_check(w1, Weight::zero(sl(2)), 3);
    EXPECT_TRUE(off.matches_delta);
    EXPECT_EQ(off.ep_coeff, (std::vector<long>{0, 0, 0, 0}));
    const auto vac = ep_check(Weight::zero(osp1(2)), Weight::zero(osp1(2)), 2);
    EXPECT_TRUE(vac.matches_delta && vac.consistent);
}

TEST(EulerPoincare, InvariantSumsAgreeWithCharacter) {
    for (const auto& [l, m] : std::vector<std::pair<int, int>>{{1, 1}, {0, 1}, {1, 0}}) {
        const auto rep = ep_check(Weight{osp1(2), {l}}, Weight{osp1(2), {m}}, 2, 4);
        EXPECT_TRUE(rep.consistent) << l << " " << m;
        EXPECT_EQ(rep.invariant_sum, rep.ep_coeff);
        EXPECT_EQ(rep.cohomology_sum, rep.ep_coeff);
    }
}

TEST(Wedge, SuperCharacterIsPiSquared) {
    for (const auto& id : {gl(1), sl(2), osp1(2)}) EXPECT_TRUE(wedge_character_check(id, 3)) << id.name();
}

TEST(Filtration, SplitsAndE1) {
    for (const auto& id : {gl(1), sl(2), osp1(2)}) {
        const Weight l = id == gl(1) ? fock(1) : Weight::fundamental(id, 1);
        const RelativeComplex c(l, dual_weight(l), 2, 4);
        for (auto f : {Filtration::F, Filtration::G}) {
            const SplitReport r = filtration_split_check(c, f, 2);
            EXPECT_TRUE(r.preserves_filtration) << id.name();
            EXPECT_TRUE(r.split) << id.name();
            EXPECT_TRUE(r.relations) << id.name();
            EXPECT_TRUE(r.failures.empty()) << id.name();
            for (const auto& b : r.blocks) EXPECT_EQ(b.e1, b.predicted) << id.name() << " " << b.weight << " " << b.degree;
        }
    }
}

TEST(Filtration, AbelianHasNoQuadraticPiece) {
    const RelativeComplex c(fock(2), fock(-2), 3);
    for (int w = 0; w <= 3; ++w)
        for (int deg = -w; deg <= w; ++deg)
            for (const auto& st : c.states(w, deg)) {
                const FockVec v{{st, LevelScalar(1)}};
                EXPECT_TRUE(c.piece(Filtration::F, 2, v).empty());
                EXPECT_TRUE(c.piece(Filtration::G, 2, v).empty());
            }
}

TEST(InvariantDimension, Oracle) {
    // sl2: V1 (x) V1 = V2 + V0 has one invariant.
    std::map<EpsVec, long> v1v1;
    const RootDatum& rd = root_datum(sl(2));
    const FiniteChar c1 = character(Weight::fundamental(sl(2), 1));
    for (const auto& [a, ma] : c1.terms())
        for (const auto& [b, mb] : c1.terms()) {
            std::vector<int> s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            v1v1[rd.to_eps(s)] += ma.total() * mb.total();
        }
    EXPECT_EQ(invariant_dimension(sl(2), v1v1), 1);
    std::map<EpsVec, long> twice = v1v1;
    for (auto& [w, m] : twice) m *= 2;
    EXPECT_EQ(invariant_dimension(sl(2), twice), 2);
}

TEST(LoopVanishing, SingleModules) {
    for (const auto& id : {gl(1), sl(2), osp1(2)}) {
        const Weight l = id == gl(1) ? fock(2) : Weight::fundamental(id, 1);
        for (const auto& r : {loop_minus_vanishing(l, 3), loop_plus_vanishing(l, 3)}) {
            EXPECT_TRUE(r.top_in_degree_zero) << id.name();
            EXPECT_TRUE(r.degree_zero_only_top) << id.name();
            EXPECT_TRUE(r.higher_vanish) << id.name();
        }
    }
    const auto vac = loop_minus_vanishing(Weight::zero(sl(2)), 3);
    ASSERT_EQ(vac.entries.size(), 1u);
    EXPECT_EQ(vac.entries[0].dim, 1);
}

TEST(LoopVanishing, TensorModuleIsFreeOverLoopMinus) {
    for (const auto& id : {sl(2), osp1(2)}) {
        const Weight l = Weight::fundamental(id, 1);
        const auto r = loop_minus_vanishing(l, l, 2);
        EXPECT_TRUE(r.higher_vanish) << id.name();
        EXPECT_TRUE(r.top_in_degree_zero) << id.name();
    }
}

TEST(Pairing, Sl2AndOsp12ToDegreeTwo) {
    for (const auto& id : {sl(2), osp1(2)}) {
        const PairingReport r = pairing_check(Weight::fundamental(id, 1), 2, 2);
        EXPECT_TRUE(r.anti_isomorphism) << id.name();
        EXPECT_TRUE(r.contravariant) << id.name();
        EXPECT_TRUE(r.compatible) << id.name() << " " << r.failure.value_or("");
        EXPECT_TRUE(r.nondegenerate) << id.name();
        EXPECT_GT(r.pairs_checked, 0);
    }
}
