#include "hookdual/finite_reps.hpp"

#include <gtest/gtest.h>

using namespace hookdual;

namespace {

// Weyl dimension formula over the even positive roots, evaluated independently of Freudenthal.
Rational weyl_dimension(const AlgebraId& id, const std::vector<int>& coords) {
    RootDatum rd(id);
    EpsVec lam = rd.to_eps(coords);
    EpsVec rho(static_cast<std::size_t>(rd.eps_dim()), Rational(0));
    for (const auto& a : rd.positive_roots())
        if (!a.odd)
            for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += a.eps[i] / 2;
    Rational d = 1;
    for (const auto& a : rd.positive_roots()) {
        if (a.odd) continue;
        EpsVec s = lam;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += rho[i];
        d *= rd.inner(s, a.eps) / rd.inner(rho, a.eps);
    }
    return d;
}

std::vector<std::vector<int>> small_dominant(const AlgebraId& id, int bound) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < id.rank(); ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& w : out)
            for (int c = 0; c <= bound; ++c) {
                auto v = w;
                v.push_back(c);
                next.push_back(v);
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST(Weight, DualWeights) {
    EXPECT_EQ(dual_weight(Weight::fundamental(sl(3), 1)), Weight::fundamental(sl(3), 2));
    EXPECT_EQ(dual_weight(Weight::fundamental(sp(4), 2)), Weight::fundamental(sp(4), 2));
    Weight nat{gl(3), {1, 0, 1}};
    EXPECT_EQ(dual_weight(nat), (Weight{gl(3), {0, 1, -1}}));
    EXPECT_EQ(dual_weight(Weight{so(8), {0, 0, 1, 0}}), (Weight{so(8), {0, 0, 1, 0}}));
    EXPECT_EQ(dual_weight(Weight{so(6), {0, 1, 0}}), (Weight{so(6), {0, 0, 1}}));
    EXPECT_THROW(dual_weight(Weight{sl(2), {-1}}), std::invalid_argument);
    for (const char* name : {"sl3", "sl4", "gl3", "so5", "so6", "sp4", "osp14"}) {
        AlgebraId id = AlgebraId::parse(name);
        for (auto c : small_dominant(id, 2)) {
            if (id.family == Family::GL) c.back() -= 1;
            Weight w{id, c};
            EXPECT_EQ(dual_weight(dual_weight(w)), w);
            EXPECT_EQ(in_R(dual_weight(w)), in_R(w)) << weight_str(w);
        }
    }
}

TEST(Weight, LatticeR) {
    EXPECT_TRUE(in_R(Weight{gl(3), {1, 1, 0}}));
    EXPECT_FALSE(in_R(Weight{gl(3), {1, 0, 0}}));
    EXPECT_TRUE(in_R(Weight{gl(3), {1, 0, 1}}));
    EXPECT_FALSE(in_R(Weight::fundamental(so(5), 2)));
    EXPECT_TRUE(in_R(Weight{so(5), {0, 2}}));
    EXPECT_TRUE(in_R(Weight{osp1(4), {0, 1}}));
    EXPECT_FALSE(in_R(Weight{so(6), {0, 1, 0}}));
    EXPECT_TRUE(in_R(Weight{so(6), {0, 1, 1}}));
}

TEST(Weight, BoMap) {
    EXPECT_EQ(bo_map(Weight{osp1(4), {1, 3}}), (Weight{so(5), {1, 6}}));
    EXPECT_EQ(bo_map(Weight{osp1(2), {4}}), (Weight{so(3), {8}}));
    EXPECT_EQ(bo_map(Weight::fundamental(sp(4), 1)), Weight::fundamental(sp(4), 1));
    EXPECT_EQ(bo_map(bo_map(Weight{osp1(6), {1, 0, 2}})), (Weight{osp1(6), {1, 0, 2}}));
    EXPECT_THROW(bo_map(Weight::fundamental(so(5), 2)), std::invalid_argument);
}

TEST(Character, SmallCases) {
    const FiniteChar& c = character(Weight::fundamental(sl(2), 1));
    EXPECT_EQ(c.dim(), 2);
    EXPECT_EQ(c.at({1}).total(), 1);
    EXPECT_EQ(c.at({-1}).total(), 1);

    const FiniteChar& o = character(Weight::fundamental(osp1(2), 1));
    EXPECT_EQ(o.dim(), 3);
    EXPECT_EQ(o.at({1}), (ParityMult{1, 0}));
    EXPECT_EQ(o.at({0}), (ParityMult{0, 1}));
    EXPECT_EQ(o.at({-1}), (ParityMult{1, 0}));

    EXPECT_EQ(character(Weight::fundamental(so(5), 2)).dim(), 4);
    EXPECT_EQ(character(Weight{gl(1), {3}}).dim(), 1);
}

TEST(Character, WeylDimensionAndInvariance) {
    for (const char* name : {"sl2", "sl3", "sl4", "gl2", "gl3", "so3", "so5", "so6", "so7", "sp4", "sp6", "osp12", "osp14"}) {
        AlgebraId id = AlgebraId::parse(name);
        for (const auto& c : small_dominant(id, id.rank() > 2 ? 1 : 2)) {
            Weight w{id, c};
            const FiniteChar& ch = character(w);
            Weight sw = id.family == Family::OSP ? bo_map(w) : w;
            EXPECT_EQ(Rational(static_cast<long>(ch.dim())), weyl_dimension(sw.algebra, sw.coords)) << weight_str(w);
            EXPECT_TRUE(ch.is_weyl_invariant()) << weight_str(w);
            EXPECT_EQ(ch.at(c), (ParityMult{1, 0})) << weight_str(w);
        }
    }
}

TEST(Character, OspMatchesOddOrthogonal) {
    for (int m = 1; m <= 3; ++m)
        for (const auto& c : small_dominant(osp1(2 * m), m == 3 ? 1 : 2)) {
            Weight w{osp1(2 * m), c};
            const FiniteChar& a = character(w);
            const FiniteChar& b = character(bo_map(w));
            ASSERT_EQ(a.terms().size(), b.terms().size());
            for (const auto& [u, mult] : a.terms()) {
                EpsVec e = root_datum(w.algebra).to_eps(u);
                EXPECT_EQ(mult.total(), b.at(root_datum(b.algebra()).to_fund(e)).total());
            }
        }
}

TEST(TensorDecompose, ClebschGordanAndFriends) {
    auto sl2 = tensor_decompose(Weight::fundamental(sl(2), 1), Weight::fundamental(sl(2), 1));
    EXPECT_EQ(sl2.size(), 2u);
    EXPECT_EQ(sl2.at({0}).total(), 1);
    EXPECT_EQ(sl2.at({2}).total(), 1);

    auto sl3 = tensor_decompose(Weight::fundamental(sl(3), 1), Weight::fundamental(sl(3), 1));
    EXPECT_EQ(sl3.size(), 2u);
    EXPECT_EQ(sl3.at({2, 0}).total(), 1);
    EXPECT_EQ(sl3.at({0, 1}).total(), 1);

    // osp(1|4) and so5 branch alike on the natural representation.
    Weight o = Weight::fundamental(osp1(4), 1);
    auto lhs = tensor_decompose(o, o);
    auto rhs = tensor_decompose(bo_map(o), bo_map(o));
    ASSERT_EQ(lhs.size(), rhs.size());
    for (const auto& [w, m] : lhs) {
        Weight sw = bo_map(Weight{osp1(4), w});
        EXPECT_EQ(m.total(), rhs.at(sw.coords).total());
    }
}

TEST(TensorDecompose, DimensionsAndTrivialPart) {
    for (const char* name : {"sl3", "gl2", "so5", "sp4", "osp12", "osp14"}) {
        AlgebraId id = AlgebraId::parse(name);
        auto ws = small_dominant(id, 1);
        for (auto a : ws)
            for (auto b : ws) {
                if (id.family == Family::GL) {
                    a.back() = 1;
                    b.back() = -1;
                }
                Weight wa{id, a}, wb{id, b};
                auto dec = tensor_decompose(wa, wb);
                auto dec2 = tensor_decompose(wb, wa);
                long long total = 0;
                for (const auto& [w, m] : dec) {
                    total += m.total() * character(Weight{id, w}).dim();
                    EXPECT_EQ(m.total(), dec2.at(w).total());
                }
                EXPECT_EQ(total, character(wa).dim() * character(wb).dim());
                int expect = dual_weight(wb) == wa ? 1 : 0;
                auto t = trivial_multiplicity(wa, wb);
                EXPECT_EQ(t.multiplicity, expect) << weight_str(wa) << " " << weight_str(wb);
                EXPECT_EQ(t.witness.has_value(), expect == 1);
            }
    }
    EXPECT_EQ(trivial_multiplicity(Weight::fundamental(sl(3), 1), Weight::fundamental(sl(3), 2)).multiplicity, 1);
    EXPECT_EQ(trivial_multiplicity(Weight::fundamental(sl(3), 1), Weight::fundamental(sl(3), 1)).multiplicity, 0);
    EXPECT_EQ(trivial_multiplicity(Weight::fundamental(osp1(2), 1), Weight::fundamental(osp1(2), 1)).multiplicity, 1);
}

TEST(FiniteModule, ExplicitModulesMatchCharacters) {
    struct Case {
        const char* algebra;
        std::vector<int> coords;
    };
    for (const auto& c : std::vector<Case>{{"sl2", {0}}, {"sl2", {1}}, {"sl2", {3}}, {"sl3", {1, 1}}, {"gl1", {-2}},
                                           {"gl2", {1, 1}}, {"so3", {2}}, {"sp2", {2}}, {"sp4", {0, 1}}, {"so5", {1, 0}},
                                           {"osp12", {1}}, {"osp12", {2}}, {"osp14", {1, 0}}, {"so2", {3}}}) {
        Weight w{AlgebraId::parse(c.algebra), c.coords};
        FiniteModule m = FiniteModule::irreducible(w);
        EXPECT_TRUE(m.is_representation()) << weight_str(w);
        EXPECT_EQ(m.character(), character(w)) << weight_str(w);
        EXPECT_EQ(m.parity[0], 0);
    }
    EXPECT_TRUE(FiniteModule::trivial(osp1(2)).is_representation());
    EXPECT_THROW(FiniteModule::irreducible(Weight::fundamental(so(5), 2)), std::invalid_argument);
}
