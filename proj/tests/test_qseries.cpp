#include "hookdual/qseries.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hookdual;

namespace {

// Partition numbers by the plain recursion over largest part.
std::vector<long long> partitions(int n) {
    std::vector<long long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    return p;
}

long long weight_zero(const GradedSeries& s, int d2) {
    const CharTerms& t = s.coeff(d2);
    auto it = t.find(std::vector<int>(static_cast<std::size_t>(alphabet_width(s.alphabet())), 0));
    return it == t.end() ? 0 : it->second.total();
}

GradedSeries random_series(std::mt19937& rng, const Alphabet& a, int order2) {
    std::uniform_int_distribution<int> coef(-3, 3), wt(-2, 2);
    GradedSeries s = GradedSeries::one(a, order2);
    for (int d = 1; d <= order2; ++d)
        for (int k = 0; k < 3; ++k) s.add_term(d, {wt(rng)}, {coef(rng), coef(rng)});
    return s;
}

}  // namespace

TEST(ExponentShift, LevelParts) {
    ExponentShift a = ExponentShift::level_term(Rational(3, 4), 2);
    ExponentShift b = ExponentShift::level_term(Rational(3, 4), 2) + Rational(1);
    EXPECT_TRUE((b - a).is_level_free());
    EXPECT_TRUE(a < b);
    EXPECT_THROW((void)(a < ExponentShift(Rational(1))), LevelMismatch);
    EXPECT_EQ(b.rational_part(), Rational(1));
    EXPECT_THROW(a.rational(), LevelMismatch);
}

TEST(GradedSeries, ProductOfConjugates) {
    Alphabet a{sl(2)};
    GradedSeries chi = GradedSeries::from_char(a, 0, character(Weight::fundamental(sl(2), 1)), 8).q_power(2).truncated(8);
    GradedSeries one = GradedSeries::one(a, 8);
    GradedSeries lhs = (one + chi) * (one - chi);
    GradedSeries rhs = one - chi * chi;
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(one * chi, chi);
    EXPECT_EQ(lhs.coeff(4).at({0}).total(), -2);
    EXPECT_THROW(lhs.coeff(9), std::out_of_range);
}

TEST(GradedSeries, HeisenbergSquared) {
    Alphabet a{gl(1)};
    GradedSeries h = loop_pbw_char(gl(1), 20);
    GradedSeries h2 = h * h;
    auto p = partitions(10);
    for (int n = 0; n <= 10; ++n) {
        long long expect = 0;
        for (int j = 0; j <= n; ++j) expect += p[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(n - j)];
        EXPECT_EQ(weight_zero(h2, 2 * n), expect);
        EXPECT_EQ(weight_zero(h, 2 * n), p[static_cast<std::size_t>(n)]);
        if (n < 10) EXPECT_TRUE(h2.coeff(2 * n + 1).empty());
    }
}

TEST(GradedSeries, EulerProduct) {
    GradedSeries pi = eta_like_product(gl(1), 60);
    std::map<int, long long> pent;
    for (int j = -6; j <= 6; ++j) pent[j * (3 * j - 1) / 2] += (j % 2 == 0) ? 1 : -1;
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(weight_zero(pi, 2 * n), pent.count(n) ? pent[n] : 0) << n;
}

TEST(GradedSeries, Sl2PiToThirdOrder) {
    // Direct expansion of prod_n (1-q^n)(1-z^2 q^n)(1-z^-2 q^n) with plain maps.
    std::map<std::pair<int, int>, long long> poly{{{0, 0}, 1}};
    for (int n = 1; n <= 3; ++n)
        for (int w : {0, 2, -2}) {
            std::map<std::pair<int, int>, long long> next;
            for (const auto& [k, c] : poly) {
                next[k] += c;
                if (k.first + n <= 3) next[{k.first + n, k.second + w}] -= c;
            }
            poly = next;
        }
    GradedSeries pi = eta_like_product(sl(2), 6);
    for (int n = 0; n <= 3; ++n)
        for (int w = -12; w <= 12; ++w) {
            auto it = poly.find({n, w});
            long long expect = it == poly.end() ? 0 : it->second;
            auto jt = pi.coeff(2 * n).find({w});
            long long got = jt == pi.coeff(2 * n).end() ? 0 : jt->second.total();
            EXPECT_EQ(got, expect) << n << " " << w;
        }
}

TEST(GradedSeries, OspWedgeAtFirstOrder) {
    // Weight-one wedge monomials: one phi and one phi* per basis element, parity flipped.
    const SuperBasis& b = algebra_basis(osp1(2));
    const RootDatum& rd = root_datum(osp1(2));
    CharTerms expect;
    for (int i = 0; i < b.dim; ++i) {
        auto w = rd.to_fund(b.weight[static_cast<std::size_t>(i)]);
        std::vector<int> neg = w;
        for (auto& x : neg) x = -x;
        long long s = b.parity[static_cast<std::size_t>(i)] ? 1 : -1;
        for (const auto& v : {w, neg}) expect[v].even += s;
    }
    GradedSeries pi = eta_like_product(osp1(2), 4).supercharacter();
    GradedSeries wedge = pi * pi;
    CharTerms got = wedge.coeff(2);
    for (auto it = expect.begin(); it != expect.end();) it = it->second.is_zero() ? expect.erase(it) : std::next(it);
    EXPECT_EQ(got, expect);
    // Parity refinement survives: the odd roots contribute odd terms in 1/Pi.
    GradedSeries pbw = loop_pbw_char(osp1(2), 2);
    EXPECT_EQ(pbw.coeff(2).at({1}), (ParityMult{0, 1}));
    EXPECT_EQ(pbw.coeff(2).at({2}), (ParityMult{1, 0}));
}

TEST(GradedSeries, RingLaws) {
    std::mt19937 rng(7);
    Alphabet a{sl(2)};
    for (int trial = 0; trial < 10; ++trial) {
        const int order = 1 + static_cast<int>(rng() % 12);
        GradedSeries x = random_series(rng, a, order), y = random_series(rng, a, order), z = random_series(rng, a, order);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x * x.inverse(), GradedSeries::one(a, order));
    }
}

TEST(GradedSeries, InvariantPart) {
    Alphabet a{sl(2)};
    GradedSeries three = GradedSeries::monomial(a, 0, {0}, {3, 0}, 4);
    EXPECT_EQ(invariant_part(three).coeff(0).at({}), (ParityMult{3, 0}));
    GradedSeries chi = GradedSeries::from_char(a, 0, character(Weight::fundamental(sl(2), 1)), 4);
    EXPECT_EQ(invariant_part(chi * chi).coeff(0).at({}), (ParityMult{1, 0}));
    GradedSeries bad = GradedSeries::monomial(a, 0, {1}, {1, 0}, 4);
    EXPECT_THROW(invariant_part(bad), std::domain_error);
    // Signed counts for supercharacters of osp(1|2).
    Alphabet o{osp1(2)};
    GradedSeries c = GradedSeries::from_char(o, 0, character(Weight::fundamental(osp1(2), 1)), 2).supercharacter();
    EXPECT_EQ(invariant_part(c * c).coeff(0).at({}).even, 1);
}

TEST(GradedSeries, JsonShape) {
    GradedSeries s = loop_pbw_char(sl(2), 2).with_shift(ExponentShift::level_term(Rational(3, 4), 2));
    auto j = to_json(s);
    EXPECT_EQ(j["truncation"], "1");
    EXPECT_EQ(j["shift"]["num"], nlohmann::json::array({"3/4"}));
    EXPECT_EQ(j["shift"]["den"], nlohmann::json::array({"2/1", "1/1"}));
    EXPECT_EQ(j["coefficients"][1]["exponent"], "1");
}
