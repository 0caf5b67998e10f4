#include "hookdual/hook_walgebra.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookdual {

namespace {

Rational half(long x) { return Rational(x) / 2; }

bool is_plus(const HookLabel& l) { return l.sign == HookSign::Plus; }

// Parity of the highest weight vector in the defining module of b.
int standard_top_parity(const AlgebraId& id) { return id.family == Family::OSP ? 1 : 0; }

std::vector<int> gl_sl_part(const Weight& w) { return {w.coords.begin(), w.coords.end() - 1}; }

}  // namespace

char hook_type_char(HookType x) { return "ABCDO"[static_cast<int>(x)]; }

HookType parse_hook_type(const std::string& s) {
    static const std::string names = "ABCDO";
    if (s.size() != 1 || names.find(s[0]) == std::string::npos) throw std::invalid_argument("unknown hook type: " + s);
    return static_cast<HookType>(names.find(s[0]));
}

HookType dual_type(HookType x) {
    if (x == HookType::B) return HookType::O;
    if (x == HookType::O) return HookType::B;
    return x;
}

std::string HookLabel::name() const {
    std::ostringstream os;
    os << hook_type_char(type) << (is_plus(*this) ? '+' : '-') << '(' << n << ',' << m << ')';
    return os.str();
}

HookData hook_data(const HookLabel& l) {
    if (l.n < 1 || l.m < 1) throw std::invalid_argument("hook labels need n, m >= 1: " + l.name());
    const int n = l.n;
    const int m = l.m;
    const LevelScalar k = LevelScalar::k();
    const auto s = [](int x) { return std::to_string(x); };
    HookData d;
    if (is_plus(l)) {
        switch (l.type) {
            case HookType::A:
                d = {"sl(" + s(n + m) + ")", "tr", n + m, std::nullopt, gl(m), k + LevelScalar(n - 1), half(n + 1), false};
                if (n > 1) d.a = sl(n);
                break;
            case HookType::B:
                d = {"so(" + s(2 * (n + m + 1)) + ")", "1/2 tr", 2 * (n + m), so(2 * n + 1), so(2 * m + 1),
                     k + LevelScalar(2 * n), n + 1, false};
                break;
            case HookType::C:
                d = {"sp(" + s(2 * (n + m)) + ")", "tr", n + m + 1, sp(2 * n), sp(2 * m), k + LevelScalar(n - half(1)),
                     n + half(1), false};
                break;
            case HookType::D:
                d = {"so(" + s(2 * (n + m) + 1) + ")", "1/2 tr", 2 * (n + m) - 1, so(2 * n + 1), so(2 * m),
                     k + LevelScalar(2 * n), n + 1, false};
                break;
            case HookType::O:
                d = {"osp(1|" + s(2 * (n + m)) + ")", "-str", n + m + half(1), sp(2 * n), osp1(2 * m),
                     k + LevelScalar(n - half(1)), n + half(1), true};
                break;
        }
    } else {
        switch (l.type) {
            case HookType::A:
                d = {"sl(" + s(n + m) + "|" + s(m) + ")", "str", n, sl(n + m), gl(m), LevelScalar(1 - n - m) - k,
                     half(n + m + 1), true};
                break;
            case HookType::B:
                d = {"osp(" + s(2 * m + 1) + "|" + s(2 * (n + m)) + ")", "-str", n + half(1), sp(2 * (n + m)),
                     so(2 * m + 1), LevelScalar(1 - 2 * (n + m)) - 2 * k, n + m + half(1), true};
                break;
            case HookType::C:
                d = {"osp(" + s(2 * (n + m) + 1) + "|" + s(2 * m) + ")", "1/2 str", 2 * n - 1, so(2 * (n + m) + 1),
                     sp(2 * m), LevelScalar(-(n + m)) - k / LevelScalar(2), n + m + 1, true};
                break;
            case HookType::D:
                d = {"osp(" + s(2 * m) + "|" + s(2 * (n + m)) + ")", "-str", n + 1, sp(2 * (n + m)), so(2 * m),
                     LevelScalar(1 - 2 * (n + m)) - 2 * k, n + m + half(1), true};
                break;
            case HookType::O:
                d = {"osp(" + s(2 * (n + m) + 2) + "|" + s(2 * m) + ")", "1/2 str", 2 * n, so(2 * (n + m) + 1),
                     osp1(2 * m), LevelScalar(-(n + m)) - k / LevelScalar(2), n + m + 1, false};
                break;
        }
    }
    return d;
}

std::vector<int> shifted_exponents(const AlgebraId& a) {
    const int r = a.rank_param;
    std::vector<int> e;
    switch (a.family) {
        case Family::SL:
            for (int i = 2; i <= r; ++i) e.push_back(i);
            break;
        case Family::SO_ODD:
        case Family::SP:
            for (int i = 1; i <= r; ++i) e.push_back(2 * i);
            break;
        case Family::SO_EVEN:
            for (int i = 1; i < r; ++i) e.push_back(2 * i);
            e.push_back(r);
            break;
        default: throw std::invalid_argument("no exponent list for " + a.name());
    }
    long total = 0;
    for (int x : e) total += 2 * x - 1;
    if (total != a.dim()) throw std::logic_error("exponents of " + a.name() + " do not add up to its dimension");
    return e;
}

GeneratorSpectrum generator_spectrum(const HookLabel& label) {
    const HookData d = hook_data(label);
    const RootDatum& rd = root_datum(d.b);
    const SuperBasis& basis = algebra_basis(d.b);
    GeneratorSpectrum out;
    for (int i = 0; i < basis.dim; ++i)
        out.affine.push_back({2, rd.to_fund(basis.weight[static_cast<std::size_t>(i)]),
                              basis.parity[static_cast<std::size_t>(i)] != 0});
    if (d.a)
        for (int e : shifted_exponents(*d.a))
            out.coset.push_back({2 * e, std::vector<int>(static_cast<std::size_t>(d.b.rank()), 0), false});

    const int d2 = static_cast<int>(Rational(2 * d.delta_rho).get_num().get_si());
    const int top = standard_top_parity(d.b);
    std::vector<Weight> reps{natural_weight(d.b)};
    // C^2 of so_2 splits into charges +-1.
    const bool so2 = d.b.family == Family::SO_EVEN && d.b.rank_param == 1;
    if (label.type == HookType::A || so2) reps.push_back(dual_weight(reps.front()));
    for (const auto& rep : reps)
        for (const auto& [w, mult] : character(rep).terms()) {
            const bool ours_odd = mult.odd > 0;
            const bool odd = (ours_odd != (top != 0)) != d.primary_flipped;
            for (long c = 0; c < mult.total(); ++c) out.primary.push_back({d2, w, odd});
        }
    return out;
}

GradedSeries vacuum_char(const HookLabel& label, int order2) {
    const HookData d = hook_data(label);
    const Alphabet a{d.b};
    const GeneratorSpectrum spec = generator_spectrum(label);
    GradedSeries acc = GradedSeries::one(a, order2);
    for (const auto* block : {&spec.affine, &spec.coset, &spec.primary})
        for (const auto& g : *block)
            if (g.d2 <= order2) acc = acc * free_generator(a, g.d2, g.weight, g.odd, order2);
    return acc;
}

LevelScalar heisenberg_norm(const HookLabel& label, const LevelScalar& level) {
    if (label.type != HookType::A) throw std::invalid_argument("centre current only for type A");
    const HookData d = hook_data(label);
    const Rational n = label.n;
    const Rational m = label.m;
    if (is_plus(label)) return LevelScalar(-m) + LevelScalar(m * n / (n + m)) * (level + LevelScalar(d.h));
    return LevelScalar(m) - LevelScalar(m * (n + m) / n) * (level + LevelScalar(d.h));
}

ExponentShift b_delta(const HookLabel& label, const Weight& lambda, const LevelScalar& level) {
    const HookData d = hook_data(label);
    if (!(lambda.algebra == d.b)) throw std::invalid_argument("weight is not a weight of b");
    const LevelScalar kb = d.k_b.compose(level);
    if (label.type != HookType::A) return delta_lowest(lambda, kb);
    const int m = label.m;
    ExponentShift out;
    if (m > 1) out = delta_lowest(Weight{sl(m), gl_sl_part(lambda)}, kb);
    const long charge = lambda.coords.back();
    if (charge != 0)
        out = out + ExponentShift(LevelScalar(Rational(charge * charge)) / (2 * heisenberg_norm(label, level)));
    return out;
}

DualityPair duality_pair(HookType x, int n, int m) {
    DualityPair p;
    p.plus = {x, HookSign::Plus, n, m};
    p.minus = {dual_type(x), HookSign::Minus, n, m};
    hook_data(p.plus);
    const Rational r_table[] = {1, 1, 2, 2, 4};
    const std::pair<Rational, Rational> plus_table[] = {{1, 1}, {1, 1}, {1, half(1)}, {1, 1}, {1, half(1)}};
    const std::pair<Rational, Rational> minus_table[] = {{1, 1}, {2, 1}, {half(1), half(1)}, {2, 1}, {half(1), half(1)}};
    p.r = r_table[static_cast<int>(x)];
    // Each row is read at the type of its own W-algebra.
    p.pq_plus = plus_table[static_cast<int>(x)];
    p.pq_minus = minus_table[static_cast<int>(p.minus.type)];
    return p;
}

LevelScalar level_map(const DualityPair& pair, LevelDirection dir, const LevelScalar& level) {
    const Rational hp = hook_data(pair.plus).h;
    const Rational hm = hook_data(pair.minus).h;
    const Rational from = dir == LevelDirection::PlusToMinus ? hp : hm;
    const Rational to = dir == LevelDirection::PlusToMinus ? hm : hp;
    return (LevelScalar(pair.r) * (level + LevelScalar(from))).inverse() - LevelScalar(to);
}

std::pair<LevelScalar, LevelScalar> alpha_levels(const DualityPair& pair) {
    const HookData dp = hook_data(pair.plus);
    const HookData dm = hook_data(pair.minus);
    const LevelScalar k = LevelScalar::k();
    const auto& [pp, qp] = pair.pq_plus;
    const auto& [pm, qm] = pair.pq_minus;
    const LevelScalar alpha_p = LevelScalar(-pp) * (k + LevelScalar(dp.h)) + LevelScalar(qp - dp.b.dual_coxeter());
    const LevelScalar alpha_m = LevelScalar(pm) * (k + LevelScalar(dm.h)) - LevelScalar(qm + dm.b.dual_coxeter());
    if (dp.k_b + alpha_p != LevelScalar(-2 * dp.b.dual_coxeter()))
        throw std::logic_error("k_b + alpha_+ != -2h for " + pair.plus.name());
    if (dm.k_b + alpha_m != LevelScalar(-2 * dm.b.dual_coxeter()))
        throw std::logic_error("l_b + alpha_- != -2h for " + pair.minus.name());
    return {alpha_p, alpha_m};
}

Rational derived_b_dual_coxeter(const DualityPair& pair) {
    const HookData dp = hook_data(pair.plus);
    const auto& [pp, qp] = pair.pq_plus;
    // k_b - p(k + h) + q - h_b = -2 h_b
    const LevelScalar h = -(dp.k_b - LevelScalar(pp) * (LevelScalar::k() + LevelScalar(dp.h)) + LevelScalar(qp));
    if (!h.is_constant()) throw std::logic_error("dual Coxeter number of b depends on the level");
    return h.constant_value();
}

Branching extract_branching(const GradedSeries& w_char) {
    if (w_char.alphabet().size() != 1) throw std::invalid_argument("branching needs a single-algebra alphabet");
    if (!w_char.shift().value().is_zero()) throw std::invalid_argument("branching expects an unshifted character");
    Branching br;
    br.b = w_char.alphabet().front();
    br.order2 = w_char.order2();
    const GradedSeries tops = (w_char * eta_like_product(br.b, w_char.order2())).truncated(w_char.order2());
    for (const auto& [d2, terms] : tops.coeffs())
        for (const auto& [hw, mult] : strip_highest_weights(tops.alphabet(), terms, tops.is_super(), false)) {
            if (!in_R(Weight{br.b, hw})) throw std::domain_error("branching support outside R: " + weight_str({br.b, hw}));
            br.functions[hw][d2] = mult;
        }
    return br;
}

GradedSeries reconstruct(const Branching& br) {
    const Alphabet a{br.b};
    GradedSeries tops(a, br.order2);
    for (const auto& [hw, fn] : br.functions)
        for (const auto& [d2, mult] : fn)
            for (const auto& [w, x] : character(Weight{br.b, hw}).terms()) tops.add_term(d2, w, x * mult);
    return (tops * loop_pbw_char(br.b, br.order2)).truncated(br.order2);
}

MainTheoremReport verify_main_theorem_char(const DualityPair& pair, int order2) {
    MainTheoremReport rep;
    rep.order2 = order2;
    const HookData dp = hook_data(pair.plus);
    const HookData dm = hook_data(pair.minus);
    rep.conjectural = (pair.plus.type == HookType::B || pair.plus.type == HookType::O) && pair.plus.m > 1;

    const LevelScalar k = LevelScalar::k();
    const LevelScalar ell = level_map(pair, LevelDirection::PlusToMinus, k);
    const Branching br = extract_branching(vacuum_char(pair.plus, order2));

    // The kernel A^1[b, alpha_+] must land on the level of b inside W_{Y-}.
    const LevelScalar alpha_p = alpha_levels(pair).first;
    const LevelScalar ell_b = dm.k_b.compose(ell);
    const bool kernel_level_ok = gluing_partner_level(dp.b, 1, alpha_p) == ell_b;
    const KernelSpec kspec = kernel_spec(dp.b, 1);

    const AlgebraId sb = dm.b;
    GradedSeries tops(Alphabet{sb}, order2);
    for (const auto& [hw, fn] : br.functions) {
        const Weight lambda{dp.b, hw};
        const Weight target = pair.plus.type == HookType::A ? Weight{sb, hw} : bo_map(lambda);
        const ExponentShift s = b_delta(pair.minus, target, ell) - b_delta(pair.plus, lambda, k);
        if (!s.is_level_free()) {
            const int at = fn.begin()->first;
            if (rep.first_mismatch < 0 || at < rep.first_mismatch) {
                rep.first_mismatch = at;
                rep.detail = "level-dependent shift " + s.str() + " for " + weight_str(lambda);
            }
            continue;
        }
        const Rational shift = s.rational();
        rep.shifts.emplace_back(hw, shift);
        const Rational two_s = 2 * shift;
        if (two_s.get_den() != 1) throw std::domain_error("shift is not half-integral for " + weight_str(lambda));

        // Parity and weight of the kernel sector lambda^dagger (x) ^s lambda.
        KernelSector sector;
        const Weight ldag = dual_weight(lambda);
        if (pair.plus.type == HookType::A) {
            std::optional<Weight> sl_part;
            if (pair.plus.m > 1) sl_part = Weight{sl(pair.plus.m), gl_sl_part(ldag)};
            sector = kernel_sector(kspec, sl_part, ldag.coords.back());
        } else {
            sector = kernel_sector(kspec, ldag, 0);
        }
        if (sector.lowest != shift) throw std::logic_error("kernel sector weight disagrees with the level shift");

        const int d2s = static_cast<int>(two_s.get_num().get_si());
        for (const auto& [d2, mult] : fn) {
            if (d2 + d2s > order2) continue;
            const ParityMult m = sector.parity ? mult.flipped() : mult;
            for (const auto& [w, x] : character(target).terms()) tops.add_term(d2 + d2s, w, x * m);
        }
    }
    if (!rep.detail.empty()) return rep;
    if (!kernel_level_ok) {
        rep.detail = "kernel gluing does not reach the level of b in " + pair.minus.name();
        rep.first_mismatch = 0;
        return rep;
    }

    const GradedSeries expected = (tops * loop_pbw_char(sb, order2)).truncated(order2);
    const GradedSeries actual = vacuum_char(pair.minus, order2);
    for (int d = 0; d <= order2; ++d) {
        const CharTerms& e = expected.coeff(d);
        const CharTerms& a = actual.coeff(d);
        std::map<std::vector<int>, ParityMult> diff = e;
        for (const auto& [w, x] : a) diff[w] = diff[w] - x;
        long long res = 0;
        std::string first;
        for (const auto& [w, x] : diff) {
            res += std::llabs(x.even) + std::llabs(x.odd);
            if (first.empty() && !x.is_zero()) first = weight_str({sb, w});
        }
        rep.residual[d] = res;
        if (res != 0 && rep.first_mismatch < 0) {
            rep.first_mismatch = d;
            rep.detail = "coefficient mismatch at q^" + half_str(d) + ", weight " + first;
        }
    }
    rep.ok = rep.first_mismatch < 0;
    if (rep.ok) rep.detail = "match through q^" + half_str(order2);
    return rep;
}

// ---------------------------------------------------------------- Heisenberg change of basis

namespace {

// a + b u with u^2 = d.
struct QuadExt {
    LevelScalar a, b;
};

QuadExt qmul(const QuadExt& x, const QuadExt& y, const LevelScalar& d) {
    return {x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a};
}

// Gram pairing of two images in the orthogonal basis (Y1, Y2), each of norm `norm`.
QuadExt gram(const std::pair<QuadExt, QuadExt>& x, const std::pair<QuadExt, QuadExt>& y, const LevelScalar& norm,
             const LevelScalar& d) {
    QuadExt s1 = qmul(x.first, y.first, d);
    QuadExt s2 = qmul(x.second, y.second, d);
    return {(s1.a + s2.a) * norm, (s1.b + s2.b) * norm};
}

bool equals(const QuadExt& x, const LevelScalar& v) { return x.b.is_zero() && x.a == v; }

}  // namespace

HeisenbergReport heisenberg_rotation_check(int n, int m) {
    if (m < 1 || n < 1) throw std::invalid_argument("heisenberg_rotation_check needs n, m >= 1");
    HeisenbergReport rep;
    const DualityPair pair = duality_pair(HookType::A, n, m);
    const LevelScalar k = LevelScalar::k();
    const LevelScalar ell = level_map(pair, LevelDirection::PlusToMinus, k);
    const Rational hp = hook_data(pair.plus).h;
    const Rational hm = hook_data(pair.minus).h;
    const LevelScalar kp = heisenberg_norm(pair.plus, k);
    const LevelScalar km = heisenberg_norm(pair.minus, ell);
    const Rational nr = n;
    const Rational mr = m;
    const LevelScalar d = LevelScalar(-nr / (mr + nr)) * (k + LevelScalar(hp));  // u^2
    const QuadExt u{0, 1};
    const QuadExt u_inv{0, d.inverse()};
    const QuadExt one{1, 0};
    const auto neg = [](const QuadExt& x) { return QuadExt{-x.a, -x.b}; };

    if (d.inverse() != LevelScalar((mr + nr) / -nr) * (ell + LevelScalar(hm)))
        rep.failures.push_back("u^-2 does not match the dual radical");

    for (int sign : {1, -1}) {
        const std::string tag = sign > 0 ? "+" : "-";
        const LevelScalar norm_y = LevelScalar(sign * mr);
        // sqrt(-1) h^{+-} and h^{-+} with their images in alpha (x) 1, 1 (x) alpha.
        const LevelScalar norm_x1 = -(sign > 0 ? kp : km);
        const LevelScalar norm_x2 = sign > 0 ? km : kp;
        const std::pair<QuadExt, QuadExt> x1{one, sign > 0 ? neg(u) : u_inv};
        const std::pair<QuadExt, QuadExt> x2{neg(one), sign > 0 ? neg(u_inv) : u};
        if (!equals(gram(x1, x1, norm_y, d), norm_x1)) rep.failures.push_back(tag + ": norm of sqrt(-1) h");
        if (!equals(gram(x2, x2, norm_y, d), norm_x2)) rep.failures.push_back(tag + ": norm of h");
        if (!equals(gram(x1, x2, norm_y, d), 0)) rep.failures.push_back(tag + ": images not orthogonal");
        // pi_a (x) pi_0 -> charges (a, -a); conformal weights agree.
        const QuadExt c1 = x1.first;
        const QuadExt c2 = x2.first;
        if (!equals(c1, 1) || !equals(c2, -1)) rep.failures.push_back(tag + ": Fock charges");
        if (norm_y.inverse() != norm_x1.inverse() + norm_x2.inverse()) rep.failures.push_back(tag + ": Fock weights");
    }
    rep.ok = rep.failures.empty();
    return rep;
}

// ---------------------------------------------------------------- leading OPE coefficient

namespace {

// Modes x_(p) of four generalized free fields a1, a2, b1, b2.
struct Mode {
    int field;
    int index;
    friend bool operator<(const Mode& x, const Mode& y) {
        return x.field != y.field ? x.field < y.field : x.index < y.index;
    }
};

using Word = std::vector<Mode>;  // creation modes applied to the vacuum, leftmost last
using State = std::map<Word, LevelScalar>;

struct FreeFields {
    bool parity[4];
    int pole[4][4] = {};
    LevelScalar coeff[4][4];

    // Integer binomial with arbitrary top.
    static Rational binom(long top, int r) {
        Rational out = 1;
        for (int i = 0; i < r; ++i) out = out * Rational(top - i) / Rational(i + 1);
        return out;
    }

    LevelScalar bracket(const Mode& x, const Mode& y) const {
        const int N = pole[x.field][y.field];
        if (N == 0 || x.index + y.index != N - 2) return LevelScalar();
        return coeff[x.field][y.field] * LevelScalar(binom(x.index, N - 1));
    }

    void add(State& s, const Word& w, const LevelScalar& c) const {
        if (c.is_zero()) return;
        LevelScalar& slot = s[w];
        slot += c;
        if (slot.is_zero()) s.erase(w);
    }

    // x . w|0>
    State apply_word(const Mode& x, const Word& w, std::size_t from) const {
        State out;
        if (x.index < 0) {
            Word nw{x};
            nw.insert(nw.end(), w.begin() + static_cast<long>(from), w.end());
            out[nw] = 1;
            return out;
        }
        if (from == w.size()) return out;
        const Mode& y = w[from];
        const LevelScalar br = bracket(x, y);
        if (!br.is_zero()) {
            Word rest(w.begin() + static_cast<long>(from) + 1, w.end());
            add(out, rest, br);
        }
        const LevelScalar sign = (parity[x.field] && parity[y.field]) ? -1 : 1;
        for (const auto& [tail, c] : apply_word(x, w, from + 1)) {
            Word nw{y};
            nw.insert(nw.end(), tail.begin(), tail.end());
            add(out, nw, sign * c);
        }
        return out;
    }

    State apply(const Mode& x, const State& s) const {
        State out;
        for (const auto& [w, c] : s)
            for (const auto& [nw, d] : apply_word(x, w, 0)) add(out, nw, c * d);
        return out;
    }
};

}  // namespace

LevelScalar ope_leading_check(const FreeFieldPair& a, const FreeFieldPair& b) {
    for (int p : {a.pole, b.pole})
        if (p < 1 || p > 4) throw std::invalid_argument("mode realization covers poles 1..4");
    enum { A1, A2, B1, B2 };
    FreeFields ff;
    ff.parity[A1] = ff.parity[A2] = a.odd;
    ff.parity[B1] = ff.parity[B2] = b.odd;
    const auto pair_up = [&](int x, int y, const FreeFieldPair& p) {
        ff.pole[x][y] = ff.pole[y][x] = p.pole;
        ff.coeff[x][y] = p.coefficient;
        // y(z) x(w) ~ (-1)^{|x||y| + N} c / (z-w)^N
        const bool flip = ((p.odd ? 1 : 0) + p.pole) % 2 != 0;
        ff.coeff[y][x] = flip ? -p.coefficient : p.coefficient;
    };
    pair_up(A1, A2, a);
    pair_up(B1, B2, b);

    const State vac{{Word{}, LevelScalar(1)}};
    const State v = ff.apply({A2, -1}, ff.apply({B2, -1}, vac));
    // (a1_{(-1)} b1)_{(j)} = sum_t a1_{(-1-t)} b1_{(j+t)} + (-1)^{|a||b|} sum_t b1_{(j-1-t)} a1_{(t)}
    const int j = a.pole + b.pole - 1;
    const LevelScalar sign = (a.odd && b.odd) ? -1 : 1;
    State out;
    for (int t = 0; t <= j + 2; ++t) {
        for (const auto& [w, c] : ff.apply({A1, -1 - t}, ff.apply({B1, j + t}, v))) ff.add(out, w, c);
        for (const auto& [w, c] : ff.apply({B1, j - 1 - t}, ff.apply({A1, t}, v))) ff.add(out, w, sign * c);
    }
    for (const auto& [w, c] : out)
        if (!w.empty()) throw std::logic_error("leading OPE term is not proportional to the vacuum");
    auto it = out.find(Word{});
    return it == out.end() ? LevelScalar() : it->second;
}

}  // namespace hookdual
