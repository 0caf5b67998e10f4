#include "hookdual/affine_chars.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace hookdual {

namespace {

Rational casimir(const Weight& lambda) {
    const RootDatum& rd = root_datum(lambda.algebra);
    EpsVec e = lambda.eps();
    EpsVec shifted = e;
    for (std::size_t i = 0; i < e.size(); ++i) shifted[i] += 2 * rd.rho()[i];
    return rd.inner(e, shifted);
}

Rational eps_sum(const Weight& lambda) {
    Rational s = 0;
    for (const auto& x : lambda.eps()) s += x;
    return s;
}

int mod2(const Rational& r) {
    if (r.get_den() != 1) throw std::domain_error("parity of a non-integral weight");
    return mpz_odd_p(r.get_num().get_mpz_t()) ? 1 : 0;
}

int floor_mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

// P/Q class of an sl_m weight.
long sl_class(const Weight& lambda) {
    long s = 0;
    for (std::size_t i = 0; i < lambda.coords.size(); ++i) s += static_cast<long>(i + 1) * lambda.coords[i];
    return s;
}

// All dominant weights with sum |c_i| <= bound (abelian coordinates take both signs).
std::vector<Weight> dominant_weights(const AlgebraId& id, int bound, bool exact) {
    const RootDatum& rd = root_datum(id);
    std::vector<Weight> out;
    std::vector<int> c(static_cast<std::size_t>(id.rank()), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == c.size()) {
            if ((!exact || left == 0) && rd.is_dominant(c)) out.push_back({id, c});
            return;
        }
        for (int v = -left; v <= left; ++v) {
            c[i] = v;
            rec(i + 1, left - std::abs(v));
        }
        c[i] = 0;
    };
    rec(0, bound);
    return out;
}

Alphabet kernel_alphabet(const KernelSpec& spec) {
    if (spec.algebra.family == Family::GL) {
        if (auto s = spec.sector_algebra()) return {*s, *s, gl(1)};
        return {gl(1)};
    }
    return {spec.algebra, spec.partner()};
}

// Level-free lower bound for the sector of lambda (lattice part excluded).
Rational sector_floor(const KernelSpec& spec, const Weight& lambda) {
    return spec.a * spec.c * spec.n * casimir(lambda) / 2;
}

}  // namespace

ExponentShift delta_lowest(const Weight& lambda, const LevelScalar& level) {
    if (!lambda.is_dominant()) throw std::invalid_argument("delta_lowest needs a dominant weight: " + weight_str(lambda));
    const AlgebraId& id = lambda.algebra;
    const Rational c = casimir(lambda);
    if (id.family == Family::GL) {
        const Rational m = id.rank_param;
        const Rational s = eps_sum(lambda);
        const Rational centre = s * s / m;
        LevelScalar out = LevelScalar(centre) / (2 * level);
        if (c != centre) out += LevelScalar(c - centre) / (2 * (level + LevelScalar(m)));
        return ExponentShift(out);
    }
    if (c == 0) return {};
    return ExponentShift(LevelScalar(c) / (2 * (level + LevelScalar(id.dual_coxeter()))));
}

GradedSeries weyl_module_char(const Weight& lambda, const LevelScalar& level, int order2) {
    const Alphabet a{lambda.algebra};
    GradedSeries top = GradedSeries::from_char(a, 0, character(lambda), order2);
    return (top * loop_pbw_char(lambda.algebra, order2)).with_shift(delta_lowest(lambda, level));
}

Weight natural_weight(const AlgebraId& id) {
    EpsVec e(static_cast<std::size_t>(root_datum(id).eps_dim()), 0);
    e[0] = 1;
    return Weight::from_eps(id, e);
}

std::optional<AlgebraId> KernelSpec::sector_algebra() const {
    if (algebra.family != Family::GL) return algebra;
    if (algebra.rank_param == 1) return std::nullopt;
    return sl(algebra.rank_param);
}

LevelScalar KernelSpec::gluing_residual() const {
    return (LevelScalar(a) * (k + LevelScalar(h))).inverse() + (LevelScalar(b) * (ell + LevelScalar(h_partner))).inverse() -
           LevelScalar(c * n);
}

namespace {

struct Gluing {
    Rational a, b, c, h, h_partner;
};

Gluing gluing_data(const AlgebraId& g) {
    const Rational m = g.rank_param;
    const Rational h = g.dual_coxeter();
    const Rational hp = s_algebra(g).dual_coxeter();
    switch (g.family) {
        case Family::GL: return {1, 1, 1, m, m};
        case Family::SO_ODD: return {1, 2, 1, h, hp};
        case Family::SP: return {1, 1, 2, h, hp};
        case Family::SO_EVEN: return {1, 1, 1, h, hp};
        case Family::OSP: return {2, 1, 1, h, hp};
        case Family::SL: break;
    }
    throw std::invalid_argument("no kernel algebra for " + g.name() + "; use gl");
}

}  // namespace

LevelScalar gluing_partner_level(const AlgebraId& g, int n, const LevelScalar& k) {
    const Gluing d = gluing_data(g);
    const LevelScalar rest = LevelScalar(d.c * n) - (LevelScalar(d.a) * (k + LevelScalar(d.h))).inverse();
    return (LevelScalar(d.b) * rest).inverse() - LevelScalar(d.h_partner);
}

KernelSpec kernel_spec(const AlgebraId& g, int n) {
    if (n == 0) throw std::invalid_argument("kernel_spec needs n != 0");
    const Gluing d = gluing_data(g);
    KernelSpec s;
    s.algebra = g;
    s.n = n;
    s.a = d.a;
    s.b = d.b;
    s.c = d.c;
    s.h = d.h;
    s.h_partner = d.h_partner;
    s.ell = gluing_partner_level(g, n, s.k);
    const Rational m = g.rank_param;
    switch (g.family) {
        case Family::GL: s.delta_K = n * m / 2; break;
        case Family::SP: s.delta_K = n * (m + Rational(1, 2)); break;
        case Family::SO_EVEN: s.delta_K = n * (m - Rational(1, 2)); break;
        default: s.delta_K = n * m; break;
    }
    const bool flips = g.family == Family::GL || g.family == Family::SP || g.family == Family::SO_EVEN;
    s.natural_odd = flips && (n % 2 != 0);
    return s;
}

KernelSector kernel_sector(const KernelSpec& spec, const std::optional<Weight>& lambda, int lattice_charge) {
    KernelSector out;
    out.lambda = lambda;
    out.lattice_charge = lattice_charge;
    ExponentShift total;
    if (spec.algebra.family == Family::GL) {
        const long nm = static_cast<long>(spec.n) * spec.algebra.rank_param;
        const long cls = lambda ? sl_class(*lambda) : 0;
        if (floor_mod(lattice_charge - spec.n * cls, nm) != 0)
            throw std::invalid_argument("lattice charge outside the sector class");
        if (lambda) {
            out.partner = dual_weight(*lambda);
            total = delta_lowest(*lambda, spec.k) + delta_lowest(*out.partner, spec.ell);
        }
        total = total + ExponentShift(Rational(static_cast<long>(lattice_charge) * lattice_charge) / Rational(2 * nm));
        out.parity = floor_mod(lattice_charge, 2);
    } else {
        if (!lambda || !(lambda->algebra == spec.algebra)) throw std::invalid_argument("sector weight of the wrong algebra");
        if (!in_R(*lambda)) throw std::invalid_argument("weight not in R: " + weight_str(*lambda));
        out.partner = bo_map(dual_weight(*lambda));
        total = delta_lowest(*lambda, spec.k) + delta_lowest(*out.partner, spec.ell);
        switch (spec.algebra.family) {
            case Family::SO_ODD: out.parity = mod2(eps_sum(*out.partner)); break;
            case Family::OSP: out.parity = mod2(eps_sum(*lambda)); break;
            default: out.parity = (spec.n % 2 != 0) ? mod2(eps_sum(*lambda)) : 0; break;
        }
    }
    if (!total.is_level_free())
        throw LevelMismatch("sector " + (lambda ? weight_str(*lambda) : std::string("0")) + " has level-dependent weight " +
                            total.str());
    out.lowest = total.rational();
    if (Rational(2 * out.lowest).get_den() != 1) throw std::domain_error("sector weight is not half-integral");
    return out;
}

KernelSector natural_sector(const KernelSpec& spec) {
    if (spec.algebra.family == Family::GL) {
        std::optional<Weight> lam;
        if (auto s = spec.sector_algebra()) lam = Weight::fundamental(*s, 1);
        return kernel_sector(spec, lam, spec.n);
    }
    return kernel_sector(spec, natural_weight(spec.algebra), 0);
}

KernelChar kernel_char(const KernelSpec& spec, int order2, int weight_bound) {
    if (spec.n < 1) throw std::invalid_argument("kernel_char needs n >= 1");
    if (order2 < 0) throw std::invalid_argument("negative truncation");
    KernelChar out;
    out.spec = spec;
    out.conjectural = (spec.algebra.family == Family::SO_ODD || spec.algebra.family == Family::OSP) &&
                      spec.algebra.rank_param > 1;
    const Rational top = Rational(order2, 2);
    const std::optional<AlgebraId> sector_alg = spec.sector_algebra();

    // Enlarge the bound until every weight just outside it starts above the truncation.
    int bound = std::max(weight_bound, 0);
    if (sector_alg) {
        for (;;) {
            bool certified = true;
            for (const auto& w : dominant_weights(*sector_alg, bound + 1, true))
                if (sector_floor(spec, w) <= top) certified = false;
            if (certified) break;
            ++bound;
        }
    }
    out.weight_bound = bound;

    const Alphabet alpha = kernel_alphabet(spec);
    GradedSeries tops(alpha, order2);
    auto add_sector = [&](const KernelSector& sec) {
        const int d2 = static_cast<int>(Rational(2 * sec.lowest).get_num().get_si());
        if (d2 > order2) return;
        out.sectors.push_back(sec);
        const auto flip = [&](ParityMult p) { return sec.parity ? p.flipped() : p; };
        if (!sec.lambda) {
            tops.add_term(d2, {sec.lattice_charge}, flip({1, 0}));
            return;
        }
        for (const auto& [u, x] : character(*sec.lambda).terms())
            for (const auto& [v, y] : character(*sec.partner).terms()) {
                std::vector<int> w = u;
                w.insert(w.end(), v.begin(), v.end());
                if (spec.algebra.family == Family::GL) w.push_back(sec.lattice_charge);
                tops.add_term(d2, w, flip(x * y));
            }
    };

    if (spec.algebra.family == Family::GL) {
        const long nm = static_cast<long>(spec.n) * spec.algebra.rank_param;
        std::vector<std::optional<Weight>> lams;
        if (sector_alg) {
            for (auto& w : dominant_weights(*sector_alg, bound, false)) lams.emplace_back(std::move(w));
        } else {
            lams.emplace_back(std::nullopt);
        }
        for (const auto& lam : lams) {
            const Rational floor = lam ? sector_floor(spec, *lam) : Rational(0);
            if (floor > top) continue;
            // j^2 / 2nm <= top - floor
            const Rational room = (top - floor) * 2 * nm;
            const long base = floor_mod(spec.n * (lam ? sl_class(*lam) : 0), nm);
            const long reach = static_cast<long>(std::sqrt(room.get_d())) / nm + 2;
            for (long t = -reach; t <= reach; ++t) {
                const long j = base + t * nm;
                if (Rational(j * j) > room) continue;
                add_sector(kernel_sector(spec, lam, static_cast<int>(j)));
            }
        }
    } else {
        for (const auto& w : dominant_weights(spec.algebra, bound, false))
            if (in_R(w)) add_sector(kernel_sector(spec, w, 0));
    }

    GradedSeries vac;
    if (spec.algebra.family == Family::GL) {
        const Alphabet lat{gl(1)};
        GradedSeries bosons = free_generator(lat, 2, {0}, false, order2) * free_generator(lat, 2, {0}, false, order2);
        if (sector_alg) {
            const AlgebraId s = *sector_alg;
            vac = loop_pbw_char(s, order2).external(loop_pbw_char(s, order2)).external(bosons);
        } else {
            vac = bosons;
        }
    } else {
        vac = loop_pbw_char(spec.algebra, order2).external(loop_pbw_char(spec.partner(), order2));
    }
    out.series = (tops * vac).truncated(order2);
    return out;
}

bool kernel_pairing_check(const AlgebraId& g) {
    // The centre of gl_m acts by opposite charges on rho and rho^dagger, so only sl_m matters.
    const AlgebraId base = (g.family == Family::GL && g.rank_param > 1) ? sl(g.rank_param) : g;
    std::vector<AlgebraId> sides{base};
    if (!(s_algebra(base) == base)) sides.push_back(s_algebra(base));
    for (const auto& id : sides) {
        const Weight nat = natural_weight(id);
        const FiniteModule rho = FiniteModule::irreducible(nat);
        const FiniteModule dual = FiniteModule::irreducible(dual_weight(nat));
        const auto inv = invariant_tensors(rho, dual);
        if (inv.size() != 1) return false;
        std::vector<SparseVec<Rational>> rows(static_cast<std::size_t>(rho.dim));
        for (const auto& [idx, c] : inv.front()) rows[static_cast<std::size_t>(idx / dual.dim)][idx % dual.dim] = c;
        if (rho.dim != dual.dim || rank_of(rows) != static_cast<std::size_t>(rho.dim)) return false;
    }
    return true;
}

}  // namespace hookdual
