#include "hookdual/semicoh.hpp"

#include "hookdual/affine_chars.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace hookdual {

namespace {

template <class Fn>
void parallel_for(std::size_t n, int threads, Fn fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    for (std::size_t t = 0; t < count; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

EpsVec eps_add(EpsVec a, const EpsVec& b, int sign) {
    if (a.empty()) a.assign(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
    return a;
}

bool is_zero_eps(const EpsVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

void add_to(FockVec& v, const FockState& s, const LevelScalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(s);
    if (it == v.end()) {
        v.emplace(s, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

void add_to(FockVec& v, const FockVec& w, const LevelScalar& c = LevelScalar(1)) {
    for (const auto& [s, x] : w) add_to(v, s, c * x);
}

struct GhostGen {
    int code;
    int weight;
    int degree;
    int parity;
    EpsVec gweight;
};

// Ghost generators of the relative wedge, in code order.
std::vector<GhostGen> relative_ghosts(const AlgebraId& id, int max_weight) {
    const SuperBasis& b = algebra_basis(id);
    std::vector<GhostGen> out;
    for (int n = 1; n <= max_weight; ++n)
        for (int i = 0; i < b.dim; ++i)
            for (int star = 1; star >= 0; --star) {
                GhostGen g;
                g.code = 2 * (n * b.dim + i) + (star ? 0 : 1);
                g.weight = n;
                g.degree = star ? 1 : -1;
                g.parity = (b.parity[static_cast<std::size_t>(i)] + 1) % 2;
                g.gweight = eps_add({}, b.weight[static_cast<std::size_t>(i)], star ? -1 : 1);
                out.push_back(std::move(g));
            }
    return out;
}

struct GhostMono {
    Monomial mono;
    int weight = 0;
    int degree = 0;
    int parity = 0;
    EpsVec gweight;
};

std::vector<GhostMono> ghost_monomials(const AlgebraId& id, int max_weight) {
    const auto gens = relative_ghosts(id, max_weight);
    const EpsVec zero(static_cast<std::size_t>(root_datum(id).eps_dim()), Rational(0));
    std::vector<GhostMono> out;
    GhostMono cur;
    cur.gweight = zero;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        out.push_back(cur);
        for (std::size_t g = start; g < gens.size(); ++g) {
            const GhostGen& gen = gens[g];
            if (cur.weight + gen.weight > max_weight) continue;
            GhostMono saved = cur;
            cur.mono.push_back(gen.code);
            cur.weight += gen.weight;
            cur.degree += gen.degree;
            cur.parity = (cur.parity + gen.parity) % 2;
            cur.gweight = eps_add(cur.gweight, gen.gweight, 1);
            rec(gen.parity ? g + 1 : g);
            cur = std::move(saved);
        }
    };
    rec(0);
    return out;
}

int sign_of(int parity) { return parity % 2 ? -1 : 1; }

}  // namespace

LevelScalar complement_level(const AlgebraId& id, const LevelScalar& k) {
    const SuperBasis& b = algebra_basis(id);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            const Rational& f = b.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (f == 0) continue;
            const Rational h = b.killing(i, j) / (2 * f);
            return -k - LevelScalar(Rational(2 * h));
        }
    throw std::logic_error("degenerate invariant form");
}

// ---------------------------------------------------------------- RelativeComplex

RelativeComplex::RelativeComplex(const Weight& lambda, const Weight& mu, int max_weight, int threads)
    : module_(WeylModule(lambda, LevelScalar::k(), max_weight),
              WeylModule(mu, complement_level(lambda.algebra), max_weight), max_weight),
      ell_(complement_level(lambda.algebra)),
      max_weight_(max_weight),
      dim_(algebra_basis(lambda.algebra).dim),
      parity_(algebra_basis(lambda.algebra).parity) {
    if (!(lambda.algebra == mu.algebra)) throw std::invalid_argument("weights of different algebras");
    const SuperBasis& b = algebra_basis(algebra());
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (const auto& [z, c] : b.br(i, j)) structure_.emplace_back(i, j, z, c);

    const int N = max_weight_;
    act_.resize(static_cast<std::size_t>((2 * N + 1) * dim_));
    for (int n = -N; n <= N; ++n)
        for (int a = 0; a < dim_; ++a) {
            auto& col = act_[static_cast<std::size_t>((n + N) * dim_ + a)];
            col.reserve(static_cast<std::size_t>(module_.size()));
            for (int s = 0; s < module_.size(); ++s) col.push_back(module_.act(a, n, s));
        }

    // Zero g-weight states per (weight, degree).
    std::map<int, std::vector<int>> by_grade;
    for (int s = 0; s < module_.size(); ++s) by_grade[module_.grade(s)].push_back(s);
    for (int w = 0; w <= N; ++w)
        for (int d = -w; d <= w; ++d) states_[{w, d}];
    for (const auto& g : ghost_monomials(algebra(), N))
        for (int mg = 0; mg + g.weight <= N; ++mg)
            for (int s : by_grade[mg])
                if (is_zero_eps(eps_add(g.gweight, module_.gweight(s), 1)))
                    states_[{mg + g.weight, g.degree}].emplace_back(s, g.mono);

    // Invariants: kernel of the positive root vectors on each block of fixed (module grade, phi, phi*) weights.
    std::vector<std::pair<int, int>> keys;
    for (auto& [key, v] : states_) {
        keys.push_back(key);
        invariants_[key];
    }
    parallel_for(keys.size(), threads, [&](std::size_t t) {
        const auto& st = states_.at(keys[t]);
        std::map<std::tuple<int, int, int>, std::vector<int>> fine;
        for (std::size_t j = 0; j < st.size(); ++j) {
            int phi = 0, star = 0;
            for (int c : st[j].second) (c % 2 ? phi : star) += (c / 2) / dim_;
            fine[{module_.grade(st[j].first), phi, star}].push_back(static_cast<int>(j));
        }
        auto& out = invariants_.at(keys[t]);
        for (const auto& [fk, members] : fine) {
            std::map<FockState, int> target;
            std::vector<SparseVec<Rational>> images;
            for (int j : members) {
                SparseVec<Rational> img;
                const FockVec one{{st[static_cast<std::size_t>(j)], LevelScalar(1)}};
                for (std::size_t p = 0; p < b.positive.size(); ++p)
                    for (const auto& [s2, c] : g_action(b.positive[p], one)) {
                        auto [it, fresh] = target.emplace(s2, static_cast<int>(target.size()));
                        img.emplace(it->second * static_cast<int>(b.positive.size()) + static_cast<int>(p), c.constant_value());
                    }
                images.push_back(std::move(img));
            }
            for (const auto& kv : kernel_of(images)) {
                SparseVec<Rational> v;
                for (const auto& [local, c] : kv) v.emplace(members[static_cast<std::size_t>(local)], c);
                out.push_back(std::move(v));
            }
        }
    });
}

const std::vector<FockState>& RelativeComplex::states(int weight, int degree) const {
    static const std::vector<FockState> none;
    auto it = states_.find({weight, degree});
    return it == states_.end() ? none : it->second;
}

const std::vector<SparseVec<Rational>>& RelativeComplex::invariants(int weight, int degree) const {
    static const std::vector<SparseVec<Rational>> none;
    auto it = invariants_.find({weight, degree});
    return it == invariants_.end() ? none : it->second;
}

FockVec RelativeComplex::embed(int weight, int degree, const SparseVec<Rational>& v) const {
    const auto& st = states(weight, degree);
    FockVec out;
    for (const auto& [j, c] : v) add_to(out, st[static_cast<std::size_t>(j)], LevelScalar(c));
    return out;
}

int RelativeComplex::weight(const FockState& s) const {
    int w = module_.grade(s.first);
    for (int c : s.second) w += (c / 2) / dim_;
    return w;
}

int RelativeComplex::degree(const FockState& s) const {
    int d = 0;
    for (int c : s.second) d += c % 2 ? -1 : 1;
    return d;
}

int RelativeComplex::parity(const FockState& s) const {
    int p = module_.parity(s.first);
    for (int c : s.second) p += ghost_parity(c);
    return p % 2;
}

int RelativeComplex::delta(const FockState& s, Filtration f) const {
    int phi = 0, star = 0;
    for (int c : s.second) (c % 2 ? phi : star) += (c / 2) / dim_;
    const int m = module_.grade(s.first);
    return f == Filtration::F ? -m + phi - star : -m - phi + star;
}

std::string RelativeComplex::label(const FockState& s) const {
    const SuperBasis& b = algebra_basis(algebra());
    auto weyl = [&](const WeylModule& w, int idx, const char* top) {
        const auto& [mono, v] = w.state(idx);
        std::string out;
        for (int c : mono) out += b.labels[static_cast<std::size_t>(c % dim_)] + "[-" + std::to_string(c / dim_ + 1) + "]";
        return out + top + std::to_string(v);
    };
    const auto [i, j] = module_.pair(s.first);
    std::string out = weyl(module_.first(), i, "v") + " (x) " + weyl(module_.second(), j, "w");
    for (int c : s.second) {
        const int n = (c / 2) / dim_, x = (c / 2) % dim_;
        out += std::string(" ") + (c % 2 ? "phi_" : "phi*_") + b.labels[static_cast<std::size_t>(x)] + "[-" + std::to_string(n) + "]";
    }
    return out;
}

bool RelativeComplex::has_phi_star_zero(const FockVec& v, int dim) {
    for (const auto& [s, c] : v)
        for (int code : s.second)
            if (code % 2 == 0 && code / 2 < dim) return true;
    return false;
}

std::vector<RelativeComplex::GhostTerm> RelativeComplex::create(int c, const Monomial& m) const {
    if ((c / 2) / dim_ > max_weight_) return {};
    std::vector<int> word{c};
    word.insert(word.end(), m.begin(), m.end());
    // canonicalize treats entries with the parity of Pi x; ghosts of x have that parity.
    std::vector<int> par(static_cast<std::size_t>(2 * dim_ * (max_weight_ + 1)));
    for (std::size_t q = 0; q < par.size(); ++q) par[q] = parity_[(q / 2) % static_cast<std::size_t>(dim_)];
    const auto sign = canonicalize(word, par);
    if (!sign) return {};
    return {{*sign, std::move(word)}};
}

std::vector<RelativeComplex::GhostTerm> RelativeComplex::derive(int c, const Monomial& m) const {
    auto it = std::find(m.begin(), m.end(), c);
    if (it == m.end()) return {};
    int before = 0;
    for (auto jt = m.begin(); jt != it; ++jt) before += ghost_parity(*jt);
    const bool odd = ghost_parity(c) != 0;
    const int count = static_cast<int>(std::count(m.begin(), m.end(), c));
    Monomial rest = m;
    rest.erase(rest.begin() + (it - m.begin()));
    return {{(odd && before % 2 ? -1 : 1) * count, std::move(rest)}};
}

std::vector<RelativeComplex::GhostTerm> RelativeComplex::apply_mode(const ModeOp& op, const Monomial& m) const {
    if (op.star) {
        if (op.mode <= 0) return create(code(true, op.index, -op.mode), m);
        // phi*_{i,n} = eps d/d phi_{i,-n}, eps = -1 when phi is even
        auto out = derive(code(false, op.index, op.mode), m);
        if (parity_[static_cast<std::size_t>(op.index)])
            for (auto& t : out) t.coeff = -t.coeff;
        return out;
    }
    if (op.mode >= 0) return derive(code(true, op.index, op.mode), m);
    return create(code(false, op.index, -op.mode), m);
}

std::vector<RelativeComplex::GhostTerm> RelativeComplex::apply_normal_ordered(std::vector<ModeOp> ops,
                                                                             const Monomial& m) const {
    auto creator = [](const ModeOp& op) { return op.star ? op.mode <= 0 : op.mode <= -1; };
    auto par = [&](const ModeOp& op) { return (parity_[static_cast<std::size_t>(op.index)] + 1) % 2; };
    int sign = 1;
    for (std::size_t u = 0; u < ops.size(); ++u)
        for (std::size_t v = u + 1; v < ops.size(); ++v)
            if (!creator(ops[u]) && creator(ops[v]) && par(ops[u]) && par(ops[v])) sign = -sign;
    std::stable_partition(ops.begin(), ops.end(), creator);
    std::vector<GhostTerm> cur{{sign, m}};
    for (auto op = ops.rbegin(); op != ops.rend(); ++op) {
        std::vector<GhostTerm> next;
        for (const auto& t : cur)
            for (auto& r : apply_mode(*op, t.mono)) next.push_back({t.coeff * r.coeff, std::move(r.mono)});
        cur = std::move(next);
        if (cur.empty()) break;
    }
    return cur;
}

const SparseVec<LevelScalar>& RelativeComplex::act(int a, int n, int s) const {
    return act_[static_cast<std::size_t>((n + max_weight_) * dim_ + a)][static_cast<std::size_t>(s)];
}

FockVec RelativeComplex::d(const FockVec& v) const {
    const int N = max_weight_;
    FockVec out;
    for (const auto& [st, coeff] : v) {
        const auto& [s, g] = st;
        const int ps = module_.parity(s);
        // sum x_{i,n} phi*_{i,-n}
        for (int i = 0; i < dim_; ++i) {
            const int xi = parity_[static_cast<std::size_t>(i)];
            for (int n = -N; n <= N; ++n) {
                const auto& mv = act(i, n, s);
                if (mv.empty()) continue;
                const int sign = sign_of((xi + 1) * ps % 2);
                for (const auto& t : apply_mode({true, i, -n}, g))
                    for (const auto& [s2, c] : mv) add_to(out, {s2, t.mono}, coeff * c * LevelScalar(sign * t.coeff));
            }
        }
        // -1/2 sum (-1)^{x_i x_k} c_ij^k :phi*_{i,p} phi*_{j,q} phi_{k,r}:, p + q + r = 0
        for (const auto& [i, j, k, c] : structure_) {
            const int xi = parity_[static_cast<std::size_t>(i)], xk = parity_[static_cast<std::size_t>(k)];
            const Rational base = Rational(-c / 2) * sign_of(xi * xk) * sign_of(ps);
            for (int p = -N; p <= N; ++p)
                for (int q = -N; q <= N; ++q) {
                    const int r = -p - q;
                    if (r < -N || r > N) continue;
                    for (const auto& t : apply_normal_ordered({{true, i, p}, {true, j, q}, {false, k, r}}, g))
                        add_to(out, {s, t.mono}, coeff * LevelScalar(Rational(base * t.coeff)));
                }
        }
    }
    return out;
}

FockVec RelativeComplex::g_action(int x, const FockVec& v) const {
    const int N = max_weight_;
    const int xx = parity_[static_cast<std::size_t>(x)];
    FockVec out;
    for (const auto& [st, coeff] : v) {
        const auto& [s, g] = st;
        for (const auto& [s2, c] : act(x, 0, s)) add_to(out, {s2, g}, coeff * c);
        // x -> sum (-1)^{x_j} c_xj^k :phi_{k,n} phi*_{j,-n}:
        const int sign_s = sign_of(xx * module_.parity(s) % 2);
        for (const auto& [i, j, k, c] : structure_) {
            if (i != x) continue;
            const Rational base = c * sign_of(parity_[static_cast<std::size_t>(j)]) * sign_s;
            for (int n = -N; n <= N; ++n)
                for (const auto& t : apply_normal_ordered({{false, k, n}, {true, j, -n}}, g))
                    add_to(out, {s, t.mono}, coeff * LevelScalar(Rational(base * t.coeff)));
        }
    }
    return out;
}

FockVec RelativeComplex::piece(Filtration f, int which, const FockVec& v) const {
    const int N = max_weight_;
    // Raw operator words: (create?, code), applied right to left.
    using Raw = std::vector<std::pair<bool, int>>;
    auto run = [&](const Raw& ops, const Monomial& m) {
        std::vector<GhostTerm> cur{{1, m}};
        for (auto op = ops.rbegin(); op != ops.rend(); ++op) {
            std::vector<GhostTerm> next;
            for (const auto& t : cur)
                for (auto& r : op->first ? create(op->second, t.mono) : derive(op->second, t.mono))
                    next.push_back({t.coeff * r.coeff, std::move(r.mono)});
            cur = std::move(next);
        }
        return cur;
    };
    const bool star_term = (f == Filtration::F) == (which == 1);  // x phi* / phi* phi* d/dphi* pieces
    FockVec out;
    for (const auto& [st, coeff] : v) {
        const auto& [s, g] = st;
        const int ps = module_.parity(s);
        if (which == 1)
            for (int i = 0; i < dim_; ++i) {
                const int xi = parity_[static_cast<std::size_t>(i)];
                for (int n = 1; n <= N; ++n) {
                    // F: x_{i,n} phi*_{i,-n};  G: (-1)^{x_i} x_{i,-n} d/dphi_{i,-n}
                    const bool F = f == Filtration::F;
                    const auto& mv = act(i, F ? n : -n, s);
                    if (mv.empty()) continue;
                    const int sign = (F ? 1 : sign_of(xi)) * sign_of((xi + 1) * ps % 2);
                    for (const auto& t : run({{F, code(F, i, n)}}, g))
                        for (const auto& [s2, c] : mv) add_to(out, {s2, t.mono}, coeff * c * LevelScalar(sign * t.coeff));
                }
            }
        for (const auto& [i, j, k, c] : structure_) {
            const int xi = parity_[static_cast<std::size_t>(i)], xj = parity_[static_cast<std::size_t>(j)],
                      xk = parity_[static_cast<std::size_t>(k)];
            for (int p = 1; p <= N; ++p)
                for (int q = 1; p + q <= N; ++q) {
                    if (star_term) {
                        // -1/2 (-1)^{x_i x_k} c phi*_{i,-p} phi*_{j,-q} d/dphi*_{k,-p-q}
                        const Rational base = Rational(-c / 2) * sign_of(xi * xk) * sign_of(ps);
                        for (const auto& t : run({{true, code(true, i, p)}, {true, code(true, j, q)}, {false, code(true, k, p + q)}}, g))
                            add_to(out, {s, t.mono}, coeff * LevelScalar(Rational(base * t.coeff)));
                    } else {
                        // -1/2 (-1)^{x_i x_k + x_i + x_j} c phi_{k,-p-q} d/dphi_{i,-p} d/dphi_{j,-q}
                        const Rational base = Rational(-c / 2) * sign_of((xi * xk + xi + xj) % 2) * sign_of(ps);
                        for (const auto& t : run({{true, code(false, k, p + q)}, {false, code(false, i, p)}, {false, code(false, j, q)}}, g))
                            add_to(out, {s, t.mono}, coeff * LevelScalar(Rational(base * t.coeff)));
                    }
                }
        }
    }
    return out;
}

// ---------------------------------------------------------------- cohomology

long SemicohReport::dim(int weight, int degree) const {
    for (const auto& b : blocks)
        if (b.weight == weight && b.degree == degree) return b.dim;
    return 0;
}

long SemicohReport::total_dim() const {
    long t = 0;
    for (const auto& b : blocks) t += b.dim;
    return t;
}

bool SemicohReport::concentrated_in_degree_zero() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const SemicohBlock& b) { return b.degree == 0 || b.dim == 0; });
}

namespace {

std::map<FockState, int> index_states(const std::vector<FockState>& st) {
    std::map<FockState, int> idx;
    for (std::size_t j = 0; j < st.size(); ++j) idx.emplace(st[j], static_cast<int>(j));
    return idx;
}

}  // namespace

SemicohReport relative_semicoh(const Weight& lambda, const Weight& mu, int max_weight, int threads) {
    const RelativeComplex c(lambda, mu, max_weight, threads);
    return relative_semicoh(c, threads);
}

SemicohReport relative_semicoh(const RelativeComplex& c, int threads) {
    SemicohReport rep;
    rep.lambda = c.module().first().lambda();
    rep.mu = c.module().second().lambda();
    rep.ell = c.ell();
    rep.max_weight = c.max_weight();
    const int N = c.max_weight();
    const int dim = algebra_basis(c.algebra()).dim;

    std::vector<std::pair<int, int>> keys;
    std::map<std::pair<int, int>, std::map<FockState, int>> index;
    for (int w = 0; w <= N; ++w)
        for (int d = -w; d <= w; ++d) {
            keys.emplace_back(w, d);
            index[{w, d}] = index_states(c.states(w, d));
        }
    struct Slice {
        long rank = 0;
        int parity = -1;
        std::vector<std::string> failures;
    };
    std::vector<Slice> slices(keys.size());
    parallel_for(keys.size(), threads, [&](std::size_t t) {
        const auto [w, d] = keys[t];
        Slice& out = slices[t];
        const auto& target = index.count({w, d + 1}) ? index.at({w, d + 1}) : std::map<FockState, int>{};
        std::vector<SparseVec<LevelScalar>> images;
        for (const auto& inv : c.invariants(w, d)) {
            const FockVec v = c.embed(w, d, inv);
            for (const auto& [st, x] : v) {
                const int p = c.parity(st);
                if (out.parity < 0) out.parity = p;
                if (out.parity != p) out.failures.push_back("mixed parity in slice");
            }
            const FockVec dv = c.d(v);
            if (RelativeComplex::has_phi_star_zero(dv, dim)) {
                out.failures.push_back("phi*_0 terms survive on an invariant at weight " + std::to_string(w));
                continue;
            }
            if (!c.d(dv).empty()) out.failures.push_back("d^2 != 0 at weight " + std::to_string(w) + ", degree " + std::to_string(d));
            SparseVec<LevelScalar> img;
            for (const auto& [st, x] : dv) {
                auto it = target.find(st);
                if (it == target.end()) {
                    out.failures.push_back("d leaves the zero-weight states");
                    break;
                }
                img.emplace(it->second, x);
            }
            images.push_back(std::move(img));
        }
        out.rank = static_cast<long>(rank_of(images));
    });

    std::map<std::pair<int, int>, long> rank;
    for (std::size_t t = 0; t < keys.size(); ++t) {
        rank[keys[t]] = slices[t].rank;
        for (const auto& f : slices[t].failures) {
            rep.failures.push_back(f);
            if (f.find("phi*_0") != std::string::npos) rep.relative = false;
            if (f.find("d^2") != std::string::npos) rep.square_zero = false;
        }
    }
    for (std::size_t t = 0; t < keys.size(); ++t) {
        const auto [w, d] = keys[t];
        SemicohBlock b;
        b.weight = w;
        b.degree = d;
        b.states = static_cast<long>(c.states(w, d).size());
        b.invariants = static_cast<long>(c.invariants(w, d).size());
        b.rank = rank[{w, d}];
        b.dim = b.invariants - b.rank - (rank.count({w, d - 1}) ? rank.at({w, d - 1}) : 0);
        b.parity = std::max(slices[t].parity, 0);
        if (b.states > 0) rep.blocks.push_back(b);
    }

    // Class built from the invariant pairing of L_lambda and L_mu at weight 0.
    const TensorModule& m = c.module();
    const auto tensors = invariant_tensors(m.first().top(), m.second().top());
    if (!tensors.empty()) {
        SemicohWitness wit;
        FockVec v;
        const int bdim = m.second().top().dim;
        for (const auto& [ij, x] : tensors.front()) {
            const int s = m.index_of(m.first().index_of({}, ij / bdim), m.second().index_of({}, ij % bdim));
            add_to(v, FockState{s, {}}, LevelScalar(x));
        }
        wit.invariant = true;
        for (int x = 0; x < algebra_basis(c.algebra()).dim; ++x)
            if (!c.g_action(x, v).empty()) wit.invariant = false;
        wit.closed = c.d(v).empty();
        // Nothing of degree -1 lives at weight 0, so a nonzero closed class is not exact.
        wit.non_exact = !v.empty() && c.states(0, -1).empty();
        for (const auto& [st, x] : v) wit.terms.push_back({c.label(st), x});
        rep.witness = std::move(wit);
    }
    return rep;
}

// ---------------------------------------------------------------- Euler-Poincare

GradedSeries euler_poincare_char(const Weight& lambda, const Weight& mu, int max_weight) {
    const AlgebraId& id = lambda.algebra;
    const int order2 = 2 * max_weight;
    const GradedSeries pi = eta_like_product(id, order2);
    const GradedSeries total = weyl_module_char(lambda, LevelScalar::k(), order2) *
                               weyl_module_char(mu, complement_level(id), order2) * pi * pi;
    return invariant_part(total.supercharacter());
}

EulerPoincareReport ep_check(const Weight& lambda, const Weight& mu, int max_weight, int threads) {
    const RelativeComplex c(lambda, mu, max_weight, threads);
    return ep_check(c, relative_semicoh(c, threads));
}

EulerPoincareReport ep_check(const RelativeComplex& c, const SemicohReport& h) {
    const Weight& lambda = c.module().first().lambda();
    const Weight& mu = c.module().second().lambda();
    const int max_weight = c.max_weight();
    EulerPoincareReport rep;
    rep.series = euler_poincare_char(lambda, mu, max_weight);
    const bool dual = dual_weight(mu) == lambda;
    auto coeff = [&](int d2) -> long {
        const auto& t = rep.series.coeff(d2);
        auto it = t.find({});
        return it == t.end() ? 0 : static_cast<long>(it->second.even - it->second.odd);
    };
    bool half_zero = true;
    for (int d2 = 1; d2 <= 2 * max_weight; d2 += 2) half_zero = half_zero && coeff(d2) == 0;
    rep.matches_delta = half_zero;
    for (int w = 0; w <= max_weight; ++w) {
        const long expect = dual && w == 0 ? 1 : 0;
        if (coeff(2 * w) != expect) rep.matches_delta = false;
    }
    if (dual && !(rep.series.shift() == ExponentShift(Rational(0)))) rep.matches_delta = false;

    rep.consistent = half_zero && h.failures.empty();
    for (int w = 0; w <= max_weight; ++w) {
        long inv = 0, coh = 0;
        for (const auto& b : h.blocks)
            if (b.weight == w) {
                const long sign = b.parity ? -1 : 1;
                inv += sign * b.invariants;
                coh += sign * b.dim;
            }
        rep.ep_coeff.push_back(coeff(2 * w));
        rep.invariant_sum.push_back(inv);
        rep.cohomology_sum.push_back(coh);
        if (inv != coeff(2 * w) || coh != coeff(2 * w)) rep.consistent = false;
    }
    return rep;
}

bool wedge_character_check(const AlgebraId& id, int max_weight) {
    const int order2 = 2 * max_weight;
    const RootDatum& rd = root_datum(id);
    GradedSeries wedge(Alphabet{id}, order2);
    for (const auto& g : ghost_monomials(id, max_weight))
        wedge.add_term(2 * g.weight, rd.to_fund(g.gweight), g.parity ? ParityMult{0, 1} : ParityMult{1, 0});
    const GradedSeries pi = eta_like_product(id, order2);
    return wedge.supercharacter() == (pi * pi).supercharacter();
}

// ---------------------------------------------------------------- loop (co)homology

long invariant_dimension(const AlgebraId& id, const std::map<EpsVec, long>& ch) {
    std::map<EpsVec, long> rest;
    for (const auto& [w, m] : ch)
        if (m != 0) rest[w] += m;
    const RootDatum& rd = root_datum(id);
    long trivial = 0;
    while (!rest.empty()) {
        const auto top = std::prev(rest.end());  // lexicographically largest eps-weight
        const EpsVec hw = top->first;
        const long m = top->second;
        const std::vector<int> coords = rd.to_fund(hw);
        if (m < 0 || !rd.is_dominant(coords)) throw std::domain_error("character is not a sum of irreducibles");
        if (is_zero_eps(hw)) trivial += m;
        for (const auto& [w, pm] : character(Weight{id, coords}).terms()) {
            const EpsVec e = rd.to_eps(w);
            rest[e] -= m * pm.total();
            if (rest[e] == 0) rest.erase(e);
        }
    }
    return trivial;
}

std::vector<CEHomologyEntry> homology_of_loop_minus(const AffineModule& m, int max_degree) {
    const GradedAlgebra a = loop_minus(m.algebra(), m.max_weight());
    return CEComplex<Rational>(a, loop_minus_module_rational(m), CEDirection::Chain, max_degree, m.max_weight()).homology();
}

std::vector<CEHomologyEntry> cohomology_of_loop_plus(const AffineModule& m, int max_degree) {
    const GradedAlgebra a = loop_plus(m.algebra(), m.max_weight());
    return CEComplex<LevelScalar>(a, loop_plus_module(m), CEDirection::Cochain, max_degree, m.max_weight()).homology();
}

std::vector<CEHomologyEntry> homology_of_loop_minus_trivial(const AlgebraId& id, int max_weight) {
    const GradedAlgebra a = loop_minus(id, max_weight);
    return CEComplex<Rational>(a, trivial_module<Rational>(a), CEDirection::Chain, max_weight, max_weight).homology();
}

std::vector<CEHomologyEntry> cohomology_of_loop_plus_trivial(const AlgebraId& id, int max_weight) {
    const GradedAlgebra a = loop_plus(id, max_weight);
    return CEComplex<Rational>(a, trivial_module<Rational>(a), CEDirection::Cochain, max_weight, max_weight).homology();
}

namespace {

VanishingReport vanishing(const AffineModule& m, const FiniteChar& top, bool plus) {
    VanishingReport rep;
    rep.entries = plus ? cohomology_of_loop_plus(m, m.max_weight()) : homology_of_loop_minus(m, m.max_weight());
    const RootDatum& rd = root_datum(m.algebra());
    std::map<std::vector<int>, long> zero_part, expected;
    for (const auto& [w, pm] : top.terms()) expected[w] = pm.total();
    rep.higher_vanish = true;
    rep.degree_zero_only_top = true;
    for (const auto& e : rep.entries) {
        if (e.degree > 0) rep.higher_vanish = false;
        if (e.degree == 0 && e.weight > 0) rep.degree_zero_only_top = false;
        if (e.degree == 0 && e.weight == 0) zero_part[rd.to_fund(e.gweight)] += e.dim;
    }
    rep.top_in_degree_zero = zero_part == expected;
    return rep;
}

}  // namespace

VanishingReport loop_minus_vanishing(const Weight& lambda, int max_weight) {
    return vanishing(WeylModule(lambda, LevelScalar::k(), max_weight), character(lambda), false);
}

VanishingReport loop_plus_vanishing(const Weight& lambda, int max_weight) {
    return vanishing(WeylModule(lambda, LevelScalar::k(), max_weight), character(lambda), true);
}

VanishingReport loop_minus_vanishing(const Weight& lambda, const Weight& mu, int max_weight) {
    const TensorModule m(WeylModule(lambda, LevelScalar::k(), max_weight),
                         WeylModule(mu, complement_level(lambda.algebra), max_weight), max_weight);
    return vanishing(m, character(lambda) * character(mu), false);
}

VanishingReport loop_plus_vanishing(const Weight& lambda, const Weight& mu, int max_weight) {
    const TensorModule m(WeylModule(lambda, LevelScalar::k(), max_weight),
                         WeylModule(mu, complement_level(lambda.algebra), max_weight), max_weight);
    return vanishing(m, character(lambda) * character(mu), true);
}

// ---------------------------------------------------------------- filtrations

bool SplitReport::ok() const {
    if (!preserves_filtration || !split || !relations || !failures.empty()) return false;
    return std::all_of(blocks.begin(), blocks.end(), [](const SplitBlock& b) { return b.e1 == b.predicted; });
}

SplitReport filtration_split_check(const RelativeComplex& c, Filtration f, int max_weight) {
    SplitReport rep;
    rep.filtration = f;
    const int N = std::min(max_weight, c.max_weight());
    std::map<std::pair<int, int>, long> rank;
    for (int w = 0; w <= N; ++w)
        for (int d = -w; d <= w; ++d) {
            const auto target = index_states(c.states(w, d + 1));
            std::vector<SparseVec<LevelScalar>> images;
            for (const auto& inv : c.invariants(w, d)) {
                const FockVec v = c.embed(w, d, inv);
                const int delta = c.delta(v.begin()->first, f);
                FockVec gr;
                for (const auto& [st, x] : c.d(v)) {
                    const int dt = c.delta(st, f);
                    if (dt == delta) {
                        add_to(gr, st, x);
                    } else if (f == Filtration::F ? dt > delta : dt < delta) {
                        rep.preserves_filtration = false;
                    }
                }
                const FockVec p1 = c.piece(f, 1, v), p2 = c.piece(f, 2, v);
                FockVec sum = p1;
                add_to(sum, p2);
                for (const FockVec* p : {&p1, &p2})
                    for (const auto& [st, x] : *p)
                        if (c.delta(st, f) != delta) rep.split = false;
                FockVec diff = gr;
                add_to(diff, sum, LevelScalar(-1));
                if (!diff.empty()) {
                    rep.split = false;
                    rep.failures.push_back("gr d differs from d_1 + d_2 at weight " + std::to_string(w) + ", degree " +
                                           std::to_string(d));
                }
                FockVec anti = c.piece(f, 1, p2);
                add_to(anti, c.piece(f, 2, p1));
                if (!c.piece(f, 1, p1).empty() || !c.piece(f, 2, p2).empty() || !anti.empty()) rep.relations = false;
                SparseVec<LevelScalar> img;
                for (const auto& [st, x] : sum) {
                    auto it = target.find(st);
                    if (it == target.end()) {
                        rep.failures.push_back("gr d leaves the zero-weight states");
                        break;
                    }
                    img.emplace(it->second, x);
                }
                images.push_back(std::move(img));
            }
            rank[{w, d}] = static_cast<long>(rank_of(images));
        }

    // E_1 from the factorization through loop (co)homology.
    const AlgebraId& id = c.algebra();
    const TensorModule& m = c.module();
    std::vector<CEHomologyEntry> first, second;
    if (f == Filtration::F) {
        first = cohomology_of_loop_plus(m, N);
        second = homology_of_loop_minus_trivial(id, N);
    } else {
        first = cohomology_of_loop_plus_trivial(id, N);
        second = homology_of_loop_minus(m, N);
    }
    std::map<std::pair<int, int>, std::map<EpsVec, long>> product;
    for (const auto& a : first)
        for (const auto& b : second) {
            if (a.weight + b.weight > N) continue;
            auto& ch = product[{a.weight + b.weight, a.degree - b.degree}];
            ch[eps_add(a.gweight, b.gweight, 1)] += a.dim * b.dim;
        }
    for (int w = 0; w <= N; ++w)
        for (int d = -w; d <= w; ++d) {
            SplitBlock b;
            b.weight = w;
            b.degree = d;
            b.e1 = static_cast<long>(c.invariants(w, d).size()) - rank[{w, d}] - (rank.count({w, d - 1}) ? rank[{w, d - 1}] : 0);
            auto it = product.find({w, d});
            b.predicted = it == product.end() ? 0 : invariant_dimension(id, it->second);
            if (b.e1 != 0 || b.predicted != 0) rep.blocks.push_back(b);
        }
    return rep;
}

// ---------------------------------------------------------------- pairing

PairingReport pairing_check(const Weight& lambda, int max_weight, int max_degree) {
    PairingReport rep;
    const AlgebraId& id = lambda.algebra;
    const int N = max_weight;
    const SuperBasis& b = algebra_basis(id);
    const WeylModule m(lambda, LevelScalar::k(), N);
    const auto psi = shapovalov_form(m);
    const auto tr = loop_transpose(id, N);
    const GradedAlgebra minus = loop_minus(id, N), plus = loop_plus(id, N);

    // t[x, y] = [t y, t x]
    rep.anti_isomorphism = true;
    for (int x = 0; x < minus.dim(); ++x)
        for (int y = 0; y < minus.dim(); ++y) {
            SparseVec<Rational> lhs;
            for (const auto& [z, c] : minus.lie.br(x, y)) axpy(lhs, c, tr[static_cast<std::size_t>(z)]);
            SparseVec<Rational> rhs = plus.lie.bracket_of(tr[static_cast<std::size_t>(y)], tr[static_cast<std::size_t>(x)]);
            axpy(lhs, Rational(-1), rhs);
            if (!lhs.empty()) rep.anti_isomorphism = false;
        }
    auto form = [&](int s, int t) {
        auto it = psi[static_cast<std::size_t>(s)].find(t);
        return it == psi[static_cast<std::size_t>(s)].end() ? LevelScalar(0) : it->second;
    };
    rep.contravariant = true;
    for (int x = 0; x < minus.dim(); ++x) {
        const int a = x % b.dim, n = x / b.dim + 1;
        for (int s = 0; s < m.size(); ++s)
            for (int t = 0; t < m.size(); ++t) {
                if (m.grade(s) != m.grade(t) + n) continue;
                LevelScalar lhs, rhs;
                for (const auto& [t2, c] : m.act(a, -n, t)) lhs += c * form(s, t2);
                for (const auto& [y, cy] : tr[static_cast<std::size_t>(x)])
                    for (const auto& [s2, c] : m.act(y % b.dim, y / b.dim + 1, s)) rhs += LevelScalar(cy) * c * form(s2, t);
                if (lhs != rhs) rep.contravariant = false;
            }
    }

    const CEComplex<LevelScalar> co(plus, loop_plus_module(m), CEDirection::Cochain, max_degree, N);
    const CEComplex<LevelScalar> ch(minus, loop_minus_module(m), CEDirection::Chain, max_degree, N);

    // psi_n(., P) as a vector over C^n.
    auto functional = [&](int n, const CEBasisElement& p) {
        SparseVec<LevelScalar> out;
        int xsum = 0;
        for (int x : p.mono) xsum += minus.lie.parity[static_cast<std::size_t>(x)];
        std::vector<std::pair<Monomial, Rational>> words{{{}, Rational(xsum % 2 ? -1 : 1)}};
        for (auto x = p.mono.rbegin(); x != p.mono.rend(); ++x) {
            std::vector<std::pair<Monomial, Rational>> next;
            for (const auto& [w, c] : words)
                for (const auto& [y, cy] : tr[static_cast<std::size_t>(*x)]) {
                    Monomial w2 = w;
                    w2.push_back(y);
                    next.emplace_back(std::move(w2), c * cy);
                }
            words = std::move(next);
        }
        for (auto& [w, c] : words) {
            const auto sign = canonicalize(w, plus.lie.parity);
            if (!sign) continue;
            for (int v = 0; v < m.size(); ++v) {
                const LevelScalar val = form(v, p.vec);
                if (val.is_zero()) continue;
                const int f = co.index_of(n, w, v);
                if (f >= 0) axpy(out, LevelScalar(Rational(c * *sign)) * val, SparseVec<LevelScalar>{{f, LevelScalar(1)}});
            }
        }
        return out;
    };

    rep.compatible = true;
    for (int n = 0; n <= max_degree && !rep.failure; ++n) {
        std::vector<SparseVec<LevelScalar>> psi_n;
        for (const auto& p : ch.basis(n)) psi_n.push_back(functional(n, p));
        std::vector<std::vector<std::pair<int, LevelScalar>>> dt(co.basis(n + 1).size());
        for (std::size_t f = 0; f < co.differential(n).size(); ++f)
            for (const auto& [g, x] : co.differential(n)[f]) dt[static_cast<std::size_t>(g)].emplace_back(static_cast<int>(f), x);
        const auto& bnd = ch.differential(n + 1);
        for (std::size_t pi = 0; pi < ch.basis(n + 1).size(); ++pi) {
            const auto& p = ch.basis(n + 1)[pi];
            SparseVec<LevelScalar> lhs;
            for (const auto& [g, x] : functional(n + 1, p))
                for (const auto& [f, y] : dt[static_cast<std::size_t>(g)]) axpy(lhs, x * y, SparseVec<LevelScalar>{{f, LevelScalar(1)}});
            SparseVec<LevelScalar> rhs;
            for (const auto& [q, x] : bnd[pi]) axpy(rhs, x, psi_n[static_cast<std::size_t>(q)]);
            for (const auto& e : co.basis(n))
                if (e.weight == p.weight) ++rep.pairs_checked;
            axpy(lhs, LevelScalar(-1), rhs);
            if (!lhs.empty()) {
                rep.compatible = false;
                rep.failure = "compatibility fails in degree " + std::to_string(n) + " for chain basis element " + std::to_string(pi);
                break;
            }
        }
    }

    // Induced pairing on cocycles x cycles, per degree and weight.
    std::map<std::pair<int, int>, long> hco, hch;
    for (const auto& e : co.homology()) hco[{e.degree, e.weight}] += e.dim;
    for (const auto& e : ch.homology()) hch[{e.degree, e.weight}] += e.dim;
    rep.nondegenerate = rep.compatible;
    for (int n = 0; n <= max_degree; ++n)
        for (int w = 0; w <= N; ++w) {
            std::vector<int> cols, rows;
            for (std::size_t j = 0; j < co.basis(n).size(); ++j)
                if (co.basis(n)[j].weight == w) cols.push_back(static_cast<int>(j));
            for (std::size_t j = 0; j < ch.basis(n).size(); ++j)
                if (ch.basis(n)[j].weight == w) rows.push_back(static_cast<int>(j));
            if (cols.empty() && rows.empty()) continue;
            std::vector<SparseVec<LevelScalar>> dimg;
            for (int j : cols) dimg.push_back(co.differential(n)[static_cast<std::size_t>(j)]);
            std::vector<SparseVec<LevelScalar>> cocycles;
            for (const auto& k : kernel_of(dimg)) {
                SparseVec<LevelScalar> z;
                for (const auto& [l, x] : k) z.emplace(cols[static_cast<std::size_t>(l)], x);
                cocycles.push_back(std::move(z));
            }
            std::vector<SparseVec<LevelScalar>> cycles;
            if (n == 0) {
                for (int j : rows) cycles.push_back({{j, LevelScalar(1)}});
            } else {
                std::vector<SparseVec<LevelScalar>> bimg;
                for (int j : rows) bimg.push_back(ch.differential(n)[static_cast<std::size_t>(j)]);
                for (const auto& k : kernel_of(bimg)) {
                    SparseVec<LevelScalar> z;
                    for (const auto& [l, x] : k) z.emplace(rows[static_cast<std::size_t>(l)], x);
                    cycles.push_back(std::move(z));
                }
            }
            std::vector<SparseVec<LevelScalar>> matrix;
            for (const auto& z2 : cycles) {
                SparseVec<LevelScalar> fn;
                for (const auto& [q, x] : z2) axpy(fn, x, functional(n, ch.basis(n)[static_cast<std::size_t>(q)]));
                SparseVec<LevelScalar> row;
                for (std::size_t r = 0; r < cocycles.size(); ++r) {
                    LevelScalar val;
                    for (const auto& [f, x] : cocycles[r]) {
                        auto it = fn.find(f);
                        if (it != fn.end()) val += x * it->second;
                    }
                    if (!val.is_zero()) row.emplace(static_cast<int>(r), val);
                }
                matrix.push_back(std::move(row));
            }
            PairingDegree pd;
            pd.degree = n;
            pd.weight = w;
            pd.cohomology = hco[{n, w}];
            pd.homology = hch[{n, w}];
            pd.rank = static_cast<long>(rank_of(matrix));
            if (pd.rank != pd.cohomology || pd.rank != pd.homology) rep.nondegenerate = false;
            rep.degrees.push_back(pd);
        }
    return rep;
}

}  // namespace hookdual
