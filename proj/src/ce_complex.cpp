#include "hookdual/ce_complex.hpp"

#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace hookdual {

namespace {

int pi_parity(int x, const std::vector<int>& parity) { return (parity[static_cast<std::size_t>(x)] + 1) % 2; }

template <class F>
F signed_value(int exponent, const F& c) {
    return exponent % 2 == 0 ? c : F(-c);
}

EpsVec add_eps(EpsVec a, const EpsVec& b, int sign) {
    if (a.empty()) a.assign(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
    return a;
}

// All monomials of Sym^n(Pi g) with grade sum <= max_weight.
std::vector<Monomial> monomials(const GradedAlgebra& a, int n, int max_weight) {
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(int, int)> rec = [&](int start, int weight) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x < a.dim(); ++x) {
            const int w = weight + a.grade[static_cast<std::size_t>(x)];
            if (w > max_weight) continue;
            cur.push_back(x);
            rec(pi_parity(x, a.lie.parity) == 1 ? x + 1 : x, w);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

GradedAlgebra GradedAlgebra::ungraded(const LieSuperalgebra& g) {
    GradedAlgebra a;
    a.lie = g;
    a.grade.assign(static_cast<std::size_t>(g.dim), 0);
    return a;
}

template <class F>
bool ModuleMatrices<F>::is_representation(const GradedAlgebra& a) const {
    for (int x = 0; x < a.dim(); ++x)
        for (int y = 0; y < a.dim(); ++y)
            for (int j = 0; j < dim; ++j) {
                const auto& ax = action[static_cast<std::size_t>(x)];
                const auto& ay = action[static_cast<std::size_t>(y)];
                SparseVec<F> lhs = apply_columns(ax, ay[static_cast<std::size_t>(j)]);
                const bool both_odd = a.lie.parity[static_cast<std::size_t>(x)] && a.lie.parity[static_cast<std::size_t>(y)];
                axpy(lhs, both_odd ? F(1) : F(-1), apply_columns(ay, ax[static_cast<std::size_t>(j)]));
                for (const auto& [z, c] : a.lie.br(x, y))
                    axpy(lhs, F(-c), action[static_cast<std::size_t>(z)][static_cast<std::size_t>(j)]);
                if (!lhs.empty()) return false;
            }
    return true;
}

template <class F>
ModuleMatrices<F> trivial_module(const GradedAlgebra& a) {
    ModuleMatrices<F> m;
    m.dim = 1;
    m.parity = {0};
    m.grade = {0};
    if (!a.gweight.empty()) m.gweight = {EpsVec(a.gweight.front().size(), Rational(0))};
    m.action.assign(static_cast<std::size_t>(a.dim()), std::vector<SparseVec<F>>(1));
    return m;
}

template <class F>
ModuleMatrices<F> adjoint_module(const GradedAlgebra& a) {
    ModuleMatrices<F> m;
    m.dim = a.dim();
    m.parity = a.lie.parity;
    m.grade = a.grade;
    m.gweight = a.gweight;
    m.action.assign(static_cast<std::size_t>(a.dim()), std::vector<SparseVec<F>>(static_cast<std::size_t>(a.dim())));
    for (int x = 0; x < a.dim(); ++x)
        for (int y = 0; y < a.dim(); ++y)
            for (const auto& [z, c] : a.lie.br(x, y)) m.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].emplace(z, F(c));
    return m;
}

template ModuleMatrices<Rational> trivial_module<Rational>(const GradedAlgebra&);
template ModuleMatrices<LevelScalar> trivial_module<LevelScalar>(const GradedAlgebra&);
template ModuleMatrices<Rational> adjoint_module<Rational>(const GradedAlgebra&);
template ModuleMatrices<LevelScalar> adjoint_module<LevelScalar>(const GradedAlgebra&);

ModuleMatrices<Rational> finite_module_matrices(const FiniteModule& fm) {
    ModuleMatrices<Rational> m;
    m.dim = fm.dim;
    m.parity = fm.parity;
    m.grade.assign(static_cast<std::size_t>(fm.dim), 0);
    m.gweight = fm.weight;
    m.action = fm.action;
    return m;
}

std::optional<int> canonicalize(std::vector<int>& word, const std::vector<int>& parity) {
    int sign = 1;
    for (std::size_t i = 1; i < word.size(); ++i)
        for (std::size_t j = i; j > 0 && word[j - 1] >= word[j]; --j) {
            if (word[j - 1] == word[j]) {
                if (pi_parity(word[j], parity) == 1) return std::nullopt;
                break;
            }
            if (pi_parity(word[j], parity) && pi_parity(word[j - 1], parity)) sign = -sign;
            std::swap(word[j - 1], word[j]);
        }
    return sign;
}

template <class F>
CEComplex<F>::CEComplex(const GradedAlgebra& algebra, const ModuleMatrices<F>& module, CEDirection direction,
                        int max_degree, int max_weight)
    : direction_(direction), max_degree_(max_degree), max_weight_(max_weight) {
    const auto& par = algebra.lie.parity;
    const bool cochain = direction == CEDirection::Cochain;
    const int top = max_degree + 1;
    basis_.resize(static_cast<std::size_t>(top + 1));
    index_.resize(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n)
        for (const auto& mono : monomials(algebra, n, max_weight)) {
            int w = 0, p = 0;
            EpsVec gw;
            for (int x : mono) {
                w += algebra.grade[static_cast<std::size_t>(x)];
                p += pi_parity(x, par);
                if (!algebra.gweight.empty()) gw = add_eps(gw, algebra.gweight[static_cast<std::size_t>(x)], cochain ? -1 : 1);
            }
            for (int v = 0; v < module.dim; ++v) {
                const int total = w + module.grade[static_cast<std::size_t>(v)];
                if (total > max_weight) continue;
                CEBasisElement e{mono, v, total, (p + module.parity[static_cast<std::size_t>(v)]) % 2, gw};
                if (!module.gweight.empty()) e.gweight = add_eps(gw, module.gweight[static_cast<std::size_t>(v)], 1);
                index_[static_cast<std::size_t>(n)][{mono, v}] = static_cast<int>(basis_[static_cast<std::size_t>(n)].size());
                basis_[static_cast<std::size_t>(n)].push_back(std::move(e));
            }
        }

    auto k_prefix = [&](const Monomial& word) {
        std::vector<int> k(word.size() + 1, 0);
        for (std::size_t i = 0; i < word.size(); ++i) k[i + 1] = k[i] + par[static_cast<std::size_t>(word[i])] + 1;
        return k;
    };
    auto need = [&](int n, const Monomial& mono, int v) {
        const int idx = index_of(n, mono, v);
        if (idx < 0) throw std::logic_error("differential leaves the weight truncation");
        return idx;
    };

    diff_.resize(static_cast<std::size_t>(top + 1));
    if (cochain) {
        for (int n = 0; n < top; ++n) {
            auto& d = diff_[static_cast<std::size_t>(n)];
            d.assign(basis_[static_cast<std::size_t>(n)].size(), {});
            std::set<Monomial> words;
            for (const auto& t : basis_[static_cast<std::size_t>(n + 1)]) words.insert(t.mono);
            for (const Monomial& word : words) {
                const auto k = k_prefix(word);
                for (std::size_t i = 0; i < word.size(); ++i) {
                    const int xi = word[i];
                    const int xb = par[static_cast<std::size_t>(xi)];
                    Monomial rest = word;
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                    int rest_pi = 0;
                    for (int y : rest) rest_pi += pi_parity(y, par);
                    for (int v = 0; v < module.dim; ++v) {
                        const int col = index_of(n, rest, v);
                        if (col < 0) continue;
                        const int fbar = rest_pi + module.parity[static_cast<std::size_t>(v)];
                        const int a_i = xb + (fbar + k[i]) * (xb + 1);
                        for (const auto& [w, c] : module.action[static_cast<std::size_t>(xi)][static_cast<std::size_t>(v)])
                            axpy(d[static_cast<std::size_t>(col)], signed_value(a_i, c),
                                 SparseVec<F>{{need(n + 1, word, w), F(1)}});
                    }
                }
                for (std::size_t i = 0; i < word.size(); ++i)
                    for (std::size_t j = i + 1; j < word.size(); ++j) {
                        const int xi = word[i], xj = word[j];
                        const int bi = par[static_cast<std::size_t>(xi)], bj = par[static_cast<std::size_t>(xj)];
                        Monomial rest;
                        for (std::size_t l = 0; l < word.size(); ++l)
                            if (l != i && l != j) rest.push_back(word[l]);
                        for (const auto& [z, c] : algebra.lie.br(xi, xj)) {
                            std::vector<int> w2{z};
                            w2.insert(w2.end(), rest.begin(), rest.end());
                            const auto sigma = canonicalize(w2, par);
                            if (!sigma) continue;
                            int s_pi = 0;
                            for (int y : w2) s_pi += pi_parity(y, par);
                            for (int v = 0; v < module.dim; ++v) {
                                const int col = index_of(n, w2, v);
                                if (col < 0) continue;
                                const int fbar = s_pi + module.parity[static_cast<std::size_t>(v)];
                                const int a_ij = fbar + (k[i] + 1) * (bi + 1) + (k[j] + bi + 1) * (bj + 1);
                                axpy(d[static_cast<std::size_t>(col)], signed_value(a_ij, F(c * *sigma)),
                                     SparseVec<F>{{need(n + 1, word, v), F(1)}});
                            }
                        }
                    }
            }
        }
    } else {
        for (int n = 1; n <= top; ++n) {
            auto& d = diff_[static_cast<std::size_t>(n)];
            d.assign(basis_[static_cast<std::size_t>(n)].size(), {});
            for (std::size_t col = 0; col < d.size(); ++col) {
                const auto& e = basis_[static_cast<std::size_t>(n)][col];
                const Monomial& word = e.mono;
                const int abar = module.parity[static_cast<std::size_t>(e.vec)];
                const auto k = k_prefix(word);
                for (std::size_t i = 0; i < word.size(); ++i) {
                    const int xi = word[i];
                    const int xb = par[static_cast<std::size_t>(xi)];
                    Monomial rest = word;
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                    const int b_i = (abar + k[i]) * (xb + 1);
                    for (const auto& [w, c] : module.action[static_cast<std::size_t>(xi)][static_cast<std::size_t>(e.vec)])
                        axpy(d[col], signed_value(b_i, c), SparseVec<F>{{need(n - 1, rest, w), F(1)}});
                }
                for (std::size_t i = 0; i < word.size(); ++i)
                    for (std::size_t j = i + 1; j < word.size(); ++j) {
                        const int xi = word[i], xj = word[j];
                        const int bi = par[static_cast<std::size_t>(xi)], bj = par[static_cast<std::size_t>(xj)];
                        const int b_ij = 1 + abar + (k[i] + 1) * (bi + 1) + (k[j] + bi + 1) * (bj + 1);
                        for (const auto& [z, c] : algebra.lie.br(xi, xj)) {
                            std::vector<int> w2{z};
                            for (std::size_t l = 0; l < word.size(); ++l)
                                if (l != i && l != j) w2.push_back(word[l]);
                            const auto sigma = canonicalize(w2, par);
                            if (!sigma) continue;
                            axpy(d[col], signed_value(b_ij, F(c * *sigma)), SparseVec<F>{{need(n - 1, w2, e.vec), F(1)}});
                        }
                    }
            }
        }
    }
}

template <class F>
int CEComplex<F>::index_of(int degree, const Monomial& mono, int vec) const {
    if (degree < 0 || degree >= static_cast<int>(index_.size())) return -1;
    const auto& idx = index_[static_cast<std::size_t>(degree)];
    auto it = idx.find({mono, vec});
    return it == idx.end() ? -1 : it->second;
}

template <class F>
std::optional<std::string> CEComplex<F>::square_zero_failure() const {
    const bool cochain = direction_ == CEDirection::Cochain;
    const int top = max_degree_ + 1;
    for (int n = cochain ? 0 : 2; cochain ? n + 1 < top : n <= top; ++n) {
        const auto& first = diff_[static_cast<std::size_t>(n)];
        const auto& second = diff_[static_cast<std::size_t>(cochain ? n + 1 : n - 1)];
        for (std::size_t j = 0; j < first.size(); ++j)
            if (!apply_columns(second, first[j]).empty())
                return std::string(cochain ? "d" : "partial") + "^2 != 0 on basis element " + std::to_string(j) +
                       " of degree " + std::to_string(n);
    }
    return std::nullopt;
}

template <class F>
std::size_t CEComplex<F>::block_rank(int n, const CEBlockKey& key) const {
    if (n < 0 || n >= static_cast<int>(diff_.size())) return 0;
    const auto& d = diff_[static_cast<std::size_t>(n)];
    std::vector<SparseVec<F>> cols;
    for (std::size_t j = 0; j < d.size(); ++j) {
        const auto& e = basis_[static_cast<std::size_t>(n)][j];
        if (e.weight == key.first && e.gweight == key.second && !d[j].empty()) cols.push_back(d[j]);
    }
    return rank_of(cols);
}

template <class F>
std::vector<CEHomologyEntry> CEComplex<F>::homology() const {
    const bool cochain = direction_ == CEDirection::Cochain;
    std::vector<CEHomologyEntry> out;
    for (int n = 0; n <= max_degree_; ++n) {
        std::map<CEBlockKey, long> count;
        for (const auto& e : basis_[static_cast<std::size_t>(n)]) count[{e.weight, e.gweight}] += 1;
        for (const auto& [key, c] : count) {
            long dim = c;
            if (cochain) {
                dim -= static_cast<long>(block_rank(n, key));
                if (n > 0) dim -= static_cast<long>(block_rank(n - 1, key));
            } else {
                if (n > 0) dim -= static_cast<long>(block_rank(n, key));
                dim -= static_cast<long>(block_rank(n + 1, key));
            }
            if (dim != 0) out.push_back({n, key.first, key.second, dim});
        }
    }
    return out;
}

template class CEComplex<Rational>;
template class CEComplex<LevelScalar>;
template struct ModuleMatrices<Rational>;
template struct ModuleMatrices<LevelScalar>;

namespace {

// Raw engine output keeps the sequence identical across standard libraries.
class Dice {
public:
    explicit Dice(std::uint64_t seed) : engine_(seed) {}
    int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
    int small() { return below(5) - 2; }  // -2 .. 2

private:
    std::mt19937_64 engine_;
};

LieSuperalgebra empty_algebra(const std::vector<int>& parity) {
    LieSuperalgebra g;
    g.dim = static_cast<int>(parity.size());
    g.parity = parity;
    for (int i = 0; i < g.dim; ++i) g.labels.push_back("y" + std::to_string(i));
    g.bracket.assign(static_cast<std::size_t>(g.dim * g.dim), {});
    return g;
}

void set_bracket(LieSuperalgebra& g, int i, int j, const SparseVec<Rational>& v) {
    g.bracket[static_cast<std::size_t>(i * g.dim + j)] = v;
    SparseVec<Rational> w;
    const bool both_odd = g.parity[static_cast<std::size_t>(i)] && g.parity[static_cast<std::size_t>(j)];
    for (const auto& [k, c] : v) w.emplace(k, both_odd ? c : Rational(-c));
    g.bracket[static_cast<std::size_t>(j * g.dim + i)] = w;
}

LieSuperalgebra two_step_nilpotent(Dice& dice, int max_dim) {
    // Generators V then centre Z; [V, V] in Z with the parity of the pair.
    for (;;) {
        const int nv = 2 + dice.below(3), nz = 1 + dice.below(3);
        if (nv + nz > max_dim) continue;
        std::vector<int> parity;
        for (int i = 0; i < nv + nz; ++i) parity.push_back(dice.below(2));
        LieSuperalgebra g = empty_algebra(parity);
        bool nonzero = false;
        for (int i = 0; i < nv; ++i)
            for (int j = i; j < nv; ++j) {
                const int p = (parity[static_cast<std::size_t>(i)] + parity[static_cast<std::size_t>(j)]) % 2;
                if (i == j && !parity[static_cast<std::size_t>(i)]) continue;
                SparseVec<Rational> v;
                for (int z = nv; z < nv + nz; ++z)
                    if (parity[static_cast<std::size_t>(z)] == p)
                        if (const int c = dice.small(); c != 0) v.emplace(z, c);
                if (!v.empty()) nonzero = true;
                set_bracket(g, i, j, v);
            }
        if (nonzero) return g;
    }
}

// x |-> matrices acting on a module, as the semidirect product with an abelian ideal.
LieSuperalgebra semidirect(const SuperBasis& b) {
    std::vector<int> parity = b.parity;
    for (int p : b.nat_parity) parity.push_back(p);
    LieSuperalgebra g = empty_algebra(parity);
    g.labels = b.labels;
    for (int j = 0; j < b.nat_dim; ++j) g.labels.push_back("v" + std::to_string(j));
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) g.bracket[static_cast<std::size_t>(i * g.dim + j)] = b.br(i, j);
    for (int a = 0; a < b.dim; ++a)
        for (int j = 0; j < b.nat_dim; ++j) {
            SparseVec<Rational> v;
            for (int i = 0; i < b.nat_dim; ++i)
                if (const Rational& c = b.matrices[static_cast<std::size_t>(a)](i, j); c != 0) v.emplace(b.dim + i, c);
            set_bracket(g, a, b.dim + j, v);
        }
    return g;
}

LieSuperalgebra direct_sum(const LieSuperalgebra& x, const LieSuperalgebra& y) {
    std::vector<int> parity = x.parity;
    parity.insert(parity.end(), y.parity.begin(), y.parity.end());
    LieSuperalgebra g = empty_algebra(parity);
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j) g.bracket[static_cast<std::size_t>(i * g.dim + j)] = x.br(i, j);
    for (int i = 0; i < y.dim; ++i)
        for (int j = 0; j < y.dim; ++j) {
            SparseVec<Rational> v;
            for (const auto& [k, c] : y.br(i, j)) v.emplace(x.dim + k, c);
            g.bracket[static_cast<std::size_t>((x.dim + i) * g.dim + x.dim + j)] = v;
        }
    return g;
}

std::optional<std::vector<std::vector<Rational>>> inverse(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const Rational s = 1 / a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// New basis y_i = sum_j P[j][i] x_j with P block diagonal for the parity.
LieSuperalgebra base_change(const LieSuperalgebra& g, Dice& dice) {
    const std::size_t n = static_cast<std::size_t>(g.dim);
    for (;;) {
        std::vector<std::vector<Rational>> p(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (g.parity[i] == g.parity[j]) p[i][j] = i == j ? Rational(1 + dice.below(2)) : Rational(dice.small());
        const auto q = inverse(p);
        if (!q) continue;
        LieSuperalgebra h = empty_algebra(g.parity);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Rational> x(n, Rational(0));
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                        if (p[a][i] == 0 || p[b][j] == 0) continue;
                        for (const auto& [z, c] : g.br(static_cast<int>(a), static_cast<int>(b)))
                            x[static_cast<std::size_t>(z)] += p[a][i] * p[b][j] * c;
                    }
                SparseVec<Rational> y;
                for (std::size_t r = 0; r < n; ++r) {
                    Rational c = 0;
                    for (std::size_t z = 0; z < n; ++z) c += (*q)[r][z] * x[z];
                    if (c != 0) y.emplace(static_cast<int>(r), c);
                }
                h.bracket[i * n + j] = y;
            }
        return h;
    }
}

}  // namespace

std::vector<LieSuperalgebra> random_superalgebras(std::uint64_t seed, int count, int max_dim) {
    Dice dice(seed);
    std::vector<LieSuperalgebra> seeds;
    for (const AlgebraId& id : {sl(2), osp1(2)}) seeds.push_back(algebra_basis(id));
    seeds.push_back(direct_sum(algebra_basis(gl(1)), algebra_basis(osp1(2))));
    seeds.push_back(semidirect(algebra_basis(sl(2))));
    seeds.push_back(semidirect(algebra_basis(osp1(2))));
    std::vector<LieSuperalgebra> out;
    for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
        LieSuperalgebra g;
        if (i % 2 == 0) {
            g = two_step_nilpotent(dice, max_dim);
        } else {
            const auto& s = seeds[static_cast<std::size_t>((i / 2) % static_cast<int>(seeds.size()))];
            if (s.dim > max_dim) continue;
            g = base_change(s, dice);
        }
        if (!g.super_antisymmetric() || !g.super_jacobi()) throw std::logic_error("random superalgebra fails Jacobi");
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace hookdual
