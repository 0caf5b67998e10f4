#include "hookdual/superalgebra.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace hookdual {

namespace {

using DenseRows = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse of a square rational matrix.
DenseRows invert(DenseRows a) {
    const std::size_t n = a.size();
    DenseRows inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational s = Rational(1) / a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

EpsVec unit(int d, int i, Rational s = 1) {
    EpsVec v(static_cast<std::size_t>(d), Rational(0));
    v[static_cast<std::size_t>(i)] = s;
    return v;
}

EpsVec add(const EpsVec& a, const EpsVec& b, Rational s = 1) {
    EpsVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
    return r;
}

bool is_zero_vec(const EpsVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::string eps_label(const EpsVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

Rational supertrace(const Mat& m, const std::vector<int>& par) {
    Rational t = 0;
    for (int i = 0; i < m.n; ++i) t += par[static_cast<std::size_t>(i)] ? Rational(-m(i, i)) : m(i, i);
    return t;
}

}  // namespace

// ---------------------------------------------------------------- AlgebraId

int AlgebraId::dim() const {
    const int m = rank_param;
    switch (family) {
        case Family::GL: return m * m;
        case Family::SL: return m * m - 1;
        case Family::SO_ODD: return m * (2 * m + 1);
        case Family::SO_EVEN: return m * (2 * m - 1);
        case Family::SP: return m * (2 * m + 1);
        case Family::OSP: return m * (2 * m + 1) + 2 * m;
    }
    return 0;
}

int AlgebraId::odd_dim() const { return family == Family::OSP ? 2 * rank_param : 0; }

int AlgebraId::rank() const { return family == Family::SL ? rank_param - 1 : rank_param; }

Rational AlgebraId::dual_coxeter() const {
    const int m = rank_param;
    switch (family) {
        case Family::GL: return m;
        case Family::SL: return m;
        case Family::SO_ODD: return 2 * m - 1;
        case Family::SO_EVEN: return 2 * m - 2;
        case Family::SP: return m + 1;
        case Family::OSP: return Rational(2 * m + 1, 2);
    }
    return 0;
}

int AlgebraId::lacing() const {
    switch (family) {
        case Family::SO_ODD:
        case Family::SP:
        case Family::OSP: return 2;
        default: return 1;
    }
}

bool AlgebraId::is_abelian() const {
    return (family == Family::GL && rank_param == 1) || (family == Family::SO_EVEN && rank_param == 1);
}

std::string AlgebraId::name() const {
    const int m = rank_param;
    switch (family) {
        case Family::GL: return "gl" + std::to_string(m);
        case Family::SL: return "sl" + std::to_string(m);
        case Family::SO_ODD: return "so" + std::to_string(2 * m + 1);
        case Family::SO_EVEN: return "so" + std::to_string(2 * m);
        case Family::SP: return "sp" + std::to_string(2 * m);
        case Family::OSP: return "osp1" + std::to_string(2 * m);
    }
    return "?";
}

AlgebraId AlgebraId::parse(const std::string& s) {
    auto num = [&](std::size_t from) {
        if (from >= s.size()) throw std::invalid_argument("missing rank in algebra name: " + s);
        std::size_t pos = 0;
        int v = std::stoi(s.substr(from), &pos);
        if (pos + from != s.size() || v < 1) throw std::invalid_argument("bad algebra name: " + s);
        return v;
    };
    if (s.rfind("osp1", 0) == 0) return osp1(num(4));
    if (s.rfind("gl", 0) == 0) return gl(num(2));
    if (s.rfind("sl", 0) == 0) return sl(num(2));
    if (s.rfind("sp", 0) == 0) return sp(num(2));
    if (s.rfind("so", 0) == 0) return so(num(2));
    throw std::invalid_argument("unknown algebra: " + s);
}

AlgebraId gl(int m) {
    if (m < 1) throw std::invalid_argument("gl_m needs m >= 1");
    return {Family::GL, m};
}
AlgebraId sl(int m) {
    if (m < 2) throw std::invalid_argument("sl_m needs m >= 2");
    return {Family::SL, m};
}
AlgebraId so(int n) {
    if (n < 2) throw std::invalid_argument("so_n needs n >= 2");
    return n % 2 ? AlgebraId{Family::SO_ODD, (n - 1) / 2} : AlgebraId{Family::SO_EVEN, n / 2};
}
AlgebraId sp(int two_m) {
    if (two_m < 2 || two_m % 2) throw std::invalid_argument("sp_2m needs an even size >= 2");
    return {Family::SP, two_m / 2};
}
AlgebraId osp1(int two_m) {
    if (two_m < 2 || two_m % 2) throw std::invalid_argument("osp(1|2m) needs an even size >= 2");
    return {Family::OSP, two_m / 2};
}

Rational dual_coxeter(const AlgebraId& id) { return id.dual_coxeter(); }

// ---------------------------------------------------------------- RootDatum

RootDatum::RootDatum(AlgebraId id) : id_(id) {
    const int m = id.rank_param;
    if (m < 1 || (id.family == Family::SL && m < 2))
        throw std::invalid_argument("unsupported algebra rank: " + id.name());
    eps_dim_ = m;
    rank_ = id.rank();
    const int d = eps_dim_;
    auto e = [&](int i) { return unit(d, i); };
    auto push = [&](EpsVec v, bool odd) { positive_.push_back({std::move(v), odd}); };

    switch (id.family) {
        case Family::GL:
        case Family::SL:
            eps_norm_ = 1;
            for (int i = 0; i + 1 < m; ++i) simple_.push_back({add(e(i), e(i + 1), -1), false});
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) push(add(e(i), e(j), -1), false);
            for (int i = 0; i + 1 < m || (id.family == Family::GL && i < m); ++i) {
                EpsVec w(static_cast<std::size_t>(d), Rational(0));
                if (i + 1 < m) {
                    for (int j = 0; j <= i; ++j) w[static_cast<std::size_t>(j)] = 1;
                    for (auto& x : w) x -= Rational(i + 1, m);
                } else {
                    for (auto& x : w) x = Rational(1, m);
                }
                fundamental_.push_back(w);
            }
            break;
        case Family::SO_ODD:
            eps_norm_ = 1;
            for (int i = 0; i + 1 < m; ++i) simple_.push_back({add(e(i), e(i + 1), -1), false});
            simple_.push_back({e(m - 1), false});
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    push(add(e(i), e(j), -1), false);
                    push(add(e(i), e(j)), false);
                }
            for (int i = 0; i < m; ++i) push(e(i), false);
            for (int i = 0; i < m; ++i) {
                EpsVec w(static_cast<std::size_t>(d), Rational(0));
                for (int j = 0; j <= i; ++j) w[static_cast<std::size_t>(j)] = (i + 1 < m) ? Rational(1) : Rational(1, 2);
                fundamental_.push_back(w);
            }
            break;
        case Family::SO_EVEN:
            eps_norm_ = 1;
            if (m == 1) {
                fundamental_.push_back(e(0));
                break;
            }
            for (int i = 0; i + 1 < m; ++i) simple_.push_back({add(e(i), e(i + 1), -1), false});
            simple_.push_back({add(e(m - 2), e(m - 1)), false});
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    push(add(e(i), e(j), -1), false);
                    push(add(e(i), e(j)), false);
                }
            for (int i = 0; i < m; ++i) {
                EpsVec w(static_cast<std::size_t>(d), Rational(0));
                if (i + 2 < m) {
                    for (int j = 0; j <= i; ++j) w[static_cast<std::size_t>(j)] = 1;
                } else {
                    for (int j = 0; j < m; ++j) w[static_cast<std::size_t>(j)] = Rational(1, 2);
                    if (i + 2 == m) w[static_cast<std::size_t>(m - 1)] = Rational(-1, 2);
                }
                fundamental_.push_back(w);
            }
            break;
        case Family::SP:
        case Family::OSP: {
            const bool super = id.family == Family::OSP;
            eps_norm_ = Rational(1, 2);
            for (int i = 0; i + 1 < m; ++i) simple_.push_back({add(e(i), e(i + 1), -1), false});
            simple_.push_back(super ? Root{e(m - 1), true} : Root{unit(d, m - 1, 2), false});
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    push(add(e(i), e(j), -1), false);
                    push(add(e(i), e(j)), false);
                }
            for (int i = 0; i < m; ++i) push(unit(d, i, 2), false);
            if (super)
                for (int i = 0; i < m; ++i) push(e(i), true);
            for (int i = 0; i < m; ++i) {
                EpsVec w(static_cast<std::size_t>(d), Rational(0));
                for (int j = 0; j <= i; ++j) w[static_cast<std::size_t>(j)] = 1;
                fundamental_.push_back(w);
            }
            break;
        }
    }

    rho_.assign(static_cast<std::size_t>(d), Rational(0));
    for (const auto& r : positive_) rho_ = add(rho_, r.eps, r.odd ? Rational(-1, 2) : Rational(1, 2));

    for (const auto& s : simple_) {
        if (!s.odd) {
            weyl_roots_.push_back(s.eps);
        } else {
            EpsVec two = s.eps;
            for (auto& x : two) x *= 2;
            weyl_roots_.push_back(two);
        }
    }

    // Longest element: walk a strictly dominant vector to the antidominant chamber.
    EpsVec v(static_cast<std::size_t>(d), Rational(0));
    for (const auto& r : positive_)
        if (!r.odd) v = add(v, r.eps);
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i < weyl_roots_.size(); ++i) {
            if (inner(v, weyl_roots_[i]) > 0) {
                v = reflect(static_cast<int>(i), v);
                longest_.push_back(static_cast<int>(i));
                moved = true;
                break;
            }
        }
    }
}

Rational RootDatum::inner(const EpsVec& a, const EpsVec& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s * eps_norm_;
}

EpsVec RootDatum::to_eps(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != rank_) throw std::invalid_argument("weight has wrong length for " + id_.name());
    EpsVec v(static_cast<std::size_t>(eps_dim_), Rational(0));
    for (int i = 0; i < rank_; ++i) v = add(v, fundamental_[static_cast<std::size_t>(i)], coords[static_cast<std::size_t>(i)]);
    return v;
}

std::vector<Rational> RootDatum::to_fund_rational(const EpsVec& e) const {
    const int m = id_.rank_param;
    std::vector<Rational> c(static_cast<std::size_t>(rank_), Rational(0));
    auto E = [&](int i) { return e[static_cast<std::size_t>(i)]; };
    auto C = [&](int i) -> Rational& { return c[static_cast<std::size_t>(i)]; };
    switch (id_.family) {
        case Family::SL:
            for (int i = 0; i + 1 < m; ++i) C(i) = E(i) - E(i + 1);
            break;
        case Family::GL:
            for (int i = 0; i + 1 < m; ++i) C(i) = E(i) - E(i + 1);
            C(m - 1) = 0;
            for (int i = 0; i < m; ++i) C(m - 1) += E(i);
            break;
        case Family::SO_ODD:
            for (int i = 0; i + 1 < m; ++i) C(i) = E(i) - E(i + 1);
            C(m - 1) = 2 * E(m - 1);
            break;
        case Family::SO_EVEN:
            if (m == 1) {
                C(0) = E(0);
                break;
            }
            for (int i = 0; i + 1 < m; ++i) C(i) = E(i) - E(i + 1);
            C(m - 1) = E(m - 2) + E(m - 1);
            break;
        case Family::SP:
        case Family::OSP:
            for (int i = 0; i + 1 < m; ++i) C(i) = E(i) - E(i + 1);
            C(m - 1) = E(m - 1);
            break;
    }
    return c;
}

std::vector<int> RootDatum::to_fund(const EpsVec& e) const {
    auto c = to_fund_rational(e);
    std::vector<int> out;
    for (const auto& x : c) {
        if (x.get_den() != 1) throw std::invalid_argument("not an integral weight of " + id_.name());
        out.push_back(static_cast<int>(x.get_num().get_si()));
    }
    return out;
}

bool RootDatum::is_dominant(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != rank_) return false;
    for (int i = 0; i < rank_; ++i) {
        if (id_.family == Family::GL && i == rank_ - 1) continue;
        if (id_.family == Family::SO_EVEN && id_.rank_param == 1) continue;
        if (coords[static_cast<std::size_t>(i)] < 0) return false;
    }
    return true;
}

EpsVec RootDatum::reflect(int i, const EpsVec& v) const {
    const EpsVec& a = weyl_roots_[static_cast<std::size_t>(i)];
    Rational f = 2 * inner(v, a) / inner(a, a);
    return add(v, a, -f);
}

std::int64_t RootDatum::weyl_order() const {
    EpsVec v(static_cast<std::size_t>(eps_dim_), Rational(0));
    for (const auto& r : positive_)
        if (!r.odd) v = add(v, r.eps);
    std::set<EpsVec> seen{v};
    std::queue<EpsVec> todo;
    todo.push(v);
    while (!todo.empty()) {
        EpsVec x = todo.front();
        todo.pop();
        for (std::size_t i = 0; i < weyl_roots_.size(); ++i) {
            EpsVec y = reflect(static_cast<int>(i), x);
            if (seen.insert(y).second) todo.push(y);
        }
    }
    return static_cast<std::int64_t>(seen.size());
}

std::vector<Rational> RootDatum::simple_coefficients(const EpsVec& root) const {
    // Solve root = sum c_i alpha_i by elimination on the augmented system.
    const std::size_t ns = simple_.size();
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(eps_dim_), std::vector<Rational>(ns + 1, Rational(0)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t j = 0; j < ns; ++j) rows[r][j] = simple_[j].eps[r];
        rows[r][ns] = root[r];
    }
    std::vector<int> pivcol;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < ns && prow < rows.size(); ++c) {
        std::size_t p = prow;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[prow]);
        Rational s = Rational(1) / rows[prow][c];
        for (auto& x : rows[prow]) x *= s;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == prow || rows[r][c] == 0) continue;
            Rational f = rows[r][c];
            for (std::size_t j = 0; j <= ns; ++j) rows[r][j] -= f * rows[prow][j];
        }
        pivcol.push_back(static_cast<int>(c));
        ++prow;
    }
    for (std::size_t r = prow; r < rows.size(); ++r)
        if (rows[r][ns] != 0) throw std::invalid_argument("vector is not in the root span");
    std::vector<Rational> c(ns, Rational(0));
    for (std::size_t r = 0; r < pivcol.size(); ++r) c[static_cast<std::size_t>(pivcol[r])] = rows[r][ns];
    return c;
}

int RootDatum::height(const EpsVec& root) const {
    Rational h = 0;
    for (const auto& c : simple_coefficients(root)) h += c;
    if (h.get_den() != 1) throw std::logic_error("non-integral root height");
    return static_cast<int>(h.get_num().get_si());
}

// ---------------------------------------------------------------- matrices

Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            if (x(i, k) == 0) continue;
            for (int j = 0; j < x.n; ++j)
                if (y(k, j) != 0) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

SparseVec<Rational> LieSuperalgebra::bracket_of(const SparseVec<Rational>& x, const SparseVec<Rational>& y) const {
    SparseVec<Rational> r;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) axpy(r, Rational(a * b), br(i, j));
    return r;
}

bool LieSuperalgebra::super_antisymmetric() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            SparseVec<Rational> s = br(i, j);
            Rational sign = (parity[static_cast<std::size_t>(i)] && parity[static_cast<std::size_t>(j)]) ? -1 : 1;
            axpy(s, sign, br(j, i));
            if (!s.empty()) return false;
        }
    return true;
}

bool LieSuperalgebra::super_jacobi() const {
    auto unitv = [](int i) { return SparseVec<Rational>{{i, Rational(1)}}; };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
                SparseVec<Rational> lhs = bracket_of(unitv(i), br(j, k));
                SparseVec<Rational> r1 = bracket_of(br(i, j), unitv(k));
                SparseVec<Rational> r2 = bracket_of(unitv(j), br(i, k));
                Rational s = (parity[static_cast<std::size_t>(i)] && parity[static_cast<std::size_t>(j)]) ? -1 : 1;
                axpy(lhs, Rational(-1), r1);
                axpy(lhs, Rational(-s), r2);
                if (!lhs.empty()) return false;
            }
    return true;
}

SparseVec<Rational> SuperBasis::coordinates(const Mat& m) const {
    SparseVec<Rational> out;
    std::vector<Rational> probe;
    for (int e : probe_entries) probe.push_back(m.a[static_cast<std::size_t>(e)]);
    for (int i = 0; i < dim; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < probe.size(); ++j) s += probe_inverse[static_cast<std::size_t>(i)][j] * probe[j];
        if (s != 0) out.emplace(i, s);
    }
    // Reconstruction must be exact.
    Mat back(m.n);
    for (const auto& [i, c] : out)
        for (std::size_t t = 0; t < back.a.size(); ++t) back.a[t] += c * matrices[static_cast<std::size_t>(i)].a[t];
    if (back.a != m.a) throw std::domain_error("matrix is not in the algebra " + id.name());
    return out;
}

Rational SuperBasis::form_value(const SparseVec<Rational>& x, const SparseVec<Rational>& y) const {
    Rational s = 0;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) s += a * b * form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return s;
}

Rational SuperBasis::killing(int i, int j) const {
    Rational s = 0;
    for (int k = 0; k < dim; ++k) {
        // coefficient of x_k in [x_i,[x_j,x_k]]
        Rational diag = 0;
        for (const auto& [l, c] : br(j, k)) {
            auto it = br(i, l).find(k);
            if (it != br(i, l).end()) diag += c * it->second;
        }
        s += parity[static_cast<std::size_t>(k)] ? Rational(-diag) : diag;
    }
    return s;
}

bool SuperBasis::form_invariant() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                SparseVec<Rational> xk{{k, Rational(1)}}, xi{{i, Rational(1)}};
                if (form_value(br(i, j), xk) != form_value(xi, br(j, k))) return false;
            }
    return true;
}

SuperBasis build_algebra(const AlgebraId& id) {
    RootDatum rd(id);
    SuperBasis b;
    b.id = id;
    const int m = id.rank_param;
    const int d = m;

    // Defining representation: dimension, parities, weights, invariant form J.
    int N = 0;
    Mat J;
    bool orthosymplectic = false;
    switch (id.family) {
        case Family::GL:
        case Family::SL:
            N = m;
            for (int i = 0; i < N; ++i) b.nat_weight.push_back(unit(d, i));
            b.nat_parity.assign(static_cast<std::size_t>(N), 0);
            break;
        case Family::SO_ODD:
        case Family::SO_EVEN:
        case Family::SP: {
            orthosymplectic = true;
            const bool odd_size = id.family == Family::SO_ODD;
            N = 2 * m + (odd_size ? 1 : 0);
            b.nat_parity.assign(static_cast<std::size_t>(N), 0);
            for (int a = 0; a < N; ++a) {
                if (a < m) b.nat_weight.push_back(unit(d, a));
                else if (odd_size && a == m) b.nat_weight.push_back(EpsVec(static_cast<std::size_t>(d), Rational(0)));
                else b.nat_weight.push_back(unit(d, N - 1 - a, -1));
            }
            J = Mat(N);
            for (int a = 0; a < N; ++a) J(a, N - 1 - a) = (id.family == Family::SP && a >= m) ? -1 : 1;
            break;
        }
        case Family::OSP:
            orthosymplectic = true;
            N = 2 * m + 1;
            b.nat_weight.push_back(EpsVec(static_cast<std::size_t>(d), Rational(0)));
            b.nat_parity.push_back(0);
            for (int i = 0; i < m; ++i) {
                b.nat_weight.push_back(unit(d, i));
                b.nat_parity.push_back(1);
            }
            for (int i = 0; i < m; ++i) {
                b.nat_weight.push_back(unit(d, i, -1));
                b.nat_parity.push_back(1);
            }
            J = Mat(N);
            J(0, 0) = 1;
            for (int i = 1; i <= m; ++i) {
                J(i, m + i) = 1;
                J(m + i, i) = -1;
            }
            break;
    }
    b.nat_dim = N;
    auto P = [&](int a) { return b.nat_parity[static_cast<std::size_t>(a)]; };
    auto W = [&](int a) -> const EpsVec& { return b.nat_weight[static_cast<std::size_t>(a)]; };

    // Root elements grouped by (weight, parity).
    struct RootElem {
        EpsVec w;
        int par;
        Mat mat;
    };
    std::vector<RootElem> roots;
    {
        std::map<std::pair<EpsVec, int>, std::vector<std::pair<int, int>>> groups;
        for (int a = 0; a < N; ++a)
            for (int c = 0; c < N; ++c) {
                EpsVec w = add(W(a), W(c), -1);
                if (is_zero_vec(w)) continue;
                groups[{w, (P(a) + P(c)) % 2}].push_back({a, c});
            }
        for (auto& [key, entries] : groups) {
            const int xpar = key.second;
            if (!orthosymplectic) {
                for (auto [a, c] : entries) {
                    Mat x(N);
                    x(a, c) = 1;
                    roots.push_back({key.first, xpar, x});
                }
                continue;
            }
            // Invariance of J: B(Xu,v) + (-1)^{|X||u|} B(u,Xv) = 0 for all u,v.
            std::vector<SparseVec<Rational>> images;
            for (auto [a, c] : entries) {
                SparseVec<Rational> img;
                auto bump = [&](int u, int v, Rational val) {
                    if (val == 0) return;
                    axpy(img, Rational(1), SparseVec<Rational>{{u * N + v, val}});
                };
                for (int v = 0; v < N; ++v) bump(c, v, J(a, v));
                for (int u = 0; u < N; ++u) bump(u, c, (xpar && P(u)) ? Rational(-J(u, a)) : J(u, a));
                images.push_back(img);
            }
            auto ker = kernel_of(images);
            for (auto& v : ker) {
                Mat x(N);
                for (const auto& [j, coef] : v) {
                    auto [a, c] = entries[static_cast<std::size_t>(j)];
                    x(a, c) = coef;
                }
                roots.push_back({key.first, xpar, x});
            }
        }
    }
    for (auto& r : roots) {
        Rational first = 0;
        for (const auto& x : r.mat.a)
            if (x != 0) {
                first = x;
                break;
            }
        Rational inv = Rational(1) / first;
        for (auto& x : r.mat.a) x *= inv;
    }

    // Cartan elements.
    std::vector<Mat> cartan;
    switch (id.family) {
        case Family::GL:
            for (int i = 0; i < m; ++i) {
                Mat h(N);
                h(i, i) = 1;
                cartan.push_back(h);
            }
            break;
        case Family::SL:
            for (int i = 0; i + 1 < m; ++i) {
                Mat h(N);
                h(i, i) = 1;
                h(i + 1, i + 1) = -1;
                cartan.push_back(h);
            }
            break;
        default:
            for (int i = 0; i < m; ++i) {
                Mat h(N);
                int plus = -1, minus = -1;
                for (int a = 0; a < N; ++a) {
                    if (W(a)[static_cast<std::size_t>(i)] == 1) plus = a;
                    if (W(a)[static_cast<std::size_t>(i)] == -1) minus = a;
                }
                h(plus, plus) = 1;
                h(minus, minus) = -1;
                cartan.push_back(h);
            }
            break;
    }

    // Order: positive roots by (height, root desc), Cartan, negatives mirrored.
    auto positive_root = [](const EpsVec& w) {
        for (const auto& x : w)
            if (x != 0) return x > 0;
        return false;
    };
    std::vector<std::size_t> pos_idx;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (positive_root(roots[i].w)) pos_idx.push_back(i);
    std::sort(pos_idx.begin(), pos_idx.end(), [&](std::size_t x, std::size_t y) {
        int hx = rd.height(roots[x].w), hy = rd.height(roots[y].w);
        if (hx != hy) return hx < hy;
        if (roots[x].w != roots[y].w) return roots[x].w > roots[y].w;
        return roots[x].par < roots[y].par;
    });
    auto find_root = [&](const EpsVec& w, int par) {
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (roots[i].w == w && roots[i].par == par) return i;
        throw std::logic_error("missing negative root");
    };
    auto push_elem = [&](const Mat& x, int par, const EpsVec& w, const std::string& label) {
        b.matrices.push_back(x);
        b.parity.push_back(par);
        b.weight.push_back(w);
        b.labels.push_back(label);
    };
    for (std::size_t i : pos_idx) {
        b.positive.push_back(static_cast<int>(b.matrices.size()));
        push_elem(roots[i].mat, roots[i].par, roots[i].w, "e" + eps_label(roots[i].w));
    }
    for (std::size_t i = 0; i < cartan.size(); ++i) {
        b.cartan.push_back(static_cast<int>(b.matrices.size()));
        push_elem(cartan[i], 0, EpsVec(static_cast<std::size_t>(d), Rational(0)), "h" + std::to_string(i + 1));
    }
    for (std::size_t i : pos_idx) {
        EpsVec neg = roots[i].w;
        for (auto& x : neg) x = -x;
        std::size_t j = find_root(neg, roots[i].par);
        b.negative.push_back(static_cast<int>(b.matrices.size()));
        push_elem(roots[j].mat, roots[j].par, neg, "f" + eps_label(roots[i].w));
    }
    b.dim = static_cast<int>(b.matrices.size());
    if (b.dim != id.dim()) throw std::logic_error("dimension mismatch building " + id.name());

    // Probe entries: a set of matrix positions on which the basis is invertible.
    {
        RowEchelon<Rational> ech;
        for (int e = 0; e < N * N && static_cast<int>(b.probe_entries.size()) < b.dim; ++e) {
            SparseVec<Rational> row;
            for (int i = 0; i < b.dim; ++i) {
                const Rational& v = b.matrices[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(e)];
                if (v != 0) row.emplace(i, v);
            }
            if (ech.insert(row)) b.probe_entries.push_back(e);
        }
        DenseRows S(static_cast<std::size_t>(b.dim), std::vector<Rational>(static_cast<std::size_t>(b.dim), Rational(0)));
        for (int r = 0; r < b.dim; ++r)
            for (int i = 0; i < b.dim; ++i)
                S[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] =
                    b.matrices[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(b.probe_entries[static_cast<std::size_t>(r)])];
        b.probe_inverse = invert(S);
    }

    // Structure constants from the supercommutator.
    b.bracket.resize(static_cast<std::size_t>(b.dim) * b.dim);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            const Mat& x = b.matrices[static_cast<std::size_t>(i)];
            const Mat& y = b.matrices[static_cast<std::size_t>(j)];
            Mat xy = x * y, yx = y * x;
            Rational s = (b.parity[static_cast<std::size_t>(i)] && b.parity[static_cast<std::size_t>(j)]) ? -1 : 1;
            for (std::size_t t = 0; t < xy.a.size(); ++t) xy.a[t] -= s * yx.a[t];
            b.bracket[static_cast<std::size_t>(i) * b.dim + j] = b.coordinates(xy);
        }

    // Normalized form: c * str(XY), with c fixed by the norm of a nonzero defining weight.
    {
        const std::size_t r = cartan.size();
        DenseRows G(r, std::vector<Rational>(r, Rational(0)));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) G[i][j] = supertrace(cartan[i] * cartan[j], b.nat_parity);
        DenseRows Gi = invert(G);
        int ref = 0;
        while (is_zero_vec(W(ref))) ++ref;
        std::vector<Rational> mu(r);
        for (std::size_t i = 0; i < r; ++i) mu[i] = cartan[i](ref, ref);
        Rational raw = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) raw += mu[i] * Gi[i][j] * mu[j];
        EpsVec w0 = W(ref);
        if (id.family == Family::SL) {
            Rational mean = 0;
            for (const auto& x : w0) mean += x;
            mean /= m;
            for (auto& x : w0) x -= mean;
        }
        Rational target = rd.inner(w0, w0);
        Rational c = raw / target;
        b.form.assign(static_cast<std::size_t>(b.dim), std::vector<Rational>(static_cast<std::size_t>(b.dim), Rational(0)));
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                b.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    c * supertrace(b.matrices[static_cast<std::size_t>(i)] * b.matrices[static_cast<std::size_t>(j)], b.nat_parity);
    }
    return b;
}

SuperBasis build_algebra(const AlgebraId& id, FormNormalization norm) {
    SuperBasis b = build_algebra(id);
    if (norm == FormNormalization::Normalized) return b;
    Rational scale = 1;
    switch (norm) {
        case FormNormalization::Trace: scale = 1; break;
        case FormNormalization::HalfTrace: scale = Rational(1, 2); break;
        case FormNormalization::MinusSupertrace: scale = -1; break;
        case FormNormalization::HalfSupertrace: scale = Rational(1, 2); break;
        default: break;
    }
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            b.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                scale * supertrace(b.matrices[static_cast<std::size_t>(i)] * b.matrices[static_cast<std::size_t>(j)], b.nat_parity);
    return b;
}

std::vector<SparseVec<Rational>> chevalley_transpose(const SuperBasis& b) {
    const int N = b.nat_dim;
    std::vector<SparseVec<Rational>> out;
    for (const Mat& x : b.matrices) {
        Mat t(N);
        if (b.id.family != Family::OSP) {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) t(i, j) = x(j, i);
        } else {
            // Blocks: row/col 0 even, then n odd (+eps), then n odd (-eps).
            const int n = b.id.rank_param;
            for (int i = 1; i <= n; ++i) {
                // x-part sits at (i,0) and (0,n+i) = -x; y-part at (n+i,0) and (0,i).
                Rational xi = x(i, 0), yi = x(n + i, 0);
                t(i, 0) = yi;
                t(0, n + i) = -yi;
                t(n + i, 0) = xi;
                t(0, i) = xi;
            }
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    t(i, j) = x(j, i);                   // A -> tA
                    t(i, n + j) = -x(n + i, j);          // B -> -C
                    t(n + i, j) = -x(i, n + j);          // C -> -B
                    t(n + i, n + j) = -x(i, j);          // -tA -> -A
                }
        }
        out.push_back(b.coordinates(t));
    }
    return out;
}

}  // namespace hookdual
