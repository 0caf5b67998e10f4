#include "hookdual/affine_modules.hpp"

#include <functional>
#include <stdexcept>

namespace hookdual {

namespace {

GradedAlgebra loop_algebra(const AlgebraId& id, int max_weight, const char* sign) {
    const SuperBasis& b = algebra_basis(id);
    const int d = b.dim;
    GradedAlgebra a;
    a.lie.dim = d * max_weight;
    a.lie.bracket.assign(static_cast<std::size_t>(a.lie.dim) * static_cast<std::size_t>(a.lie.dim), {});
    for (int n = 1; n <= max_weight; ++n)
        for (int x = 0; x < d; ++x) {
            a.lie.parity.push_back(b.parity[static_cast<std::size_t>(x)]);
            a.lie.labels.push_back(b.labels[static_cast<std::size_t>(x)] + "[" + sign + std::to_string(n) + "]");
            a.grade.push_back(n);
            a.gweight.push_back(b.weight[static_cast<std::size_t>(x)]);
        }
    for (int m = 1; m <= max_weight; ++m)
        for (int n = 1; m + n <= max_weight; ++n)
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y) {
                    SparseVec<Rational> out;
                    for (const auto& [z, c] : b.br(x, y)) out.emplace((m + n - 1) * d + z, c);
                    const std::size_t i = static_cast<std::size_t>((m - 1) * d + x);
                    const std::size_t j = static_cast<std::size_t>((n - 1) * d + y);
                    a.lie.bracket[i * static_cast<std::size_t>(a.lie.dim) + j] = std::move(out);
                }
    return a;
}

EpsVec eps_sum(EpsVec a, const EpsVec& b) {
    if (a.empty()) a.assign(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

ModuleMatrices<LevelScalar> loop_module(const AffineModule& m, int sign) {
    const SuperBasis& b = algebra_basis(m.algebra());
    ModuleMatrices<LevelScalar> out;
    out.dim = m.size();
    for (int s = 0; s < m.size(); ++s) {
        out.parity.push_back(m.parity(s));
        out.grade.push_back(m.grade(s));
        out.gweight.push_back(m.gweight(s));
    }
    for (int n = 1; n <= m.max_weight(); ++n)
        for (int x = 0; x < b.dim; ++x) {
            std::vector<SparseVec<LevelScalar>> cols;
            cols.reserve(static_cast<std::size_t>(m.size()));
            for (int s = 0; s < m.size(); ++s) cols.push_back(m.act(x, sign * n, s));
            out.action.push_back(std::move(cols));
        }
    return out;
}

}  // namespace

GradedAlgebra loop_minus(const AlgebraId& id, int max_weight) { return loop_algebra(id, max_weight, "-"); }
GradedAlgebra loop_plus(const AlgebraId& id, int max_weight) { return loop_algebra(id, max_weight, ""); }

WeylModule::WeylModule(const Weight& lambda, LevelScalar level, int max_weight)
    : lambda_(lambda),
      level_(std::move(level)),
      max_weight_(max_weight),
      dim_(algebra_basis(lambda.algebra).dim),
      basis_(&algebra_basis(lambda.algebra)),
      top_(FiniteModule::irreducible(lambda)) {
    const int ncodes = dim_ * max_weight_;
    std::vector<Monomial> monos;
    Monomial cur;
    std::function<void(int, int)> rec = [&](int start, int weight) {
        monos.push_back(cur);
        for (int c = start; c < ncodes; ++c) {
            const int w = weight + code_weight(c);
            if (w > max_weight_) continue;
            cur.push_back(c);
            rec(basis_->parity[static_cast<std::size_t>(code_algebra(c))] ? c + 1 : c, w);
            cur.pop_back();
        }
    };
    rec(0, 0);
    std::stable_sort(monos.begin(), monos.end(),
                     [&](const Monomial& a, const Monomial& b) { return mono_weight(a) < mono_weight(b); });
    for (const auto& mono : monos) {
        int p = 0;
        EpsVec gw;
        for (int c : mono) {
            p += basis_->parity[static_cast<std::size_t>(code_algebra(c))];
            gw = eps_sum(gw, basis_->weight[static_cast<std::size_t>(code_algebra(c))]);
        }
        for (int v = 0; v < top_.dim; ++v) {
            index_[{mono, v}] = static_cast<int>(states_.size());
            states_.emplace_back(mono, v);
            grade_.push_back(mono_weight(mono));
            parity_.push_back((p + top_.parity[static_cast<std::size_t>(v)]) % 2);
            gweight_.push_back(eps_sum(gw, top_.weight[static_cast<std::size_t>(v)]));
        }
    }
}

int WeylModule::mono_weight(const Monomial& m) const {
    int w = 0;
    for (int c : m) w += code_weight(c);
    return w;
}

int WeylModule::index_of(const Monomial& mono, int v) const {
    auto it = index_.find({mono, v});
    return it == index_.end() ? -1 : it->second;
}

const WeylModule::MonoTerms& WeylModule::insert(int code, const Monomial& mono) const {
    const auto key = std::make_pair(code, mono);
    if (auto it = insert_cache_.find(key); it != insert_cache_.end()) return it->second;
    MonoTerms out;
    auto add = [&](const Monomial& m, const LevelScalar& c) {
        auto& slot = out[m];
        slot += c;
        if (slot.is_zero()) out.erase(m);
    };
    const int a = code_algebra(code), n = code_weight(code);
    const bool odd = basis_->parity[static_cast<std::size_t>(a)] != 0;
    if (n + mono_weight(mono) <= max_weight_) {
        if (mono.empty() || code < mono.front() || (code == mono.front() && !odd)) {
            Monomial m{code};
            m.insert(m.end(), mono.begin(), mono.end());
            add(m, LevelScalar(1));
        } else {
            const Monomial rest(mono.begin() + 1, mono.end());
            if (code == mono.front()) {
                // x x = [x, x] / 2 for odd x.
                for (const auto& [z, c] : basis_->br(a, a))
                    for (const auto& [m, c2] : insert((2 * n - 1) * dim_ + z, rest)) add(m, LevelScalar(Rational(c / 2)) * c2);
            } else {
                const int head = mono.front();
                const int b = code_algebra(head), m0 = code_weight(head);
                const bool swap_odd = odd && basis_->parity[static_cast<std::size_t>(b)] != 0;
                const MonoTerms tail = insert(code, rest);
                for (const auto& [u, c] : tail)
                    for (const auto& [m, c2] : insert(head, u)) add(m, swap_odd ? LevelScalar(-(c * c2)) : c * c2);
                for (const auto& [z, c] : basis_->br(a, b))
                    for (const auto& [m, c2] : insert((n + m0 - 1) * dim_ + z, rest)) add(m, LevelScalar(c) * c2);
            }
        }
    }
    return insert_cache_.emplace(key, std::move(out)).first->second;
}

const WeylModule::Terms& WeylModule::lower(int a, int n, const Monomial& mono, int v) const {
    const auto key = std::make_tuple(a, n, mono, v);
    if (auto it = lower_cache_.find(key); it != lower_cache_.end()) return it->second;
    Terms out;
    auto add = [&](const Monomial& m, int w, const LevelScalar& c) {
        auto& slot = out[{m, w}];
        slot += c;
        if (slot.is_zero()) out.erase({m, w});
    };
    if (mono.empty()) {
        if (n == 0)
            for (const auto& [w, c] : top_.action[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)])
                add({}, w, LevelScalar(c));
    } else {
        const int head = mono.front();
        const int b = code_algebra(head), m0 = code_weight(head);
        const Monomial rest(mono.begin() + 1, mono.end());
        // [x_{a,n}, x_{b,-m}] = [x_a, x_b]_{n-m} + n delta_{n,m} k (x_a|x_b)
        for (const auto& [z, c] : basis_->br(a, b)) {
            if (n < m0) {
                for (const auto& [m, c2] : insert((m0 - n - 1) * dim_ + z, rest)) add(m, v, LevelScalar(c) * c2);
            } else {
                const Terms sub = lower(z, n - m0, rest, v);
                for (const auto& [mw, c2] : sub) add(mw.first, mw.second, LevelScalar(c) * c2);
            }
        }
        const Rational& f = basis_->form[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (n == m0 && f != 0) add(rest, v, level_ * LevelScalar(Rational(n * f)));
        const bool swap_odd = basis_->parity[static_cast<std::size_t>(a)] && basis_->parity[static_cast<std::size_t>(b)];
        const Terms sub = lower(a, n, rest, v);
        for (const auto& [mw, c] : sub)
            for (const auto& [m, c2] : insert(head, mw.first)) add(m, mw.second, swap_odd ? LevelScalar(-(c * c2)) : c * c2);
    }
    return lower_cache_.emplace(key, std::move(out)).first->second;
}

const SparseVec<LevelScalar>& WeylModule::act(int a, int n, int s) const {
    const auto key = std::make_tuple(a, n, s);
    if (auto it = act_cache_.find(key); it != act_cache_.end()) return it->second;
    SparseVec<LevelScalar> out;
    const auto& [mono, v] = state(s);
    if (n < 0) {
        if (grade(s) - n <= max_weight_)
            for (const auto& [m, c] : insert((-n - 1) * dim_ + a, mono)) out.emplace(index_of(m, v), c);
    } else {
        for (const auto& [mw, c] : lower(a, n, mono, v)) out.emplace(index_of(mw.first, mw.second), c);
    }
    return act_cache_.emplace(key, std::move(out)).first->second;
}

TensorModule::TensorModule(WeylModule first, WeylModule second, int max_weight)
    : first_(std::move(first)), second_(std::move(second)), max_weight_(max_weight) {
    if (first_.max_weight() < max_weight || second_.max_weight() < max_weight)
        throw std::invalid_argument("tensor factors truncated below the requested weight");
    for (int w = 0; w <= max_weight_; ++w)
        for (int i = 0; i < first_.size(); ++i) {
            if (first_.grade(i) > w) continue;
            for (int j = 0; j < second_.size(); ++j) {
                if (first_.grade(i) + second_.grade(j) != w) continue;
                index_[{i, j}] = static_cast<int>(pairs_.size());
                pairs_.emplace_back(i, j);
                grade_.push_back(w);
                parity_.push_back((first_.parity(i) + second_.parity(j)) % 2);
                gweight_.push_back(eps_sum(first_.gweight(i), second_.gweight(j)));
            }
        }
}

int TensorModule::index_of(int i, int j) const {
    auto it = index_.find({i, j});
    return it == index_.end() ? -1 : it->second;
}

const SparseVec<LevelScalar>& TensorModule::act(int a, int n, int s) const {
    const auto key = std::make_tuple(a, n, s);
    if (auto it = act_cache_.find(key); it != act_cache_.end()) return it->second;
    SparseVec<LevelScalar> out;
    const auto [i, j] = pair(s);
    auto put = [&](int i2, int j2, const LevelScalar& c) {
        auto it = index_.find({i2, j2});
        if (it != index_.end()) axpy(out, c, SparseVec<LevelScalar>{{it->second, LevelScalar(1)}});
    };
    for (const auto& [i2, c] : first_.act(a, n, i)) put(i2, j, c);
    const bool sign = algebra_basis(algebra()).parity[static_cast<std::size_t>(a)] && first_.parity(i);
    for (const auto& [j2, c] : second_.act(a, n, j)) put(i, j2, sign ? LevelScalar(-c) : c);
    return act_cache_.emplace(key, std::move(out)).first->second;
}

ModuleMatrices<LevelScalar> loop_minus_module(const AffineModule& m) { return loop_module(m, -1); }
ModuleMatrices<LevelScalar> loop_plus_module(const AffineModule& m) { return loop_module(m, 1); }

ModuleMatrices<Rational> loop_minus_module_rational(const AffineModule& m) {
    const auto sym = loop_minus_module(m);
    ModuleMatrices<Rational> out;
    out.dim = sym.dim;
    out.parity = sym.parity;
    out.grade = sym.grade;
    out.gweight = sym.gweight;
    for (const auto& cols : sym.action) {
        std::vector<SparseVec<Rational>> rc;
        for (const auto& col : cols) {
            SparseVec<Rational> v;
            for (const auto& [r, c] : col) {
                if (!c.is_constant()) throw std::logic_error("negative modes act with a level-dependent entry");
                v.emplace(r, c.constant_value());
            }
            rc.push_back(std::move(v));
        }
        out.action.push_back(std::move(rc));
    }
    return out;
}

std::vector<SparseVec<Rational>> loop_transpose(const AlgebraId& id, int max_weight) {
    const SuperBasis& b = algebra_basis(id);
    const auto iota = chevalley_transpose(b);
    std::vector<SparseVec<Rational>> out;
    for (int n = 1; n <= max_weight; ++n)
        for (int x = 0; x < b.dim; ++x) {
            SparseVec<Rational> col;
            for (const auto& [y, c] : iota[static_cast<std::size_t>(x)]) col.emplace((n - 1) * b.dim + y, c);
            out.push_back(std::move(col));
        }
    return out;
}

std::vector<SparseVec<LevelScalar>> shapovalov_form(const WeylModule& m) {
    const FiniteModule& top = m.top();
    const SuperBasis& b = algebra_basis(m.algebra());
    const auto iota = chevalley_transpose(b);
    // Contravariant form B on L_lambda: B(u, x v) = B(iota(x) u, v), unknowns B[i][j].
    const int d = top.dim;
    auto var = [d](int i, int j) { return i * d + j; };
    std::vector<SparseVec<Rational>> eqs;
    for (int x = 0; x < b.dim; ++x)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                SparseVec<Rational> e;
                for (const auto& [w, c] : top.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)])
                    axpy(e, c, SparseVec<Rational>{{var(i, w), Rational(1)}});
                for (const auto& [y, cy] : iota[static_cast<std::size_t>(x)])
                    for (const auto& [u, c] : top.action[static_cast<std::size_t>(y)][static_cast<std::size_t>(i)])
                        axpy(e, Rational(-cy * c), SparseVec<Rational>{{var(u, j), Rational(1)}});
                if (!e.empty()) eqs.push_back(std::move(e));
            }
    // Solutions are the kernel of the transposed system.
    std::vector<SparseVec<Rational>> cols(static_cast<std::size_t>(d * d));
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (const auto& [v, c] : eqs[r]) cols[static_cast<std::size_t>(v)].emplace(static_cast<int>(r), c);
    const auto sol = kernel_of(cols);
    if (sol.size() != 1) throw std::logic_error("contravariant form on L_lambda is not unique");
    const EpsVec hw_eps = m.lambda().eps();
    int hw = -1;
    for (int v = 0; v < d; ++v)
        if (top.weight[static_cast<std::size_t>(v)] == hw_eps) hw = v;
    const Rational norm = sol.front().count(var(hw, hw)) ? sol.front().at(var(hw, hw)) : Rational(0);
    if (hw < 0 || norm == 0) throw std::logic_error("contravariant form vanishes on the highest weight vector");

    std::map<std::pair<int, int>, LevelScalar> memo;
    std::function<LevelScalar(int, int)> psi = [&](int s, int t) -> LevelScalar {
        if (m.grade(s) != m.grade(t)) return LevelScalar(0);
        if (auto it = memo.find({s, t}); it != memo.end()) return it->second;
        const auto& [mono, v] = m.state(t);
        LevelScalar val;
        if (mono.empty()) {
            const int u = m.state(s).second;
            auto it = sol.front().find(var(u, v));
            if (it != sol.front().end()) val = LevelScalar(Rational(it->second / norm));
        } else {
            // t = x_{a,-n} t'; the transpose of x_{a,-n} is (iota x_a)_n.
            const int head = mono.front();
            const int a = head % b.dim, n = head / b.dim + 1;
            const int t2 = m.index_of(Monomial(mono.begin() + 1, mono.end()), v);
            for (const auto& [y, cy] : iota[static_cast<std::size_t>(a)])
                for (const auto& [s2, c] : m.act(y, n, s)) val += LevelScalar(cy) * c * psi(s2, t2);
        }
        memo.emplace(std::make_pair(s, t), val);
        return val;
    };
    std::vector<SparseVec<LevelScalar>> out(static_cast<std::size_t>(m.size()));
    for (int s = 0; s < m.size(); ++s)
        for (int t = 0; t < m.size(); ++t) {
            LevelScalar v = psi(s, t);
            if (!v.is_zero()) out[static_cast<std::size_t>(s)].emplace(t, std::move(v));
        }
    return out;
}

}  // namespace hookdual
