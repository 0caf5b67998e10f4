#include "hookdual/finite_reps.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace hookdual {

namespace {

template <class V>
const V& cached(std::map<AlgebraId, std::unique_ptr<V>>& cache, std::mutex& mu, const AlgebraId& id) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it == cache.end()) {
        if constexpr (std::is_same_v<V, RootDatum>) it = cache.emplace(id, std::make_unique<V>(id)).first;
        else it = cache.emplace(id, std::make_unique<V>(build_algebra(id))).first;
    }
    return *it->second;
}

EpsVec sum_zero(EpsVec v) {
    Rational mean = 0;
    for (const auto& x : v) mean += x;
    mean /= static_cast<long>(v.size());
    for (auto& x : v) x -= mean;
    return v;
}

Rational eps_sum(const EpsVec& v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s;
}

// Weight multiplicities of an irreducible module of a Lie algebra, by Freudenthal's recursion.
std::map<EpsVec, long long> freudenthal(const RootDatum& rd, const EpsVec& lambda) {
    std::map<EpsVec, long long> mult{{lambda, 1}};
    if (rd.positive_roots().empty()) return mult;
    const EpsVec& rho = rd.rho();
    auto shifted_norm = [&](const EpsVec& v) {
        EpsVec w = v;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += rho[i];
        return rd.inner(w, w);
    };
    const Rational top = shifted_norm(lambda);
    std::vector<int> heights;
    for (const auto& a : rd.positive_roots()) heights.push_back(rd.height(a.eps));

    std::vector<EpsVec> level{lambda};
    for (int depth = 1; !level.empty(); ++depth) {
        std::set<EpsVec> candidates;
        for (const auto& v : level)
            for (const auto& s : rd.simple_roots()) {
                EpsVec c = v;
                for (std::size_t i = 0; i < c.size(); ++i) c[i] -= s.eps[i];
                candidates.insert(c);
            }
        std::vector<EpsVec> next;
        for (const auto& mu : candidates) {
            Rational denom = top - shifted_norm(mu);
            if (denom <= 0) continue;
            Rational acc = 0;
            for (std::size_t r = 0; r < rd.positive_roots().size(); ++r) {
                const EpsVec& a = rd.positive_roots()[r].eps;
                EpsVec up = mu;
                for (int j = 1; j * heights[r] <= depth; ++j) {
                    for (std::size_t i = 0; i < up.size(); ++i) up[i] += a[i];
                    auto it = mult.find(up);
                    if (it != mult.end()) acc += Rational(static_cast<long>(it->second)) * rd.inner(up, a);
                }
            }
            Rational m = 2 * acc / denom;
            if (m.get_den() != 1) throw std::logic_error("non-integral weight multiplicity");
            if (m != 0) {
                mult[mu] = m.get_num().get_si();
                next.push_back(mu);
            }
        }
        level = std::move(next);
    }
    return mult;
}

std::mutex g_char_mu;
std::map<Weight, std::unique_ptr<FiniteChar>> g_char_cache;

}  // namespace

const RootDatum& root_datum(const AlgebraId& id) {
    static std::mutex mu;
    static std::map<AlgebraId, std::unique_ptr<RootDatum>> cache;
    return cached(cache, mu, id);
}

const SuperBasis& algebra_basis(const AlgebraId& id) {
    static std::mutex mu;
    static std::map<AlgebraId, std::unique_ptr<SuperBasis>> cache;
    return cached(cache, mu, id);
}

// ---------------------------------------------------------------- Weight

bool Weight::is_dominant() const { return root_datum(algebra).is_dominant(coords); }

EpsVec Weight::eps() const { return root_datum(algebra).to_eps(coords); }

Weight Weight::from_eps(const AlgebraId& id, const EpsVec& e) { return {id, root_datum(id).to_fund(e)}; }

Weight Weight::zero(const AlgebraId& id) { return {id, std::vector<int>(static_cast<std::size_t>(id.rank()), 0)}; }

Weight Weight::fundamental(const AlgebraId& id, int i) {
    Weight w = zero(id);
    if (i < 1 || i > id.rank()) throw std::invalid_argument("fundamental weight index out of range");
    w.coords[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

std::string weight_str(const Weight& w) {
    std::string s = w.algebra.name() + "(";
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.coords[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------- FiniteChar

ParityMult FiniteChar::at(const std::vector<int>& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ParityMult{} : it->second;
}

void FiniteChar::add(const std::vector<int>& w, ParityMult m) {
    if (m.is_zero()) return;
    auto& slot = terms_[w];
    slot = slot + m;
    if (slot.is_zero()) terms_.erase(w);
}

long long FiniteChar::dim() const {
    long long d = 0;
    for (const auto& [w, m] : terms_) d += m.total();
    return d;
}

long long FiniteChar::sdim() const {
    long long d = 0;
    for (const auto& [w, m] : terms_) d += m.super();
    return d;
}

bool FiniteChar::is_weyl_invariant() const {
    const RootDatum& rd = root_datum(algebra_);
    for (const auto& [w, m] : terms_) {
        EpsVec e = rd.to_eps(w);
        for (std::size_t i = 0; i < rd.weyl_roots().size(); ++i) {
            if (!(at(rd.to_fund(rd.reflect(static_cast<int>(i), e))) == m)) return false;
        }
    }
    return true;
}

FiniteChar FiniteChar::parity_flipped() const {
    FiniteChar r(algebra_);
    for (const auto& [w, m] : terms_) r.terms_.emplace(w, m.flipped());
    return r;
}

FiniteChar& FiniteChar::operator+=(const FiniteChar& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
}

FiniteChar& FiniteChar::operator-=(const FiniteChar& o) {
    for (const auto& [w, m] : o.terms_) add(w, ParityMult{} - m);
    return *this;
}

FiniteChar operator*(const FiniteChar& a, const FiniteChar& b) {
    if (!(a.algebra_ == b.algebra_)) throw std::invalid_argument("character product across algebras");
    FiniteChar r(a.algebra_);
    for (const auto& [u, x] : a.terms_)
        for (const auto& [v, y] : b.terms_) {
            std::vector<int> w = u;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
            r.add(w, x * y);
        }
    return r;
}

// ---------------------------------------------------------------- weights

Weight dual_weight(const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("dual_weight needs a dominant weight: " + weight_str(lambda));
    const RootDatum& rd = root_datum(lambda.algebra);
    EpsVec v = lambda.eps();
    for (int i : rd.longest_word()) v = rd.reflect(i, v);
    for (auto& x : v) x = -x;
    return Weight::from_eps(lambda.algebra, v);
}

bool in_R(const Weight& lambda) {
    const auto& c = lambda.coords;
    const int m = lambda.algebra.rank_param;
    auto at = [&](int i) { return c[static_cast<std::size_t>(i - 1)]; };
    switch (lambda.algebra.family) {
        case Family::GL: {
            long s = 0;
            for (int i = 1; i < m; ++i) s += static_cast<long>(i) * at(i);
            return ((at(m) - s) % m + m) % m == 0;
        }
        case Family::SO_ODD: return at(m) % 2 == 0;
        case Family::SO_EVEN: return m == 1 || (at(m - 1) + at(m)) % 2 == 0;
        default: return true;
    }
}

AlgebraId s_algebra(const AlgebraId& id) {
    if (id.family == Family::OSP) return {Family::SO_ODD, id.rank_param};
    if (id.family == Family::SO_ODD) return {Family::OSP, id.rank_param};
    return id;
}

Weight bo_map(const Weight& lambda) {
    if (!in_R(lambda)) throw std::invalid_argument("weight not in R: " + weight_str(lambda));
    Weight out{s_algebra(lambda.algebra), lambda.coords};
    if (lambda.algebra.family == Family::OSP) out.coords.back() *= 2;
    else if (lambda.algebra.family == Family::SO_ODD) out.coords.back() /= 2;
    return out;
}

const FiniteChar& character(const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("character needs a dominant weight: " + weight_str(lambda));
    {
        std::lock_guard<std::mutex> lock(g_char_mu);
        auto it = g_char_cache.find(lambda);
        if (it != g_char_cache.end()) return *it->second;
    }
    const AlgebraId& id = lambda.algebra;
    const RootDatum& rd = root_datum(id);
    auto ch = std::make_unique<FiniteChar>(id);
    EpsVec top = lambda.eps();
    if (id.family == Family::OSP) {
        // Same eps-weights as L_{^s lambda} of so(2m+1); parity from the eps-sum.
        AlgebraId so_id = s_algebra(id);
        auto mult = freudenthal(root_datum(so_id), top);
        const Rational top_sum = eps_sum(top);
        for (const auto& [e, m] : mult) {
            Rational diff = top_sum - eps_sum(e);
            bool odd = diff.get_num() % 2 != 0;
            ch->add(rd.to_fund(e), odd ? ParityMult{0, m} : ParityMult{m, 0});
        }
    } else {
        for (const auto& [e, m] : freudenthal(rd, top)) ch->add(rd.to_fund(e), ParityMult{m, 0});
    }
    std::lock_guard<std::mutex> lock(g_char_mu);
    auto [it, inserted] = g_char_cache.emplace(lambda, std::move(ch));
    return *it->second;
}

std::map<std::vector<int>, ParityMult> decompose(const FiniteChar& ch) {
    const AlgebraId& id = ch.algebra();
    const RootDatum& rd = root_datum(id);
    FiniteChar rest = ch;
    std::map<std::vector<int>, ParityMult> out;
    while (!rest.empty()) {
        const std::vector<int>* best = nullptr;
        EpsVec best_eps;
        for (const auto& [w, m] : rest.terms()) {
            EpsVec e = rd.to_eps(w);
            if (!best || e > best_eps) {
                best = &w;
                best_eps = e;
            }
        }
        std::vector<int> hw = *best;
        ParityMult m = rest.at(hw);
        if (m.even < 0 || m.odd < 0) throw std::domain_error("negative multiplicity while decomposing");
        if (!rd.is_dominant(hw)) throw std::domain_error("character is not Weyl invariant");
        const FiniteChar& irr = character({id, hw});
        FiniteChar scaled(id);
        scaled.add(std::vector<int>(hw.size(), 0), m);
        rest -= scaled * irr;
        out[hw] = m;
    }
    return out;
}

std::map<std::vector<int>, ParityMult> tensor_decompose(const Weight& lambda, const Weight& mu) {
    return decompose(character(lambda) * character(mu));
}

TrivialMultiplicity trivial_multiplicity(const Weight& lambda, const Weight& mu) {
    auto dec = tensor_decompose(lambda, mu);
    auto it = dec.find(std::vector<int>(lambda.coords.size(), 0));
    TrivialMultiplicity r;
    if (it == dec.end()) return r;
    r.multiplicity = static_cast<int>(it->second.total());
    if (r.multiplicity == 1) r.witness = StrClass{mu, Rational(1)};
    return r;
}

// ---------------------------------------------------------------- FiniteModule

FiniteModule FiniteModule::trivial(const AlgebraId& id) {
    const SuperBasis& b = algebra_basis(id);
    FiniteModule m;
    m.algebra = id;
    m.dim = 1;
    m.parity = {0};
    m.weight = {EpsVec(static_cast<std::size_t>(root_datum(id).eps_dim()), Rational(0))};
    m.action.assign(static_cast<std::size_t>(b.dim), std::vector<SparseVec<Rational>>(1));
    return m;
}

FiniteModule FiniteModule::irreducible(const Weight& lambda) {
    const AlgebraId& id = lambda.algebra;
    if (!lambda.is_dominant()) throw std::invalid_argument("irreducible module needs a dominant weight");
    const SuperBasis& b = algebra_basis(id);
    const RootDatum& rd = root_datum(id);
    EpsVec top = lambda.eps();

    if (id.is_abelian()) {
        // One-dimensional module on which the Cartan element acts by its eigenvalue.
        FiniteModule m;
        m.algebra = id;
        m.dim = 1;
        m.parity = {0};
        m.weight = {top};
        m.action.assign(static_cast<std::size_t>(b.dim), std::vector<SparseVec<Rational>>(1));
        const Mat& h = b.matrices[static_cast<std::size_t>(b.cartan[0])];
        Rational val = top[0] * h(0, 0);
        if (val != 0) m.action[static_cast<std::size_t>(b.cartan[0])][0].emplace(0, val);
        return m;
    }

    // Number of tensor factors: boxes of the partition carried by the eps-vector.
    EpsVec shape = top;
    if (id.family == Family::SL) {
        Rational last = shape.back();
        for (auto& x : shape) x -= last;
    }
    int boxes = 0;
    for (const auto& x : shape) {
        if (x.get_den() != 1 || x < 0) throw std::invalid_argument("no tensor realization for " + weight_str(lambda));
        boxes += static_cast<int>(x.get_num().get_si());
    }
    const int N = b.nat_dim;
    long total = 1;
    for (int i = 0; i < boxes; ++i) total *= N;
    if (total > 2000000) throw std::invalid_argument("tensor realization too large for " + weight_str(lambda));

    auto digits = [&](long code) {
        std::vector<int> d(static_cast<std::size_t>(boxes));
        for (int i = boxes - 1; i >= 0; --i) {
            d[static_cast<std::size_t>(i)] = static_cast<int>(code % N);
            code /= N;
        }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        long c = 0;
        for (int x : d) c = c * N + x;
        return static_cast<int>(c);
    };
    auto tensor_weight = [&](const std::vector<int>& d) {
        EpsVec w(static_cast<std::size_t>(rd.eps_dim()), Rational(0));
        for (int x : d)
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += b.nat_weight[static_cast<std::size_t>(x)][i];
        return w;
    };
    auto tensor_parity = [&](const std::vector<int>& d) {
        int p = 0;
        for (int x : d) p += b.nat_parity[static_cast<std::size_t>(x)];
        return p % 2;
    };
    // x acting on a tensor vector with the Koszul sign.
    auto act_tensor = [&](int xi, const SparseVec<Rational>& v) {
        SparseVec<Rational> out;
        const Mat& X = b.matrices[static_cast<std::size_t>(xi)];
        const int xp = b.parity[static_cast<std::size_t>(xi)];
        for (const auto& [code, c] : v) {
            auto d = digits(code);
            int before = 0;
            for (int pos = 0; pos < boxes; ++pos) {
                const int src = d[static_cast<std::size_t>(pos)];
                Rational sign = (xp && before % 2) ? -1 : 1;
                for (int a = 0; a < N; ++a) {
                    if (X(a, src) == 0) continue;
                    auto e = d;
                    e[static_cast<std::size_t>(pos)] = a;
                    axpy(out, Rational(sign * c * X(a, src)), SparseVec<Rational>{{encode(e), Rational(1)}});
                }
                before += b.nat_parity[static_cast<std::size_t>(src)];
            }
        }
        return out;
    };
    auto fund_of = [&](const EpsVec& w) { return rd.to_fund_rational(w); };
    const auto target = fund_of(top);

    // Highest weight vectors of weight lambda in the tensor power.
    std::vector<int> top_codes;
    for (long code = 0; code < total; ++code)
        if (fund_of(tensor_weight(digits(code))) == target) top_codes.push_back(static_cast<int>(code));
    std::vector<SparseVec<Rational>> images;
    for (int code : top_codes) {
        SparseVec<Rational> img;
        for (std::size_t k = 0; k < b.positive.size(); ++k) {
            auto y = act_tensor(b.positive[k], SparseVec<Rational>{{code, Rational(1)}});
            for (const auto& [t, c] : y) img.emplace(static_cast<int>(k * total) + t, c);
        }
        images.push_back(img);
    }
    auto ker = kernel_of(images);
    if (ker.empty()) throw std::logic_error("no highest weight vector for " + weight_str(lambda));
    SparseVec<Rational> hv;
    for (const auto& [j, c] : ker[0]) hv.emplace(top_codes[static_cast<std::size_t>(j)], c);

    // Generate U(n-) . hv, keeping weight spaces separate.
    std::map<EpsVec, RowEchelon<Rational>, std::greater<>> spaces;
    auto weight_of = [&](const SparseVec<Rational>& v) { return tensor_weight(digits(v.begin()->first)); };
    std::deque<SparseVec<Rational>> todo{hv};
    spaces[weight_of(hv)].insert(hv);
    while (!todo.empty()) {
        SparseVec<Rational> v = std::move(todo.front());
        todo.pop_front();
        for (int f : b.negative) {
            auto u = act_tensor(f, v);
            if (u.empty()) continue;
            if (spaces[weight_of(u)].insert(u)) todo.push_back(u);
        }
    }

    FiniteModule m;
    m.algebra = id;
    const int top_parity = tensor_parity(digits(hv.begin()->first));
    std::vector<SparseVec<Rational>> basis;
    std::map<EpsVec, int> offset;
    for (const auto& [w, ech] : spaces) {
        offset[w] = static_cast<int>(basis.size());
        for (const auto& row : ech.rows()) {
            basis.push_back(row);
            m.parity.push_back((tensor_parity(digits(row.begin()->first)) + top_parity) % 2);
            m.weight.push_back(id.family == Family::SL ? sum_zero(w) : w);
        }
    }
    m.dim = static_cast<int>(basis.size());
    m.action.assign(static_cast<std::size_t>(b.dim), std::vector<SparseVec<Rational>>(static_cast<std::size_t>(m.dim)));
    for (int x = 0; x < b.dim; ++x)
        for (int j = 0; j < m.dim; ++j) {
            auto u = act_tensor(x, basis[static_cast<std::size_t>(j)]);
            if (u.empty()) continue;
            EpsVec w = weight_of(u);
            auto coords = spaces.at(w).coordinates(u);
            if (!coords) throw std::logic_error("generated module is not closed");
            SparseVec<Rational>& col = m.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)];
            for (std::size_t r = 0; r < coords->size(); ++r)
                if ((*coords)[r] != 0) col.emplace(offset[w] + static_cast<int>(r), (*coords)[r]);
        }
    return m;
}

SparseVec<Rational> FiniteModule::act(int x, const SparseVec<Rational>& v) const {
    SparseVec<Rational> out;
    for (const auto& [j, c] : v) axpy(out, c, action[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)]);
    return out;
}

bool FiniteModule::is_representation() const {
    const SuperBasis& b = algebra_basis(algebra);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            Rational s = (b.parity[static_cast<std::size_t>(i)] && b.parity[static_cast<std::size_t>(j)]) ? -1 : 1;
            for (int v = 0; v < dim; ++v) {
                SparseVec<Rational> e{{v, Rational(1)}};
                SparseVec<Rational> lhs;
                for (const auto& [k, c] : b.br(i, j)) axpy(lhs, c, act(k, e));
                axpy(lhs, Rational(-1), act(i, act(j, e)));
                axpy(lhs, s, act(j, act(i, e)));
                if (!lhs.empty()) return false;
            }
        }
    return true;
}

FiniteChar FiniteModule::character() const {
    const RootDatum& rd = root_datum(algebra);
    FiniteChar ch(algebra);
    for (int j = 0; j < dim; ++j) {
        auto w = rd.to_fund(weight[static_cast<std::size_t>(j)]);
        ch.add(w, parity[static_cast<std::size_t>(j)] ? ParityMult{0, 1} : ParityMult{1, 0});
    }
    return ch;
}

std::vector<SparseVec<Rational>> invariant_tensors(const FiniteModule& a, const FiniteModule& b) {
    if (!(a.algebra == b.algebra)) throw std::invalid_argument("invariant tensors across algebras");
    const SuperBasis& g = algebra_basis(a.algebra);
    std::vector<SparseVec<Rational>> images;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            // x(u (x) v) = xu (x) v + (-1)^{|x||u|} u (x) xv, stacked over x.
            SparseVec<Rational> img;
            const bool odd_u = a.parity[static_cast<std::size_t>(i)] != 0;
            for (int x = 0; x < g.dim; ++x) {
                const int base = x * a.dim * b.dim;
                for (const auto& [r, c] : a.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)])
                    axpy(img, c, SparseVec<Rational>{{base + r * b.dim + j, Rational(1)}});
                Rational sign = (g.parity[static_cast<std::size_t>(x)] && odd_u) ? -1 : 1;
                for (const auto& [r, c] : b.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)])
                    axpy(img, Rational(sign * c), SparseVec<Rational>{{base + i * b.dim + r, Rational(1)}});
            }
            images.push_back(std::move(img));
        }
    return kernel_of(images);
}

}  // namespace hookdual
