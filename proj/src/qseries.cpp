#include "hookdual/qseries.hpp"

#include <algorithm>

namespace hookdual {

namespace {

std::vector<int> add_coords(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

void add_into(CharTerms& t, const std::vector<int>& w, ParityMult m) {
    if (m.is_zero()) return;
    auto& slot = t[w];
    slot = slot + m;
    if (slot.is_zero()) t.erase(w);
}

ParityMult collapse(ParityMult m, bool super) { return super ? ParityMult{m.super(), 0} : m; }

}  // namespace

// ---------------------------------------------------------------- ExponentShift

ExponentShift ExponentShift::level_term(const Rational& c, const Rational& h) {
    return ExponentShift(LevelScalar(c) / (LevelScalar::k() + LevelScalar(h)));
}

Rational ExponentShift::rational() const {
    if (!value_.is_constant()) throw LevelMismatch("exponent has a level-dependent part: " + value_.pretty());
    return value_.constant_value();
}

Rational ExponentShift::rational_part() const {
    if (value_.is_constant()) return value_.constant_value();
    if (value_.den().degree() != 1 || value_.num().degree() > 1)
        throw LevelMismatch("exponent is not of the form r + c/(k+h): " + value_.str());
    Poly q, r;
    Poly::divmod(value_.num(), value_.den(), q, r);
    return q.coeff(0);
}

// ---------------------------------------------------------------- alphabets

int alphabet_width(const Alphabet& a) {
    int w = 0;
    for (const auto& id : a) w += id.rank();
    return w;
}

EpsVec alphabet_eps(const Alphabet& a, const std::vector<int>& coords) {
    EpsVec out;
    std::size_t pos = 0;
    for (const auto& id : a) {
        std::vector<int> part(coords.begin() + static_cast<long>(pos), coords.begin() + static_cast<long>(pos) + id.rank());
        EpsVec e = root_datum(id).to_eps(part);
        out.insert(out.end(), e.begin(), e.end());
        pos += static_cast<std::size_t>(id.rank());
    }
    return out;
}

CharTerms product_character(const Alphabet& a, const std::vector<int>& w) {
    CharTerms acc{{std::vector<int>{}, ParityMult{1, 0}}};
    std::size_t pos = 0;
    for (const auto& id : a) {
        std::vector<int> part(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos) + id.rank());
        pos += static_cast<std::size_t>(id.rank());
        const FiniteChar& ch = character({id, part});
        CharTerms next;
        for (const auto& [u, x] : acc)
            for (const auto& [v, y] : ch.terms()) {
                std::vector<int> c = u;
                c.insert(c.end(), v.begin(), v.end());
                add_into(next, c, x * y);
            }
        acc = std::move(next);
    }
    return acc;
}

CharTerms strip_highest_weights(const Alphabet& a, const CharTerms& c, bool super, bool allow_negative) {
    CharTerms rest = c;
    CharTerms out;
    while (!rest.empty()) {
        auto best = rest.begin();
        EpsVec best_eps = alphabet_eps(a, best->first);
        for (auto it = std::next(rest.begin()); it != rest.end(); ++it) {
            EpsVec e = alphabet_eps(a, it->first);
            if (e > best_eps) {
                best = it;
                best_eps = std::move(e);
            }
        }
        std::vector<int> hw = best->first;
        ParityMult m = best->second;
        if (!allow_negative && (m.even < 0 || m.odd < 0))
            throw std::domain_error("negative multiplicity while stripping highest weights");
        std::size_t pos = 0;
        for (const auto& id : a) {
            std::vector<int> part(hw.begin() + static_cast<long>(pos), hw.begin() + static_cast<long>(pos) + id.rank());
            if (!root_datum(id).is_dominant(part)) throw std::domain_error("coefficient is not Weyl invariant");
            pos += static_cast<std::size_t>(id.rank());
        }
        for (const auto& [w, x] : product_character(a, hw)) add_into(rest, w, ParityMult{} - collapse(x * m, super));
        out[hw] = m;
    }
    return out;
}

// ---------------------------------------------------------------- GradedSeries

GradedSeries GradedSeries::one(const Alphabet& a, int order2) {
    return monomial(a, 0, std::vector<int>(static_cast<std::size_t>(alphabet_width(a)), 0), {1, 0}, order2);
}

GradedSeries GradedSeries::monomial(const Alphabet& a, int d2, const std::vector<int>& w, ParityMult m, int order2) {
    GradedSeries s(a, order2);
    s.add_term(d2, w, m);
    return s;
}

GradedSeries GradedSeries::from_char(const Alphabet& a, std::size_t slot, const FiniteChar& ch, int order2) {
    if (slot >= a.size() || !(a[slot] == ch.algebra())) throw std::invalid_argument("character does not match alphabet slot");
    GradedSeries s(a, order2);
    int before = 0;
    for (std::size_t i = 0; i < slot; ++i) before += a[i].rank();
    const int width = alphabet_width(a);
    for (const auto& [w, m] : ch.terms()) {
        std::vector<int> c(static_cast<std::size_t>(width), 0);
        std::copy(w.begin(), w.end(), c.begin() + before);
        s.add_term(0, c, m);
    }
    return s;
}

const CharTerms& GradedSeries::coeff(int d2) const {
    static const CharTerms empty;
    if (d2 > order2_) throw std::out_of_range("series read beyond its valid order " + half_str(order2_));
    auto it = coeffs_.find(d2);
    return it == coeffs_.end() ? empty : it->second;
}

int GradedSeries::lowest() const { return coeffs_.empty() ? order2_ + 1 : coeffs_.begin()->first; }

void GradedSeries::add_term(int d2, const std::vector<int>& w, ParityMult m) {
    if (d2 < 0) throw std::invalid_argument("negative exponent relative to the series shift");
    if (d2 > order2_ || m.is_zero()) return;
    if (static_cast<int>(w.size()) != alphabet_width(alphabet_)) throw std::invalid_argument("weight width mismatch");
    CharTerms& t = coeffs_[d2];
    add_into(t, w, collapse(m, super_));
    if (t.empty()) coeffs_.erase(d2);
}

GradedSeries GradedSeries::truncated(int order2) const {
    GradedSeries r = *this;
    r.order2_ = std::min(order2, order2_);
    r.coeffs_.erase(r.coeffs_.upper_bound(r.order2_), r.coeffs_.end());
    return r;
}

GradedSeries GradedSeries::with_shift(const ExponentShift& s) const {
    GradedSeries r = *this;
    r.shift_ = s;
    return r;
}

GradedSeries GradedSeries::q_power(int d2) const {
    GradedSeries r(alphabet_, order2_ + d2);
    r.shift_ = shift_;
    r.super_ = super_;
    for (const auto& [d, t] : coeffs_) r.coeffs_[d + d2] = t;
    return r;
}

GradedSeries GradedSeries::supercharacter() const {
    GradedSeries r(alphabet_, order2_);
    r.shift_ = shift_;
    r.super_ = true;
    for (const auto& [d, t] : coeffs_)
        for (const auto& [w, m] : t) r.add_term(d, w, m);
    return r;
}

GradedSeries GradedSeries::character() const {
    GradedSeries r(alphabet_, order2_);
    r.shift_ = shift_;
    for (const auto& [d, t] : coeffs_)
        for (const auto& [w, m] : t) r.add_term(d, w, ParityMult{m.total(), 0});
    return r;
}

GradedSeries GradedSeries::parity_flipped() const {
    GradedSeries r = *this;
    if (super_) {
        for (auto& [d, t] : r.coeffs_)
            for (auto& [w, m] : t) m.even = -m.even;
    } else {
        for (auto& [d, t] : r.coeffs_)
            for (auto& [w, m] : t) m = m.flipped();
    }
    return r;
}

void GradedSeries::check_compatible(const GradedSeries& o) const {
    if (alphabet_ != o.alphabet_) throw std::invalid_argument("series over different weight lattices");
    if (super_ != o.super_) throw std::invalid_argument("mixing supercharacters and characters");
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    check_compatible(o);
    if (!(shift_ == o.shift_)) throw LevelMismatch("adding series with different shifts");
    order2_ = std::min(order2_, o.order2_);
    coeffs_.erase(coeffs_.upper_bound(order2_), coeffs_.end());
    for (const auto& [d, t] : o.coeffs_)
        for (const auto& [w, m] : t) add_term(d, w, m);
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
    check_compatible(o);
    if (!(shift_ == o.shift_)) throw LevelMismatch("subtracting series with different shifts");
    order2_ = std::min(order2_, o.order2_);
    coeffs_.erase(coeffs_.upper_bound(order2_), coeffs_.end());
    for (const auto& [d, t] : o.coeffs_)
        for (const auto& [w, m] : t) add_term(d, w, ParityMult{} - m);
    return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    a.check_compatible(b);
    const int order = std::min(a.order2_ + b.lowest(), b.order2_ + a.lowest());
    GradedSeries r(a.alphabet_, order);
    r.shift_ = a.shift_ + b.shift_;
    r.super_ = a.super_;
    for (const auto& [da, ta] : a.coeffs_)
        for (const auto& [db, tb] : b.coeffs_) {
            if (da + db > order) break;
            CharTerms& out = r.coeffs_[da + db];
            for (const auto& [u, x] : ta)
                for (const auto& [v, y] : tb) add_into(out, add_coords(u, v), x * y);
            if (out.empty()) r.coeffs_.erase(da + db);
        }
    return r;
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) { return a * b; }

bool operator==(const GradedSeries& a, const GradedSeries& b) {
    if (a.alphabet_ != b.alphabet_ || a.super_ != b.super_ || !(a.shift_ == b.shift_)) return false;
    const int order = std::min(a.order2_, b.order2_);
    return a.truncated(order).coeffs_ == b.truncated(order).coeffs_;
}

GradedSeries GradedSeries::external(const GradedSeries& o) const {
    if (super_ != o.super_) throw std::invalid_argument("mixing supercharacters and characters");
    Alphabet alpha = alphabet_;
    alpha.insert(alpha.end(), o.alphabet_.begin(), o.alphabet_.end());
    const int order = std::min(order2_ + o.lowest(), o.order2_ + lowest());
    GradedSeries r(alpha, order);
    r.shift_ = shift_ + o.shift_;
    r.super_ = super_;
    for (const auto& [da, ta] : coeffs_)
        for (const auto& [db, tb] : o.coeffs_) {
            if (da + db > order) break;
            for (const auto& [u, x] : ta)
                for (const auto& [v, y] : tb) {
                    std::vector<int> w = u;
                    w.insert(w.end(), v.begin(), v.end());
                    r.add_term(da + db, w, x * y);
                }
        }
    return r;
}

GradedSeries GradedSeries::inverse() const {
    const std::vector<int> zero(static_cast<std::size_t>(alphabet_width(alphabet_)), 0);
    const CharTerms& c0 = coeff(0);
    if (c0.size() != 1 || c0.begin()->first != zero || !(c0.begin()->second == ParityMult{1, 0}))
        throw std::domain_error("series inverse needs constant term 1");
    GradedSeries r(alphabet_, order2_);
    r.super_ = super_;
    r.shift_ = ExponentShift() - shift_;
    r.coeffs_[0] = c0;
    for (int d = 1; d <= order2_; ++d) {
        CharTerms acc;
        for (const auto& [j, tj] : coeffs_) {
            if (j == 0) continue;
            if (j > d) break;
            auto it = r.coeffs_.find(d - j);
            if (it == r.coeffs_.end()) continue;
            for (const auto& [u, x] : tj)
                for (const auto& [v, y] : it->second) add_into(acc, add_coords(u, v), ParityMult{} - x * y);
        }
        if (!acc.empty()) r.coeffs_[d] = std::move(acc);
    }
    return r;
}

// ---------------------------------------------------------------- products

GradedSeries free_generator(const Alphabet& a, int d2, const std::vector<int>& w, bool odd, int order2) {
    if (d2 <= 0) throw std::invalid_argument("free generators need positive conformal weight");
    GradedSeries acc = GradedSeries::one(a, order2);
    const ParityMult unit = odd ? ParityMult{0, 1} : ParityMult{1, 0};
    for (int d = d2; d <= order2; d += 2) {
        GradedSeries f = GradedSeries::one(a, order2);
        if (odd) {
            f.add_term(d, w, unit);
        } else {
            std::vector<int> p = w;
            for (int j = 1; j * d <= order2; ++j) {
                f.add_term(j * d, p, unit);
                p = add_coords(p, w);
            }
        }
        acc = acc * f;
    }
    return acc;
}

GradedSeries loop_pbw_char(const AlgebraId& id, int order2) {
    const SuperBasis& b = algebra_basis(id);
    const RootDatum& rd = root_datum(id);
    Alphabet a{id};
    GradedSeries acc = GradedSeries::one(a, order2);
    for (int i = 0; i < b.dim; ++i) {
        auto w = rd.to_fund(b.weight[static_cast<std::size_t>(i)]);
        acc = acc * free_generator(a, 2, w, b.parity[static_cast<std::size_t>(i)] != 0, order2);
    }
    return acc;
}

GradedSeries eta_like_product(const AlgebraId& id, int order2) { return loop_pbw_char(id, order2).inverse(); }

GradedSeries invariant_part(const GradedSeries& s) {
    GradedSeries r(Alphabet{}, s.order2());
    r = r.with_shift(s.shift());
    if (s.is_super()) r = r.supercharacter();
    const std::vector<int> zero(static_cast<std::size_t>(alphabet_width(s.alphabet())), 0);
    for (const auto& [d, t] : s.coeffs()) {
        CharTerms parts = strip_highest_weights(s.alphabet(), t, s.is_super(), s.is_super());
        auto it = parts.find(zero);
        if (it != parts.end()) r.add_term(d, {}, it->second);
    }
    return r;
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const Rational& r) { return rational_str(r); }

nlohmann::json to_json(const Poly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs()) a.push_back(rational_str(c));
    return a;
}

nlohmann::json to_json(const LevelScalar& s) { return {{"num", to_json(s.num())}, {"den", to_json(s.den())}}; }

nlohmann::json to_json(const CharTerms& c) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [w, m] : c) a.push_back({{"weight", w}, {"even", m.even}, {"odd", m.odd}});
    return a;
}

nlohmann::json to_json(const FiniteChar& c) {
    return {{"algebra", c.algebra().name()}, {"terms", to_json(c.terms())}};
}

std::string half_str(int d2) { return d2 % 2 == 0 ? std::to_string(d2 / 2) : std::to_string(d2) + "/2"; }

nlohmann::json to_json(const GradedSeries& s) {
    nlohmann::json alpha = nlohmann::json::array();
    for (const auto& id : s.alphabet()) alpha.push_back(id.name());
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [d, t] : s.coeffs()) coeffs.push_back({{"exponent", half_str(d)}, {"terms", to_json(t)}});
    return {{"alphabet", alpha},
            {"truncation", half_str(s.order2())},
            {"shift", to_json(s.shift().value())},
            {"super", s.is_super()},
            {"coefficients", coeffs}};
}

}  // namespace hookdual
