#include "hookdual/level_scalar.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hookdual {

std::string rational_str(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    r = a;
    q = Poly();
    if (a.degree() < b.degree()) return;
    std::vector<Rational> qc(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational lb = b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        Rational f = r.lead() / lb;
        qc[shift] = f;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[j + shift] -= f * b.c_[j];
        r.trim();
    }
    q = Poly(std::move(qc));
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    Poly r = *this;
    r *= Rational(1) / lead();
    return r;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Poly::str(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (c < 0) os << "-";
        else if (!first) os << "+";
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

LevelScalar::LevelScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("LevelScalar with zero denominator");
    normalize();
}

void LevelScalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divmod(num_, g, q, r);
            num_ = std::move(q);
            Poly::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    Rational l = den_.lead();
    if (l != 1) {
        Rational inv = Rational(1) / l;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational LevelScalar::constant_value() const {
    if (!is_constant()) throw std::logic_error("LevelScalar is not constant: " + str());
    return num_.coeff(0);
}

LevelScalar LevelScalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(k)");
    return LevelScalar(den_, num_);
}

LevelScalar LevelScalar::operator-() const {
    LevelScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

LevelScalar& LevelScalar::operator+=(const LevelScalar& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

LevelScalar& LevelScalar::operator-=(const LevelScalar& o) { return *this += -o; }

LevelScalar& LevelScalar::operator*=(const LevelScalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        *this = LevelScalar();
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

LevelScalar& LevelScalar::operator/=(const LevelScalar& o) { return *this *= o.inverse(); }

Rational LevelScalar::eval(const Rational& k0) const {
    Rational d = den_.eval(k0);
    if (d == 0) throw std::domain_error("LevelScalar pole at evaluation point");
    return num_.eval(k0) / d;
}

LevelScalar LevelScalar::compose(const LevelScalar& s) const {
    auto horner = [&](const Poly& p) {
        LevelScalar acc;
        const auto& c = p.coeffs();
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * s + LevelScalar(c[i]);
        return acc;
    };
    return horner(num_) / horner(den_);
}

std::string LevelScalar::str() const {
    if (den_ == Poly(1)) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    if (!num_.is_constant()) n = "(" + n + ")";
    return n + "/(" + d + ")";
}

std::string LevelScalar::pretty() const {
    if (den_.degree() != 1) return str();
    // num/den = c + r/(k+b) with den = k + b (monic)
    Poly q, rem;
    Poly::divmod(num_, den_, q, rem);
    if (!q.is_constant()) return str();
    const Rational b = den_.coeff(0);
    const Rational r = rem.coeff(0);
    const Rational c = q.coeff(0);
    std::ostringstream os;
    std::string kb = "k";
    if (b != 0) kb += (b > 0 ? "+" : "-") + Rational(abs(b)).get_str();
    Rational ar = abs(r);
    if (r < 0) os << "-";
    os << ar.get_num().get_str() << "/(";
    if (ar.get_den() != 1) os << ar.get_den().get_str() << "*(" << kb << ")";
    else os << kb;
    os << ")";
    if (c != 0) os << (c > 0 ? " + " : " - ") << Rational(abs(c)).get_str();
    return os.str();
}

}  // namespace hookdual
