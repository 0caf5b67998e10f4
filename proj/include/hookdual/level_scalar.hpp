#pragma once
// Exact scalars: rationals, polynomials in the level k, and the field Q(k).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace hookdual {

using Rational = mpq_class;

// "p/q" with q >= 1, always with an explicit denominator.
std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& s);

// Polynomial in k over Q, coefficients lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);

    static Poly k() { return Poly(std::vector<Rational>{0, 1}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational eval(const Rational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    // Monic gcd (zero only if both are zero).
    static Poly gcd(Poly a, Poly b);
    Poly monic() const;

    std::string str(const char* var = "k") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Element of Q(k): num/den with den monic and gcd(num, den) = 1.
class LevelScalar {
public:
    LevelScalar() : num_(), den_(1) {}
    LevelScalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    LevelScalar(long c) : LevelScalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    LevelScalar(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    LevelScalar(Poly num, Poly den);

    static LevelScalar k() { return LevelScalar(Poly::k()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Value when constant; throws otherwise.
    Rational constant_value() const;

    LevelScalar inverse() const;
    LevelScalar operator-() const;
    LevelScalar& operator+=(const LevelScalar& o);
    LevelScalar& operator-=(const LevelScalar& o);
    LevelScalar& operator*=(const LevelScalar& o);
    LevelScalar& operator/=(const LevelScalar& o);
    friend LevelScalar operator+(LevelScalar a, const LevelScalar& b) { return a += b; }
    friend LevelScalar operator-(LevelScalar a, const LevelScalar& b) { return a -= b; }
    friend LevelScalar operator*(LevelScalar a, const LevelScalar& b) { return a *= b; }
    friend LevelScalar operator/(LevelScalar a, const LevelScalar& b) { return a /= b; }
    friend bool operator==(const LevelScalar& a, const LevelScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const LevelScalar& a, const LevelScalar& b) { return !(a == b); }

    // Substitute k -> k0; throws if the denominator vanishes there.
    Rational eval(const Rational& k0) const;
    // Substitute k -> s (composition in Q(k)).
    LevelScalar compose(const LevelScalar& s) const;

    // Compact text, e.g. "(2*k+3)/(k+1)".
    std::string str() const;
    // Partial-fraction text when the denominator is linear: "1/(4*(k+5/2)) - 3/2".
    std::string pretty() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

}  // namespace hookdual
