#pragma once
// Truncated q^(1/2)-series with character-valued coefficients.

#include "hookdual/finite_reps.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace hookdual {

// Raised when two exponents are compared although their level-dependent parts differ.
struct LevelMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

// Conformal exponent in Q(k); rational comparisons only when the level parts cancel.
class ExponentShift {
public:
    ExponentShift() = default;
    ExponentShift(const Rational& r) : value_(r) {}  // NOLINT(google-explicit-constructor)
    explicit ExponentShift(LevelScalar v) : value_(std::move(v)) {}

    // c / (k + h) as a formal level term.
    static ExponentShift level_term(const Rational& c, const Rational& h);

    const LevelScalar& value() const { return value_; }
    bool is_level_free() const { return value_.is_constant(); }
    // Value when level free; throws LevelMismatch otherwise.
    Rational rational() const;
    // Split r + c/(k+h) when the denominator is linear.
    Rational rational_part() const;

    friend ExponentShift operator+(const ExponentShift& a, const ExponentShift& b) {
        return ExponentShift(a.value_ + b.value_);
    }
    friend ExponentShift operator-(const ExponentShift& a, const ExponentShift& b) {
        return ExponentShift(a.value_ - b.value_);
    }
    friend bool operator==(const ExponentShift& a, const ExponentShift& b) { return a.value_ == b.value_; }
    // Strict order; throws LevelMismatch unless a - b is level free.
    friend bool operator<(const ExponentShift& a, const ExponentShift& b) { return (a - b).rational() < 0; }

    std::string str() const { return value_.pretty(); }

private:
    LevelScalar value_;
};

// z-variables of one or more algebras; weights are concatenated fundamental coordinates.
using Alphabet = std::vector<AlgebraId>;
using CharTerms = std::map<std::vector<int>, ParityMult>;

int alphabet_width(const Alphabet& a);
EpsVec alphabet_eps(const Alphabet& a, const std::vector<int>& coords);

// q^shift * sum_d q^{d/2} c_d; coefficients known exactly for d <= order2.
class GradedSeries {
public:
    GradedSeries() = default;
    GradedSeries(Alphabet alphabet, int order2) : alphabet_(std::move(alphabet)), order2_(order2) {}

    static GradedSeries one(const Alphabet& a, int order2);
    static GradedSeries monomial(const Alphabet& a, int d2, const std::vector<int>& w, ParityMult m, int order2);
    // Finite character placed at q^0 in slot `slot` of the alphabet.
    static GradedSeries from_char(const Alphabet& a, std::size_t slot, const FiniteChar& ch, int order2);

    const Alphabet& alphabet() const { return alphabet_; }
    int order2() const { return order2_; }
    const ExponentShift& shift() const { return shift_; }
    bool is_super() const { return super_; }
    const std::map<int, CharTerms>& coeffs() const { return coeffs_; }
    // Coefficient of q^{shift + d2/2}; throws beyond the valid order.
    const CharTerms& coeff(int d2) const;
    bool is_zero() const { return coeffs_.empty(); }
    int lowest() const;  // smallest d2 with a nonzero coefficient, or order2 + 1

    void add_term(int d2, const std::vector<int>& w, ParityMult m);
    GradedSeries truncated(int order2) const;
    GradedSeries with_shift(const ExponentShift& s) const;
    GradedSeries q_power(int d2) const;  // multiply by q^{d2/2}
    GradedSeries supercharacter() const;
    GradedSeries character() const;
    GradedSeries parity_flipped() const;
    // Product of series in different alphabets; alphabets concatenate.
    GradedSeries external(const GradedSeries& o) const;
    // Series inverse; the constant term must be the even unit at weight zero.
    GradedSeries inverse() const;

    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    // Equal up to the smaller valid order.
    friend bool operator==(const GradedSeries& a, const GradedSeries& b);

private:
    void check_compatible(const GradedSeries& o) const;

    Alphabet alphabet_;
    int order2_ = 0;
    ExponentShift shift_;
    bool super_ = false;
    std::map<int, CharTerms> coeffs_;
};

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);

// Free generator of conformal weight d2/2 and given weight: prod_{j>=0} 1/(1-z q^{d/2+j}) or (1+z q^{d/2+j}).
GradedSeries free_generator(const Alphabet& a, int d2, const std::vector<int>& w, bool odd, int order2);

// Character of U(t^{-1} g[t^{-1}]) = 1/Pi(z,q), with parity.
GradedSeries loop_pbw_char(const AlgebraId& id, int order2);
// Pi(z,q).
GradedSeries eta_like_product(const AlgebraId& id, int order2);

// Multiplicity of the trivial module at each order; single empty alphabet.
// For parity-refined input the result keeps (L_0, Pi L_0) counts; for supercharacters a signed count.
GradedSeries invariant_part(const GradedSeries& s);

// Highest-weight stripping of one coefficient into irreducible products.
CharTerms strip_highest_weights(const Alphabet& a, const CharTerms& c, bool super, bool allow_negative);

// Character of L_{w_1} x ... x L_{w_r} in a multi-algebra alphabet.
CharTerms product_character(const Alphabet& a, const std::vector<int>& w);

// JSON helpers.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const LevelScalar& s);
nlohmann::json to_json(const FiniteChar& c);
nlohmann::json to_json(const CharTerms& c);
nlohmann::json to_json(const GradedSeries& s);
std::string half_str(int d2);

}  // namespace hookdual
