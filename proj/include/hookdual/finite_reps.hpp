#pragma once
// Weights, finite-dimensional characters, tensor decompositions and explicit modules.

#include "hookdual/superalgebra.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hookdual {

// Shared immutable algebra data, built once per id.
const RootDatum& root_datum(const AlgebraId& id);
const SuperBasis& algebra_basis(const AlgebraId& id);

struct Weight {
    AlgebraId algebra;
    std::vector<int> coords;  // fundamental-weight coordinates

    bool is_dominant() const;
    EpsVec eps() const;
    static Weight from_eps(const AlgebraId& id, const EpsVec& e);
    static Weight zero(const AlgebraId& id);
    static Weight fundamental(const AlgebraId& id, int i);  // varpi_i, 1-based

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.algebra == b.algebra && a.coords == b.coords;
    }
    friend bool operator<(const Weight& a, const Weight& b) {
        if (!(a.algebra == b.algebra)) return a.algebra < b.algebra;
        return a.coords < b.coords;
    }
};

std::string weight_str(const Weight& w);

// Multiplicity split by parity; the total is the ordinary multiplicity.
struct ParityMult {
    long long even = 0;
    long long odd = 0;
    long long total() const { return even + odd; }
    long long super() const { return even - odd; }
    bool is_zero() const { return even == 0 && odd == 0; }
    ParityMult flipped() const { return {odd, even}; }
    friend ParityMult operator+(ParityMult a, ParityMult b) { return {a.even + b.even, a.odd + b.odd}; }
    friend ParityMult operator-(ParityMult a, ParityMult b) { return {a.even - b.even, a.odd - b.odd}; }
    friend ParityMult operator*(ParityMult a, ParityMult b) {
        return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
    }
    friend bool operator==(ParityMult a, ParityMult b) { return a.even == b.even && a.odd == b.odd; }
};

// Element of the group ring of the weight lattice, keyed by fundamental coordinates.
class FiniteChar {
public:
    FiniteChar() = default;
    explicit FiniteChar(AlgebraId id) : algebra_(id) {}

    const AlgebraId& algebra() const { return algebra_; }
    const std::map<std::vector<int>, ParityMult>& terms() const { return terms_; }
    ParityMult at(const std::vector<int>& w) const;
    void add(const std::vector<int>& w, ParityMult m);
    bool empty() const { return terms_.empty(); }

    long long dim() const;
    long long sdim() const;
    bool is_weyl_invariant() const;
    FiniteChar parity_flipped() const;

    FiniteChar& operator+=(const FiniteChar& o);
    FiniteChar& operator-=(const FiniteChar& o);
    friend FiniteChar operator*(const FiniteChar& a, const FiniteChar& b);
    friend bool operator==(const FiniteChar& a, const FiniteChar& b) {
        return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
    }

private:
    AlgebraId algebra_;
    std::map<std::vector<int>, ParityMult> terms_;
};

// lambda^dagger = -w0 lambda.
Weight dual_weight(const Weight& lambda);

// Membership in the lattice R of tensor-representation highest weights.
bool in_R(const Weight& lambda);

// The algebra paired under the so(2m+1) <-> osp(1|2m) dictionary; identity otherwise.
AlgebraId s_algebra(const AlgebraId& id);
// lambda -> ^s lambda; for osp(1|2m) and so(2m+1) doubles/halves the last coordinate.
Weight bo_map(const Weight& lambda);

// Character of L_lambda; highest weight vector even.
const FiniteChar& character(const Weight& lambda);

// Multiplicities of L_nu (even part) and Pi L_nu (odd part) in L_lambda (x) L_mu.
std::map<std::vector<int>, ParityMult> tensor_decompose(const Weight& lambda, const Weight& mu);
// Same, for an arbitrary Weyl-invariant character; throws on negative multiplicities.
std::map<std::vector<int>, ParityMult> decompose(const FiniteChar& ch);

struct StrClass {
    Weight weight;
    Rational normalization = 1;
};

struct TrivialMultiplicity {
    int multiplicity = 0;
    std::optional<StrClass> witness;
};
TrivialMultiplicity trivial_multiplicity(const Weight& lambda, const Weight& mu);

// Explicit finite-dimensional module: action[x][j] = x . v_j.
struct FiniteModule {
    AlgebraId algebra;
    int dim = 0;
    std::vector<int> parity;
    std::vector<EpsVec> weight;
    std::vector<std::vector<SparseVec<Rational>>> action;

    static FiniteModule trivial(const AlgebraId& id);
    // L_lambda realized inside tensor powers of the defining representation.
    static FiniteModule irreducible(const Weight& lambda);

    SparseVec<Rational> act(int x, const SparseVec<Rational>& v) const;
    bool is_representation() const;
    FiniteChar character() const;
};

// Basis of (A (x) B)^g, vectors indexed by i * B.dim + j.
std::vector<SparseVec<Rational>> invariant_tensors(const FiniteModule& a, const FiniteModule& b);

}  // namespace hookdual
