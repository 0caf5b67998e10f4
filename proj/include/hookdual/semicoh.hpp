#pragma once
// Truncated relative semi-infinite cohomology of V^k_lambda (x) V^l_mu with l = -k - 2h,
// its filtrations, Euler-Poincare checks, loop (co)homology and the cohomology-homology pairing.

#include "hookdual/affine_modules.hpp"
#include "hookdual/qseries.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hookdual {

// Ghost generators phi*_{i,-n} (n >= 0) and phi_{i,-n} (n >= 1); the relative wedge omits phi*_{i,0}.
// Code 2 (n dim + i) for phi*, 2 (n dim + i) + 1 for phi. Sorted codes form a monomial.
using FockState = std::pair<int, Monomial>;  // module state, ghost monomial
using FockVec = std::map<FockState, LevelScalar>;

// Level l with kappa_1 + kappa_2 = -Killing: l = -k - 2h, h from Killing = 2h (|).
LevelScalar complement_level(const AlgebraId& id, const LevelScalar& k = LevelScalar::k());

enum class Filtration { F, G };

class RelativeComplex {
public:
    RelativeComplex(const Weight& lambda, const Weight& mu, int max_weight, int threads = 1);

    const AlgebraId& algebra() const { return module_.algebra(); }
    const TensorModule& module() const { return module_; }
    const LevelScalar& ell() const { return ell_; }
    int max_weight() const { return max_weight_; }
    int min_degree(int weight) const { return -weight; }
    int max_degree(int weight) const { return weight; }

    // Zero g-weight states of a slice and a basis of its g-invariants.
    const std::vector<FockState>& states(int weight, int degree) const;
    const std::vector<SparseVec<Rational>>& invariants(int weight, int degree) const;
    FockVec embed(int weight, int degree, const SparseVec<Rational>& v) const;

    int weight(const FockState& s) const;
    int degree(const FockState& s) const;
    int parity(const FockState& s) const;
    int delta(const FockState& s, Filtration f) const;
    std::string label(const FockState& s) const;

    // The differential d, including phi*_0 components (absent on invariants).
    FockVec d(const FockVec& v) const;
    // Total action of basis element x of g.
    FockVec g_action(int x, const FockVec& v) const;
    // Pieces of gr d from their left-derivative formulas: d_{1,rel} and d_2 for F or G.
    FockVec piece(Filtration f, int which, const FockVec& v) const;

    static bool has_phi_star_zero(const FockVec& v, int dim);

private:
    struct GhostTerm {
        int coeff;
        Monomial mono;
    };
    struct ModeOp {
        bool star;
        int index;
        int mode;
    };

    int code(bool star, int index, int n) const { return 2 * (n * dim_ + index) + (star ? 0 : 1); }
    int ghost_parity(int c) const { return (parity_[static_cast<std::size_t>((c / 2) % dim_)] + 1) % 2; }
    std::vector<GhostTerm> create(int c, const Monomial& m) const;
    std::vector<GhostTerm> derive(int c, const Monomial& m) const;
    std::vector<GhostTerm> apply_mode(const ModeOp& op, const Monomial& m) const;
    std::vector<GhostTerm> apply_normal_ordered(std::vector<ModeOp> ops, const Monomial& m) const;
    const SparseVec<LevelScalar>& act(int a, int n, int s) const;

    TensorModule module_;
    LevelScalar ell_;
    int max_weight_;
    int dim_;
    std::vector<int> parity_;
    std::vector<std::tuple<int, int, int, Rational>> structure_;  // (i, j, k, c_ij^k)
    std::vector<std::vector<SparseVec<LevelScalar>>> act_;       // [(n + N) dim + a][s]
    std::map<std::pair<int, int>, std::vector<FockState>> states_;
    std::map<std::pair<int, int>, std::vector<SparseVec<Rational>>> invariants_;
};

struct SemicohBlock {
    int weight = 0;
    int degree = 0;
    long states = 0;
    long invariants = 0;
    long rank = 0;  // rank of d leaving the slice
    long dim = 0;   // cohomology
    int parity = 0; // common parity of the invariants
};

struct WitnessTerm {
    std::string state;
    LevelScalar coeff;
};

struct SemicohWitness {
    int weight = 0;
    std::vector<WitnessTerm> terms;
    bool invariant = false;
    bool closed = false;
    bool non_exact = false;
};

struct SemicohReport {
    Weight lambda, mu;
    LevelScalar ell;
    int max_weight = 0;
    std::vector<SemicohBlock> blocks;
    bool relative = true;       // phi*_0 components of d cancel on invariants
    bool square_zero = true;
    std::optional<SemicohWitness> witness;
    std::vector<std::string> failures;

    long dim(int weight, int degree) const;
    long total_dim() const;
    bool concentrated_in_degree_zero() const;
};

// Every weight <= max_weight is exact: the weight-w slice is a finite subcomplex and is built in full.
SemicohReport relative_semicoh(const Weight& lambda, const Weight& mu, int max_weight, int threads = 1);
SemicohReport relative_semicoh(const RelativeComplex& c, int threads = 1);

// invariant_part(ch V^k_lambda ch V^l_mu Pi^2) as a supercharacter.
GradedSeries euler_poincare_char(const Weight& lambda, const Weight& mu, int max_weight);

struct EulerPoincareReport {
    GradedSeries series;
    bool matches_delta = false;      // equals delta_{lambda, mu dagger} q^0
    std::vector<long> ep_coeff;      // per weight
    std::vector<long> invariant_sum; // sum over invariants of (-1)^parity
    std::vector<long> cohomology_sum;// sum over degrees of (-1)^parity dim H
    bool consistent = false;
};
EulerPoincareReport ep_check(const Weight& lambda, const Weight& mu, int max_weight, int threads = 1);
EulerPoincareReport ep_check(const RelativeComplex& c, const SemicohReport& h);

// sch of the relative wedge against Pi^2.
bool wedge_character_check(const AlgebraId& id, int max_weight);

struct SplitBlock {
    int weight = 0;
    int degree = 0;
    long e1 = 0;        // cohomology of gr d on invariants
    long predicted = 0; // (H(L+, M) (x) H(L-, C))^g for F, (H(L-, M) (x) H(L+, C))^g for G
};

struct SplitReport {
    Filtration filtration = Filtration::F;
    bool preserves_filtration = true;
    bool split = true;         // gr d = d_1 + d_2, each homogeneous
    bool relations = true;     // d_1^2 = d_2^2 = d_1 d_2 + d_2 d_1 = 0
    std::vector<SplitBlock> blocks;
    std::vector<std::string> failures;
    bool ok() const;
};
SplitReport filtration_split_check(const RelativeComplex& c, Filtration f, int max_weight);

// Loop (co)homology; entries per (degree, weight, g-weight).
std::vector<CEHomologyEntry> homology_of_loop_minus(const AffineModule& m, int max_degree);
std::vector<CEHomologyEntry> cohomology_of_loop_plus(const AffineModule& m, int max_degree);
std::vector<CEHomologyEntry> homology_of_loop_minus_trivial(const AlgebraId& id, int max_weight);
std::vector<CEHomologyEntry> cohomology_of_loop_plus_trivial(const AlgebraId& id, int max_weight);

// Multiplicity of the trivial module in a character given by eps-weight dimensions.
long invariant_dimension(const AlgebraId& id, const std::map<EpsVec, long>& ch);

struct VanishingReport {
    bool top_in_degree_zero = false;   // weight-0 part of degree 0 is the top of the module
    bool degree_zero_only_top = false; // degree 0 has nothing above weight 0
    bool higher_vanish = false;
    std::vector<CEHomologyEntry> entries;
};
VanishingReport loop_minus_vanishing(const Weight& lambda, int max_weight);
VanishingReport loop_plus_vanishing(const Weight& lambda, int max_weight);
VanishingReport loop_minus_vanishing(const Weight& lambda, const Weight& mu, int max_weight);
VanishingReport loop_plus_vanishing(const Weight& lambda, const Weight& mu, int max_weight);

struct PairingDegree {
    int degree = 0;
    int weight = 0;
    long cohomology = 0;
    long homology = 0;
    long rank = 0;
};

struct PairingReport {
    bool anti_isomorphism = false;  // t[x, y] = [t y, t x]
    bool contravariant = false;     // Psi(m1, x m2) = Psi(t x m1, m2)
    bool compatible = false;        // Psi_{n+1}(d f, P) = Psi_n(f, partial P)
    long pairs_checked = 0;
    std::vector<PairingDegree> degrees;
    bool nondegenerate = false;
    std::optional<std::string> failure;
};
// Cochains of L+ and chains of L- with coefficients in V^k_lambda, paired through the contravariant form.
PairingReport pairing_check(const Weight& lambda, int max_weight, int max_degree);

}  // namespace hookdual
