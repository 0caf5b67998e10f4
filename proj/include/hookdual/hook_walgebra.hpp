#pragma once
// Hook-type W-superalgebras: table data, level maps, vacuum characters and the duality checks.

#include "hookdual/affine_chars.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hookdual {

enum class HookType { A, B, C, D, O };
enum class HookSign { Plus, Minus };

char hook_type_char(HookType x);
HookType parse_hook_type(const std::string& s);
// The Y of the pair (X, Y): B <-> O, others fixed.
HookType dual_type(HookType x);

struct HookLabel {
    HookType type = HookType::A;
    HookSign sign = HookSign::Plus;
    int n = 1;
    int m = 1;

    std::string name() const;  // e.g. "C+(1,2)"
};

// One column of the W-algebra table. Levels are in the label's own level variable k.
struct HookData {
    std::string g;     // e.g. "osp(5|2)"
    std::string form;  // "tr", "1/2 tr", "str", "-str", "1/2 str"
    Rational h;        // dual Coxeter number of g
    std::optional<AlgebraId> a;  // absent when a = sl_1
    AlgebraId b;
    LevelScalar k_b;
    Rational delta_rho;  // primary conformal weight
    bool primary_flipped = false;  // Pi applied to the standard module
};

HookData hook_data(const HookLabel& label);

// Exponents of a shifted by one.
std::vector<int> shifted_exponents(const AlgebraId& a);

struct Generator {
    int d2 = 2;               // twice the conformal weight
    std::vector<int> weight;  // b-weight, fundamental coordinates
    bool odd = false;
};

struct GeneratorSpectrum {
    std::vector<Generator> affine;
    std::vector<Generator> coset;
    std::vector<Generator> primary;
};

GeneratorSpectrum generator_spectrum(const HookLabel& label);

// Product of free-field factors over the strong generators, in the z-alphabet of b.
GradedSeries vacuum_char(const HookLabel& label, int order2);

// Norm of the centre current h of gl_m for X = A, as a function of the label's level.
LevelScalar heisenberg_norm(const HookLabel& label, const LevelScalar& level);

// Lowest conformal weight of V^{k_b}_lambda inside W^level_label (centre part from the h norm for X = A).
ExponentShift b_delta(const HookLabel& label, const Weight& lambda, const LevelScalar& level);

struct DualityPair {
    HookLabel plus;
    HookLabel minus;
    Rational r;
    std::pair<Rational, Rational> pq_plus;
    std::pair<Rational, Rational> pq_minus;
};

DualityPair duality_pair(HookType x, int n, int m);

enum class LevelDirection { PlusToMinus, MinusToPlus };
// l = 1/(r(k + h+)) - h-, or the inverse map.
LevelScalar level_map(const DualityPair& pair, LevelDirection dir, const LevelScalar& level = LevelScalar::k());

// alpha_plus in the level k of W_{X+}; alpha_minus in the level l of W_{Y-}.
// Throws std::logic_error unless k_b + alpha_+ = -2h_b = l_b + alpha_-.
std::pair<LevelScalar, LevelScalar> alpha_levels(const DualityPair& pair);
// h_b solved from k_b + alpha_+ = -2 h_b; throws if it depends on k.
Rational derived_b_dual_coxeter(const DualityPair& pair);

using QSeries = std::map<int, ParityMult>;  // doubled exponent -> multiplicity

struct Branching {
    AlgebraId b;
    int order2 = 0;
    std::map<std::vector<int>, QSeries> functions;  // lambda -> B_lambda, with the q^Delta_lambda included
};

// ch W = sum_lambda B_lambda(q) chi_lambda(z) / Pi_b(z,q). Throws on negative multiplicities or support outside R.
Branching extract_branching(const GradedSeries& w_char);
GradedSeries reconstruct(const Branching& br);

struct MainTheoremReport {
    bool ok = false;
    bool conjectural = false;
    int order2 = 0;
    int first_mismatch = -1;  // doubled order of the first bad coefficient
    std::string detail;
    std::vector<std::pair<std::vector<int>, Rational>> shifts;  // lambda -> s(lambda)
    std::map<int, long long> residual;  // order -> sum of |differences|
};

// Transports the branching functions of W_{X+} to W_{Y-} and compares with its vacuum character.
MainTheoremReport verify_main_theorem_char(const DualityPair& pair, int order2);

struct HeisenbergReport {
    bool ok = false;
    std::vector<std::string> failures;
};

// Change of basis between (sqrt(-1) h^+-, h^-+) and two copies of alpha_{sqrt(+-m)}, as Gram identities over Q(k)[u].
HeisenbergReport heisenberg_rotation_check(int n, int m);

struct FreeFieldPair {
    bool odd = false;
    LevelScalar coefficient = 1;
    int pole = 1;
};

// Leading pole coefficient of Y(a1_{(-1)} b1, z) Y(a2_{(-1)} b2, w) in a mode realization; poles up to 4.
LevelScalar ope_leading_check(const FreeFieldPair& a, const FreeFieldPair& b);

}  // namespace hookdual
