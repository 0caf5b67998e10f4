#pragma once
// Weyl-module characters, conformal shifts and kernel-algebra characters.

#include "hookdual/qseries.hpp"

namespace hookdual {

// Delta_lambda = (lambda|lambda+2rho) / 2(level + h) under the normalized form.
// For gl_m the centre contributes (sum eps)^2 / (2 m level).
ExponentShift delta_lowest(const Weight& lambda, const LevelScalar& level = LevelScalar::k());

// q^Delta chi_lambda / Pi, truncated at q^{order2/2} relative to the shift.
GradedSeries weyl_module_char(const Weight& lambda, const LevelScalar& level, int order2);

// Highest weight of the defining representation (eps_1).
Weight natural_weight(const AlgebraId& id);

// Gluing data for A^n[g, k] = sum_lambda V^k_lambda (x) V^l_{s lambda dagger}.
struct KernelSpec {
    AlgebraId algebra;  // g; for gl_m the sl_m pieces plus a lattice and a Heisenberg factor
    int n = 1;
    Rational a, b, c;
    Rational h;          // dual Coxeter number of g (sl_m for gl_m)
    Rational h_partner;  // dual Coxeter number of ^s g
    LevelScalar k = LevelScalar::k();
    LevelScalar ell;
    Rational delta_K;    // tabulated lowest weight of the natural sector
    bool natural_odd = false;

    AlgebraId partner() const { return s_algebra(algebra); }
    // Algebra whose Weyl modules carry the sectors (sl_m for gl_m, m >= 2).
    std::optional<AlgebraId> sector_algebra() const;
    // 1/(a(k+h)) + 1/(b(l+h')) - cn, identically zero for a valid spec.
    LevelScalar gluing_residual() const;
};

KernelSpec kernel_spec(const AlgebraId& g, int n);
// The level on the partner side from the gluing relation.
LevelScalar gluing_partner_level(const AlgebraId& g, int n, const LevelScalar& k);

struct KernelSector {
    std::optional<Weight> lambda;   // absent for gl_1
    std::optional<Weight> partner;  // ^s lambda^dagger
    int lattice_charge = 0;         // gl only
    Rational lowest;                // level-free lowest conformal weight
    int parity = 0;
};

// Lowest weight and parity of a sector; throws LevelMismatch if the level parts do not cancel.
KernelSector kernel_sector(const KernelSpec& spec, const std::optional<Weight>& lambda, int lattice_charge);
// The rho_g (x) rho_{s g}^dagger sector.
KernelSector natural_sector(const KernelSpec& spec);

struct KernelChar {
    KernelSpec spec;
    GradedSeries series;
    std::vector<KernelSector> sectors;
    int weight_bound = 0;  // certified: every omitted sector starts above the truncation
    bool conjectural = false;
};

// n >= 1 only: for n <= 0 the sector weights are unbounded below.
KernelChar kernel_char(const KernelSpec& spec, int order2, int weight_bound = 1);

// Invariant pairing rho (x) rho^dagger -> C is one-dimensional and nondegenerate, on both sides.
bool kernel_pairing_check(const AlgebraId& g);

}  // namespace hookdual
