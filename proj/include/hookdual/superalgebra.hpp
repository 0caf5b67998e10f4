#pragma once
// Lie superalgebras gl_m, sl_m, so_m, sp_2m, osp(1|2m): root data and matrix realizations.

#include "hookdual/level_scalar.hpp"
#include "hookdual/sparse_linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hookdual {

enum class Family { GL, SL, SO_ODD, SO_EVEN, SP, OSP };

// rank_param is m in gl_m, sl_m, so_{2m+1}, so_{2m}, sp_{2m}, osp(1|2m).
struct AlgebraId {
    Family family = Family::SL;
    int rank_param = 2;

    int dim() const;
    int odd_dim() const;
    int rank() const;  // number of fundamental-weight coordinates
    Rational dual_coxeter() const;
    int lacing() const;
    bool is_super() const { return family == Family::OSP; }
    bool is_abelian() const;

    // "gl3", "sl2", "so5", "so4", "sp4", "osp12" (osp(1|2)), "osp14".
    std::string name() const;
    static AlgebraId parse(const std::string& s);

    friend bool operator==(const AlgebraId& a, const AlgebraId& b) {
        return a.family == b.family && a.rank_param == b.rank_param;
    }
    friend bool operator<(const AlgebraId& a, const AlgebraId& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.rank_param < b.rank_param;
    }
};

AlgebraId gl(int m);
AlgebraId sl(int m);
AlgebraId so(int n);  // so_n, odd or even
AlgebraId sp(int two_m);
AlgebraId osp1(int two_m);

using EpsVec = std::vector<Rational>;

struct Root {
    EpsVec eps;
    bool odd = false;
};

// Root system in the epsilon basis; (eps_i|eps_j) = eps_norm * delta_ij under the normalized form.
class RootDatum {
public:
    explicit RootDatum(AlgebraId id);

    const AlgebraId& id() const { return id_; }
    int rank() const { return rank_; }
    int eps_dim() const { return eps_dim_; }
    const Rational& eps_norm() const { return eps_norm_; }
    const std::vector<Root>& simple_roots() const { return simple_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const std::vector<EpsVec>& fundamental() const { return fundamental_; }
    const EpsVec& rho() const { return rho_; }

    Rational inner(const EpsVec& a, const EpsVec& b) const;
    EpsVec to_eps(const std::vector<int>& coords) const;
    // Fundamental coordinates; throws if eps is not in the weight lattice.
    std::vector<int> to_fund(const EpsVec& eps) const;
    std::vector<Rational> to_fund_rational(const EpsVec& eps) const;
    bool is_dominant(const std::vector<int>& coords) const;

    // Even Weyl group, generated by reflections in weyl_roots().
    const std::vector<EpsVec>& weyl_roots() const { return weyl_roots_; }
    EpsVec reflect(int i, const EpsVec& v) const;
    const std::vector<int>& longest_word() const { return longest_; }
    std::int64_t weyl_order() const;

    // Coefficients of a root in the simple roots.
    std::vector<Rational> simple_coefficients(const EpsVec& root) const;
    int height(const EpsVec& root) const;

private:
    AlgebraId id_;
    int rank_ = 0;
    int eps_dim_ = 0;
    Rational eps_norm_ = 1;
    std::vector<Root> simple_;
    std::vector<Root> positive_;
    std::vector<EpsVec> fundamental_;
    EpsVec rho_;
    std::vector<EpsVec> weyl_roots_;
    std::vector<int> longest_;
};

// Dense square rational matrix.
struct Mat {
    int n = 0;
    std::vector<Rational> a;
    explicit Mat(int size = 0) : n(size), a(static_cast<std::size_t>(size) * size, Rational(0)) {}
    Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};
Mat operator*(const Mat& x, const Mat& y);

// Structure constants of a finite-dimensional Lie superalgebra on a parity-homogeneous basis.
struct LieSuperalgebra {
    int dim = 0;
    std::vector<int> parity;
    std::vector<std::string> labels;
    std::vector<SparseVec<Rational>> bracket;  // bracket[i*dim+j] = [x_i, x_j]

    const SparseVec<Rational>& br(int i, int j) const {
        return bracket[static_cast<std::size_t>(i) * dim + j];
    }
    SparseVec<Rational> bracket_of(const SparseVec<Rational>& x, const SparseVec<Rational>& y) const;
    // Exact residual checks; true when every residual vanishes.
    bool super_antisymmetric() const;
    bool super_jacobi() const;
};

// Built algebra: basis ordered n+ (by height), Cartan, n- (mirrored).
struct SuperBasis : LieSuperalgebra {
    AlgebraId id;
    std::vector<std::vector<Rational>> form;  // normalized invariant form on the basis
    std::vector<int> positive, cartan, negative;
    std::vector<EpsVec> weight;  // eps-weight of each basis element

    // Defining representation.
    int nat_dim = 0;
    std::vector<int> nat_parity;
    std::vector<EpsVec> nat_weight;
    std::vector<Mat> matrices;

    SparseVec<Rational> coordinates(const Mat& m) const;
    Rational form_value(const SparseVec<Rational>& x, const SparseVec<Rational>& y) const;
    // Supertrace of ad x ad y.
    Rational killing(int i, int j) const;
    bool form_invariant() const;

    // Coordinate extraction data.
    std::vector<int> probe_entries;
    std::vector<std::vector<Rational>> probe_inverse;
};

enum class FormNormalization { Normalized, Trace, HalfTrace, MinusSupertrace, HalfSupertrace };

SuperBasis build_algebra(const AlgebraId& id);
// Rescales the form to a trace-type normalization of the defining representation.
SuperBasis build_algebra(const AlgebraId& id, FormNormalization norm);

// Chevalley anti-involution as a matrix on basis coordinates: image[i] = t(x_i).
std::vector<SparseVec<Rational>> chevalley_transpose(const SuperBasis& b);

Rational dual_coxeter(const AlgebraId& id);

}  // namespace hookdual
