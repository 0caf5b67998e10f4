#pragma once
// Chevalley-Eilenberg cochain and chain complexes of Lie superalgebras, split into weight blocks.

#include "hookdual/finite_reps.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hookdual {

// Lie superalgebra with a Z-grading, e.g. a truncated loop algebra. gweight may be empty.
struct GradedAlgebra {
    LieSuperalgebra lie;
    std::vector<int> grade;
    std::vector<EpsVec> gweight;

    int dim() const { return lie.dim; }
    static GradedAlgebra ungraded(const LieSuperalgebra& g);
};

template <class F>
struct ModuleMatrices {
    int dim = 0;
    std::vector<int> parity;
    std::vector<int> grade;
    std::vector<EpsVec> gweight;
    std::vector<std::vector<SparseVec<F>>> action;  // action[x][j] = x . v_j

    // Exact check of x.(y.v) - (-1)^{xy} y.(x.v) = [x,y].v on every basis vector.
    bool is_representation(const GradedAlgebra& a) const;
};

template <class F>
ModuleMatrices<F> trivial_module(const GradedAlgebra& a);
template <class F>
ModuleMatrices<F> adjoint_module(const GradedAlgebra& a);
// A finite-dimensional module of a simple algebra, on the basis of algebra_basis(id).
ModuleMatrices<Rational> finite_module_matrices(const FiniteModule& m);

// Element of Sym(Pi g): sorted basis indices; an even x (odd in Pi g) appears at most once.
using Monomial = std::vector<int>;

// Reorder a word of Pi g into its sorted monomial; the Koszul sign, or nullopt when it vanishes.
std::optional<int> canonicalize(std::vector<int>& word, const std::vector<int>& parity);

enum class CEDirection { Cochain, Chain };

struct CEBasisElement {
    Monomial mono;
    int vec = 0;
    int weight = 0;
    int parity = 0;
    EpsVec gweight;
};

using CEBlockKey = std::pair<int, EpsVec>;

struct CEHomologyEntry {
    int degree = 0;
    int weight = 0;
    EpsVec gweight;
    long dim = 0;
};

// C^n = Hom(Sym^n(Pi g), M) with d_n, or C_n = M (x) Sym^n(Pi g) with partial_n, with the
// exponents A_i, A_ij, B_i, B_ij and k_i = x_1 + ... + x_i + i. Only weights <= max_weight are
// kept; since the differentials preserve weight this is a direct summand.
template <class F>
class CEComplex {
public:
    CEComplex(const GradedAlgebra& algebra, const ModuleMatrices<F>& module, CEDirection direction,
              int max_degree, int max_weight);

    CEDirection direction() const { return direction_; }
    int max_degree() const { return max_degree_; }
    int max_weight() const { return max_weight_; }
    // Degrees 0 .. max_degree + 1.
    const std::vector<CEBasisElement>& basis(int degree) const { return basis_.at(static_cast<std::size_t>(degree)); }
    // Cochains: d_n, columns indexed by C^n, n = 0..max_degree.
    // Chains: partial_n, columns indexed by C_n, n = 1..max_degree + 1 (entry 0 is empty).
    const std::vector<SparseVec<F>>& differential(int n) const { return diff_.at(static_cast<std::size_t>(n)); }

    // Exact d^2 = 0; the first offending basis element on failure.
    std::optional<std::string> square_zero_failure() const;
    // (Co)homology dimensions for degrees 0..max_degree, one entry per nonzero block.
    std::vector<CEHomologyEntry> homology() const;

    int index_of(int degree, const Monomial& mono, int vec) const;

private:
    std::size_t block_rank(int n, const CEBlockKey& key) const;

    CEDirection direction_;
    int max_degree_;
    int max_weight_;
    std::vector<std::vector<CEBasisElement>> basis_;
    std::vector<std::map<std::pair<Monomial, int>, int>> index_;
    std::vector<std::vector<SparseVec<F>>> diff_;
};

// Jacobi-valid Lie superalgebras of dimension <= max_dim with random structure constants: 2-step
// nilpotent ones and random parity-preserving base changes of small simple and semidirect algebras.
// Deterministic in the seed; each result passes super_antisymmetric and super_jacobi.
std::vector<LieSuperalgebra> random_superalgebras(std::uint64_t seed, int count, int max_dim = 8);

// Apply a sparse matrix (columns) to a sparse vector.
template <class F>
SparseVec<F> apply_columns(const std::vector<SparseVec<F>>& m, const SparseVec<F>& v) {
    SparseVec<F> out;
    for (const auto& [j, c] : v) axpy(out, c, m[static_cast<std::size_t>(j)]);
    return out;
}

}  // namespace hookdual
