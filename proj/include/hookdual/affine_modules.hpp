#pragma once
// Truncated loop algebras and PBW Weyl modules V^k_lambda at a symbolic level.

#include "hookdual/ce_complex.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace hookdual {

// t^{-1} g[t^{-1}] and t g[t] with modes 1..max_weight; basis index (n-1)*dim(g) + a for x_a t^{-+n}.
GradedAlgebra loop_minus(const AlgebraId& id, int max_weight);
GradedAlgebra loop_plus(const AlgebraId& id, int max_weight);

// A module of the loop algebra (with central element acting by a scalar) truncated at a weight.
// Weights above the truncation form a submodule for negative modes, so the truncation is a quotient.
class AffineModule {
public:
    virtual ~AffineModule() = default;
    virtual const AlgebraId& algebra() const = 0;
    virtual int size() const = 0;
    virtual int max_weight() const = 0;
    virtual int grade(int s) const = 0;
    virtual int parity(int s) const = 0;
    virtual const EpsVec& gweight(int s) const = 0;
    // x_a t^n . s
    virtual const SparseVec<LevelScalar>& act(int a, int n, int s) const = 0;
};

class WeylModule final : public AffineModule {
public:
    WeylModule(const Weight& lambda, LevelScalar level, int max_weight);

    const AlgebraId& algebra() const override { return lambda_.algebra; }
    const Weight& lambda() const { return lambda_; }
    const LevelScalar& level() const { return level_; }
    int size() const override { return static_cast<int>(states_.size()); }
    int max_weight() const override { return max_weight_; }
    int grade(int s) const override { return grade_[static_cast<std::size_t>(s)]; }
    int parity(int s) const override { return parity_[static_cast<std::size_t>(s)]; }
    const EpsVec& gweight(int s) const override { return gweight_[static_cast<std::size_t>(s)]; }
    const SparseVec<LevelScalar>& act(int a, int n, int s) const override;

    // PBW monomial (codes (n-1)*dim + a, sorted) and vector of L_lambda.
    const std::pair<Monomial, int>& state(int s) const { return states_[static_cast<std::size_t>(s)]; }
    int index_of(const Monomial& mono, int v) const;
    const FiniteModule& top() const { return top_; }

private:
    using Terms = std::map<std::pair<Monomial, int>, LevelScalar>;
    using MonoTerms = std::map<Monomial, LevelScalar>;

    int code_weight(int code) const { return code / dim_ + 1; }
    int code_algebra(int code) const { return code % dim_; }
    int mono_weight(const Monomial& m) const;
    const MonoTerms& insert(int code, const Monomial& mono) const;
    const Terms& lower(int a, int n, const Monomial& mono, int v) const;

    Weight lambda_;
    LevelScalar level_;
    int max_weight_;
    int dim_;
    const SuperBasis* basis_;
    FiniteModule top_;
    std::vector<std::pair<Monomial, int>> states_;
    std::map<std::pair<Monomial, int>, int> index_;
    std::vector<int> grade_, parity_;
    std::vector<EpsVec> gweight_;
    mutable std::map<std::pair<int, Monomial>, MonoTerms> insert_cache_;
    mutable std::map<std::tuple<int, int, Monomial, int>, Terms> lower_cache_;
    mutable std::map<std::tuple<int, int, int>, SparseVec<LevelScalar>> act_cache_;
};

// V^k_lambda (x) V^l_mu, truncated at the total weight.
class TensorModule final : public AffineModule {
public:
    TensorModule(WeylModule first, WeylModule second, int max_weight);

    const AlgebraId& algebra() const override { return first_.algebra(); }
    int size() const override { return static_cast<int>(pairs_.size()); }
    int max_weight() const override { return max_weight_; }
    int grade(int s) const override { return grade_[static_cast<std::size_t>(s)]; }
    int parity(int s) const override { return parity_[static_cast<std::size_t>(s)]; }
    const EpsVec& gweight(int s) const override { return gweight_[static_cast<std::size_t>(s)]; }
    const SparseVec<LevelScalar>& act(int a, int n, int s) const override;

    const WeylModule& first() const { return first_; }
    const WeylModule& second() const { return second_; }
    const std::pair<int, int>& pair(int s) const { return pairs_[static_cast<std::size_t>(s)]; }
    int index_of(int i, int j) const;

private:
    WeylModule first_, second_;
    int max_weight_;
    std::vector<std::pair<int, int>> pairs_;
    std::map<std::pair<int, int>, int> index_;
    std::vector<int> grade_, parity_;
    std::vector<EpsVec> gweight_;
    mutable std::map<std::tuple<int, int, int>, SparseVec<LevelScalar>> act_cache_;
};

// Action matrices of loop_minus / loop_plus on a truncated module.
ModuleMatrices<LevelScalar> loop_minus_module(const AffineModule& m);
ModuleMatrices<LevelScalar> loop_plus_module(const AffineModule& m);
// Same for loop_minus with rational entries; throws if an entry depends on k.
ModuleMatrices<Rational> loop_minus_module_rational(const AffineModule& m);

// X_n -> (iota X)_{-n} from loop_minus to loop_plus, as columns in the loop_plus basis.
std::vector<SparseVec<Rational>> loop_transpose(const AlgebraId& id, int max_weight);

// Contravariant form with Psi(v_lambda, v_lambda) = 1 and Psi(m1, x.m2) = Psi(tx.m1, m2);
// rows and columns indexed by states, zero between different weights.
std::vector<SparseVec<LevelScalar>> shapovalov_form(const WeylModule& m);

}  // namespace hookdual
