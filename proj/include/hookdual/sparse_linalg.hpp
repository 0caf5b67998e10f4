#pragma once
// Exact sparse elimination over Q and Q(k).

#include "hookdual/level_scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

namespace hookdual {

template <class F>
using SparseVec = std::map<int, F>;

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const LevelScalar& x) { return x.is_zero(); }

// Smaller is a better pivot: constants first, then low degree.
inline std::size_t pivot_cost(const Rational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline std::size_t pivot_cost(const LevelScalar& x) {
    std::size_t deg = static_cast<std::size_t>(x.num().degree() + x.den().degree());
    std::size_t bits = 0;
    for (const auto& c : x.num().coeffs()) bits += pivot_cost(c);
    return deg * 4096 + bits;
}

template <class F>
void axpy(SparseVec<F>& y, const std::type_identity_t<F>& a, const SparseVec<F>& x) {
    for (const auto& [j, v] : x) {
        auto it = y.find(j);
        if (it == y.end()) {
            F t = a * v;
            if (!is_zero(t)) y.emplace(j, std::move(t));
        } else {
            it->second += a * v;
            if (is_zero(it->second)) y.erase(it);
        }
    }
}

// Reduced row echelon basis of a growing set of sparse vectors.
template <class F>
class RowEchelon {
public:
    // Reduce v against the stored rows in place.
    void reduce(SparseVec<F>& v) const {
        std::vector<int> hits;
        for (const auto& [j, c] : v)
            if (row_of_.count(j)) hits.push_back(j);
        for (int p : hits) {
            auto it = v.find(p);
            if (it == v.end()) continue;
            F c = it->second;
            axpy(v, -c, rows_[row_of_.at(p)]);
        }
    }

    // Returns true if v was independent of the stored rows.
    bool insert(SparseVec<F> v) {
        reduce(v);
        if (v.empty()) return false;
        int best = -1;
        std::size_t best_cost = 0;
        for (const auto& [j, c] : v) {
            std::size_t cost = pivot_cost(c);
            if (best < 0 || cost < best_cost) {
                best = j;
                best_cost = cost;
            }
        }
        F inv = F(1) / v.at(best);
        for (auto& [j, c] : v) c *= inv;
        for (auto& r : rows_) {
            auto it = r.find(best);
            if (it == r.end()) continue;
            F c = it->second;
            axpy(r, -c, v);
        }
        row_of_[best] = rows_.size();
        rows_.push_back(std::move(v));
        pivots_.push_back(best);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec<F>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    bool is_pivot(int col) const { return row_of_.count(col) != 0; }
    const SparseVec<F>& row_for_pivot(int col) const { return rows_[row_of_.at(col)]; }

    // Coordinates of v in the stored basis, or nullopt if v is not in the span.
    std::optional<std::vector<F>> coordinates(const SparseVec<F>& v) const {
        SparseVec<F> r = v;
        std::vector<F> out(rows_.size(), F(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto it = r.find(pivots_[i]);
            if (it == r.end()) continue;
            F c = it->second;
            out[i] = c;
            axpy(r, -c, rows_[i]);
        }
        if (!r.empty()) return std::nullopt;
        return out;
    }

private:
    std::vector<SparseVec<F>> rows_;
    std::vector<int> pivots_;
    std::map<int, std::size_t> row_of_;
};

template <class F>
std::size_t rank_of(const std::vector<SparseVec<F>>& vectors) {
    RowEchelon<F> e;
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
}

// Rank over Q(k) by specialization. After clearing denominators every (r+1)-minor is a polynomial of
// bounded degree D; ranks at more than D regular points, all <= r, prove the generic rank is r.
std::size_t rank_of(const std::vector<SparseVec<LevelScalar>>& vectors);

// Kernel of the map sending basis vector j to images[j]; basis of the kernel as sparse vectors.
template <class F>
std::vector<SparseVec<F>> kernel_of(const std::vector<SparseVec<F>>& images) {
    // Equations: one row per target coordinate.
    std::map<int, SparseVec<F>> eqs;
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [w, c] : images[j]) eqs[w].emplace(static_cast<int>(j), c);
    RowEchelon<F> e;
    for (auto& [w, row] : eqs) e.insert(row);
    std::vector<SparseVec<F>> basis;
    for (std::size_t j = 0; j < images.size(); ++j) {
        int col = static_cast<int>(j);
        if (e.is_pivot(col)) continue;
        SparseVec<F> v;
        v.emplace(col, F(1));
        for (std::size_t r = 0; r < e.rows().size(); ++r) {
            auto it = e.rows()[r].find(col);
            if (it != e.rows()[r].end()) v.emplace(e.pivots()[r], -it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hookdual
