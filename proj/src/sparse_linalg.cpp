#include "hookdual/sparse_linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hookdual {

namespace {

Poly lcm(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a * b, Poly::gcd(a, b), q, r);
    return q.monic();
}

// Degree of the polynomial line obtained by multiplying out the common denominator.
class DegreeBound {
public:
    void add(int line, const LevelScalar& x) {
        auto& [den, num_deg] = lines_[line];
        den = den.is_zero() ? x.den() : lcm(den, x.den());
        num_deg.push_back(x.num().degree() - x.den().degree());
    }
    std::vector<long> degrees() const {
        std::vector<long> out;
        for (const auto& [line, entry] : lines_) {
            const auto& [den, shifts] = entry;
            out.push_back(den.degree() + *std::max_element(shifts.begin(), shifts.end()));
        }
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

private:
    std::map<int, std::pair<Poly, std::vector<int>>> lines_;
};

long top_sum(const std::vector<long>& sorted, std::size_t count) {
    return std::accumulate(sorted.begin(), sorted.begin() + static_cast<long>(std::min(count, sorted.size())), 0L);
}

}  // namespace

std::size_t rank_of(const std::vector<SparseVec<LevelScalar>>& vectors) {
    bool constant = true;
    std::set<int> coords;
    Poly all_dens(1);
    DegreeBound rows, cols;
    for (std::size_t v = 0; v < vectors.size(); ++v)
        for (const auto& [j, x] : vectors[v]) {
            coords.insert(j);
            if (!x.is_constant()) constant = false;
            rows.add(static_cast<int>(v), x);
            cols.add(j, x);
            all_dens = lcm(all_dens, x.den());
        }
    if (constant) {
        RowEchelon<Rational> e;
        for (const auto& v : vectors) {
            SparseVec<Rational> r;
            for (const auto& [j, x] : v) r.emplace(j, x.constant_value());
            e.insert(std::move(r));
        }
        return e.rank();
    }
    const std::vector<long> row_deg = rows.degrees(), col_deg = cols.degrees();
    const std::size_t full = std::min(row_deg.size(), col_deg.size());
    std::size_t best = 0;
    long points = 0;
    for (long step = 0;; ++step) {
        // 3, -4, 5, -6, ... with a fractional offset to stay away from small roots
        const Rational k0 = Rational(step % 2 ? -(step + 3) : step + 3) + Rational(1, 7);
        if (all_dens.eval(k0) == 0) continue;
        RowEchelon<Rational> e;
        for (const auto& v : vectors) {
            SparseVec<Rational> r;
            for (const auto& [j, x] : v) {
                Rational y = x.eval(k0);
                if (y != 0) r.emplace(j, std::move(y));
            }
            e.insert(std::move(r));
        }
        best = std::max(best, e.rank());
        ++points;
        if (best >= full) return best;
        const long bound = std::min(top_sum(row_deg, best + 1), top_sum(col_deg, best + 1));
        if (points > bound) return best;
    }
}

}  // namespace hookdual
