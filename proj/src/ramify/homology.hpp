#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ramify/chain.hpp"

namespace ramify {

constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

// One persistence interval with its cycle representative: the reduced column
// of the birth simplex, i.e. the cycle the birth simplex completes.
template <class F>
struct Bar {
    int dim = 0;
    double birth = 0;
    double death = kInfiniteDeath;
    SimplexIndex birth_index = -1;
    SimplexIndex death_index = -1;  // -1 for essential classes
    Chain<F> representative;

    bool essential() const { return death_index < 0; }
};

template <class F>
struct Barcode {
    std::vector<Bar<F>> bars;

    std::size_t betti(int k, double eps) const {
        std::size_t n = 0;
        for (const auto& b : bars)
            if (b.dim == k && b.birth <= eps && eps < b.death) ++n;
        return n;
    }
};

// Interval data without representatives; enough for exports and rank counts.
struct BarView {
    int dim;
    double birth;
    double death;
};

template <class F>
std::vector<BarView> bar_views(const Barcode<F>& bc) {
    std::vector<BarView> v;
    v.reserve(bc.bars.size());
    for (const auto& b : bc.bars) v.push_back({b.dim, b.birth, b.death});
    return v;
}

// d(sigma) = sum_i (-1)^i (i-th face); degree-0 chains map to zero.
template <class F>
Chain<F> boundary_apply(const Chain<F>& chain, const FilteredComplex& complex);

// Standard persistence by column reduction of the boundary matrix in
// filtration order, exact over F.  Zero-length intervals (birth == death as
// scale values) are dropped.  If max_dim exceeds the complex dimension a
// warning string is returned alongside.
template <class F>
struct PersistenceResult {
    Barcode<F> barcode;
    std::string warning;  // empty when none
};

template <class F>
PersistenceResult<F> compute_persistence(const FilteredComplex& complex, int max_dim);

// Bases of Z_k and B_k at scale eps, recomputed from scratch by Gaussian
// elimination on the simplices born at or before eps.
template <class F>
struct CycleSpaceSnapshot {
    double eps = 0;
    int k = 0;
    std::vector<Chain<F>> cycle_basis;     // ker d_k
    std::vector<Chain<F>> boundary_basis;  // im d_{k+1}, in column echelon form (distinct lows)
    std::size_t betti() const { return cycle_basis.size() - boundary_basis.size(); }
};

template <class F>
CycleSpaceSnapshot<F> cycle_snapshot(const FilteredComplex& complex, double eps, int k);

// dim(Span(A) + B_k^eps) - dim B_k^eps: the rank of A's classes in H_k at eps.
// Every element of A must be a cycle supported on simplices born <= eps.
template <class F>
std::size_t cophenetic_rank(const std::vector<Chain<F>>& cycles, const FilteredComplex& complex, double eps, int k);

// Image rank of the structure map H_k(eps) -> H_k(eta), computed by
// elimination: rank of a Z_k^eps basis modulo B_k^eta.
template <class F>
std::size_t cz_rank(const FilteredComplex& complex, int k, double eps, double eta);

// Same invariant read off a barcode: the number of intervals containing
// [eps, eta], i.e. born at or before eps and still alive after eta.
std::size_t cz_rank(const std::vector<BarView>& bars, int k, double eps, double eta);

// --- internal elimination helpers (shared with the matroid layer) ------------

// Incrementally maintained column echelon basis keyed by low index.
template <class F>
class Echelon {
public:
    // Reduces v against the basis; returns the residue (zero iff dependent).
    Chain<F> reduce(Chain<F> v) const {
        while (!v.is_zero()) {
            auto it = by_low_.find(v.low());
            if (it == by_low_.end()) break;
            const Chain<F>& pivot = columns_[it->second];
            F factor = -(v.low_coeff() / pivot.low_coeff());
            v.add_scaled(pivot, factor);
        }
        return v;
    }

    // Clears every coordinate sitting on a pivot low, not just the leading
    // one.  Fully reduced residues span a complement of the basis span, so
    // their plain rank equals their rank in the quotient.
    Chain<F> reduce_full(Chain<F> v) const {
        while (true) {
            const typename Chain<F>::Term* hit = nullptr;
            for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
                if (by_low_.count(it->index)) {
                    hit = &*it;
                    break;
                }
            }
            if (!hit) return v;
            const Chain<F>& pivot = columns_[by_low_.at(hit->index)];
            F factor = -(hit->coeff / pivot.low_coeff());
            v.add_scaled(pivot, factor);  // pivot's entries all sit at or below its low
        }
    }

    // Reduce and, if independent, absorb the residue.  Returns true if v
    // increased the rank.
    bool insert(Chain<F> v) {
        Chain<F> r = reduce(std::move(v));
        if (r.is_zero()) return false;
        by_low_.emplace(r.low(), columns_.size());
        columns_.push_back(std::move(r));
        return true;
    }

    std::size_t rank() const { return columns_.size(); }
    const std::vector<Chain<F>>& columns() const { return columns_; }

private:
    std::vector<Chain<F>> columns_;
    std::unordered_map<SimplexIndex, std::size_t> by_low_;
};

}  // namespace ramify

#include "ramify/homology_impl.hpp"
