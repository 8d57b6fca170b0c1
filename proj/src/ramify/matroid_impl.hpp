#pragma once

#include <map>
#include <mutex>

namespace ramify {

namespace detail {

// Per-critical-value elimination state for the cophenetic rank closure.
template <class F>
struct CopheneticStepCache {
    bool ready = false;
    Echelon<F> boundary;                  // B_k^eps in echelon form
    std::vector<Chain<F>> reduced_gens;   // generators reduced mod B (index = generator id)
};

template <class F>
struct CopheneticState {
    std::shared_ptr<const FilteredComplex> complex;
    int k = 0;
    FieldSpec field;
    std::vector<Chain<F>> generators;
    std::vector<double> births;
    mutable std::vector<CopheneticStepCache<F>> cache;  // one per critical value, fixed size
    mutable std::mutex cache_mutex;                     // rank queries must stay reentrant

    // Slots never change once ready and the vector never resizes, so the
    // returned reference stays valid outside the lock.
    const CopheneticStepCache<F>& at_step(std::size_t step) const {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto& slot = cache[step];
        if (!slot.ready) {
            const SimplexIndex prefix = complex->prefix_size(step);
            slot.boundary = detail::boundary_echelon<F>(*complex, k, prefix);
            slot.reduced_gens.resize(generators.size());
            const double eps = complex->critical_values()[step];
            for (std::size_t g = 0; g < generators.size(); ++g) {
                if (births[g] > eps) continue;  // unborn: left defaulted, guarded by callers
                slot.reduced_gens[g] = slot.boundary.reduce_full(generators[g]);
            }
            slot.ready = true;
        }
        return slot;
    }
};

}  // namespace detail

template <class F>
FilteredMatroid cophenetic_matroid(std::shared_ptr<const FilteredComplex> complex, int k,
                                   std::vector<Chain<F>> generators, std::vector<double> births,
                                   std::vector<std::string> labels, FieldSpec field) {
    if (!complex) throw InvalidArgumentError("cophenetic matroid needs a complex");
    if (k < 0) throw InvalidArgumentError("homological degree must be >= 0");
    if (generators.size() != births.size() || generators.size() != labels.size())
        throw InvalidArgumentError("generators, births and labels must have matching lengths");

    // validate generators once, at their births
    {
        auto guard = field.is_rational() ? std::optional<ZpScope>() : std::optional<ZpScope>(std::in_place, field.prime);
        for (std::size_t g = 0; g < generators.size(); ++g)
            cophenetic_rank<F>({generators[g]}, *complex, births[g], k);
    }

    auto state = std::make_shared<detail::CopheneticState<F>>();
    state->complex = complex;
    state->k = k;
    state->field = field;
    state->generators = std::move(generators);
    state->births = births;
    state->cache.resize(complex->critical_values().size());

    auto rank = [state](std::size_t step, const ElementSet& subset) -> std::size_t {
        auto guard = state->field.is_rational() ? std::optional<ZpScope>()
                                                : std::optional<ZpScope>(std::in_place, state->field.prime);
        const auto& slot = state->at_step(step);
        Echelon<F> ech;
        std::size_t r = 0;
        for (ElementId e : subset)
            if (ech.insert(slot.reduced_gens[e])) ++r;
        return r;
    };

    FilteredMatroid fm(complex->critical_values(), std::move(labels), std::move(births), std::move(rank),
                       "cophenetic k=" + std::to_string(k));
    fm.set_degree(k);
    return fm;
}

template <class F>
FilteredMatroid cophenetic_matroid(std::shared_ptr<const FilteredComplex> complex, int k, const Barcode<F>& barcode,
                                   FieldSpec field) {
    std::vector<Chain<F>> gens;
    std::vector<double> births;
    std::vector<std::string> labels;
    for (const auto& bar : barcode.bars) {
        if (bar.dim != k) continue;
        labels.push_back("g" + std::to_string(gens.size()));
        gens.push_back(bar.representative);
        births.push_back(bar.birth);
    }
    return cophenetic_matroid<F>(std::move(complex), k, std::move(gens), std::move(births), std::move(labels), field);
}

}  // namespace ramify
