#pragma once

#include <map>
#include <unordered_map>

namespace ramify {

namespace detail {

// boundary column of a single simplex, as a (d-1)-chain
template <class F>
Chain<F> boundary_column(const FilteredComplex& complex, SimplexIndex j) {
    const int d = complex.dimension(j);
    Chain<F> out(d - 1);
    if (d == 0) return out;
    auto faces = complex.face_indices(j);
    F sign = FieldOps<F>::one();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        out.add_term(faces[i], sign);
        sign = -sign;
    }
    return out;
}

// global indices of all d-simplices born at or before prefix, ascending
inline std::vector<SimplexIndex> simplices_of_dim(const FilteredComplex& complex, int d, SimplexIndex prefix) {
    std::vector<SimplexIndex> out;
    for (SimplexIndex i = 0; i < prefix; ++i)
        if (complex.dimension(i) == d) out.push_back(i);
    return out;
}

// Column echelon basis of im d_{k+1} restricted to the first `prefix` simplices.
template <class F>
Echelon<F> boundary_echelon(const FilteredComplex& complex, int k, SimplexIndex prefix) {
    Echelon<F> ech;
    for (SimplexIndex j : simplices_of_dim(complex, k + 1, prefix)) ech.insert(boundary_column<F>(complex, j));
    return ech;
}

}  // namespace detail

template <class F>
Chain<F> boundary_apply(const Chain<F>& chain, const FilteredComplex& complex) {
    if (chain.degree() < 0) throw InvalidArgumentError("chain has no degree");
    Chain<F> out(chain.degree() - 1);
    if (chain.degree() == 0) return out;
    for (const auto& term : chain.terms()) {
        if (term.index < 0 || static_cast<std::size_t>(term.index) >= complex.size())
            throw InvalidArgumentError("chain references simplex index " + std::to_string(term.index) +
                                       " absent from the complex");
        if (complex.dimension(term.index) != chain.degree())
            throw InvalidArgumentError("chain of degree " + std::to_string(chain.degree()) +
                                       " references simplex " + complex.simplex(term.index).str() +
                                       " of a different dimension");
        out.add_scaled(detail::boundary_column<F>(complex, term.index), term.coeff);
    }
    return out;
}

template <class F>
PersistenceResult<F> compute_persistence(const FilteredComplex& complex, int max_dim) {
    if (max_dim < 0) throw InvalidArgumentError("max_dim must be >= 0");
    PersistenceResult<F> result;
    if (complex.empty()) return result;

    const int top = complex.top_dimension();
    if (max_dim > top) {
        result.warning = "requested dimension " + std::to_string(max_dim) +
                         " exceeds complex dimension " + std::to_string(top) + "; computing up to " +
                         std::to_string(top);
        max_dim = top;
    }
    const int reduce_to = std::min(top, max_dim + 1);
    const auto n = static_cast<SimplexIndex>(complex.size());

    // birth simplex -> (death simplex) discovered during reduction
    std::unordered_map<SimplexIndex, SimplexIndex> death_of;
    // per dimension k: birth simplex -> completed cycle (ordered for determinism)
    std::vector<std::map<SimplexIndex, Chain<F>>> cycle_of(static_cast<std::size_t>(max_dim) + 1);

    if (max_dim >= 0)
        for (SimplexIndex i = 0; i < n; ++i)
            if (complex.dimension(i) == 0) cycle_of[0].emplace(i, unit_chain<F>(0, i));

    for (int d = 1; d <= reduce_to; ++d) {
        std::unordered_map<SimplexIndex, std::size_t> pivot_slot;  // low row -> slot
        std::vector<Chain<F>> reduced_r, reduced_v;
        for (SimplexIndex j : detail::simplices_of_dim(complex, d, n)) {
            Chain<F> r = detail::boundary_column<F>(complex, j);
            Chain<F> v = unit_chain<F>(d, j);
            while (!r.is_zero()) {
                auto it = pivot_slot.find(r.low());
                if (it == pivot_slot.end()) break;
                const std::size_t slot = it->second;
                F factor = -(r.low_coeff() / reduced_r[slot].low_coeff());
                r.add_scaled(reduced_r[slot], factor);
                v.add_scaled(reduced_v[slot], factor);
            }
            if (r.is_zero()) {
                if (d <= max_dim) cycle_of[static_cast<std::size_t>(d)].emplace(j, std::move(v));
            } else {
                const SimplexIndex low = r.low();
                death_of.emplace(low, j);
                pivot_slot.emplace(low, reduced_r.size());
                reduced_r.push_back(std::move(r));
                reduced_v.push_back(std::move(v));
            }
        }
    }

    for (int k = 0; k <= max_dim; ++k) {
        for (auto& [birth_index, cycle] : cycle_of[static_cast<std::size_t>(k)]) {
            Bar<F> bar;
            bar.dim = k;
            bar.birth_index = birth_index;
            bar.birth = complex.birth(birth_index);
            auto it = death_of.find(birth_index);
            if (it != death_of.end()) {
                bar.death_index = it->second;
                bar.death = complex.birth(it->second);
                if (bar.death == bar.birth) continue;  // ephemeral pair
            }
            bar.representative = std::move(cycle);
            result.barcode.bars.push_back(std::move(bar));
        }
    }
    return result;
}

template <class F>
CycleSpaceSnapshot<F> cycle_snapshot(const FilteredComplex& complex, double eps, int k) {
    if (k < 0) throw InvalidArgumentError("homological degree must be >= 0");
    if (!(eps >= 0)) throw InvalidArgumentError("scale must be >= 0");
    CycleSpaceSnapshot<F> snap;
    snap.eps = eps;
    snap.k = k;
    auto step = complex.step_at(eps);
    if (!step) return snap;
    const SimplexIndex prefix = complex.prefix_size(*step);

    // kernel of d_k: reduce columns left to right tracking the combination
    std::unordered_map<SimplexIndex, std::size_t> pivot_slot;
    std::vector<Chain<F>> reduced_r, reduced_v;
    for (SimplexIndex j : detail::simplices_of_dim(complex, k, prefix)) {
        Chain<F> r = detail::boundary_column<F>(complex, j);
        Chain<F> v = unit_chain<F>(k, j);
        while (!r.is_zero()) {
            auto it = pivot_slot.find(r.low());
            if (it == pivot_slot.end()) break;
            const std::size_t slot = it->second;
            F factor = -(r.low_coeff() / reduced_r[slot].low_coeff());
            r.add_scaled(reduced_r[slot], factor);
            v.add_scaled(reduced_v[slot], factor);
        }
        if (r.is_zero()) {
            snap.cycle_basis.push_back(std::move(v));
        } else {
            pivot_slot.emplace(r.low(), reduced_r.size());
            reduced_r.push_back(std::move(r));
            reduced_v.push_back(std::move(v));
        }
    }

    snap.boundary_basis = detail::boundary_echelon<F>(complex, k, prefix).columns();
    return snap;
}

template <class F>
std::size_t cophenetic_rank(const std::vector<Chain<F>>& cycles, const FilteredComplex& complex, double eps, int k) {
    if (k < 0) throw InvalidArgumentError("homological degree must be >= 0");
    if (cycles.empty()) return 0;
    auto step = complex.step_at(eps);
    if (!step) throw InvalidArgumentError("no simplex is born at or before scale " + format_double(eps));
    const SimplexIndex prefix = complex.prefix_size(*step);

    for (const auto& c : cycles) {
        if (c.degree() != k && !c.is_zero())
            throw InvalidArgumentError("cycle of degree " + std::to_string(c.degree()) +
                                       " passed to a degree-" + std::to_string(k) + " rank query");
        for (const auto& term : c.terms()) {
            if (term.index < 0 || static_cast<std::size_t>(term.index) >= complex.size())
                throw UnknownIdError("chain references simplex index " + std::to_string(term.index) +
                                     " absent from the complex");
            if (term.index >= prefix)
                throw InvalidArgumentError("element uses simplex " + complex.simplex(term.index).str() +
                                           " born after scale " + format_double(eps));
        }
        if (!c.is_zero() && !boundary_apply(c, complex).is_zero())
            throw NotACycleError("element is not a cycle at scale " + format_double(eps));
    }

    Echelon<F> ech = detail::boundary_echelon<F>(complex, k, prefix);
    const std::size_t dim_b = ech.rank();
    for (const auto& c : cycles) ech.insert(c);
    return ech.rank() - dim_b;
}

template <class F>
std::size_t cz_rank(const FilteredComplex& complex, int k, double eps, double eta) {
    if (eps > eta) throw InvalidArgumentError("cz_rank requires eps <= eta");
    auto snap = cycle_snapshot<F>(complex, eps, k);
    auto step = complex.step_at(eta);
    Echelon<F> ech;
    if (step) ech = detail::boundary_echelon<F>(complex, k, complex.prefix_size(*step));
    const std::size_t dim_b = ech.rank();
    for (const auto& z : snap.cycle_basis) ech.insert(z);
    return ech.rank() - dim_b;
}

inline std::size_t cz_rank(const std::vector<BarView>& bars, int k, double eps, double eta) {
    if (eps > eta) throw InvalidArgumentError("cz_rank requires eps <= eta");
    std::size_t n = 0;
    for (const auto& b : bars)
        if (b.dim == k && b.birth <= eps && eta < b.death) ++n;
    return n;
}

}  // namespace ramify
