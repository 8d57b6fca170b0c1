#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramify/homology.hpp"

namespace ramify {

using ElementId = std::size_t;
// subsets are sorted ascending id lists
using ElementSet = std::vector<ElementId>;

// A matroid presented by its rank function: a callable contract over a finite
// ground set.  Subsets are given as sorted lists of indices into `ground`.
struct RankOracle {
    std::vector<std::string> ground;
    std::function<std::size_t(const ElementSet&)> rank;

    std::size_t size() const { return ground.size(); }
};

// --- rank-function validation -------------------------------------------------

struct SubmodularityReport {
    enum class Status { Ok, EmptyRankNonzero, NotMonotone, ExceedsCardinality, NotSubmodular };
    Status status = Status::Ok;
    ElementSet witness_a, witness_b;
    bool sampled = false;
    std::size_t pairs_checked = 0;

    bool ok() const { return status == Status::Ok; }
    std::string describe() const;
};

// Exhaustive over all subset pairs for |E| <= exhaustive_limit, sampled with a
// fixed seed beyond that.  Violations are reported with the lexicographically
// first witness pair.
SubmodularityReport check_submodular(const RankOracle& oracle, std::size_t exhaustive_limit = 12,
                                     std::size_t samples = 20000, unsigned seed = 1);

// pi pulls a matroid on E back to F: rank_F(A) = rank_E(pi(A)).
RankOracle induced_rank(const std::vector<ElementId>& pi, const RankOracle& base,
                        std::vector<std::string> ground_labels);

// --- linear matroids -----------------------------------------------------------

using RationalVector = std::vector<Rational>;

// dim of the span, by exact row elimination
std::size_t linear_rank(const std::vector<RationalVector>& vectors);

// s_eps: zeroes the first floor(eps) coordinates (all of them once eps >= n+1);
// the identity on [0, 1).
RationalVector coordinate_zeroing(const RationalVector& v, double eps);

// --- irreducible sets -----------------------------------------------------------

// r(A) = |A| - 1 with every proper subset independent (a matroid circuit).
// Only the maximal proper subsets are tested; monotonicity covers the rest.
bool is_irreducible(const ElementSet& a, const std::function<std::size_t(const ElementSet&)>& rank);

// All circuits contained in X, discovered by breadth-first subset search in
// canonical element order: exponential in |X|, intended for desk-scale sets.
std::vector<ElementSet> circuits_within(const ElementSet& x,
                                        const std::function<std::size_t(const ElementSet&)>& rank);

// Writes a dependent set as a union of irreducible sets.  Deterministic
// realization of the inductive argument: repeatedly take the first element of
// the working set, attach the lexicographically smallest circuit through it,
// then drop the element and recurse on the rest.  Output sorted by
// (size descending, lexicographic).  Errors: independent input; inputs whose
// elements escape every circuit (possible for non-representable oracles).
std::vector<ElementSet> irreducible_cover(const ElementSet& x,
                                          const std::function<std::size_t(const ElementSet&)>& rank);

// --- filtered matroids ------------------------------------------------------------

// A matroid for every critical value, with explicit structure maps between the
// ground sets.  Rank oracles are closures evaluated on demand; nothing is
// materialized per scale.
class FilteredMatroid {
public:
    using RankFn = std::function<std::size_t(std::size_t step, const ElementSet&)>;

    FilteredMatroid() = default;
    FilteredMatroid(std::vector<double> critical_values, std::vector<std::string> ground,
                    std::vector<double> element_births, RankFn rank, std::string provenance);

    const std::vector<double>& critical_values() const { return critical_values_; }
    const std::vector<std::string>& ground() const { return ground_; }
    std::size_t ground_size() const { return ground_.size(); }
    double element_birth(ElementId e) const;
    const std::string& provenance() const { return provenance_; }
    int degree() const { return degree_; }
    void set_degree(int k) { degree_ = k; }

    std::optional<std::size_t> step_at(double eps) const;
    double value_of_step(std::size_t step) const { return critical_values_.at(step); }

    // id map from the ground set at `from` to the ground set at `to`
    ElementSet psi(std::size_t from_step, std::size_t to_step, const ElementSet& subset) const;

    std::size_t rank_at_step(std::size_t step, const ElementSet& subset) const;
    std::size_t rank_at(double eps, const ElementSet& subset) const;

    // ids born at or before the given step, ascending
    ElementSet born_at_step(std::size_t step) const;

    // rank oracle over the elements born by `step` (labels keep their global names)
    RankOracle oracle_at_step(std::size_t step) const;

    std::string label_of(ElementId e) const;
    std::optional<ElementId> id_of_label(const std::string& label) const;

private:
    void validate_subset(std::size_t step, const ElementSet& subset) const;

    std::vector<double> critical_values_;
    std::vector<std::string> ground_;
    std::vector<double> births_;
    std::vector<std::vector<ElementId>> psi_step_;  // consecutive-step element maps
    RankFn rank_;
    std::string provenance_;
    int degree_ = -1;
};

// The coordinate-zeroing linear matroid: elements are rational vectors, the
// rank at eps is dim span(s_eps(A)).  Critical values are the integer
// breakpoints 0..n+1 of s.
FilteredMatroid linear_filtered_matroid(std::vector<RationalVector> vectors, std::vector<std::string> labels,
                                        std::string provenance);

// Cophenetic matroid of a filtered complex in degree k: elements are generator
// cycles (kept distinct by id even when equal as chains), the rank at eps is
// the cophenetic rank.  B-echelons and reduced generators are cached per
// critical value behind the closure.
template <class F>
FilteredMatroid cophenetic_matroid(std::shared_ptr<const FilteredComplex> complex, int k,
                                   std::vector<Chain<F>> generators, std::vector<double> births,
                                   std::vector<std::string> labels, FieldSpec field);

// Convenience: generators = representatives of the degree-k bars, labeled
// g0, g1, ... in bar order.
template <class F>
FilteredMatroid cophenetic_matroid(std::shared_ptr<const FilteredComplex> complex, int k, const Barcode<F>& barcode,
                                   FieldSpec field);

// JSON dump for tests: ground ids, critical values and, for ground sets of at
// most 12 live elements, the full rank table per critical value (flat array
// indexed by subset bitmask over the born elements).
std::string matroid_dump_json(const FilteredMatroid& fm);

}  // namespace ramify

#include "ramify/matroid_impl.hpp"
