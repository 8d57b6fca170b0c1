#pragma once

#include <sstream>

#include <nlohmann/json.hpp>

#include "ramify/homology.hpp"

namespace ramify {

// CSV `dim,birth,death` with `inf` for essential classes.
template <class F>
std::string barcode_csv(const Barcode<F>& bc) {
    std::string out = "dim,birth,death\n";
    for (const auto& b : bc.bars) {
        out += std::to_string(b.dim) + "," + format_double(b.birth) + ",";
        out += b.essential() ? "inf" : format_double(b.death);
        out += "\n";
    }
    return out;
}

// JSON including representatives as (simplex, numerator, denominator) triples.
template <class F>
std::string barcode_json(const Barcode<F>& bc, const FilteredComplex& complex) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& b : bc.bars) {
        nlohmann::json bar;
        bar["dim"] = b.dim;
        bar["birth"] = b.birth;
        if (b.essential())
            bar["death"] = "inf";
        else
            bar["death"] = b.death;
        auto rep = nlohmann::json::array();
        for (const auto& term : b.representative.terms()) {
            nlohmann::json t;
            t["simplex"] = complex.simplex(term.index).vertices;
            t["numerator"] = FieldOps<F>::numerator_str(term.coeff);
            t["denominator"] = FieldOps<F>::denominator_str(term.coeff);
            rep.push_back(std::move(t));
        }
        bar["representative"] = std::move(rep);
        j.push_back(std::move(bar));
    }
    return j.dump(2) + "\n";
}

// Bars stacked per dimension against the scale axis; essential classes are
// drawn to the right edge with an open arrowhead.
std::string barcode_svg(const std::vector<BarView>& bars, const std::vector<double>& critical_values);

template <class F>
std::string barcode_svg(const Barcode<F>& bc, const FilteredComplex& complex) {
    return barcode_svg(bar_views(bc), complex.critical_values());
}

}  // namespace ramify
