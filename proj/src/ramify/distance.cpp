#include "ramify/distance.hpp"

#include <algorithm>
#include <cmath>

namespace ramify {

bool merged_at_step(const FilteredMatroid& fm, ElementId a, ElementId b, std::size_t step) {
    if (a == b) return true;
    ElementSet pair{std::min(a, b), std::max(a, b)};
    if (fm.rank_at_step(step, pair) >= 2) return false;
    return fm.rank_at_step(step, {a}) == fm.rank_at_step(step, {b});
}

double cophenetic_distance(const FilteredMatroid& fm, ElementId a, ElementId b, double eps) {
    if (a >= fm.ground_size()) throw UnknownIdError("unknown generator id " + std::to_string(a));
    if (b >= fm.ground_size()) throw UnknownIdError("unknown generator id " + std::to_string(b));
    auto step = fm.step_at(eps);
    if (!step) throw InvalidArgumentError("scale " + format_double(eps) + " precedes every critical value");
    for (ElementId e : {a, b})
        if (fm.rank_at_step(*step, {e}) == 0)
            throw InvalidArgumentError("generator " + fm.label_of(e) + " is a zero class at scale " +
                                       format_double(eps) + "; the cophenetic distance is defined on nonzero classes");
    if (a == b) return 0;
    for (std::size_t s = *step; s < fm.critical_values().size(); ++s)
        if (merged_at_step(fm, a, b, s)) return fm.critical_values()[s] - eps;
    return std::numeric_limits<double>::infinity();
}

DistanceMatrix distance_matrix(const FilteredMatroid& fm, double eps, const ElementSet& generators) {
    DistanceMatrix m;
    m.eps = eps;
    m.ids = generators;
    for (ElementId e : generators) m.labels.push_back(fm.label_of(e));
    const std::size_t n = generators.size();
    m.values.assign(n, std::vector<double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = cophenetic_distance(fm, generators[i], generators[j], eps);
            m.values[i][j] = m.values[j][i] = d;
        }
    validate_ultrametric(m);
    return m;
}

void validate_ultrametric(const DistanceMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m.values[i][i] != 0) throw InternalError("nonzero diagonal in distance matrix at " + m.labels[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (m.values[i][j] != m.values[j][i])
                throw InternalError("asymmetric distance between " + m.labels[i] + " and " + m.labels[j]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                // infinity absorbs: the comparison below is exact on doubles
                if (m.values[i][j] > std::max(m.values[i][k], m.values[k][j]))
                    throw InternalError("ultrametric inequality fails on triple (" + m.labels[i] + ", " +
                                        m.labels[j] + ", " + m.labels[k] + ")");
            }
}

std::string distance_matrix_csv(const DistanceMatrix& m) {
    std::string out = "id";
    for (const auto& l : m.labels) out += "," + l;
    out += "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += m.labels[i];
        for (std::size_t j = 0; j < m.size(); ++j) {
            out += ",";
            out += std::isinf(m.values[i][j]) ? "inf" : format_double(m.values[i][j]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace ramify
