#include "ramify/matroid.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

namespace ramify {

// --- submodularity -------------------------------------------------------------

namespace {

std::string set_str(const std::vector<std::string>& labels, const ElementSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += labels.empty() ? std::to_string(s[i]) : labels[s[i]];
    }
    return out + "}";
}

ElementSet mask_to_set(std::uint64_t mask, std::size_t n) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t(1) << i)) s.push_back(i);
    return s;
}

}  // namespace

std::string SubmodularityReport::describe() const {
    switch (status) {
        case Status::Ok:
            return std::string("submodular (") + (sampled ? "sampled, " : "exhaustive, ") +
                   std::to_string(pairs_checked) + " pairs)";
        case Status::EmptyRankNonzero:
            return "rank of the empty set is nonzero";
        case Status::NotMonotone:
            return "not monotone: r(A) > r(B) for A subset of B, A=" + set_str({}, witness_a) +
                   " B=" + set_str({}, witness_b);
        case Status::ExceedsCardinality:
            return "rank exceeds cardinality on " + set_str({}, witness_a);
        case Status::NotSubmodular:
            return "submodularity fails on A=" + set_str({}, witness_a) + " B=" + set_str({}, witness_b);
    }
    return "";
}

SubmodularityReport check_submodular(const RankOracle& oracle, std::size_t exhaustive_limit, std::size_t samples,
                                     unsigned seed) {
    SubmodularityReport report;
    const std::size_t n = oracle.size();
    if (n > 63) throw InvalidArgumentError("ground set too large for submodularity checking");

    if (oracle.rank({}) != 0) {
        report.status = SubmodularityReport::Status::EmptyRankNonzero;
        return report;
    }

    if (n <= exhaustive_limit) {
        const std::uint64_t total = std::uint64_t(1) << n;
        std::vector<std::size_t> rank(total);
        for (std::uint64_t m = 0; m < total; ++m) rank[m] = oracle.rank(mask_to_set(m, n));

        // masks in lexicographic order of their sorted id lists
        std::vector<std::uint64_t> lex(total);
        for (std::uint64_t m = 0; m < total; ++m) lex[m] = m;
        std::vector<ElementSet> sets(total);
        for (std::uint64_t m = 0; m < total; ++m) sets[m] = mask_to_set(m, n);
        std::sort(lex.begin(), lex.end(), [&](std::uint64_t a, std::uint64_t b) { return sets[a] < sets[b]; });

        for (std::uint64_t a : lex) {
            if (rank[a] > sets[a].size()) {
                report.status = SubmodularityReport::Status::ExceedsCardinality;
                report.witness_a = sets[a];
                return report;
            }
            for (std::size_t x = 0; x < n; ++x) {
                if (a & (std::uint64_t(1) << x)) continue;
                std::uint64_t b = a | (std::uint64_t(1) << x);
                if (rank[a] > rank[b]) {
                    report.status = SubmodularityReport::Status::NotMonotone;
                    report.witness_a = sets[a];
                    report.witness_b = sets[b];
                    return report;
                }
            }
        }
        for (std::uint64_t a : lex) {
            for (std::uint64_t b : lex) {
                ++report.pairs_checked;
                if (rank[a | b] + rank[a & b] > rank[a] + rank[b]) {
                    report.status = SubmodularityReport::Status::NotSubmodular;
                    report.witness_a = sets[a];
                    report.witness_b = sets[b];
                    return report;
                }
            }
        }
        return report;
    }

    // sampled mode
    report.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t(1) << n) - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        std::uint64_t a = dist(rng), b = dist(rng);
        ElementSet sa = mask_to_set(a, n), sb = mask_to_set(b, n);
        std::size_t ra = oracle.rank(sa), rb = oracle.rank(sb);
        if (ra > sa.size()) {
            report.status = SubmodularityReport::Status::ExceedsCardinality;
            report.witness_a = sa;
            return report;
        }
        std::size_t ru = oracle.rank(mask_to_set(a | b, n));
        std::size_t ri = oracle.rank(mask_to_set(a & b, n));
        if (ru < ra || ru < rb) {
            report.status = SubmodularityReport::Status::NotMonotone;
            report.witness_a = ru < ra ? sa : sb;  // the subset whose rank exceeds the union's
            report.witness_b = mask_to_set(a | b, n);
            return report;
        }
        ++report.pairs_checked;
        if (ru + ri > ra + rb) {
            report.status = SubmodularityReport::Status::NotSubmodular;
            report.witness_a = sa;
            report.witness_b = sb;
            return report;
        }
    }
    return report;
}

RankOracle induced_rank(const std::vector<ElementId>& pi, const RankOracle& base,
                        std::vector<std::string> ground_labels) {
    if (ground_labels.size() != pi.size())
        throw InvalidArgumentError("induced matroid needs one label per domain element");
    for (ElementId e : pi)
        if (e >= base.size()) throw InvalidArgumentError("pi maps outside the base ground set");
    RankOracle out;
    out.ground = std::move(ground_labels);
    out.rank = [pi, base_rank = base.rank](const ElementSet& a) {
        ElementSet image;
        image.reserve(a.size());
        for (ElementId e : a) image.push_back(pi.at(e));
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        return base_rank(image);
    };
    return out;
}

// --- linear matroids -------------------------------------------------------------

std::size_t linear_rank(const std::vector<RationalVector>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t dim = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != dim) throw InvalidArgumentError("vectors of unequal dimension");

    std::vector<RationalVector> rows = vectors;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

RationalVector coordinate_zeroing(const RationalVector& v, double eps) {
    if (!(eps >= 0)) throw InvalidArgumentError("scale must be >= 0");
    const auto n = static_cast<std::size_t>(v.size());
    auto zeroed = static_cast<std::size_t>(std::min(std::floor(eps), static_cast<double>(n)));
    RationalVector out = v;
    for (std::size_t i = 0; i < zeroed; ++i) out[i] = 0;
    return out;
}

// --- irreducible sets ---------------------------------------------------------------

bool is_irreducible(const ElementSet& a, const std::function<std::size_t(const ElementSet&)>& rank) {
    if (a.empty()) throw InvalidArgumentError("irreducibility is defined for non-empty sets");
    if (rank(a) != a.size() - 1) return false;
    if (a.size() == 1) return true;
    ElementSet sub(a.size() - 1);
    for (std::size_t skip = 0; skip < a.size(); ++skip) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != skip) sub[w++] = a[i];
        if (rank(sub) != sub.size()) return false;
    }
    return true;
}

std::vector<ElementSet> circuits_within(const ElementSet& x,
                                        const std::function<std::size_t(const ElementSet&)>& rank) {
    std::vector<ElementSet> circuits;
    const std::size_t n = x.size();
    auto contains_found_circuit = [&](const ElementSet& s) {
        for (const auto& c : circuits)
            if (c.size() < s.size() && std::includes(s.begin(), s.end(), c.begin(), c.end())) return true;
        return false;
    };
    // subsets by increasing size, lexicographic within each size
    std::vector<std::size_t> idx;
    for (std::size_t size = 1; size <= n; ++size) {
        idx.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            ElementSet s(size);
            for (std::size_t i = 0; i < size; ++i) s[i] = x[idx[i]];
            // minimal dependent = dependent with no smaller circuit inside
            if (!contains_found_circuit(s) && rank(s) < s.size()) circuits.push_back(s);
            // next combination
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return circuits;
}

std::vector<ElementSet> irreducible_cover(const ElementSet& x,
                                          const std::function<std::size_t(const ElementSet&)>& rank) {
    if (x.empty()) throw InvalidArgumentError("cannot cover the empty set");
    if (rank(x) == x.size()) throw IndependentSetError("independent set has no irreducible cover");

    std::vector<ElementSet> cover;
    ElementSet work = x;
    while (!work.empty() && rank(work) < work.size()) {
        const ElementId head = work.front();
        auto circuits = circuits_within(work, rank);
        // circuits arrive in (size, lex) order; the lexicographically smallest
        // one through `head` is the shortest-prefix candidate
        const ElementSet* pick = nullptr;
        for (const auto& c : circuits) {
            if (!std::binary_search(c.begin(), c.end(), head)) continue;
            if (!pick || std::lexicographical_compare(c.begin(), c.end(), pick->begin(), pick->end())) pick = &c;
        }
        if (pick) {
            if (std::find(cover.begin(), cover.end(), *pick) == cover.end()) cover.push_back(*pick);
            if (pick->size() == work.size()) break;  // the whole remainder is one circuit
        }
        work.erase(work.begin());
    }

    ElementSet covered;
    for (const auto& c : cover) {
        covered.insert(covered.end(), c.begin(), c.end());
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    if (covered != x) {
        ElementSet missing;
        std::set_difference(x.begin(), x.end(), covered.begin(), covered.end(), std::back_inserter(missing));
        throw InvalidArgumentError("elements " + set_str({}, missing) +
                                   " lie in no irreducible subset; the set has no irreducible cover");
    }

    std::sort(cover.begin(), cover.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return cover;
}

// --- FilteredMatroid -------------------------------------------------------------------

FilteredMatroid::FilteredMatroid(std::vector<double> critical_values, std::vector<std::string> ground,
                                 std::vector<double> element_births, RankFn rank, std::string provenance)
    : critical_values_(std::move(critical_values)),
      ground_(std::move(ground)),
      births_(std::move(element_births)),
      rank_(std::move(rank)),
      provenance_(std::move(provenance)) {
    if (!std::is_sorted(critical_values_.begin(), critical_values_.end()))
        throw InvalidArgumentError("critical values must be sorted");
    if (births_.size() != ground_.size()) throw InvalidArgumentError("one birth per ground element required");
    // structure maps between consecutive scales; inclusion filtrations keep
    // element identity, so these are identities recorded explicitly
    psi_step_.clear();
    for (std::size_t s = 0; s + 1 < critical_values_.size(); ++s) {
        std::vector<ElementId> id(ground_.size());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
        psi_step_.push_back(std::move(id));
    }
}

double FilteredMatroid::element_birth(ElementId e) const {
    if (e >= births_.size()) throw UnknownIdError("unknown element id " + std::to_string(e));
    return births_[e];
}

std::optional<std::size_t> FilteredMatroid::step_at(double eps) const {
    if (critical_values_.empty() || eps < critical_values_.front()) return std::nullopt;
    auto it = std::upper_bound(critical_values_.begin(), critical_values_.end(), eps);
    return static_cast<std::size_t>(it - critical_values_.begin()) - 1;
}

ElementSet FilteredMatroid::psi(std::size_t from_step, std::size_t to_step, const ElementSet& subset) const {
    if (from_step > to_step || to_step >= critical_values_.size())
        throw InvalidArgumentError("psi requires critical steps from <= to");
    ElementSet image = subset;
    for (std::size_t s = from_step; s < to_step; ++s) {
        for (auto& e : image) e = psi_step_[s].at(e);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
    }
    return image;
}

void FilteredMatroid::validate_subset(std::size_t step, const ElementSet& subset) const {
    if (step >= critical_values_.size()) throw InvalidArgumentError("critical step out of range");
    const double eps = critical_values_[step];
    for (std::size_t i = 0; i < subset.size(); ++i) {
        ElementId e = subset[i];
        if (e >= ground_.size()) throw UnknownIdError("unknown element id " + std::to_string(e));
        if (i > 0 && subset[i - 1] >= e) throw InvalidArgumentError("subsets must be sorted without duplicates");
        if (births_[e] > eps)
            throw InvalidArgumentError("element " + ground_[e] + " is born after scale " + format_double(eps));
    }
}

std::size_t FilteredMatroid::rank_at_step(std::size_t step, const ElementSet& subset) const {
    validate_subset(step, subset);
    return rank_(step, subset);
}

std::size_t FilteredMatroid::rank_at(double eps, const ElementSet& subset) const {
    auto step = step_at(eps);
    if (!step) throw InvalidArgumentError("scale " + format_double(eps) + " precedes every critical value");
    return rank_at_step(*step, subset);
}

ElementSet FilteredMatroid::born_at_step(std::size_t step) const {
    if (step >= critical_values_.size()) throw InvalidArgumentError("critical step out of range");
    ElementSet out;
    for (ElementId e = 0; e < ground_.size(); ++e)
        if (births_[e] <= critical_values_[step]) out.push_back(e);
    return out;
}

RankOracle FilteredMatroid::oracle_at_step(std::size_t step) const {
    ElementSet born = born_at_step(step);
    RankOracle oracle;
    oracle.ground.reserve(born.size());
    for (ElementId e : born) oracle.ground.push_back(ground_[e]);
    oracle.rank = [this, step, born](const ElementSet& local) {
        ElementSet global;
        global.reserve(local.size());
        for (ElementId e : local) global.push_back(born.at(e));
        return rank_at_step(step, global);
    };
    return oracle;
}

std::string FilteredMatroid::label_of(ElementId e) const {
    if (e >= ground_.size()) throw UnknownIdError("unknown element id " + std::to_string(e));
    return ground_[e];
}

std::optional<ElementId> FilteredMatroid::id_of_label(const std::string& label) const {
    for (ElementId e = 0; e < ground_.size(); ++e)
        if (ground_[e] == label) return e;
    return std::nullopt;
}

FilteredMatroid linear_filtered_matroid(std::vector<RationalVector> vectors, std::vector<std::string> labels,
                                        std::string provenance) {
    if (vectors.empty()) throw InvalidArgumentError("linear matroid needs at least one vector");
    const std::size_t dim = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != dim) throw InvalidArgumentError("vectors of unequal dimension");
    if (labels.size() != vectors.size()) throw InvalidArgumentError("one label per vector required");

    std::vector<double> cvs;
    for (std::size_t i = 0; i <= dim + 1; ++i) cvs.push_back(static_cast<double>(i));

    auto vecs = std::make_shared<std::vector<RationalVector>>(std::move(vectors));
    auto rank = [vecs, cvs](std::size_t step, const ElementSet& subset) -> std::size_t {
        std::vector<RationalVector> chosen;
        chosen.reserve(subset.size());
        for (ElementId e : subset) chosen.push_back(coordinate_zeroing((*vecs)[e], cvs[step]));
        return linear_rank(chosen);
    };

    std::vector<double> births(labels.size(), 0.0);
    return FilteredMatroid(std::move(cvs), std::move(labels), std::move(births), std::move(rank),
                           std::move(provenance));
}

std::string matroid_dump_json(const FilteredMatroid& fm) {
    nlohmann::json j;
    j["provenance"] = fm.provenance();
    j["ground"] = fm.ground();
    j["critical_values"] = fm.critical_values();
    auto scales = nlohmann::json::array();
    for (std::size_t step = 0; step < fm.critical_values().size(); ++step) {
        nlohmann::json entry;
        entry["epsilon"] = fm.critical_values()[step];
        ElementSet born = fm.born_at_step(step);
        auto labels = nlohmann::json::array();
        for (ElementId e : born) labels.push_back(fm.label_of(e));
        entry["born"] = labels;
        if (born.size() <= 12) {
            std::vector<std::size_t> table(std::size_t(1) << born.size());
            for (std::size_t mask = 0; mask < table.size(); ++mask) {
                ElementSet s;
                for (std::size_t i = 0; i < born.size(); ++i)
                    if (mask & (std::size_t(1) << i)) s.push_back(born[i]);
                table[mask] = fm.rank_at_step(step, s);
            }
            entry["rank_table"] = table;
        }
        scales.push_back(std::move(entry));
    }
    j["scales"] = std::move(scales);
    return j.dump(2);
}

}  // namespace ramify
