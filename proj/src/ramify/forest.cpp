#include "ramify/forest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace ramify {

namespace {

std::string join_labels(const RamificationForest& forest, const ElementSet& set, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += sep;
        out += set[i] < forest.ground.size() ? forest.ground[set[i]] : std::to_string(set[i]);
    }
    return out;
}

}  // namespace

std::optional<double> ramification_value(const FilteredMatroid& fm, const ElementSet& set, double eps0) {
    auto step = fm.step_at(eps0);
    if (!step) throw InvalidArgumentError("scale " + format_double(eps0) + " precedes every critical value");
    auto rank_here = [&](const ElementSet& s) { return fm.rank_at_step(*step, s); };
    if (!is_irreducible(set, rank_here))
        throw InvalidArgumentError("set is not irreducible at scale " + format_double(eps0));
    const std::size_t r0 = fm.rank_at_step(*step, set);
    for (std::size_t s = *step + 1; s < fm.critical_values().size(); ++s) {
        ElementSet image = fm.psi(*step, s, set);
        if (fm.rank_at_step(s, image) < r0) return fm.critical_values()[s];
    }
    return std::nullopt;
}

namespace {

struct ForestBuilder {
    const FilteredMatroid& fm;
    // share children: one node per (set, birth step)
    std::map<std::pair<ElementSet, std::size_t>, std::shared_ptr<const ForestNode>> memo;

    std::shared_ptr<const ForestNode> build(const ElementSet& set, std::size_t birth_step) {
        auto key = std::make_pair(set, birth_step);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        auto node = std::make_shared<ForestNode>();
        node->set = set;
        node->birth = fm.value_of_step(birth_step);
        node->rank_at_birth = fm.rank_at_step(birth_step, set);

        for (std::size_t s = birth_step + 1; s < fm.critical_values().size(); ++s) {
            ElementSet image = fm.psi(birth_step, s, set);
            if (fm.rank_at_step(s, image) >= node->rank_at_birth) continue;
            node->ramification = fm.value_of_step(s);
            auto rank_there = [&](const ElementSet& sub) { return fm.rank_at_step(s, sub); };
            for (const ElementSet& piece : irreducible_cover(image, rank_there))
                node->children.push_back(build(piece, s));
            break;
        }

        std::shared_ptr<const ForestNode> frozen = node;
        memo.emplace(std::move(key), frozen);
        return frozen;
    }
};

}  // namespace

RamificationForest build_forest(const FilteredMatroid& fm, const std::vector<Seed>& seeds) {
    RamificationForest forest;
    forest.ground = fm.ground();
    forest.provenance = fm.provenance();
    forest.degree = fm.degree();
    forest.last_critical = fm.critical_values().empty() ? 0 : fm.critical_values().back();

    ForestBuilder builder{fm, {}};
    for (const auto& [set, birth] : seeds) {
        auto step = fm.step_at(birth);
        if (!step) throw InvalidArgumentError("seed birth " + format_double(birth) + " precedes every critical value");
        auto rank_here = [&](const ElementSet& s) { return fm.rank_at_step(*step, s); };
        if (!is_irreducible(set, rank_here))
            throw InvalidArgumentError("seed is not irreducible at scale " + format_double(birth));
        forest.roots.push_back(builder.build(set, *step));
    }
    return forest;
}

std::vector<Seed> auto_seed(const FilteredMatroid& fm) {
    if (fm.ground_size() > 20)
        throw InvalidArgumentError("auto-seeding enumerates subsets exhaustively; ground set too large (" +
                                   std::to_string(fm.ground_size()) + " > 20)");
    std::vector<Seed> seeds;
    auto contained_in_seed = [&](const ElementSet& c) {
        for (const auto& [s, birth] : seeds)
            if (std::includes(s.begin(), s.end(), c.begin(), c.end())) return true;
        return false;
    };
    for (std::size_t step = 0; step < fm.critical_values().size(); ++step) {
        ElementSet born = fm.born_at_step(step);
        if (born.empty()) continue;
        auto rank_here = [&](const ElementSet& s) { return fm.rank_at_step(step, s); };
        for (const ElementSet& c : circuits_within(born, rank_here)) {
            // newly dependent: either a member just appeared or the same set
            // was still independent one critical value earlier
            bool fresh = false;
            if (step == 0) {
                fresh = true;
            } else {
                const double prev = fm.critical_values()[step - 1];
                bool all_born_before = true;
                for (ElementId e : c)
                    if (fm.element_birth(e) > prev) {
                        all_born_before = false;
                        break;
                    }
                fresh = !all_born_before || fm.rank_at_step(step - 1, c) == c.size();
            }
            if (fresh && !contained_in_seed(c)) seeds.emplace_back(c, fm.critical_values()[step]);
        }
    }
    return seeds;
}

// --- exports ---------------------------------------------------------------------

namespace {

void newick_node(std::string& out, const RamificationForest& forest, const ForestNode& node, bool root) {
    if (!node.children.empty()) {
        out += '(';
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i) out += ',';
            newick_node(out, forest, *node.children[i], false);
        }
        out += ')';
    }
    out += join_labels(forest, node.set, "+");
    if (!root) {
        const double end = node.ramification ? *node.ramification : forest.last_critical;
        out += ':';
        out += format_double(end - node.birth);
    }
}

// stable DFS numbering over the shared DAG
void collect_nodes(const std::shared_ptr<const ForestNode>& node,
                   std::unordered_map<const ForestNode*, std::size_t>& ids,
                   std::vector<const ForestNode*>& order) {
    if (ids.count(node.get())) return;
    ids.emplace(node.get(), order.size());
    order.push_back(node.get());
    for (const auto& c : node->children) collect_nodes(c, ids, order);
}

nlohmann::json json_node(const RamificationForest& forest, const ForestNode& node) {
    nlohmann::json j;
    auto set = nlohmann::json::array();
    for (ElementId e : node.set) set.push_back(e < forest.ground.size() ? forest.ground[e] : std::to_string(e));
    j["set"] = std::move(set);
    j["birth"] = node.birth;
    if (node.ramification)
        j["ramification"] = *node.ramification;
    else
        j["ramification"] = nullptr;
    auto children = nlohmann::json::array();
    for (const auto& c : node.children) children.push_back(json_node(forest, *c));
    j["children"] = std::move(children);
    return j;
}

}  // namespace

std::string export_newick(const RamificationForest& forest) {
    if (forest.empty()) return "[empty forest]\n";
    std::string out;
    for (const auto& root : forest.roots) {
        newick_node(out, forest, *root, true);
        out += ";\n";
    }
    return out;
}

std::string export_dot(const RamificationForest& forest) {
    std::string out = "digraph ramification {\n";
    out += "  rankdir=TB;\n  node [shape=box];\n";
    if (forest.empty()) out += "  // empty forest\n";
    std::unordered_map<const ForestNode*, std::size_t> ids;
    std::vector<const ForestNode*> order;
    for (const auto& root : forest.roots) collect_nodes(root, ids, order);
    for (const ForestNode* n : order) {
        out += "  n" + std::to_string(ids[n]) + " [label=\"{" + join_labels(forest, n->set, ",") + "}\\nbirth=" +
               format_double(n->birth);
        if (n->ramification) out += " ram=" + format_double(*n->ramification);
        out += "\"];\n";
    }
    for (const ForestNode* n : order)
        for (const auto& c : n->children)
            out += "  n" + std::to_string(ids[n]) + " -> n" + std::to_string(ids[c.get()]) + ";\n";
    out += "}\n";
    return out;
}

std::string export_json(const RamificationForest& forest) {
    nlohmann::json j;
    j["provenance"] = forest.provenance;
    j["degree"] = forest.degree;
    auto roots = nlohmann::json::array();
    for (const auto& r : forest.roots) roots.push_back(json_node(forest, *r));
    j["roots"] = std::move(roots);
    return j.dump(2) + "\n";
}

namespace {

struct SvgLayout {
    double leaf_cursor = 0;
    double leaf_gap = 90;

    // returns the x position of the subtree rooted here
    double place(const ForestNode& node, std::map<const ForestNode*, std::vector<double>>& xs) {
        double x;
        if (node.children.empty()) {
            x = leaf_cursor;
            leaf_cursor += leaf_gap;
        } else {
            double sum = 0;
            for (const auto& c : node.children) sum += place(*c, xs);
            x = sum / static_cast<double>(node.children.size());
        }
        xs[&node].push_back(x);  // shared nodes are laid out once per occurrence
        return x;
    }
};

}  // namespace

std::string export_svg(const RamificationForest& forest) {
    std::ostringstream svg;
    if (forest.empty()) {
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"320\" height=\"60\">\n"
            << "  <!-- empty forest -->\n"
            << "  <text x=\"10\" y=\"30\" font-family=\"sans-serif\" font-size=\"12\">empty forest</text>\n</svg>\n";
        return svg.str();
    }

    double min_scale = forest.roots.front()->birth;
    double max_scale = forest.last_critical;
    for (const auto& r : forest.roots) min_scale = std::min(min_scale, r->birth);
    if (max_scale <= min_scale) max_scale = min_scale + 1;

    const double margin_left = 70, margin_top = 40, height = 420, unit = height / (max_scale - min_scale);
    auto y_of = [&](double scale) { return margin_top + (scale - min_scale) * unit; };

    SvgLayout layout;
    std::map<const ForestNode*, std::vector<double>> xs;
    std::vector<double> root_x;
    for (const auto& r : forest.roots) root_x.push_back(layout.place(*r, xs));
    const double width = margin_left + std::max(layout.leaf_cursor, layout.leaf_gap) + 40;

    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(width) << "\" height=\""
        << format_double(height + 2 * margin_top + 40) << "\">\n";
    svg << "  <g font-family=\"sans-serif\" font-size=\"11\">\n";

    // vertical scale axis
    svg << "  <line x1=\"40\" y1=\"" << format_double(y_of(min_scale)) << "\" x2=\"40\" y2=\""
        << format_double(y_of(max_scale)) << "\" stroke=\"black\"/>\n";
    double tick = min_scale;
    // ticks at integers spanning the range, capped to keep the file small
    double span = max_scale - min_scale;
    double tick_step = span <= 12 ? 1 : span / 12;
    for (; tick <= max_scale + 1e-9; tick += tick_step) {
        svg << "  <line x1=\"35\" y1=\"" << format_double(y_of(tick)) << "\" x2=\"45\" y2=\""
            << format_double(y_of(tick)) << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"5\" y=\"" << format_double(y_of(tick) + 4) << "\">" << format_double(tick)
            << "</text>\n";
    }

    // draw the unfolded tree: one drawing per occurrence of a shared node
    struct Drawer {
        std::ostringstream& svg;
        const RamificationForest& forest;
        double margin_left;
        std::function<double(double)> y_of;
        std::map<const ForestNode*, std::size_t> occurrence;
        std::map<const ForestNode*, std::vector<double>>& xs;

        void draw(const ForestNode& node) {
            const double x = margin_left + xs[&node][occurrence[&node]++ % xs[&node].size()];
            const double end = node.ramification ? *node.ramification : forest.last_critical;
            svg << "  <line x1=\"" << format_double(x) << "\" y1=\"" << format_double(y_of(node.birth))
                << "\" x2=\"" << format_double(x) << "\" y2=\"" << format_double(y_of(end))
                << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
            svg << "  <text x=\"" << format_double(x + 4) << "\" y=\"" << format_double(y_of(node.birth) + 4)
                << "\">{" << join_labels(forest, node.set, ",") << "}</text>\n";
            if (!node.children.empty()) {
                double lo = x, hi = x;
                std::vector<double> child_x;
                for (const auto& c : node.children) {
                    double cx = margin_left + xs[c.get()][occurrence[c.get()] % xs[c.get()].size()];
                    child_x.push_back(cx);
                    lo = std::min(lo, cx);
                    hi = std::max(hi, cx);
                }
                svg << "  <line x1=\"" << format_double(lo) << "\" y1=\"" << format_double(y_of(end))
                    << "\" x2=\"" << format_double(hi) << "\" y2=\"" << format_double(y_of(end))
                    << "\" stroke=\"black\"/>\n";
                for (const auto& c : node.children) draw(*c);
            }
        }
    };

    Drawer drawer{svg, forest, margin_left, y_of, {}, xs};
    for (const auto& r : forest.roots) drawer.draw(*r);

    svg << "  </g>\n</svg>\n";
    return svg.str();
}

}  // namespace ramify
