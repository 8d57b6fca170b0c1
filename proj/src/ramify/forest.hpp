#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramify/matroid.hpp"

namespace ramify {

// A node of the ramification forest: an irreducible set, the scale at which it
// appeared, and the scale at which its image loses rank (absent for leaves).
// Equal circuits produced by two parents at the same scale are shared, so the
// in-memory structure is a DAG; exports that cannot express sharing duplicate
// the subtree.
struct ForestNode {
    ElementSet set;
    double birth = 0;
    std::optional<double> ramification;
    std::size_t rank_at_birth = 0;
    std::vector<std::shared_ptr<const ForestNode>> children;

    bool leaf() const { return children.empty(); }
};

struct RamificationForest {
    std::vector<std::shared_ptr<const ForestNode>> roots;
    std::vector<std::string> ground;  // element labels for exports
    std::string provenance;
    int degree = -1;           // homological degree for cophenetic forests, -1 otherwise
    double last_critical = 0;  // scan horizon, used for leaf branch lengths

    bool empty() const { return roots.empty(); }
};

using Seed = std::pair<ElementSet, double>;  // irreducible set with its birth scale

// First critical value eta > eps0 at which the image of `set` loses rank, or
// nullopt if the rank persists through the last critical value.  Errors if the
// set is not irreducible at eps0.
std::optional<double> ramification_value(const FilteredMatroid& fm, const ElementSet& set, double eps0);

// Recursive ramification: split at the first rank drop via irreducible_cover,
// attach children at the drop scale, recurse.  Terminates because every child
// is a proper subset.
RamificationForest build_forest(const FilteredMatroid& fm, const std::vector<Seed>& seeds);

// Forest roots discovered from the matroid itself: at each critical value, the
// circuits that became dependent there, skipping any contained in an earlier
// seed (those appear inside the earlier root's subtree).
std::vector<Seed> auto_seed(const FilteredMatroid& fm);

// --- exports -----------------------------------------------------------------

// Newick with '+'-joined (comma-free) set labels and branch lengths equal to
// the node's lifespan (ramification - birth; leaves run to the last critical
// value).  Shared subtrees are duplicated.  One tree per root, one per line.
std::string export_newick(const RamificationForest& forest);

// DOT digraph, root-down; sharing is preserved (a shared node has two parents).
std::string export_dot(const RamificationForest& forest);

// Nested nodes {set, birth, ramification, children}; shared subtrees duplicated.
std::string export_json(const RamificationForest& forest);

// Dendrogram with the scale axis vertical.
std::string export_svg(const RamificationForest& forest);

}  // namespace ramify
