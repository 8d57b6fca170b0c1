#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ramify/simplex.hpp"

namespace ramify {

using SimplexIndex = std::int32_t;

struct PointCloud {
    // one coordinate vector per point, all of equal dimension >= 1
    std::vector<std::vector<double>> points;

    std::size_t size() const { return points.size(); }
    std::size_t ambient_dim() const { return points.empty() ? 0 : points.front().size(); }
    void validate() const;
};

// A filtered simplicial complex in its canonical total order:
// simplices sorted by (birth, dimension, lexicographic vertices).
// Because birth is the primary key, "born at or before epsilon" is always a
// prefix of the canonical order; everything downstream relies on that.
class FilteredComplex {
public:
    FilteredComplex() = default;

    // Sorts canonically, indexes, and validates face closure.
    static FilteredComplex build(std::vector<std::pair<Simplex, double>> simplices);

    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }

    const Simplex& simplex(SimplexIndex i) const { return simplices_[static_cast<std::size_t>(i)]; }
    double birth(SimplexIndex i) const { return births_[static_cast<std::size_t>(i)]; }
    int dimension(SimplexIndex i) const { return simplices_[static_cast<std::size_t>(i)].dimension(); }
    int top_dimension() const { return top_dim_; }

    const std::vector<double>& critical_values() const { return critical_values_; }
    // index into critical_values() of the simplex's birth
    std::size_t birth_step(SimplexIndex i) const { return birth_steps_[static_cast<std::size_t>(i)]; }

    // largest critical value <= eps, as an index; nullopt if eps precedes everything
    std::optional<std::size_t> step_at(double eps) const;

    // number of simplices born at or before critical step `step` (a canonical-order prefix)
    SimplexIndex prefix_size(std::size_t step) const { return prefix_sizes_[step]; }

    std::optional<SimplexIndex> index_of(const Simplex& s) const;

    std::size_t count_dimension(int dim) const;

    // global indices of the codimension-1 faces, in vertex-removal order
    std::vector<SimplexIndex> face_indices(SimplexIndex i) const;

    friend bool operator==(const FilteredComplex& a, const FilteredComplex& b) {
        return a.simplices_ == b.simplices_ && a.births_ == b.births_;
    }

private:
    void index();
    void validate_closure() const;

    std::vector<Simplex> simplices_;
    std::vector<double> births_;
    std::vector<double> critical_values_;
    std::vector<std::size_t> birth_steps_;
    std::vector<SimplexIndex> prefix_sizes_;
    std::unordered_map<Simplex, SimplexIndex, SimplexHash> lookup_;
    int top_dim_ = -1;
};

// --- construction from data -------------------------------------------------

FilteredComplex build_vietoris_rips(const PointCloud& cloud, int max_dim, double max_scale);
FilteredComplex build_cech(const PointCloud& cloud, int max_dim, double max_scale);

struct Graph {
    std::vector<VertexId> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
};

FilteredComplex clique_complex(const Graph& graph, int max_dim = 2);

// nerve of a cover: one vertex per member set, a k-simplex per (k+1) members
// with non-empty common intersection
FilteredComplex nerve(const std::vector<std::vector<VertexId>>& cover, int max_dim = 2);

// --- text formats -----------------------------------------------------------

// filtration file: one simplex per line, `v0 v1 ... vk;birth`, '#' comments
FilteredComplex load_filtration(const std::string& path);
FilteredComplex parse_filtration(std::istream& in, const std::string& origin);
void save_filtration(const FilteredComplex& complex, const std::string& path);
std::string format_filtration(const FilteredComplex& complex);

// CSV point cloud: one point per row, no header
PointCloud load_point_cloud(const std::string& path);
PointCloud parse_point_cloud(std::istream& in, const std::string& origin);

// graph file: one edge `u v` or isolated vertex `u` per line, '#' comments
Graph load_graph(const std::string& path);
Graph parse_graph(std::istream& in, const std::string& origin);

// cover file: one member set per line as space-separated ids, '#' comments
std::vector<std::vector<VertexId>> load_cover(const std::string& path);
std::vector<std::vector<VertexId>> parse_cover(std::istream& in, const std::string& origin);

// shortest round-trip decimal for a double (used by every text emitter)
std::string format_double(double x);

}  // namespace ramify
