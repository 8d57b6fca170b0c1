#include "ramify/filtration.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "ramify/minball.hpp"

namespace ramify {

// --- PointCloud ---------------------------------------------------------------

void PointCloud::validate() const {
    if (points.empty()) throw InvalidArgumentError("empty point cloud");
    const std::size_t dim = points.front().size();
    if (dim == 0) throw InvalidArgumentError("points must have dimension >= 1");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim)
            throw InvalidArgumentError("point " + std::to_string(i) + " has dimension " +
                                       std::to_string(points[i].size()) + ", expected " + std::to_string(dim));
        for (double c : points[i])
            if (!std::isfinite(c)) throw InvalidArgumentError("non-finite coordinate in point " + std::to_string(i));
    }
}

// --- FilteredComplex ------------------------------------------------------------

FilteredComplex FilteredComplex::build(std::vector<std::pair<Simplex, double>> simplices) {
    for (const auto& [s, b] : simplices) {
        s.validate();
        if (!std::isfinite(b) || b < 0)
            throw InvalidArgumentError("birth of simplex " + s.str() + " must be a finite non-negative value");
    }
    std::sort(simplices.begin(), simplices.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        if (a.first.dimension() != b.first.dimension()) return a.first.dimension() < b.first.dimension();
        return a.first.vertices < b.first.vertices;
    });
    FilteredComplex c;
    c.simplices_.reserve(simplices.size());
    c.births_.reserve(simplices.size());
    for (auto& [s, b] : simplices) {
        if (!c.simplices_.empty() && c.simplices_.back() == s)
            throw InvalidArgumentError("duplicate simplex " + s.str());
        c.simplices_.push_back(std::move(s));
        c.births_.push_back(b);
    }
    c.index();
    c.validate_closure();
    return c;
}

void FilteredComplex::index() {
    lookup_.clear();
    lookup_.reserve(simplices_.size());
    top_dim_ = -1;
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
        lookup_.emplace(simplices_[i], static_cast<SimplexIndex>(i));
        top_dim_ = std::max(top_dim_, simplices_[i].dimension());
    }
    critical_values_.clear();
    birth_steps_.assign(births_.size(), 0);
    for (std::size_t i = 0; i < births_.size(); ++i) {
        if (critical_values_.empty() || births_[i] != critical_values_.back()) critical_values_.push_back(births_[i]);
        birth_steps_[i] = critical_values_.size() - 1;
    }
    prefix_sizes_.assign(critical_values_.size(), 0);
    for (std::size_t i = 0; i < births_.size(); ++i)
        prefix_sizes_[birth_steps_[i]] = static_cast<SimplexIndex>(i + 1);
}

void FilteredComplex::validate_closure() const {
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
        const Simplex& s = simplices_[i];
        if (s.dimension() == 0) continue;
        for (int f = 0; f <= s.dimension(); ++f) {
            Simplex face = s.face(f);
            auto it = lookup_.find(face);
            if (it == lookup_.end())
                throw ClosureError("face " + face.str() + " of simplex " + s.str() + " is missing");
            if (births_[static_cast<std::size_t>(it->second)] > births_[i])
                throw ClosureError("face " + face.str() + " is born later than its coface " + s.str());
        }
    }
}

std::optional<std::size_t> FilteredComplex::step_at(double eps) const {
    if (critical_values_.empty() || eps < critical_values_.front()) return std::nullopt;
    auto it = std::upper_bound(critical_values_.begin(), critical_values_.end(), eps);
    return static_cast<std::size_t>(it - critical_values_.begin()) - 1;
}

std::optional<SimplexIndex> FilteredComplex::index_of(const Simplex& s) const {
    auto it = lookup_.find(s);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::size_t FilteredComplex::count_dimension(int dim) const {
    std::size_t n = 0;
    for (const auto& s : simplices_)
        if (s.dimension() == dim) ++n;
    return n;
}

std::vector<SimplexIndex> FilteredComplex::face_indices(SimplexIndex i) const {
    const Simplex& s = simplex(i);
    std::vector<SimplexIndex> out;
    out.reserve(static_cast<std::size_t>(s.dimension()) + 1);
    for (int f = 0; f <= s.dimension(); ++f) {
        auto idx = index_of(s.face(f));
        if (!idx) throw InternalError("closure hole while collecting faces of " + s.str());
        out.push_back(*idx);
    }
    return out;
}

// --- geometric builders ---------------------------------------------------------

namespace {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

// expands cliques in increasing vertex order; `lower` holds candidate
// extensions, birth(sigma + u) is provided by the caller
template <class BirthFn, class Emit>
void expand_cliques(std::vector<VertexId>& sigma, double sigma_birth, const std::vector<VertexId>& candidates,
                    const std::vector<std::vector<bool>>& adjacent, int max_dim, BirthFn&& birth_of, Emit&& emit) {
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        VertexId u = candidates[ci];
        double b = birth_of(sigma, sigma_birth, u);
        if (std::isnan(b)) continue;  // extension exceeds the scale bound
        sigma.push_back(u);
        emit(sigma, b);
        if (static_cast<int>(sigma.size()) - 1 < max_dim) {
            std::vector<VertexId> next;
            for (std::size_t cj = ci + 1; cj < candidates.size(); ++cj)
                if (adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(candidates[cj])])
                    next.push_back(candidates[cj]);
            expand_cliques(sigma, b, next, adjacent, max_dim, birth_of, emit);
        }
        sigma.pop_back();
    }
}

}  // namespace

FilteredComplex build_vietoris_rips(const PointCloud& cloud, int max_dim, double max_scale) {
    cloud.validate();
    if (max_dim < 0) throw InvalidArgumentError("max_dim must be >= 0");
    if (!(max_scale > 0)) throw InvalidArgumentError("max_scale must be > 0");

    const std::size_t n = cloud.size();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0));
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = euclidean(cloud.points[i], cloud.points[j]);
            dist[i][j] = dist[j][i] = d;
            adjacent[i][j] = adjacent[j][i] = d <= max_scale;
        }

    std::vector<std::pair<Simplex, double>> out;
    // Rips birth of sigma+u = max of sigma's birth and the edges to u
    auto birth_of = [&](const std::vector<VertexId>& sigma, double sigma_birth, VertexId u) -> double {
        double b = sigma_birth;
        for (VertexId v : sigma) {
            double d = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
            if (d > max_scale) return std::nan("");
            b = std::max(b, d);
        }
        return b;
    };
    auto emit = [&](const std::vector<VertexId>& sigma, double b) { out.emplace_back(Simplex(sigma), b); };

    std::vector<VertexId> sigma;
    std::vector<VertexId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<VertexId>(i);
    expand_cliques(sigma, 0.0, all, adjacent, max_dim, birth_of, emit);
    return FilteredComplex::build(std::move(out));
}

FilteredComplex build_cech(const PointCloud& cloud, int max_dim, double max_scale) {
    cloud.validate();
    if (max_dim < 0) throw InvalidArgumentError("max_dim must be >= 0");
    if (!(max_scale > 0)) throw InvalidArgumentError("max_scale must be > 0");

    const std::size_t n = cloud.size();
    std::vector<RationalPoint> rat(n);
    for (std::size_t i = 0; i < n; ++i) rat[i] = to_rational_point(cloud.points[i]);
    const Rational max_sq = Rational(max_scale) * Rational(max_scale);

    // min-ball radius grows with the vertex set, so pruning on it is sound
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational r2 = sq_distance(rat[i], rat[j]) / 4;
            adjacent[i][j] = adjacent[j][i] = r2 <= max_sq;
        }

    std::vector<std::pair<Simplex, double>> out;
    auto birth_of = [&](const std::vector<VertexId>& sigma, double, VertexId u) -> double {
        std::vector<RationalPoint> pts;
        pts.reserve(sigma.size() + 1);
        for (VertexId v : sigma) pts.push_back(rat[static_cast<std::size_t>(v)]);
        pts.push_back(rat[static_cast<std::size_t>(u)]);
        Rational r2 = min_enclosing_ball_sq_radius(pts);
        if (r2 > max_sq) return std::nan("");
        return std::sqrt(static_cast<double>(r2));
    };
    auto emit = [&](const std::vector<VertexId>& sigma, double b) { out.emplace_back(Simplex(sigma), b); };

    std::vector<VertexId> sigma;
    std::vector<VertexId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<VertexId>(i);
    expand_cliques(sigma, 0.0, all, adjacent, max_dim, birth_of, emit);
    return FilteredComplex::build(std::move(out));
}

FilteredComplex clique_complex(const Graph& graph, int max_dim) {
    if (max_dim < 0) throw InvalidArgumentError("max_dim must be >= 0");
    std::set<VertexId> vertex_set(graph.vertices.begin(), graph.vertices.end());
    for (auto [u, v] : graph.edges) {
        if (u == v) throw InvalidArgumentError("self-loop at vertex " + std::to_string(u));
        vertex_set.insert(u);
        vertex_set.insert(v);
    }
    std::vector<VertexId> verts(vertex_set.begin(), vertex_set.end());
    std::unordered_map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = i;

    // adjacency over local indices 0..n-1
    std::vector<std::vector<bool>> adjacent(verts.size(), std::vector<bool>(verts.size(), false));
    for (auto [u, v] : graph.edges) {
        std::size_t a = pos[u], b = pos[v];
        adjacent[a][b] = adjacent[b][a] = true;
    }

    std::vector<std::pair<Simplex, double>> out;
    auto birth_of = [&](const std::vector<VertexId>& sigma, double, VertexId u) -> double {
        for (VertexId v : sigma)
            if (!adjacent[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) return std::nan("");
        return 0.0;
    };
    // expansion works over local indices; translate to the original ids on emit
    auto emit = [&](const std::vector<VertexId>& sigma, double b) {
        std::vector<VertexId> named;
        named.reserve(sigma.size());
        for (VertexId v : sigma) named.push_back(verts[static_cast<std::size_t>(v)]);
        std::sort(named.begin(), named.end());
        out.emplace_back(Simplex(std::move(named)), b);
    };

    std::vector<VertexId> sigma;
    std::vector<VertexId> all(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) all[i] = static_cast<VertexId>(i);
    expand_cliques(sigma, 0.0, all, adjacent, max_dim, birth_of, emit);
    return FilteredComplex::build(std::move(out));
}

FilteredComplex nerve(const std::vector<std::vector<VertexId>>& cover, int max_dim) {
    if (cover.empty()) throw InvalidArgumentError("empty cover");
    if (max_dim < 0) throw InvalidArgumentError("max_dim must be >= 0");

    std::vector<std::vector<VertexId>> members;
    members.reserve(cover.size());
    for (const auto& m : cover) {
        auto s = m;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        members.push_back(std::move(s));
    }

    std::vector<std::pair<Simplex, double>> out;
    // recursive expansion carrying the running intersection
    std::vector<VertexId> sigma;
    auto intersect = [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
        std::vector<VertexId> r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    };
    std::function<void(std::vector<VertexId>&, const std::vector<VertexId>&, std::size_t)> expand =
        [&](std::vector<VertexId>& cur, const std::vector<VertexId>& common, std::size_t from) {
            for (std::size_t u = from; u < members.size(); ++u) {
                std::vector<VertexId> next_common =
                    cur.empty() ? members[u] : intersect(common, members[u]);
                if (!cur.empty() && next_common.empty()) continue;
                cur.push_back(static_cast<VertexId>(u));
                out.emplace_back(Simplex(cur), 0.0);
                if (static_cast<int>(cur.size()) - 1 < max_dim) expand(cur, next_common, u + 1);
                cur.pop_back();
            }
        };
    expand(sigma, {}, 0);
    return FilteredComplex::build(std::move(out));
}

// --- text formats -----------------------------------------------------------------

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

std::string location(const std::string& origin, std::size_t line) {
    return origin + ":" + std::to_string(line);
}

bool parse_int(const std::string& tok, VertexId& out) {
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

bool parse_dbl(const std::string& tok, double& out) {
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> toks;
    std::istringstream is(s);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

}  // namespace

FilteredComplex parse_filtration(std::istream& in, const std::string& origin) {
    std::vector<std::pair<Simplex, double>> simplices;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (split_ws(body).empty()) continue;
        auto sep = body.find(';');
        if (sep == std::string::npos)
            throw ParseError("malformed line at " + location(origin, lineno) + ": missing ';' separator");
        auto vert_toks = split_ws(body.substr(0, sep));
        auto birth_toks = split_ws(body.substr(sep + 1));
        if (vert_toks.empty() || birth_toks.size() != 1)
            throw ParseError("malformed line at " + location(origin, lineno) + ": expected `v0 v1 ... vk;birth`");
        std::vector<VertexId> verts;
        for (const auto& t : vert_toks) {
            VertexId v;
            if (!parse_int(t, v))
                throw ParseError("malformed line at " + location(origin, lineno) + ": bad vertex id '" + t + "'");
            verts.push_back(v);
        }
        double birth;
        if (!parse_dbl(birth_toks[0], birth) || !std::isfinite(birth))
            throw ParseError("malformed line at " + location(origin, lineno) + ": bad birth '" + birth_toks[0] + "'");
        Simplex s;
        try {
            s = Simplex(std::move(verts));
        } catch (const InvalidArgumentError& e) {
            throw ParseError("malformed line at " + location(origin, lineno) + ": " + e.what());
        }
        simplices.emplace_back(std::move(s), birth);
    }
    return FilteredComplex::build(std::move(simplices));
}

FilteredComplex load_filtration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open filtration file: " + path);
    return parse_filtration(in, path);
}

std::string format_filtration(const FilteredComplex& complex) {
    std::string out;
    for (std::size_t i = 0; i < complex.size(); ++i) {
        const Simplex& s = complex.simplex(static_cast<SimplexIndex>(i));
        for (std::size_t j = 0; j < s.vertices.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(s.vertices[j]);
        }
        out += ';';
        out += format_double(complex.birth(static_cast<SimplexIndex>(i)));
        out += '\n';
    }
    return out;
}

void save_filtration(const FilteredComplex& complex, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << format_filtration(complex);
    if (!out) throw IoError("failed writing filtration to " + path);
}

PointCloud parse_point_cloud(std::istream& in, const std::string& origin) {
    PointCloud cloud;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        // split on commas
        std::vector<double> coords;
        std::size_t start = 0;
        bool any = false;
        for (std::size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || body[i] == ',') {
                std::string tok = body.substr(start, i - start);
                auto ws = split_ws(tok);
                if (ws.size() == 1) {
                    double v;
                    if (!parse_dbl(ws[0], v))
                        throw ParseError("malformed line at " + location(origin, lineno) + ": bad coordinate '" +
                                         ws[0] + "'");
                    coords.push_back(v);
                    any = true;
                } else if (!ws.empty()) {
                    throw ParseError("malformed line at " + location(origin, lineno) + ": bad field '" + tok + "'");
                }
                start = i + 1;
            }
        }
        if (any) cloud.points.push_back(std::move(coords));
    }
    cloud.validate();
    return cloud;
}

PointCloud load_point_cloud(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open point file: " + path);
    return parse_point_cloud(in, path);
}

Graph parse_graph(std::istream& in, const std::string& origin) {
    Graph g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(strip_comment(line));
        if (toks.empty()) continue;
        if (toks.size() > 2) throw ParseError("malformed line at " + location(origin, lineno) + ": expected `u` or `u v`");
        VertexId u, v;
        if (!parse_int(toks[0], u))
            throw ParseError("malformed line at " + location(origin, lineno) + ": bad vertex '" + toks[0] + "'");
        if (toks.size() == 1) {
            g.vertices.push_back(u);
        } else {
            if (!parse_int(toks[1], v))
                throw ParseError("malformed line at " + location(origin, lineno) + ": bad vertex '" + toks[1] + "'");
            g.edges.emplace_back(u, v);
        }
    }
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph file: " + path);
    return parse_graph(in, path);
}

std::vector<std::vector<VertexId>> parse_cover(std::istream& in, const std::string& origin) {
    std::vector<std::vector<VertexId>> cover;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(strip_comment(line));
        if (toks.empty()) continue;
        std::vector<VertexId> members;
        for (const auto& t : toks) {
            VertexId v;
            if (!parse_int(t, v))
                throw ParseError("malformed line at " + location(origin, lineno) + ": bad id '" + t + "'");
            members.push_back(v);
        }
        cover.push_back(std::move(members));
    }
    return cover;
}

std::vector<std::vector<VertexId>> load_cover(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open cover file: " + path);
    return parse_cover(in, path);
}

}  // namespace ramify
