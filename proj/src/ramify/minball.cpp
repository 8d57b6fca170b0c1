#include "ramify/minball.hpp"

#include <optional>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

struct Ball {
    RationalPoint center;
    Rational sq_radius;
};

bool contains(const Ball& b, const RationalPoint& p) { return sq_distance(b.center, p) <= b.sq_radius; }

// Unique smallest ball having all of `boundary` on its sphere: the circumball
// within the affine hull.  Solves the Gram system G lambda = b exactly.
// Returns nullopt when the points are affinely dependent (singular system).
std::optional<Ball> circumball(const std::vector<RationalPoint>& boundary) {
    if (boundary.empty()) return std::nullopt;
    const std::size_t m = boundary.size() - 1;
    const RationalPoint& base = boundary.front();
    if (m == 0) return Ball{base, Rational(0)};

    const std::size_t dim = base.size();
    std::vector<RationalPoint> v(m, RationalPoint(dim));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t d = 0; d < dim; ++d) v[i][d] = boundary[i + 1][d] - base[d];

    // augmented Gram matrix [G | b]
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Rational dot = 0;
            for (std::size_t d = 0; d < dim; ++d) dot += v[i][d] * v[j][d];
            a[i][j] = dot;
        }
        Rational norm = 0;
        for (std::size_t d = 0; d < dim; ++d) norm += v[i][d] * v[i][d];
        a[i][m] = norm / 2;
    }

    // exact Gaussian elimination with first-nonzero pivoting
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) return std::nullopt;  // affinely dependent
        std::swap(a[col], a[pivot]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }

    RationalPoint center = base;
    for (std::size_t i = 0; i < m; ++i) {
        Rational lambda = a[i][m] / a[i][i];
        for (std::size_t d = 0; d < dim; ++d) center[d] += lambda * v[i][d];
    }
    return Ball{center, sq_distance(center, base)};
}

// Smallest ball with all of R on the boundary; when R is affinely dependent
// (degenerate input), fall back to the smallest circumball of a subset of R
// that still encloses R.
Ball ball_with_boundary(const std::vector<RationalPoint>& r) {
    if (auto b = circumball(r)) return *b;
    const std::size_t n = r.size();
    std::optional<Ball> best;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<RationalPoint> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) sub.push_back(r[i]);
        auto b = circumball(sub);
        if (!b) continue;
        bool encloses = true;
        for (const auto& p : r)
            if (!contains(*b, p)) {
                encloses = false;
                break;
            }
        if (encloses && (!best || b->sq_radius < best->sq_radius)) best = *b;
    }
    if (!best) throw InternalError("min-ball fallback found no enclosing circumball");
    return *best;
}

Ball welzl(const std::vector<RationalPoint>& points, std::vector<RationalPoint> boundary, std::size_t n) {
    if (n == 0 || boundary.size() == points.front().size() + 1) {
        if (boundary.empty()) return Ball{{}, Rational(-1)};  // no constraints yet
        return ball_with_boundary(boundary);
    }
    const RationalPoint& p = points[n - 1];
    Ball b = welzl(points, boundary, n - 1);
    if (b.sq_radius >= 0 && contains(b, p)) return b;
    boundary.push_back(p);
    return welzl(points, std::move(boundary), n - 1);
}

}  // namespace

Rational sq_distance(const RationalPoint& a, const RationalPoint& b) {
    if (a.size() != b.size()) throw InvalidArgumentError("dimension mismatch in sq_distance");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

RationalPoint to_rational_point(const std::vector<double>& p) {
    RationalPoint r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rational(p[i]);
    return r;
}

Rational min_enclosing_ball_sq_radius(const std::vector<RationalPoint>& points) {
    if (points.empty()) throw InvalidArgumentError("min enclosing ball of an empty set");
    Ball b = welzl(points, {}, points.size());
    if (b.sq_radius < 0) throw InternalError("welzl recursion produced no ball");
    return b.sq_radius;
}

Rational min_enclosing_ball_sq_radius(const std::vector<std::vector<double>>& points) {
    std::vector<RationalPoint> r;
    r.reserve(points.size());
    for (const auto& p : points) r.push_back(to_rational_point(p));
    return min_enclosing_ball_sq_radius(r);
}

}  // namespace ramify
