#pragma once

#include <vector>

#include "ramify/field.hpp"

namespace ramify {

using RationalPoint = std::vector<Rational>;

// Smallest enclosing ball of a small point set, computed exactly over the
// rationals: Welzl's move-to-boundary recursion with a fixed point order, so
// results are reproducible bit for bit.  Returns the squared radius.
// Intended for the tiny vertex sets of Cech simplices (|points| <= dim+1 in
// practice); cost grows quickly with |points|.
Rational min_enclosing_ball_sq_radius(const std::vector<RationalPoint>& points);

// Convenience overload on double coordinates (exact after conversion).
Rational min_enclosing_ball_sq_radius(const std::vector<std::vector<double>>& points);

// Squared Euclidean distance over the rationals.
Rational sq_distance(const RationalPoint& a, const RationalPoint& b);

RationalPoint to_rational_point(const std::vector<double>& p);

}  // namespace ramify
