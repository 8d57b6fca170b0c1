#pragma once

#include "ramify/matroid.hpp"

namespace ramify {

// Built-in example datasets, so the pipeline can run without external files.

// Twelve points: a large triangle ABC around three small triangles DEF, GHI,
// JKL.  Vertices appear at 0, the small triangle edges at 1, the large
// triangle edges at 2; at 3 the region between the large triangle and the
// small ones is triangulated (18 connecting edges, 16 triangles); the small
// triangles are filled at 4, 5 and 6 in order.  Vertex ids: A..L = 0..11.
FilteredComplex triangle_demo_filtration();

// The coordinate-zeroing matroid on
//   {(1,1,1,1), (1,1,2,2), (1,2,3,3), (3,5,6,6)}
// with rank_eps(A) = dim span(s_eps(A)), labels v1..v4.
FilteredMatroid coordinate_zeroing_demo_matroid();

}  // namespace ramify
