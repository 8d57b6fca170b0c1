#include "ramify/demo.hpp"

#include <algorithm>

namespace ramify {

FilteredComplex triangle_demo_filtration() {
    std::vector<std::pair<Simplex, double>> s;
    // vertices A=0 B=1 C=2 D=3 E=4 F=5 G=6 H=7 I=8 J=9 K=10 L=11
    for (VertexId v = 0; v < 12; ++v) s.emplace_back(Simplex{v}, 0.0);

    auto edge = [&](VertexId a, VertexId b, double birth) {
        s.emplace_back(Simplex{std::min(a, b), std::max(a, b)}, birth);
    };
    auto tri = [&](VertexId a, VertexId b, VertexId c, double birth) {
        std::vector<VertexId> vs{a, b, c};
        std::sort(vs.begin(), vs.end());
        s.emplace_back(Simplex(vs), birth);
    };

    // small triangle boundaries
    edge(3, 4, 1);  // DE
    edge(3, 5, 1);  // DF
    edge(4, 5, 1);  // EF
    edge(6, 7, 1);  // GH
    edge(6, 8, 1);  // GI
    edge(7, 8, 1);  // HI
    edge(9, 10, 1);   // JK
    edge(9, 11, 1);   // JL
    edge(10, 11, 1);  // KL

    // large triangle boundary
    edge(0, 1, 2);  // AB
    edge(0, 2, 2);  // AC
    edge(1, 2, 2);  // BC

    // triangulation of the region between the large triangle and the holes
    edge(0, 3, 3);   // AD
    edge(0, 4, 3);   // AE
    edge(0, 9, 3);   // AJ
    edge(0, 10, 3);  // AK
    edge(2, 10, 3);  // CK
    edge(4, 9, 3);   // EJ
    edge(1, 8, 3);   // BI
    edge(0, 8, 3);   // AI
    edge(0, 6, 3);   // AG
    edge(5, 6, 3);   // FG
    edge(0, 5, 3);   // AF
    edge(1, 10, 3);  // BK
    edge(1, 11, 3);  // BL
    edge(7, 11, 3);  // HL
    edge(1, 7, 3);   // BH
    edge(4, 6, 3);   // EG
    edge(4, 7, 3);   // EH
    edge(4, 11, 3);  // EL

    tri(0, 3, 4, 3);   // ADE
    tri(0, 4, 9, 3);   // AEJ
    tri(0, 9, 10, 3);  // AJK
    tri(0, 2, 10, 3);  // AKC
    tri(0, 1, 8, 3);   // ABI
    tri(0, 6, 8, 3);   // AIG
    tri(0, 5, 6, 3);   // AGF
    tri(0, 3, 5, 3);   // AFD
    tri(1, 2, 10, 3);  // BCK
    tri(1, 10, 11, 3); // BKL
    tri(1, 7, 11, 3);  // BLH
    tri(1, 7, 8, 3);   // BHI
    tri(4, 5, 6, 3);   // EFG
    tri(4, 6, 7, 3);   // EGH
    tri(4, 7, 11, 3);  // EHL
    tri(4, 9, 11, 3);  // ELJ

    // fill the small triangles in order
    tri(3, 4, 5, 4);   // DEF
    tri(6, 7, 8, 5);   // GHI
    tri(9, 10, 11, 6); // JKL

    return FilteredComplex::build(std::move(s));
}

FilteredMatroid coordinate_zeroing_demo_matroid() {
    std::vector<RationalVector> vectors = {
        {1, 1, 1, 1},
        {1, 1, 2, 2},
        {1, 2, 3, 3},
        {3, 5, 6, 6},
    };
    return linear_filtered_matroid(std::move(vectors), {"v1", "v2", "v3", "v4"}, "coordinate-zeroing demo");
}

}  // namespace ramify
