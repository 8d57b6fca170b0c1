#include <doctest.h>

#include "oracles.hpp"

using namespace ramify;

namespace {

// circle: three vertices and three edges, all born at 1
FilteredComplex circle() {
    std::vector<std::pair<Simplex, double>> s;
    for (VertexId v = 0; v < 3; ++v) s.emplace_back(Simplex{v}, 1.0);
    s.emplace_back(Simplex{0, 1}, 1.0);
    s.emplace_back(Simplex{0, 2}, 1.0);
    s.emplace_back(Simplex{1, 2}, 1.0);
    return FilteredComplex::build(std::move(s));
}

FilteredComplex filled_triangle() {
    std::vector<std::pair<Simplex, double>> s;
    for (VertexId v = 0; v < 3; ++v) s.emplace_back(Simplex{v}, 1.0);
    s.emplace_back(Simplex{0, 1}, 1.0);
    s.emplace_back(Simplex{0, 2}, 1.0);
    s.emplace_back(Simplex{1, 2}, 1.0);
    s.emplace_back(Simplex{0, 1, 2}, 2.0);
    return FilteredComplex::build(std::move(s));
}

Chain<Rational> chain_of(const FilteredComplex& c, int degree,
                         std::vector<std::pair<Simplex, long>> terms) {
    Chain<Rational> out(degree);
    for (auto& [s, coeff] : terms) {
        auto idx = c.index_of(s);
        REQUIRE(idx.has_value());
        out.add_term(*idx, Rational(coeff));
    }
    return out;
}

// the four 1-cycles of the triangle demo, as chains
std::vector<Chain<Rational>> triangle_generators(const FilteredComplex& c) {
    auto tri_cycle = [&](VertexId a, VertexId b, VertexId v) {
        return chain_of(c, 1, {{Simplex{a, b}, 1}, {Simplex{a, v}, -1}, {Simplex{b, v}, 1}});
    };
    // order: DEF, GHI, JKL, ABC (matches the barcode generator order)
    return {tri_cycle(3, 4, 5), tri_cycle(6, 7, 8), tri_cycle(9, 10, 11), tri_cycle(0, 1, 2)};
}

}  // namespace

TEST_CASE("boundary of an edge is the signed vertex difference") {
    auto c = circle();
    auto edge = chain_of(c, 1, {{Simplex{0, 1}, 1}});
    auto b = boundary_apply(edge, c);
    CHECK(b == chain_of(c, 0, {{Simplex{1}, 1}, {Simplex{0}, -1}}));
}

TEST_CASE("boundary of a triangle alternates over its faces") {
    auto c = filled_triangle();
    auto tri = chain_of(c, 2, {{Simplex{0, 1, 2}, 1}});
    auto b = boundary_apply(tri, c);
    CHECK(b == chain_of(c, 1, {{Simplex{1, 2}, 1}, {Simplex{0, 2}, -1}, {Simplex{0, 1}, 1}}));
}

TEST_CASE("boundary of boundary vanishes on every simplex of the test complexes") {
    std::mt19937 rng(17);
    std::vector<FilteredComplex> complexes;
    complexes.push_back(circle());
    complexes.push_back(filled_triangle());
    complexes.push_back(triangle_demo_filtration());
    for (int i = 0; i < 4; ++i) complexes.push_back(oracles::random_filtration(rng));
    for (const auto& c : complexes) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            auto idx = static_cast<SimplexIndex>(i);
            if (c.dimension(idx) == 0) continue;
            auto dd = boundary_apply(boundary_apply(unit_chain<Rational>(c.dimension(idx), idx), c), c);
            CHECK(dd.is_zero());
        }
    }
}

TEST_CASE("degree-0 chains map to the zero chain") {
    auto c = circle();
    auto v = unit_chain<Rational>(0, 0);
    CHECK(boundary_apply(v, c).is_zero());
}

TEST_CASE("boundary rejects chains referencing missing simplices") {
    auto c = circle();
    Chain<Rational> bogus(1, {{static_cast<SimplexIndex>(99), Rational(1)}});
    CHECK_THROWS_AS(boundary_apply(bogus, c), InvalidArgumentError);
}

TEST_CASE("persistence of the circle: one essential component, one essential loop") {
    auto pr = compute_persistence<Rational>(circle(), 2);
    REQUIRE(pr.barcode.bars.size() == 2);
    CHECK(pr.barcode.bars[0].dim == 0);
    CHECK(pr.barcode.bars[0].birth == 1.0);
    CHECK(pr.barcode.bars[0].essential());
    CHECK(pr.barcode.bars[1].dim == 1);
    CHECK(pr.barcode.bars[1].birth == 1.0);
    CHECK(pr.barcode.bars[1].essential());
    // derived: Betti numbers from dense elimination agree at the critical value
    CHECK(pr.barcode.betti(0, 1.0) == oracles::betti(circle(), 0, 1.0));
    CHECK(pr.barcode.betti(1, 1.0) == oracles::betti(circle(), 1, 1.0));
}

TEST_CASE("filling the triangle closes the loop interval at 2") {
    auto pr = compute_persistence<Rational>(filled_triangle(), 2);
    REQUIRE(pr.barcode.bars.size() == 2);
    CHECK(pr.barcode.bars[1].dim == 1);
    CHECK(pr.barcode.bars[1].birth == 1.0);
    CHECK(pr.barcode.bars[1].death == 2.0);
    auto c = filled_triangle();
    CHECK(pr.barcode.betti(1, 1.0) == oracles::betti(c, 1, 1.0));
    CHECK(pr.barcode.betti(1, 2.0) == oracles::betti(c, 1, 2.0));
}

TEST_CASE("persistence of the empty complex is empty") {
    auto pr = compute_persistence<Rational>(FilteredComplex{}, 2);
    CHECK(pr.barcode.bars.empty());
    CHECK(pr.warning.empty());
}

TEST_CASE("max_dim beyond the complex dimension warns and truncates") {
    auto pr = compute_persistence<Rational>(circle(), 5);
    CHECK(!pr.warning.empty());
    CHECK(pr.barcode.bars.size() == 2);
}

TEST_CASE("barcode Betti equals snapshot dim Z - dim B at every critical value") {
    std::mt19937 rng(29);
    for (int round = 0; round < 6; ++round) {
        auto complex = oracles::random_filtration(rng);
        auto pr = compute_persistence<Rational>(complex, 2);
        for (double eps : complex.critical_values()) {
            for (int k = 0; k <= 2; ++k) {
                auto snap = cycle_snapshot<Rational>(complex, eps, k);
                CHECK(pr.barcode.betti(k, eps) == snap.betti());
                CHECK(snap.betti() == oracles::betti(complex, k, eps));
            }
        }
    }
}

TEST_CASE("representatives are cycles born at their birth and not boundaries there") {
    auto complex = triangle_demo_filtration();
    auto pr = compute_persistence<Rational>(complex, 2);
    for (const auto& bar : pr.barcode.bars) {
        const auto& rep = bar.representative;
        CHECK(!rep.is_zero());
        CHECK(boundary_apply(rep, complex).is_zero());
        for (const auto& t : rep.terms()) CHECK(complex.birth(t.index) <= bar.birth);
        // nonzero in homology at birth: cophenetic rank of the singleton is 1
        CHECK(cophenetic_rank<Rational>({rep}, complex, bar.birth, bar.dim) == 1);
        // at its death the class is absorbed by the span of the older classes
        // (zero only when there are none)
        if (!bar.essential()) {
            std::vector<Chain<Rational>> older;
            for (const auto& other : pr.barcode.bars)
                if (other.dim == bar.dim && other.birth_index < bar.birth_index)
                    older.push_back(other.representative);
            std::size_t base = cophenetic_rank<Rational>(older, complex, bar.death, bar.dim);
            older.push_back(rep);
            CHECK(cophenetic_rank<Rational>(older, complex, bar.death, bar.dim) == base);
        }
    }
}

TEST_CASE("triangle demo barcode: loops die in fill order, the outer loop at the annulus fill") {
    auto pr = compute_persistence<Rational>(triangle_demo_filtration(), 2);
    std::vector<std::pair<double, double>> h1;
    for (const auto& b : pr.barcode.bars)
        if (b.dim == 1) h1.emplace_back(b.birth, b.death);
    // derived with the dense-rank oracle over the explicit filtration: the
    // class born with the outer triangle at 2 is killed by the annulus fill
    // at 3 (the elder loops born at 1 survive it)
    REQUIRE(h1.size() == 4);
    CHECK(h1[0] == std::pair<double, double>{1.0, 4.0});
    CHECK(h1[1] == std::pair<double, double>{1.0, 5.0});
    CHECK(h1[2] == std::pair<double, double>{1.0, 6.0});
    CHECK(h1[3] == std::pair<double, double>{2.0, 3.0});
    CHECK(pr.barcode.betti(2, 6.0) == 0);  // no enclosed volume
    for (double eps : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0})
        CHECK(pr.barcode.betti(1, eps) == oracles::betti(triangle_demo_filtration(), 1, eps));
}

TEST_CASE("snapshot of the circle and of the filled triangle") {
    auto snap = cycle_snapshot<Rational>(circle(), 1.0, 1);
    CHECK(snap.cycle_basis.size() == 1);
    CHECK(snap.boundary_basis.size() == 0);

    auto snap2 = cycle_snapshot<Rational>(filled_triangle(), 2.0, 1);
    CHECK(snap2.cycle_basis.size() == 1);
    CHECK(snap2.boundary_basis.size() == 1);

    auto snap3 = cycle_snapshot<Rational>(circle(), 1.0, 5);
    CHECK(snap3.cycle_basis.empty());
    CHECK(snap3.boundary_basis.empty());
}

TEST_CASE("snapshot boundaries lie in the span of the cycle basis") {
    std::mt19937 rng(31);
    auto complex = oracles::random_filtration(rng);
    for (double eps : complex.critical_values()) {
        for (int k = 0; k <= 2; ++k) {
            auto snap = cycle_snapshot<Rational>(complex, eps, k);
            Echelon<Rational> z;
            for (const auto& c : snap.cycle_basis) z.insert(c);
            for (const auto& b : snap.boundary_basis) CHECK(z.reduce(b).is_zero());
        }
    }
}

TEST_CASE("cophenetic rank: empty set, scalar multiples, triangle example values") {
    auto complex = triangle_demo_filtration();
    CHECK(cophenetic_rank<Rational>({}, complex, 3.0, 1) == 0);

    auto gens = triangle_generators(complex);
    // independent when all four exist at 2; the annulus fill at 3 adds one relation
    CHECK(cophenetic_rank<Rational>(gens, complex, 2.0, 1) == 4);
    CHECK(cophenetic_rank<Rational>(gens, complex, 3.0, 1) == 3);
    CHECK(oracles::cophenetic_rank(complex, gens, 1, 2.0) == 4);
    CHECK(oracles::cophenetic_rank(complex, gens, 1, 3.0) == 3);

    // {z, 2z} has rank 1 for any non-bounding cycle z
    auto z = gens[3];
    auto two_z = z;
    two_z.scale(Rational(2));
    CHECK(cophenetic_rank<Rational>({z, two_z}, complex, 2.0, 1) == 1);
}

TEST_CASE("cophenetic rank input validation") {
    auto complex = triangle_demo_filtration();
    // a bare edge is not a cycle
    Chain<Rational> edge = unit_chain<Rational>(1, *complex.index_of(Simplex{3, 4}));
    CHECK_THROWS_AS((void)cophenetic_rank<Rational>({edge}, complex, 3.0, 1), NotACycleError);
    // the ABC cycle uses edges born at 2
    auto gens = triangle_generators(complex);
    CHECK_THROWS_AS((void)cophenetic_rank<Rational>({gens[3]}, complex, 1.0, 1), InvalidArgumentError);
}

TEST_CASE("cophenetic rank is dominated by cardinality and monotone along the filtration") {
    std::mt19937 rng(37);
    for (int round = 0; round < 4; ++round) {
        auto complex = oracles::random_filtration(rng);
        auto pr = compute_persistence<Rational>(complex, 2);
        for (int k = 0; k <= 1; ++k) {
            std::vector<Chain<Rational>> gens;
            double latest_birth = 0;
            for (const auto& b : pr.barcode.bars)
                if (b.dim == k && gens.size() < 4) {
                    gens.push_back(b.representative);
                    latest_birth = std::max(latest_birth, b.birth);
                }
            if (gens.empty()) continue;
            std::optional<std::size_t> prev;
            for (double eps : complex.critical_values()) {
                if (eps < latest_birth) continue;
                std::size_t r = cophenetic_rank<Rational>(gens, complex, eps, k);
                CHECK(r <= gens.size());
                CHECK(r == oracles::cophenetic_rank(complex, gens, k, eps));
                if (prev) CHECK(r <= *prev);  // images only lose rank
                prev = r;
            }
        }
    }
}

TEST_CASE("cophenetic rank is submodular on random generator families") {
    std::mt19937 rng(41);
    for (int round = 0; round < 4; ++round) {
        auto complex = oracles::random_filtration(rng);
        auto pr = compute_persistence<Rational>(complex, 2);
        for (int k = 0; k <= 1; ++k) {
            std::vector<Chain<Rational>> gens;
            double latest = 0;
            for (const auto& b : pr.barcode.bars)
                if (b.dim == k && gens.size() < 5) {
                    gens.push_back(b.representative);
                    latest = std::max(latest, b.birth);
                }
            if (gens.size() < 2) continue;
            const std::size_t n = gens.size();
            for (double eps : complex.critical_values()) {
                if (eps < latest) continue;
                std::vector<std::size_t> rank(1u << n);
                for (std::size_t mask = 0; mask < rank.size(); ++mask) {
                    std::vector<Chain<Rational>> subset;
                    for (std::size_t i = 0; i < n; ++i)
                        if (mask & (1u << i)) subset.push_back(gens[i]);
                    rank[mask] = cophenetic_rank<Rational>(subset, complex, eps, k);
                }
                for (std::size_t a = 0; a < rank.size(); ++a)
                    for (std::size_t b = 0; b < rank.size(); ++b)
                        CHECK(rank[a | b] + rank[a & b] <= rank[a] + rank[b]);
            }
        }
    }
}

TEST_CASE("GF(p) persistence matches the rational barcode on the test complexes") {
    for (const auto& complex : {circle(), filled_triangle(), triangle_demo_filtration()}) {
        auto rational = compute_persistence<Rational>(complex, 2);
        ZpScope scope(997);
        auto modp = compute_persistence<Zp>(complex, 2);
        REQUIRE(rational.barcode.bars.size() == modp.barcode.bars.size());
        for (std::size_t i = 0; i < modp.barcode.bars.size(); ++i) {
            CHECK(rational.barcode.bars[i].dim == modp.barcode.bars[i].dim);
            CHECK(rational.barcode.bars[i].birth == modp.barcode.bars[i].birth);
            CHECK(rational.barcode.bars[i].death == modp.barcode.bars[i].death);
        }
    }
}

TEST_CASE("cz rank: both routes agree and match the examples") {
    auto c = filled_triangle();
    auto pr = compute_persistence<Rational>(c, 2);
    auto views = bar_views(pr.barcode);

    // eps == eta: the dimension at eps
    CHECK(cz_rank(views, 1, 1.0, 1.0) == 1);
    CHECK(cz_rank<Rational>(c, 1, 1.0, 1.0) == 1);
    // the loop dies before eta = 2
    CHECK(cz_rank(views, 1, 1.0, 2.0) == 0);
    CHECK(cz_rank<Rational>(c, 1, 1.0, 2.0) == 0);

    // derived example: bars (1,3) and (2,inf) -> rho(2,2.5)=2, rho(2,4)=1
    std::vector<BarView> bars{{0, 1.0, 3.0}, {0, 2.0, kInfiniteDeath}};
    CHECK(cz_rank(bars, 0, 2.0, 2.5) == 2);
    CHECK(cz_rank(bars, 0, 2.0, 4.0) == 1);

    // zero module
    CHECK(cz_rank(std::vector<BarView>{}, 3, 1.0, 2.0) == 0);
    CHECK(cz_rank<Rational>(c, 3, 1.0, 2.0) == 0);
    CHECK_THROWS_AS(cz_rank(views, 1, 2.0, 1.0), InvalidArgumentError);
}

TEST_CASE("cz rank routes agree on random complexes and random intervals") {
    std::mt19937 rng(43);
    for (int round = 0; round < 5; ++round) {
        auto complex = oracles::random_filtration(rng);
        auto pr = compute_persistence<Rational>(complex, 2);
        auto views = bar_views(pr.barcode);
        const auto& cvs = complex.critical_values();
        for (std::size_t i = 0; i < cvs.size(); ++i)
            for (std::size_t j = i; j < cvs.size(); ++j)
                for (int k = 0; k <= 2; ++k)
                    CHECK(cz_rank(views, k, cvs[i], cvs[j]) == cz_rank<Rational>(complex, k, cvs[i], cvs[j]));
    }
}
