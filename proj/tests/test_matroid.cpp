#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"

using namespace ramify;

namespace {

// the four vectors of the coordinate-zeroing example
std::vector<RationalVector> demo_vectors() {
    return {{1, 1, 1, 1}, {1, 1, 2, 2}, {1, 2, 3, 3}, {3, 5, 6, 6}};
}

RankOracle linear_oracle(std::vector<RationalVector> vectors) {
    RankOracle o;
    for (std::size_t i = 0; i < vectors.size(); ++i) o.ground.push_back("e" + std::to_string(i));
    o.rank = [vs = std::move(vectors)](const ElementSet& a) {
        std::vector<RationalVector> chosen;
        for (ElementId e : a) chosen.push_back(vs.at(e));
        return linear_rank(chosen);
    };
    return o;
}

std::size_t oracle_linear_rank_of(const std::vector<RationalVector>& vectors) {
    oracles::DenseMatrix rows;
    for (const auto& v : vectors) rows.push_back(v);
    return oracles::dense_rank(std::move(rows));
}

}  // namespace

TEST_CASE("the cardinality function is submodular (modular, in fact)") {
    RankOracle card;
    card.ground = {"a", "b", "c", "d"};
    card.rank = [](const ElementSet& a) { return a.size(); };
    auto report = check_submodular(card);
    CHECK(report.ok());
    CHECK(!report.sampled);
}

TEST_CASE("a generic planar linear matroid is submodular") {
    auto report = check_submodular(linear_oracle({{1, 0}, {0, 1}, {1, 1}}));
    CHECK(report.ok());
}

TEST_CASE("the two-element threshold function is not a rank function") {
    RankOracle bad;
    bad.ground = {"a", "b", "c"};
    bad.rank = [](const ElementSet& a) -> std::size_t { return a.size() >= 2 ? 1 : 0; };
    auto report = check_submodular(bad);
    CHECK(!report.ok());
    // derived by enumerating pairs in lexicographic order: the first failure
    // is monotonic? no: r is monotone and normalized; submodularity breaks
    // first on A={a}, B={b}: r(A u B)=1 > 0 = r(A)+r(B)-r(empty)
    CHECK(report.status == SubmodularityReport::Status::NotSubmodular);
    CHECK(report.witness_a == ElementSet{0});
    CHECK(report.witness_b == ElementSet{1});
}

TEST_CASE("check_submodular reports broken normalization and monotonicity distinctly") {
    RankOracle nonzero_empty;
    nonzero_empty.ground = {"a"};
    nonzero_empty.rank = [](const ElementSet&) -> std::size_t { return 1; };
    CHECK(check_submodular(nonzero_empty).status == SubmodularityReport::Status::EmptyRankNonzero);

    RankOracle shrinking;
    shrinking.ground = {"a", "b"};
    shrinking.rank = [](const ElementSet& a) -> std::size_t { return a.size() == 1 ? 1 : 0; };
    CHECK(check_submodular(shrinking).status == SubmodularityReport::Status::NotMonotone);

    RankOracle oversized;
    oversized.ground = {"a", "b"};
    oversized.rank = [](const ElementSet& a) -> std::size_t { return a.size() * 2; };
    CHECK(check_submodular(oversized).status == SubmodularityReport::Status::ExceedsCardinality);
}

TEST_CASE("sampled mode engages beyond the exhaustive limit") {
    RankOracle card;
    for (int i = 0; i < 16; ++i) card.ground.push_back("e" + std::to_string(i));
    card.rank = [](const ElementSet& a) { return a.size(); };
    auto report = check_submodular(card, 12, 2000, 5);
    CHECK(report.ok());
    CHECK(report.sampled);
    CHECK(report.pairs_checked == 2000);
}

TEST_CASE("induced rank: identity, constant, and parallel-merging maps") {
    auto base = linear_oracle({{1, 0}, {0, 1}, {2, 0}});

    auto ident = induced_rank({0, 1, 2}, base, {"x", "y", "z"});
    for (ElementSet s : {ElementSet{}, {0}, {0, 1}, {0, 2}, {0, 1, 2}}) CHECK(ident.rank(s) == base.rank(s));

    auto constant = induced_rank({0, 0, 0}, base, {"x", "y", "z"});
    CHECK(constant.rank({0, 1, 2}) == 1);
    CHECK(constant.rank({1}) == 1);
    CHECK(constant.rank({}) == 0);

    // merge the two parallel vectors e0, e2 and keep e1
    auto merged = induced_rank({0, 1, 0}, base, {"x", "y", "z"});
    CHECK(merged.rank({0, 2}) == oracle_linear_rank_of({{1, 0}, {1, 0}}));
    CHECK(merged.rank({0, 1, 2}) == oracle_linear_rank_of({{1, 0}, {0, 1}, {1, 0}}));
    CHECK(check_submodular(merged).ok());
}

TEST_CASE("linear rank of the demo vectors and their zeroed images") {
    auto a = demo_vectors();
    CHECK(linear_rank(a) == 3);
    std::vector<RationalVector> s1;
    for (const auto& v : a) s1.push_back(coordinate_zeroing(v, 1.0));
    CHECK(s1[3] == RationalVector{0, 5, 6, 6});
    CHECK(linear_rank(s1) == 2);
    CHECK(linear_rank({}) == 0);
}

TEST_CASE("linear rank agrees with dense elimination on random rational matrices") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> dim(1, 8), entry(-4, 4), denom(1, 3);
    for (int round = 0; round < 1000; ++round) {
        const int rows = dim(rng), cols = dim(rng);
        std::vector<RationalVector> m(static_cast<std::size_t>(rows), RationalVector(static_cast<std::size_t>(cols)));
        for (auto& r : m)
            for (auto& x : r) x = Rational(entry(rng), denom(rng));
        CHECK(linear_rank(m) == oracle_linear_rank_of(m));
    }
}

TEST_CASE("coordinate zeroing: identity below 1, prefix zeroing, all-zero tail") {
    CHECK(coordinate_zeroing({1, 2, 3}, 0.0) == RationalVector{1, 2, 3});
    CHECK(coordinate_zeroing({1, 2, 3}, 0.5) == RationalVector{1, 2, 3});
    CHECK(coordinate_zeroing({3, 5, 6, 6}, 1.0) == RationalVector{0, 5, 6, 6});
    CHECK(coordinate_zeroing({1, 2, 3}, 5.0) == RationalVector{0, 0, 0});
    CHECK(coordinate_zeroing({1, 2, 3}, 2.5) == RationalVector{0, 0, 3});
    CHECK_THROWS_AS(coordinate_zeroing({1}, -1.0), InvalidArgumentError);
}

TEST_CASE("irreducibility of the demo vector set and its zeroed image") {
    auto fm = coordinate_zeroing_demo_matroid();
    auto rank0 = [&](const ElementSet& s) { return fm.rank_at(0.0, s); };
    auto rank1 = [&](const ElementSet& s) { return fm.rank_at(1.0, s); };
    CHECK(is_irreducible({0, 1, 2, 3}, rank0));
    CHECK(!is_irreducible({0, 1, 2, 3}, rank1));

    // rank-0 singletons are irreducible; independent singletons are not
    auto rank_loop = [](const ElementSet&) -> std::size_t { return 0; };
    CHECK(is_irreducible({0}, rank_loop));
    CHECK(!is_irreducible({0}, rank0));
    CHECK_THROWS_AS(is_irreducible({}, rank0), InvalidArgumentError);
}

TEST_CASE("irreducible cover of the demo vectors: two overlapping triples") {
    auto fm = coordinate_zeroing_demo_matroid();
    auto rank1 = [&](const ElementSet& s) { return fm.rank_at(1.0, s); };
    auto cover = irreducible_cover({0, 1, 2, 3}, rank1);
    REQUIRE(cover.size() == 2);
    CHECK(cover[0] == ElementSet{0, 1, 2});  // {v1,v2,v3}
    CHECK(cover[1] == ElementSet{1, 2, 3});  // {v2,v3,v4}
    for (const auto& piece : cover) CHECK(is_irreducible(piece, rank1));
}

TEST_CASE("irreducible cover of the triangle-example classes at the first fill") {
    auto complex = std::make_shared<FilteredComplex>(triangle_demo_filtration());
    auto pr = compute_persistence<Rational>(*complex, 2);
    auto fm = cophenetic_matroid<Rational>(complex, 1, pr.barcode, FieldSpec{});
    // at eps=4 the set {DEF, GHI, JKL, ABC} = {g0,g1,g2,g3} splits as
    // {ABC,GIH,JKL} u {DEF}
    auto rank4 = [&](const ElementSet& s) { return fm.rank_at(4.0, s); };
    auto cover = irreducible_cover({0, 1, 2, 3}, rank4);
    REQUIRE(cover.size() == 2);
    CHECK(cover[0] == ElementSet{1, 2, 3});
    CHECK(cover[1] == ElementSet{0});
}

TEST_CASE("irreducible cover of a parallel pair is the pair itself") {
    auto oracle = linear_oracle({{1, 1}, {2, 2}});
    auto cover = irreducible_cover({0, 1}, oracle.rank);
    REQUIRE(cover.size() == 1);
    CHECK(cover[0] == ElementSet{0, 1});
}

TEST_CASE("irreducible cover errors") {
    auto oracle = linear_oracle({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(irreducible_cover({0, 1}, oracle.rank), IndependentSetError);
    // a free element next to a parallel pair escapes every circuit
    auto stranded = linear_oracle({{1, 0}, {2, 0}, {0, 1}});
    CHECK_THROWS_WITH_AS(irreducible_cover({0, 1, 2}, stranded.rank),
                         "elements {2} lie in no irreducible subset; the set has no irreducible cover",
                         InvalidArgumentError);
}

TEST_CASE("cover output: union is the input, pieces are incomparable circuits") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> nvec(3, 6), entry(-2, 2);
    for (int round = 0; round < 40; ++round) {
        const int n = nvec(rng);
        std::vector<RationalVector> vs(static_cast<std::size_t>(n), RationalVector(2));
        for (auto& v : vs)
            for (auto& x : v) x = entry(rng);
        auto oracle = linear_oracle(vs);
        ElementSet x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        if (oracle.rank(x) == x.size()) continue;
        std::vector<ElementSet> cover;
        try {
            cover = irreducible_cover(x, oracle.rank);
        } catch (const InvalidArgumentError&) {
            continue;  // stranded free elements: no cover exists
        }
        ElementSet covered;
        for (const auto& c : cover) {
            CHECK(is_irreducible(c, oracle.rank));
            covered.insert(covered.end(), c.begin(), c.end());
        }
        std::sort(covered.begin(), covered.end());
        covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
        CHECK(covered == x);
        for (std::size_t i = 0; i < cover.size(); ++i)
            for (std::size_t j = 0; j < cover.size(); ++j) {
                if (i == j) continue;
                CHECK(!std::includes(cover[i].begin(), cover[i].end(), cover[j].begin(), cover[j].end()));
            }
    }
}

TEST_CASE("the coordinate-zeroing demo matroid rank profile") {
    auto fm = coordinate_zeroing_demo_matroid();
    CHECK(fm.ground() == std::vector<std::string>{"v1", "v2", "v3", "v4"});
    ElementSet all{0, 1, 2, 3};
    CHECK(fm.rank_at(0.0, all) == 3);
    CHECK(fm.rank_at(0.9, all) == 3);
    CHECK(fm.rank_at(1.0, all) == 2);
    CHECK(fm.rank_at(2.0, all) == 1);
    CHECK(fm.rank_at(3.0, all) == 1);
    CHECK(fm.rank_at(4.0, all) == 0);
    CHECK(fm.rank_at(5.0, all) == 0);
    // pair ranks on [2,4)
    for (ElementSet pair : {ElementSet{0, 1}, {1, 2}, {2, 3}}) {
        CHECK(fm.rank_at(2.0, pair) == 1);
        CHECK(fm.rank_at(3.9, pair) == 1);
        CHECK(fm.rank_at(4.0, pair) == 0);
    }
}

TEST_CASE("every oracle built here passes the submodularity check") {
    auto fm = coordinate_zeroing_demo_matroid();
    for (std::size_t step = 0; step < fm.critical_values().size(); ++step)
        CHECK(check_submodular(fm.oracle_at_step(step)).ok());

    auto complex = std::make_shared<FilteredComplex>(triangle_demo_filtration());
    auto pr = compute_persistence<Rational>(*complex, 2);
    for (int k = 0; k <= 1; ++k) {
        auto fmk = cophenetic_matroid<Rational>(complex, k, pr.barcode, FieldSpec{});
        for (std::size_t step = 0; step < fmk.critical_values().size(); ++step)
            CHECK(check_submodular(fmk.oracle_at_step(step)).ok());
    }
}

TEST_CASE("cophenetic matroid of the circle: one generator of constant rank") {
    std::vector<std::pair<Simplex, double>> s;
    for (VertexId v = 0; v < 3; ++v) s.emplace_back(Simplex{v}, 1.0);
    s.emplace_back(Simplex{0, 1}, 1.0);
    s.emplace_back(Simplex{0, 2}, 1.0);
    s.emplace_back(Simplex{1, 2}, 1.0);
    auto complex = std::make_shared<FilteredComplex>(FilteredComplex::build(std::move(s)));
    auto pr = compute_persistence<Rational>(*complex, 1);
    auto fm = cophenetic_matroid<Rational>(complex, 1, pr.barcode, FieldSpec{});
    REQUIRE(fm.ground_size() == 1);
    CHECK(fm.rank_at(1.0, {0}) == 1);

    auto empty_fm = cophenetic_matroid<Rational>(complex, 2, pr.barcode, FieldSpec{});
    CHECK(empty_fm.ground_size() == 0);
    CHECK(empty_fm.rank_at(1.0, {}) == 0);
}

TEST_CASE("cophenetic matroid of the triangle demo: rank sequence 4,3,2,1,0") {
    auto complex = std::make_shared<FilteredComplex>(triangle_demo_filtration());
    auto pr = compute_persistence<Rational>(*complex, 2);
    auto fm = cophenetic_matroid<Rational>(complex, 1, pr.barcode, FieldSpec{});
    REQUIRE(fm.ground_size() == 4);
    ElementSet x{0, 1, 2, 3};
    const std::vector<std::pair<double, std::size_t>> expected{{2, 4}, {3, 3}, {4, 2}, {5, 1}, {6, 0}};
    for (auto [eps, rank] : expected) CHECK(fm.rank_at(eps, x) == rank);
    // querying before every member exists is an error
    CHECK_THROWS_AS(fm.rank_at(1.0, x), InvalidArgumentError);
    CHECK_THROWS_AS(fm.rank_at(2.0, {7}), UnknownIdError);
}

TEST_CASE("matroid ranks agree with from-scratch dense recomputation per scale") {
    std::mt19937 rng(61);
    for (int round = 0; round < 4; ++round) {
        auto complex = std::make_shared<FilteredComplex>(oracles::random_filtration(rng));
        auto pr = compute_persistence<Rational>(*complex, 2);
        auto fm = cophenetic_matroid<Rational>(complex, 1, pr.barcode, FieldSpec{});
        std::vector<Chain<Rational>> gens;
        for (const auto& b : pr.barcode.bars)
            if (b.dim == 1) gens.push_back(b.representative);
        for (std::size_t step = 0; step < fm.critical_values().size(); ++step) {
            const double eps = fm.critical_values()[step];
            ElementSet born = fm.born_at_step(step);
            // all subsets of the born generators, both code paths
            for (std::size_t mask = 0; mask < (std::size_t(1) << born.size()); ++mask) {
                ElementSet sub;
                std::vector<Chain<Rational>> chains;
                for (std::size_t i = 0; i < born.size(); ++i)
                    if (mask & (std::size_t(1) << i)) {
                        sub.push_back(born[i]);
                        chains.push_back(gens[born[i]]);
                    }
                CHECK(fm.rank_at_step(step, sub) == oracles::cophenetic_rank(*complex, chains, 1, eps));
            }
        }
    }
}

TEST_CASE("the two cophenetic rank formulas agree (quotient vs intersection route)") {
    auto complex = triangle_demo_filtration();
    auto pr = compute_persistence<Rational>(complex, 2);
    std::vector<Chain<Rational>> gens;
    for (const auto& b : pr.barcode.bars)
        if (b.dim == 1) gens.push_back(b.representative);
    for (double eps : {2.0, 3.0, 4.0, 5.0, 6.0}) {
        // route 1: dim(Span(A)+B) - dim B (library)
        std::size_t route1 = cophenetic_rank<Rational>(gens, complex, eps, 1);
        // route 2: dim Span(A) - dim(Span(A) cap B) via the Zassenhaus oracle
        oracles::DenseMatrix a, b;
        for (const auto& g : gens) a.push_back(oracles::dense_of_chain(g, complex.size()));
        for (SimplexIndex j : oracles::dim_prefix(complex, 2, eps)) b.push_back(oracles::dense_boundary(complex, j));
        std::size_t span_a = oracles::dense_rank(a);
        std::size_t route2 = span_a - oracles::span_intersection_dim(a, b);
        CHECK(route1 == route2);
    }
}

TEST_CASE("structure maps compose (functoriality) on constructed filtered matroids") {
    auto fm = coordinate_zeroing_demo_matroid();
    const std::size_t n = fm.critical_values().size();
    ElementSet all{0, 1, 2, 3};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k)
                CHECK(fm.psi(j, k, fm.psi(i, j, all)) == fm.psi(i, k, all));
    // and ranks never increase along psi
    for (std::size_t i = 0; i + 1 < n; ++i)
        CHECK(fm.rank_at_step(i + 1, fm.psi(i, i + 1, all)) <= fm.rank_at_step(i, all));
}

TEST_CASE("matroid JSON dump carries the full rank table for small ground sets") {
    auto fm = coordinate_zeroing_demo_matroid();
    auto j = nlohmann::json::parse(matroid_dump_json(fm));
    CHECK(j["ground"].size() == 4);
    REQUIRE(j["scales"].size() == 6);
    auto table0 = j["scales"][0]["rank_table"];
    REQUIRE(table0.size() == 16);
    CHECK(table0[0] == 0);     // empty set
    CHECK(table0[15] == 3);    // the whole set at eps=0
    auto table4 = j["scales"][4]["rank_table"];
    CHECK(table4[15] == 0);    // everything dead at eps=4
}
