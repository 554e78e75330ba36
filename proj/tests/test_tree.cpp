#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "ct/tree.hpp"
#include "oracle.hpp"

using namespace ct;

namespace {

ChemicalTree path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return ChemicalTree(n, es);
}

ChemicalTree star(int legs) {
    std::vector<Edge> es;
    for (int i = 1; i <= legs; ++i) es.emplace_back(0, i);
    return ChemicalTree(legs + 1, es);
}

// two degree-3 vertices joined by a length-2 path, two leaves each
ChemicalTree h_tree7() {
    return ChemicalTree(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}});
}

}  // namespace

TEST_CASE("build_tree validates") {
    CHECK_NOTHROW(build_tree(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK_THROWS_AS(build_tree(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}), DegreeExceeded);
    CHECK_THROWS_AS(build_tree(3, {{0, 1}, {1, 2}, {0, 2}}), NotATree);
    CHECK_THROWS_AS(build_tree(4, {{0, 1}, {1, 2}}), NotATree);
    CHECK_THROWS_AS(build_tree(4, {{0, 1}, {1, 2}, {1, 2}}), NotATree);
    CHECK_THROWS_AS(build_tree(4, {{0, 1}, {1, 2}, {2, 4}}), BadId);
    CHECK_THROWS_AS(build_tree(3, {{0, 1}, {2, 2}}), NotATree);
    CHECK_NOTHROW(build_tree(1, {}));
}

TEST_CASE("degree_census") {
    DegreeCensus p6 = degree_census(path(6));
    CHECK(p6 == DegreeCensus{2, 4, 0, 0});
    CHECK(degree_census(star(4)) == DegreeCensus{4, 0, 0, 1});
    // spider with legs (1,1,2)
    ChemicalTree sp(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    CHECK(degree_census(sp) == DegreeCensus{3, 1, 1, 0});
    CHECK(degree_census(build_tree(1, {})) == DegreeCensus{0, 0, 0, 0});
}

TEST_CASE("zagreb indices on named trees") {
    CHECK(zagreb_m1(path(6)) == 18);
    CHECK(zagreb_m2(path(6)) == 16);
    CHECK(zagreb_m1(star(4)) == 20);
    CHECK(zagreb_m2(star(4)) == 16);
    CHECK(zagreb_m1(path(2)) == 2);
    CHECK(zagreb_m2(path(2)) == 1);
    CHECK(zagreb_m1(build_tree(1, {})) == 0);
}

TEST_CASE("edge_type_counts") {
    EdgeTypeMatrix p4 = edge_type_counts(path(4));
    CHECK(p4.at(1, 2) == 2);
    CHECK(p4.at(2, 2) == 1);
    CHECK(p4.total() == 3);
    EdgeTypeMatrix s4 = edge_type_counts(star(4));
    CHECK(s4.at(1, 4) == 4);
    CHECK(s4.total() == 4);
}

TEST_CASE("path_report basics") {
    PathReport p6 = path_report(path(6));
    CHECK(p6.segment_count == 1);
    CHECK(p6.branching_count == 0);
    CHECK(p6.pendent_paths.empty());
    CHECK(p6.internal_paths.empty());
    CHECK(p6.segments.size() == 1);
    CHECK(p6.segments[0].length == 5);

    PathReport k13 = path_report(star(3));
    CHECK(k13.segment_count == 3);
    CHECK(k13.branching_count == 1);
    CHECK(k13.pendent_paths.size() == 3);
    for (const auto& pp : k13.pendent_paths) CHECK(pp.length == 1);

    PathReport h = path_report(h_tree7());
    CHECK(h.internal_paths.size() == 1);
    CHECK(h.internal_paths[0].length == 2);
    CHECK(h.pendent_paths.size() == 4);
    for (const auto& pp : h.pendent_paths) CHECK(pp.length == 1);
    CHECK(h.segment_count == 5);
    CHECK(h.branching_count == 2);

    PathReport p2 = path_report(path(2));
    CHECK(p2.segment_count == 1);
    PathReport p1 = path_report(build_tree(1, {}));
    CHECK(p1.segment_count == 0);
    CHECK(p1.branching_count == 0);
}

TEST_CASE("pendent path orientation: a is the leaf") {
    for (const auto& pp : path_report(h_tree7()).pendent_paths) {
        ChemicalTree t = h_tree7();
        CHECK(t.degree(pp.a) == 1);
        CHECK(t.degree(pp.b) >= 3);
    }
}

TEST_CASE("canonical_code invariance and separation") {
    ChemicalTree a(4, {{0, 1}, {1, 2}, {2, 3}});
    ChemicalTree b(4, {{2, 0}, {0, 3}, {3, 1}});  // P4 relabeled 2-0-3-1
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(canonical_code(a) != canonical_code(star(3)));
}

TEST_CASE("canonical_code invariant under random relabeling") {
    std::mt19937 rng(20240811);
    // a few fixed shapes, order 9
    std::vector<std::vector<Edge>> shapes = {
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}},
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {2, 7}, {7, 8}},
        {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}, {6, 8}},
    };
    for (const auto& es : shapes) {
        ChemicalTree t(9, es);
        CanonicalCode base = canonical_code(t);
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<int> perm(9);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Edge> pes;
            for (auto [u, v] : es) pes.emplace_back(perm[u], perm[v]);
            CHECK(canonical_code(ChemicalTree(9, pes)) == base);
        }
    }
}

TEST_CASE("distinct codes over all labeled chemical trees of order 7") {
    // derived with the exhaustive Pruefer oracle
    auto sets = ct_oracle::enumerate_classes(7, 1);
    CHECK(sets.all.size() == 9);
}

TEST_CASE("canonical_code round-trips through decode") {
    auto sets = ct_oracle::enumerate_classes(6, 1);
    for (const auto& hex : sets.all) {
        CanonicalCode c = CanonicalCode::from_hex(hex);
        ChemicalTree t = decode_canonical_code(c);
        CHECK(canonical_code(t) == c);
    }
    CHECK_THROWS_AS(decode_canonical_code(CanonicalCode{"garbage"}), InvalidCode);
    CHECK_THROWS_AS(CanonicalCode::from_hex("0zz"), InvalidCode);
}

TEST_CASE("degree4_induced_components") {
    // two adjacent degree-4 vertices (double star, n=8)
    ChemicalTree d(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {4, 7}});
    CHECK(degree4_induced_components(d) == 1);
    // two degree-4 vertices separated by a degree-2 vertex
    ChemicalTree s(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {5, 7}, {5, 8}});
    CHECK(degree4_induced_components(s) == 2);
    CHECK(degree4_induced_components(path(6)) == 0);
}

TEST_CASE("edge list io round trip and errors") {
    ChemicalTree t = h_tree7();
    std::stringstream ss;
    write_edge_list(t, ss);
    ChemicalTree back = read_edge_list(ss);
    CHECK(canonical_code(back) == canonical_code(t));

    std::stringstream bad("4\n0 1\n1");
    CHECK_THROWS_AS(read_edge_list(bad), IoError);
    std::stringstream empty("");
    CHECK_THROWS_AS(read_edge_list(empty), IoError);
}

TEST_CASE("index identities over the order-7 classes") {
    auto sets = ct_oracle::enumerate_classes(7, 1);
    for (const auto& hex : sets.all) {
        ChemicalTree t = decode_canonical_code(CanonicalCode::from_hex(hex));
        DegreeCensus c = degree_census(t);
        CHECK(c.total() == t.order());
        CHECK(c.weighted() == 2 * (t.order() - 1));
        // two independent computations of each index
        CHECK(zagreb_m1(t) == c.n1 + 4 * c.n2 + 9 * c.n3 + 16 * c.n4);
        EdgeTypeMatrix x = edge_type_counts(t);
        CHECK(zagreb_m2(t) == x.m2());
        auto nj = [&](int j) { return j == 1 ? c.n1 : j == 2 ? c.n2 : j == 3 ? c.n3 : c.n4; };
        for (int j = 1; j <= 4; ++j) CHECK(x.incidence(j) == j * nj(j));
        PathReport pr = path_report(t);
        CHECK(pr.segment_count == c.n1 + c.n3 + c.n4 - 1);
        CHECK(pr.branching_count == c.n3 + c.n4);
        int total_len = 0;
        for (const auto& s : pr.segments) total_len += s.length;
        CHECK(total_len == t.order() - 1);  // segments partition the edges
    }
}
