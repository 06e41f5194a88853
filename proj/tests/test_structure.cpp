#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "snarkmorph/classifier.hpp"
#include "snarkmorph/constructions.hpp"
#include "snarkmorph/structure.hpp"

using namespace snarkmorph;

namespace {

Multipole permuted(const Multipole& m, std::mt19937& rng) {
    std::vector<int> p(m.vertex_count);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Multipole r = m;
    for (auto& l : r.links) {
        l = {p[l[0]], p[l[1]]};
        if (l[0] > l[1]) std::swap(l[0], l[1]);
    }
    for (auto& d : r.dangling) d[0] = p[d[0]];
    r.normalize();
    return r;
}

// five-cycles as sorted edge lists, by brute force
std::set<std::set<std::array<int, 2>>> five_cycle_edges(const Multipole& g) {
    auto adj = oracle::neighbours(g);
    std::set<std::set<std::array<int, 2>>> out;
    std::vector<int> path;
    std::function<void(int)> go = [&](int u) {
        if (path.size() == 5) {
            if (std::find(adj[u].begin(), adj[u].end(), path[0]) == adj[u].end()) return;
            std::set<std::array<int, 2>> es;
            for (int i = 0; i < 5; ++i) {
                int a = path[i], b = path[(i + 1) % 5];
                es.insert({std::min(a, b), std::max(a, b)});
            }
            out.insert(es);
            return;
        }
        for (int w : adj[u]) {
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            path.push_back(w);
            go(w);
            path.pop_back();
        }
    };
    for (int s = 0; s < g.vertex_count; ++s) {
        path = {s};
        go(s);
    }
    return out;
}

// pairs of dangling edges whose end vertices are adjacent
int dangling_pairs_at_distance_one(const Multipole& m) {
    int n = 0;
    for (std::size_t i = 0; i < m.dangling.size(); ++i)
        for (std::size_t j = i + 1; j < m.dangling.size(); ++j) {
            int u = m.dangling[i][0], v = m.dangling[j][0];
            if (u == v) continue;
            for (auto l : m.links)
                if ((l[0] == u && l[1] == v) || (l[0] == v && l[1] == u)) {
                    ++n;
                    break;
                }
        }
    return n;
}

std::vector<Multipole> bundled_graphs() {
    std::vector<Multipole> out = {petersen(), flower_snark(5), flower_snark(7), blanusa(1), blanusa(2),
                                  double_star()};
    for (const auto& g : loupekine_snarks()) out.push_back(g);
    return out;
}

}  // namespace

TEST_CASE("girth") {
    CHECK(girth(petersen()) == 5);
    CHECK(girth(dumbbell()) == 1);
    CHECK(girth(flower_snark(7)) == 6);
    CHECK(girth(k4()) == 3);
    CHECK(girth(triad()) == 5);
    Multipole digon = make_graph(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(girth(digon) == 2);
    for (const auto& g : bundled_graphs()) CHECK(girth(g) == oracle::girth(g));
}

TEST_CASE("cyclic connectivity examples") {
    CHECK(cyclic_connectivity(petersen()).value == 5);
    CHECK(cyclic_connectivity(flower_snark(7)).value == 6);
    CHECK(cyclic_connectivity(blanusa(1)).value == 4);
    CHECK(cyclic_connectivity(dumbbell()).value == 1);
    CHECK(cyclic_connectivity(k4()).infinite);
    CHECK(oracle::cyclic_connectivity(k4(), 6) == 0);
    Multipole k33 = make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(cyclic_connectivity(k33).infinite);
}

TEST_CASE("cyclic connectivity against subset search") {
    for (const auto& g : bundled_graphs()) {
        if (g.order() > 20) continue;
        auto cc = cyclic_connectivity(g);
        REQUIRE_FALSE(cc.infinite);
        CHECK(cc.value == oracle::cyclic_connectivity(g, girth(g)));
    }
}

TEST_CASE("cyclic connectivity is at most the girth") {
    for (const auto& g : bundled_graphs()) {
        if (g.order() < 14) continue;
        CHECK(cyclic_connectivity(g).value <= girth(g));
    }
}

TEST_CASE("cycle-separating cuts against subset search") {
    for (const auto& g : {petersen(), flower_snark(5), blanusa(1)})
        for (int k = 1; k <= 5; ++k) CHECK(cycle_separating_cuts(g, k) == oracle::separating_cuts(g, k));
    CHECK(cycle_separating_cuts(petersen(), 0).empty());
    CHECK(cycle_separating_cuts(petersen(), 99).empty());
}

TEST_CASE("five-cycles") {
    CHECK(five_cycles(petersen()).size() == 12);
    CHECK(five_cycles(flower_snark(7)).empty());
    for (const auto& g : bundled_graphs()) {
        auto cycles = five_cycles(g);
        CHECK(cycles.size() == five_cycle_edges(g).size());
        for (const auto& c : cycles) CHECK(c.front() == *std::min_element(c.begin(), c.end()));
    }
}

TEST_CASE("cluster reports") {
    auto p = five_cycle_clusters(petersen());
    REQUIRE(p.clusters.size() == 1);
    CHECK(p.clusters[0].vertices.size() == 10);
    CHECK(p.clusters[0].five_cycle_count == 12);
    CHECK_FALSE(p.clusters[0].catalog);
    CHECK(p.uncovered_vertices == 0);

    auto j7 = five_cycle_clusters(flower_snark(7));
    CHECK(j7.clusters.empty());
    CHECK(j7.uncovered_vertices == 28);

    auto nnn = five_cycle_clusters(build(parse_family("NNN")));
    REQUIRE(nnn.clusters.size() == 3);
    for (const auto& c : nnn.clusters) {
        REQUIRE(c.catalog);
        CHECK(*c.catalog == CatalogCluster::dyad);
    }
    CHECK(nnn.uncovered_vertices == 1);

    for (const auto& g : bundled_graphs()) {
        auto r = five_cycle_clusters(g);
        std::set<int> seen;
        int covered = 0;
        for (const auto& c : r.clusters) {
            for (int v : c.vertices) CHECK(seen.insert(v).second);
            covered += static_cast<int>(c.vertices.size());
        }
        CHECK(covered + r.uncovered_vertices == g.order());
    }
}

TEST_CASE("cluster report json") {
    auto j = to_json(five_cycle_clusters(build(parse_family("NNN"))));
    CHECK(j.find("\"cyclic_connectivity\"") != std::string::npos);
    CHECK(j.find("\"catalog\":\"dyad\"") != std::string::npos);
    CHECK(j.find("\"uncovered_vertices\":1") != std::string::npos);
}

TEST_CASE("catalog entries") {
    struct Row {
        CatalogCluster c;
        int vertices, links, semiedges, cycles;
    };
    const std::vector<Row> rows = {
        {CatalogCluster::pentagon, 5, 5, 5, 1},        {CatalogCluster::dyad, 7, 8, 5, 2},
        {CatalogCluster::triad, 9, 11, 5, 3},          {CatalogCluster::quasitriad, 9, 11, 5, 3},
        {CatalogCluster::double_pentagon, 8, 9, 6, 2}, {CatalogCluster::triple_pentagon, 10, 12, 6, 3},
        {CatalogCluster::tricell, 10, 12, 6, 3},
    };
    CHECK(all_catalog_clusters().size() == 7);
    for (const auto& r : rows) {
        const Multipole& m = catalog_multipole(r.c);
        CHECK(m.order() == r.vertices);
        CHECK(static_cast<int>(m.links.size()) == r.links);
        CHECK(m.semiedge_count() == r.semiedges);
        auto cycles = five_cycle_edges(m);
        CHECK(static_cast<int>(cycles.size()) == r.cycles);
        std::set<int> on_cycle;
        for (const auto& c : cycles)
            for (auto e : c) on_cycle.insert({e[0], e[1]});
        CHECK(static_cast<int>(on_cycle.size()) == r.vertices);
        auto found = match_catalog(m);
        REQUIRE(found);
        CHECK(*found == r.c);
    }
    CHECK(dangling_pairs_at_distance_one(triad()) == 2);
    CHECK(dangling_pairs_at_distance_one(quasitriad()) == 1);
    CHECK_FALSE(match_catalog(y_pole()));
}

TEST_CASE("canonical forms") {
    std::mt19937 rng(7);
    Multipole p = petersen();
    auto code = canonical_form(p).code;
    for (int i = 0; i < 20; ++i) CHECK(canonical_form(permuted(p, rng)).code == code);
    CHECK(automorphism_count(p) == 120);
    CHECK(automorphism_count(k4()) == 24);

    for (const auto& m : {dyad(), triad(), double_pentagon(), y_pole(), build(parse_family("NN"))})
        for (int i = 0; i < 5; ++i) CHECK(canonical_form(permuted(m, rng)) == canonical_form(m));

    CHECK_FALSE(canonical_form(triad(), false) == canonical_form(quasitriad(), false));
    CHECK_FALSE(isomorphic(triad(), quasitriad(), false));

    Multipole nn0 = build({"NN", {}, 0, 0}), nn1 = build({"NN", {}, 0, 1});
    CHECK(canonical_form(nn0, false) == canonical_form(nn1, false));

    // ordered connectors pin their order
    Multipole rev = pentagon();
    std::reverse(rev.connectors[0].sids.begin() + 1, rev.connectors[0].sids.end());
    CHECK(isomorphic(rev, pentagon()));
    CHECK_FALSE(isomorphic(pentagram_pole(), pentagon()));
    CHECK(isomorphic(pentagram_pole(), pentagon(), false));
}

TEST_CASE("isomorphism against brute force on small poles") {
    std::vector<Multipole> poles = {pentagon(), dyad(), triad(), quasitriad(), double_pentagon(), m8(), y_pole(),
                                    p2_pole()};
    for (const auto& a : poles)
        for (const auto& b : poles) CHECK(isomorphic(a, b, false) == oracle::isomorphic_small(a, b));
}

TEST_CASE("submultipole search") {
    Multipole g = petersen();
    auto dyads = find_submultipole(g, dyad());
    CHECK(dyads.size() == 30);
    auto adj = oracle::neighbours(g);
    std::set<std::vector<int>> images;
    for (const auto& e : dyads) {
        std::set<int> in(e.vertex_map.begin(), e.vertex_map.end());
        std::vector<int> out;
        for (int v = 0; v < 10; ++v)
            if (!in.count(v)) out.push_back(v);
        REQUIRE(out.size() == 3);
        // the three missing vertices form a path
        int edges = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                edges += std::count(adj[out[i]].begin(), adj[out[i]].end(), out[j]);
        CHECK(edges == 2);
        CHECK(images.insert(out).second);
        CHECK(e.cut.size() == 5);
    }
    CHECK(find_submultipole(g, build(parse_family("NN"))).empty());
    CHECK(find_submultipole(g, dyad(), true).size() == 1);

    for (const auto& l : loupekine_snarks()) CHECK(find_submultipole(l, composition_template("P_NN")).size() >= 1);
}
