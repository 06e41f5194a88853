#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "snarkmorph/constructions.hpp"
#include "snarkmorph/criticality.hpp"
#include "snarkmorph/structure.hpp"
#include "snarkmorph/tait.hpp"

using namespace snarkmorph;
using Tuples = std::set<std::vector<int>>;
using oracle::c5_form, oracle::dyad_form, oracle::m7_form, oracle::mev_form, oracle::p2_form, oracle::parity_ok,
    oracle::proper23_form, oracle::v4_form;

namespace {

Tuples as_tuples(const ColouringSet& s) {
    Tuples out;
    for (const auto& t : s.tuples()) out.insert(std::vector<int>(t.begin(), t.end()));
    return out;
}

// Boundary tuples from the oracle, positions reordered to the listed sids.
Tuples oracle_set(const Multipole& m, const std::vector<int>& sids) {
    Tuples out;
    for (const auto& t : oracle::boundary(m)) {
        std::vector<int> u;
        for (int s : sids) u.push_back(t[s]);
        out.insert(u);
    }
    return out;
}

std::vector<int> sids_of(const Multipole& m, const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const auto& n : names)
        for (int s : m.connector(n).sids) out.push_back(s);
    return out;
}

Multipole flatten(const Multipole& m) {
    std::vector<std::string> names;
    for (const auto& c : m.connectors) names.push_back(c.name);
    return merge_connectors(m, names, "S", false);
}

std::vector<Multipole> small_catalog() {
    return {pentagon(),       pentagram_pole(),  dyad(),     triad(),    quasitriad(),
            double_pentagon(), triple_pentagon(), tricell(), p2_pole(),  mev_pole(),
            v4_pole(),        m7_pole(),         m8(),       hexagon(),  y_pole()};
}

}  // namespace

TEST_CASE("colouring counts") {
    CHECK(count_colourings(petersen()) == 0);
    CHECK(count_colourings(k4()) == 6);
    CHECK(oracle::count(k4()) == 6);
    Multipole edge;
    edge.isolated.push_back({0, 1});
    edge.connectors.push_back({"E", false, {0, 1}});
    CHECK(count_colourings(edge) == 3);
    for (const auto& g : {flower_snark(5), blanusa(1), dumbbell(), k4(), y_chain(2)})
        CHECK(count_colourings(g) == oracle::count(g));
    for (const auto& m : small_catalog()) CHECK(count_colourings(m) == oracle::count(m));
}

TEST_CASE("colouring sets agree with enumeration") {
    for (const auto& m : small_catalog()) {
        std::vector<int> all(m.semiedge_count());
        std::iota(all.begin(), all.end(), 0);
        CHECK(as_tuples(colouring_set(m)) == oracle_set(m, all));
    }
    CHECK(colouring_set(petersen()).empty());
}

TEST_CASE("closed forms") {
    auto check = [](const Multipole& m, const std::vector<std::string>& names,
                    bool (*form)(const std::vector<int>&), std::size_t size) {
        Tuples expect = oracle::tuples(static_cast<int>(sids_of(m, names).size()), form);
        CHECK(expect.size() == size);
        CHECK(oracle_set(m, sids_of(m, names)) == expect);
        CHECK(as_tuples(colouring_set_in(m, names)) == expect);
    };
    check(p2_pole(), {"I", "O", "r"}, p2_form, 24);
    check(mev_pole(), {"B", "C"}, mev_form, 18);
    check(v4_pole(), {"S1", "S2", "S3"}, v4_form, 48);
    check(m7_pole(), {"E", "I", "O", "r"}, m7_form, 72);
    check(dyad(), {"I", "O", "r"}, dyad_form, 36);
    check(pentagon(), {"P"}, c5_form, 30);

    Tuples t = oracle::tuples(5, proper23_form);
    CHECK(as_tuples(colouring_set_in(triad(), {"B", "C"})) == t);

    CHECK(as_tuples(p2_closed_set()) == oracle::tuples(5, p2_form));
    CHECK(as_tuples(mev_closed_set()) == oracle::tuples(5, mev_form));
    CHECK(as_tuples(v4_closed_set()) == oracle::tuples(6, v4_form));
    CHECK(as_tuples(m7_closed_set()) == oracle::tuples(7, m7_form));
    CHECK(as_tuples(negator_closed_set()) == oracle::tuples(5, dyad_form));
    CHECK(as_tuples(c5_closed_set()) == oracle::tuples(5, c5_form));
    CHECK(as_tuples(proper23_closed_set()) == t);
}

TEST_CASE("pentagon and pentagram split the parity tuples") {
    Tuples parity = oracle::tuples(5, parity_ok);
    CHECK(parity.size() == 60);
    Tuples c5 = as_tuples(colouring_set_in(pentagon(), {"P"}));
    Tuples star = as_tuples(colouring_set_in(pentagram_pole(), {"P"}));
    CHECK(c5.size() == 30);
    CHECK(star.size() == 30);
    Tuples both;
    std::set_union(c5.begin(), c5.end(), star.begin(), star.end(), std::inserter(both, both.end()));
    CHECK(both == parity);
    CHECK(compare_sets(colouring_set_in(pentagon(), {"P"}), colouring_set_in(pentagram_pole(), {"P"})) ==
          SetRelation::disjoint);
}

TEST_CASE("parity and Kirchhoff on every tuple") {
    std::vector<Multipole> poles = small_catalog();
    poles.push_back(build(parse_family("NN")));
    poles.push_back(build(parse_family("NT")));
    for (const auto& m : poles)
        for (const auto& t : colouring_set(m).tuples()) {
            CHECK(parity_check(t));
            CHECK(parity_ok(std::vector<int>(t.begin(), t.end())));
            Klein s = 0;
            for (Klein x : t) s ^= x;
            CHECK(s == 0);
        }
    CHECK(parity_check(tuple_from_string("aa")));
    CHECK_FALSE(parity_check(tuple_from_string("ab")));
}

TEST_CASE("flows through connectors") {
    Multipole d = dyad();
    int colourings = 0;
    enumerate_colourings(d, [&](const Colouring& c) {
        Klein i = flow_through(d, c.boundary, "I"), o = flow_through(d, c.boundary, "O"),
              r = flow_through(d, c.boundary, "r");
        CHECK(((i == 0) != (o == 0)));
        CHECK((i ^ o ^ r) == 0);
        ++colourings;
        return true;
    });
    CHECK(colourings > 0);
    Multipole t = triad();
    enumerate_colourings(t, [&](const Colouring& c) {
        Klein b = flow_through(t, c.boundary, "B"), cc = flow_through(t, c.boundary, "C");
        CHECK(b == cc);
        CHECK(b != 0);
        return true;
    });
    CHECK_THROWS_AS(flow_through(d, colouring_set(d).tuples().front(), "Z"), InputError);
}

TEST_CASE("connector kinds") {
    CHECK(classify_connector(triad(), "B") == ConnectorKind::proper);
    CHECK(classify_connector(build(parse_family("NT")), "I") == ConnectorKind::improper);
    CHECK(classify_connector(dyad(), "I") == ConnectorKind::mixed);
    Multipole dead = disjoint_union(petersen(), triad());
    CHECK(classify_connector(dead, "B") == ConnectorKind::vacuous);
}

TEST_CASE("set comparisons") {
    CHECK(compare_sets(colouring_set_in(build(parse_family("NN")), {"I", "O", "r"}),
                       colouring_set_in(p2_pole(), {"I", "O", "r"})) == SetRelation::equal);
    CHECK(compare_sets(colouring_set_in(m24(), {"I", "O"}), colouring_set_in(y_chain(3), {"I", "O"})) ==
          SetRelation::disjoint);
    ColouringSet all = colouring_set_from(5, [](const ColourTuple&) { return true; });
    CHECK(compare_sets(colouring_set(dyad()), all) == SetRelation::x_subset);
    CHECK(compare_sets(all, colouring_set(dyad())) == SetRelation::y_subset);
    CHECK(compare_sets(colouring_set(dyad()), colouring_set(p2_pole())) == SetRelation::disjoint);
    CHECK(compare_sets(colouring_set(dyad()), colouring_set(pentagon())) == SetRelation::incomparable);
    CHECK_THROWS_AS(compare_sets(colouring_set(dyad()), colouring_set(v4_pole())), InputError);
}

TEST_CASE("negator verdicts") {
    CHECK(is_perfect_negator(dyad()) == NegatorVerdict::perfect);
    CHECK(is_perfect_negator(p2_pole()) == NegatorVerdict::not_a_negator);
    Multipole j5 = flower_snark(5);
    auto adj = oracle::neighbours(j5);
    CHECK(is_perfect_negator(negator_from(j5, adj[0][0], adj[0][1])) != NegatorVerdict::not_a_negator);

    Multipole nt = build(parse_family("NT"));
    int semiperfect = 0;
    for (int s : nt.connector("C").sids) {
        Multipole m = split_connector(nt, {s}, "s", false);
        m = with_connectors(m, {m.connector("I"), m.connector("C"), m.connector("s")});
        if (is_perfect_negator(m) == NegatorVerdict::semiperfect) ++semiperfect;
    }
    CHECK(semiperfect > 0);
    CHECK_THROWS_AS(is_perfect_negator(triad()), InputError);
}

TEST_CASE("proper (2,3) verdicts") {
    CHECK(is_perfect_proper23(triad()) == Proper23Verdict::perfect);
    CHECK(is_perfect_proper23(build(parse_family("NT"))) == Proper23Verdict::not_proper);
    CHECK(is_perfect_proper23(disjoint_union(petersen(), triad())) == Proper23Verdict::uncolourable);
    CHECK_THROWS_AS(is_perfect_proper23(dyad()), InputError);
}

TEST_CASE("even (2,2,2)-poles") {
    CHECK(is_even_222(hexagon()));
    CHECK_FALSE(is_even_222(v4_pole()));
    CHECK(is_even_222(build(parse_family("H_M"))));
}

TEST_CASE("superpentagons") {
    CHECK(is_superpentagon(pentagon(), pentagon().connector("P").sids) == SuperpentagonVerdict::perfect);
    CHECK(is_superpentagon(j5_superpentagon(), {0, 1, 2, 3, 4}) == SuperpentagonVerdict::perfect);
    std::vector<int> order = {1, 2, 3, 4};
    do {
        std::vector<int> cyc = {0, order[0], order[1], order[2], order[3]};
        CHECK(is_superpentagon(dyad(), cyc) == SuperpentagonVerdict::not_superpentagon);
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(is_superpentagon(disjoint_union(petersen(), pentagon()), {0, 1, 2, 3, 4}) ==
          SuperpentagonVerdict::uncolourable);
}

TEST_CASE("junction soundness on small poles") {
    std::vector<Multipole> poles = small_catalog();
    int checked = 0;
    for (const auto& a : poles)
        for (const auto& b : poles) {
            int k = a.semiedge_count();
            if (k != b.semiedge_count() || a.isolated.size() + b.isolated.size() > 1) continue;
            Multipole fa = flatten(a), fb = flatten(b);
            Tuples ta = oracle::boundary(a), tb = oracle::boundary(b);
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            int step = 0;
            do {
                if (step++ % 7) continue;
                const auto& sa = fa.connector("S").sids;
                const auto& sb = fb.connector("S").sids;
                bool meet = false;
                for (const auto& x : ta) {
                    for (const auto& y : tb) {
                        bool ok = true;
                        for (int i = 0; i < k && ok; ++i) ok = x[sa[i]] == y[sb[perm[i]]];
                        if (ok) meet = true;
                    }
                    if (meet) break;
                }
                Multipole j = junction_connectors(fa, "S", fb, "S", perm);
                CHECK(oracle::colourable(j) == meet);
                CHECK(is_colourable(j) == meet);
                ++checked;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    CHECK(checked > 100);
}

TEST_CASE("substitution keeps a snark a snark") {
    struct Case {
        Multipole original, replacement, rest;
        std::vector<std::string> order;
    };
    std::vector<Case> cases = {
        {p2_pole(), build(parse_family("NN")), dyad(), {"I", "O", "r"}},
        {p2_pole(), build(parse_family("TT")), dyad(), {"I", "O", "r"}},
        {mev_pole(), build(parse_family("NT")), triad(), {"B", "C"}},
    };
    for (const auto& c : cases) {
        Multipole m = flatten(semiedges_in_connector_order(merge_connectors(c.original, c.order, "S", false)));
        Multipole r = flatten(semiedges_in_connector_order(c.replacement));
        SetRelation rel = compare_sets(colouring_set(r), colouring_set(m));
        CHECK((rel == SetRelation::equal || rel == SetRelation::x_subset));
        Multipole n = flatten(c.rest);
        std::vector<int> perm = {0, 1, 2, 3, 4};
        int snarks = 0;
        do {
            if (is_colourable(junction_connectors(m, "S", n, "S", perm))) continue;
            ++snarks;
            CHECK_FALSE(is_colourable(junction_connectors(r, "S", n, "S", perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(snarks > 0);
    }
}

TEST_CASE("reduction counts agree around a 5-cycle") {
    std::vector<Multipole> graphs = {petersen(), flower_snark(5)};
    for (const auto& g : loupekine_snarks()) graphs.push_back(g);
    for (const auto& g : graphs) {
        for (const auto& c : five_cycles(g)) {
            std::set<std::uint64_t> counts;
            for (int i = 0; i < 5; ++i) {
                Multipole r = reduce_edge(g, {c[i], c[(i + 1) % 5]});
                std::uint64_t n = count_colourings(r);
                CHECK(n == oracle::count(r));
                counts.insert(n);
            }
            CHECK(counts.size() == 1);
        }
    }
}

TEST_CASE("dump format") {
    ColouringSet s = colouring_set_in(p2_pole(), {"I", "O", "r"});
    std::string d = s.dump();
    CHECK(std::count(d.begin(), d.end(), '\n') == 24);
    CHECK(d.substr(0, 6) == "abaca\n");
}
