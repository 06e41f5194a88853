#include "snarkmorph/criticality.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>
#include <vector>

#include "json.hpp"
#include "snarkmorph/constructions.hpp"
#include "snarkmorph/structure.hpp"

namespace snarkmorph {

namespace {

void require_graph(const Multipole& g) {
    if (!g.is_graph()) throw InputError("expected a 0-pole");
}

void require_snark(const Multipole& g) {
    require_graph(g);
    if (is_colourable(g)) throw InputError("graph is colourable, not a snark");
}

std::array<int, 2> sorted(std::array<int, 2> e) {
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    return e;
}

// Subcubic graph as a multipole: deficient vertices get dangling edges.
Multipole from_subcubic(int n, const std::vector<std::array<int, 2>>& links) {
    Multipole m;
    m.vertex_count = n;
    std::vector<int> deg(n, 0);
    for (auto l : links) {
        m.links.push_back(sorted(l));
        ++deg[l[0]];
        ++deg[l[1]];
    }
    Connector c{"S", false, {}};
    int k = 0;
    for (int v = 0; v < n; ++v)
        for (int d = deg[v]; d < 3; ++d) {
            m.dangling.push_back({v, k});
            c.sids.push_back(k++);
        }
    if (k) m.connectors.push_back(std::move(c));
    m.normalize();
    return m;
}

// Link indices of e and f in g, distinct even for parallel edges.
std::array<int, 2> two_links(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f) {
    e = sorted(e);
    f = sorted(f);
    int i = -1, j = -1;
    for (int l = 0; l < static_cast<int>(g.links.size()); ++l) {
        if (i < 0 && g.links[l] == e) {
            i = l;
            continue;
        }
        if (j < 0 && g.links[l] == f) j = l;
    }
    if (i < 0 || j < 0) throw InputError("edge not present");
    return {i, j};
}

std::vector<std::array<int, 2>> without(const Multipole& g, std::array<int, 2> idx) {
    std::vector<std::array<int, 2>> out;
    for (int l = 0; l < static_cast<int>(g.links.size()); ++l)
        if (l != idx[0] && l != idx[1]) out.push_back(g.links[l]);
    return out;
}

// Smallest index i with pred(pairs[i]), scanning in parallel.
std::optional<std::size_t> first_match(const std::vector<std::array<int, 2>>& pairs,
                                       const std::function<bool(std::array<int, 2>)>& pred) {
    std::atomic<std::size_t> next{0}, best{pairs.size()};
    auto work = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= pairs.size() || i >= best.load()) return;
            if (!pred(pairs[i])) continue;
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    };
    int n = std::min<int>(worker_count(), static_cast<int>(pairs.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (best.load() == pairs.size()) return std::nullopt;
    return best.load();
}

std::vector<std::array<int, 2>> adjacent_pairs(const Multipole& g) {
    std::set<std::array<int, 2>> s;
    for (auto [a, b] : g.links)
        if (a != b) s.insert({a, b});
    return {s.begin(), s.end()};
}

std::vector<std::array<int, 2>> non_adjacent_pairs(const Multipole& g) {
    std::vector<std::array<int, 2>> out;
    for (int u = 0; u < g.vertex_count; ++u)
        for (int v = u + 1; v < g.vertex_count; ++v)
            if (find_link(g, u, v) < 0) out.push_back({u, v});
    return out;
}

}  // namespace

int worker_count() {
    if (const char* s = std::getenv("SNARKMORPH_THREADS")) {
        int n = std::atoi(s);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

bool vertex_pair_removable(const Multipole& g, int u, int v) {
    require_graph(g);
    if (u == v) throw InputError("vertex pair needs two distinct vertices");
    return !is_colourable(remove_vertices(g, {u, v}, true));
}

PairVerdict removable_vertex_pair(const Multipole& g, int u, int v) {
    require_snark(g);
    if (u == v) throw InputError("vertex pair needs two distinct vertices");
    PairVerdict p;
    p.kind = PairKind::vertex_pair;
    p.vertices = {std::min(u, v), std::max(u, v)};
    p.colourings = count_colourings(remove_vertices(g, {u, v}, true));
    p.removable = p.colourings == 0;
    return p;
}

bool edge_pair_removable(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f) {
    require_graph(g);
    auto idx = two_links(g, e, f);
    return !is_colourable(sever_links(g, {idx[0], idx[1]}));
}

PairVerdict removable_edge_pair(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f) {
    require_snark(g);
    auto idx = two_links(g, e, f);
    PairVerdict p;
    p.kind = PairKind::edge_pair;
    p.edges = {sorted(e), sorted(f)};
    p.colourings = count_colourings(sever_links(g, {idx[0], idx[1]}));
    p.removable = p.colourings == 0;
    return p;
}

Multipole reduce_edge(const Multipole& g, std::array<int, 2> e) {
    require_graph(g);
    if (e[0] == e[1]) throw InputError("cannot reduce a loop");
    int li = find_link(g, e[0], e[1]);
    if (li < 0) throw InputError("edge not present");
    std::vector<std::array<int, 2>> links = g.links;
    links.erase(links.begin() + li);
    for (int x : {e[0], e[1]}) {
        std::vector<int> at;
        for (int i = 0; i < static_cast<int>(links.size()); ++i)
            if (links[i][0] == x || links[i][1] == x) at.push_back(i);
        if (at.size() != 2) throw InputError("suppressing an end of the edge leaves a free loop");
        auto other = [&](int i) { return links[i][0] == x ? links[i][1] : links[i][0]; };
        int p = other(at[0]), q = other(at[1]);
        links.erase(links.begin() + at[1]);
        links.erase(links.begin() + at[0]);
        links.push_back(sorted({p, q}));
    }
    std::vector<int> id(g.vertex_count, -1);
    int n = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (v != e[0] && v != e[1]) id[v] = n++;
    std::vector<std::array<int, 2>> out;
    for (auto [a, b] : links) out.push_back(sorted({id[a], id[b]}));
    return make_graph(n, out);
}

Multipole extend_edge(const Multipole& g, std::array<int, 2> e1, std::array<int, 2> e2) {
    require_graph(g);
    int i = find_link(g, e1[0], e1[1]);
    if (i < 0) throw InputError("edge not present");
    int x = -1;
    Multipole m = subdivide_link(g, i, "t1", &x);
    int j = sorted(e1) == sorted(e2) ? find_link(m, x, e1[1]) : find_link(m, e2[0], e2[1]);
    if (j < 0) throw InputError("edge not present");
    m = subdivide_link(m, j, "t2");
    m = join_connectors(m, "t1", "t2");
    m.connectors.clear();
    m.validate();
    return m;
}

std::string to_string(Grade g) {
    switch (g) {
        case Grade::not_snark: return "not_snark";
        case Grade::snark_trivial: return "snark_trivial";
        case Grade::critical_strict: return "critical_strict";
        case Grade::bicritical: return "bicritical";
        case Grade::noncritical_snark: return "noncritical_snark";
    }
    return "?";
}

CriticalityGrade grade(const Multipole& g) {
    require_graph(g);
    CriticalityGrade out;
    if (!is_connected(g) || is_colourable(g)) return out;
    if (girth(g) < 5) {
        out.grade = Grade::snark_trivial;
        return out;
    }
    auto cc = cyclic_connectivity(g);
    if (!cc.infinite && cc.value < 4) {
        out.grade = Grade::snark_trivial;
        return out;
    }
    auto removable = [&](std::array<int, 2> p) { return vertex_pair_removable(g, p[0], p[1]); };
    auto adj = adjacent_pairs(g);
    if (auto i = first_match(adj, removable)) {
        out.grade = Grade::noncritical_snark;
        out.witness = adj[*i];
        return out;
    }
    auto far = non_adjacent_pairs(g);
    if (auto i = first_match(far, removable)) {
        out.grade = Grade::critical_strict;
        out.witness = far[*i];
        return out;
    }
    out.grade = Grade::bicritical;
    return out;
}

std::string to_json(const CriticalityGrade& c, const Multipole& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    j["colourings"] = c.grade == Grade::not_snark ? count_colourings(g) : 0;
    j["grade"] = to_string(c.grade);
    if (c.witness)
        j["witness"] = {(*c.witness)[0], (*c.witness)[1]};
    else
        j["witness"] = nullptr;
    return j.dump();
}

bool is_critical(const Multipole& g) {
    auto gr = grade(g).grade;
    return gr == Grade::critical_strict || gr == Grade::bicritical;
}

bool is_bicritical(const Multipole& g) { return grade(g).grade == Grade::bicritical; }

PairVerdict essential_pair(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f) {
    require_snark(g);
    auto idx = two_links(g, e, f);
    PairVerdict p;
    p.kind = PairKind::edge_pair;
    p.edges = {sorted(e), sorted(f)};
    auto rest = without(g, idx);
    Multipole reduced = from_subcubic(g.vertex_count, rest);
    p.colourings = count_colourings(reduced);
    p.removable = p.colourings == 0;
    if (p.removable) {
        p.essential = false;
        return p;
    }
    std::vector<int> deg(g.vertex_count, 0);
    for (auto [a, b] : rest) {
        ++deg[a];
        ++deg[b];
    }
    bool ok = true;
    for (int v = 0; v < g.vertex_count && ok; ++v) {
        if (deg[v] != 2) continue;
        std::vector<std::array<int, 2>> links;
        std::vector<int> ends;
        for (auto l : rest) {
            if (l[0] == v && l[1] == v) {
                ends = {};
                break;
            }
            if (l[0] == v || l[1] == v)
                ends.push_back(l[0] == v ? l[1] : l[0]);
            else
                links.push_back(l);
        }
        if (ends.size() != 2) {
            ok = false;
            break;
        }
        links.push_back({ends[0], ends[1]});
        std::vector<int> id(g.vertex_count, -1);
        int n = 0;
        for (int x = 0; x < g.vertex_count; ++x)
            if (x != v) id[x] = n++;
        for (auto& l : links) l = {id[l[0]], id[l[1]]};
        ok = is_colourable(from_subcubic(n, links));
    }
    p.essential = ok;
    return p;
}

bool nearly_critical(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f) {
    require_snark(g);
    e = sorted(e);
    f = sorted(f);
    std::vector<std::array<int, 2>> pairs;
    for (auto p : adjacent_pairs(g))
        if (p != e && p != f) pairs.push_back(p);
    return !first_match(pairs, [&](std::array<int, 2> p) { return vertex_pair_removable(g, p[0], p[1]); });
}

NegatorProfile negator_profile(const Multipole& g, int u, int v) {
    require_snark(g);
    auto adj = adjacency(g);
    std::set<int> nu(adj[u].begin(), adj[u].end());
    std::vector<int> common;
    for (int w : adj[v])
        if (nu.count(w) && w != u && w != v &&
            std::find(common.begin(), common.end(), w) == common.end())
            common.push_back(w);
    if (common.empty()) throw InputError("u and v share no neighbour");
    if (common.size() > 1) throw InputError("u and v share several neighbours");
    NegatorProfile p;
    p.w = common[0];
    p.verdict = is_perfect_negator(negator_from(g, u, v));
    p.uw_removable = vertex_pair_removable(g, u, p.w);
    p.vw_removable = vertex_pair_removable(g, v, p.w);
    if (p.verdict == NegatorVerdict::uncolourable) return p;
    bool perfect = !p.uw_removable && !p.vw_removable;
    bool agrees = perfect ? p.verdict == NegatorVerdict::perfect
                          : p.verdict == NegatorVerdict::semiperfect;
    if (!agrees) throw VerificationError("negator verdict contradicts the removable-pair characterisation");
    return p;
}

std::string to_string(Feasibility f) {
    switch (f) {
        case Feasibility::feasible: return "feasible";
        case Feasibility::fails_bicritical: return "fails_bicritical";
        case Feasibility::fails_i: return "fails_i";
        case Feasibility::fails_ii: return "fails_ii";
    }
    return "?";
}

Feasibility feasible_negator(const Multipole& g, int u, int v) {
    require_snark(g);
    if (girth(g) < 5) throw InputError("feasibility needs girth at least 5");
    Multipole n = negator_from(g, u, v);
    auto adj = adjacency(g);
    int w = -1;
    for (int x : adj[u])
        if (std::find(adj[v].begin(), adj[v].end(), x) != adj[v].end()) w = x;
    std::vector<int> inside;
    for (int x = 0; x < g.vertex_count; ++x)
        if (x != u && x != v && x != w) inside.push_back(x);

    std::vector<std::array<int, 2>> pairs;
    for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j) pairs.push_back({inside[i], inside[j]});
    if (first_match(pairs, [&](std::array<int, 2> p) { return vertex_pair_removable(g, p[0], p[1]); }))
        return Feasibility::fails_bicritical;

    // (i): any two semiedges formerly at x can share a colour
    std::vector<std::array<int, 2>> xy;
    for (int x : {u, v})
        for (int y : inside) xy.push_back({x, y});
    auto fails_i = [&](std::array<int, 2> p) {
        Multipole m = remove_vertices(g, {p[0], p[1]}, true);
        const auto& at_x = m.connector("v" + std::to_string(p[0])).sids;
        ColouringSet col = colouring_set(m);
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                bool found = false;
                for (std::uint64_t c : col.codes()) {
                    auto t = col.unpack(c);
                    if (t[at_x[a]] == t[at_x[b]]) {
                        found = true;
                        break;
                    }
                }
                if (!found) return true;
            }
        return false;
    };
    if (first_match(xy, fails_i)) return Feasibility::fails_i;

    // (ii): (a,a,b,b,a) and (a,a,b,b,b) on (i1,i2,o1,o2,r) in N - y
    for (int y = 0; y < n.vertex_count; ++y) {
        ColouringSet col = colouring_set(remove_vertices(n, {y}, true));
        std::set<ColourTuple> seen;
        for (const auto& t : col.tuples()) seen.insert(ColourTuple(t.begin(), t.begin() + 5));
        bool ok = false;
        for (Klein a = 1; a <= 3 && !ok; ++a)
            for (Klein b = 1; b <= 3 && !ok; ++b)
                if (a != b) ok = seen.count({a, a, b, b, a}) && seen.count({a, a, b, b, b});
        if (!ok) return Feasibility::fails_ii;
    }
    return Feasibility::feasible;
}

}  // namespace snarkmorph
