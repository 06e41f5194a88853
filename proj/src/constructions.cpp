#include "snarkmorph/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "snarkmorph/criticality.hpp"
#include "snarkmorph/structure.hpp"

namespace snarkmorph {

namespace {

// Renames connectors (in the listed order), drops nothing, and renumbers
// semiedges to follow the new connector order.
Multipole arrange(const Multipole& m, const std::vector<std::pair<std::string, std::string>>& names,
                  bool ordered = false) {
    std::vector<Connector> cs;
    int total = 0;
    for (const auto& [from, to] : names) {
        Connector c = m.connector(from);
        c.name = to;
        c.ordered = ordered;
        total += c.arity();
        cs.push_back(std::move(c));
    }
    if (total != m.semiedge_count()) throw InputError("arrange: connectors do not cover all semiedges");
    return semiedges_in_connector_order(with_connectors(m, std::move(cs)));
}

Multipole require_graph(const Multipole& g) {
    if (!g.is_graph()) throw InputError("expected a 0-pole");
    return g;
}

std::vector<int> common_neighbours(const Multipole& g, int u, int v) {
    auto adj = adjacency(g);
    std::set<int> a(adj[u].begin(), adj[u].end());
    std::set<int> out;
    for (int w : adj[v])
        if (a.count(w) && w != u && w != v) out.insert(w);
    return {out.begin(), out.end()};
}

std::string last_connector(const Multipole& m) { return m.connectors.back().name; }

// Blueprint part with one vertex and three dangling edges in connector "x".
Multipole vertex_pole() {
    Multipole m;
    m.vertex_count = 1;
    m.dangling = {{0, 0}, {0, 1}, {0, 2}};
    m.connectors = {{"x", false, {0, 1, 2}}};
    return m;
}

// Vertex with dangling edges in P, Q and E plus an isolated edge joining P
// and Q.
Multipole vertex_with_bridge() {
    Multipole m;
    m.vertex_count = 1;
    m.dangling = {{0, 0}, {0, 1}, {0, 2}};
    m.isolated = {{3, 4}};
    m.connectors = {{"P", false, {0, 3}}, {"Q", false, {1, 4}}, {"E", false, {2}}};
    return m;
}

// Two isolated edges between X and Y.
Multipole double_edge() {
    Multipole m;
    m.isolated = {{0, 2}, {1, 3}};
    m.connectors = {{"X", false, {0, 1}}, {"Y", false, {2, 3}}};
    return m;
}

// W: vertex w plus three isolated edges, each between two of D1, D2, D3.
Multipole w_pole() {
    Multipole m;
    m.vertex_count = 1;
    m.dangling = {{0, 0}, {0, 1}, {0, 2}};
    m.isolated = {{3, 4}, {5, 6}, {7, 8}};
    m.connectors = {{"D1", false, {0, 3, 8}}, {"D2", false, {1, 4, 5}}, {"D3", false, {2, 6, 7}}};
    return m;
}

// U: vertex with e1, e2, r and isolated edges f1-f2, g1-g2.
Multipole u_pole() {
    Multipole m;
    m.vertex_count = 1;
    m.dangling = {{0, 0}, {0, 1}, {0, 2}};
    m.isolated = {{3, 4}, {5, 6}};
    m.connectors = {{"S1", false, {0, 3, 5}}, {"S2", false, {1, 4, 6}}, {"r", false, {2}}};
    return m;
}

// Standard forms of user-supplied parts.
Multipole as_negator(const Multipole& n) {
    if (n.connectors.size() != 3 || n.connectors[0].arity() != 2 || n.connectors[1].arity() != 2 ||
        n.connectors[2].arity() != 1)
        throw InputError("negator needs connectors of arity 2, 2, 1");
    Multipole s = arrange(n, {{n.connectors[0].name, "I"},
                              {n.connectors[1].name, "O"},
                              {n.connectors[2].name, "r"}});
    if (is_perfect_negator(s) == NegatorVerdict::not_a_negator)
        throw InputError("component is not a negator");
    return s;
}

Multipole as_proper23(const Multipole& t) {
    if (t.connectors.size() != 2 || t.connectors[0].arity() != 2 || t.connectors[1].arity() != 3)
        throw InputError("(2,3)-pole needs connectors of arity 2, 3");
    Multipole s = arrange(t, {{t.connectors[0].name, "B"}, {t.connectors[1].name, "C"}});
    auto v = is_perfect_proper23(s);
    if (v == Proper23Verdict::not_proper || v == Proper23Verdict::uncolourable)
        throw InputError("component is not a proper (2,3)-pole");
    return s;
}

Multipole as_even222(const Multipole& h) {
    if (h.connectors.size() != 3) throw InputError("(2,2,2)-pole needs three connectors");
    Multipole s = arrange(h, {{h.connectors[0].name, "S1"},
                              {h.connectors[1].name, "S2"},
                              {h.connectors[2].name, "S3"}});
    if (!is_even_222(s)) throw InputError("component is not an even (2,2,2)-pole");
    return s;
}

Multipole as_shape(const Multipole& m, const std::vector<std::string>& names,
                   const std::vector<int>& arities) {
    if (m.connectors.size() != names.size()) throw InputError("wrong connector shape");
    std::vector<std::pair<std::string, std::string>> ren;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (m.connectors[i].arity() != arities[i]) throw InputError("wrong connector shape");
        ren.push_back({m.connectors[i].name, names[i]});
    }
    return arrange(m, ren);
}

int add_negator(Blueprint& bp, const std::string& name, const Multipole& n) {
    return bp.add(name, as_negator(n), negator_closed_set(), "negator closed set");
}

int add_triad(Blueprint& bp, const std::string& name, const Multipole& t) {
    return bp.add(name, as_proper23(t), proper23_closed_set(), "proper (2,3) closed set");
}

int add_even(Blueprint& bp, const std::string& name, const Multipole& h) {
    return bp.add(name, as_even222(h), even222_set(), "even (2,2,2) set");
}

std::vector<Port> cat(std::vector<Port> a, const std::vector<Port>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

const std::vector<std::vector<int>>& perms3() {
    static const std::vector<std::vector<int>> p = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    return p;
}

std::vector<int> swap_if(int bit) { return bit ? std::vector<int>{1, 0} : std::vector<int>{0, 1}; }

bool has_cc5(const Multipole& g) {
    if (girth(g) < 5) return false;
    auto cc = cyclic_connectivity(g);
    return !cc.infinite && cc.value == 5;
}

// All perfect matchings of 0..n-1, lexicographic.
void matchings(std::vector<int>& free, std::vector<std::array<int, 2>>& cur,
               const std::function<bool(const std::vector<std::array<int, 2>>&)>& visit, bool& stop) {
    if (stop) return;
    if (free.empty()) {
        if (visit(cur)) stop = true;
        return;
    }
    int a = free[0];
    for (std::size_t i = 1; i < free.size() && !stop; ++i) {
        int b = free[i];
        std::vector<int> rest;
        for (std::size_t j = 1; j < free.size(); ++j)
            if (j != i) rest.push_back(free[j]);
        cur.push_back({a, b});
        matchings(rest, cur, visit, stop);
        cur.pop_back();
    }
}

void for_each_matching(int n, const std::function<bool(const std::vector<std::array<int, 2>>&)>& visit) {
    std::vector<int> free(n);
    std::iota(free.begin(), free.end(), 0);
    std::vector<std::array<int, 2>> cur;
    bool stop = false;
    matchings(free, cur, visit, stop);
}

// Closes a 9-pole given as a list of free ports: one new vertex on three of
// them, the other six paired. Picks the first closure in enumeration order
// that has girth >= 5 and cyclic connectivity 5.
Blueprint close_nine(const Blueprint& base, const std::vector<Port>& free, int skip) {
    int n = static_cast<int>(free.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                std::vector<int> rest;
                for (int i = 0; i < n; ++i)
                    if (i != a && i != b && i != c) rest.push_back(i);
                std::optional<Blueprint> found;
                for_each_matching(static_cast<int>(rest.size()), [&](const auto& m) {
                    Blueprint bp = base;
                    int z = bp.add_vertex("closing vertex");
                    bp.join(free[a], bp.port(z, "x", 0));
                    bp.join(free[b], bp.port(z, "x", 1));
                    bp.join(free[c], bp.port(z, "x", 2));
                    for (auto [i, j] : m) bp.join(free[rest[i]], free[rest[j]]);
                    if (!has_cc5(bp.realize())) return false;
                    if (skip-- > 0) return false;
                    found = std::move(bp);
                    return true;
                });
                if (found) return *found;
            }
    throw InputError("no closure with cyclic connectivity 5");
}

Blueprint close_matching(const Blueprint& base, const std::vector<Port>& free, int skip) {
    std::optional<Blueprint> found;
    for_each_matching(static_cast<int>(free.size()), [&](const auto& m) {
        Blueprint bp = base;
        for (auto [i, j] : m) bp.join(free[i], free[j]);
        if (!has_cc5(bp.realize())) return false;
        if (skip-- > 0) return false;
        found = std::move(bp);
        return true;
    });
    if (!found) throw InputError("no closure with cyclic connectivity 5");
    return *found;
}

struct Cache {
    std::mutex mu;
    std::map<std::string, Blueprint> entries;
};

Cache& cache() {
    static Cache c;
    return c;
}

std::string cache_key(const FamilySpec& spec) {
    std::ostringstream os;
    os << spec.family << '|' << spec.n << '|' << spec.alignment;
    for (const auto& p : spec.parts) os << '|' << to_text(p);
    return os.str();
}

}  // namespace

// ---- base graphs ----------------------------------------------------------

Multipole petersen() {
    std::vector<std::array<int, 2>> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return make_graph(10, e);
}

Multipole dumbbell() { return make_graph(2, {{0, 0}, {1, 1}, {0, 1}}); }

Multipole k4() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Multipole y_pole() {
    Multipole m;
    m.vertex_count = 4;  // h, t1, t2, t3
    m.links = {{0, 1}, {0, 2}, {0, 3}};
    m.dangling = {{1, 0}, {2, 1}, {3, 2}, {2, 3}, {1, 4}, {3, 5}};
    m.connectors = {{"I", true, {0, 1, 2}}, {"O", true, {3, 4, 5}}};
    m.normalize();
    return m;
}

namespace {
Blueprint y_chain_blueprint(int k, bool closed) {
    if (k < 1) throw InputError("Y_k needs k >= 1");
    Blueprint bp;
    for (int i = 0; i < k; ++i) bp.add("Y" + std::to_string(i + 1), y_pole());
    for (int i = 0; i + 1 < k; ++i) bp.join(i, "O", i + 1, "I");
    if (closed)
        bp.join(k - 1, "O", 0, "I");
    else {
        bp.expose("I", true, bp.ports(0, "I"));
        bp.expose("O", true, bp.ports(k - 1, "O"));
    }
    return bp;
}
}  // namespace

Multipole y_chain(int k) { return y_chain_blueprint(k, false).realize(); }

Multipole flower_snark(int n) {
    if (n < 3 || n % 2 == 0) throw InputError("J_n needs odd n >= 3");
    return y_chain_blueprint(n, true).realize();
}

Multipole negator_from(const Multipole& g, int u, int v) {
    require_graph(g);
    if (u == v || u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
        throw InputError("negator needs two distinct vertices");
    auto w = common_neighbours(g, u, v);
    if (w.size() != 1) throw InputError("negator needs a unique common neighbour");
    Multipole m = remove_vertices(g, {u, w[0], v}, false);
    return arrange(m, {{"v" + std::to_string(u), "I"},
                       {"v" + std::to_string(v), "O"},
                       {"v" + std::to_string(w[0]), "r"}});
}

Multipole proper23_from(const Multipole& g, int v, std::array<int, 2> e) {
    require_graph(g);
    if (e[0] == v || e[1] == v) throw InputError("severed edge must avoid the removed vertex");
    Multipole m = sever_edges(g, {e});
    std::string b = last_connector(m);
    m = remove_vertices(m, {v}, false);
    return arrange(m, {{b, "B"}, {"v" + std::to_string(v), "C"}});
}

Multipole proper33_from(const Multipole& g, int u, int v) {
    require_graph(g);
    if (find_link(g, u, v) >= 0) throw InputError("vertices must be non-adjacent");
    Multipole m = remove_vertices(g, {u, v}, false);
    return arrange(m, {{"v" + std::to_string(u), "I"}, {"v" + std::to_string(v), "O"}});
}

Multipole even222_from(const Multipole& g, int v) {
    require_graph(g);
    auto adj = adjacency(g);
    std::vector<int> nb = adj[v];
    std::sort(nb.begin(), nb.end());
    if (nb.size() != 3 || nb[0] == nb[1] || nb[1] == nb[2] || nb[0] == v)
        throw InputError("vertex needs three distinct neighbours");
    Multipole m = remove_vertices(g, {v, nb[0], nb[1], nb[2]}, false);
    return arrange(m, {{"v" + std::to_string(nb[0]), "S1"},
                       {"v" + std::to_string(nb[1]), "S2"},
                       {"v" + std::to_string(nb[2]), "S3"}});
}

// ---- catalog ---------------------------------------------------------------

Multipole pentagon() {
    Multipole m;
    m.vertex_count = 5;
    for (int i = 0; i < 5; ++i) {
        m.links.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
        m.dangling.push_back({i, i});
    }
    m.connectors = {{"P", true, {0, 1, 2, 3, 4}}};
    m.normalize();
    return m;
}

Multipole c5_pole() { return pentagon(); }

Multipole pentagram_pole() {
    Multipole m = pentagon();
    m.connectors = {{"P", true, {0, 2, 4, 1, 3}}};
    return semiedges_in_connector_order(m);
}

Multipole dyad() { return negator_from(petersen(), 0, 2); }

Multipole triad() {
    // Petersen minus vertex 0, severing an edge at distance 2 from it.
    Multipole p = petersen();
    auto adj = adjacency(p);
    std::set<int> near(adj[0].begin(), adj[0].end());
    near.insert(0);
    for (auto [a, b] : p.links)
        if (!near.count(a) && !near.count(b)) return proper23_from(p, 0, {a, b});
    throw VerificationError("triad edge not found");
}

Multipole quasitriad() {
    // x y z p q s t m n
    enum { x, y, z, p, q, s, t, m, n };
    Multipole g;
    g.vertex_count = 9;
    g.links = {{x, y}, {y, z}, {z, p}, {p, q}, {x, q}, {z, s},
               {s, t}, {x, t}, {t, m}, {m, n}, {q, n}};
    g.dangling = {{y, 0}, {p, 1}, {s, 2}, {m, 3}, {n, 4}};
    for (auto& l : g.links)
        if (l[0] > l[1]) std::swap(l[0], l[1]);
    g.connectors = {{"S", false, {0, 1, 2, 3, 4}}};
    g.normalize();
    return g;
}

Multipole double_pentagon() {
    // remove the edge 0-1 with its ends, sever an edge avoiding their
    // neighbourhoods
    Multipole p = petersen();
    auto adj = adjacency(p);
    std::set<int> near{0, 1};
    for (int w : adj[0]) near.insert(w);
    for (int w : adj[1]) near.insert(w);
    for (auto [a, b] : p.links) {
        if (near.count(a) || near.count(b)) continue;
        Multipole m = sever_edges(p, {{a, b}});
        std::string c = last_connector(m);
        m = remove_vertices(m, {0, 1}, false);
        return arrange(m, {{"v0", "A"}, {"v1", "B"}, {c, "C"}});
    }
    throw VerificationError("double pentagon edge not found");
}

namespace {
// Three pairwise disjoint Petersen edges; on_hexagon selects whether they
// alternate on a 6-cycle (triple pentagon) or extend to a perfect matching
// (tricell).
Multipole petersen_three_severed(bool on_hexagon) {
    Multipole p = petersen();
    int m = static_cast<int>(p.links.size());
    auto linked = [&](int a, int b) { return find_link(p, a, b) >= 0; };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                std::array<std::array<int, 2>, 3> e = {p.links[i], p.links[j], p.links[k]};
                std::set<int> ends;
                for (auto x : e) ends.insert({x[0], x[1]});
                if (ends.size() != 6) continue;
                // alternate hexagon: e0, link, e1, link, e2, link
                bool hex = false;
                for (int o1 = 0; o1 < 2 && !hex; ++o1)
                    for (int o2 = 0; o2 < 2 && !hex; ++o2)
                        for (int o3 = 0; o3 < 2 && !hex; ++o3)
                            for (int sw = 0; sw < 2 && !hex; ++sw) {
                                auto a = e[0], b = e[sw ? 2 : 1], c = e[sw ? 1 : 2];
                                if (o1) std::swap(a[0], a[1]);
                                if (o2) std::swap(b[0], b[1]);
                                if (o3) std::swap(c[0], c[1]);
                                hex = linked(a[1], b[0]) && linked(b[1], c[0]) && linked(c[1], a[0]);
                            }
                std::vector<int> rest;
                for (int v = 0; v < 10; ++v)
                    if (!ends.count(v)) rest.push_back(v);
                bool pm = (linked(rest[0], rest[1]) && linked(rest[2], rest[3])) ||
                          (linked(rest[0], rest[2]) && linked(rest[1], rest[3])) ||
                          (linked(rest[0], rest[3]) && linked(rest[1], rest[2]));
                if (on_hexagon ? !hex : (hex || !pm)) continue;
                Multipole s = sever_links(p, {i, j, k});
                std::vector<std::pair<std::string, std::string>> ren;
                const char* names[] = {"A", "B", "C"};
                for (int c = 0; c < 3; ++c) ren.push_back({s.connectors[c].name, names[c]});
                return arrange(s, ren);
            }
    throw VerificationError("no suitable edge triple");
}
}  // namespace

Multipole triple_pentagon() { return petersen_three_severed(true); }
Multipole tricell() { return petersen_three_severed(false); }

Multipole p2_pole() {
    Multipole m;
    m.vertex_count = 3;  // u w v
    m.links = {{0, 1}, {1, 2}};
    m.dangling = {{0, 0}, {0, 1}, {2, 2}, {2, 3}, {1, 4}};
    m.connectors = {{"I", false, {0, 1}}, {"O", false, {2, 3}}, {"r", false, {4}}};
    m.normalize();
    return m;
}

Multipole mev_pole() {
    Multipole m;
    m.vertex_count = 1;
    m.isolated = {{0, 1}};
    m.dangling = {{0, 2}, {0, 3}, {0, 4}};
    m.connectors = {{"B", false, {0, 1}}, {"C", false, {2, 3, 4}}};
    m.normalize();
    return m;
}

Multipole v4_pole() {
    Multipole m;
    m.vertex_count = 4;
    m.links = {{0, 1}, {0, 2}, {0, 3}};
    for (int i = 1; i <= 3; ++i) {
        m.dangling.push_back({i, 2 * i - 2});
        m.dangling.push_back({i, 2 * i - 1});
        m.connectors.push_back({"S" + std::to_string(i), false, {2 * i - 2, 2 * i - 1}});
    }
    m.normalize();
    return m;
}

Multipole m7_pole() {
    Multipole e;
    e.isolated = {{0, 1}};
    e.connectors = {{"E", false, {0, 1}}};
    return disjoint_union(e, p2_pole());
}

Multipole m8() { return proper33_from(petersen(), 0, 2); }

Multipole hexagon() {
    Multipole m;
    m.vertex_count = 6;
    for (int i = 0; i < 6; ++i) {
        m.links.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6)});
        m.dangling.push_back({i, i});
    }
    m.connectors = {{"S1", false, {0, 3}}, {"S2", false, {1, 4}}, {"S3", false, {2, 5}}};
    return semiedges_in_connector_order(m);
}

Multipole m11(int vertex, std::array<int, 2> e12, std::array<int, 2> e34) {
    Multipole j3 = flower_snark(3);
    if (vertex < 0 || vertex >= j3.vertex_count) throw InputError("unknown vertex of J_3");
    for (auto e : {e12, e34})
        if (e[0] == vertex || e[1] == vertex) throw InputError("severed edge meets the removed vertex");
    Multipole m = sever_edges(j3, {e12});
    std::string a = last_connector(m);
    m = sever_edges(m, {e34});
    std::string b = last_connector(m);
    m = remove_vertices(m, {vertex}, false);
    return arrange(m, {{a, "E12"}, {b, "E34"}, {"v" + std::to_string(vertex), "X"}});
}

namespace {
// M11 closures: e1-e2, e3-e4 and a vertex on e5,e6,e7; or e5-e6, e4-e7 and a
// vertex on e1,e2,e3.
Multipole m11_closure(const Multipole& m, bool second) {
    // survivors are renumbered 0, 1, 2 after the junctions
    Multipole j = second ? junction_pairs(m, {{4, 5}, {3, 6}}) : junction_pairs(m, {{0, 1}, {2, 3}});
    j = add_vertex_on(j, {0, 1, 2});
    j.connectors.clear();
    return j;
}

Blueprint class32a_with(const std::vector<Multipole>& negs, const Multipole& m) {
    Blueprint bp;
    int n1 = add_negator(bp, "N1", negs[0]);
    int n2 = add_negator(bp, "N2", negs[1]);
    int n3 = add_negator(bp, "N3", negs[2]);
    int mm = bp.add("M11", m, j3_closure_set(), "J3 closures uncolourable");
    bp.join(n2, "O", n1, "I");
    bp.join(n1, "O", n3, "I");
    bp.join(bp.port(n3, "O", 0), Port{mm, 0});
    bp.join(bp.port(n3, "O", 1), Port{mm, 1});
    bp.join(bp.port(n3, "r", 0), Port{mm, 2});
    bp.join(bp.port(n1, "r", 0), Port{mm, 3});
    bp.join(bp.port(n2, "I", 0), Port{mm, 4});
    bp.join(bp.port(n2, "I", 1), Port{mm, 5});
    bp.join(bp.port(n2, "r", 0), Port{mm, 6});
    return bp;
}
}  // namespace

Multipole m11() {
    static std::once_flag once;
    static Multipole chosen;
    std::call_once(once, [] {
        Multipole j3 = flower_snark(3);
        std::vector<Multipole> d(3, dyad());
        int m = static_cast<int>(j3.links.size());
        for (int x = 0; x < j3.vertex_count; ++x)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    auto e = j3.links[i], f = j3.links[j];
                    std::set<int> ends{e[0], e[1], f[0], f[1]};
                    if (i == j || ends.size() != 4 || ends.count(x)) continue;
                    Multipole base = m11(x, e, f);
                    for (int rot = 0; rot < 3; ++rot) {
                        Multipole cand = base;
                        auto& xs = cand.connectors[2].sids;
                        std::rotate(xs.begin(), xs.begin() + rot, xs.end());
                        cand = semiedges_in_connector_order(cand);
                        if (!isomorphic(m11_closure(cand, false), j3)) continue;
                        if (!isomorphic(m11_closure(cand, true), j3)) continue;
                        if (!has_cc5(class32a_with(d, cand).realize())) continue;
                        chosen = cand;
                        return;
                    }
                }
        throw VerificationError("no M11 instance found in J_3");
    });
    return chosen;
}

// ---- blueprint -------------------------------------------------------------

int Blueprint::add(std::string name, Multipole pole) {
    pole.validate();
    parts_.push_back({std::move(name), std::move(pole), std::nullopt, ""});
    sid_base_.push_back(total_sids_);
    total_sids_ += parts_.back().pole.semiedge_count();
    return static_cast<int>(parts_.size()) - 1;
}

int Blueprint::add(std::string name, Multipole pole, ColouringSet abstract_set,
                   std::string abstract_name) {
    if (abstract_set.length() != pole.semiedge_count())
        throw InputError("abstract set length does not match part " + name);
    int i = add(std::move(name), std::move(pole));
    parts_[i].abstract_set = std::move(abstract_set);
    parts_[i].abstract_name = std::move(abstract_name);
    return i;
}

int Blueprint::add_vertex(std::string name) { return add(std::move(name), vertex_pole()); }

Port Blueprint::port(int part, const std::string& connector, int index) const {
    const auto& c = parts_.at(part).pole.connector(connector);
    if (index < 0 || index >= c.arity()) throw InputError("no semiedge " + std::to_string(index) + " in " + connector);
    return {part, c.sids[index]};
}

std::vector<Port> Blueprint::ports(int part, const std::string& connector) const {
    std::vector<Port> out;
    for (int s : parts_.at(part).pole.connector(connector).sids) out.push_back({part, s});
    return out;
}

int Blueprint::global(Port p) const {
    if (p.part < 0 || p.part >= static_cast<int>(parts_.size())) throw InputError("unknown part");
    if (p.sid < 0 || p.sid >= parts_[p.part].pole.semiedge_count()) throw InputError("unknown semiedge");
    return sid_base_[p.part] + p.sid;
}

void Blueprint::join(Port a, Port b) {
    global(a);
    global(b);
    joins_.push_back({a, b});
}

void Blueprint::join(int pa, const std::string& a, int pb, const std::string& b, std::vector<int> perm) {
    auto x = ports(pa, a), y = ports(pb, b);
    if (x.size() != y.size()) throw InputError("arity mismatch joining " + a + " and " + b);
    if (perm.empty()) {
        perm.resize(x.size());
        std::iota(perm.begin(), perm.end(), 0);
    }
    if (perm.size() != x.size()) throw InputError("junction order has the wrong length");
    for (std::size_t i = 0; i < x.size(); ++i) join(x[i], y.at(perm[i]));
}

void Blueprint::expose(std::string name, bool ordered, std::vector<Port> ports) {
    Connector c{std::move(name), ordered, {}};
    for (auto p : ports) c.sids.push_back(global(p));
    outer_.push_back(std::move(c));
}

Multipole Blueprint::realize(std::vector<int>* vertex_offset) const {
    Multipole m;
    if (vertex_offset) vertex_offset->clear();
    for (const auto& p : parts_) {
        if (vertex_offset) vertex_offset->push_back(m.vertex_count);
        Multipole q = p.pole;
        q.connectors.clear();
        m = disjoint_union(m, q);
    }
    std::vector<int> use(total_sids_, 0);
    std::vector<std::array<int, 2>> pairs;
    Connector tmp{"\x01join", false, {}};
    for (auto [a, b] : joins_) {
        int x = global(a), y = global(b);
        if (x == y) throw InputError("semiedge joined to itself");
        ++use[x];
        ++use[y];
        pairs.push_back({x, y});
        tmp.sids.push_back(x);
        tmp.sids.push_back(y);
    }
    for (const auto& c : outer_)
        for (int s : c.sids) ++use[s];
    for (std::size_t pi = 0; pi < parts_.size(); ++pi)
        for (int s = 0; s < parts_[pi].pole.semiedge_count(); ++s) {
            int u = use[sid_base_[pi] + s];
            if (u != 1)
                throw InputError("semiedge " + std::to_string(s) + " of " + parts_[pi].name +
                                 (u ? " used twice" : " left unattached"));
        }
    std::vector<Connector> cs;
    if (!tmp.sids.empty()) cs.push_back(tmp);
    cs.insert(cs.end(), outer_.begin(), outer_.end());
    m = with_connectors(m, cs);
    m = junction_pairs(m, pairs);
    m = semiedges_in_connector_order(m);
    m.validate();
    return m;
}

bool Blueprint::abstract_satisfiable() const {
    std::vector<int> parent(total_sids_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : joins_) parent[find(global(a))] = find(global(b));
    std::map<int, int> var_of;
    for (int s = 0; s < total_sids_; ++s)
        if (!var_of.count(find(s))) {
            int id = static_cast<int>(var_of.size());
            var_of[find(s)] = id;
        }

    struct Constraint {
        std::vector<int> vars;
        std::vector<ColourTuple> tuples;
    };
    std::vector<Constraint> cons;
    for (std::size_t pi = 0; pi < parts_.size(); ++pi) {
        const auto& p = parts_[pi];
        ColouringSet set = p.abstract_set ? *p.abstract_set : colouring_set(p.pole);
        Constraint c;
        for (int s = 0; s < p.pole.semiedge_count(); ++s) c.vars.push_back(var_of[find(sid_base_[pi] + s)]);
        for (auto& t : set.tuples()) {
            bool ok = true;
            for (std::size_t i = 0; i < t.size() && ok; ++i)
                for (std::size_t j = i + 1; j < t.size() && ok; ++j)
                    if (c.vars[i] == c.vars[j] && t[i] != t[j]) ok = false;
            if (ok) c.tuples.push_back(std::move(t));
        }
        if (c.tuples.empty()) return false;
        cons.push_back(std::move(c));
    }

    std::vector<Klein> val(var_of.size(), 0);
    std::vector<char> done(cons.size(), 0);
    auto fits = [&](const Constraint& c, const ColourTuple& t) {
        for (std::size_t i = 0; i < t.size(); ++i)
            if (val[c.vars[i]] && val[c.vars[i]] != t[i]) return false;
        return true;
    };
    std::function<bool(int)> solve = [&](int left) -> bool {
        if (left == 0) return true;
        int best = -1;
        std::size_t best_count = 0;
        for (std::size_t i = 0; i < cons.size(); ++i) {
            if (done[i]) continue;
            std::size_t cnt = 0;
            for (const auto& t : cons[i].tuples) cnt += fits(cons[i], t);
            if (cnt == 0) return false;
            if (best < 0 || cnt < best_count) {
                best = static_cast<int>(i);
                best_count = cnt;
            }
        }
        const auto& c = cons[best];
        done[best] = 1;
        for (const auto& t : c.tuples) {
            if (!fits(c, t)) continue;
            std::vector<int> set_here;
            for (std::size_t i = 0; i < t.size(); ++i)
                if (!val[c.vars[i]]) {
                    val[c.vars[i]] = t[i];
                    set_here.push_back(c.vars[i]);
                }
            if (solve(left - 1)) return true;
            for (int v : set_here) val[v] = 0;
        }
        done[best] = 0;
        return false;
    };
    return solve(static_cast<int>(cons.size()));
}

// ---- abstract sets ---------------------------------------------------------

namespace {
Klein total(const ColourTuple& t) {
    Klein s = 0;
    for (Klein x : t) s ^= x;
    return s;
}
}  // namespace

ColouringSet even222_set() {
    return colouring_set_from(6, [](const ColourTuple& t) {
        int nz = ((t[0] ^ t[1]) != 0) + ((t[2] ^ t[3]) != 0) + ((t[4] ^ t[5]) != 0);
        return total(t) == 0 && nz % 2 == 0;
    });
}

ColouringSet proper33_set() {
    return colouring_set_from(6, [](const ColourTuple& t) {
        Klein i = t[0] ^ t[1] ^ t[2];
        return i != 0 && total(t) == 0;
    });
}

ColouringSet no_nonzero_a_zero_c_set() {
    return colouring_set_from(6, [](const ColourTuple& t) {
        bool a = (t[0] ^ t[1]) != 0, c = (t[4] ^ t[5]) != 0;
        return total(t) == 0 && !(a && !c);
    });
}

ColouringSet no_two_zero_set() {
    return colouring_set_from(6, [](const ColourTuple& t) {
        bool a = (t[0] ^ t[1]) != 0, b = (t[2] ^ t[3]) != 0;
        return total(t) == 0 && (a || b);
    });
}

ColouringSet j3_closure_set() {
    return colouring_set_from(7, [](const ColourTuple& t) {
        bool first = t[0] == t[1] && t[2] == t[3];
        bool second = t[4] == t[5] && t[3] == t[6];
        return total(t) == 0 && !first && !second;
    });
}

// ---- families ----------------------------------------------------------------

namespace {

using Parts = std::vector<Multipole>;

void need(const Parts& p, std::size_t n, const std::string& family) {
    if (p.size() != n)
        throw InputError(family + " takes " + std::to_string(n) + " components, got " +
                         std::to_string(p.size()));
}

Blueprint bp_nn(const Parts& p, int al) {
    need(p, 2, "NN");
    Blueprint bp;
    int a = add_negator(bp, "N1", p[0]), b = add_negator(bp, "N2", p[1]);
    int v = bp.add_vertex("v");
    bp.join(a, "O", b, "I", swap_if(al & 1));
    bp.join(bp.port(a, "r", 0), bp.port(v, "x", 0));
    bp.join(bp.port(b, "r", 0), bp.port(v, "x", 1));
    bp.expose("I", false, bp.ports(a, "I"));
    bp.expose("O", false, bp.ports(b, "O"));
    bp.expose("r", false, {bp.port(v, "x", 2)});
    return bp;
}

Blueprint bp_tt(const Parts& p, int al) {
    need(p, 2, "TT");
    Blueprint bp;
    int a = add_triad(bp, "T1", p[0]), b = add_triad(bp, "T2", p[1]);
    int v = bp.add_vertex("v");
    const auto& pm = perms3()[al % 6];
    auto c2 = bp.ports(b, "C");
    bp.join(bp.port(a, "C", 0), bp.port(v, "x", 0));
    bp.join(bp.port(v, "x", 1), c2[pm[0]]);
    bp.join(bp.port(a, "C", 1), c2[pm[1]]);
    bp.join(bp.port(a, "C", 2), c2[pm[2]]);
    bp.expose("B1", false, bp.ports(a, "B"));
    bp.expose("B2", false, bp.ports(b, "B"));
    bp.expose("r", false, {bp.port(v, "x", 2)});
    return bp;
}

Blueprint bp_nt(const Parts& p, int al) {
    need(p, 2, "NT");
    Blueprint bp;
    int n = add_negator(bp, "N", p[0]), t = add_triad(bp, "T", p[1]);
    int v = bp.add_vertex("v");
    bp.join(n, "O", t, "B", swap_if(al & 1));
    bp.join(bp.port(t, "C", 0), bp.port(v, "x", 0));
    bp.join(bp.port(n, "r", 0), bp.port(v, "x", 2));
    bp.expose("I", false, bp.ports(n, "I"));
    bp.expose("C", false, {bp.port(t, "C", 1), bp.port(t, "C", 2), bp.port(v, "x", 1)});
    return bp;
}

Blueprint bp_ttt(const Parts& p, int al) {
    need(p, 3, "TTT");
    Blueprint bp;
    int t[3];
    for (int i = 0; i < 3; ++i) t[i] = add_triad(bp, "T" + std::to_string(i + 1), p[i]);
    int w = bp.add("W", w_pole());
    for (int i = 0; i < 3; ++i) {
        int a = al;
        for (int j = 0; j < i; ++j) a /= 6;
        bp.join(t[i], "C", w, "D" + std::to_string(i + 1), perms3()[a % 6]);
    }
    for (int i = 0; i < 3; ++i) bp.expose("B" + std::to_string(i + 1), false, bp.ports(t[i], "B"));
    return bp;
}

Blueprint bp_3nt(const Parts& p, int al) {
    need(p, 4, "THREE_NT");
    Blueprint bp;
    int n1 = add_negator(bp, "N1", p[0]), n2 = add_negator(bp, "N2", p[1]),
        n3 = add_negator(bp, "N3", p[2]);
    int t = add_triad(bp, "T", p[3]);
    int z = bp.add_vertex("z");
    bp.join(n1, "I", t, "B", swap_if(al & 1));
    // edge e between I3 and C; I3 = {e, r1}; C = {e, I2}
    bp.join(bp.port(n3, "I", 0), bp.port(t, "C", 0));
    bp.join(bp.port(n3, "I", 1), bp.port(n1, "r", 0));
    bp.join(bp.port(t, "C", 1), bp.port(n2, "I", 0));
    bp.join(bp.port(t, "C", 2), bp.port(n2, "I", 1));
    bp.join(bp.port(n2, "r", 0), bp.port(z, "x", 0));
    bp.join(bp.port(n3, "r", 0), bp.port(z, "x", 1));
    bp.expose("O1", false, bp.ports(n1, "O"));
    bp.expose("O2", false, bp.ports(n2, "O"));
    bp.expose("O3", false, bp.ports(n3, "O"));
    bp.expose("r", false, {bp.port(z, "x", 2)});
    return bp;
}

Blueprint bp_q(const Parts& p) {
    need(p, 2, "SUPERPENTAGON_Q");
    Blueprint bp;
    int v0 = bp.add_vertex("v0");
    int t1 = add_triad(bp, "T1", p[0]);
    int t4 = add_triad(bp, "T4", p[0]);
    int u2 = bp.add("U2", u_pole());
    int u3 = bp.add("U3", u_pole());
    int r = bp.add("R", as_shape(p[1], {"I", "O"}, {3, 3}), proper33_set(), "proper (3,3) set");
    bp.join(bp.port(t1, "B", 1), bp.port(v0, "x", 1));
    bp.join(bp.port(t4, "B", 1), bp.port(v0, "x", 2));
    bp.join(u2, "S1", t1, "C");
    bp.join(r, "I", u2, "S2");
    bp.join(r, "O", u3, "S1");
    bp.join(u3, "S2", t4, "C");
    bp.expose("P", true,
              {bp.port(v0, "x", 0), bp.port(t1, "B", 0), bp.port(u2, "r", 0), bp.port(u3, "r", 0),
               bp.port(t4, "B", 0)});
    return bp;
}

Blueprint bp_nnn(const Parts& p, int al) {
    need(p, 3, "NNN");
    Blueprint bp;
    int n[3];
    for (int i = 0; i < 3; ++i) n[i] = add_negator(bp, "N" + std::to_string(i + 1), p[i]);
    int v = bp.add_vertex("v");
    for (int i = 0; i < 3; ++i) {
        bp.join(n[i], "O", n[(i + 1) % 3], "I", swap_if((al >> i) & 1));
        bp.join(bp.port(n[i], "r", 0), bp.port(v, "x", i));
    }
    return bp;
}

Blueprint bp_32a(const Parts& p) {
    if (p.size() == 3) return class32a_with(p, m11());
    need(p, 4, "CLASS_32A");
    return class32a_with({p[0], p[1], p[2]}, as_shape(p[3], {"E12", "E34", "X"}, {2, 2, 3}));
}

// M1 of Class 34-A: free ports r1, r2, C1, C2, e.
std::pair<Blueprint, std::vector<Port>> m1_pole(const Parts& p) {
    need(p, 4, "CLASS_34A");
    Blueprint bp;
    int n1 = add_negator(bp, "N1", p[0]), n2 = add_negator(bp, "N2", p[1]);
    int t1 = add_triad(bp, "T1", p[2]), t2 = add_triad(bp, "T2", p[3]);
    int x = bp.add("X", vertex_with_bridge());
    bp.join(n1, "I", t1, "B");
    bp.join(n2, "I", t2, "B");
    bp.join(n1, "O", x, "P");
    bp.join(n2, "O", x, "Q");
    std::vector<Port> free{bp.port(n1, "r", 0), bp.port(n2, "r", 0)};
    free = cat(free, bp.ports(t1, "C"));
    free = cat(free, bp.ports(t2, "C"));
    free.push_back(bp.port(x, "E", 0));
    return {bp, free};
}

// M2 of Class 34-B: free ports I1, r2, C1, C2.
std::pair<Blueprint, std::vector<Port>> m2_pole(const Parts& p) {
    need(p, 4, "CLASS_34B");
    Blueprint bp;
    int n1 = add_negator(bp, "N1", p[0]), n2 = add_negator(bp, "N2", p[1]);
    int t1 = add_triad(bp, "T1", p[2]), t2 = add_triad(bp, "T2", p[3]);
    int y = bp.add("Y", vertex_with_bridge());
    bp.join(n1, "O", y, "P");
    bp.join(n2, "I", y, "Q");
    bp.join(n2, "O", t2, "B");
    bp.join(bp.port(y, "E", 0), bp.port(t1, "B", 0));
    bp.join(bp.port(n1, "r", 0), bp.port(t1, "B", 1));
    std::vector<Port> free = bp.ports(n1, "I");
    free.push_back(bp.port(n2, "r", 0));
    free = cat(free, bp.ports(t1, "C"));
    free = cat(free, bp.ports(t2, "C"));
    return {bp, free};
}

// M3 of Class 34-C: free ports R.B, r, C1, C2.
std::pair<Blueprint, std::vector<Port>> m3_pole(const Parts& p) {
    need(p, 4, "CLASS_34C");
    Blueprint bp;
    int r = bp.add("R", as_shape(p[0], {"A", "B", "C"}, {2, 2, 2}), no_nonzero_a_zero_c_set(),
                   "no colouring with A nonzero and C zero");
    int n = add_negator(bp, "N", p[1]);
    int t1 = add_triad(bp, "T1", p[2]), t2 = add_triad(bp, "T2", p[3]);
    bp.join(r, "A", t1, "B");
    bp.join(r, "C", n, "I");
    bp.join(n, "O", t2, "B");
    std::vector<Port> free = bp.ports(r, "B");
    free.push_back(bp.port(n, "r", 0));
    free = cat(free, bp.ports(t1, "C"));
    free = cat(free, bp.ports(t2, "C"));
    return {bp, free};
}

// Four negators in a cycle, w_i subdividing an O_i -> I_{i+1} edge.
// Free ports: w1..w4 tails, r1..r4.
std::pair<Blueprint, std::vector<Port>> four_ring(const Parts& p) {
    need(p, 4, "CLASS_34D");
    Blueprint bp;
    int n[4], w[4];
    for (int i = 0; i < 4; ++i) n[i] = add_negator(bp, "N" + std::to_string(i + 1), p[i]);
    for (int i = 0; i < 4; ++i) w[i] = bp.add_vertex("w" + std::to_string(i + 1));
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        bp.join(bp.port(n[i], "O", 0), bp.port(w[i], "x", 0));
        bp.join(bp.port(w[i], "x", 1), bp.port(n[j], "I", 0));
        bp.join(bp.port(n[i], "O", 1), bp.port(n[j], "I", 1));
    }
    std::vector<Port> free;
    for (int i = 0; i < 4; ++i) free.push_back(bp.port(w[i], "x", 2));
    for (int i = 0; i < 4; ++i) free.push_back(bp.port(n[i], "r", 0));
    return {bp, free};
}

Blueprint bp_34d(const Parts& p) {
    auto [bp, f] = four_ring(p);
    // f: w1 w2 w3 w4 r1 r2 r3 r4
    int u = bp.add_vertex("u"), z = bp.add_vertex("z");
    bp.join(bp.port(u, "x", 0), f[0]);
    bp.join(bp.port(u, "x", 1), f[2]);
    bp.join(bp.port(u, "x", 2), bp.port(z, "x", 0));
    bp.join(bp.port(z, "x", 1), f[1]);
    bp.join(bp.port(z, "x", 2), f[3]);
    bp.join(f[4], f[6]);
    bp.join(f[5], f[7]);
    return bp;
}

// Other attachments of u, z and the remaining pairs to the four-negator ring;
// the first that is a cyclically 5-connected snark not isomorphic to 34-D and
// whose abstract replay is unsatisfiable.
Blueprint bp_34e(const Parts& p, int skip) {
    auto [base, f] = four_ring(p);
    Multipole d = bp_34d(p).realize();
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = 0; c < 8; ++c)
                for (int e = c + 1; e < 8; ++e) {
                    if (c == a || c == b || e == a || e == b) continue;
                    if (std::make_pair(c, e) < std::make_pair(a, b)) continue;  // u/z symmetry
                    std::vector<int> rest;
                    for (int i = 0; i < 8; ++i)
                        if (i != a && i != b && i != c && i != e) rest.push_back(i);
                    std::optional<Blueprint> found;
                    for_each_matching(4, [&](const auto& m) {
                        Blueprint bp = base;
                        int u = bp.add_vertex("u"), z = bp.add_vertex("z");
                        bp.join(bp.port(u, "x", 0), f[a]);
                        bp.join(bp.port(u, "x", 1), f[b]);
                        bp.join(bp.port(u, "x", 2), bp.port(z, "x", 0));
                        bp.join(bp.port(z, "x", 1), f[c]);
                        bp.join(bp.port(z, "x", 2), f[e]);
                        for (auto [i, j] : m) bp.join(f[rest[i]], f[rest[j]]);
                        Multipole g = bp.realize();
                        if (is_colourable(g) || !has_cc5(g) || isomorphic(g, d)) return false;
                        if (bp.abstract_satisfiable()) return false;
                        if (skip-- > 0) return false;
                        found = std::move(bp);
                        return true;
                    });
                    if (found) return *found;
                }
    throw VerificationError("no Class 34-E arrangement found");
}

// B2 with its three parallel edges subdivided, each new vertex carrying a
// dangling edge.
Multipole subdivided_theta() {
    Multipole m;
    m.vertex_count = 5;  // p q s1 s2 s3
    for (int i = 0; i < 3; ++i) {
        m.links.push_back({0, 2 + i});
        m.links.push_back({1, 2 + i});
        m.dangling.push_back({2 + i, i});
    }
    m.connectors = {{"S", false, {0, 1, 2}}};
    m.normalize();
    return m;
}

// H_M: each vertex of the 3-pole M replaced by an even (2,2,2)-pole, each
// edge by a pair of isolated edges.
Blueprint bp_hm(const Multipole& base, const Parts& p) {
    if (base.semiedge_count() != 3) throw InputError("H_M needs a 3-pole");
    need(p, static_cast<std::size_t>(base.vertex_count), "H_M");
    Blueprint bp;
    std::vector<int> h;
    for (int v = 0; v < base.vertex_count; ++v) h.push_back(add_even(bp, "H" + std::to_string(v + 1), p[v]));
    std::vector<int> slot(base.vertex_count, 0);
    auto next = [&](int v) {
        if (slot[v] >= 3) throw InputError("H_M base is not cubic");
        return "S" + std::to_string(++slot[v]);
    };
    for (auto [a, b] : base.links) {
        int d = bp.add("D", double_edge());
        bp.join(h[a], next(a), d, "X");
        bp.join(d, "Y", h[b], next(b));
    }
    std::vector<std::array<int, 2>> dang = base.dangling;
    std::sort(dang.begin(), dang.end(), [](auto x, auto y) { return x[1] < y[1]; });
    for (auto [v, s] : dang) {
        int d = bp.add("D", double_edge());
        bp.join(h[v], next(v), d, "X");
        bp.expose("S" + std::to_string(s + 1), false, bp.ports(d, "Y"));
    }
    return bp;
}

Blueprint bp_34f(const Parts& p) {
    Blueprint bp = bp_hm(subdivided_theta(), p);
    // join the outer connectors of H_M with V4
    Multipole hm = bp.realize();
    Blueprint out;
    int a = out.add("H_M", hm, even222_set(), "even (2,2,2) set");
    int v = out.add("V4", v4_pole());
    for (int i = 1; i <= 3; ++i) out.join(a, "S" + std::to_string(i), v, "S" + std::to_string(i));
    return out;
}

Blueprint bp_36a(const Parts& p, Multipole* m24 = nullptr) {
    need(p, 3, "CLASS_36A");
    Blueprint bp;
    int n[3], v[3];
    for (int i = 0; i < 3; ++i) n[i] = add_negator(bp, "N" + std::to_string(i + 1), p[i]);
    for (int i = 0; i < 3; ++i) v[i] = bp.add_vertex("v" + std::to_string(i + 1));
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        bp.join(bp.port(n[i], "O", 0), bp.port(v[i], "x", 0));
        bp.join(bp.port(v[i], "x", 1), bp.port(n[j], "I", 0));
        bp.join(bp.port(n[i], "O", 1), bp.port(n[j], "I", 1));
    }
    Blueprint pole = bp;
    pole.expose("I", true, {pole.port(n[0], "r", 0), pole.port(n[1], "r", 0), pole.port(n[2], "r", 0)});
    pole.expose("O", true, {pole.port(v[2], "x", 2), pole.port(v[0], "x", 2), pole.port(v[1], "x", 2)});
    if (m24) *m24 = pole.realize();
    int y = bp.add("Y3", y_chain(3));
    for (int i = 0; i < 3; ++i) bp.join(bp.port(n[i], "r", 0), bp.port(y, "I", i));
    bp.join(bp.port(v[2], "x", 2), bp.port(y, "O", 0));
    bp.join(bp.port(v[0], "x", 2), bp.port(y, "O", 1));
    bp.join(bp.port(v[1], "x", 2), bp.port(y, "O", 2));
    return bp;
}

// 4k+1 negators in a path; v on i1, o1 and r_{2k+1}; i2 - r_{2k+2};
// o2 - r_{2k}; r_j - r_{4k+2-j} for the rest.
Blueprint bp_36b_gen(const Parts& p, int k) {
    if (k < 1) throw InputError("CLASS_36B_GEN needs k >= 1");
    int cnt = 4 * k + 1;
    need(p, static_cast<std::size_t>(cnt), "CLASS_36B_GEN");
    Blueprint bp;
    std::vector<int> n(cnt + 1);
    for (int i = 1; i <= cnt; ++i) n[i] = add_negator(bp, "N" + std::to_string(i), p[i - 1]);
    for (int i = 1; i < cnt; ++i) bp.join(n[i], "O", n[i + 1], "I");
    auto r = [&](int j) { return bp.port(n[j], "r", 0); };
    int v = bp.add_vertex("v");
    bp.join(bp.port(n[1], "I", 0), bp.port(v, "x", 0));
    bp.join(bp.port(n[cnt], "O", 0), bp.port(v, "x", 1));
    bp.join(r(2 * k + 1), bp.port(v, "x", 2));
    bp.join(bp.port(n[1], "I", 1), r(2 * k + 2));
    bp.join(bp.port(n[cnt], "O", 1), r(2 * k));
    for (int j = 1; j < 2 * k; ++j) bp.join(r(j), r(4 * k + 2 - j));
    return bp;
}

Blueprint bp_38a(const Parts& p) {
    need(p, 5, "CLASS_38A");
    Blueprint bp;
    int n[5];
    for (int i = 1; i <= 4; ++i) n[i] = add_negator(bp, "N" + std::to_string(i), p[i - 1]);
    int t = add_triad(bp, "T", p[4]);
    int s = bp.add_vertex("s");
    bp.join(bp.port(n[1], "r", 0), bp.port(t, "B", 0));
    bp.join(bp.port(n[2], "r", 0), bp.port(t, "B", 1));
    bp.join(n[1], "O", n[2], "I");
    bp.join(n[2], "O", n[3], "I");
    bp.join(bp.port(n[3], "r", 0), bp.port(t, "C", 0));
    bp.join(bp.port(n[4], "O", 0), bp.port(t, "C", 1));
    bp.join(bp.port(n[4], "O", 1), bp.port(t, "C", 2));
    bp.join(bp.port(n[4], "r", 0), bp.port(n[1], "I", 0));
    bp.join(bp.port(s, "x", 2), bp.port(n[1], "I", 1));
    bp.join(bp.port(n[3], "O", 0), bp.port(n[4], "I", 0));
    bp.join(bp.port(n[3], "O", 1), bp.port(s, "x", 0));
    bp.join(bp.port(s, "x", 1), bp.port(n[4], "I", 1));
    return bp;
}

Blueprint bp_42a(const Parts& p, int skip) {
    need(p, 5, "CLASS_42A");
    Blueprint bp;
    int r = bp.add("R", as_shape(p[0], {"A", "B", "C"}, {2, 2, 2}), no_two_zero_set(),
                   "no colouring with A and B zero");
    int n1 = add_negator(bp, "N1", p[1]), n2 = add_negator(bp, "N2", p[2]);
    int t1 = add_triad(bp, "T1", p[3]), t2 = add_triad(bp, "T2", p[4]);
    bp.join(n1, "I", t1, "B");
    bp.join(n2, "I", t2, "B");
    bp.join(n1, "O", r, "A");
    bp.join(n2, "O", r, "B");
    std::vector<Port> free = bp.ports(r, "C");
    free.push_back(bp.port(n1, "r", 0));
    free.push_back(bp.port(n2, "r", 0));
    free = cat(free, bp.ports(t1, "C"));
    free = cat(free, bp.ports(t2, "C"));
    return close_matching(bp, free, skip);
}

// Three (2,3)-poles and x1, x2, x3, x_j adjacent to the j-th semiedge of
// every C_i. Outer B1, B2, B3.
Blueprint bp_strict_ttt(const Parts& p, int al) {
    need(p, 3, "STRICT_TTT");
    Blueprint bp;
    int t[3], x[3];
    for (int i = 0; i < 3; ++i) t[i] = add_triad(bp, "T" + std::to_string(i + 1), p[i]);
    for (int j = 0; j < 3; ++j) x[j] = bp.add_vertex("x" + std::to_string(j + 1));
    for (int i = 0; i < 3; ++i) {
        int a = al;
        for (int q = 0; q < i; ++q) a /= 6;
        const auto& pm = perms3()[a % 6];
        for (int j = 0; j < 3; ++j) bp.join(bp.port(t[i], "C", pm[j]), bp.port(x[j], "x", i));
    }
    for (int i = 0; i < 3; ++i) bp.expose("B" + std::to_string(i + 1), false, bp.ports(t[i], "B"));
    return bp;
}

Blueprint bp_strict_ttt_petersen(const Parts& p, int al) {
    Blueprint bp = bp_strict_ttt(p, al);
    Multipole pole = bp.realize();
    Blueprint out;
    int a = out.add("STRICT_TTT", pole, v4_closed_set(), "Col(V4)");
    int h = out.add("hexagon", even222_from(petersen(), 0), even222_set(), "even (2,2,2) set");
    for (int i = 1; i <= 3; ++i) out.join(a, "B" + std::to_string(i), h, "S" + std::to_string(i));
    return out;
}

Parts default_parts(const std::string& f, int n) {
    auto rep = [](int k, const Multipole& m) { return Parts(k, m); };
    if (f == "NN") return rep(2, dyad());
    if (f == "TT") return rep(2, triad());
    if (f == "NT") return {dyad(), triad()};
    if (f == "TTT" || f == "STRICT_TTT" || f == "STRICT_TTT_PETERSEN") return rep(3, triad());
    if (f == "THREE_NT") return {dyad(), dyad(), dyad(), triad()};
    if (f == "SUPERPENTAGON_Q") return {triad(), m8()};
    if (f == "NNN" || f == "CLASS_32A" || f == "CLASS_36A") return rep(3, dyad());
    if (f == "CLASS_34A" || f == "CLASS_34B") return {dyad(), dyad(), triad(), triad()};
    if (f == "CLASS_34C") return {double_pentagon(), dyad(), triad(), triad()};
    if (f == "CLASS_34D" || f == "CLASS_34E") return rep(4, dyad());
    if (f == "CLASS_34F" || f == "H_M") return rep(5, hexagon());
    if (f == "CLASS_36B") return rep(5, dyad());
    if (f == "CLASS_36B_GEN") return rep(4 * std::max(n, 1) + 1, dyad());
    if (f == "CLASS_38A") return {dyad(), dyad(), dyad(), dyad(), triad()};
    if (f == "CLASS_42A") return {triple_pentagon(), dyad(), dyad(), triad(), triad()};
    return {};
}

const std::vector<std::string>& blueprint_families() {
    static const std::vector<std::string> f = {
        "Y_K",       "FLOWER_J",  "NN",        "TT",        "NT",
        "TTT",       "THREE_NT",  "SUPERPENTAGON_Q",        "NNN",
        "CLASS_32A", "CLASS_34A", "CLASS_34B", "CLASS_34C", "CLASS_34D",
        "CLASS_34E", "CLASS_34F", "H_M",       "CLASS_36A", "CLASS_36B",
        "CLASS_36B_GEN",          "CLASS_38A", "CLASS_42A", "STRICT_TTT",
        "STRICT_TTT_PETERSEN"};
    return f;
}

Blueprint make_blueprint(const FamilySpec& s) {
    const std::string& f = s.family;
    Parts p = s.parts.empty() ? default_parts(f, s.n) : s.parts;
    int al = s.alignment;
    if (f == "Y_K") return y_chain_blueprint(s.n, false);
    if (f == "FLOWER_J") {
        if (s.n < 3 || s.n % 2 == 0) throw InputError("FLOWER_J needs odd n >= 3");
        return y_chain_blueprint(s.n, true);
    }
    if (f == "NN") return bp_nn(p, al);
    if (f == "TT") return bp_tt(p, al);
    if (f == "NT") return bp_nt(p, al);
    if (f == "TTT") return bp_ttt(p, al);
    if (f == "THREE_NT") return bp_3nt(p, al);
    if (f == "SUPERPENTAGON_Q") return bp_q(p);
    if (f == "NNN") return bp_nnn(p, al);
    if (f == "CLASS_32A") return bp_32a(p);
    if (f == "CLASS_34A") {
        auto [bp, free] = m1_pole(p);
        return close_nine(bp, free, al);
    }
    if (f == "CLASS_34B") {
        auto [bp, free] = m2_pole(p);
        return close_nine(bp, free, al);
    }
    if (f == "CLASS_34C") {
        auto [bp, free] = m3_pole(p);
        return close_nine(bp, free, al);
    }
    if (f == "CLASS_34D") return bp_34d(p);
    if (f == "CLASS_34E") return bp_34e(p, al);
    if (f == "CLASS_34F") return bp_34f(p);
    if (f == "H_M") return bp_hm(subdivided_theta(), p);
    if (f == "CLASS_36A") return bp_36a(p);
    if (f == "CLASS_36B") return bp_36b_gen(p, 1);
    if (f == "CLASS_36B_GEN") return bp_36b_gen(p, s.n);
    if (f == "CLASS_38A") return bp_38a(p);
    if (f == "CLASS_42A") return bp_42a(p, al);
    if (f == "STRICT_TTT") return bp_strict_ttt(p, al);
    if (f == "STRICT_TTT_PETERSEN") return bp_strict_ttt_petersen(p, al);
    throw InputError("family " + f + " has no blueprint");
}

}  // namespace

std::vector<std::string> family_names() {
    std::vector<std::string> out = {"PETERSEN", "DUMBBELL", "K4", "Y_POLE", "DOT", "BLANUSA",
                                    "DYAD", "TRIAD", "QUASITRIAD", "DP", "TP", "TRICELL",
                                    "PENTAGON", "PENTAGRAM", "M8", "M11", "M_EV", "M7", "P2",
                                    "V4", "HEXAGON", "DOUBLE_STAR", "J5_SUPERPENTAGON"};
    for (const auto& f : blueprint_families()) out.push_back(f);
    return out;
}

Multipole m24(const std::vector<Multipole>& negators) {
    Multipole out;
    bp_36a(negators.empty() ? default_parts("CLASS_36A", 0) : negators, &out);
    return out;
}

bool has_blueprint(const std::string& family) {
    const auto& f = blueprint_families();
    return std::find(f.begin(), f.end(), family) != f.end();
}

Blueprint blueprint(const FamilySpec& spec) {
    std::string key = cache_key(spec);
    {
        std::lock_guard<std::mutex> lk(cache().mu);
        auto it = cache().entries.find(key);
        if (it != cache().entries.end()) return it->second;
    }
    Blueprint bp = make_blueprint(spec);
    std::lock_guard<std::mutex> lk(cache().mu);
    cache().entries.emplace(key, bp);
    return bp;
}

Multipole build(const FamilySpec& spec) {
    const std::string& f = spec.family;
    if (has_blueprint(f)) return blueprint(spec).realize();
    if (f == "PETERSEN") return petersen();
    if (f == "DUMBBELL") return dumbbell();
    if (f == "K4") return k4();
    if (f == "Y_POLE") return y_pole();
    if (f == "DOT") {
        // Pg.Pg on the edge pair of the given Blanusa type
        return blanusa(spec.n == 2 ? 2 : 1);
    }
    if (f == "BLANUSA") return blanusa(spec.n == 0 ? 1 : spec.n);
    if (f == "DYAD") return dyad();
    if (f == "TRIAD") return triad();
    if (f == "QUASITRIAD") return quasitriad();
    if (f == "DP") return double_pentagon();
    if (f == "TP") return triple_pentagon();
    if (f == "TRICELL") return tricell();
    if (f == "PENTAGON") return pentagon();
    if (f == "PENTAGRAM") return pentagram_pole();
    if (f == "M8") return m8();
    if (f == "M11") return m11();
    if (f == "M_EV") return mev_pole();
    if (f == "M7") return m7_pole();
    if (f == "P2") return p2_pole();
    if (f == "V4") return v4_pole();
    if (f == "HEXAGON") return hexagon();
    if (f == "DOUBLE_STAR") return double_star();
    if (f == "J5_SUPERPENTAGON") return j5_superpentagon();
    throw InputError("unknown family " + f);
}

Multipole named_part(const std::string& name) {
    std::string n;
    for (char c : name) n += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (n == "dyad" || n == "d") return dyad();
    if (n == "triad" || n == "t") return triad();
    if (n == "hexagon" || n == "h") return hexagon();
    if (n == "dp") return double_pentagon();
    if (n == "tp") return triple_pentagon();
    if (n == "tc" || n == "tricell") return tricell();
    if (n == "m8") return m8();
    if (n.rfind("negj", 0) == 0) {
        int k = std::stoi(n.substr(4));
        Multipole j = flower_snark(k);
        // path 1 - 0 - 2 through the centre of the first Y
        return negator_from(j, 1, 2);
    }
    throw InputError("unknown part " + name);
}

FamilySpec parse_family(const std::string& text) {
    FamilySpec s;
    auto colon = text.find(':');
    s.family = text.substr(0, colon);
    for (auto& c : s.family) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s.family == "3NT") s.family = "THREE_NT";
    auto names = family_names();
    if (std::find(names.begin(), names.end(), s.family) == names.end())
        throw InputError("unknown family " + s.family);
    if (colon == std::string::npos) return s;
    std::string rest = text.substr(colon + 1);
    if (!rest.empty() && std::all_of(rest.begin(), rest.end(), ::isdigit)) {
        s.n = std::stoi(rest);
        return s;
    }
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) s.parts.push_back(named_part(item));
    return s;
}

ProofTrace verify_family_uncolourable(const FamilySpec& spec) {
    if (!has_blueprint(spec.family)) throw InputError("no recorded argument for " + spec.family);
    Blueprint bp = blueprint(spec);
    Multipole g = bp.realize();
    if (!g.is_graph()) throw InputError(spec.family + " does not build a 0-pole");
    ProofTrace tr;
    tr.family = spec.family;
    tr.order = g.order();
    auto oracle = std::async(std::launch::async, [&g] { return count_colourings(g); });

    tr.premises_hold = true;
    for (const auto& p : bp.parts()) {
        if (!p.abstract_set) continue;
        ColouringSet col = colouring_set(p.pole);
        bool ok = col.subset_of(*p.abstract_set);
        tr.premises_hold = tr.premises_hold && ok;
        tr.steps.push_back(p.name + ": Col (" + std::to_string(col.size()) + " tuples) within " +
                           p.abstract_name + (ok ? ": ok" : ": FAILS"));
    }
    tr.argument_unsatisfiable = !bp.abstract_satisfiable();
    tr.steps.push_back(std::string("replay over component sets: ") +
                       (tr.argument_unsatisfiable ? "no consistent boundary assignment" : "satisfiable"));
    std::uint64_t n = oracle.get();
    tr.oracle_uncolourable = n == 0;
    tr.steps.push_back("oracle: " + std::to_string(n) + " colourings");
    if (tr.oracle_uncolourable != (tr.argument_unsatisfiable && tr.premises_hold))
        throw VerificationError("oracle and argument disagree for " + spec.family);
    return tr;
}

// ---- dot product and friends ------------------------------------------------

DotProduct dot_product(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f,
                       const Multipole& h, int u, int v) {
    require_graph(g);
    require_graph(h);
    std::set<int> ends{e[0], e[1], f[0], f[1]};
    if (ends.size() != 4) throw InputError("e and f must be independent edges");
    int li = find_link(g, e[0], e[1]), lj = find_link(g, f[0], f[1]);
    if (li < 0 || lj < 0) throw InputError("e and f must be edges of g");
    if (find_link(h, u, v) < 0) throw InputError("u and v must be adjacent");
    auto adj = adjacency(h);
    auto others = [&](int x, int y) {
        std::vector<int> o;
        bool skipped = false;
        for (int w : adj[x]) {
            if (w == y && !skipped) {
                skipped = true;
                continue;
            }
            o.push_back(w);
        }
        if (o.size() != 2 || o[0] == u || o[0] == v || o[1] == u || o[1] == v)
            throw InputError("u and v need two further distinct neighbours each");
        std::sort(o.begin(), o.end());
        return o;
    };
    auto uo = others(u, v), vo = others(v, u);
    std::vector<int> hid(h.vertex_count, -1);
    int n = g.vertex_count;
    int k = 0;
    for (int x = 0; x < h.vertex_count; ++x)
        if (x != u && x != v) hid[x] = n + k++;
    Multipole out;
    out.vertex_count = n + k;
    for (int i = 0; i < static_cast<int>(g.links.size()); ++i)
        if (i != li && i != lj) out.links.push_back(g.links[i]);
    for (auto [a, b] : h.links)
        if (hid[a] >= 0 && hid[b] >= 0) out.links.push_back({hid[a], hid[b]});
    DotProduct dp;
    dp.principal_cut = {{{e[0], hid[uo[0]]}, {e[1], hid[uo[1]]}, {f[0], hid[vo[0]]}, {f[1], hid[vo[1]]}}};
    for (auto c : dp.principal_cut) out.links.push_back({std::min(c[0], c[1]), std::max(c[0], c[1])});
    out.normalize();
    out.validate();
    dp.graph = std::move(out);
    return dp;
}

Multipole blanusa(int type) {
    if (type != 1 && type != 2) throw InputError("Blanusa type is 1 or 2");
    // e = 0-1, f ranges over edges independent of e; u, v = 0, 1.
    Multipole p = petersen();
    std::uint64_t want = type == 1 ? 8 : 4;
    for (auto f : p.links) {
        if (f[0] <= 1 || f[1] <= 1) continue;
        Multipole b = dot_product(p, {0, 1}, f, p, 0, 1).graph;
        if (automorphism_count(b) == want) return b;
    }
    throw VerificationError("Blanusa snark not found");
}

std::vector<Decomposition> decompose_4cut(const Multipole& g, const std::vector<std::array<int, 2>>& cut) {
    if (cut.size() != 4) throw InputError("a 4-edge cut is required");
    auto sides = cut_along(g, cut);
    for (const auto* s : {&sides.first, &sides.second})
        if (static_cast<int>(s->links.size()) < s->vertex_count)
            throw InputError("cut is not cycle-separating");
    const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    std::vector<Decomposition> out;
    for (int side = 0; side < 2; ++side) {
        const Multipole& a = side == 0 ? sides.first : sides.second;
        const Multipole& b = side == 0 ? sides.second : sides.first;
        for (const auto& pr : pairings) {
            // a gets its two edges back; b gets adjacent u, v
            Multipole g1 = junction_pairs(a, {{pr[0], pr[1]}, {pr[2], pr[3]}});
            g1.connectors.clear();
            auto sa = semiedge_ends(a);
            std::array<int, 2> e{sa[pr[0]].vertex, sa[pr[1]].vertex};
            std::array<int, 2> f{sa[pr[2]].vertex, sa[pr[3]].vertex};
            Multipole g2 = b;
            int u = g2.vertex_count, v = u + 1;
            g2.vertex_count += 2;
            auto sb = semiedge_ends(b);
            g2.links.push_back({u, v});
            g2.links.push_back({sb[pr[0]].vertex, u});
            g2.links.push_back({sb[pr[1]].vertex, u});
            g2.links.push_back({sb[pr[2]].vertex, v});
            g2.links.push_back({sb[pr[3]].vertex, v});
            g2.dangling.clear();
            g2.connectors.clear();
            g2.normalize();
            std::set<int> ef{e[0], e[1], f[0], f[1]};
            if (ef.size() != 4 || e[0] == e[1] || f[0] == f[1]) continue;
            if (is_colourable(g1) || is_colourable(g2)) continue;
            Multipole re;
            try {
                re = dot_product(g1, e, f, g2, u, v).graph;
            } catch (const InputError&) {
                continue;
            }
            if (!isomorphic(re, g)) continue;
            Decomposition d;
            d.g1 = std::move(g1);
            d.g2 = std::move(g2);
            d.e = e;
            d.f = f;
            d.u = u;
            d.v = v;
            out.push_back(std::move(d));
        }
    }
    if (out.empty()) throw InputError("no decomposition into two snarks along this cut");
    return out;
}

std::vector<Multipole> dot_factors(const Multipole& g) {
    for (const auto& cut : cycle_separating_cuts(g, 4)) {
        std::vector<std::array<int, 2>> edges;
        for (int li : cut) edges.push_back(g.links[li]);
        std::vector<Decomposition> ds;
        try {
            ds = decompose_4cut(g, edges);
        } catch (const InputError&) {
            continue;
        }
        auto a = dot_factors(ds[0].g1), b = dot_factors(ds[0].g2);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    return {g};
}

Multipole substitute(const Multipole& g, const std::vector<std::array<int, 2>>& cut,
                     const std::vector<int>& removed_side, const Multipole& replacement) {
    require_graph(g);
    std::set<int> side(removed_side.begin(), removed_side.end());
    std::vector<int> idx;
    std::vector<char> used(g.links.size(), 0);
    for (auto e : cut) {
        int a = std::min(e[0], e[1]), b = std::max(e[0], e[1]);
        int found = -1;
        for (int i = 0; i < static_cast<int>(g.links.size()); ++i)
            if (!used[i] && g.links[i][0] == a && g.links[i][1] == b) {
                found = i;
                break;
            }
        if (found < 0) throw InputError("cut edge not present");
        if (side.count(a) == side.count(b)) throw InputError("cut edge does not cross the side");
        used[found] = 1;
        idx.push_back(found);
    }
    for (int i = 0; i < static_cast<int>(g.links.size()); ++i)
        if (!used[i] && side.count(g.links[i][0]) != side.count(g.links[i][1]))
            throw InputError("side has edges outside the cut");
    if (replacement.semiedge_count() != static_cast<int>(cut.size()))
        throw InputError("replacement arity does not match the cut");

    auto part = [&](bool inside) {
        std::vector<int> id(g.vertex_count, -1);
        Multipole m;
        for (int v = 0; v < g.vertex_count; ++v)
            if (static_cast<bool>(side.count(v)) == inside) id[v] = m.vertex_count++;
        for (int i = 0; i < static_cast<int>(g.links.size()); ++i)
            if (!used[i] && id[g.links[i][0]] >= 0) m.links.push_back({id[g.links[i][0]], id[g.links[i][1]]});
        Connector c{"S", true, {}};
        for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
            auto [a, b] = g.links[idx[j]];
            m.dangling.push_back({id[a] >= 0 ? id[a] : id[b], j});
            c.sids.push_back(j);
        }
        m.connectors = {c};
        m.normalize();
        return m;
    };
    Multipole old_side = part(true), rest = part(false);
    ColouringSet cr = colouring_set(replacement), co = colouring_set(old_side);
    if (!cr.subset_of(co)) throw InputError("replacement is not colour-contained in the removed side");
    std::vector<int> all(replacement.semiedge_count());
    std::iota(all.begin(), all.end(), 0);
    Multipole r = with_connectors(replacement, {{"S", true, all}});
    Multipole out = junction_connectors(rest, "S", r, "S");
    if (!is_colourable(g) && is_colourable(out))
        throw VerificationError("substitution changed colourability");
    return out;
}

namespace {
// J_5 minus the 5-cycle through the t3 vertices of its Y-poles; P follows the
// cycle.
Multipole j5_minus_cycle() {
    Multipole j5 = flower_snark(5);
    std::vector<int> cyc{3, 7, 11, 15, 19};
    Multipole m = remove_vertices(j5, cyc, false);
    std::vector<int> sids;
    for (int v : cyc) sids.push_back(m.connector("v" + std::to_string(v)).sids.at(0));
    return semiedges_in_connector_order(with_connectors(m, {{"P", true, sids}}));
}
}  // namespace

Multipole j5_superpentagon() {
    Multipole m = j5_minus_cycle();
    return semiedges_in_connector_order(with_connectors(m, {{"P", true, {0, 2, 4, 1, 3}}}));
}

Multipole double_star() {
    Multipole g = junction_connectors(j5_minus_cycle(), "P", j5_superpentagon(), "P");
    g.connectors.clear();
    return g;
}

std::vector<Multipole> loupekine_snarks() {
    std::vector<Multipole> out;
    for (int al = 0; al < 8; ++al) {
        FamilySpec s{"NNN", {}, 0, al};
        Multipole g = build(s);
        bool fresh = true;
        for (const auto& h : out) fresh = fresh && !isomorphic(g, h);
        if (fresh) out.push_back(g);
    }
    return out;
}

std::vector<Multipole> reducible_24() {
    std::vector<Multipole> out;
    for (const auto& l : loupekine_snarks()) {
        int m = static_cast<int>(l.links.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (is_colourable(sever_links(l, {i, j}))) continue;
                Multipole g = extend_edge(l, l.links[i], l.links[j]);
                if (!has_cc5(g)) continue;
                bool fresh = true;
                for (const auto& h : out) fresh = fresh && !isomorphic(g, h);
                if (fresh) out.push_back(g);
            }
    }
    return out;
}

}  // namespace snarkmorph
