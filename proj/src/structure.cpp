#include "snarkmorph/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "snarkmorph/constructions.hpp"

namespace snarkmorph {

namespace {

void require_graph(const Multipole& g, const char* what) {
    if (!g.is_graph()) throw InputError(std::string(what) + ": expected a 0-pole");
    if (g.free_loops) throw FreeLoopError(std::string(what) + ": free loop");
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

// Unit-capacity max flow between two vertex sets, stopping once it exceeds
// `limit`.
int bounded_flow(int n, const std::vector<std::array<int, 2>>& links, const std::vector<char>& side,
                 int limit) {
    // side: 1 source, 2 sink, 0 other. Contract each terminal set to a node.
    const int S = n, T = n + 1;
    auto node = [&](int v) { return side[v] == 1 ? S : side[v] == 2 ? T : v; };
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> g(n + 2);
    for (auto [a, b] : links) {
        int x = node(a), y = node(b);
        if (x == y) continue;
        g[x].push_back({y, 1, static_cast<int>(g[y].size())});
        g[y].push_back({x, 1, static_cast<int>(g[x].size()) - 1});
    }
    int flow = 0;
    std::vector<std::pair<int, int>> prev(n + 2);
    while (flow <= limit) {
        std::fill(prev.begin(), prev.end(), std::pair{-1, -1});
        std::deque<int> q{S};
        prev[S] = {S, -1};
        while (!q.empty() && prev[T].first < 0) {
            int x = q.front();
            q.pop_front();
            for (int i = 0; i < static_cast<int>(g[x].size()); ++i) {
                const Arc& a = g[x][i];
                if (a.cap > 0 && prev[a.to].first < 0) {
                    prev[a.to] = {x, i};
                    q.push_back(a.to);
                }
            }
        }
        if (prev[T].first < 0) break;
        for (int y = T; y != S;) {
            auto [x, i] = prev[y];
            Arc& a = g[x][i];
            a.cap -= 1;
            g[y][a.rev].cap += 1;
            y = x;
        }
        ++flow;
    }
    return flow;
}

// Connected induced vertex sets of size k (each once), ESU style.
void connected_sets(const std::vector<std::vector<int>>& adj, int k,
                    const std::function<void(const std::vector<int>&)>& emit) {
    int n = static_cast<int>(adj.size());
    std::vector<int> sub;
    std::vector<char> in_sub(n, 0), near(n, 0);
    std::function<void(std::vector<int>, int)> extend = [&](std::vector<int> ext, int root) {
        if (static_cast<int>(sub.size()) == k) {
            emit(sub);
            return;
        }
        while (!ext.empty()) {
            int w = ext.back();
            ext.pop_back();
            std::vector<int> next = ext;
            std::vector<int> marked;
            for (int u : adj[w]) {
                if (u <= root || in_sub[u] || near[u]) continue;
                bool seen = std::find(next.begin(), next.end(), u) != next.end();
                if (!seen) next.push_back(u);
            }
            sub.push_back(w);
            in_sub[w] = 1;
            for (int u : adj[w])
                if (!near[u]) {
                    near[u] = 1;
                    marked.push_back(u);
                }
            extend(next, root);
            for (int u : marked) near[u] = 0;
            in_sub[w] = 0;
            sub.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        sub = {v};
        in_sub[v] = 1;
        std::vector<int> marked;
        std::vector<int> ext;
        near[v] = 1;
        marked.push_back(v);
        for (int u : adj[v]) {
            if (!near[u]) {
                near[u] = 1;
                marked.push_back(u);
            }
            if (u > v && std::find(ext.begin(), ext.end(), u) == ext.end()) ext.push_back(u);
        }
        extend(ext, v);
        for (int u : marked) near[u] = 0;
        in_sub[v] = 0;
    }
}

bool has_cycle_within(const Multipole& g, const std::vector<char>& keep) {
    UnionFind uf(g.vertex_count);
    for (auto [a, b] : g.links) {
        if (!keep[a] || !keep[b]) continue;
        if (!uf.unite(a, b)) return true;
    }
    return false;
}

std::vector<int> shortest_cycle(const Multipole& g) {
    int n = g.vertex_count;
    for (auto [a, b] : g.links)
        if (a == b) return {a};
    std::map<std::pair<int, int>, int> mult;
    for (auto [a, b] : g.links)
        if (++mult[{a, b}] == 2) return {a, b};
    auto adj = adjacency(g);
    std::vector<int> best;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), par(n, -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    par[y] = x;
                    q.push_back(y);
                } else if (y != par[x] && dist[y] >= dist[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (!best.empty() && len >= static_cast<int>(best.size())) continue;
                    std::vector<int> pa, pb;
                    for (int z = x; z >= 0; z = par[z]) pa.push_back(z);
                    for (int z = y; z >= 0; z = par[z]) pb.push_back(z);
                    // both paths end at s; keep the cycle only if they meet there first
                    std::set<int> sa(pa.begin(), pa.end() - 1);
                    bool disjoint = true;
                    for (int i = 0; i + 1 < static_cast<int>(pb.size()); ++i)
                        if (sa.count(pb[i])) disjoint = false;
                    if (!disjoint) continue;
                    std::vector<int> cyc(pa.begin(), pa.end());
                    for (int i = static_cast<int>(pb.size()) - 2; i >= 0; --i) cyc.push_back(pb[i]);
                    best = cyc;
                }
            }
        }
    }
    return best;
}

}  // namespace

int girth(const Multipole& g) {
    auto c = shortest_cycle(g);
    return c.empty() ? kInfinite : static_cast<int>(c.size());
}

CyclicConnectivity cyclic_connectivity(const Multipole& g) {
    require_graph(g, "cyclic_connectivity");
    int n = g.vertex_count;
    int comps = 0;
    components(g, &comps);
    if (comps > 1) return {0, false};
    auto cyc = shortest_cycle(g);
    if (cyc.empty()) return {0, true};
    int gir = static_cast<int>(cyc.size());
    std::vector<char> rest(n, 1);
    for (int v : cyc) rest[v] = 0;
    bool complement_cyclic = has_cycle_within(g, rest);

    auto adj = adjacency(g);
    for (int k = 1; 2 * k <= n; ++k) {
        if (k == gir && complement_cyclic) return {gir, false};
        std::vector<std::vector<int>> sets;
        connected_sets(adj, k, [&](const std::vector<int>& s) { sets.push_back(s); });
        std::vector<char> side(n, 0);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (int v : sets[i]) side[v] = 1;
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                bool clash = false;
                for (int v : sets[j])
                    if (side[v]) clash = true;
                if (clash) continue;
                for (int v : sets[j]) side[v] = 2;
                int f = bounded_flow(n, g.links, side, k);
                for (int v : sets[j]) side[v] = 0;
                if (f <= k) return {k, false};
            }
            for (int v : sets[i]) side[v] = 0;
        }
    }
    return {0, true};
}

std::vector<std::vector<int>> cycle_separating_cuts(const Multipole& g, int k) {
    require_graph(g, "cycle_separating_cuts");
    int m = static_cast<int>(g.links.size());
    int n = g.vertex_count;
    std::vector<std::vector<int>> out;
    if (k <= 0 || k > m || n == 0) return out;
    auto inc = link_incidence(g);
    std::vector<int> pick(k);
    std::vector<char> removed(m, 0);
    std::vector<int> tin(n), low(n), side(n);
    // Pick k-1 links; the last one must be a bridge of what remains.
    auto leaf = [&]() {
        int timer = 0;
        std::fill(tin.begin(), tin.end(), -1);
        std::vector<int> bridges;
        std::function<void(int, int)> dfs = [&](int v, int via) {
            tin[v] = low[v] = timer++;
            for (int e : inc[v]) {
                if (removed[e] || e == via) continue;
                int w = g.links[e][0] == v ? g.links[e][1] : g.links[e][0];
                if (tin[w] >= 0) {
                    low[v] = std::min(low[v], tin[w]);
                } else {
                    dfs(w, e);
                    low[v] = std::min(low[v], low[w]);
                    if (low[w] > tin[v]) bridges.push_back(e);
                }
            }
        };
        dfs(0, -1);
        for (int v = 0; v < n; ++v)
            if (tin[v] < 0) return;  // already disconnected
        std::sort(bridges.begin(), bridges.end());
        int last = k >= 2 ? pick[k - 2] : -1;
        for (int b : bridges) {
            if (b <= last) continue;
            removed[b] = 1;
            std::fill(side.begin(), side.end(), -1);
            std::vector<int> stack{g.links[b][0]};
            side[g.links[b][0]] = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int e : inc[v]) {
                    if (removed[e]) continue;
                    int w = g.links[e][0] == v ? g.links[e][1] : g.links[e][0];
                    if (side[w] < 0) side[w] = 0, stack.push_back(w);
                }
            }
            for (int v = 0; v < n; ++v)
                if (side[v] < 0) side[v] = 1;
            pick[k - 1] = b;
            bool crossing = true;
            for (int i : pick)
                if (side[g.links[i][0]] == side[g.links[i][1]]) crossing = false;
            // both components contain a cycle iff edges >= vertices on each
            int e0 = 0, e1 = 0, v0 = 0, v1 = 0;
            for (int v = 0; v < n; ++v) (side[v] ? v1 : v0)++;
            for (int i = 0; i < m; ++i)
                if (!removed[i]) (side[g.links[i][0]] ? e1 : e0)++;
            removed[b] = 0;
            if (crossing && e0 >= v0 && e1 >= v1) out.push_back(pick);
        }
    };
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k - 1) {
            leaf();
            return;
        }
        for (int i = start; i <= m - (k - depth); ++i) {
            pick[depth] = i;
            removed[i] = 1;
            rec(i + 1, depth + 1);
            removed[i] = 0;
        }
    };
    rec(0, 0);
    return out;
}

std::vector<std::vector<int>> five_cycles(const Multipole& g) {
    auto adj = adjacency(g);
    int n = g.vertex_count;
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<void(int)> dfs = [&](int s) {
        int x = path.back();
        if (path.size() == 5) {
            if (path[1] < path[4] && std::binary_search(adj[x].begin(), adj[x].end(), s))
                out.push_back(path);
            return;
        }
        for (int y : adj[x]) {
            if (y <= s || used[y]) continue;
            used[y] = 1;
            path.push_back(y);
            dfs(s);
            path.pop_back();
            used[y] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        used[s] = 1;
        dfs(s);
        used[s] = 0;
    }
    return out;
}

std::string to_string(CatalogCluster c) {
    switch (c) {
        case CatalogCluster::pentagon: return "pentagon";
        case CatalogCluster::dyad: return "dyad";
        case CatalogCluster::triad: return "triad";
        case CatalogCluster::quasitriad: return "quasitriad";
        case CatalogCluster::double_pentagon: return "double_pentagon";
        case CatalogCluster::triple_pentagon: return "triple_pentagon";
        case CatalogCluster::tricell: return "tricell";
    }
    return "?";
}

std::vector<CatalogCluster> all_catalog_clusters() {
    return {CatalogCluster::pentagon,        CatalogCluster::dyad,
            CatalogCluster::triad,           CatalogCluster::quasitriad,
            CatalogCluster::double_pentagon, CatalogCluster::triple_pentagon,
            CatalogCluster::tricell};
}

const Multipole& catalog_multipole(CatalogCluster c) {
    static const std::vector<Multipole> poles = [] {
        return std::vector<Multipole>{pentagon(), dyad(),           triad(),  quasitriad(),
                                      double_pentagon(), triple_pentagon(), tricell()};
    }();
    return poles[static_cast<int>(c)];
}

std::optional<CatalogCluster> match_catalog(const Multipole& pole) {
    static const std::vector<CanonicalForm> forms = [] {
        std::vector<CanonicalForm> f;
        for (auto c : all_catalog_clusters()) f.push_back(canonical_form(catalog_multipole(c), false));
        return f;
    }();
    if (pole.vertex_count > 10 || pole.semiedge_count() < 5) return std::nullopt;
    auto f = canonical_form(pole, false);
    for (auto c : all_catalog_clusters())
        if (forms[static_cast<int>(c)] == f) return c;
    return std::nullopt;
}

ClusterReport five_cycle_clusters(const Multipole& g) {
    ClusterReport r;
    r.order = g.vertex_count;
    r.girth = girth(g);
    if (g.is_graph() && !g.free_loops) r.cc = cyclic_connectivity(g);
    auto cycles = five_cycles(g);
    int n = g.vertex_count;
    UnionFind uf(n);
    std::vector<char> covered(n, 0);
    for (const auto& c : cycles)
        for (int i = 0; i < 5; ++i) {
            covered[c[i]] = 1;
            uf.unite(c[i], c[(i + 1) % 5]);
        }
    std::map<int, int> index;
    for (int v = 0; v < n; ++v) {
        if (!covered[v]) {
            ++r.uncovered_vertices;
            continue;
        }
        int root = uf.find(v);
        auto [it, fresh] = index.emplace(root, static_cast<int>(r.clusters.size()));
        if (fresh) r.clusters.emplace_back();
        r.clusters[it->second].vertices.push_back(v);
    }
    for (const auto& c : cycles) r.clusters[index[uf.find(c[0])]].five_cycle_count++;
    for (auto& cl : r.clusters) {
        cl.pole = induced_submultipole(g, cl.vertices);
        cl.catalog = match_catalog(cl.pole);
    }
    return r;
}

std::string to_json(const ClusterReport& r) {
    nlohmann::ordered_json j;
    j["order"] = r.order;
    if (r.girth == kInfinite) j["girth"] = nullptr;
    else j["girth"] = r.girth;
    if (r.cc.infinite) j["cyclic_connectivity"] = nullptr;
    else j["cyclic_connectivity"] = r.cc.value;
    j["clusters"] = nlohmann::ordered_json::array();
    for (const auto& c : r.clusters) {
        nlohmann::ordered_json cj;
        cj["vertices"] = c.vertices;
        cj["five_cycles"] = c.five_cycle_count;
        cj["semiedges"] = c.pole.semiedge_count();
        if (c.catalog) cj["catalog"] = to_string(*c.catalog);
        else cj["catalog"] = nullptr;
        j["clusters"].push_back(cj);
    }
    j["uncovered_vertices"] = r.uncovered_vertices;
    return j.dump();
}

namespace {

struct ColouredGraph {
    std::vector<std::uint32_t> key;
    std::vector<std::vector<int>> adj;
    int vertex_nodes = 0;

    int add(std::uint32_t k) {
        key.push_back(k);
        adj.emplace_back();
        return static_cast<int>(key.size()) - 1;
    }
    void join(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
};

ColouredGraph encode(const Multipole& m, bool respect) {
    ColouredGraph cg;
    for (int v = 0; v < m.vertex_count; ++v) cg.add(0);
    cg.vertex_nodes = m.vertex_count;
    for (auto [a, b] : m.links) {
        int e = cg.add(a == b ? 2 : 1);
        cg.join(e, a);
        if (a != b) cg.join(e, b);
    }
    int k = m.semiedge_count();
    std::vector<std::uint32_t> stub_key(k, 3);
    std::vector<int> stub_conn(k, -1);
    if (respect) {
        for (int ci = 0; ci < static_cast<int>(m.connectors.size()); ++ci) {
            const auto& c = m.connectors[ci];
            for (int i = 0; i < c.arity(); ++i) {
                if (c.ordered) stub_key[c.sids[i]] = 1000 + i;
                stub_conn[c.sids[i]] = ci;
            }
        }
    }
    std::vector<int> stub(k);
    for (int s = 0; s < k; ++s) stub[s] = cg.add(stub_key[s]);
    for (auto [v, s] : m.dangling) cg.join(stub[s], v);
    for (auto [s, t] : m.isolated) {
        int e = cg.add(4);
        cg.join(e, stub[s]);
        cg.join(e, stub[t]);
    }
    if (respect) {
        for (const auto& c : m.connectors) {
            int node = cg.add(100000 + 2 * c.arity() + (c.ordered ? 1 : 0));
            for (int s : c.sids) cg.join(node, stub[s]);
        }
    }
    return cg;
}

// Equitable refinement; cells are numbered in a labelling-independent order.
void refine(const ColouredGraph& g, std::vector<int>& col) {
    int n = static_cast<int>(col.size());
    int cells = 1 + *std::max_element(col.begin(), col.end());
    std::vector<std::vector<int>> sig(n);
    std::vector<int> idx(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            sig[v].clear();
            sig[v].push_back(col[v]);
            for (int u : g.adj[v]) sig[v].push_back(col[u]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        int c = 0;
        std::vector<int> nc(n);
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++c;
            nc[idx[i]] = c;
        }
        col = std::move(nc);
        if (c + 1 == cells) break;
        cells = c + 1;
    }
}

struct Search {
    const ColouredGraph& g;
    std::vector<std::uint32_t> best;
    std::vector<int> best_col;
    std::uint64_t count = 0;

    std::vector<std::uint32_t> leaf_code(const std::vector<int>& col) const {
        int n = static_cast<int>(col.size());
        std::vector<int> at(n);
        for (int v = 0; v < n; ++v) at[col[v]] = v;
        std::vector<std::uint32_t> code;
        code.push_back(static_cast<std::uint32_t>(n));
        for (int i = 0; i < n; ++i) code.push_back(g.key[at[i]]);
        std::vector<std::pair<int, int>> es;
        for (int v = 0; v < n; ++v)
            for (int u : g.adj[v])
                if (col[v] < col[u]) es.emplace_back(col[v], col[u]);
        std::sort(es.begin(), es.end());
        for (auto [a, b] : es) {
            code.push_back(static_cast<std::uint32_t>(a));
            code.push_back(static_cast<std::uint32_t>(b));
        }
        return code;
    }

    void run(std::vector<int> col) {
        refine(g, col);
        int n = static_cast<int>(col.size());
        std::vector<int> size(n, 0);
        for (int c : col) size[c]++;
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            auto code = leaf_code(col);
            if (best.empty() || code < best) {
                best = std::move(code);
                best_col = col;
                count = 1;
            } else if (code == best) {
                ++count;
            }
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (col[x] != target) continue;
            std::vector<int> next(n);
            for (int v = 0; v < n; ++v) next[v] = 2 * col[v] + (col[v] == target && v != x ? 1 : 0);
            std::vector<int> uniq(next);
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            for (int& v : next) v = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), v) - uniq.begin());
            run(std::move(next));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Multipole& m, bool respect_connectors) {
    Multipole norm = m;
    norm.normalize();
    ColouredGraph cg = encode(norm, respect_connectors);
    CanonicalForm f;
    f.respects_connectors = respect_connectors;
    int n = static_cast<int>(cg.key.size());
    if (n == 0) {
        f.code = {0, static_cast<std::uint32_t>(m.free_loops)};
        f.automorphisms = 1;
        return f;
    }
    std::vector<std::uint32_t> keys(cg.key);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> col(n);
    for (int v = 0; v < n; ++v)
        col[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), cg.key[v]) - keys.begin());
    Search s{cg, {}, {}, 0};
    s.run(col);
    f.code = std::move(s.best);
    f.code.push_back(static_cast<std::uint32_t>(m.free_loops));
    f.automorphisms = s.count;
    std::vector<int> order(cg.vertex_nodes);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return s.best_col[a] < s.best_col[b]; });
    f.relabel.assign(cg.vertex_nodes, 0);
    for (int i = 0; i < cg.vertex_nodes; ++i) f.relabel[order[i]] = i;
    return f;
}

bool isomorphic(const Multipole& a, const Multipole& b, bool respect_connectors) {
    if (a.vertex_count != b.vertex_count || a.links.size() != b.links.size() ||
        a.semiedge_count() != b.semiedge_count() || a.isolated.size() != b.isolated.size() ||
        a.free_loops != b.free_loops)
        return false;
    if (respect_connectors) {
        auto shape = [](const Multipole& m) {
            std::vector<std::pair<int, bool>> s;
            for (const auto& c : m.connectors) s.emplace_back(c.arity(), c.ordered);
            std::sort(s.begin(), s.end());
            return s;
        };
        if (shape(a) != shape(b)) return false;
    }
    return canonical_form(a, respect_connectors) == canonical_form(b, respect_connectors);
}

std::uint64_t automorphism_count(const Multipole& m, bool respect_connectors) {
    return canonical_form(m, respect_connectors).automorphisms;
}

std::string code_string(const CanonicalForm& f) {
    static const char* hex = "0123456789abcdef";
    std::string s;
    for (std::uint32_t x : f.code) {
        // base-32 style variable length, stable and compact
        do {
            std::uint32_t d = x & 15u;
            x >>= 4;
            s.push_back(hex[d]);
        } while (x);
        s.push_back('.');
    }
    return s;
}

std::vector<Embedding> find_submultipole(const Multipole& host, const Multipole& pattern,
                                         bool first_only) {
    if (!pattern.isolated.empty()) throw InputError("find_submultipole: pattern has isolated edges");
    std::vector<Embedding> out;
    int pn = pattern.vertex_count, hn = host.vertex_count;
    if (pn == 0 || pn > hn) return out;
    int comps = 0;
    components(pattern, &comps);
    if (comps != 1) throw InputError("find_submultipole: pattern must be connected");

    auto mult_matrix = [](const Multipole& m) {
        int n = m.vertex_count;
        std::vector<std::uint8_t> mm(static_cast<std::size_t>(n) * n, 0);
        for (auto [a, b] : m.links) {
            mm[static_cast<std::size_t>(a) * n + b]++;
            if (a != b) mm[static_cast<std::size_t>(b) * n + a]++;
        }
        return mm;
    };
    auto pm = mult_matrix(pattern);
    auto hm = mult_matrix(host);
    auto padj = adjacency(pattern);
    auto hadj = adjacency(host);
    for (auto& a : hadj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    std::vector<int> order, parent(pn, -1);
    std::vector<char> seen(pn, 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int y : padj[order[i]])
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = order[i];
                order.push_back(y);
            }

    std::vector<int> map(pn, -1);
    std::vector<char> used(hn, 0);
    std::set<std::vector<int>> images;
    bool stop = false;

    auto consistent = [&](int depth) {
        int p = order[depth], h = map[p];
        for (int d = 0; d <= depth; ++d) {
            int r = order[d];
            if (pm[static_cast<std::size_t>(p) * pn + r] != hm[static_cast<std::size_t>(h) * hn + map[r]])
                return false;
        }
        return true;
    };

    std::function<void(int)> rec = [&](int depth) {
        if (stop) return;
        if (depth == pn) {
            std::vector<int> img(map);
            std::sort(img.begin(), img.end());
            if (!images.insert(img).second) return;
            Embedding e;
            e.vertex_map = map;
            e.cut.assign(pattern.semiedge_count(), {-1, -1});
            std::vector<char> inside(hn, 0);
            for (int h : map) inside[h] = 1;
            std::vector<std::vector<int>> outside(hn);
            for (auto [a, b] : host.links) {
                if (inside[a] && !inside[b]) outside[a].push_back(b);
                if (inside[b] && !inside[a]) outside[b].push_back(a);
            }
            for (auto [v, s] : host.dangling)
                if (inside[v]) outside[v].push_back(-1);
            std::vector<std::vector<int>> sids(pn);
            for (auto [v, s] : pattern.dangling) sids[v].push_back(s);
            for (int p = 0; p < pn; ++p) {
                std::sort(sids[p].begin(), sids[p].end());
                for (std::size_t i = 0; i < sids[p].size(); ++i)
                    e.cut[sids[p][i]] = {map[p], outside[map[p]][i]};
            }
            out.push_back(std::move(e));
            if (first_only) stop = true;
            return;
        }
        int p = order[depth];
        auto try_host = [&](int h) {
            if (used[h]) return;
            map[p] = h;
            used[h] = 1;
            if (consistent(depth)) rec(depth + 1);
            used[h] = 0;
            map[p] = -1;
        };
        if (depth == 0) {
            for (int h = 0; h < hn && !stop; ++h) try_host(h);
        } else {
            for (int h : hadj[map[parent[p]]]) {
                if (stop) break;
                try_host(h);
            }
        }
    };
    rec(0);
    return out;
}

}  // namespace snarkmorph
