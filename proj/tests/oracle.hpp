// Brute-force reference computations shared by the tests. Nothing here calls
// the library's engines; only the plain Multipole data is read.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "snarkmorph/multipole.hpp"

namespace oracle {

using snarkmorph::Multipole;

struct Edges {
    std::vector<std::array<int, 2>> ends;  // vertex or -1
    std::vector<int> of_sid;               // sid -> edge
};

inline Edges edges_of(const Multipole& m) {
    Edges e;
    int k = m.semiedge_count();
    e.of_sid.assign(k, -1);
    for (auto l : m.links) e.ends.push_back(l);
    for (auto [v, s] : m.dangling) {
        e.of_sid[s] = static_cast<int>(e.ends.size());
        e.ends.push_back({v, -1});
    }
    for (auto [s, t] : m.isolated) {
        e.of_sid[s] = e.of_sid[t] = static_cast<int>(e.ends.size());
        e.ends.push_back({-1, -1});
    }
    return e;
}

// Calls visit with the colour (1..3) of every edge for each proper
// 3-edge-colouring. Plain backtracking in edge order.
inline void colourings(const Multipole& m, const std::function<void(const std::vector<int>&)>& visit) {
    Edges e = edges_of(m);
    for (auto [u, v] : e.ends)
        if (u >= 0 && u == v) return;
    std::vector<int> used(m.vertex_count, 0);  // bitmask of colours at a vertex
    std::vector<int> col(e.ends.size(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == e.ends.size()) {
            visit(col);
            return;
        }
        auto [u, v] = e.ends[i];
        for (int c = 1; c <= 3; ++c) {
            int bit = 1 << c;
            if ((u >= 0 && (used[u] & bit)) || (v >= 0 && (used[v] & bit))) continue;
            if (u >= 0) used[u] |= bit;
            if (v >= 0) used[v] |= bit;
            col[i] = c;
            go(i + 1);
            if (u >= 0) used[u] &= ~bit;
            if (v >= 0) used[v] &= ~bit;
        }
    };
    go(0);
}

inline std::uint64_t count(const Multipole& m) {
    std::uint64_t n = 0;
    colourings(m, [&](const std::vector<int>&) { ++n; });
    return n;
}

inline bool colourable(const Multipole& m) { return count(m) > 0; }

// Boundary tuples (colours 1..3 in ascending sid order) of all colourings.
inline std::set<std::vector<int>> boundary(const Multipole& m) {
    Edges e = edges_of(m);
    std::set<std::vector<int>> out;
    colourings(m, [&](const std::vector<int>& col) {
        std::vector<int> t;
        for (int ed : e.of_sid) t.push_back(col[ed]);
        out.insert(t);
    });
    return out;
}

// All tuples over {1,2,3} of length k satisfying pred.
inline std::set<std::vector<int>> tuples(int k, const std::function<bool(const std::vector<int>&)>& pred) {
    std::set<std::vector<int>> out;
    std::vector<int> t(k, 1);
    while (true) {
        if (pred(t)) out.insert(t);
        int i = k - 1;
        while (i >= 0 && t[i] == 3) t[i--] = 1;
        if (i < 0) break;
        ++t[i];
    }
    return out;
}

inline int xor_all(const std::vector<int>& t) {
    int s = 0;
    for (int x : t) s ^= x;
    return s;
}

// Simple adjacency lists of a 0-pole.
inline std::vector<std::vector<int>> neighbours(const Multipole& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (auto [u, v] : g.links) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

inline int components_without(const Multipole& g, const std::vector<bool>& removed_link,
                              std::vector<int>& comp) {
    int n = g.vertex_count;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < g.links.size(); ++i)
        if (!removed_link[i]) parent[find(g.links[i][0])] = find(g.links[i][1]);
    std::map<int, int> ids;
    comp.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (!ids.count(r)) ids[r] = static_cast<int>(ids.size());
        comp[v] = ids[r];
    }
    return static_cast<int>(ids.size());
}

// Whether deleting the marked links leaves at least two components that
// contain a cycle (edges >= vertices in a component).
inline bool separates_cycles(const Multipole& g, const std::vector<bool>& removed) {
    std::vector<int> comp;
    int c = components_without(g, removed, comp);
    std::vector<int> verts(c, 0), edges(c, 0);
    for (int v = 0; v < g.vertex_count; ++v) ++verts[comp[v]];
    for (std::size_t i = 0; i < g.links.size(); ++i)
        if (!removed[i]) ++edges[comp[g.links[i][0]]];
    int cyclic = 0;
    for (int i = 0; i < c; ++i)
        if (edges[i] >= verts[i]) ++cyclic;
    return cyclic >= 2;
}

// Every k-subset of links, in lexicographic order.
inline void subsets(int m, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> s(k);
    std::function<void(int, int)> go = [&](int i, int from) {
        if (i == k) {
            visit(s);
            return;
        }
        for (int x = from; x <= m - (k - i); ++x) {
            s[i] = x;
            go(i + 1, x + 1);
        }
    };
    go(0, 0);
}

// Minimal cycle-separating cut size up to max_k; 0 when none was found.
inline int cyclic_connectivity(const Multipole& g, int max_k) {
    int m = static_cast<int>(g.links.size());
    for (int k = 1; k <= std::min(max_k, m); ++k) {
        bool hit = false;
        subsets(m, k, [&](const std::vector<int>& s) {
            if (hit) return;
            std::vector<bool> removed(m, false);
            for (int i : s) removed[i] = true;
            hit = separates_cycles(g, removed);
        });
        if (hit) return k;
    }
    return 0;
}

// Cuts of exactly k links leaving exactly two components, both cyclic, with
// every cut link running between them.
inline std::vector<std::vector<int>> separating_cuts(const Multipole& g, int k) {
    int m = static_cast<int>(g.links.size());
    std::vector<std::vector<int>> out;
    subsets(m, k, [&](const std::vector<int>& s) {
        std::vector<bool> removed(m, false);
        for (int i : s) removed[i] = true;
        std::vector<int> comp;
        if (components_without(g, removed, comp) != 2 || !separates_cycles(g, removed)) return;
        for (int i : s)
            if (comp[g.links[i][0]] == comp[g.links[i][1]]) return;
        out.push_back(s);
    });
    return out;
}

// Shortest cycle by BFS from every vertex (simple graphs).
inline int girth(const Multipole& g) {
    auto adj = neighbours(g);
    int best = 1 << 30;
    for (int s = 0; s < g.vertex_count; ++s) {
        std::vector<int> dist(g.vertex_count, -1), par(g.vertex_count, -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            for (int w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push_back(w);
                } else if (par[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

// Isomorphism of small 0-poles or of multipoles ignoring connectors, by trying
// every vertex bijection; links are compared as multisets and every vertex's
// semiedge count must agree.
inline bool isomorphic_small(const Multipole& a, const Multipole& b) {
    if (a.vertex_count != b.vertex_count || a.links.size() != b.links.size() ||
        a.semiedge_count() != b.semiedge_count() || a.isolated.size() != b.isolated.size())
        return false;
    int n = a.vertex_count;
    auto free_ends = [](const Multipole& m) {
        std::vector<int> d(m.vertex_count, 0);
        for (auto [v, s] : m.dangling) ++d[v];
        return d;
    };
    auto da = free_ends(a), db = free_ends(b);
    std::multiset<std::array<int, 2>> target(b.links.begin(), b.links.end());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = da[v] == db[p[v]];
        if (!ok) continue;
        std::multiset<std::array<int, 2>> img;
        for (auto [u, v] : a.links) img.insert({std::min(p[u], p[v]), std::max(p[u], p[v])});
        if (img == target) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Closed-form predicates over colours 1..3.
inline bool p2_form(const std::vector<int>& t) { return t[0] != t[1] && t[2] != t[3] && oracle::xor_all(t) == 0; }

inline bool mev_form(const std::vector<int>& t) {
    return t[0] == t[1] && t[2] != t[3] && t[3] != t[4] && t[2] != t[4];
}

inline bool v4_form(const std::vector<int>& t) {
    return t[0] != t[1] && t[2] != t[3] && t[4] != t[5] && oracle::xor_all(t) == 0;
}

inline bool m7_form(const std::vector<int>& t) {
    return t[0] == t[1] && p2_form(std::vector<int>(t.begin() + 2, t.end()));
}

inline bool dyad_form(const std::vector<int>& t) {
    bool in_equal = t[0] == t[1] && t[2] != t[3] && t[4] == (t[2] ^ t[3]);
    bool out_equal = t[2] == t[3] && t[0] != t[1] && t[4] == (t[0] ^ t[1]);
    return in_equal || out_equal;
}

inline bool proper23_form(const std::vector<int>& t) {
    int b = t[0] ^ t[1], c = t[2] ^ t[3] ^ t[4];
    return b != 0 && b == c;
}

// some proper colouring c_0..c_4 of the cycle with e_i = c_{i-1} + c_i
inline bool c5_form(const std::vector<int>& e) {
    bool hit = false;
    oracle::tuples(5, [&](const std::vector<int>& c) {
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            int prev = c[(i + 4) % 5];
            ok = prev != c[i] && e[i] == (prev ^ c[i]);
        }
        hit = hit || ok;
        return false;
    });
    return hit;
}

inline bool parity_ok(const std::vector<int>& t) {
    int n[4] = {0, 0, 0, 0};
    for (int x : t) ++n[x];
    int k = static_cast<int>(t.size()) % 2;
    return n[1] % 2 == k && n[2] % 2 == k && n[3] % 2 == k;
}

// Tuples t such that every 5-pole having t also has a tuple of col: either t
// is in col, or for some colour pair each way of pairing the boundary ends
// into Kempe chains has a chain whose switch lands in the set already found.
inline std::set<std::vector<int>> kempe_forced(const std::set<std::vector<int>>& col,
                                                const std::set<std::vector<int>>& all) {
    std::set<std::vector<int>> good = col;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& t : all) {
            if (good.count(t)) continue;
            bool ok = false;
            for (int x = 1; x <= 3 && !ok; ++x)
                for (int y = x + 1; y <= 3 && !ok; ++y) {
                    std::vector<int> pos;
                    for (std::size_t i = 0; i < t.size(); ++i)
                        if (t[i] == x || t[i] == y) pos.push_back(static_cast<int>(i));
                    auto switched = [&](int i, int j) {
                        auto u = t;
                        for (int k : {i, j}) u[k] = u[k] == x ? y : x;
                        return good.count(u) > 0;
                    };
                    // every perfect matching of pos must contain a good switch
                    std::function<bool(std::vector<int>)> all_hit = [&](std::vector<int> rest) {
                        if (rest.empty()) return false;
                        int a = rest[0];
                        for (std::size_t k = 1; k < rest.size(); ++k) {
                            if (switched(a, rest[k])) continue;
                            std::vector<int> r;
                            for (std::size_t l = 1; l < rest.size(); ++l)
                                if (l != k) r.push_back(rest[l]);
                            if (!all_hit(r)) return false;
                        }
                        return true;
                    };
                    ok = all_hit(pos);
                }
            if (ok) {
                good.insert(t);
                grew = true;
            }
        }
    }
    return good;
}

}  // namespace oracle
