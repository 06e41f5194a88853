#include "snarkmorph/multipole.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace snarkmorph {

namespace {

std::string unique_name(const std::set<std::string>& taken, std::string name) {
    while (taken.count(name)) name += "'";
    return name;
}

std::set<std::string> connector_names(const Multipole& m) {
    std::set<std::string> out;
    for (const auto& c : m.connectors) out.insert(c.name);
    return out;
}

// Mutable view used by batched junctions: per sid either a vertex or a partner.
struct EndTable {
    std::vector<int> vertex;   // -1 if not dangling
    std::vector<int> partner;  // -1 if not isolated
    std::vector<char> alive;

    explicit EndTable(const Multipole& m) {
        int k = m.semiedge_count();
        vertex.assign(k, -1);
        partner.assign(k, -1);
        alive.assign(k, 1);
        for (auto [v, s] : m.dangling) vertex[s] = v;
        for (auto [s, t] : m.isolated) {
            partner[s] = t;
            partner[t] = s;
        }
    }
};

// Drops dead sids, renumbers the rest ascending, rebuilds lists.
Multipole compact(Multipole m, const EndTable& t) {
    int k = static_cast<int>(t.alive.size());
    std::vector<int> remap(k, -1);
    int next = 0;
    for (int s = 0; s < k; ++s)
        if (t.alive[s]) remap[s] = next++;
    m.dangling.clear();
    m.isolated.clear();
    for (int s = 0; s < k; ++s) {
        if (!t.alive[s]) continue;
        if (t.vertex[s] >= 0) {
            m.dangling.push_back({t.vertex[s], remap[s]});
        } else if (t.partner[s] > s) {
            m.isolated.push_back({remap[s], remap[t.partner[s]]});
        }
    }
    std::vector<Connector> cs;
    for (auto& c : m.connectors) {
        Connector nc{c.name, c.ordered, {}};
        for (int s : c.sids)
            if (s < k && t.alive[s]) nc.sids.push_back(remap[s]);
        if (!nc.sids.empty()) cs.push_back(std::move(nc));
    }
    m.connectors = std::move(cs);
    m.normalize();
    return m;
}

void join_pair(Multipole& m, EndTable& t, int s1, int s2) {
    int k = static_cast<int>(t.alive.size());
    if (s1 == s2) throw InputError("cannot join a semiedge with itself");
    if (s1 < 0 || s2 < 0 || s1 >= k || s2 >= k || !t.alive[s1] || !t.alive[s2])
        throw InputError("unknown semiedge id in junction");
    bool d1 = t.vertex[s1] >= 0, d2 = t.vertex[s2] >= 0;
    if (d1 && d2) {
        int u = t.vertex[s1], v = t.vertex[s2];
        m.links.push_back({std::min(u, v), std::max(u, v)});
    } else if (d1 || d2) {
        int sd = d1 ? s1 : s2, si = d1 ? s2 : s1;
        int other = t.partner[si];
        t.vertex[other] = t.vertex[sd];
        t.partner[other] = -1;
    } else {
        int a = t.partner[s1], b = t.partner[s2];
        if (a == s2) {
            ++m.free_loops;
        } else {
            t.partner[a] = b;
            t.partner[b] = a;
        }
    }
    t.vertex[s1] = t.vertex[s2] = -1;
    t.partner[s1] = t.partner[s2] = -1;
    t.alive[s1] = t.alive[s2] = 0;
}

Multipole join_pairs(const Multipole& m, const std::vector<std::array<int, 2>>& pairs) {
    Multipole out = m;
    EndTable t(m);
    for (auto [a, b] : pairs) join_pair(out, t, a, b);
    return compact(std::move(out), t);
}

}  // namespace

int Multipole::semiedge_count() const {
    return static_cast<int>(dangling.size() + 2 * isolated.size());
}

void Multipole::normalize() {
    for (auto& l : links)
        if (l[0] > l[1]) std::swap(l[0], l[1]);
    for (auto& i : isolated)
        if (i[0] > i[1]) std::swap(i[0], i[1]);
    std::sort(links.begin(), links.end());
    std::sort(dangling.begin(), dangling.end());
    std::sort(isolated.begin(), isolated.end());
}

void Multipole::validate() const {
    if (vertex_count < 0) throw InputError("negative vertex count");
    std::vector<int> deg(vertex_count, 0);
    auto check_vertex = [&](int v) {
        if (v < 0 || v >= vertex_count)
            throw InputError("vertex id " + std::to_string(v) + " out of range");
    };
    for (auto [u, v] : links) {
        check_vertex(u);
        check_vertex(v);
        ++deg[u];
        ++deg[v];
    }
    int k = semiedge_count();
    std::vector<int> seen(k, 0);
    auto check_sid = [&](int s) {
        if (s < 0 || s >= k) throw InputError("semiedge id " + std::to_string(s) + " out of range");
        if (seen[s]++) throw InputError("semiedge id " + std::to_string(s) + " used twice");
    };
    for (auto [v, s] : dangling) {
        check_vertex(v);
        ++deg[v];
        check_sid(s);
    }
    for (auto [s, t] : isolated) {
        check_sid(s);
        check_sid(t);
    }
    for (int v = 0; v < vertex_count; ++v)
        if (deg[v] != 3)
            throw InputError("vertex " + std::to_string(v) + " has " + std::to_string(deg[v]) +
                             " edge ends, expected 3");
    std::vector<int> owner(k, 0);
    std::set<std::string> names;
    for (const auto& c : connectors) {
        if (c.name.empty()) throw InputError("connector with empty name");
        if (!names.insert(c.name).second) throw InputError("duplicate connector " + c.name);
        if (c.sids.empty()) throw InputError("empty connector " + c.name);
        for (int s : c.sids) {
            if (s < 0 || s >= k) throw InputError("connector " + c.name + " names unknown semiedge");
            if (owner[s]++) throw InputError("semiedge " + std::to_string(s) + " in two connectors");
        }
    }
    for (int s = 0; s < k; ++s)
        if (!owner[s]) throw InputError("semiedge " + std::to_string(s) + " in no connector");
}

const Connector& Multipole::connector(const std::string& name) const {
    return connectors[connector_index(name)];
}

int Multipole::connector_index(const std::string& name) const {
    for (std::size_t i = 0; i < connectors.size(); ++i)
        if (connectors[i].name == name) return static_cast<int>(i);
    throw InputError("unknown connector " + name);
}

bool Multipole::has_connector(const std::string& name) const {
    for (const auto& c : connectors)
        if (c.name == name) return true;
    return false;
}

std::vector<SemiedgeEnd> semiedge_ends(const Multipole& m) {
    std::vector<SemiedgeEnd> out(m.semiedge_count());
    for (auto [v, s] : m.dangling) {
        out[s].dangling = true;
        out[s].vertex = v;
    }
    for (auto [s, t] : m.isolated) {
        out[s].partner = t;
        out[t].partner = s;
    }
    return out;
}

std::vector<std::vector<int>> adjacency(const Multipole& m) {
    std::vector<std::vector<int>> adj(m.vertex_count);
    for (auto [u, v] : m.links) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<std::vector<int>> link_incidence(const Multipole& m) {
    std::vector<std::vector<int>> inc(m.vertex_count);
    for (int i = 0; i < static_cast<int>(m.links.size()); ++i) {
        inc[m.links[i][0]].push_back(i);
        inc[m.links[i][1]].push_back(i);
    }
    return inc;
}

Multipole make_graph(int n, const std::vector<std::array<int, 2>>& edges) {
    Multipole g;
    g.vertex_count = n;
    g.links = edges;
    g.normalize();
    g.validate();
    return g;
}

Multipole disjoint_union(const Multipole& a, const Multipole& b, const std::string& prefix_a,
                         const std::string& prefix_b) {
    Multipole out;
    int n = a.vertex_count, k = a.semiedge_count();
    out.vertex_count = n + b.vertex_count;
    out.free_loops = a.free_loops + b.free_loops;
    out.links = a.links;
    for (auto [u, v] : b.links) out.links.push_back({u + n, v + n});
    out.dangling = a.dangling;
    for (auto [v, s] : b.dangling) out.dangling.push_back({v + n, s + k});
    out.isolated = a.isolated;
    for (auto [s, t] : b.isolated) out.isolated.push_back({s + k, t + k});
    std::set<std::string> names;
    for (const auto& c : a.connectors) {
        Connector nc = c;
        nc.name = prefix_a + c.name;
        names.insert(nc.name);
        out.connectors.push_back(std::move(nc));
    }
    for (const auto& c : b.connectors) {
        Connector nc = c;
        nc.name = prefix_b + c.name;
        if (names.count(nc.name)) throw InputError("connector name clash: " + nc.name);
        names.insert(nc.name);
        for (int& s : nc.sids) s += k;
        out.connectors.push_back(std::move(nc));
    }
    out.normalize();
    return out;
}

Multipole junction_semiedges(const Multipole& m, int s1, int s2) {
    return join_pairs(m, {{s1, s2}});
}

Multipole junction_pairs(const Multipole& m, const std::vector<std::array<int, 2>>& pairs) {
    return join_pairs(m, pairs);
}

Multipole join_connectors(const Multipole& m, const std::string& a, const std::string& b,
                          const std::optional<std::vector<int>>& perm) {
    const Connector& ca = m.connector(a);
    const Connector& cb = m.connector(b);
    if (a == b) throw InputError("cannot join a connector with itself");
    if (ca.arity() != cb.arity())
        throw InputError("arity mismatch joining " + a + " and " + b);
    int k = ca.arity();
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    if (perm) {
        std::vector<int> q = *perm;
        std::sort(q.begin(), q.end());
        if (q != p) throw InputError("junction order is not a permutation");
        if (ca.ordered && cb.ordered && *perm != p)
            throw InputError("ordered connectors must be joined in their order");
        p = *perm;
    }
    std::vector<std::array<int, 2>> pairs;
    for (int i = 0; i < k; ++i) pairs.push_back({ca.sids[i], cb.sids[p[i]]});
    return join_pairs(m, pairs);
}

Multipole junction_connectors(const Multipole& m, const std::string& a, const Multipole& n,
                              const std::string& b, const std::optional<std::vector<int>>& perm) {
    m.connector(a);
    n.connector(b);
    std::set<std::string> taken = connector_names(m);
    Multipole nn = n;
    std::string bname = b;
    for (auto& c : nn.connectors) {
        std::string fresh = unique_name(taken, c.name);
        if (c.name == b) bname = fresh;
        c.name = fresh;
        taken.insert(fresh);
    }
    return join_connectors(disjoint_union(m, nn), a, bname, perm);
}

Multipole sever_links(const Multipole& g, const std::vector<int>& link_indices) {
    std::set<int> idx(link_indices.begin(), link_indices.end());
    if (idx.size() != link_indices.size()) throw InputError("edge listed twice");
    Multipole out = g;
    out.links.clear();
    int k = g.semiedge_count();
    std::set<std::string> taken = connector_names(g);
    for (int i = 0; i < static_cast<int>(g.links.size()); ++i)
        if (!idx.count(i)) out.links.push_back(g.links[i]);
    for (int i : link_indices) {
        if (i < 0 || i >= static_cast<int>(g.links.size())) throw InputError("edge not present");
        auto [u, v] = g.links[i];
        out.dangling.push_back({u, k});
        out.dangling.push_back({v, k + 1});
        std::string name =
            unique_name(taken, "e" + std::to_string(u) + "_" + std::to_string(v));
        taken.insert(name);
        out.connectors.push_back({name, false, {k, k + 1}});
        k += 2;
    }
    out.normalize();
    return out;
}

int find_link(const Multipole& m, int u, int v) {
    if (u > v) std::swap(u, v);
    for (int i = 0; i < static_cast<int>(m.links.size()); ++i)
        if (m.links[i][0] == u && m.links[i][1] == v) return i;
    return -1;
}

namespace {
std::vector<int> link_indices_for(const Multipole& g, const std::vector<std::array<int, 2>>& edges) {
    std::vector<int> out;
    std::vector<char> used(g.links.size(), 0);
    for (auto e : edges) {
        int a = std::min(e[0], e[1]), b = std::max(e[0], e[1]);
        int found = -1;
        for (int i = 0; i < static_cast<int>(g.links.size()); ++i)
            if (!used[i] && g.links[i][0] == a && g.links[i][1] == b) {
                found = i;
                break;
            }
        if (found < 0)
            throw InputError("edge " + std::to_string(a) + "-" + std::to_string(b) + " not present");
        used[found] = 1;
        out.push_back(found);
    }
    return out;
}
}  // namespace

Multipole sever_edges(const Multipole& g, const std::vector<std::array<int, 2>>& edges) {
    return sever_links(g, link_indices_for(g, edges));
}

Multipole remove_vertices(const Multipole& g, const std::vector<int>& vs, bool keep_internal) {
    std::vector<char> gone(g.vertex_count, 0);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count) throw InputError("unknown vertex " + std::to_string(v));
        gone[v] = 1;
    }
    std::vector<int> newid(g.vertex_count, -1);
    int n = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (!gone[v]) newid[v] = n++;

    Multipole out;
    out.vertex_count = n;
    out.free_loops = g.free_loops;
    out.connectors = g.connectors;
    out.isolated = g.isolated;
    int k = g.semiedge_count();
    for (auto [u, v] : g.links)
        if (!gone[u] && !gone[v]) out.links.push_back({newid[u], newid[v]});
    for (auto [v, s] : g.dangling)
        if (!gone[v]) out.dangling.push_back({newid[v], s});

    // sid created for end `side` of link i (at a removed vertex)
    std::map<std::pair<int, int>, int> end_sid;
    std::vector<int> removed;
    for (int v = 0; v < g.vertex_count; ++v)
        if (gone[v]) removed.push_back(v);
    auto inc = link_incidence(g);
    std::set<std::string> taken = connector_names(g);
    for (int x : removed) {
        Connector c{unique_name(taken, "v" + std::to_string(x)), false, {}};
        std::set<int> seen_loop;
        for (int li : inc[x]) {
            auto [a, b] = g.links[li];
            int side;
            if (a == b) {
                side = seen_loop.count(li) ? 1 : 0;
                seen_loop.insert(li);
            } else {
                side = (a == x) ? 0 : 1;
            }
            int other = g.links[li][1 - side];
            if (gone[other] && !keep_internal) continue;
            int s = k++;
            end_sid[{li, side}] = s;
            c.sids.push_back(s);
            if (!gone[other]) out.dangling.push_back({newid[other], s});
        }
        for (auto [v, s] : g.dangling) {
            if (v != x) continue;
            int t = k++;
            out.isolated.push_back({s, t});
            c.sids.push_back(t);
        }
        if (!c.sids.empty()) {
            taken.insert(c.name);
            out.connectors.push_back(std::move(c));
        }
    }
    if (keep_internal) {
        for (int li = 0; li < static_cast<int>(g.links.size()); ++li) {
            auto [a, b] = g.links[li];
            if (gone[a] && gone[b]) out.isolated.push_back({end_sid[{li, 0}], end_sid[{li, 1}]});
        }
    }
    out.normalize();
    return out;
}

Multipole induced_submultipole(const Multipole& g, const std::vector<int>& vs,
                               std::vector<int>* boundary_links) {
    std::vector<int> newid(g.vertex_count, -1);
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    int n = 0;
    for (int v : sorted) {
        if (v < 0 || v >= g.vertex_count) throw InputError("unknown vertex");
        newid[v] = n++;
    }
    Multipole out;
    out.vertex_count = n;
    Connector c{"S", true, {}};
    if (boundary_links) boundary_links->clear();
    int k = 0;
    for (int li = 0; li < static_cast<int>(g.links.size()); ++li) {
        auto [a, b] = g.links[li];
        bool ia = newid[a] >= 0, ib = newid[b] >= 0;
        if (ia && ib) {
            out.links.push_back({newid[a], newid[b]});
        } else if (ia || ib) {
            out.dangling.push_back({ia ? newid[a] : newid[b], k});
            c.sids.push_back(k++);
            if (boundary_links) boundary_links->push_back(li);
        }
    }
    for (auto [v, s] : g.dangling) {
        if (newid[v] < 0) continue;
        out.dangling.push_back({newid[v], k});
        c.sids.push_back(k++);
        if (boundary_links) boundary_links->push_back(-1);
    }
    if (!c.sids.empty()) out.connectors.push_back(std::move(c));
    out.normalize();
    return out;
}

std::vector<int> components(const Multipole& m, int* count) {
    std::vector<int> comp(m.vertex_count, -1);
    auto adj = adjacency(m);
    int c = 0;
    for (int s = 0; s < m.vertex_count; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool is_connected(const Multipole& m) {
    int c = 0;
    components(m, &c);
    return c <= 1;
}

std::pair<Multipole, Multipole> cut_along(const Multipole& g,
                                          const std::vector<std::array<int, 2>>& edges) {
    if (!g.is_graph()) throw InputError("cut_along expects a 0-pole");
    if (!is_connected(g)) throw InputError("cut_along expects a connected graph");
    std::vector<int> idx = link_indices_for(g, edges);
    std::set<int> cut(idx.begin(), idx.end());
    Multipole rest = g;
    rest.links.clear();
    for (int i = 0; i < static_cast<int>(g.links.size()); ++i)
        if (!cut.count(i)) rest.links.push_back(g.links[i]);
    int cc = 0;
    auto comp = components(rest, &cc);
    if (cc < 2) throw InputError("edge set does not disconnect the graph");
    if (cc > 2) throw InputError("edge set leaves more than two components");
    for (int i : idx) {
        auto [a, b] = g.links[i];
        if (comp[a] == comp[b]) throw InputError("cut edge with both ends on one side");
    }
    int first = comp[0];
    std::pair<Multipole, Multipole> out;
    for (int side = 0; side < 2; ++side) {
        bool want_first = side == 0;
        std::vector<int> newid(g.vertex_count, -1);
        int n = 0;
        for (int v = 0; v < g.vertex_count; ++v)
            if ((comp[v] == first) == want_first) newid[v] = n++;
        Multipole m;
        m.vertex_count = n;
        for (const auto& l : rest.links)
            if (newid[l[0]] >= 0) m.links.push_back({newid[l[0]], newid[l[1]]});
        Connector c{"S", true, {}};
        for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
            auto [a, b] = g.links[idx[j]];
            int v = newid[a] >= 0 ? newid[a] : newid[b];
            m.dangling.push_back({v, j});
            c.sids.push_back(j);
        }
        m.connectors.push_back(std::move(c));
        m.normalize();
        (side == 0 ? out.first : out.second) = std::move(m);
    }
    return out;
}

Multipole relabel_semiedges(const Multipole& m, const std::vector<int>& order) {
    int k = m.semiedge_count();
    if (static_cast<int>(order.size()) != k) throw InputError("relabel needs one entry per semiedge");
    std::vector<int> inv(k, -1);
    for (int i = 0; i < k; ++i) {
        if (order[i] < 0 || order[i] >= k || inv[order[i]] >= 0)
            throw InputError("relabel order is not a permutation");
        inv[order[i]] = i;
    }
    Multipole out = m;
    for (auto& d : out.dangling) d[1] = inv[d[1]];
    for (auto& i : out.isolated) {
        i[0] = inv[i[0]];
        i[1] = inv[i[1]];
    }
    for (auto& c : out.connectors)
        for (int& s : c.sids) s = inv[s];
    out.normalize();
    return out;
}

Multipole semiedges_in_connector_order(const Multipole& m) {
    std::vector<int> order;
    for (const auto& c : m.connectors) order.insert(order.end(), c.sids.begin(), c.sids.end());
    return relabel_semiedges(m, order);
}

Multipole with_connectors(const Multipole& m, std::vector<Connector> cs) {
    Multipole out = m;
    out.connectors = std::move(cs);
    out.validate();
    return out;
}

Multipole rename_connector(const Multipole& m, const std::string& from, const std::string& to) {
    Multipole out = m;
    if (from != to && m.has_connector(to)) throw InputError("connector " + to + " exists");
    out.connectors[m.connector_index(from)].name = to;
    return out;
}

Multipole merge_connectors(const Multipole& m, const std::vector<std::string>& names,
                           const std::string& merged, bool ordered) {
    Connector c{merged, ordered, {}};
    std::set<std::string> drop(names.begin(), names.end());
    for (const auto& n : names) {
        const auto& src = m.connector(n);
        c.sids.insert(c.sids.end(), src.sids.begin(), src.sids.end());
    }
    Multipole out = m;
    out.connectors.clear();
    bool placed = false;
    for (const auto& x : m.connectors) {
        if (drop.count(x.name)) {
            if (!placed) out.connectors.push_back(c);
            placed = true;
        } else {
            if (x.name == merged) throw InputError("connector " + merged + " exists");
            out.connectors.push_back(x);
        }
    }
    return out;
}

Multipole split_connector(const Multipole& m, const std::vector<int>& sids, const std::string& name,
                          bool ordered) {
    std::set<int> take(sids.begin(), sids.end());
    Multipole out = m;
    out.connectors.clear();
    for (const auto& c : m.connectors) {
        Connector nc{c.name, c.ordered, {}};
        for (int s : c.sids)
            if (!take.count(s)) nc.sids.push_back(s);
        if (!nc.sids.empty()) out.connectors.push_back(std::move(nc));
    }
    if (out.has_connector(name)) throw InputError("connector " + name + " exists");
    out.connectors.push_back({name, ordered, sids});
    out.validate();
    return out;
}

Multipole add_vertex_on(const Multipole& m, const std::array<int, 3>& sids) {
    Multipole out = m;
    int w = out.vertex_count++;
    int k = m.semiedge_count();
    for (int i = 0; i < 3; ++i) out.dangling.push_back({w, k + i});
    out.connectors.push_back({"\x01tmp", false, {k, k + 1, k + 2}});
    return join_pairs(out, {{sids[0], k}, {sids[1], k + 1}, {sids[2], k + 2}});
}

Multipole add_vertex_with_tail(const Multipole& m, const std::array<int, 2>& sids,
                               const std::string& name) {
    if (m.has_connector(name)) throw InputError("connector " + name + " exists");
    Multipole out = m;
    int w = out.vertex_count++;
    int k = m.semiedge_count();
    for (int i = 0; i < 3; ++i) out.dangling.push_back({w, k + i});
    out.connectors.push_back({"\x01tmp", false, {k, k + 1}});
    out.connectors.push_back({name, true, {k + 2}});
    return join_pairs(out, {{sids[0], k}, {sids[1], k + 1}});
}

Multipole subdivide_link(const Multipole& m, int link_index, const std::string& name, int* vertex) {
    if (link_index < 0 || link_index >= static_cast<int>(m.links.size()))
        throw InputError("edge not present");
    if (m.has_connector(name)) throw InputError("connector " + name + " exists");
    Multipole out = m;
    auto [u, v] = m.links[link_index];
    out.links.erase(out.links.begin() + link_index);
    int w = out.vertex_count++;
    out.links.push_back({u, w});
    out.links.push_back({v, w});
    int k = m.semiedge_count();
    out.dangling.push_back({w, k});
    out.connectors.push_back({name, true, {k}});
    out.normalize();
    if (vertex) *vertex = w;
    return out;
}

std::string to_text(const Multipole& m) {
    if (m.free_loops) throw InputError("free loops cannot be serialised");
    Multipole c = m;
    c.normalize();
    std::ostringstream os;
    os << "MP v=" << c.vertex_count << " s=" << c.semiedge_count() << "\n";
    for (int v = 0; v < c.vertex_count; ++v) os << "V " << v << "\n";
    for (auto [u, v] : c.links) os << "L " << u << " " << v << "\n";
    for (auto [v, s] : c.dangling) os << "D " << v << " " << s << "\n";
    for (auto [s, t] : c.isolated) os << "I " << s << " " << t << "\n";
    for (const auto& k : c.connectors) {
        os << "C " << k.name << " " << (k.ordered ? "ordered" : "unordered");
        for (int s : k.sids) os << " " << s;
        os << "\n";
    }
    return os.str();
}

Multipole from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Multipole m;
    bool header = false;
    int declared_v = -1, declared_s = -1, lineno = 0;
    std::set<int> vids;
    auto fail = [&](const std::string& why) {
        throw InputError("line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (!header) {
            if (tag != "MP") fail("expected MP header");
            std::string a, b;
            ls >> a >> b;
            if (a.rfind("v=", 0) != 0 || b.rfind("s=", 0) != 0) fail("malformed header");
            try {
                declared_v = std::stoi(a.substr(2));
                declared_s = std::stoi(b.substr(2));
            } catch (const std::exception&) {
                fail("malformed header");
            }
            header = true;
            continue;
        }
        auto read_int = [&]() {
            int x;
            if (!(ls >> x)) fail("expected integer");
            return x;
        };
        if (tag == "V") {
            vids.insert(read_int());
        } else if (tag == "L") {
            int u = read_int(), v = read_int();
            m.links.push_back({u, v});
        } else if (tag == "D") {
            int v = read_int(), s = read_int();
            m.dangling.push_back({v, s});
        } else if (tag == "I") {
            int s = read_int(), t = read_int();
            m.isolated.push_back({s, t});
        } else if (tag == "C") {
            Connector c;
            std::string mode;
            if (!(ls >> c.name >> mode)) fail("malformed connector");
            if (mode == "ordered") c.ordered = true;
            else if (mode != "unordered") fail("connector mode must be ordered or unordered");
            int s;
            while (ls >> s) c.sids.push_back(s);
            if (!ls.eof()) fail("malformed connector member");
            m.connectors.push_back(std::move(c));
        } else {
            fail("unknown record " + tag);
        }
    }
    if (!header) throw InputError("missing MP header");
    m.vertex_count = declared_v;
    if (static_cast<int>(vids.size()) != declared_v ||
        (declared_v > 0 && (*vids.begin() != 0 || *vids.rbegin() != declared_v - 1)))
        throw InputError("vertex ids must be exactly 0..v-1");
    if (m.semiedge_count() != declared_s) throw InputError("semiedge count differs from header");
    m.normalize();
    m.validate();
    return m;
}

std::string to_graph6(const Multipole& g) {
    if (!g.is_graph()) throw InputError("graph6 needs a 0-pole");
    int n = g.vertex_count;
    std::set<std::pair<int, int>> es;
    for (auto [u, v] : g.links) {
        if (u == v) throw InputError("graph6 cannot encode loops");
        if (!es.insert({std::min(u, v), std::max(u, v)}).second)
            throw InputError("graph6 cannot encode parallel edges");
    }
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n < 258048) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw InputError("graph too large for graph6");
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (es.count({i, j}) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Multipole from_graph6(const std::string& raw) {
    std::string s = raw;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw InputError("empty graph6 string");
    for (char ch : s)
        if (ch < 63 || ch > 126) throw InputError("invalid graph6 byte");
    std::size_t pos = 0;
    int n;
    if (s[0] != 126) {
        n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() < 4 || s[1] == 126) throw InputError("unsupported graph6 size prefix");
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    }
    std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() - pos != need) throw InputError("graph6 length does not match order");
    Multipole g;
    g.vertex_count = n;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[pos + bit / 6] - 63;
            if (byte >> (5 - bit % 6) & 1) g.links.push_back({i, j});
        }
    g.normalize();
    std::vector<int> deg(n, 0);
    for (auto [u, v] : g.links) ++deg[u], ++deg[v];
    for (int v = 0; v < n; ++v)
        if (deg[v] != 3)
            throw InputError("graph is not cubic (vertex " + std::to_string(v) + " has degree " +
                             std::to_string(deg[v]) + ")");
    return g;
}

}  // namespace snarkmorph
