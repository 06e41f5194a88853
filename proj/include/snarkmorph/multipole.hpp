#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace snarkmorph {

// Malformed input, bad arguments, violated preconditions.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed result contradicted an independent check.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by analysis on a multipole containing an edge with no vertex at
// either end that closed onto itself.
struct FreeLoopError : InputError {
    using InputError::InputError;
};

struct Connector {
    std::string name;
    bool ordered = false;
    std::vector<int> sids;

    int arity() const { return static_cast<int>(sids.size()); }
    bool operator==(const Connector& o) const = default;
};

// Cubic multipole. Vertices are 0..vertex_count-1, semiedges 0..k-1.
// Links may repeat (parallel edges) and may be loops (u == v).
struct Multipole {
    int vertex_count = 0;
    std::vector<std::array<int, 2>> links;     // u <= v
    std::vector<std::array<int, 2>> dangling;  // (vertex, sid)
    std::vector<std::array<int, 2>> isolated;  // (sid, sid), first < second
    std::vector<Connector> connectors;
    int free_loops = 0;

    int order() const { return vertex_count; }
    int semiedge_count() const;
    bool is_graph() const { return semiedge_count() == 0; }

    // Throws InputError describing the first broken invariant.
    void validate() const;
    // Sorts links, dangling and isolated edges; connectors keep their order.
    void normalize();

    const Connector& connector(const std::string& name) const;
    int connector_index(const std::string& name) const;
    bool has_connector(const std::string& name) const;

    bool operator==(const Multipole& o) const = default;
};

// Where a semiedge sits: on a vertex, or at one end of an isolated edge.
struct SemiedgeEnd {
    bool dangling = false;
    int vertex = -1;   // when dangling
    int partner = -1;  // when isolated
};

std::vector<SemiedgeEnd> semiedge_ends(const Multipole& m);

// Neighbour lists; a loop contributes the vertex twice.
std::vector<std::vector<int>> adjacency(const Multipole& m);
std::vector<std::vector<int>> link_incidence(const Multipole& m);

Multipole make_graph(int n, const std::vector<std::array<int, 2>>& edges);

// Disjoint union; connector names of a and b get the given prefixes.
Multipole disjoint_union(const Multipole& a, const Multipole& b,
                         const std::string& prefix_a = "",
                         const std::string& prefix_b = "");

Multipole junction_semiedges(const Multipole& m, int s1, int s2);
// Several junctions at once; sids refer to m. Survivors keep their relative
// order.
Multipole junction_pairs(const Multipole& m, const std::vector<std::array<int, 2>>& pairs);

// Joins connector a with connector b of the same multipole,
// pairing a.sids[i] with b.sids[perm[i]].
Multipole join_connectors(const Multipole& m, const std::string& a, const std::string& b,
                          const std::optional<std::vector<int>>& perm = std::nullopt);

// Junction of m's connector a with n's connector b.
// Names of n's connectors that clash with m's get prefix "n.".
Multipole junction_connectors(const Multipole& m, const std::string& a, const Multipole& n,
                              const std::string& b,
                              const std::optional<std::vector<int>>& perm = std::nullopt);

// Each listed link (index into links) turns into two dangling edges, grouped
// in a connector "e<u>_<v>" in old vertex ids.
Multipole sever_links(const Multipole& g, const std::vector<int>& link_indices);
Multipole sever_edges(const Multipole& g, const std::vector<std::array<int, 2>>& edges);

// Deletes vertices. Ends pointing at a removed vertex x go to connector "v<x>"
// (old id). Links between two removed vertices stay as isolated edges unless
// keep_internal is false.
Multipole remove_vertices(const Multipole& g, const std::vector<int>& vs,
                          bool keep_internal = true);

// Keeps only the listed vertices; every other edge end becomes a semiedge in a
// single ordered connector "S" in order of link index.
Multipole induced_submultipole(const Multipole& g, const std::vector<int>& vs,
                               std::vector<int>* boundary_links = nullptr);

// Splits a connected 0-pole along an edge cut into its two sides. Side i
// carries an ordered connector "S" whose j-th semiedge is the end of the j-th
// cut edge, so junction_connectors(first,"S",second,"S") rebuilds g.
std::pair<Multipole, Multipole> cut_along(const Multipole& g,
                                          const std::vector<std::array<int, 2>>& edges);

// new sid i is old sid order[i]
Multipole relabel_semiedges(const Multipole& m, const std::vector<int>& order);
// Renumbers semiedges so that they follow the connectors' listed order.
Multipole semiedges_in_connector_order(const Multipole& m);
// Replaces the connector partition; each entry is (name, ordered, sids).
Multipole with_connectors(const Multipole& m, std::vector<Connector> cs);
Multipole rename_connector(const Multipole& m, const std::string& from, const std::string& to);
// Merges connectors into one named connector, concatenating members.
Multipole merge_connectors(const Multipole& m, const std::vector<std::string>& names,
                           const std::string& merged, bool ordered = true);
// Splits semiedges out of their connectors into a new connector.
Multipole split_connector(const Multipole& m, const std::vector<int>& sids,
                          const std::string& name, bool ordered = true);

// Adds a vertex on three semiedges (joined via new dangling edges).
Multipole add_vertex_on(const Multipole& m, const std::array<int, 3>& sids);
// Adds a vertex on two semiedges; its third edge becomes a new semiedge in
// connector `name`.
Multipole add_vertex_with_tail(const Multipole& m, const std::array<int, 2>& sids,
                               const std::string& name);

// Subdivides a link with a new vertex whose third edge is a semiedge in
// connector `name`. Returns the new vertex id through `vertex`.
Multipole subdivide_link(const Multipole& m, int link_index, const std::string& name,
                         int* vertex = nullptr);

// Link index of the first link equal to {u,v}; -1 if absent.
int find_link(const Multipole& m, int u, int v);
bool is_connected(const Multipole& m);
std::vector<int> components(const Multipole& m, int* count);

// Interchange text format.
std::string to_text(const Multipole& m);
Multipole from_text(const std::string& text);

// graph6 for simple cubic 0-poles.
std::string to_graph6(const Multipole& g);
Multipole from_graph6(const std::string& line);

}  // namespace snarkmorph
