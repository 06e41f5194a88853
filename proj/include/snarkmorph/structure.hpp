#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "snarkmorph/multipole.hpp"

namespace snarkmorph {

inline constexpr int kInfinite = std::numeric_limits<int>::max();

// Shortest cycle among links; a loop counts 1, a digon 2.
int girth(const Multipole& g);

struct CyclicConnectivity {
    int value = 0;
    bool infinite = false;  // no two vertex-disjoint cycles
};

// Smallest edge cut leaving two components that both contain a cycle.
CyclicConnectivity cyclic_connectivity(const Multipole& g);

// Every edge cut of exactly k links whose removal leaves two components,
// each containing a cycle. Link indices, ascending.
std::vector<std::vector<int>> cycle_separating_cuts(const Multipole& g, int k);

// Vertex sequences of all 5-cycles, each listed once, starting at its
// smallest vertex.
std::vector<std::vector<int>> five_cycles(const Multipole& g);

enum class CatalogCluster {
    pentagon,
    dyad,
    triad,
    quasitriad,
    double_pentagon,
    triple_pentagon,
    tricell
};
std::string to_string(CatalogCluster c);
std::vector<CatalogCluster> all_catalog_clusters();
// Reference multipole with its natural connectors.
const Multipole& catalog_multipole(CatalogCluster c);

struct Cluster {
    std::vector<int> vertices;
    Multipole pole;  // induced, boundary as one ordered connector "S"
    int five_cycle_count = 0;
    std::optional<CatalogCluster> catalog;
};

struct ClusterReport {
    int order = 0;
    int girth = 0;
    CyclicConnectivity cc;
    std::vector<Cluster> clusters;
    int uncovered_vertices = 0;
};

ClusterReport five_cycle_clusters(const Multipole& g);
std::string to_json(const ClusterReport& r);

// Identifies a cluster against the catalog, connectors ignored.
std::optional<CatalogCluster> match_catalog(const Multipole& pole);

struct CanonicalForm {
    std::vector<std::uint32_t> code;
    std::vector<int> relabel;  // vertex -> canonical position
    bool respects_connectors = true;
    std::uint64_t automorphisms = 0;

    bool operator==(const CanonicalForm& o) const { return code == o.code; }
};

// Connector arities (and positions, for ordered connectors) act as colours;
// connector names are ignored.
CanonicalForm canonical_form(const Multipole& m, bool respect_connectors = true);
bool isomorphic(const Multipole& a, const Multipole& b, bool respect_connectors = true);
std::uint64_t automorphism_count(const Multipole& m, bool respect_connectors = true);
std::string code_string(const CanonicalForm& f);

struct Embedding {
    std::vector<int> vertex_map;              // pattern vertex -> host vertex
    std::vector<std::array<int, 2>> cut;      // per pattern sid: (inside, outside)
};

// Induced copies of a connected pattern without isolated edges inside a
// 0-pole. One embedding per image vertex set.
std::vector<Embedding> find_submultipole(const Multipole& host, const Multipole& pattern,
                                         bool first_only = false);

}  // namespace snarkmorph
