#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "snarkmorph/multipole.hpp"
#include "snarkmorph/tait.hpp"

namespace snarkmorph {

enum class PairKind { vertex_pair, edge_pair };

// A pair is removable when deleting it leaves an uncolourable graph.
struct PairVerdict {
    PairKind kind = PairKind::vertex_pair;
    std::array<int, 2> vertices{};                 // vertex pairs
    std::array<std::array<int, 2>, 2> edges{};     // edge pairs
    bool removable = false;
    std::optional<bool> essential;                 // edge pairs only
    std::uint64_t colourings = 0;                  // of the reduced object
};

// G - {u, v}; an edge uv stays as an isolated edge.
PairVerdict removable_vertex_pair(const Multipole& g, int u, int v);
PairVerdict removable_edge_pair(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f);
// Same predicates without colouring counts.
bool vertex_pair_removable(const Multipole& g, int u, int v);
bool edge_pair_removable(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f);

// Delete e and suppress its ends.
Multipole reduce_edge(const Multipole& g, std::array<int, 2> e);
// Subdivide e1 and e2 and join the two new vertices. e1 == e2 gives a digon.
Multipole extend_edge(const Multipole& g, std::array<int, 2> e1, std::array<int, 2> e2);

enum class Grade { not_snark, snark_trivial, critical_strict, bicritical, noncritical_snark };
std::string to_string(Grade g);

struct CriticalityGrade {
    Grade grade = Grade::not_snark;
    // removable adjacent pair (noncritical) or removable non-adjacent pair
    // (strictly critical), smallest in lexicographic order
    std::optional<std::array<int, 2>> witness;
};

// snark_trivial: girth < 5 or cyclic connectivity < 4, both of which rule
// out criticality.
CriticalityGrade grade(const Multipole& g);
std::string to_json(const CriticalityGrade& c, const Multipole& g);
bool is_critical(const Multipole& g);
bool is_bicritical(const Multipole& g);

// Worker count for pair sweeps: SNARKMORPH_THREADS, else the hardware.
int worker_count();

PairVerdict essential_pair(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f);

// Every adjacent pair is non-removable except the ends of e and of f.
bool nearly_critical(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f);

struct NegatorProfile {
    NegatorVerdict verdict = NegatorVerdict::uncolourable;
    int w = -1;
    bool uw_removable = false;
    bool vw_removable = false;
};
// Throws VerificationError if the engine's verdict contradicts the
// characterisation by the pairs {u,w} and {v,w}.
NegatorProfile negator_profile(const Multipole& g, int u, int v);

enum class Feasibility { feasible, fails_bicritical, fails_i, fails_ii };
std::string to_string(Feasibility f);
Feasibility feasible_negator(const Multipole& g, int u, int v);

}  // namespace snarkmorph
