#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "snarkmorph/multipole.hpp"

namespace snarkmorph {

// Nonzero elements of Z2 x Z2: a = 1, b = 2, c = 3. Addition is xor.
using Klein = std::uint8_t;
inline constexpr Klein kA = 1, kB = 2, kC = 3;

char klein_char(Klein x);
Klein klein_from_char(char ch);

using ColourTuple = std::vector<Klein>;

std::string tuple_string(const ColourTuple& t);
ColourTuple tuple_from_string(const std::string& s);

// True iff the three colour counts all have the parity of the length.
bool parity_check(const ColourTuple& t);

// Edges of a multipole in the order the engine uses: links, then dangling
// edges, then isolated edges.
struct EdgeModel {
    int vertex_count = 0;
    int edge_count = 0;
    std::vector<std::array<int, 3>> incident;  // per vertex
    std::vector<std::array<int, 2>> ends;      // per edge, vertex or -1
    std::vector<int> semiedge_edge;            // sid -> edge
    bool has_loop = false;

    explicit EdgeModel(const Multipole& m);
};

// Set of boundary tuples, positions in ascending semiedge id.
// Tuples are packed two bits per position, first position most significant,
// so numeric order equals lexicographic order of the a/b/c strings.
class ColouringSet {
public:
    ColouringSet() = default;
    explicit ColouringSet(int k) : k_(k) {}
    ColouringSet(int k, std::vector<std::uint64_t> codes);

    static std::uint64_t pack(const ColourTuple& t);
    ColourTuple unpack(std::uint64_t code) const;

    int length() const { return k_; }
    std::size_t size() const { return codes_.size(); }
    bool empty() const { return codes_.empty(); }
    bool contains(const ColourTuple& t) const;
    const std::vector<std::uint64_t>& codes() const { return codes_; }
    std::vector<ColourTuple> tuples() const;

    // new position i takes old position order[i]
    ColouringSet permuted(const std::vector<int>& order) const;
    ColouringSet intersect(const ColouringSet& o) const;
    bool subset_of(const ColouringSet& o) const;

    // One tuple per line, sorted.
    std::string dump() const;

    bool operator==(const ColouringSet& o) const = default;

private:
    int k_ = 0;
    std::vector<std::uint64_t> codes_;
};

ColouringSet colouring_set_from(int k, const std::function<bool(const ColourTuple&)>& pred);

enum class SetRelation { equal, x_subset, y_subset, disjoint, incomparable };
std::string to_string(SetRelation r);
SetRelation compare_sets(const ColouringSet& x, const ColouringSet& y);

// Colour of every edge of the EdgeModel, plus the boundary tuple.
struct Colouring {
    std::vector<Klein> edge;
    ColourTuple boundary;
};

bool is_colourable(const Multipole& m);
std::uint64_t count_colourings(const Multipole& m);
// Calls visit for each colouring in a fixed order; stop by returning false.
void enumerate_colourings(const Multipole& m, const std::function<bool(const Colouring&)>& visit);
ColouringSet colouring_set(const Multipole& m);

// Sum of the tuple's colours over a connector (0 allowed).
Klein flow_through(const Multipole& m, const ColourTuple& t, const std::string& connector);

enum class ConnectorKind { proper, improper, mixed, vacuous };
std::string to_string(ConnectorKind k);
ConnectorKind classify_connector(const Multipole& m, const std::string& connector);
ConnectorKind classify_connector(const Multipole& m, const ColouringSet& col,
                                 const std::string& connector);

// Closed-form sets, positions in the order written.
ColouringSet negator_closed_set();        // (i1,i2,o1,o2,r)
ColouringSet negator_half_set(bool input_equal);
ColouringSet proper23_closed_set();       // (b1,b2,c1,c2,c3)
ColouringSet p2_closed_set();             // (i1,i2,o1,o2,r)
ColouringSet mev_closed_set();            // (b1,b2,c1,c2,c3)
ColouringSet v4_closed_set();             // (a1,b1,a2,b2,a3,b3)
ColouringSet m7_closed_set();             // (e1,e2,i1,i2,o1,o2,r), e1-e2 isolated
ColouringSet c5_closed_set();             // e0..e4 in cyclic order

// Positions of a multipole's semiedges listed connector by connector.
std::vector<int> connector_positions(const Multipole& m, const std::vector<std::string>& names);
// Col(m) with positions in the given connector order.
ColouringSet colouring_set_in(const Multipole& m, const std::vector<std::string>& names);

enum class NegatorVerdict { perfect, semiperfect, uncolourable, not_a_negator };
enum class Proper23Verdict { perfect, imperfect_proper, not_proper, uncolourable };
enum class SuperpentagonVerdict { perfect, uncolourable, not_superpentagon };
std::string to_string(NegatorVerdict v);
std::string to_string(Proper23Verdict v);
std::string to_string(SuperpentagonVerdict v);

// Negators carry 2-, 2- and 1-connectors in that order (I, O, R).
NegatorVerdict is_perfect_negator(const Multipole& n);
NegatorVerdict negator_verdict(const ColouringSet& col_iorr);
// (2,3)-poles carry the 2-connector first.
Proper23Verdict is_perfect_proper23(const Multipole& t);
Proper23Verdict proper23_verdict(const ColouringSet& col_bc);
bool is_even_222(const Multipole& h);
// cyclic_order lists the five sids around the pentagon.
SuperpentagonVerdict is_superpentagon(const Multipole& m, const std::vector<int>& cyclic_order);

// True iff joining m and n along the given sids (m_sids[i] with n_sids[i])
// can be coloured, decided from the two colouring sets.
bool sets_compatible(const ColouringSet& a, const ColouringSet& b);

}  // namespace snarkmorph
