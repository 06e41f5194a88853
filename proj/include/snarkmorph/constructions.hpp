#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snarkmorph/multipole.hpp"
#include "snarkmorph/tait.hpp"

namespace snarkmorph {

// ---- base graphs and poles ------------------------------------------------

Multipole petersen();
Multipole dumbbell();
Multipole k4();
// Isaacs (3,3)-pole Y with ordered I = (i1,i2,i3), O = (o1,o2,o3);
// {i1,o2}, {i2,o1}, {i3,o3} sit on common vertices.
Multipole y_pole();
Multipole y_chain(int k);       // Y_k(I, O)
Multipole flower_snark(int n);  // J_n, n >= 3 odd

// Neg(G; u, v): u and v need exactly one common neighbour w. Connectors
// I, O (from u, v) and r (from w); sids follow (i1,i2,o1,o2,r).
Multipole negator_from(const Multipole& g, int u, int v);
// Remove v and sever edge e; connectors B (severed edge) and C (from v).
Multipole proper23_from(const Multipole& g, int v, std::array<int, 2> e);
// Remove non-adjacent u, v; connectors I and O.
Multipole proper33_from(const Multipole& g, int u, int v);
// Remove v and its neighbours; S1, S2, S3 from the neighbours in id order.
Multipole even222_from(const Multipole& g, int v);

// catalog clusters
Multipole pentagon();   // ordered connector P = (e0..e4) around the cycle
Multipole dyad();
Multipole triad();
Multipole quasitriad();
Multipole double_pentagon();  // A, B from u, v; C severed
Multipole triple_pentagon();  // A, B, C severed edges
Multipole tricell();

// small poles with closed-form colouring sets
Multipole c5_pole();  // same as pentagon()
Multipole pentagram_pole();  // pentagon with P = (e0,e2,e4,e1,e3)
Multipole p2_pole();  // I, O, r
Multipole mev_pole(); // B isolated edge, C one vertex
Multipole v4_pole();  // S1, S2, S3
Multipole m7_pole();  // E isolated edge, I, O, r
Multipole m8();       // Petersen minus two non-adjacent vertices
Multipole hexagon();  // 6-cycle, opposite pairs S1, S2, S3
Multipole m11(int vertex, std::array<int, 2> e12, std::array<int, 2> e34);
Multipole m11();      // the instance used by CLASS_32A
// M_24 of Class 36-A: I = (r1,r2,r3), O = (e3,e1,e2), both ordered.
Multipole m24(const std::vector<Multipole>& negators = {});

// ---- blueprints -----------------------------------------------------------

struct Port {
    int part = -1;
    int sid = -1;
};

// Parts, junctions between their semiedges, and the connectors left over.
// realize() assembles the multipole; abstract_satisfiable() solves the same
// wiring with each part replaced by its declared set of boundary tuples.
class Blueprint {
public:
    struct Part {
        std::string name;
        Multipole pole;
        std::optional<ColouringSet> abstract_set;  // over the part's sids
        std::string abstract_name;
    };

    int add(std::string name, Multipole pole);
    int add(std::string name, Multipole pole, ColouringSet abstract_set, std::string abstract_name);
    int add_vertex(std::string name);

    Port port(int part, const std::string& connector, int index) const;
    std::vector<Port> ports(int part, const std::string& connector) const;

    void join(Port a, Port b);
    // Joins connector a of part pa with connector b of part pb,
    // a[i] with b[perm[i]].
    void join(int pa, const std::string& a, int pb, const std::string& b,
              std::vector<int> perm = {});
    void expose(std::string name, bool ordered, std::vector<Port> ports);

    const std::vector<Part>& parts() const { return parts_; }
    const std::vector<std::pair<Port, Port>>& joins() const { return joins_; }

    // first vertex id of each part in the realized multipole
    Multipole realize(std::vector<int>* vertex_offset = nullptr) const;
    // Parts without a declared set use their own colouring set.
    bool abstract_satisfiable() const;

private:
    std::vector<Part> parts_;
    std::vector<std::pair<Port, Port>> joins_;
    std::vector<Connector> outer_;  // sids encoded as global port ids
    std::vector<int> sid_base_;
    int total_sids_ = 0;

    int global(Port p) const;
};

// Abstract sets for the replayed arguments.
ColouringSet even222_set();            // (s1a,s1b,s2a,s2b,s3a,s3b)
ColouringSet proper33_set();           // (i1,i2,i3,o1,o2,o3)
ColouringSet no_nonzero_a_zero_c_set();  // (A,B,C) pairs
ColouringSet no_two_zero_set();        // (A,B,C) pairs, A and B not both zero
ColouringSet j3_closure_set();         // M11: not (e1 = e2 and e3 = e4)

// ---- families -------------------------------------------------------------

struct FamilySpec {
    std::string family;
    std::vector<Multipole> parts;  // defaults to dyads/triads/... per family
    int n = 0;                     // J_n, Y_k, Blanusa type, CLASS_36B_GEN k
    int alignment = 0;             // junction variant where the family has several
};

std::vector<std::string> family_names();
// Families assembled from parts have blueprints; base graphs do not.
bool has_blueprint(const std::string& family);
Blueprint blueprint(const FamilySpec& spec);
Multipole build(const FamilySpec& spec);
// Parses "NNN", "NNN:dyad,dyad,dyad", "FLOWER_J:7", "BLANUSA:2" ...
FamilySpec parse_family(const std::string& text);

// Part names accepted in FamilySpec strings: dyad, triad, hexagon,
// dp, tp, tc, m8, negJ5, negJ7.
Multipole named_part(const std::string& name);

struct ProofTrace {
    std::string family;
    int order = 0;
    bool oracle_uncolourable = false;
    bool premises_hold = false;
    bool argument_unsatisfiable = false;
    std::vector<std::string> steps;

    bool agree() const { return oracle_uncolourable && premises_hold && argument_unsatisfiable; }
};

ProofTrace verify_family_uncolourable(const FamilySpec& spec);

// G.H on independent edges e = ab, f = cd of g and adjacent u, v of h.
// The four new edges are a-a', b-b', c-c', d-d'.
struct DotProduct {
    Multipole graph;
    std::array<std::array<int, 2>, 4> principal_cut;  // in result ids
};
DotProduct dot_product(const Multipole& g, std::array<int, 2> e, std::array<int, 2> f,
                       const Multipole& h, int u, int v);
Multipole blanusa(int type);

struct Decomposition {
    Multipole g1;                      // side that gets its edges e, f back
    Multipole g2;                      // side that gets u, v back
    std::array<int, 2> e, f;           // in g1
    int u = -1, v = -1;                // in g2
};
// Every way of completing the two sides of a 4-edge cut into snarks whose dot
// product rebuilds g with `cut` as principal cut.
std::vector<Decomposition> decompose_4cut(const Multipole& g,
                                          const std::vector<std::array<int, 2>>& cut);
// Repeatedly splits along cycle-separating 4-cuts until no factor has one.
std::vector<Multipole> dot_factors(const Multipole& g);

// Replaces one side of an edge cut by `replacement`, whose semiedges in sid
// order are attached to the outside ends of `cut` in order. Requires
// Col(replacement) to be contained in Col(removed side) under that alignment.
Multipole substitute(const Multipole& g, const std::vector<std::array<int, 2>>& cut,
                     const std::vector<int>& removed_side, const Multipole& replacement);

// Isaacs' double star: J_5 with its 5-cycle replaced by the J_5 superpentagon.
Multipole double_star();
// J_5 minus its 5-cycle, semiedges reordered (e0,e2,e4,e1,e3).
Multipole j5_superpentagon();
// I-extensions of the Loupekine snarks on a removable pair giving a cyclically
// 5-connected snark of order 24; pairwise non-isomorphic.
std::vector<Multipole> reducible_24();
// The two Loupekine snarks (NNN of dyads, junction variants).
std::vector<Multipole> loupekine_snarks();

}  // namespace snarkmorph
