#include "snarkmorph/tait.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace snarkmorph {

char klein_char(Klein x) {
    switch (x) {
        case kA: return 'a';
        case kB: return 'b';
        case kC: return 'c';
        default: return '0';
    }
}

Klein klein_from_char(char ch) {
    switch (ch) {
        case 'a': return kA;
        case 'b': return kB;
        case 'c': return kC;
        default: throw InputError(std::string("not a colour: ") + ch);
    }
}

std::string tuple_string(const ColourTuple& t) {
    std::string s;
    for (Klein x : t) s.push_back(klein_char(x));
    return s;
}

ColourTuple tuple_from_string(const std::string& s) {
    ColourTuple t;
    for (char ch : s) t.push_back(klein_from_char(ch));
    return t;
}

bool parity_check(const ColourTuple& t) {
    int cnt[4] = {0, 0, 0, 0};
    for (Klein x : t) {
        if (x < 1 || x > 3) return false;
        ++cnt[x];
    }
    int k = static_cast<int>(t.size()) & 1;
    return (cnt[1] & 1) == k && (cnt[2] & 1) == k && (cnt[3] & 1) == k;
}

EdgeModel::EdgeModel(const Multipole& m) {
    if (m.free_loops) throw FreeLoopError("multipole contains a free loop");
    vertex_count = m.vertex_count;
    incident.assign(vertex_count, {-1, -1, -1});
    std::vector<int> fill(vertex_count, 0);
    auto attach = [&](int v, int e) {
        if (fill[v] >= 3) throw InputError("vertex with more than three edge ends");
        incident[v][fill[v]++] = e;
    };
    semiedge_edge.assign(m.semiedge_count(), -1);
    for (auto [u, v] : m.links) {
        int e = edge_count++;
        ends.push_back({u, v});
        attach(u, e);
        attach(v, e);
        if (u == v) has_loop = true;
    }
    for (auto [v, s] : m.dangling) {
        int e = edge_count++;
        ends.push_back({v, -1});
        attach(v, e);
        semiedge_edge[s] = e;
    }
    for (auto [s, t] : m.isolated) {
        int e = edge_count++;
        ends.push_back({-1, -1});
        semiedge_edge[s] = semiedge_edge[t] = e;
    }
    for (int v = 0; v < vertex_count; ++v)
        if (fill[v] != 3) throw InputError("vertex with fewer than three edge ends");
}

namespace {

inline int popcnt(unsigned x) { return __builtin_popcount(x); }
inline Klein lowest(unsigned dom) { return static_cast<Klein>(__builtin_ctz(dom) + 1); }
inline unsigned bit(Klein c) { return 1u << (c - 1); }

// Domain-propagating backtracking over Klein edge colours.
class Solver {
public:
    explicit Solver(const EdgeModel& em) : em_(em) {
        int m = em.edge_count;
        dom_.assign(m, 7);
        col_.assign(m, 0);
        comp_.assign(m, -1);
        // components over edges, in BFS order for locality
        for (int s = 0; s < m; ++s) {
            if (comp_[s] >= 0) continue;
            int c = static_cast<int>(members_.size());
            members_.push_back({});
            std::vector<int> queue{s};
            comp_[s] = c;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int e = queue[h];
                members_[c].push_back(e);
                for (int v : em.ends[e]) {
                    if (v < 0) continue;
                    for (int f : em.incident[v])
                        if (comp_[f] < 0) {
                            comp_[f] = c;
                            queue.push_back(f);
                        }
                }
            }
        }
        assigned_in_.assign(members_.size(), 0);
    }

    int components() const { return static_cast<int>(members_.size()); }
    int component_of(int e) const { return comp_[e]; }
    const std::vector<int>& members(int c) const { return members_[c]; }
    Klein colour(int e) const { return col_[e]; }
    unsigned domain(int e) const { return dom_[e]; }
    const std::vector<Klein>& colours() const { return col_; }

    std::size_t mark() const { return trail_.size(); }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [e, d, c] = trail_.back();
            trail_.pop_back();
            if (col_[e] && !c) --assigned_in_[comp_[e]];
            dom_[e] = d;
            col_[e] = c;
        }
    }

    // Assigns colour c to e and propagates; false on contradiction
    // (caller must undo to the mark taken before).
    bool assign(int e, Klein c) {
        if (em_.has_loop) return false;
        queue_.clear();
        if (!set_colour(e, c)) return false;
        for (std::size_t h = 0; h < queue_.size(); ++h) {
            int f = queue_[h];
            for (int v : em_.ends[f]) {
                if (v < 0) continue;
                if (!revise(v)) return false;
            }
        }
        return true;
    }

    // Existence of a completion inside component c.
    bool exists(int c) {
        int e = pick(c);
        if (e < 0) return true;
        unsigned d = dom_[e];
        if (assigned_in_[c] == 0) {
            d = bit(lowest(d));
        } else if (assigned_in_[c] == 1 && popcnt(d) == 2) {
            // the single coloured edge is fixed by the swap of the other two colours
            d = bit(lowest(d));
        }
        for (Klein x = 1; x <= 3; ++x) {
            if (!(d & bit(x))) continue;
            std::size_t mk = mark();
            if (assign(e, x) && exists(c)) {
                undo(mk);
                return true;
            }
            undo(mk);
        }
        return false;
    }

    std::uint64_t count(int c) {
        int e = pick(c);
        if (e < 0) return 1;
        std::uint64_t total = 0;
        unsigned d = dom_[e];
        for (Klein x = 1; x <= 3; ++x) {
            if (!(d & bit(x))) continue;
            std::size_t mk = mark();
            if (assign(e, x)) {
                std::uint64_t sub = count(c);
                if (__builtin_add_overflow(total, sub, &total))
                    throw VerificationError("colouring count overflows 64 bits");
            }
            undo(mk);
        }
        return total;
    }

    // Unassigned edge of component c with the smallest domain; -1 if none.
    int pick(int c) const {
        int best = -1, bd = 4;
        for (int e : members_[c]) {
            if (col_[e]) continue;
            int d = popcnt(dom_[e]);
            if (d < bd) {
                bd = d;
                best = e;
                if (d <= 1) break;
            }
        }
        return best;
    }

private:
    bool set_colour(int e, Klein c) {
        if (col_[e]) return col_[e] == c;
        if (!(dom_[e] & bit(c))) return false;
        trail_.push_back({e, dom_[e], col_[e]});
        dom_[e] = bit(c);
        col_[e] = c;
        ++assigned_in_[comp_[e]];
        queue_.push_back(e);
        return true;
    }

    bool restrict(int e, unsigned keep) {
        unsigned nd = dom_[e] & keep;
        if (nd == dom_[e]) return true;
        if (!nd) return false;
        if (popcnt(nd) == 1) return set_colour(e, lowest(nd));
        trail_.push_back({e, dom_[e], col_[e]});
        dom_[e] = nd;
        return true;
    }

    bool revise(int v) {
        const auto& inc = em_.incident[v];
        unsigned used = 0;
        int known = 0;
        for (int e : inc)
            if (col_[e]) {
                if (used & bit(col_[e])) return false;
                used |= bit(col_[e]);
                ++known;
            }
        if (known == 0) return true;
        for (int e : inc) {
            if (col_[e]) continue;
            if (!restrict(e, 7u & ~used)) return false;
        }
        return true;
    }

    struct Entry {
        int e;
        unsigned dom;
        Klein col;
    };

    const EdgeModel& em_;
    std::vector<unsigned> dom_;
    std::vector<Klein> col_;
    std::vector<int> comp_;
    std::vector<std::vector<int>> members_;
    std::vector<int> assigned_in_;
    std::vector<Entry> trail_;
    std::vector<int> queue_;
};

}  // namespace

ColouringSet::ColouringSet(int k, std::vector<std::uint64_t> codes) : k_(k), codes_(std::move(codes)) {
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

std::uint64_t ColouringSet::pack(const ColourTuple& t) {
    if (t.size() > 32) throw InputError("tuples longer than 32 are not supported");
    std::uint64_t code = 0;
    for (Klein x : t) code = (code << 2) | x;
    return code;
}

ColourTuple ColouringSet::unpack(std::uint64_t code) const {
    ColourTuple t(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        t[i] = static_cast<Klein>(code & 3);
        code >>= 2;
    }
    return t;
}

bool ColouringSet::contains(const ColourTuple& t) const {
    if (static_cast<int>(t.size()) != k_) return false;
    return std::binary_search(codes_.begin(), codes_.end(), pack(t));
}

std::vector<ColourTuple> ColouringSet::tuples() const {
    std::vector<ColourTuple> out;
    out.reserve(codes_.size());
    for (auto c : codes_) out.push_back(unpack(c));
    return out;
}

ColouringSet ColouringSet::permuted(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != k_) throw InputError("permutation length mismatch");
    std::vector<std::uint64_t> out;
    out.reserve(codes_.size());
    for (auto c : codes_) {
        ColourTuple t = unpack(c), u(k_);
        for (int i = 0; i < k_; ++i) u[i] = t[order[i]];
        out.push_back(pack(u));
    }
    return ColouringSet(k_, std::move(out));
}

ColouringSet ColouringSet::intersect(const ColouringSet& o) const {
    if (o.k_ != k_) throw InputError("colouring sets of different length");
    std::vector<std::uint64_t> out;
    std::set_intersection(codes_.begin(), codes_.end(), o.codes_.begin(), o.codes_.end(),
                          std::back_inserter(out));
    return ColouringSet(k_, std::move(out));
}

bool ColouringSet::subset_of(const ColouringSet& o) const {
    if (o.k_ != k_) throw InputError("colouring sets of different length");
    return std::includes(o.codes_.begin(), o.codes_.end(), codes_.begin(), codes_.end());
}

std::string ColouringSet::dump() const {
    std::string out;
    for (auto c : codes_) {
        out += tuple_string(unpack(c));
        out += '\n';
    }
    return out;
}

ColouringSet colouring_set_from(int k, const std::function<bool(const ColourTuple&)>& pred) {
    std::vector<std::uint64_t> codes;
    ColourTuple t(k, kA);
    while (true) {
        if (pred(t)) codes.push_back(ColouringSet::pack(t));
        int i = k - 1;
        while (i >= 0 && t[i] == kC) t[i--] = kA;
        if (i < 0) break;
        ++t[i];
    }
    return ColouringSet(k, std::move(codes));
}

std::string to_string(SetRelation r) {
    switch (r) {
        case SetRelation::equal: return "equal";
        case SetRelation::x_subset: return "x_subset";
        case SetRelation::y_subset: return "y_subset";
        case SetRelation::disjoint: return "disjoint";
        case SetRelation::incomparable: return "incomparable";
    }
    return "?";
}

SetRelation compare_sets(const ColouringSet& x, const ColouringSet& y) {
    if (x.length() != y.length()) throw InputError("colouring sets of different length");
    if (x == y) return SetRelation::equal;
    if (x.subset_of(y)) return SetRelation::x_subset;
    if (y.subset_of(x)) return SetRelation::y_subset;
    if (x.intersect(y).empty()) return SetRelation::disjoint;
    return SetRelation::incomparable;
}

bool is_colourable(const Multipole& m) {
    EdgeModel em(m);
    if (em.has_loop) return false;
    Solver s(em);
    for (int c = 0; c < s.components(); ++c)
        if (!s.exists(c)) return false;
    return true;
}

std::uint64_t count_colourings(const Multipole& m) {
    EdgeModel em(m);
    if (em.has_loop) return 0;
    Solver s(em);
    std::uint64_t total = 1;
    for (int c = 0; c < s.components(); ++c) {
        std::uint64_t x = s.count(c);
        if (__builtin_mul_overflow(total, x, &total))
            throw VerificationError("colouring count overflows 64 bits");
        if (!total) return 0;
    }
    return total;
}

namespace {

ColourTuple boundary_of(const EdgeModel& em, const std::vector<Klein>& col) {
    ColourTuple t(em.semiedge_edge.size());
    for (std::size_t s = 0; s < t.size(); ++s) t[s] = col[em.semiedge_edge[s]];
    return t;
}

bool enumerate_rec(Solver& s, const EdgeModel& em, int c,
                   const std::function<bool(const Colouring&)>& visit) {
    while (c < s.components() && s.pick(c) < 0) ++c;
    if (c == s.components()) {
        Colouring out{s.colours(), boundary_of(em, s.colours())};
        return visit(out);
    }
    int e = s.pick(c);
    unsigned d = s.domain(e);
    for (Klein x = 1; x <= 3; ++x) {
        if (!(d & (1u << (x - 1)))) continue;
        std::size_t mk = s.mark();
        bool go = true;
        if (s.assign(e, x)) go = enumerate_rec(s, em, c, visit);
        s.undo(mk);
        if (!go) return false;
    }
    return true;
}

}  // namespace

void enumerate_colourings(const Multipole& m, const std::function<bool(const Colouring&)>& visit) {
    EdgeModel em(m);
    if (em.has_loop) return;
    Solver s(em);
    enumerate_rec(s, em, 0, visit);
}

ColouringSet colouring_set(const Multipole& m) {
    EdgeModel em(m);
    int k = m.semiedge_count();
    if (k > 32) throw InputError("colouring sets need at most 32 semiedges");
    if (em.has_loop) return ColouringSet(k);
    Solver s(em);
    int nc = s.components();
    std::vector<int> last_sid(nc, -1);
    for (int sid = 0; sid < k; ++sid) last_sid[s.component_of(em.semiedge_edge[sid])] = sid;
    for (int c = 0; c < nc; ++c)
        if (last_sid[c] < 0 && !s.exists(c)) return ColouringSet(k);

    std::vector<std::uint64_t> codes;
    std::vector<Klein> tuple(k, 0);
    std::vector<Klein> comp_sum(nc, 0);
    std::function<void(int)> rec = [&](int sid) {
        if (sid == k) {
            for (int c = 0; c < nc; ++c)
                if (last_sid[c] >= 0 && !s.exists(c)) return;
            codes.push_back(ColouringSet::pack(tuple));
            return;
        }
        int e = em.semiedge_edge[sid];
        int c = s.component_of(e);
        unsigned d = s.domain(e);
        if (sid == last_sid[c]) {
            Klein need = comp_sum[c];
            if (!need) return;
            d &= 1u << (need - 1);
        }
        for (Klein x = 1; x <= 3; ++x) {
            if (!(d & (1u << (x - 1)))) continue;
            std::size_t mk = s.mark();
            if (s.assign(e, x)) {
                tuple[sid] = x;
                comp_sum[c] ^= x;
                rec(sid + 1);
                comp_sum[c] ^= x;
            }
            s.undo(mk);
        }
    };
    rec(0);
    return ColouringSet(k, std::move(codes));
}

Klein flow_through(const Multipole& m, const ColourTuple& t, const std::string& connector) {
    const Connector& c = m.connector(connector);
    Klein f = 0;
    for (int s : c.sids) {
        if (s >= static_cast<int>(t.size())) throw InputError("tuple too short for connector");
        f ^= t[s];
    }
    return f;
}

std::string to_string(ConnectorKind k) {
    switch (k) {
        case ConnectorKind::proper: return "proper";
        case ConnectorKind::improper: return "improper";
        case ConnectorKind::mixed: return "mixed";
        case ConnectorKind::vacuous: return "vacuous";
    }
    return "?";
}

ConnectorKind classify_connector(const Multipole& m, const ColouringSet& col,
                                 const std::string& connector) {
    m.connector(connector);
    if (col.empty()) return ConnectorKind::vacuous;
    bool zero = false, nonzero = false;
    for (auto& t : col.tuples()) (flow_through(m, t, connector) ? nonzero : zero) = true;
    if (zero && nonzero) return ConnectorKind::mixed;
    return nonzero ? ConnectorKind::proper : ConnectorKind::improper;
}

ConnectorKind classify_connector(const Multipole& m, const std::string& connector) {
    return classify_connector(m, colouring_set(m), connector);
}

ColouringSet negator_closed_set() {
    return colouring_set_from(5, [](const ColourTuple& t) {
        bool in_eq = t[0] == t[1] && t[2] != t[3] && t[4] == (t[2] ^ t[3]);
        bool out_eq = t[2] == t[3] && t[0] != t[1] && t[4] == (t[0] ^ t[1]);
        return in_eq || out_eq;
    });
}

ColouringSet negator_half_set(bool input_equal) {
    return colouring_set_from(5, [input_equal](const ColourTuple& t) {
        if (input_equal) return t[0] == t[1] && t[2] != t[3] && t[4] == (t[2] ^ t[3]);
        return t[2] == t[3] && t[0] != t[1] && t[4] == (t[0] ^ t[1]);
    });
}

ColouringSet proper23_closed_set() {
    return colouring_set_from(5, [](const ColourTuple& t) {
        Klein b = t[0] ^ t[1];
        return b != 0 && b == (t[2] ^ t[3] ^ t[4]);
    });
}

ColouringSet p2_closed_set() {
    return colouring_set_from(5, [](const ColourTuple& t) {
        return t[0] != t[1] && t[2] != t[3] && (t[0] ^ t[1] ^ t[2] ^ t[3] ^ t[4]) == 0;
    });
}

ColouringSet mev_closed_set() {
    return colouring_set_from(5, [](const ColourTuple& t) {
        return t[0] == t[1] && (t[2] ^ t[3] ^ t[4]) == 0;
    });
}

ColouringSet v4_closed_set() {
    return colouring_set_from(6, [](const ColourTuple& t) {
        Klein s = 0;
        for (Klein x : t) s ^= x;
        return s == 0 && t[0] != t[1] && t[2] != t[3] && t[4] != t[5];
    });
}

ColouringSet m7_closed_set() {
    return colouring_set_from(7, [](const ColourTuple& t) {
        return t[0] == t[1] && t[2] != t[3] && t[4] != t[5] &&
               (t[2] ^ t[3] ^ t[4] ^ t[5] ^ t[6]) == 0;
    });
}

ColouringSet c5_closed_set() {
    // e_i meets cycle edges c_{i-1} and c_i, so e_i = c_{i-1} + c_i.
    return colouring_set_from(5, [](const ColourTuple& e) {
        for (Klein c0 = 1; c0 <= 3; ++c0) {
            Klein prev = c0;
            bool ok = true;
            for (int i = 1; i < 5 && ok; ++i) {
                Klein ci = prev ^ e[i];
                if (!ci) ok = false;
                prev = ci;
            }
            if (ok && (prev ^ c0) == e[0]) return true;
        }
        return false;
    });
}

std::vector<int> connector_positions(const Multipole& m, const std::vector<std::string>& names) {
    std::vector<int> pos;
    for (const auto& n : names) {
        const auto& c = m.connector(n);
        pos.insert(pos.end(), c.sids.begin(), c.sids.end());
    }
    return pos;
}

ColouringSet colouring_set_in(const Multipole& m, const std::vector<std::string>& names) {
    std::vector<int> pos = connector_positions(m, names);
    if (static_cast<int>(pos.size()) != m.semiedge_count())
        throw InputError("connector list does not cover all semiedges");
    return colouring_set(m).permuted(pos);
}

std::string to_string(NegatorVerdict v) {
    switch (v) {
        case NegatorVerdict::perfect: return "perfect";
        case NegatorVerdict::semiperfect: return "semiperfect";
        case NegatorVerdict::uncolourable: return "uncolourable";
        case NegatorVerdict::not_a_negator: return "not_a_negator";
    }
    return "?";
}

std::string to_string(Proper23Verdict v) {
    switch (v) {
        case Proper23Verdict::perfect: return "perfect";
        case Proper23Verdict::imperfect_proper: return "imperfect_proper";
        case Proper23Verdict::not_proper: return "not_proper";
        case Proper23Verdict::uncolourable: return "uncolourable";
    }
    return "?";
}

std::string to_string(SuperpentagonVerdict v) {
    switch (v) {
        case SuperpentagonVerdict::perfect: return "perfect";
        case SuperpentagonVerdict::uncolourable: return "uncolourable";
        case SuperpentagonVerdict::not_superpentagon: return "not_superpentagon";
    }
    return "?";
}

namespace {
std::vector<std::string> shape_names(const Multipole& m, const std::vector<int>& arities) {
    if (m.connectors.size() != arities.size()) throw InputError("wrong connector shape");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < arities.size(); ++i) {
        if (m.connectors[i].arity() != arities[i]) throw InputError("wrong connector shape");
        names.push_back(m.connectors[i].name);
    }
    return names;
}
}  // namespace

NegatorVerdict negator_verdict(const ColouringSet& col) {
    if (col.empty()) return NegatorVerdict::uncolourable;
    if (!col.subset_of(negator_closed_set())) return NegatorVerdict::not_a_negator;
    if (col == negator_closed_set()) return NegatorVerdict::perfect;
    if (col == negator_half_set(true) || col == negator_half_set(false))
        return NegatorVerdict::semiperfect;
    // Colourable negators are perfect or semiperfect; anything else means
    // the input is not a negator in the usual sense.
    return NegatorVerdict::not_a_negator;
}

NegatorVerdict is_perfect_negator(const Multipole& n) {
    return negator_verdict(colouring_set_in(n, shape_names(n, {2, 2, 1})));
}

Proper23Verdict proper23_verdict(const ColouringSet& col) {
    if (col.empty()) return Proper23Verdict::uncolourable;
    ColouringSet closed = proper23_closed_set();
    if (!col.subset_of(closed)) return Proper23Verdict::not_proper;
    return col == closed ? Proper23Verdict::perfect : Proper23Verdict::imperfect_proper;
}

Proper23Verdict is_perfect_proper23(const Multipole& t) {
    return proper23_verdict(colouring_set_in(t, shape_names(t, {2, 3})));
}

bool is_even_222(const Multipole& h) {
    auto names = shape_names(h, {2, 2, 2});
    ColouringSet col = colouring_set_in(h, names);
    for (const auto& t : col.tuples()) {
        int nonzero = ((t[0] ^ t[1]) != 0) + ((t[2] ^ t[3]) != 0) + ((t[4] ^ t[5]) != 0);
        if (nonzero % 2) return false;
    }
    return true;
}

SuperpentagonVerdict is_superpentagon(const Multipole& m, const std::vector<int>& cyclic_order) {
    if (m.semiedge_count() != 5 || cyclic_order.size() != 5)
        return SuperpentagonVerdict::not_superpentagon;
    ColouringSet col = colouring_set(m).permuted(cyclic_order);
    ColouringSet c5 = c5_closed_set();
    if (col.empty()) return SuperpentagonVerdict::uncolourable;
    if (!col.subset_of(c5)) return SuperpentagonVerdict::not_superpentagon;
    if (col != c5)
        throw VerificationError("colourable superpentagon with an incomplete colouring set");
    return SuperpentagonVerdict::perfect;
}

bool sets_compatible(const ColouringSet& a, const ColouringSet& b) {
    return !a.intersect(b).empty();
}

}  // namespace snarkmorph
