#include "snarkmorph/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "snarkmorph/constructions.hpp"
#include "snarkmorph/structure.hpp"
#include "snarkmorph/tait.hpp"

namespace snarkmorph {

namespace {

const char* const kSuperpentagon = "superpentagon";
const char* const kUncatalogued = "uncatalogued cluster";
const char* const kSuperpentagonClass = "superpentagon/5-product";

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

IngestResult ingest_graph6(std::istream& in, const std::string& name) {
    IngestResult r;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        std::string id = name + ":" + std::to_string(lineno);
        try {
            r.graphs.push_back({id, from_graph6(line)});
        } catch (const InputError& e) {
            r.rejected.push_back({id, e.what()});
        }
    }
    return r;
}

IngestResult ingest_interchange(std::istream& in, const std::string& name) {
    IngestResult r;
    std::string line, body;
    int lineno = 0, start = 0;
    auto flush = [&] {
        if (!start) return;
        std::string id = name + ":" + std::to_string(start);
        try {
            Multipole m = from_text(body);
            if (!m.is_graph())
                r.rejected.push_back(
                    {id, "not a graph (" + std::to_string(m.semiedge_count()) + " semiedges)"});
            else
                r.graphs.push_back({id, std::move(m)});
        } catch (const InputError& e) {
            r.rejected.push_back({id, e.what()});
        }
        body.clear();
        start = 0;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = strip(line);
        if (t.rfind("MP", 0) == 0) {
            flush();
            start = lineno;
        } else if (!start) {
            if (!t.empty() && t[0] != '#')
                r.rejected.push_back({name + ":" + std::to_string(lineno), "record without MP header"});
            continue;
        }
        body += t + "\n";
    }
    flush();
    return r;
}

// ---- templates ---------------------------------------------------------------

struct CompositionTemplate {
    std::string name;
    std::string cls;
    std::vector<Multipole> variants;  // pairwise non-isomorphic wirings
    std::vector<ColouringSet> cols;
    std::size_t five_cycles = 0;      // fewest over the variants
};

// Every order of every connector of a part, up to isomorphism respecting the
// orders.
std::vector<Multipole> part_orderings(const Multipole& m) {
    std::vector<std::vector<std::vector<int>>> per;
    for (const auto& c : m.connectors) {
        auto s = c.sids;
        std::sort(s.begin(), s.end());
        per.emplace_back();
        do per.back().push_back(s);
        while (std::next_permutation(s.begin(), s.end()));
    }
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Multipole> out;
    std::vector<std::size_t> idx(per.size(), 0);
    while (true) {
        auto cs = m.connectors;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            cs[i].sids = per[i][idx[i]];
            cs[i].ordered = true;
        }
        Multipole v = with_connectors(m, cs);
        if (seen.insert(canonical_form(v, true).code).second) {
            for (std::size_t i = 0; i < cs.size(); ++i) cs[i].ordered = m.connectors[i].ordered;
            out.push_back(with_connectors(m, cs));
        }
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == per[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return out;
}

// All junction variants of a family over its default parts. With
// vary_parts false only the alignment runs; TTT needs no more, its W
// junctions already take every order of each C and the B connectors are
// exposed.
std::vector<Multipole> composition_variants_of(const std::string& family, int alignments,
                                               bool vary_parts) {
    FamilySpec base = parse_family(family);
    Multipole first = build(base);
    std::vector<std::vector<Multipole>> choices;
    Blueprint bp = blueprint(base);
    for (const auto& p : bp.parts()) {
        if (p.name == "v" || p.name == "z" || p.name == "W") continue;
        choices.push_back(vary_parts ? part_orderings(p.pole) : std::vector<Multipole>{p.pole});
    }
    std::set<std::vector<std::uint32_t>> seen{canonical_form(first, false).code};
    std::vector<Multipole> out{first};
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        FamilySpec spec = base;
        spec.parts.clear();
        for (std::size_t i = 0; i < idx.size(); ++i) spec.parts.push_back(choices[i][idx[i]]);
        for (int a = 0; a < alignments; ++a) {
            spec.alignment = a;
            Multipole m = build(spec);
            if (seen.insert(canonical_form(m, false).code).second) out.push_back(std::move(m));
        }
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return out;
}

const std::vector<CompositionTemplate>& composition_templates() {
    static const std::vector<CompositionTemplate> t = [] {
        std::vector<CompositionTemplate> out;
        struct Row {
            const char* name;
            const char* family;
            const char* cls;
            int alignments;
            bool vary_parts;
        };
        const std::vector<Row> rows = {
            {"P_NN", "NN", "NN substitution", 2, true},
            {"P_NT", "NT", "NT substitution", 2, true},
            {"P_TT", "TT", "TT substitution", 6, true},
            {"P_TTT", "TTT", "TTT substitution", 216, false},
            {"P_3NT", "3NT", "3NT substitution", 2, true},
        };
        for (const auto& row : rows) {
            CompositionTemplate c;
            c.name = row.name;
            c.cls = row.cls;
            c.variants = composition_variants_of(row.family, row.alignments, row.vary_parts);
            c.five_cycles = SIZE_MAX;
            for (const auto& v : c.variants) {
                c.cols.push_back(colouring_set(v));
                c.five_cycles = std::min(c.five_cycles, five_cycles(v).size());
            }
            out.push_back(std::move(c));
        }
        return out;
    }();
    return t;
}

// Whole-graph templates, built on first use. 34-C and 42-A also list their
// first bicritical closure.
struct ClassTemplate {
    const char* family;
    int alignment;
    int order;
    const char* cls;
    std::once_flag once;
    CanonicalForm form;
};

std::vector<ClassTemplate>& class_templates() {
    static std::vector<ClassTemplate> t = [] {
        const std::vector<std::tuple<const char*, int, int, const char*>> rows = {
            {"PETERSEN", 0, 10, "Petersen"},
            {"DUMBBELL", 0, 2, "dumbbell"},
            {"CLASS_32A", 0, 32, "32-A"},
            {"CLASS_34A", 0, 34, "34-A"},
            {"CLASS_34B", 0, 34, "34-B"},
            {"CLASS_34C", 0, 34, "34-C"},
            {"CLASS_34C", 18, 34, "34-C"},
            {"CLASS_34D", 0, 34, "34-D"},
            {"CLASS_34E", 0, 34, "34-E"},
            {"CLASS_34F", 0, 34, "34-F"},
            {"CLASS_36A", 0, 36, "36-A"},
            {"CLASS_36B", 0, 36, "36-B"},
            {"CLASS_38A", 0, 38, "38-A"},
            {"CLASS_42A", 0, 42, "42-A"},
            {"CLASS_42A", 42, 42, "42-A"},
            {"STRICT_TTT_PETERSEN", 0, 36, "strict TTT"},
        };
        std::vector<ClassTemplate> v(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto [f, a, o, c] = rows[i];
            v[i].family = f;
            v[i].alignment = a;
            v[i].order = o;
            v[i].cls = c;
        }
        return v;
    }();
    return t;
}

const CanonicalForm& template_form(ClassTemplate& t) {
    std::call_once(t.once, [&] {
        FamilySpec spec;
        spec.family = t.family;
        spec.alignment = t.alignment;
        Multipole g = build(spec);
        if (g.order() != t.order)
            throw VerificationError(std::string(t.family) + " template has order " +
                                    std::to_string(g.order()));
        t.form = canonical_form(g, false);
    });
    return t.form;
}

// The host's induced copy of a template, semiedges numbered like the template's.
Multipole embedded_pole(const Multipole& host, const Multipole& pattern, const Embedding& e) {
    std::map<int, int> local;
    for (int i = 0; i < pattern.vertex_count; ++i) local[e.vertex_map[i]] = i;
    Multipole m;
    m.vertex_count = pattern.vertex_count;
    for (auto [a, b] : host.links) {
        auto ia = local.find(a), ib = local.find(b);
        if (ia != local.end() && ib != local.end()) m.links.push_back({ia->second, ib->second});
    }
    Connector all{"S", true, {}};
    for (int s = 0; s < static_cast<int>(e.cut.size()); ++s) {
        m.dangling.push_back({local.at(e.cut[s][0]), s});
        all.sids.push_back(s);
    }
    m.connectors.push_back(all);
    m.normalize();
    m.validate();
    return m;
}

// Number of induced copies over all variants; each one's colouring set is
// rechecked on the host.
int count_composition(const Multipole& g, const CompositionTemplate& t, std::size_t host_five_cycles) {
    if (g.order() < t.variants.front().order() || host_five_cycles < t.five_cycles) return 0;
    std::set<std::vector<int>> images;
    for (std::size_t i = 0; i < t.variants.size(); ++i) {
        for (const auto& e : find_submultipole(g, t.variants[i])) {
            if (colouring_set(embedded_pole(g, t.variants[i], e)) != t.cols[i])
                throw VerificationError("embedded " + t.name + " has a different colouring set");
            auto vs = e.vertex_map;
            std::sort(vs.begin(), vs.end());
            images.insert(vs);
        }
    }
    return static_cast<int>(images.size());
}

std::vector<std::vector<int>> cyclic_orders_of_five() {
    std::vector<std::vector<int>> out;
    std::vector<int> rest = {1, 2, 3, 4};
    do {
        if (rest[0] < rest[3]) out.push_back({0, rest[0], rest[1], rest[2], rest[3]});
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// Cycle-separating 5-cuts with more than five vertices on each side and a
// perfect superpentagon on one of them. A pentagon's complement in a snark
// always is one, so those cuts say nothing.
int count_five_products(const Multipole& g) {
    static const auto orders = cyclic_orders_of_five();
    static const ColouringSet c5 = c5_closed_set();
    int found = 0;
    for (const auto& cut : cycle_separating_cuts(g, 5)) {
        std::vector<std::array<int, 2>> edges;
        for (int i : cut) edges.push_back(g.links[i]);
        auto sides = cut_along(g, edges);
        if (sides.first.order() <= 5 || sides.second.order() <= 5) continue;
        for (const Multipole* side : {&sides.first, &sides.second}) {
            ColouringSet col = colouring_set(*side);
            if (col.empty()) continue;
            const auto& s = side->connector("S").sids;
            bool hit = false;
            for (const auto& o : orders) {
                std::vector<int> order = {s[o[0]], s[o[1]], s[o[2]], s[o[3]], s[o[4]]};
                ColouringSet p = col.permuted(order);
                if (!p.subset_of(c5)) continue;
                if (p != c5)
                    throw VerificationError("colourable superpentagon with an incomplete colouring set");
                hit = true;
                break;
            }
            if (hit) {
                ++found;
                break;
            }
        }
    }
    return found;
}

// Induced copies of the superpentagon Q; each is rechecked against Col(C_5).
int count_q_superpentagons(const Multipole& g, std::size_t host_five_cycles) {
    static const Multipole q = build(parse_family("SUPERPENTAGON_Q"));
    static const std::size_t q_five = five_cycles(q).size();
    static const ColouringSet c5 = c5_closed_set();
    if (g.order() < q.order() || host_five_cycles < q_five) return 0;
    auto embeddings = find_submultipole(g, q);
    for (const auto& e : embeddings) {
        ColouringSet col = colouring_set(embedded_pole(g, q, e));
        if (!col.subset_of(c5)) throw VerificationError("embedded Q is not a superpentagon");
    }
    return static_cast<int>(embeddings.size());
}

bool is_isaacs_flower(const Multipole& g, const CanonicalForm& form) {
    int n = g.order() / 4;
    if (g.order() % 4 || n < 5 || n % 2 == 0) return false;
    return canonical_form(flower_snark(n), false) == form;
}

bool splits_as_dot_product(const Multipole& g) {
    try {
        return dot_factors(g).size() >= 2;
    } catch (const InputError&) {
        return false;
    }
}

nlohmann::ordered_json record_json(const ClassificationRecord& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["order"] = r.order;
    j["girth"] = r.girth >= kInfinite ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(r.girth);
    j["cc"] = r.cc_infinite ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(r.cc);
    j["colourings"] = r.colourings;
    j["grade"] = to_string(r.grade);
    if (r.witness)
        j["witness"] = {(*r.witness)[0], (*r.witness)[1]};
    else
        j["witness"] = nullptr;
    j["substructures"] = nlohmann::ordered_json::array();
    for (const auto& s : r.substructures)
        j["substructures"].push_back({{"pattern", s.pattern}, {"count", s.count}});
    j["classes"] = r.classes;
    j["unexplained"] = r.unexplained;
    return j;
}

bool in_table_scope(const ClassificationRecord& r) {
    return r.grade == Grade::bicritical && (r.cc_infinite || r.cc >= 5);
}

std::string cell(const std::string& s, int w) {
    std::ostringstream os;
    os << std::setw(w) << s;
    return os.str();
}

}  // namespace

std::string to_string(Format f) { return f == Format::graph6 ? "g6" : "mp"; }

Format parse_format(const std::string& s) {
    if (s == "g6" || s == "graph6") return Format::graph6;
    if (s == "mp" || s == "interchange") return Format::interchange;
    throw InputError("unknown format " + s + " (expected g6 or mp)");
}

Format format_for_path(const std::string& path) {
    auto ext = std::filesystem::path(path).extension().string();
    return ext == ".mp" || ext == ".txt" ? Format::interchange : Format::graph6;
}

IngestResult ingest_stream(std::istream& in, const std::string& name, Format format) {
    return format == Format::graph6 ? ingest_graph6(in, name) : ingest_interchange(in, name);
}

IngestResult ingest(const std::string& path, Format format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    return ingest_stream(in, std::filesystem::path(path).filename().string(), format);
}

IngestResult ingest(const std::string& path) { return ingest(path, format_for_path(path)); }

int ClassificationRecord::count(const std::string& pattern) const {
    for (const auto& s : substructures)
        if (s.pattern == pattern) return s.count;
    return 0;
}

bool ClassificationRecord::has_class(const std::string& c) const {
    return std::find(classes.begin(), classes.end(), c) != classes.end();
}

const std::vector<std::string>& composition_patterns() {
    static const std::vector<std::string> names = {"P_NN", "P_NT", "P_TT", "P_TTT", "P_3NT"};
    return names;
}

const std::vector<Multipole>& composition_variants(const std::string& pattern) {
    for (const auto& t : composition_templates())
        if (t.name == pattern) return t.variants;
    throw InputError("unknown composition pattern " + pattern);
}

const Multipole& composition_template(const std::string& pattern) {
    for (const auto& t : composition_templates())
        if (t.name == pattern) return t.variants.front();
    throw InputError("unknown composition pattern " + pattern);
}

ClassificationRecord classify(const Multipole& g, const std::string& id) {
    if (!g.is_graph()) throw InputError("classify expects a 0-pole");
    ClassificationRecord r;
    r.id = id;
    r.order = g.order();
    if (g.order() == 0 || !is_connected(g)) {
        r.colourings = count_colourings(g);
        return r;
    }
    r.girth = girth(g);
    auto cc = cyclic_connectivity(g);
    r.cc = cc.value;
    r.cc_infinite = cc.infinite;
    auto gr = grade(g);
    r.grade = gr.grade;
    r.witness = gr.witness;
    r.colourings = r.grade == Grade::not_snark ? count_colourings(g) : 0;

    // cluster census first; it also bounds which templates can occur
    std::size_t host_five = five_cycles(g).size();
    auto clusters = five_cycle_clusters(g);
    std::map<std::string, int> census;
    int uncatalogued = 0;
    for (const auto& c : clusters.clusters) {
        if (c.catalog)
            ++census[to_string(*c.catalog)];
        else
            ++uncatalogued;
    }

    std::vector<std::string> classes;
    for (const auto& t : composition_templates()) {
        int n = count_composition(g, t, host_five);
        if (!n) continue;
        r.substructures.push_back({t.name, n});
        if (r.grade != Grade::not_snark) classes.push_back(t.cls);
    }
    int superpentagons = count_q_superpentagons(g, host_five);
    if (!cc.infinite && cc.value <= 5 && g.order() >= 12) superpentagons += count_five_products(g);
    if (superpentagons) {
        r.substructures.push_back({kSuperpentagon, superpentagons});
        if (r.grade != Grade::not_snark) classes.push_back(kSuperpentagonClass);
    }
    for (auto c : all_catalog_clusters())
        if (int n = census[to_string(c)]) r.substructures.push_back({to_string(c), n});
    if (uncatalogued) r.substructures.push_back({kUncatalogued, uncatalogued});

    if (r.grade != Grade::not_snark) {
        CanonicalForm form = canonical_form(g, false);
        if (is_isaacs_flower(g, form)) classes.push_back("Isaacs flower");
        if (!cc.infinite && cc.value == 4 && splits_as_dot_product(g)) classes.push_back("dot product");
        for (auto& t : class_templates())
            if (t.order == g.order() && template_form(t) == form &&
                std::find(classes.begin(), classes.end(), t.cls) == classes.end())
                classes.push_back(t.cls);
        r.unexplained = classes.empty();
    }
    r.classes = std::move(classes);
    return r;
}

Corpus classify_corpus(const std::vector<IngestedGraph>& graphs, const CorpusFilter& filter) {
    std::vector<const IngestedGraph*> todo;
    for (const auto& g : graphs) {
        if (g.graph.order() < filter.min_order) continue;
        if (filter.max_order > 0 && g.graph.order() > filter.max_order) continue;
        todo.push_back(&g);
    }
    std::vector<ClassificationRecord> done(todo.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= todo.size()) return;
            try {
                done[i] = classify(todo[i]->graph, todo[i]->id);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = todo.size();
            }
        }
    };
    int workers = std::min<int>(worker_count(), static_cast<int>(todo.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    Corpus c;
    c.manifest.filter = filter;
    std::map<int, int> per_order;
    for (auto& r : done) {
        if (!r.cc_infinite && r.cc < filter.min_cc) continue;
        if (filter.grade && r.grade != *filter.grade) continue;
        ++per_order[r.order];
        c.records.push_back(std::move(r));
    }
    c.manifest.counts.assign(per_order.begin(), per_order.end());
    return c;
}

Corpus classify_files(const std::vector<std::string>& paths, std::optional<Format> format,
                      const CorpusFilter& filter) {
    std::vector<IngestedGraph> graphs;
    int rejected = 0;
    for (const auto& p : paths) {
        auto in = ingest(p, format ? *format : format_for_path(p));
        rejected += static_cast<int>(in.rejected.size());
        for (auto& g : in.graphs) graphs.push_back(std::move(g));
    }
    Corpus c = classify_corpus(graphs, filter);
    for (const auto& p : paths) c.manifest.sources.push_back(std::filesystem::path(p).filename().string());
    c.manifest.format = format ? *format : (paths.empty() ? Format::graph6 : format_for_path(paths[0]));
    c.manifest.rejected = rejected;
    return c;
}

ReportTemplate parse_report_template(const std::string& s) {
    if (s == "table1") return ReportTemplate::table1;
    if (s == "table2") return ReportTemplate::table2;
    if (s == "table34") return ReportTemplate::table34;
    if (s == "json") return ReportTemplate::json;
    throw InputError("unknown report " + s + " (expected table1, table2, table34 or json)");
}

Grade parse_grade(const std::string& s) {
    for (Grade g : {Grade::not_snark, Grade::snark_trivial, Grade::critical_strict, Grade::bicritical,
                    Grade::noncritical_snark})
        if (to_string(g) == s) return g;
    throw InputError("unknown grade " + s);
}

std::string to_json(const ClassificationRecord& r) { return record_json(r).dump(); }

std::string to_json(const Corpus& c) {
    nlohmann::ordered_json j;
    auto& m = j["manifest"];
    m["sources"] = c.manifest.sources;
    m["format"] = to_string(c.manifest.format);
    m["filter"] = {{"min_order", c.manifest.filter.min_order},
                   {"max_order", c.manifest.filter.max_order},
                   {"min_cc", c.manifest.filter.min_cc},
                   {"grade", c.manifest.filter.grade ? nlohmann::ordered_json(to_string(*c.manifest.filter.grade))
                                                     : nlohmann::ordered_json(nullptr)}};
    m["counts"] = nlohmann::ordered_json::array();
    for (auto [order, n] : c.manifest.counts) m["counts"].push_back({{"order", order}, {"records", n}});
    m["rejected"] = c.manifest.rejected;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : c.records) j["records"].push_back(record_json(r));
    return j.dump(2) + "\n";
}

std::string report(const std::vector<ClassificationRecord>& records, ReportTemplate t) {
    std::ostringstream os;
    switch (t) {
        case ReportTemplate::json: {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& r : records) j.push_back(record_json(r));
            return j.dump(2) + "\n";
        }
        case ReportTemplate::table1: {
            // critical snarks by cyclic connectivity
            std::map<int, std::array<int, 3>> rows;
            for (const auto& r : records) {
                if (r.grade != Grade::critical_strict && r.grade != Grade::bicritical) continue;
                int col = r.cc_infinite || r.cc >= 6 ? 2 : r.cc - 4;
                if (col < 0) continue;
                rows[r.order][col]++;
            }
            os << cell("order", 6) << cell("cc=4", 8) << cell("cc=5", 8) << cell("cc>=6", 8)
               << cell("total", 8) << "\n";
            for (auto& [order, c] : rows)
                os << cell(std::to_string(order), 6) << cell(std::to_string(c[0]), 8)
                   << cell(std::to_string(c[1]), 8) << cell(std::to_string(c[2]), 8)
                   << cell(std::to_string(c[0] + c[1] + c[2]), 8) << "\n";
            return os.str();
        }
        case ReportTemplate::table2: {
            // cyclically 5-connected bicritical snarks by class and order
            const std::vector<std::pair<std::string, std::string>> rows = {
                {"NN substitution", "NN substitution"},
                {"TT substitution", "TT substitution"},
                {"NT substitution", "NT substitution"},
                {"TTT substitution", "TTT substitution"},
                {"Superpentagon subst.", kSuperpentagonClass},
            };
            std::set<int> orders;
            for (const auto& r : records)
                if (in_table_scope(r)) orders.insert(r.order);
            os << cell("", 22);
            for (int o : orders) os << cell(std::to_string(o), 6);
            os << "\n";
            auto line = [&](const std::string& label, auto pred) {
                os << cell(label, 22);
                for (int o : orders) {
                    int n = 0;
                    for (const auto& r : records)
                        if (in_table_scope(r) && r.order == o && pred(r)) ++n;
                    os << cell(std::to_string(n), 6);
                }
                os << "\n";
            };
            for (const auto& [label, cls] : rows)
                line(label, [&](const ClassificationRecord& r) { return r.has_class(cls); });
            line("Other", [&](const ClassificationRecord& r) {
                for (const auto& row : rows)
                    if (r.has_class(row.second)) return false;
                return true;
            });
            line("TOTAL", [](const ClassificationRecord&) { return true; });
            return os.str();
        }
        case ReportTemplate::table34: {
            std::vector<const ClassificationRecord*> scope;
            for (const auto& r : records)
                if (in_table_scope(r) && r.order == 34) scope.push_back(&r);
            os << cell("type", 26) << cell("count", 8) << "\n";
            if (scope.empty()) return os.str();
            auto line = [&](const std::string& label, auto pred) {
                int n = 0;
                for (const auto* r : scope)
                    if (pred(*r)) ++n;
                os << cell(label, 26) << cell(std::to_string(n), 8) << "\n";
            };
            for (const auto& p : {"P_NN", "P_NT", "P_TT", "P_TTT"})
                line(std::string("Containing ") + p,
                     [&](const ClassificationRecord& r) { return r.count(p) > 0; });
            line("Containing superpentagon",
                 [](const ClassificationRecord& r) { return r.count(kSuperpentagon) > 0; });
            for (const char* c : {"34-A", "34-B", "34-C", "34-D", "34-E", "34-F"})
                line(std::string("Class ") + c, [&](const ClassificationRecord& r) { return r.has_class(c); });
            line("TOTAL", [](const ClassificationRecord&) { return true; });
            return os.str();
        }
    }
    return os.str();
}

}  // namespace snarkmorph
