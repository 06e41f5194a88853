// snarkmorph command line: ingest, classify, construct and inspect snarks.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "snarkmorph/classifier.hpp"
#include "snarkmorph/constructions.hpp"
#include "snarkmorph/criticality.hpp"
#include "snarkmorph/structure.hpp"
#include "snarkmorph/tait.hpp"

using namespace snarkmorph;

namespace {

constexpr int kInputError = 2;
constexpr int kVerificationError = 3;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

Format pick_format(const std::string& path, const std::string& flag) {
    return flag.empty() ? format_for_path(path) : parse_format(flag);
}

// Reads graphs, reporting rejected lines on stderr. An input with nothing
// usable is an error.
std::vector<IngestedGraph> load(const std::string& path, const std::string& format) {
    auto in = ingest(path, pick_format(path, format));
    for (const auto& d : in.rejected) std::cerr << d.id << ": rejected: " << d.message << "\n";
    if (in.graphs.empty()) throw InputError(path + ": no graphs");
    return std::move(in.graphs);
}

Multipole read_multipole(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

// An interchange file may hold any multipole; graph6 files give their first graph.
Multipole read_any(const std::string& path) {
    if (format_for_path(path) == Format::interchange) return read_multipole(path);
    return load(path, "g6").front().graph;
}

std::string cc_text(const CyclicConnectivity& c) { return c.infinite ? "inf" : std::to_string(c.value); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"snarkmorph: morphology of snarks"};
    app.require_subcommand(1);

    std::string file, format, out, report_name, grade_name, family, parts, emit, file_b, connectors;
    int min_cc = 0, min_order = 0, max_order = 0, n = 0, alignment = 0;

    auto* ingest_cmd = app.add_subcommand("ingest", "parse a corpus and list its graphs");
    ingest_cmd->add_option("file", file)->required();
    ingest_cmd->add_option("--format", format, "g6 or mp");

    auto* classify_cmd = app.add_subcommand("classify", "classify every graph of a corpus");
    std::vector<std::string> files;
    classify_cmd->add_option("files", files)->required();
    classify_cmd->add_option("--format", format, "g6 or mp");
    classify_cmd->add_option("--min-cc", min_cc, "keep records with cyclic connectivity at least this");
    classify_cmd->add_option("--grade", grade_name, "keep records with this grade");
    classify_cmd->add_option("--min-order", min_order);
    classify_cmd->add_option("--max-order", max_order);
    classify_cmd->add_option("--report", report_name, "table1, table2, table34 or json");
    classify_cmd->add_option("--out", out, "write the full JSON report here");

    auto* construct_cmd = app.add_subcommand("construct", "build a member of a family");
    construct_cmd->add_option("family", family)->required();
    construct_cmd->add_option("--parts", parts, "comma separated part names");
    construct_cmd->add_option("--n", n, "J_n, Y_k, Blanusa type, 36-B generalisation k");
    construct_cmd->add_option("--alignment", alignment, "junction variant");
    construct_cmd->add_option("--emit", emit, "g6 or mp");

    auto* colset_cmd = app.add_subcommand("colset", "colouring set of a multipole");
    colset_cmd->add_option("file", file)->required();
    colset_cmd->add_option("--connectors", connectors, "positions in this connector order");

    auto* grade_cmd = app.add_subcommand("grade", "criticality grade of each graph");
    grade_cmd->add_option("file", file)->required();
    grade_cmd->add_option("--format", format, "g6 or mp");

    auto* cc_cmd = app.add_subcommand("cc", "girth and cyclic connectivity of each graph");
    cc_cmd->add_option("file", file)->required();
    cc_cmd->add_option("--format", format, "g6 or mp");

    auto* clusters_cmd = app.add_subcommand("clusters", "5-cycle clusters of each graph");
    clusters_cmd->add_option("file", file)->required();
    clusters_cmd->add_option("--format", format, "g6 or mp");

    auto* iso_cmd = app.add_subcommand("iso", "isomorphism test of two multipoles");
    iso_cmd->add_option("a", file)->required();
    iso_cmd->add_option("b", file_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*ingest_cmd) {
            auto in = ingest(file, pick_format(file, format));
            for (const auto& g : in.graphs) std::cout << g.id << " order " << g.graph.order() << "\n";
            for (const auto& d : in.rejected) std::cerr << d.id << ": rejected: " << d.message << "\n";
            std::cerr << in.graphs.size() << " graphs, " << in.rejected.size() << " rejected\n";
        } else if (*classify_cmd) {
            CorpusFilter filter;
            filter.min_cc = min_cc;
            filter.min_order = min_order;
            filter.max_order = max_order;
            if (!grade_name.empty()) filter.grade = parse_grade(grade_name);
            std::optional<Format> fmt;
            if (!format.empty()) fmt = parse_format(format);
            std::optional<ReportTemplate> tmpl;
            if (!report_name.empty()) tmpl = parse_report_template(report_name);
            Corpus corpus = classify_files(files, fmt, filter);
            std::string json = to_json(corpus);
            if (!out.empty()) {
                std::ofstream os(out, std::ios::binary);
                if (!os) throw InputError("cannot write " + out);
                os << json;
            }
            if (tmpl)
                std::cout << report(corpus.records, *tmpl);
            else if (out.empty())
                std::cout << json;
        } else if (*construct_cmd) {
            FamilySpec spec = parse_family(family);
            if (!parts.empty()) {
                spec.parts.clear();
                for (const auto& p : split_list(parts)) spec.parts.push_back(named_part(p));
            }
            if (n) spec.n = n;
            if (alignment) spec.alignment = alignment;
            Multipole m = build(spec);
            std::string how = emit.empty() ? (m.is_graph() ? "g6" : "mp") : emit;
            if (parse_format(how) == Format::graph6)
                std::cout << to_graph6(m) << "\n";
            else
                std::cout << to_text(m);
        } else if (*colset_cmd) {
            Multipole m = read_multipole(file);
            ColouringSet col;
            if (connectors.empty()) {
                col = colouring_set(m);
                for (const auto& c : m.connectors) {
                    std::cout << "# " << c.name << (c.ordered ? " ordered" : " unordered");
                    for (int s : c.sids) std::cout << " " << s;
                    std::cout << "\n";
                }
            } else {
                col = colouring_set_in(m, split_list(connectors));
                std::cout << "# positions " << connectors << "\n";
            }
            std::cout << col.dump();
            std::cout << "# " << col.size() << " tuples\n";
        } else if (*grade_cmd) {
            for (const auto& g : load(file, format)) {
                auto j = nlohmann::ordered_json::parse(to_json(grade(g.graph), g.graph));
                nlohmann::ordered_json line;
                line["id"] = g.id;
                for (auto it = j.begin(); it != j.end(); ++it) line[it.key()] = it.value();
                std::cout << line.dump() << "\n";
            }
        } else if (*cc_cmd) {
            for (const auto& g : load(file, format)) {
                int gi = girth(g.graph);
                std::cout << g.id << " order " << g.graph.order() << " girth "
                          << (gi >= kInfinite ? "inf" : std::to_string(gi)) << " cc "
                          << cc_text(cyclic_connectivity(g.graph)) << "\n";
            }
        } else if (*clusters_cmd) {
            for (const auto& g : load(file, format)) {
                auto j = nlohmann::ordered_json::parse(to_json(five_cycle_clusters(g.graph)));
                nlohmann::ordered_json line;
                line["id"] = g.id;
                line["report"] = j;
                std::cout << line.dump() << "\n";
            }
        } else if (*iso_cmd) {
            bool same = isomorphic(read_any(file), read_any(file_b));
            std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
        }
    } catch (const VerificationError& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kVerificationError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return 0;
}
