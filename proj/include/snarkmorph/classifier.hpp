#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "snarkmorph/criticality.hpp"
#include "snarkmorph/multipole.hpp"

namespace snarkmorph {

enum class Format { graph6, interchange };
std::string to_string(Format f);
Format parse_format(const std::string& s);  // "g6" | "graph6" | "mp" | "interchange"
// .mp and .txt files hold interchange records, everything else graph6.
Format format_for_path(const std::string& path);

struct IngestedGraph {
    std::string id;  // <file>:<line>
    Multipole graph;
};

struct Diagnostic {
    std::string id;
    std::string message;
};

struct IngestResult {
    std::vector<IngestedGraph> graphs;
    std::vector<Diagnostic> rejected;
};

// One graph6 string per line; interchange records each start with an MP
// header line. Bad lines are reported and skipped. Throws InputError only
// when the file cannot be read.
IngestResult ingest(const std::string& path, Format format);
IngestResult ingest(const std::string& path);
IngestResult ingest_stream(std::istream& in, const std::string& name, Format format);

struct Substructure {
    std::string pattern;  // P_NN, ..., superpentagon, or a catalog cluster name
    int count = 0;
};

struct ClassificationRecord {
    std::string id;
    int order = 0;
    int girth = 0;
    int cc = 0;
    bool cc_infinite = false;
    std::uint64_t colourings = 0;
    Grade grade = Grade::not_snark;
    std::optional<std::array<int, 2>> witness;
    std::vector<Substructure> substructures;  // nonzero counts only
    std::vector<std::string> classes;
    bool unexplained = false;

    int count(const std::string& pattern) const;
    bool has_class(const std::string& c) const;
};

// Classes:
//   "NN substitution" .. "3NT substitution"  contains P_NN .. P_3NT
//   "superpentagon/5-product"  a cycle-separating 5-cut with a perfect
//                              superpentagon of more than 5 vertices on one side
//   "Isaacs flower"            isomorphic to some J_n
//   "dot product"              splits along a 4-cut into two snarks
//   "Petersen", "dumbbell", "32-A", "34-A" .. "34-F", "36-A", "36-B",
//   "38-A", "42-A", "strict TTT"  isomorphic to the canonical member
ClassificationRecord classify(const Multipole& g, const std::string& id = "");

// Names of the five composition poles, in report order.
const std::vector<std::string>& composition_patterns();
// The pole used as search template for a composition pattern.
const Multipole& composition_template(const std::string& pattern);
// Every wiring of the pattern's parts, pairwise non-isomorphic; the first is
// composition_template(pattern).
const std::vector<Multipole>& composition_variants(const std::string& pattern);

struct CorpusFilter {
    int min_order = 0;
    int max_order = 0;  // 0 = unbounded
    int min_cc = 0;
    std::optional<Grade> grade;
};

struct CorpusManifest {
    std::vector<std::string> sources;
    Format format = Format::graph6;
    CorpusFilter filter;
    std::vector<std::pair<int, int>> counts;  // (order, records)
    int rejected = 0;
};

struct Corpus {
    CorpusManifest manifest;
    std::vector<ClassificationRecord> records;
};

// Classifies in parallel and keeps input order. Order filters apply before
// classification, connectivity and grade after.
Corpus classify_corpus(const std::vector<IngestedGraph>& graphs, const CorpusFilter& filter = {});
Corpus classify_files(const std::vector<std::string>& paths, std::optional<Format> format,
                      const CorpusFilter& filter = {});

enum class ReportTemplate { table1, table2, table34, json };
ReportTemplate parse_report_template(const std::string& s);
std::string report(const std::vector<ClassificationRecord>& records, ReportTemplate t);
std::string to_json(const ClassificationRecord& r);
std::string to_json(const Corpus& c);
Grade parse_grade(const std::string& s);

}  // namespace snarkmorph
