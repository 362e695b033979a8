// Command-line front end. Exit status: 0 no violations, 2 violations, 1 error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pancyclic/harness.hpp"

namespace {

using namespace pancyclic;
using harness::Json;

struct Options {
    std::vector<std::string> inputs;
    std::string graph;
    int enumerate = 0;
    std::string theorems = "all";
    int jobs = 1;
    std::string format = "json";
    std::string output;
    std::int64_t budget = kDefaultSearchBudget;
    int n_max = 30;
};

int default_jobs() {
    if (const char* env = std::getenv("PANCYCLIC_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j >= 1) return j;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw Error("cannot open output " + o.output);
    out << text;
    if (!out) throw Error("write failed: " + o.output);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Graph> read_analyze_inputs(const Options& o) {
    std::vector<Graph> graphs;
    if (!o.graph.empty()) graphs.push_back(graph6::parse_graph(o.graph));
    for (const auto& path : o.inputs) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && (std::isdigit(static_cast<unsigned char>(text[first])) || text[first] == '#')) {
            graphs.push_back(graph6::parse_edge_list(text));
        } else {
            std::istringstream lines(text);
            graph6::read_stream(lines, [&](const graph6::Record& r) { graphs.push_back(r.graph); });
        }
    }
    if (graphs.empty()) throw InvalidArgument("analyze needs --input or --graph");
    return graphs;
}

int run_analyze(const Options& o) {
    harness::AnalyzeOptions opts;
    opts.budget = o.budget;
    bool violation = false;
    std::vector<Json> reports;
    for (const Graph& g : read_analyze_inputs(o)) {
        reports.push_back(harness::analyze(g, opts));
        violation = violation || harness::analysis_has_violation(reports.back());
    }
    if (o.format == "csv") {
        std::string out(harness::kVerdictCsvHeader);
        out += '\n';
        for (const auto& r : reports) {
            for (const auto& v : r["verdicts"]) out += harness::verdict_csv_row(v) + "\n";
        }
        emit(o, out);
    } else {
        emit(o, dump(reports.size() == 1 ? reports.front() : Json(reports)));
    }
    return violation ? 2 : 0;
}

int run_sweep(const Options& o) {
    if (o.enumerate != 0 && !o.inputs.empty()) throw InvalidArgument("use either --enumerate or --input");
    if (o.enumerate == 0 && o.inputs.empty()) throw InvalidArgument("sweep needs --enumerate or --input");
    harness::SweepOptions opts;
    opts.selection = harness::Selection::parse(o.theorems);
    opts.jobs = o.jobs;
    opts.budget = o.budget;
    harness::SweepAggregate agg;
    std::string source;
    if (o.enumerate != 0) {
        agg = harness::sweep_enumerated(o.enumerate, opts);
        source = "enumerate:" + std::to_string(o.enumerate);
    } else {
        agg = harness::sweep_files(o.inputs, opts);
        for (const auto& p : o.inputs) source += (source.empty() ? "" : ",") + p;
    }
    emit(o, o.format == "csv" ? harness::sweep_csv(agg) : dump(harness::sweep_json(agg, source)));
    return agg.violation_count() > 0 ? 2 : 0;
}

int run_tables(const Options& o) {
    auto t1 = harness::reproduce_table1();
    auto t2 = harness::reproduce_table2();
    if (o.format == "csv") {
        emit(o, harness::tables_csv(t1, t2));
    } else {
        emit(o, dump(Json{{"table1", harness::table_json(t1)}, {"table2", harness::table_json(t2)}}));
    }
    return 0;
}

int run_np_audit(const Options& o) {
    auto rows = harness::np_audit(o.n_max);
    emit(o, o.format == "csv" ? harness::audit_csv(rows) : dump(harness::audit_json(rows)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pancyclicity certification via distance indices and spectral radii"};
    app.require_subcommand(1);
    Options o;
    o.jobs = default_jobs();

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", o.output, "Output path (default stdout)");
    };

    auto* analyze = app.add_subcommand("analyze", "Full report for each input graph");
    analyze->add_option("--input", o.inputs, "graph6 file or edge-list file");
    analyze->add_option("--graph", o.graph, "Inline graph6 string");
    analyze->add_option("--budget", o.budget, "Cycle search expansion budget")->check(CLI::PositiveNumber);
    common(analyze);

    auto* sweep = app.add_subcommand("sweep", "Check theorems over a corpus");
    sweep->add_option("--input", o.inputs, "graph6 files");
    sweep->add_option("--enumerate", o.enumerate, "Enumerate connected graphs with min degree 2 on n <= 7 vertices")
        ->check(CLI::Range(1, kMaxEnumerationOrder));
    sweep->add_option("--theorems", o.theorems, "Comma-separated: lemma1,t6..t11,lemma2..lemma5,ineq,all");
    sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
    sweep->add_option("--budget", o.budget, "Cycle search expansion budget")->check(CLI::PositiveNumber);
    common(sweep);

    auto* tables = app.add_subcommand("tables", "Spectral radius tables for the exception graphs");
    common(tables);

    auto* audit = app.add_subcommand("np-audit", "Audit the exception family");
    audit->add_option("--n-max", o.n_max, "Largest order audited")->check(CLI::Range(5, kMaxOrder));
    common(audit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return run_analyze(o);
        if (*sweep) return run_sweep(o);
        if (*tables) return run_tables(o);
        if (*audit) return run_np_audit(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
