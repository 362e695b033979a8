#pragma once

// Batch front end: per-graph analysis, theorem sweeps over corpora, table
// reproduction and the exception-family audit, with JSON and CSV output.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pancyclic/cycles.hpp"
#include "pancyclic/enumerate.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/graph6.hpp"
#include "pancyclic/metrics.hpp"
#include "pancyclic/rational.hpp"
#include "pancyclic/spectral.hpp"
#include "pancyclic/theorems.hpp"

namespace pancyclic::harness {

using Json = nlohmann::ordered_json;

// --- selection --------------------------------------------------------------

enum class LemmaCheck { Lemma2, Lemma3, Lemma4, Lemma5, Inequalities };

inline std::string_view lemma_key(LemmaCheck c) {
    switch (c) {
        case LemmaCheck::Lemma2: return "lemma2";
        case LemmaCheck::Lemma3: return "lemma3";
        case LemmaCheck::Lemma4: return "lemma4";
        case LemmaCheck::Lemma5: return "lemma5";
        case LemmaCheck::Inequalities: return "ineq";
    }
    return "";
}

struct Selection {
    std::vector<TheoremId> theorems;
    std::vector<LemmaCheck> lemmas;

    bool empty() const { return theorems.empty() && lemmas.empty(); }

    static Selection all() {
        return {{kAllTheorems.begin(), kAllTheorems.end()},
                {LemmaCheck::Lemma2, LemmaCheck::Lemma3, LemmaCheck::Lemma4, LemmaCheck::Lemma5,
                 LemmaCheck::Inequalities}};
    }

    /// Comma-separated keys: lemma1, t6..t11, lemma2..lemma5, ineq, or "all".
    static Selection parse(std::string_view text) {
        Selection s;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view key = text.substr(start, end - start);
            if (key == "all") {
                s = all();
            } else if (!key.empty()) {
                if (auto t = parse_theorem_key(key)) {
                    if (std::find(s.theorems.begin(), s.theorems.end(), *t) == s.theorems.end()) s.theorems.push_back(*t);
                } else {
                    bool found = false;
                    for (LemmaCheck c : {LemmaCheck::Lemma2, LemmaCheck::Lemma3, LemmaCheck::Lemma4, LemmaCheck::Lemma5,
                                         LemmaCheck::Inequalities}) {
                        if (lemma_key(c) == key) {
                            if (std::find(s.lemmas.begin(), s.lemmas.end(), c) == s.lemmas.end()) s.lemmas.push_back(c);
                            found = true;
                        }
                    }
                    if (!found) throw InvalidArgument("unknown theorem key '" + std::string(key) + "'");
                }
            }
            if (end == text.size()) break;
            start = end + 1;
        }
        if (s.empty()) throw InvalidArgument("no theorem keys given");
        std::sort(s.theorems.begin(), s.theorems.end());
        std::sort(s.lemmas.begin(), s.lemmas.end());
        return s;
    }
};

// --- serialisation ----------------------------------------------------------

inline Json quantity_json(const std::optional<Quantity>& q) {
    if (!q) return nullptr;
    return q->text();
}

inline Json verdict_json(const TheoremVerdict& v, const std::string& g6, GraphFacts& f) {
    Json j;
    j["graph6"] = g6;
    j["n"] = f.n();
    j["m"] = f.m();
    j["delta"] = f.delta();
    j["theorem"] = theorem_key(v.theorem);
    j["hypothesis_met"] = v.hypothesis_met;
    j["side_condition_failure"] = v.side_condition_failure.empty() ? Json(nullptr) : Json(v.side_condition_failure);
    j["lhs"] = quantity_json(v.lhs);
    j["relation"] = relation_symbol(v.relation);
    j["rhs"] = quantity_json(v.rhs);
    j["threshold_met"] = v.threshold_met;
    j["boundary"] = v.boundary;
    j["conclusion"] = conclusion_key(v.conclusion);
    if (v.exception_member) j["exception_member"] = np_name(*v.exception_member, f.n());
    if (!v.bipartite_kind.empty()) j["bipartite_kind"] = v.bipartite_kind;
    if (!v.missing_cycle_lengths.empty()) j["missing_cycle_lengths"] = v.missing_cycle_lengths;
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

inline Json inequality_json(const InequalityCheck& c) {
    return Json{{"name", c.name},
                {"lhs", c.lhs.text()},
                {"relation", relation_symbol(c.relation)},
                {"rhs", c.rhs.text()},
                {"holds", c.holds}};
}

/// Fixed CSV columns for verdict records.
inline constexpr std::string_view kVerdictCsvHeader =
    "graph6,n,m,delta,theorem,hypothesis_met,lhs,relation,rhs,conclusion,exception_member,missing_cycle_lengths";

inline std::string csv_field(const Json& v) {
    std::string s;
    if (v.is_null()) return s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + csv_field(v[i]);
    } else {
        s = v.dump();
    }
    bool quote = s.find_first_of(",\"\n") != std::string::npos;
    if (!quote) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

inline std::string verdict_csv_row(const Json& r) {
    auto get = [&](const char* key) { return r.contains(key) ? csv_field(r[key]) : std::string(); };
    return get("graph6") + "," + get("n") + "," + get("m") + "," + get("delta") + "," + get("theorem") + "," +
           get("hypothesis_met") + "," + get("lhs") + "," + get("relation") + "," + get("rhs") + "," +
           get("conclusion") + "," + get("exception_member") + "," + get("missing_cycle_lengths");
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeOptions {
    std::int64_t budget = kDefaultSearchBudget;
};

/// Everything the library computes for one graph. Quantities that are
/// undefined for this graph are reported as null with an "_error" sibling.
inline Json analyze(const Graph& g, const AnalyzeOptions& opts = {}) {
    GraphFacts f(g, opts.budget);
    const std::string g6 = graph6::encode(g);
    Json r;
    r["graph6"] = g6;
    r["n"] = f.n();
    r["m"] = f.m();
    r["delta"] = f.delta();
    r["degree_sequence"] = degree_sequence(g);
    r["connected"] = f.connected();
    r["components"] = component_sets(g).size();
    r["bipartite"] = f.bipartite();
    r["complete_bipartite"] = f.complete_bipartite();
    r["complement_connected"] = f.complement_connected();
    r["diameter"] = f.connected() ? Json(f.distances().max_finite()) : Json(nullptr);

    if (f.connected()) {
        r["wiener"] = f.wiener_index();
    } else {
        r["wiener"] = nullptr;
        r["wiener_error"] = "disconnected graph";
    }
    r["harary"] = to_string(f.harary_index());
    r["harary_float"] = format_double(to_double(f.harary_index()));
    if (f.complement_connected()) {
        r["complement_wiener"] = f.complement_wiener_index();
    } else {
        r["complement_wiener"] = nullptr;
        r["complement_wiener_error"] = "disconnected complement";
    }
    r["complement_harary"] = to_string(f.complement_harary_index());

    try {
        auto rho = distance_spectral_radius(g);
        r["rho"] = format_double(rho.value);
        r["rho_residual"] = rho.residual;
        r["rho_iterations"] = rho.iterations;
    } catch (const Error& e) {
        r["rho"] = nullptr;
        r["rho_error"] = e.what();
    }
    try {
        r["rho_star"] = format_double(f.rho_star());
        r["rho_star_complement"] = format_double(f.complement_rho_star());
    } catch (const Error& e) {
        r["rho_star_error"] = e.what();
    }

    CycleSpectrum spectrum = cycle_spectrum(g, opts.budget);
    Json witnesses = Json::object();
    for (const auto& [k, w] : spectrum.witnesses) witnesses[std::to_string(k)] = w;
    r["cycle_spectrum"] = Json{{"present", spectrum.present},
                               {"missing", spectrum.missing},
                               {"unknown", spectrum.unknown},
                               {"pancyclic", spectrum.pancyclic()},
                               {"witnesses", witnesses}};
    auto member = f.np_member();
    r["np_member"] = member ? Json(np_name(*member, f.n())) : Json(nullptr);

    Json verdicts = Json::array();
    for (TheoremId t : kAllTheorems) {
        try {
            TheoremVerdict v = check(t, f);
            verdicts.push_back(verdict_json(v, g6, f));
        } catch (const DisconnectedGraph& e) {
            verdicts.push_back(Json{{"graph6", g6}, {"theorem", theorem_key(t)}, {"hypothesis_met", false},
                                    {"conclusion", conclusion_key(Conclusion::NotApplicable)}, {"error", e.what()}});
        }
    }
    r["verdicts"] = verdicts;

    Json lemmas = Json::array();
    auto add = [&](auto&& fn) {
        try {
            lemmas.push_back(inequality_json(fn()));
        } catch (const Error&) {
            // Not applicable to this graph.
        }
    };
    add([&] { return check_lemma2(f); });
    add([&] { return check_lemma3(f); });
    add([&] { return check_lemma4(f); });
    add([&] { return check_lemma5(f); });
    r["lemmas"] = lemmas;
    Json ineq = Json::array();
    if (f.connected()) {
        for (const auto& c : verify_intermediate_inequalities(f)) ineq.push_back(inequality_json(c));
    }
    r["inequalities"] = ineq;
    return r;
}

inline bool analysis_has_violation(const Json& report) {
    for (const auto& v : report["verdicts"]) {
        if (v["conclusion"] == conclusion_key(Conclusion::Violation)) return true;
    }
    return false;
}

// --- sweep --------------------------------------------------------------------

struct CheckTally {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
};

/// Order-independent sweep totals. Records are sorted before output, so the
/// serialised report does not depend on how graphs were split across workers.
struct SweepAggregate {
    std::uint64_t graphs = 0;
    std::uint64_t disconnected = 0;
    std::uint64_t round_trip_failures = 0;
    std::map<std::string, std::map<std::string, std::uint64_t>> counts;
    std::map<std::string, CheckTally> checks;
    std::vector<Json> exceptions;
    std::vector<Json> violations;
    std::vector<Json> undecided;
    std::vector<Json> failed_checks;
    std::vector<std::string> round_trip_failed;

    void merge(SweepAggregate&& o) {
        graphs += o.graphs;
        disconnected += o.disconnected;
        round_trip_failures += o.round_trip_failures;
        for (auto& [t, classes] : o.counts) {
            for (auto& [c, k] : classes) counts[t][c] += k;
        }
        for (auto& [name, tally] : o.checks) {
            checks[name].checked += tally.checked;
            checks[name].failed += tally.failed;
        }
        auto append = [](std::vector<Json>& dst, std::vector<Json>& src) {
            dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
        };
        append(exceptions, o.exceptions);
        append(violations, o.violations);
        append(undecided, o.undecided);
        append(failed_checks, o.failed_checks);
        round_trip_failed.insert(round_trip_failed.end(), o.round_trip_failed.begin(), o.round_trip_failed.end());
    }

    std::uint64_t violation_count() const { return violations.size(); }
};

namespace detail {

inline bool record_less(const Json& a, const Json& b) {
    const std::string ka = a.value("graph6", "") + "\x1f" + a.value("theorem", a.value("check", ""));
    const std::string kb = b.value("graph6", "") + "\x1f" + b.value("theorem", b.value("check", ""));
    if (ka != kb) return ka < kb;
    return a.dump() < b.dump();
}

inline void sort_records(std::vector<Json>& v) { std::sort(v.begin(), v.end(), record_less); }

}  // namespace detail

struct SweepItem {
    Graph graph;
    /// Original graph6 line for file input; empty for enumerated graphs.
    std::string source_text;
};

struct SweepOptions {
    Selection selection = Selection::all();
    int jobs = 1;
    std::int64_t budget = kDefaultSearchBudget;
    std::size_t batch_size = 8192;
};

/// Runs every selected check on one graph.
inline void sweep_one(const SweepItem& item, const Selection& sel, std::int64_t budget, SweepAggregate& agg) {
    ++agg.graphs;
    const std::string g6 = graph6::encode(item.graph);
    bool round_trip = graph6::decode(g6) == item.graph;
    if (!item.source_text.empty()) {
        std::string_view src = item.source_text;
        if (src.substr(0, graph6::kHeader.size()) == graph6::kHeader) src.remove_prefix(graph6::kHeader.size());
        round_trip = round_trip && src == g6;
    }
    if (!round_trip) {
        ++agg.round_trip_failures;
        agg.round_trip_failed.push_back(item.source_text.empty() ? g6 : item.source_text);
    }

    GraphFacts f(item.graph, budget);
    if (!f.connected()) ++agg.disconnected;
    for (TheoremId t : sel.theorems) {
        auto& row = agg.counts[std::string(theorem_key(t))];
        if (!f.connected() && t != TheoremId::Lemma1) {
            ++row["skipped_disconnected"];
            continue;
        }
        TheoremVerdict v = check(t, f);
        ++row[std::string(conclusion_key(v.conclusion))];
        if (v.conclusion == Conclusion::NotApplicable) ++row[v.hypothesis_met ? "threshold_not_met" : "hypothesis_not_met"];
        if (v.boundary) ++row["boundary"];
        switch (v.conclusion) {
            case Conclusion::ExceptionNP:
            case Conclusion::ExceptionBipartite: agg.exceptions.push_back(verdict_json(v, g6, f)); break;
            case Conclusion::Violation: agg.violations.push_back(verdict_json(v, g6, f)); break;
            case Conclusion::Undecided: agg.undecided.push_back(verdict_json(v, g6, f)); break;
            default: break;
        }
    }
    auto tally = [&](std::string_view name, const InequalityCheck& c) {
        auto& t = agg.checks[std::string(name)];
        ++t.checked;
        if (!c.holds) {
            ++t.failed;
            Json j = inequality_json(c);
            j["graph6"] = g6;
            j["check"] = name;
            agg.failed_checks.push_back(std::move(j));
        }
    };
    for (LemmaCheck c : sel.lemmas) {
        switch (c) {
            case LemmaCheck::Lemma2:
                if (f.connected()) tally("lemma2", check_lemma2(f));
                break;
            case LemmaCheck::Lemma3: tally("lemma3", check_lemma3(f)); break;
            case LemmaCheck::Lemma4:
                if (f.connected() && f.bipartite()) tally("lemma4", check_lemma4(f));
                break;
            case LemmaCheck::Lemma5:
                if (f.bipartite() && f.n() >= 8) tally("lemma5", check_lemma5(f));
                break;
            case LemmaCheck::Inequalities:
                if (f.connected()) {
                    for (const auto& ic : verify_intermediate_inequalities(f)) tally("ineq: " + ic.name, ic);
                }
                break;
        }
    }
}

/// Processes items batch by batch; within a batch, worker w takes items
/// w, w+jobs, w+2*jobs, ... into its own aggregate.
class SweepRunner {
public:
    explicit SweepRunner(SweepOptions opts) : opts_(std::move(opts)) {
        if (opts_.jobs < 1) opts_.jobs = 1;
        if (opts_.selection.empty()) throw InvalidArgument("sweep needs at least one theorem selected");
    }

    void add(SweepItem item) {
        batch_.push_back(std::move(item));
        if (batch_.size() >= opts_.batch_size) flush();
    }

    SweepAggregate finish() {
        flush();
        detail::sort_records(total_.exceptions);
        detail::sort_records(total_.violations);
        detail::sort_records(total_.undecided);
        detail::sort_records(total_.failed_checks);
        std::sort(total_.round_trip_failed.begin(), total_.round_trip_failed.end());
        return std::move(total_);
    }

private:
    void flush() {
        if (batch_.empty()) return;
        const auto jobs = static_cast<std::size_t>(opts_.jobs);
        std::vector<SweepAggregate> parts(jobs);
        auto work = [&](std::size_t w) {
            for (std::size_t i = w; i < batch_.size(); i += jobs) {
                sweep_one(batch_[i], opts_.selection, opts_.budget, parts[w]);
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            std::vector<std::exception_ptr> errors(jobs);
            for (std::size_t w = 0; w < jobs; ++w) {
                threads.emplace_back([&, w] {
                    try {
                        work(w);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto& t : threads) t.join();
            for (auto& e : errors) {
                if (e) std::rethrow_exception(e);
            }
        }
        for (auto& p : parts) total_.merge(std::move(p));
        batch_.clear();
    }

    SweepOptions opts_;
    std::vector<SweepItem> batch_;
    SweepAggregate total_;
};

/// Sweeps every connected labelled graph on n <= 7 vertices with minimum
/// degree >= 2.
inline SweepAggregate sweep_enumerated(int n, const SweepOptions& opts) {
    SweepRunner runner(opts);
    enumerate_connected(n, 2, [&](const Graph& g) { runner.add({g, {}}); });
    return runner.finish();
}

/// Sweeps graph6 lines from a stream. On a parse or I/O error the exception
/// message states how many graphs were already processed.
inline SweepAggregate sweep_stream(std::istream& in, const SweepOptions& opts) {
    SweepRunner runner(opts);
    std::string line;
    std::size_t line_no = 0, processed = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            runner.add({graph6::decode(line), line});
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + " (" + std::to_string(processed) +
                                 " graphs read before the error): " + e.detail(),
                             e.offset());
        }
        ++processed;
    }
    if (in.bad()) throw Error("I/O error after " + std::to_string(processed) + " graphs");
    return runner.finish();
}

inline SweepAggregate sweep_files(const std::vector<std::string>& paths, const SweepOptions& opts) {
    SweepAggregate total;
    for (const auto& p : paths) {
        std::ifstream in(p);
        if (!in) throw Error("cannot open " + p);
        total.merge(sweep_stream(in, opts));
    }
    detail::sort_records(total.exceptions);
    detail::sort_records(total.violations);
    detail::sort_records(total.undecided);
    detail::sort_records(total.failed_checks);
    std::sort(total.round_trip_failed.begin(), total.round_trip_failed.end());
    return total;
}

inline Json sweep_json(const SweepAggregate& a, const std::string& source) {
    Json j;
    j["source"] = source;
    j["graphs"] = a.graphs;
    j["disconnected"] = a.disconnected;
    j["round_trip_failures"] = a.round_trip_failures;
    Json counts = Json::object();
    for (const auto& [t, classes] : a.counts) {
        Json row = Json::object();
        for (const auto& [c, k] : classes) row[c] = k;
        counts[t] = row;
    }
    j["counts"] = counts;
    Json checks = Json::object();
    for (const auto& [name, t] : a.checks) checks[name] = Json{{"checked", t.checked}, {"failed", t.failed}};
    j["checks"] = checks;
    j["violations"] = a.violations;
    j["undecided"] = a.undecided;
    j["failed_checks"] = a.failed_checks;
    j["exceptions"] = a.exceptions;
    j["round_trip_failed"] = a.round_trip_failed;
    return j;
}

/// CSV columns: kind,theorem,class,count followed by the verdict columns.
/// kind is "count" (theorem/class/count filled) or "record" (verdict
/// columns filled).
inline constexpr std::string_view kSweepCsvHeader =
    "kind,theorem,class,count,graph6,n,m,delta,hypothesis_met,lhs,relation,rhs,exception_member,missing_cycle_lengths";

inline std::string sweep_csv(const SweepAggregate& a) {
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    for (const auto& [t, classes] : a.counts) {
        for (const auto& [c, k] : classes) out << "count," << t << ',' << c << ',' << k << ",,,,,,,,,,\n";
    }
    for (const auto& [name, tally] : a.checks) {
        out << "count," << csv_field(name) << ",checked," << tally.checked << ",,,,,,,,,,\n";
        out << "count," << csv_field(name) << ",failed," << tally.failed << ",,,,,,,,,,\n";
    }
    auto record = [&](const Json& r) {
        auto get = [&](const char* key) { return r.contains(key) ? csv_field(r[key]) : std::string(); };
        out << "record," << get("theorem") << ',' << get("conclusion") << ",," << get("graph6") << ',' << get("n")
            << ',' << get("m") << ',' << get("delta") << ',' << get("hypothesis_met") << ',' << get("lhs") << ','
            << get("relation") << ',' << get("rhs") << ',' << get("exception_member") << ','
            << get("missing_cycle_lengths") << '\n';
    };
    for (const auto& r : a.violations) record(r);
    for (const auto& r : a.undecided) record(r);
    for (const auto& r : a.exceptions) record(r);
    return out.str();
}

// --- tables -------------------------------------------------------------------

struct TableRow {
    std::string graph;
    NpMember member;
    int n = 0;
    double computed = 0.0;
    std::string printed;
    bool match = false;
    Rational threshold;
    std::string printed_threshold;
    bool threshold_printed_match = false;
};

/// Rounds `x` to the number of decimals shown in `printed` and compares.
inline bool rounds_to(double x, std::string_view printed) {
    auto dot = printed.find('.');
    int decimals = dot == std::string_view::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
    long long want = 0;
    for (char c : printed) {
        if (c == '.') continue;
        want = want * 10 + (c - '0');
    }
    double scaled = x * std::pow(10.0, decimals);
    return std::llround(scaled) == want;
}

namespace detail {

struct PrintedRow {
    NpMember member;
    const char* value;
    const char* threshold;
};

inline constexpr std::array<NpMember, 9> kTableOrder{
    NpMember::K5_6K1,  NpMember::K3_K2_3K1, NpMember::K3_K14_K1, NpMember::K3_K13_K2, NpMember::K2_2K1_5K1,
    NpMember::K4_5K1, NpMember::K12_4K1,   NpMember::K2_K13_K1, NpMember::K3_4K1,
};

inline constexpr std::array<const char*, 9> kTable1Values{"13.245",  "9.5947",  "10.8341", "10.7672", "10.7624",
                                                          "10.6325", "8.2736", "8",       "8"};
inline constexpr std::array<const char*, 9> kTable1Thresholds{"12.727", "9.25", "10.444", "10.444", "10.444",
                                                              "10.444", "8",    "8",      "8"};
inline constexpr std::array<const char*, 9> kTable2Values{"5", "4.0663", "4.4115", "4.5455", "4",
                                                          "4", "3",      "3.4575", "3"};
inline constexpr std::array<const char*, 9> kTable2Thresholds{"3.4546", "2.9286", "3.1389", "3.1389", "3.1389",
                                                              "3.1389", "2.667",  "2.667",  "2.667"};

}  // namespace detail

/// Distance spectral radius of the nine fixed-order exception graphs against
/// n+3-14/n, with the published values.
inline std::vector<TableRow> reproduce_table1() {
    std::vector<TableRow> rows;
    for (std::size_t i = 0; i < detail::kTableOrder.size(); ++i) {
        NpMember m = detail::kTableOrder[i];
        Graph g = np_graph(m);
        TableRow r;
        r.graph = np_name(m);
        r.member = m;
        r.n = g.order();
        r.computed = distance_spectral_radius(g).value;
        r.printed = detail::kTable1Values[i];
        r.match = rounds_to(r.computed, r.printed);
        r.threshold = threshold::t10(r.n);
        r.printed_threshold = detail::kTable1Thresholds[i];
        r.threshold_printed_match = rounds_to(to_double(r.threshold), r.printed_threshold);
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Harary spectral radius of the complements against (5n^2-23n+28)/(n(n-1)).
inline std::vector<TableRow> reproduce_table2() {
    std::vector<TableRow> rows;
    for (std::size_t i = 0; i < detail::kTableOrder.size(); ++i) {
        NpMember m = detail::kTableOrder[i];
        Graph g = np_graph(m);
        TableRow r;
        r.graph = np_name(m);
        r.member = m;
        r.n = g.order();
        r.computed = harary_spectral_radius(complement(g)).value;
        r.printed = detail::kTable2Values[i];
        r.match = rounds_to(r.computed, r.printed);
        r.threshold = threshold::t11(r.n);
        r.printed_threshold = detail::kTable2Thresholds[i];
        r.threshold_printed_match = rounds_to(to_double(r.threshold), r.printed_threshold);
        rows.push_back(std::move(r));
    }
    return rows;
}

inline Json table_json(const std::vector<TableRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        out.push_back(Json{{"graph", r.graph},
                           {"n", r.n},
                           {"computed", format_double(r.computed)},
                           {"printed", r.printed},
                           {"match", r.match},
                           {"threshold", to_string(r.threshold)},
                           {"threshold_float", format_double(to_double(r.threshold))},
                           {"printed_threshold", r.printed_threshold},
                           {"threshold_printed_match", r.threshold_printed_match}});
    }
    return out;
}

inline constexpr std::string_view kTablesCsvHeader =
    "table,graph,n,computed,printed,match,threshold,threshold_float,printed_threshold,threshold_printed_match";

inline std::string tables_csv(const std::vector<TableRow>& t1, const std::vector<TableRow>& t2) {
    std::ostringstream out;
    out << kTablesCsvHeader << '\n';
    auto emit = [&](int table, const std::vector<TableRow>& rows) {
        for (const auto& r : rows) {
            out << table << ',' << csv_field(r.graph) << ',' << r.n << ',' << format_double(r.computed) << ','
                << r.printed << ',' << (r.match ? "true" : "false") << ',' << to_string(r.threshold) << ','
                << format_double(to_double(r.threshold)) << ',' << r.printed_threshold << ','
                << (r.threshold_printed_match ? "true" : "false") << '\n';
        }
    };
    emit(1, t1);
    emit(2, t2);
    return out.str();
}

// --- exception-family audit ---------------------------------------------------

struct AuditClaim {
    /// Which proof the claim comes from: "lemma1", "t6", "t7", ... .
    std::string source;
    std::string name;
    Quantity lhs;
    Relation relation = Relation::LessEqual;
    Quantity rhs;
    bool holds = false;
    /// Claims with exact sides are part of the audit's pass/fail; float
    /// claims (eigenvalues) are reported for information.
    bool required = true;
};

struct AuditRow {
    NpMember member;
    int n = 0;
    std::string name;
    int m = 0;
    CycleSpectrum spectrum;
    long long wiener = 0;
    Rational harary;
    Rational complement_harary;
    bool complement_connected = false;
    double rho = 0.0;
    double rho_star_complement = 0.0;
    std::vector<AuditClaim> claims;

    bool required_claims_hold() const {
        for (const auto& c : claims) {
            if (c.required && !c.holds) return false;
        }
        return true;
    }
};

inline AuditRow audit_member(NpMember member, int n) {
    Graph g = fixed_order(member) == 0 ? np_graph(member, n) : np_graph(member);
    GraphFacts f(g);
    AuditRow r;
    r.member = member;
    r.n = g.order();
    r.name = np_name(member, r.n);
    r.m = g.edge_count();
    r.spectrum = cycle_spectrum(g);
    r.wiener = f.wiener_index();
    r.harary = f.harary_index();
    r.complement_harary = f.complement_harary_index();
    r.complement_connected = f.complement_connected();
    r.rho = f.rho();
    r.rho_star_complement = f.complement_rho_star();
    const long long nn = r.n;

    auto exact = [&](std::string source, std::string name, Rational lhs, Relation rel, Rational rhs) {
        bool holds = compare(lhs, rel, rhs);
        r.claims.push_back(
            {std::move(source), std::move(name), Quantity::of(std::move(lhs)), rel, Quantity::of(std::move(rhs)), holds, true});
    };
    auto approx = [&](std::string source, std::string name, double lhs, Relation rel, const Rational& rhs) {
        bool holds = compare(lhs, rel, to_double(rhs));
        r.claims.push_back({std::move(source), std::move(name), Quantity::of(lhs), rel, Quantity::of(rhs), holds, false});
    };

    exact("lemma1", "m >= C(n-2,2)+4", Rational(r.m), Relation::GreaterEqual, threshold::lemma1_edges(nn));
    exact("lemma1", "number of missing cycle lengths > 0", Rational(static_cast<long long>(r.spectrum.missing.size())),
          Relation::Greater, Rational(0));
    exact("t6", "W(G) <= (n^2+3n-14)/2", Rational(r.wiener), Relation::LessEqual, threshold::t6(nn));
    exact("t7", "complement components > 1",
          Rational(static_cast<long long>(component_sets(f.complement_graph()).size())), Relation::Greater, Rational(1));
    exact("t8", "H(G) >= (n^2-3n+7)/2", r.harary, Relation::GreaterEqual, threshold::t8(nn));
    if (nn >= 8) {
        if (member == NpMember::K2_Kn4_2K1) {
            exact("t9", "H(complement) >= (n^2-n-8)/4", r.complement_harary, Relation::GreaterEqual,
                  Rational(nn * nn - nn - 8, 4));
            exact("t9", "(n^2-n-8)/4 > (5n^2-23n+28)/(2(n-1))", Rational(nn * nn - nn - 8, 4), Relation::Greater,
                  threshold::t9(nn));
            exact("t9", "H(complement) > (5n^2-23n+28)/(2(n-1))", r.complement_harary, Relation::Greater,
                  threshold::t9(nn));
        } else {
            exact("t9", "H(complement) <= (5n^2-23n+28)/(2(n-1))", r.complement_harary, Relation::LessEqual,
                  threshold::t9(nn));
        }
    }
    if (member == NpMember::K2_Kn4_2K1) {
        approx("t10", "rho > n+3-14/n", r.rho, Relation::Greater, threshold::t10(nn));
        approx("t11", "rho*(complement) > (5n^2-23n+28)/(n(n-1))", r.rho_star_complement, Relation::Greater,
               threshold::t11(nn));
    } else {
        bool listed_t10 = member == NpMember::K2_K13_K1 || member == NpMember::K3_4K1;
        approx("t10", listed_t10 ? "rho <= n+3-14/n (listed exception)" : "rho > n+3-14/n", r.rho,
               listed_t10 ? Relation::LessEqual : Relation::Greater, threshold::t10(nn));
        approx("t11", "rho*(complement) > (5n^2-23n+28)/(n(n-1))", r.rho_star_complement, Relation::Greater,
               threshold::t11(nn));
    }
    return r;
}

/// Every member of order <= n_max; the parameterised member for each
/// n in 5..n_max.
inline std::vector<AuditRow> np_audit(int n_max) {
    if (n_max < 5) throw InvalidArgument("np-audit needs n_max >= 5");
    if (n_max > kMaxOrder) throw InvalidArgument("np-audit needs n_max <= 64");
    std::vector<AuditRow> rows;
    for (int n = 5; n <= n_max; ++n) rows.push_back(audit_member(NpMember::K2_Kn4_2K1, n));
    for (NpMember m : kAllNpMembers) {
        if (fixed_order(m) != 0 && fixed_order(m) <= n_max) rows.push_back(audit_member(m, 0));
    }
    return rows;
}

inline Json audit_json(const std::vector<AuditRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json claims = Json::array();
        for (const auto& c : r.claims) {
            claims.push_back(Json{{"source", c.source},
                                  {"claim", c.name},
                                  {"lhs", c.lhs.text()},
                                  {"relation", relation_symbol(c.relation)},
                                  {"rhs", c.rhs.text()},
                                  {"holds", c.holds},
                                  {"required", c.required}});
        }
        out.push_back(Json{{"member", r.name},
                           {"n", r.n},
                           {"m", r.m},
                           {"edge_threshold", to_string(threshold::lemma1_edges(r.n))},
                           {"pancyclic", r.spectrum.pancyclic()},
                           {"cycle_lengths_present", r.spectrum.present},
                           {"missing_cycle_lengths", r.spectrum.missing},
                           {"wiener", r.wiener},
                           {"harary", to_string(r.harary)},
                           {"complement_harary", to_string(r.complement_harary)},
                           {"complement_connected", r.complement_connected},
                           {"rho", format_double(r.rho)},
                           {"rho_star_complement", format_double(r.rho_star_complement)},
                           {"required_claims_hold", r.required_claims_hold()},
                           {"claims", claims}});
    }
    return out;
}

inline constexpr std::string_view kAuditCsvHeader =
    "member,n,m,edge_threshold,pancyclic,missing_cycle_lengths,wiener,harary,complement_harary,rho,"
    "rho_star_complement,required_claims_hold";

inline std::string audit_csv(const std::vector<AuditRow>& rows) {
    std::ostringstream out;
    out << kAuditCsvHeader << '\n';
    for (const auto& r : rows) {
        std::string missing;
        for (std::size_t i = 0; i < r.spectrum.missing.size(); ++i) {
            missing += (i ? " " : "") + std::to_string(r.spectrum.missing[i]);
        }
        out << csv_field(r.name) << ',' << r.n << ',' << r.m << ',' << to_string(threshold::lemma1_edges(r.n)) << ','
            << (r.spectrum.pancyclic() ? "true" : "false") << ',' << missing << ',' << r.wiener << ','
            << to_string(r.harary) << ',' << to_string(r.complement_harary) << ',' << format_double(r.rho) << ','
            << format_double(r.rho_star_complement) << ',' << (r.required_claims_hold() ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace pancyclic::harness
