// recolor: construct coloring graphs, reconstruct base graphs from unlabeled
// ones, extract color-class partitions and labeled link graphs, and run the
// census suites. Subcommands chain over kind-tagged JSON on stdin/stdout.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "recolor/census.hpp"
#include "recolor/coloring_graph.hpp"
#include "recolor/families.hpp"
#include "recolor/graph.hpp"
#include "recolor/labeled_link_graph.hpp"
#include "recolor/link_detect.hpp"
#include "recolor/partition_extract.hpp"

using namespace recolor;

namespace {

// env override for the default caps, e.g. RECOLOR_MAX_COLORINGS=5000000
Budget env_budget() {
    Budget b;
    auto load = [](const char* name, long long& slot) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            long long parsed = std::strtoll(v, &end, 10);
            if (end == v || *end != '\0' || parsed <= 0)
                throw std::invalid_argument(std::string(name) + " must be a positive integer");
            slot = parsed;
        }
    };
    load("RECOLOR_MAX_COLORINGS", b.max_colorings);
    load("RECOLOR_ISO_NODES", b.iso_nodes);
    load("RECOLOR_SELECTION_STEPS", b.selection_steps);
    return b;
}

SimpleGraph read_graph(const std::string& in_path) {
    std::string text;
    if (in_path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(in_path);
        if (!f) throw std::invalid_argument("cannot open input file: " + in_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw std::invalid_argument("empty graph input");
    return graph_from_text(text);
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << '\n';
}

// reconstruct, demanding success; the abort record goes to stderr so the
// failure mode stays visible in pipelines
LinkReport require_report(const SimpleGraph& c, const Budget& budget) {
    ReconstructionResult res = reconstruct_base(c, budget);
    if (const auto* abort = std::get_if<Abort>(&res)) {
        std::cerr << reconstruction_to_json(res, false) << "\n";
        throw StructuralError(std::string("reconstruction aborted (") +
                              abort_stage_name(abort->stage) + "): " + abort->detail);
    }
    return std::get<LinkReport>(std::move(res));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coloring graph construction, base reconstruction, and census checks"};
    app.require_subcommand(1);
    Budget budget;

    // --- gen ----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "emit a base graph from a named family");
    std::string gen_family, gen_arg, gen_out;
    bool gen_dot = false, gen_g6 = false;
    gen->add_option("family", gen_family,
                    "townhouse | basement | cone | named (cone reads its graph from stdin/--in)")
        ->required();
    gen->add_option("arg", gen_arg, "house count, or the graph name after `named`");
    std::string gen_in;
    gen->add_option("--in", gen_in, "input graph file for `cone`");
    gen->add_flag("--dot", gen_dot, "emit DOT instead of JSON");
    gen->add_flag("--g6", gen_g6, "emit graph6 instead of JSON");
    gen->add_option("--out", gen_out, "write to file instead of stdout");

    // --- cgraph --------------------------------------------------------------
    auto* cgraph = app.add_subcommand("cgraph", "construct the k-coloring graph of a base graph");
    int cg_k = 0;
    std::string cg_in, cg_out;
    bool cg_labels = false, cg_dot = false, cg_g6 = false;
    long long cg_strip = -1;
    cgraph->add_option("--k", cg_k, "palette size")->required();
    cgraph->add_option("--in", cg_in, "base graph file (default stdin)");
    cgraph->add_flag("--labels", cg_labels, "emit colorings and edge labels, not just the skeleton");
    cgraph->add_option("--strip", cg_strip, "relabel the skeleton with this permutation seed");
    cgraph->add_flag("--dot", cg_dot, "emit DOT with link colorings highlighted");
    cgraph->add_flag("--g6", cg_g6, "emit the skeleton as graph6");
    cgraph->add_option("--out", cg_out, "write to file instead of stdout");

    // --- reconstruct ----------------------------------------------------------
    auto* rec = app.add_subcommand("reconstruct",
                                   "recover base graph and palette size from an unlabeled "
                                   "coloring graph");
    std::string rec_in, rec_out;
    bool rec_explain = false;
    rec->add_option("--in", rec_in, "unlabeled graph file (default stdin)");
    rec->add_flag("--explain", rec_explain, "include per-stage candidate attrition");
    rec->add_option("--out", rec_out, "write to file instead of stdout");

    // --- partition -------------------------------------------------------------
    auto* part = app.add_subcommand("partition",
                                    "extract the color-class partition at one link vertex");
    std::string part_in, part_out;
    int part_vertex = -1;
    bool part_explain = false;
    part->add_option("--vertex", part_vertex, "link vertex id (default: smallest)");
    part->add_option("--in", part_in, "unlabeled graph file (default stdin)");
    part->add_flag("--explain", part_explain, "include candidate pruning counters");
    part->add_option("--out", part_out, "write to file instead of stdout");

    // --- llg -------------------------------------------------------------------
    auto* llg_cmd = app.add_subcommand("llg", "build the labeled link graph at one link vertex");
    std::string llg_in, llg_out;
    int llg_vertex = -1;
    bool llg_dot = false;
    llg_cmd->add_option("--vertex", llg_vertex, "anchor link vertex id (default: smallest)");
    llg_cmd->add_option("--in", llg_in, "unlabeled graph file (default stdin)");
    llg_cmd->add_flag("--dot", llg_dot, "emit DOT with part/color edge annotations");
    llg_cmd->add_option("--out", llg_out, "write to file instead of stdout");

    // --- verify ------------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "run a census suite");
    std::string ver_suite = "all", ver_out;
    int ver_jobs = 1;
    ver->add_option("--suite", ver_suite,
                    "townhouse | collisions | c3c5 | roundtrip | no-collision | all")
        ->check(CLI::IsMember(
            {"townhouse", "collisions", "c3c5", "roundtrip", "no-collision", "all"}));
    ver->add_option("--jobs", ver_jobs, "worker threads for the roundtrip suite")
        ->check(CLI::PositiveNumber);
    ver->add_option("--out", ver_out, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
        budget = env_budget();

        if (*gen) {
            SimpleGraph g;
            if (gen_family == "townhouse" || gen_family == "basement") {
                if (gen_arg.empty())
                    throw std::invalid_argument(gen_family + " needs a house count");
                int n = std::stoi(gen_arg);
                g = gen_family == "townhouse" ? townhouse(n) : basement_townhouse(n);
            } else if (gen_family == "cone") {
                g = cone(read_graph(gen_in));
            } else if (gen_family == "named") {
                if (gen_arg.empty()) throw std::invalid_argument("named needs a graph name");
                g = named_graph(gen_arg);
            } else {
                // convenience: `gen C5` works like `gen named C5`
                g = named_graph(gen_family);
            }
            emit(gen_out, gen_dot ? graph_to_dot(g) : gen_g6 ? graph_to_graph6(g)
                                                             : graph_to_json(g));
            return 0;
        }

        if (*cgraph) {
            SimpleGraph base = read_graph(cg_in);
            LabeledColoringGraph lcg = build_coloring_graph(base, cg_k, budget);
            std::string payload;
            if (cg_strip >= 0) {
                SimpleGraph stripped = strip_labels(lcg, static_cast<uint64_t>(cg_strip));
                payload = cg_dot ? graph_to_dot(stripped)
                                 : cg_g6 ? graph_to_graph6(stripped) : graph_to_json(stripped);
            } else if (cg_dot) {
                payload = lcg_to_dot(lcg);
            } else if (cg_g6) {
                payload = graph_to_graph6(lcg.skeleton);
            } else if (cg_labels) {
                payload = lcg_to_json(lcg);
            } else {
                payload = graph_to_json(lcg.skeleton);
            }
            emit(cg_out, payload);
            return 0;
        }

        if (*rec) {
            SimpleGraph c = read_graph(rec_in);
            emit(rec_out, reconstruction_to_json(reconstruct_base(c, budget), rec_explain));
            return 0;
        }

        if (*part) {
            SimpleGraph c = read_graph(part_in);
            LinkReport rep = require_report(c, budget);
            int alpha = part_vertex >= 0 ? part_vertex : rep.A.front();
            emit(part_out, partition_to_json(extract_partition(c, rep, alpha, budget),
                                             part_explain));
            return 0;
        }

        if (*llg_cmd) {
            SimpleGraph c = read_graph(llg_in);
            LinkReport rep = require_report(c, budget);
            int alpha = llg_vertex >= 0 ? llg_vertex : rep.A.front();
            LabeledLinkGraph llg = build_link_graph(c, rep, alpha, budget);
            emit(llg_out, llg_dot ? llg_to_dot(llg) : llg_to_json(llg));
            return 0;
        }

        if (*ver) {
            std::vector<SuiteReport> reports;
            if (ver_suite == "townhouse" || ver_suite == "all")
                reports.push_back(verify_townhouse(5, budget));
            if (ver_suite == "collisions" || ver_suite == "all")
                reports.push_back(verify_chi_collisions(budget));
            if (ver_suite == "c3c5" || ver_suite == "all")
                reports.push_back(verify_c3c5_unique(5, budget));
            if (ver_suite == "roundtrip" || ver_suite == "all")
                reports.push_back(verify_roundtrip(default_catalog(), ver_jobs, budget));
            if (ver_suite == "no-collision" || ver_suite == "all")
                reports.push_back(verify_no_surplus_chi_collision(4, 2, budget));

            bool ok = true;
            std::string payload;
            if (reports.size() == 1) {
                ok = reports[0].ok();
                payload = suite_report_to_json(reports[0]);
            } else {
                nlohmann::json set;
                set["kind"] = "census_report_set";
                set["reports"] = nlohmann::json::array();
                for (const SuiteReport& r : reports) {
                    ok = ok && r.ok();
                    set["reports"].push_back(nlohmann::json::parse(suite_report_to_json(r)));
                }
                set["ok"] = ok;
                payload = set.dump(2);
            }
            emit(ver_out, payload);
            return ok ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const StructuralError& e) {
        std::cerr << "structural inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
