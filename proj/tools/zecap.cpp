// zecap: certificates and tables for zero-error capacities of symplectic and
// root-system graphs.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "zecap/report.hpp"
#include "zecap/root_lattice.hpp"

namespace {

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << content;
}

// JSON reports are byte-identical across runs; wall-clock runtimes are
// opt-in via --timings.
void strip_runtimes(nlohmann::json& j) {
    if (j.is_object()) {
        j.erase("runtime_s");
        for (auto& [key, value] : j.items()) strip_runtimes(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_runtimes(value);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-error capacity workbench"};
    app.require_subcommand(1);

    // report
    std::string target = "all", format = "text", out_path, protocol_graph = "sp6";
    int m = 3;
    double tol = 1e-6;
    bool timings = false;
    auto* report = app.add_subcommand("report", "run certificate pipelines");
    report->add_option("target", target, "sp|roots|e7|e8|protocol|capacity|all")->required();
    report->add_option("--m", m, "symplectic parameter (1..4)")->check(CLI::Range(1, 4));
    report->add_option("--tol", tol, "Blahut-Arimoto tolerance in bits");
    report->add_option("--graph", protocol_graph, "protocol instance: sp6|e8");
    report->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    report->add_option("--out", out_path, "write to file instead of stdout");
    report->add_flag("--timings", timings, "keep per-claim runtimes in JSON output");

    // export-graph
    std::string graph_name, graph_format = "json", graph_out;
    auto* exportg = app.add_subcommand("export-graph", "write a named graph to DIMACS or JSON");
    exportg->add_option("name", graph_name, "sp2|sp4|sp6|sp8|c5|petersen|g2|a<n>|b<n>|c<n>|d<n>|e7-rays|e8-rays|e8-model")
        ->required();
    exportg->add_option("--format", graph_format, "dimacs|json")
        ->check(CLI::IsMember({"dimacs", "json"}));
    exportg->add_option("--out", graph_out, "output path");

    // export-table
    std::string table_format = "csv", table_out;
    auto* table = app.add_subcommand("export-table", "orthonormal representation of sp6 by frames");
    table->add_option("--format", table_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", table_out, "output path");

    // export-channel
    std::string chan_name, chan_format = "json", chan_out;
    auto* exportc = app.add_subcommand("export-channel", "write a clique channel to JSON or CSV");
    exportc->add_option("name", chan_name, "sp6|e8")->required();
    exportc->add_option("--format", chan_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    exportc->add_option("--out", chan_out, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*report) {
            zecap::ReportBundle bundle;
            if (target == "sp")
                bundle = zecap::report_sp(m);
            else if (target == "roots")
                bundle = zecap::report_roots();
            else if (target == "e7")
                bundle = zecap::report_e7();
            else if (target == "e8")
                bundle = zecap::report_e8();
            else if (target == "protocol")
                bundle = zecap::report_protocol(protocol_graph);
            else if (target == "capacity")
                bundle = zecap::report_capacity(tol);
            else if (target == "all")
                bundle = zecap::report_all(tol);
            else
                throw std::invalid_argument("unknown report target: " + target);
            if (!timings) strip_runtimes(bundle.doc);
            write_out(out_path, format == "json" ? bundle.doc.dump(2) + "\n"
                                                 : zecap::report_text(bundle));
            return bundle.pass ? 0 : 1;
        }
        if (*exportg) {
            std::string content;
            if (graph_format == "dimacs") {
                content = zecap::graph_to_dimacs(zecap::graph_by_name(graph_name));
            } else if (zecap::is_ray_graph_name(graph_name)) {
                // ray graphs keep their integer coordinates in JSON
                content = zecap::ray_graph_to_json(zecap::ray_graph_by_name(graph_name)).dump(2) + "\n";
            } else {
                content = zecap::graph_to_json(zecap::graph_by_name(graph_name)).dump(2) + "\n";
            }
            write_out(graph_out, content);
            return 0;
        }
        if (*exportc) {
            auto chan = zecap::channel_by_name(chan_name);
            write_out(chan_out, chan_format == "csv" ? zecap::channel_to_csv(chan)
                                                     : zecap::channel_to_json(chan).dump(2) + "\n");
            return 0;
        }
        if (*table) {
            auto rep = zecap::orthonormal_representation();
            auto rows = zecap::representation_table(rep);
            write_out(table_out, table_format == "csv"
                                     ? zecap::representation_table_csv(rows)
                                     : zecap::representation_table_json(rows).dump(2) + "\n");
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
