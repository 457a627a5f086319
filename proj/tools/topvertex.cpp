// Command-line front end for the topological-vertex engine.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vtx/gluing.hpp"
#include "vtx/hurwitz.hpp"
#include "vtx/invariants.hpp"
#include "vtx/psi.hpp"
#include "vtx/selftest.hpp"
#include "vtx/useries.hpp"
#include "vtx/version.hpp"
#include "vtx/vertex.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_validation = 2;
constexpr int exit_convention = 3;

constexpr int default_amplitude_budget = 6;
constexpr int default_degree_budget = 4;

struct OutputOptions {
    std::string format = "text";
};

vtx::Partition parse_partition_flag(const std::string& text, const char* flag) {
    try {
        return vtx::Partition::parse(text);
    } catch (const std::exception& ex) {
        throw CLI::ValidationError(std::string(flag) + ": " + ex.what());
    }
}

vtx::FtcyGraph load_geometry(const std::string& geometry, const std::string& graph_path) {
    if (!geometry.empty()) return vtx::FtcyGraph::builtin(geometry);
    std::ifstream in(graph_path);
    if (!in) throw std::invalid_argument("file not found: " + graph_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return vtx::FtcyGraph::parse(buffer.str());
}

void emit_amplitude(const std::string& name, const vtx::QRat& value,
                    const OutputOptions& out) {
    if (out.format == "json") {
        json j;
        j["conventions_version"] = vtx::conventions_version;
        j[name] = value.str();
        std::cout << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        std::cout << "# conventions_version=" << vtx::conventions_version << "\n";
        std::cout << name << "\n" << value.str() << "\n";
    } else {
        std::cout << "conventions_version: " << vtx::conventions_version << "\n";
        std::cout << name << " = " << value.str() << "\n";
    }
}

void emit_series(const vtx::DegreeSeries& z, const OutputOptions& out) {
    if (out.format == "json") {
        json j;
        j["conventions_version"] = vtx::conventions_version;
        j["vars"] = z.vars();
        j["cutoff"] = z.cutoff();
        j["terms"] = json::array();
        for (const auto& [key, value] : z.terms()) {
            json t;
            t["d"] = key;
            t["value"] = value.str();
            j["terms"].push_back(t);
        }
        std::cout << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        std::cout << "# conventions_version=" << vtx::conventions_version << "\n";
        std::cout << "d,value\n";
        for (const auto& [key, value] : z.terms()) {
            std::string d;
            for (std::size_t i = 0; i < key.size(); ++i) {
                if (i) d += ';';
                d += std::to_string(key[i]);
            }
            std::cout << (d.empty() ? "0" : d) << "," << value.str() << "\n";
        }
    } else {
        std::cout << "conventions_version: " << vtx::conventions_version << "\n";
        std::cout << "Z = " << z.str() << "\n";
    }
}

vtx::TableFormat table_format(const OutputOptions& out) {
    if (out.format == "json") return vtx::TableFormat::json;
    if (out.format == "csv") return vtx::TableFormat::csv;
    return vtx::TableFormat::text;
}

int budget_guard(int requested, int budget, const char* what) {
    if (requested > budget) {
        std::cerr << "error: requested " << what << " " << requested
                  << " exceeds budget " << budget << " (raise with --budget)\n";
        return exit_usage;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological vertex calculator"};
    app.require_subcommand(1);

    OutputOptions out;
    app.add_option("--format", out.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    int budget = -1;
    app.add_option("--budget", budget,
                   "raise the built-in size/degree guardrail for this invocation");

    std::string mu_text = "[]", nu_text = "[]", rho_text = "[]";
    std::vector<long long> framing;

    CLI::App* vertex = app.add_subcommand("vertex", "three-leg amplitude W_{mu,nu,rho}(q)");
    vertex->add_option("--mu", mu_text, "first partition, e.g. [2,1]");
    vertex->add_option("--nu", nu_text, "second partition");
    vertex->add_option("--rho", rho_text, "third partition");
    vertex->add_option("--framing", framing, "three integer framings")->expected(3);

    CLI::App* wtilde = app.add_subcommand("wtilde", "character-sum amplitude Wt_{mu,nu,rho}(q)");
    wtilde->add_option("--mu", mu_text, "first partition");
    wtilde->add_option("--nu", nu_text, "second partition");
    wtilde->add_option("--rho", rho_text, "third partition");

    CLI::App* wtwo = app.add_subcommand("wtwo", "two-leg amplitude W_{mu,nu}(q)");
    wtwo->add_option("--mu", mu_text, "first partition");
    wtwo->add_option("--nu", nu_text, "second partition");

    int order = 6;
    CLI::App* phi_cmd = app.add_subcommand("phi", "double-Hurwitz series Phi_{nu,mu}");
    phi_cmd->add_option("--nu", nu_text, "ramification over 0");
    phi_cmd->add_option("--mu", mu_text, "ramification over infinity");
    phi_cmd->add_option("--order", order, "series truncation order")->capture_default_str();

    std::vector<int> psi_k;
    CLI::App* psi_cmd = app.add_subcommand("psi", "descendant integral <tau_{k1}...tau_{kn}>_g");
    psi_cmd->add_option("--k", psi_k, "descendant exponents")->required()->expected(-1);

    std::string geometry, graph_path;
    int degree = 1, gmax = 2;
    bool collapse = false;

    auto add_geometry_flags = [&](CLI::App* cmd) {
        cmd->add_option("--geometry", geometry, "builtin geometry name")
            ->check(CLI::IsMember({"c3", "conifold", "local_p2", "local_p1xp1"}));
        cmd->add_option("--graph", graph_path, "path to a graph JSON file");
    };

    CLI::App* glue = app.add_subcommand("glue", "partition function Z(q;Q) of a graph");
    add_geometry_flags(glue);
    glue->add_option("--degree", degree, "total degree cutoff")->capture_default_str();

    CLI::App* invariants = app.add_subcommand("invariants", "Gromov-Witten table N_{g,d}");
    add_geometry_flags(invariants);
    invariants->add_option("--degree", degree, "total degree cutoff")->capture_default_str();
    invariants->add_option("--gmax", gmax, "largest genus to extract")->capture_default_str();
    invariants->add_flag("--collapse", collapse, "identify all Kahler variables");

    CLI::App* gv = app.add_subcommand("gv", "Gopakumar-Vafa table n_{g,d}");
    add_geometry_flags(gv);
    gv->add_option("--degree", degree, "total degree cutoff")->capture_default_str();
    gv->add_option("--gmax", gmax, "largest genus to extract")->capture_default_str();
    gv->add_flag("--collapse", collapse, "identify all Kahler variables");

    CLI::App* graph_validate = app.add_subcommand("graph-validate", "validate a graph file");
    graph_validate->add_option("--graph", graph_path, "path to a graph JSON file")->required();

    std::string level = "quick";
    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in oracle suites");
    selftest->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*vertex || *wtilde) {
            vtx::PartitionTriple triple{parse_partition_flag(mu_text, "--mu"),
                                        parse_partition_flag(nu_text, "--nu"),
                                        parse_partition_flag(rho_text, "--rho")};
            int amp_budget = budget > 0 ? budget : default_amplitude_budget;
            if (int rc = budget_guard(total_size(triple), amp_budget, "total partition size"))
                return rc;
            if (*vertex) {
                vtx::QRat value = vtx::w_vertex(triple);
                if (!framing.empty())
                    value = vtx::apply_framing(value, triple,
                                               {framing[0], framing[1], framing[2]});
                emit_amplitude("W", value, out);
            } else {
                emit_amplitude("Wtilde", vtx::w_tilde_vertex(triple), out);
            }
            return exit_ok;
        }
        if (*wtwo) {
            vtx::Partition mu = parse_partition_flag(mu_text, "--mu");
            vtx::Partition nu = parse_partition_flag(nu_text, "--nu");
            int amp_budget = budget > 0 ? budget : default_amplitude_budget;
            if (int rc = budget_guard(mu.size() + nu.size(), amp_budget, "total partition size"))
                return rc;
            emit_amplitude("W", vtx::w_two(mu, nu), out);
            return exit_ok;
        }
        if (*phi_cmd) {
            vtx::Partition nu = parse_partition_flag(nu_text, "--nu");
            vtx::Partition mu = parse_partition_flag(mu_text, "--mu");
            int amp_budget = budget > 0 ? budget : default_amplitude_budget;
            if (int rc = budget_guard(nu.size(), amp_budget, "profile size")) return rc;
            if (order < 0 || order > 64) {
                std::cerr << "error: --order must be between 0 and 64\n";
                return exit_usage;
            }
            vtx::USeries series = vtx::phi(nu, mu, order);
            if (out.format == "json") {
                json j;
                j["conventions_version"] = vtx::conventions_version;
                j["phi"] = series.str("s");
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "conventions_version: " << vtx::conventions_version << "\n";
                std::cout << "Phi = " << series.str("s") << "\n";
            }
            return exit_ok;
        }
        if (*psi_cmd) {
            long long total = 0;
            for (int k : psi_k) total += k;
            int psi_budget = budget > 0 ? budget : 24;
            if (int rc = budget_guard(static_cast<int>(total), psi_budget, "total psi weight"))
                return rc;
            vtx::Rational value = vtx::psi_integral(psi_k);
            if (out.format == "json") {
                json j;
                j["conventions_version"] = vtx::conventions_version;
                j["psi"] = vtx::to_string(value);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "conventions_version: " << vtx::conventions_version << "\n";
                std::cout << "psi = " << vtx::to_string(value) << "\n";
            }
            return exit_ok;
        }
        if (*glue || *invariants || *gv) {
            if (geometry.empty() && graph_path.empty()) {
                std::cerr << "error: need --geometry or --graph\n";
                return exit_usage;
            }
            int degree_budget = budget > 0 ? budget : default_degree_budget;
            if (int rc = budget_guard(degree, degree_budget, "degree")) return rc;
            vtx::FtcyGraph g = load_geometry(geometry, graph_path);
            vtx::DegreeSeries z = vtx::compute_Z(g, degree);
            if (*glue) {
                emit_series(z, out);
                return exit_ok;
            }
            vtx::DegreeSeries f = vtx::free_energy(z);
            if (collapse) f = f.collapsed("Q");
            vtx::TableMeta meta{geometry.empty() ? graph_path : geometry, g.hash(), degree};
            if (*invariants) {
                vtx::InvariantTable table = vtx::extract_gw(f, gmax, meta);
                std::cout << vtx::emit_table(table, table_format(out));
                return exit_ok;
            }
            vtx::GVTable table = vtx::extract_gv(f, gmax, degree, meta);
            std::cout << vtx::emit_table(table, table_format(out));
            if (!table.integral()) {
                std::cerr << "error: non-integral Gopakumar-Vafa output (convention audit "
                             "failure)\n";
                return exit_convention;
            }
            return exit_ok;
        }
        if (*graph_validate) {
            std::ifstream in(graph_path);
            if (!in) {
                std::cerr << "error: file not found: " << graph_path << "\n";
                return exit_usage;
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            try {
                vtx::FtcyGraph g = vtx::FtcyGraph::parse(buffer.str());
                std::cout << "valid (" << g.vertices.size() << " vertices, " << g.edges.size()
                          << " edges, " << g.legs.size() << " legs)\n";
                return exit_ok;
            } catch (const vtx::GraphInvalid& ex) {
                for (const std::string& v : ex.violations()) std::cout << "violation: " << v << "\n";
                return exit_validation;
            }
        }
        if (*selftest) {
            std::vector<vtx::CheckResult> results = vtx::run_selftest(
                level == "full" ? vtx::SelftestLevel::full : vtx::SelftestLevel::quick);
            std::cout << "conventions_version: " << vtx::conventions_version << "\n";
            std::cout << vtx::render_selftest_report(results);
            if (vtx::all_pass(results)) return exit_ok;
            for (const vtx::CheckResult& r : results)
                if (!r.pass && r.name.rfind("gv_", 0) == 0) return exit_convention;
            return exit_validation;
        }
    } catch (const vtx::GraphInvalid& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        for (const std::string& v : ex.violations()) std::cerr << "violation: " << v << "\n";
        return exit_validation;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_usage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_validation;
    }
    std::cerr << "error: no subcommand\n";
    return exit_usage;
}
