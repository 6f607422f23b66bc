#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "atgrid/choosability.hpp"
#include "atgrid/circulations.hpp"
#include "atgrid/errors.hpp"
#include "atgrid/jsonio.hpp"
#include "atgrid/selftest.hpp"
#include "atgrid/transfer.hpp"

namespace {

using atgrid::ChoosabilityGuards;
using atgrid::CirculationGuards;
using atgrid::PolyGuards;
using atgrid::TransferGuards;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    int threads = 0;
    bool json = false;
    PolyGuards poly;
    CirculationGuards circ;
    TransferGuards transfer;
    ChoosabilityGuards choose;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw atgrid::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json guards_json(const Options& opt) {
    return {{"max_expand_edges", opt.poly.max_expand_edges},
            {"max_formula_points", opt.poly.max_formula_points},
            {"max_circulation_edges", opt.circ.max_edges},
            {"max_layer_vertices", opt.transfer.max_layer_vertices},
            {"max_matrix_layer", opt.transfer.max_matrix_layer},
            {"max_assignments", opt.choose.max_assignments}};
}

class Report {
  public:
    Report(std::string command, json params, const Options& opt)
        : opt_(opt), start_(std::chrono::steady_clock::now()) {
        payload_["command"] = std::move(command);
        payload_["params"] = std::move(params);
        payload_["guards"] = guards_json(opt);
        payload_["threads"] = opt.threads;
    }

    void set_result(json result) { payload_["result"] = std::move(result); }

    // JSON to stdout when requested; the human line otherwise.
    void emit(const std::string& human) {
        if (opt_.json) {
            payload_["wall_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start_)
                    .count();
            std::cout << payload_.dump(2) << '\n';
        } else {
            std::cout << human << '\n';
        }
    }

  private:
    const Options& opt_;
    json payload_;
    std::chrono::steady_clock::time_point start_;
};

std::string exponents_text(const std::vector<int>& t) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ',';
        os << t[i];
    }
    os << ')';
    return os.str();
}

int cmd_at_torus(const Options& opt, int m, int n) {
    Report report("at-torus", {{"m", m}, {"n", n}}, opt);
    const atgrid::TorusCertificate cert =
        atgrid::at_torus(m, n, opt.transfer, opt.poly, opt.threads);
    report.set_result(atgrid::to_json(cert));

    std::ostringstream human;
    human << "AT(T_{" << m << "," << n << "}) = " << cert.at;
    switch (cert.kind) {
        case atgrid::CertificateKind::trace:
            human << " (trace certificate: tr M(C_" << cert.layer << ")^" << cert.power << " = "
                  << *cert.trace << ", sigma = " << cert.sigma << ")";
            break;
        case atgrid::CertificateKind::trace_zero_with_witness:
            human << " (trace = 0; capped-3 witness " << exponents_text(cert.witness->witness)
                  << " with coefficient " << cert.witness->coefficient << ")";
            break;
        case atgrid::CertificateKind::trace_zero_cited_upper:
            human << " (trace = 0; upper bound cited, not machine-verified)";
            break;
        case atgrid::CertificateKind::theorem_cited:
            human << " (theorem-cited, not machine-verified)";
            break;
    }
    report.emit(human.str());
    return kExitOk;
}

int cmd_coeff(const Options& opt, const std::string& path, const std::vector<int>& exponents) {
    const atgrid::Graph g = atgrid::parse_edge_list(read_input(path));
    Report report("coeff", {{"graph", path}, {"exponents", exponents}}, opt);
    const std::int64_t value = atgrid::coefficient_of(g, exponents, opt.poly, opt.threads);
    report.set_result({{"graph", atgrid::to_json(g)}, {"coefficient", value}});
    report.emit("[x^" + exponents_text(exponents) + "] f_G = " + std::to_string(value));
    return kExitOk;
}

int cmd_expand(const Options& opt, const std::string& path, int cap, bool has_cap) {
    const atgrid::Graph g = atgrid::parse_edge_list(read_input(path));
    Report report("expand", {{"graph", path}, {"cap", has_cap ? json(cap) : json()}}, opt);
    const atgrid::CoefficientTable table =
        atgrid::expand(g, has_cap ? std::optional<int>(cap) : std::nullopt, opt.poly, opt.threads);
    report.set_result({{"graph", atgrid::to_json(g)},
                       {"monomials", table.size()},
                       {"table", atgrid::to_json(table)}});
    if (opt.json) {
        report.emit("");
    } else {
        std::cout << table.to_json_lines();
        std::cerr << table.size() << " monomials\n";
    }
    return kExitOk;
}

int cmd_trace(const Options& opt, int m, int k) {
    Report report("trace", {{"m", m}, {"k", k}}, opt);
    const atgrid::TransferMatrix matrix = atgrid::build_matrix(
        atgrid::make_cycle(m), atgrid::MatrixMode::general, opt.transfer, opt.threads);
    const bool antiherm = atgrid::is_antihermitian(matrix);
    const atgrid::EisensteinInt trace = atgrid::trace_power(matrix, k, opt.threads);
    report.set_result({{"m", m},
                       {"k", k},
                       {"dim", matrix.dim()},
                       {"trace", atgrid::to_json(trace)},
                       {"antihermitian", antiherm},
                       {"sigma", atgrid::sign_bridge(m)}});
    std::ostringstream human;
    human << "tr M(C_" << m << ")^" << k << " = " << trace << " (dim " << matrix.dim()
          << ", antihermitian " << (antiherm ? "yes" : "no") << ", sigma "
          << atgrid::sign_bridge(m) << ")";
    report.emit(human.str());
    return kExitOk;
}

int cmd_circ(const Options& opt, const std::string& path, bool verify) {
    const atgrid::Orientation d = atgrid::parse_orientation(read_input(path));
    Report report("circ", {{"orientation", path}, {"verify", verify}}, opt);
    const atgrid::CirculationCount counts = atgrid::circulation_diff(d, opt.circ);
    const int sign = atgrid::sign_of_orientation(d);
    json result = {{"indegrees", d.indegrees()},
                   {"even", counts.even},
                   {"odd", counts.odd},
                   {"difference", counts.difference()},
                   {"sign", sign}};

    std::ostringstream human;
    human << "even = " << counts.even << ", odd = " << counts.odd
          << ", difference = " << counts.difference() << ", sign = " << sign
          << ", indegrees = " << exponents_text(d.indegrees());

    bool mismatch = false;
    if (verify) {
        const atgrid::CorrespondenceReport corr =
            atgrid::verify_at_correspondence(d.graph(), d, opt.poly, opt.circ, opt.threads);
        result["coefficient"] = corr.coefficient;
        result["matches"] = corr.matches;
        human << "; coefficient = " << corr.coefficient
              << (corr.matches ? " MATCHES sign*(even-odd)" : " MISMATCH");
        mismatch = !corr.matches;
    }
    report.set_result(result);
    report.emit(human.str());
    return mismatch ? kExitVerificationFailure : kExitOk;
}

int cmd_at(const Options& opt, const std::string& path) {
    const atgrid::Graph g = atgrid::parse_edge_list(read_input(path));
    Report report("at", {{"graph", path}}, opt);
    const atgrid::AlonTarsiResult result = atgrid::alon_tarsi_number(g, opt.poly, opt.threads);
    json payload = {{"graph", atgrid::to_json(g)}, {"alon_tarsi", atgrid::to_json(result)}};

    std::ostringstream human;
    human << "AT = " << result.number << ", witness monomial " << exponents_text(result.witness)
          << " with coefficient " << result.coefficient;

    const auto cert =
        atgrid::at_upper_bound_certificate(g, result.number, opt.poly, opt.circ, opt.threads);
    if (cert) {
        payload["orientation_certificate"] = atgrid::to_json(*cert);
        human << "; orientation with max indegree " << cert->orientation.max_indegree();
        if (cert->counts)
            human << ", even = " << cert->counts->even << ", odd = " << cert->counts->odd
                  << ", sign = " << cert->sign;
    }
    report.set_result(payload);
    report.emit(human.str());
    return kExitOk;
}

int cmd_choosable(const Options& opt, const std::string& path, int k, int universe) {
    const atgrid::Graph g = atgrid::parse_edge_list(read_input(path));
    if (universe == 0) universe = std::max(k, k * g.vertex_count());
    Report report("choosable", {{"graph", path}, {"k", k}, {"universe", universe}}, opt);
    const atgrid::ChoosabilityVerdict verdict =
        atgrid::k_choosable(g, k, universe, opt.choose, opt.threads);
    report.set_result(atgrid::to_json(verdict));

    std::ostringstream human;
    if (verdict.choosable) {
        human << (verdict.complete ? "choosable" : "choosable within universe") << " (k = " << k
              << ", universe = " << universe << ", " << verdict.assignments_total
              << " canonical assignments)";
    } else {
        human << "not choosable: bad assignment";
        for (const auto& list : *verdict.witness) {
            human << " {";
            for (std::size_t i = 0; i < list.size(); ++i) human << (i ? "," : "") << list[i];
            human << "}";
        }
    }
    report.emit(human.str());
    return kExitOk;
}

int cmd_selftest(const Options& opt, const std::string& level) {
    if (level != "fast" && level != "full")
        throw std::invalid_argument("selftest level must be 'fast' or 'full', got '" + level +
                                    "'");
    const auto results = atgrid::selftest::run(
        level == "fast" ? atgrid::selftest::Level::fast : atgrid::selftest::Level::full,
        opt.threads);
    if (opt.json) {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
        std::cout << json{{"command", "selftest"}, {"level", level}, {"results", arr}}.dump(2)
                  << '\n';
    }
    bool all = true;
    for (const auto& r : results) {
        if (!opt.json)
            std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                      << (r.detail.empty() ? "" : " -- " + r.detail) << '\n';
        if (!r.passed && all) {
            all = false;
            std::cerr << "first failure: criterion " << r.id << " (" << r.name << ")\n";
        }
        all = all && r.passed;
    }
    return all ? kExitOk : kExitVerificationFailure;
}

int cmd_gen(const std::string& kind, const std::vector<int>& args) {
    const auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw std::invalid_argument("gen " + kind + " expects " + std::to_string(count) +
                                        " integer argument(s)");
    };
    atgrid::Graph g;
    if (kind == "cycle") {
        need(1);
        g = atgrid::make_cycle(args[0]);
    } else if (kind == "path") {
        need(1);
        g = atgrid::make_path(args[0]);
    } else if (kind == "complete") {
        need(1);
        g = atgrid::make_complete(args[0]);
    } else if (kind == "complete-bipartite") {
        need(2);
        g = atgrid::make_complete_bipartite(args[0], args[1]);
    } else if (kind == "torus") {
        need(2);
        g = atgrid::make_torus({args[0], args[1]});
    } else {
        throw std::invalid_argument("unknown generator: " + kind);
    }
    std::cout << atgrid::serialize_edge_list(g);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Alon-Tarsi and graph-polynomial computations for small graphs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--threads", opt.threads, "worker threads (0 = hardware default)");
    app.add_option("--max-edges", opt.poly.max_expand_edges, "expansion guard on |E|");
    app.add_option("--max-formula-points", opt.poly.max_formula_points,
                   "coefficient-formula summation guard");
    app.add_option("--max-circulation-edges", opt.circ.max_edges, "circulation guard on |E|");
    app.add_option("--max-layer", opt.transfer.max_matrix_layer,
                   "transfer-matrix layer cycle guard");
    app.add_option("--max-assignments", opt.choose.max_assignments,
                   "list-assignment enumeration guard");

    std::function<int()> action;

    auto* torus = app.add_subcommand("at-torus", "Alon-Tarsi number of the torus C_m x C_n");
    torus->fallthrough();
    int torus_m = 0, torus_n = 0;
    torus->add_option("m", torus_m, "first cycle length")->required();
    torus->add_option("n", torus_n, "second cycle length")->required();
    torus->add_flag("--json", opt.json, "emit the JSON certificate");
    torus->callback([&] { action = [&] { return cmd_at_torus(opt, torus_m, torus_n); }; });

    auto* coeff = app.add_subcommand("coeff", "coefficient of one monomial of f_G");
    coeff->fallthrough();
    std::string coeff_path;
    std::vector<int> coeff_exponents;
    coeff->add_option("graph", coeff_path, "edge-list file ('-' for stdin)")->required();
    coeff->add_option("--exponents", coeff_exponents, "comma-separated exponents")
        ->required()
        ->delimiter(',');
    coeff->add_flag("--json", opt.json, "emit the JSON report");
    coeff->callback([&] { action = [&] { return cmd_coeff(opt, coeff_path, coeff_exponents); }; });

    auto* expand_cmd = app.add_subcommand("expand", "expand f_G into its coefficient table");
    expand_cmd->fallthrough();
    std::string expand_path;
    int expand_cap = 0;
    expand_cmd->add_option("graph", expand_path, "edge-list file ('-' for stdin)")->required();
    auto* cap_opt = expand_cmd->add_option("--cap", expand_cap, "per-vertex exponent cap");
    expand_cmd->add_flag("--json", opt.json, "emit the JSON report");
    expand_cmd->callback([&] {
        action = [&, has_cap = static_cast<bool>(*cap_opt)] {
            return cmd_expand(opt, expand_path, expand_cap, has_cap);
        };
    });

    auto* trace = app.add_subcommand("trace", "tr M(C_m)^k over Z[w]");
    trace->fallthrough();
    int trace_m = 0, trace_k = 0;
    trace->add_option("--m", trace_m, "layer cycle length")->required();
    trace->add_option("--k", trace_k, "power")->required();
    trace->add_flag("--json", opt.json, "emit the JSON report");
    trace->callback([&] { action = [&] { return cmd_trace(opt, trace_m, trace_k); }; });

    auto* circ = app.add_subcommand("circ", "even/odd circulation counts of an orientation");
    circ->fallthrough();
    std::string circ_path;
    bool circ_verify = false;
    circ->add_option("orientation", circ_path, "orientation file ('-' for stdin)")->required();
    circ->add_flag("--verify", circ_verify, "cross-check against the polynomial coefficient");
    circ->add_flag("--json", opt.json, "emit the JSON certificate");
    circ->callback([&] { action = [&] { return cmd_circ(opt, circ_path, circ_verify); }; });

    auto* at = app.add_subcommand("at", "Alon-Tarsi number of a graph file");
    at->fallthrough();
    std::string at_path;
    at->add_option("graph", at_path, "edge-list file ('-' for stdin)")->required();
    at->add_flag("--json", opt.json, "emit the JSON report");
    at->callback([&] { action = [&] { return cmd_at(opt, at_path); }; });

    auto* choosable = app.add_subcommand("choosable", "exhaustive k-choosability check");
    choosable->fallthrough();
    std::string choosable_path;
    int choosable_k = 0, choosable_universe = 0;
    choosable->add_option("graph", choosable_path, "edge-list file ('-' for stdin)")->required();
    choosable->add_option("--k", choosable_k, "list size")->required();
    choosable->add_option("--universe", choosable_universe,
                          "color universe size (default k * |V|)");
    choosable->add_flag("--json", opt.json, "emit the JSON verdict");
    choosable->callback([&] {
        action = [&] { return cmd_choosable(opt, choosable_path, choosable_k, choosable_universe); };
    });

    auto* selftest = app.add_subcommand("selftest", "run the certification suite");
    selftest->fallthrough();
    std::string selftest_level = "fast";
    selftest->add_option("level", selftest_level, "fast or full");
    selftest->add_flag("--json", opt.json, "emit JSON results");
    selftest->callback([&] { action = [&] { return cmd_selftest(opt, selftest_level); }; });

    auto* gen = app.add_subcommand("gen", "emit an edge-list graph");
    gen->fallthrough();
    std::string gen_kind;
    std::vector<int> gen_args;
    gen->add_option("kind", gen_kind, "cycle | path | complete | complete-bipartite | torus")
        ->required();
    gen->add_option("args", gen_args, "generator sizes");
    gen->callback([&] { action = [&] { return cmd_gen(gen_kind, gen_args); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const atgrid::GuardError& e) {
        std::cerr << "guard: " << e.what() << '\n';
        return kExitUsage;
    } catch (const atgrid::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
}
