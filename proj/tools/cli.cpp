#include "cli.hpp"

#include "graphzeta/errors.hpp"
#include "graphzeta/graph.hpp"
#include "graphzeta/io.hpp"
#include "graphzeta/pool.hpp"
#include "graphzeta/spectral.hpp"
#include "graphzeta/walk_operators.hpp"
#include "graphzeta/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace graphzeta::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

struct Config {
    std::string graph_source;
    std::string op = "rw";
    std::string identity = "all";
    std::string u_arg;
    std::string s_arg;
    double tol = kGroupingTol;
    std::uint64_t seed = 42;
    int samples = 20;
    bool samples_given = false;
    double radius = 0.5;
    std::string output;
    Format format = Format::Text;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& source) {
    if (is_family_spec(source)) return graph_from_family_spec(source);
    return read_edge_list_file(source);
}

Complex parse_complex(const std::string& text, const char* flag) {
    double parts[2] = {0.0, 0.0};
    const auto comma = text.find(',');
    const std::string fields[2] = {text.substr(0, comma), comma == std::string::npos ? "0" : text.substr(comma + 1)};
    for (int k = 0; k < 2; ++k) {
        const auto& f = fields[k];
        auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), parts[k]);
        if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size())
            throw UsageError(std::string("invalid value for ") + flag + ": '" + text + "' (expected re,im)");
    }
    return {parts[0], parts[1]};
}

Json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string complex_text(Complex z) {
    std::string out = text_number(z.real());
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    out += std::string(im < 0 ? " - " : " + ") + "i*" + text_number(std::abs(im));
    return out;
}

std::string run_gen(const Config& cfg) {
    const Graph g = load_graph(cfg.graph_source);
    switch (cfg.format) {
        case Format::Json: return graph_to_json(g) + '\n';
        case Format::Csv: {
            std::string out = "u,v\n";
            for (const auto& [u, v] : g.edges()) out += std::to_string(u) + ',' + std::to_string(v) + '\n';
            return out;
        }
        case Format::Text: {
            std::ostringstream os;
            write_edge_list(os, g);
            return os.str();
        }
    }
    return {};
}

RealMatrix operator_matrix(const Graph& g, const std::string& op) {
    if (op == "rw") return transition_matrix(g);
    if (op == "grover") return grover_matrix(g);
    if (op == "grover-support") return positive_support(grover_matrix(g));
    if (op == "laplacian") return laplacian(g);
    throw UsageError("unknown operator '" + op + "'");
}

std::string run_spectrum(const Config& cfg) {
    const Graph g = load_graph(cfg.graph_source);
    Spectrum s;
    if (cfg.op == "rw")
        s = rw_spectrum(g, cfg.tol);
    else if (cfg.op == "grover")
        s = grover_spectrum_direct(g, cfg.tol);
    else if (cfg.op == "grover-support")
        s = general_spectrum(positive_support(grover_matrix(g)), cfg.tol);
    else if (cfg.op == "laplacian")
        s = symmetric_spectrum(laplacian(g), cfg.tol);
    else
        throw UsageError("unknown operator '" + cfg.op + "'");
    switch (cfg.format) {
        case Format::Json: return spectrum_to_json(s) + '\n';
        case Format::Csv: return spectrum_to_csv(s);
        case Format::Text: return spectrum_to_text(s);
    }
    return {};
}

std::string run_zeros(const Config& cfg) {
    const Graph g = load_graph(cfg.graph_source);
    const ZeroSet z = qw_zero_set(g, cfg.tol);
    switch (cfg.format) {
        case Format::Json: return zero_set_to_json(z) + '\n';
        case Format::Csv: return zero_set_to_csv(z);
        case Format::Text: return zero_set_to_text(z);
    }
    return {};
}

std::string run_zeta(const Config& cfg) {
    if (cfg.u_arg.empty() && cfg.s_arg.empty()) throw UsageError("zeta needs --u and/or --s");
    const Graph g = load_graph(cfg.graph_source);

    std::vector<std::pair<std::string, Complex>> rows;
    std::optional<int> infinite_factors;
    if (!cfg.u_arg.empty()) {
        const Complex u = parse_complex(cfg.u_arg, "--u");
        rows.emplace_back("ihara_reciprocal_bass", ihara_reciprocal_bass(g, u));
        rows.emplace_back("ihara_reciprocal_edge", ihara_reciprocal_edge(g, u));
        rows.emplace_back("grover_zeta_reciprocal", grover_zeta_reciprocal(g, u));
        rows.emplace_back("konno_sato_rhs", konno_sato_rhs(g, u));
    }
    if (!cfg.s_arg.empty()) {
        const Complex s = parse_complex(cfg.s_arg, "--s");
        const LambdaValue lv = lambda_qw_eval(g, s);
        rows.emplace_back("lambda_qw", lv.value);
        infinite_factors = lv.infinite_factor_multiplicity;
    }

    switch (cfg.format) {
        case Format::Json: {
            Json j = Json::object();
            for (const auto& [name, value] : rows) j[name] = complex_json(value);
            if (infinite_factors) j["lambda_qw_infinite_factors"] = *infinite_factors;
            return j.dump() + '\n';
        }
        case Format::Csv: {
            std::string out = "quantity,re,im\n";
            for (const auto& [name, value] : rows)
                out += name + ',' + shortest_decimal(value.real()) + ',' + shortest_decimal(value.imag()) + '\n';
            return out;
        }
        case Format::Text: {
            std::string out;
            for (const auto& [name, value] : rows) out += name + " = " + complex_text(value) + '\n';
            if (infinite_factors) out += "lambda_qw_infinite_factors = " + std::to_string(*infinite_factors) + '\n';
            return out;
        }
    }
    return {};
}

std::pair<std::string, bool> run_verify(const Config& cfg) {
    const Graph g = load_graph(cfg.graph_source);
    static const std::vector<std::string> kAll = {"konno-sato", "ihara-bass", "spectral-map", "functional-eq", "rh"};
    const std::vector<std::string> identities = cfg.identity == "all" ? kAll : std::vector<std::string>{cfg.identity};

    std::vector<VerificationReport> reports;
    for (const auto& id : identities) {
        if (id == "konno-sato")
            reports.push_back(verify_konno_sato(g, cfg.samples, cfg.radius, kIdentityTol, cfg.seed));
        else if (id == "ihara-bass")
            reports.push_back(verify_ihara_bass(g, cfg.samples, cfg.radius, kIdentityTol, cfg.seed));
        else if (id == "spectral-map")
            reports.push_back(verify_spectral_map(g, cfg.tol));
        else if (id == "functional-eq")
            reports.push_back(verify_functional_equation(g, cfg.samples_given ? cfg.samples : 100, cfg.seed, cfg.tol));
        else if (id == "rh")
            reports.push_back(verify_riemann_hypothesis(g, cfg.tol));
        else
            throw UsageError("unknown identity '" + id + "'");
    }
    const bool all_passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });

    std::string out;
    switch (cfg.format) {
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(Json::parse(report_to_json(r)));
            Json j;
            j["passed"] = all_passed;
            j["reports"] = std::move(arr);
            out = j.dump() + '\n';
            break;
        }
        case Format::Csv:
            out = "identity,passed,samples,max_rel_residual,tolerance\n";
            for (const auto& r : reports)
                out += r.identity_name + ',' + (r.passed ? "true" : "false") + ',' + std::to_string(r.samples.size()) +
                       ',' + shortest_decimal(r.max_rel_residual) + ',' + shortest_decimal(r.tolerance) + '\n';
            break;
        case Format::Text:
            for (const auto& r : reports) out += report_to_text(r);
            break;
    }
    return {out, all_passed};
}

std::string run_export(const Config& cfg) {
    const Graph g = load_graph(cfg.graph_source);
    const RealMatrix m = operator_matrix(g, cfg.op);
    return cfg.format == Format::Json ? matrix_to_json(m) + '\n' : matrix_to_csv(m);
}

constexpr const char* kFlagGrammar =
    "Flags:\n"
    "  --graph <complete:n|cycle:n|star:n|petersen|path>   graph (required)\n"
    "  --operator <rw|grover|grover-support|laplacian>     spectrum, export\n"
    "  --identity <konno-sato|ihara-bass|spectral-map|functional-eq|rh|all>   verify\n"
    "  --u <re,im>  --s <re,im>                            zeta\n"
    "  --tol <x>  --seed <k>  --samples <k>  --radius <r>\n"
    "  --format <json|csv|text>  --out <path>\n"
    "Exit codes: 0 ok, 1 verification failed, 2 usage or input error.";

void add_common(CLI::App* sub, Config& cfg, bool with_operator) {
    sub->add_option("--graph", cfg.graph_source, "complete:n | cycle:n | star:n | petersen | edge-list path")->required();
    sub->add_option("--tol", cfg.tol, "eigenvalue grouping tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json | csv | text")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv},
                                                                          {"text", Format::Text}},
                                            CLI::ignore_case));
    sub->add_option("--out", cfg.output, "write output to this file instead of stdout");
    if (with_operator)
        sub->add_option("--operator", cfg.op, "rw | grover | grover-support | laplacian")
            ->check(CLI::IsMember({"rw", "grover", "grover-support", "laplacian"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Graph zeta laboratory: Grover walks, Ihara zeta, and critical-line zero sets", "graphzeta"};
    app.require_subcommand(1);
    app.footer(kFlagGrammar);

    auto* gen = app.add_subcommand("gen", "generate or load a graph and print it");
    add_common(gen, cfg, false);

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues with multiplicities");
    add_common(spectrum, cfg, true);

    auto* zeros = app.add_subcommand("zeros", "critical-line zero set");
    add_common(zeros, cfg, false);

    auto* zeta = app.add_subcommand("zeta", "evaluate the zeta determinants at a point");
    add_common(zeta, cfg, false);
    zeta->add_option("--u", cfg.u_arg, "point u as re,im for the Ihara and Grover-walk zetas");
    zeta->add_option("--s", cfg.s_arg, "point s as re,im for the completed quantum-walk zeta");

    auto* verify = app.add_subcommand("verify", "numerically verify an identity");
    add_common(verify, cfg, false);
    verify->add_option("--identity", cfg.identity, "konno-sato | ihara-bass | spectral-map | functional-eq | rh | all")
        ->check(CLI::IsMember({"konno-sato", "ihara-bass", "spectral-map", "functional-eq", "rh", "all"}));
    auto* samples_opt =
        verify->add_option("--samples", cfg.samples, "sample points per identity (functional-eq defaults to 100)")
            ->check(CLI::PositiveNumber);
    verify->add_option("--radius", cfg.radius, "sampling disk radius for u")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "sampling seed");

    auto* exp = app.add_subcommand("export", "dump an operator matrix");
    add_common(exp, cfg, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    cfg.samples_given = samples_opt->count() > 0;

    try {
        std::string text;
        int code = kOk;
        if (gen->parsed()) {
            text = run_gen(cfg);
        } else if (spectrum->parsed()) {
            text = run_spectrum(cfg);
        } else if (zeros->parsed()) {
            text = run_zeros(cfg);
        } else if (zeta->parsed()) {
            text = run_zeta(cfg);
        } else if (verify->parsed()) {
            auto [report, passed] = run_verify(cfg);
            text = std::move(report);
            code = passed ? kOk : kVerificationFailed;
        } else if (exp->parsed()) {
            if (cfg.format == Format::Text) cfg.format = Format::Csv;
            text = run_export(cfg);
        }

        if (cfg.output.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file) {
                err << "error: cannot write '" << cfg.output << "'\n";
                return kUsageError;
            }
            file << text;
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace graphzeta::cli
