#include "blochgeo/cli.hpp"

#include <CLI11.hpp>

#include "blochgeo/io.hpp"

namespace blochgeo::cli {

namespace {

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << content;
    else
        write_file(out_path, content);
}

std::vector<double> parse_csv_doubles(const std::string& text, size_t expected,
                                      const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        size_t used = 0;
        values.push_back(std::stod(token, &used));
        if (used != token.size())
            throw argument_error(std::string(what) + ": cannot parse number '" + token + "'");
    }
    if (values.size() != expected)
        throw argument_error(std::string(what) + ": expected " + std::to_string(expected) +
                             " comma-separated numbers");
    return values;
}

std::map<std::string, double> parse_params(const std::string& text) {
    std::map<std::string, double> params;
    if (text.empty()) return params;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw argument_error("params: expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        size_t used = 0;
        params[key] = std::stod(value, &used);
        if (used != value.size())
            throw argument_error("params: cannot parse value '" + value + "' for '" + key + "'");
    }
    return params;
}

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) dims.push_back(std::stoi(token));
    return dims;
}

EnsembleSpec spec_from_flags(const std::string& kind, long n, uint64_t seed,
                             const std::string& dims, int rank, const std::string& family) {
    EnsembleSpec spec;
    spec.kind = ensemble_kind_from_name(kind);
    spec.count = n;
    spec.seed = seed;
    spec.dims = parse_dims(dims);
    spec.rank = rank;
    spec.family = family;
    return spec;
}

std::string point_row(const DensityMatrix& rho) {
    if (rho.dims() == std::vector<int>{2, 2}) {
        const ModelPoint p = model_point(rho);
        return format_double(p.x) + ',' + format_double(p.y) + ',' + format_double(p.z) + '\n';
    }
    // Tripartite families report the three marginal Bloch lengths.
    const std::vector<double> lengths = marginal_bloch_lengths(rho);
    std::string row;
    for (size_t i = 0; i < lengths.size(); ++i) {
        if (i) row += ',';
        row += format_double(lengths[i]);
    }
    return row + '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bloch-length geometry of two-qubit states: decomposition, region "
                 "classification, state families and Monte Carlo inequality audits"};
    app.require_subcommand(1);

    // decompose
    std::string dec_state, dec_decomposition, dec_out;
    auto* dec = app.add_subcommand("decompose",
                                   "Bloch decomposition, model point and Bloch lengths");
    dec->add_option("--state", dec_state, "state JSON file");
    dec->add_option("--decomposition", dec_decomposition,
                    "decomposition JSON file to reconstruct into a state");
    dec->add_option("--out", dec_out, "output path (default: stdout)");

    // classify
    std::string cls_point, cls_state, cls_out;
    auto* cls = app.add_subcommand("classify", "Region verdict for a point or a state");
    cls->add_option("--point", cls_point, "comma-separated x,y,z");
    cls->add_option("--state", cls_state, "state JSON file");
    cls->add_option("--out", cls_out, "output path (default: stdout)");

    // sample
    std::string smp_kind = "hs-mixed", smp_dims = "2,2", smp_family, smp_out;
    long smp_n = 1000;
    uint64_t smp_seed = 0;
    int smp_rank = 0;
    auto* smp = app.add_subcommand("sample", "Point-cloud CSV from a random ensemble");
    smp->add_option("--kind", smp_kind, "ensemble kind");
    smp->add_option("--n", smp_n, "sample count");
    smp->add_option("--seed", smp_seed, "master seed");
    smp->add_option("--dims", smp_dims, "subsystem dimensions");
    smp->add_option("--rank", smp_rank, "rank (fixed-rank ensembles)");
    smp->add_option("--family", smp_family, "family name (family-grid ensembles)");
    smp->add_option("--out", smp_out, "output path (default: stdout)");

    // verify
    std::string ver_kind = "hs-mixed", ver_dims = "2,2", ver_family, ver_checks = "all", ver_out;
    long ver_n = 1000;
    uint64_t ver_seed = 0;
    int ver_rank = 0;
    auto* ver = app.add_subcommand("verify", "Audit the model inequalities over an ensemble");
    ver->add_option("--kind", ver_kind, "ensemble kind");
    ver->add_option("--n", ver_n, "sample count");
    ver->add_option("--seed", ver_seed, "master seed");
    ver->add_option("--dims", ver_dims, "subsystem dimensions");
    ver->add_option("--rank", ver_rank, "rank (fixed-rank ensembles)");
    ver->add_option("--family", ver_family, "family name (family-grid ensembles)");
    ver->add_option("--checks", ver_checks, "comma-separated check names or 'all'");
    ver->add_option("--out", ver_out, "output path (default: stdout)");

    // family
    std::string fam_name, fam_params, fam_emit = "state", fam_out;
    auto* fam = app.add_subcommand("family", "Construct a named state family member");
    fam->add_option("--name", fam_name, "family name")->required();
    fam->add_option("--params", fam_params, "comma-separated key=value parameters");
    fam->add_option("--emit", fam_emit, "state | point");
    fam->add_option("--out", fam_out, "output path (default: stdout)");

    // surface
    int sur_grid = 200;
    std::string sur_out;
    auto* sur = app.add_subcommand("surface", "Bounding-surface mesh CSV");
    sur->add_option("--grid", sur_grid, "points per axis");
    sur->add_option("--out", sur_out, "output path (default: stdout)");

    std::vector<const char*> argv;
    argv.push_back("blochgeo");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (dec->parsed()) {
            if (dec_state.empty() == dec_decomposition.empty())
                throw argument_error("decompose: requires exactly one of --state or "
                                     "--decomposition");
            if (!dec_state.empty()) {
                const DensityMatrix rho = state_from_json(read_file(dec_state));
                emit(decompose_result_to_json(rho) + "\n", dec_out, out);
            } else {
                const BlochDecomposition d =
                    decomposition_from_json(read_file(dec_decomposition));
                emit(state_to_json(reconstruct(d)) + "\n", dec_out, out);
            }
        } else if (cls->parsed()) {
            if (cls_point.empty() == cls_state.empty())
                throw argument_error("classify: requires exactly one of --point or --state");
            if (!cls_point.empty()) {
                const std::vector<double> c = parse_csv_doubles(cls_point, 3, "classify");
                const RegionVerdict v = classify_point({c[0], c[1], c[2]});
                emit(verdict_to_json(v) + "\n", cls_out, out);
            } else {
                const DensityMatrix rho = state_from_json(read_file(cls_state));
                const RegionVerdict v = classify_point(model_point(rho));
                emit("{\"verdict\":" + verdict_to_json(v) +
                         ",\"entanglement\":" + entanglement_to_json(entanglement_report(rho)) +
                         "}\n",
                     cls_out, out);
            }
        } else if (smp->parsed()) {
            const EnsembleSpec spec =
                spec_from_flags(smp_kind, smp_n, smp_seed, smp_dims, smp_rank, smp_family);
            emit(point_cloud_to_csv(point_cloud(spec)), smp_out, out);
        } else if (ver->parsed()) {
            const EnsembleSpec spec =
                spec_from_flags(ver_kind, ver_n, ver_seed, ver_dims, ver_rank, ver_family);
            std::vector<std::string> checks;
            std::stringstream ss(ver_checks);
            std::string token;
            while (std::getline(ss, token, ',')) checks.push_back(token);
            const AuditReport report = audit(spec, checks);
            emit(audit_to_json(report) + "\n", ver_out, out);
            if (!report.passed()) return 2;
        } else if (fam->parsed()) {
            const FamilySpec spec{fam_name, parse_params(fam_params)};
            const DensityMatrix rho = make_family_state(spec);
            if (fam_emit == "state")
                emit(state_to_json(rho) + "\n", fam_out, out);
            else if (fam_emit == "point")
                emit(point_row(rho), fam_out, out);
            else
                throw argument_error("family: --emit must be 'state' or 'point'");
        } else if (sur->parsed()) {
            emit(surface_mesh_csv(sur_grid), sur_out, out);
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace blochgeo::cli
