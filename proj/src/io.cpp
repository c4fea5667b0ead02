#include "blochgeo/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace blochgeo {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // normalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json parse(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw argument_error(std::string(what) + ": input is not valid JSON");
    return j;
}

void append_array(std::string& out, const double* values, int n) {
    out += '[';
    for (int i = 0; i < n; ++i) {
        if (i) out += ',';
        out += format_double(values[i]);
    }
    out += ']';
}

}  // namespace

std::string state_to_json(const DensityMatrix& rho) {
    std::string out = "{\"dims\":[";
    for (size_t i = 0; i < rho.dims().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rho.dims()[i]);
    }
    out += "],\"matrix\":[";
    const auto& m = rho.matrix();
    for (size_t i = 0; i < m.data.size(); ++i) {
        if (i) out += ',';
        out += '[';
        out += format_double(m.data[i].real());
        out += ',';
        out += format_double(m.data[i].imag());
        out += ']';
    }
    out += "]}";
    return out;
}

DensityMatrix state_from_json(const std::string& text) {
    const json j = parse(text, "state JSON");
    if (!j.is_object() || !j.contains("dims") || !j.contains("matrix"))
        throw argument_error("state JSON: expected object with 'dims' and 'matrix'");

    std::vector<int> dims;
    for (const auto& d : j.at("dims")) {
        if (!d.is_number_integer())
            throw argument_error("state JSON: dims must be integers");
        dims.push_back(d.get<int>());
    }
    long total = 1;
    for (int d : dims) total *= d;

    const auto& entries = j.at("matrix");
    if (!entries.is_array() || static_cast<long>(entries.size()) != total * total)
        throw argument_error("state JSON: matrix must hold exactly " +
                             std::to_string(total * total) + " [re,im] pairs, got " +
                             std::to_string(entries.size()));

    ComplexMatrix m(static_cast<int>(total), static_cast<int>(total));
    for (long i = 0; i < total * total; ++i) {
        const auto& pair = entries[i];
        if (!pair.is_array() || pair.size() != 2)
            throw argument_error("state JSON: matrix entry " + std::to_string(i) +
                                 " is not a [re,im] pair");
        m.data[i] = cdouble(pair[0].get<double>(), pair[1].get<double>());
    }
    return DensityMatrix(dims, std::move(m));  // validates invariants
}

std::string decomposition_to_json(const BlochDecomposition& d) {
    std::string out = "{\"a\":";
    append_array(out, d.a.data(), 3);
    out += ",\"b\":";
    append_array(out, d.b.data(), 3);
    out += ",\"t\":[";
    for (int i = 0; i < 3; ++i) {
        if (i) out += ',';
        append_array(out, d.t[i].data(), 3);
    }
    out += "]}";
    return out;
}

BlochDecomposition decomposition_from_json(const std::string& text) {
    const json j = parse(text, "decomposition JSON");
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("t"))
        throw argument_error("decomposition JSON: expected object with 'a', 'b' and 't'");
    BlochDecomposition d;
    const auto& a = j.at("a");
    const auto& b = j.at("b");
    const auto& t = j.at("t");
    if (a.size() != 3 || b.size() != 3 || t.size() != 3)
        throw argument_error("decomposition JSON: 'a', 'b' need 3 entries and 't' 3 rows");
    for (int i = 0; i < 3; ++i) {
        d.a[i] = a[i].get<double>();
        d.b[i] = b[i].get<double>();
        if (t[i].size() != 3)
            throw argument_error("decomposition JSON: 't' rows need 3 entries");
        for (int k = 0; k < 3; ++k) d.t[i][k] = t[i][k].get<double>();
    }
    return d;
}

std::string verdict_to_json(const RegionVerdict& v) {
    return "{\"kind\":\"" + region_name(v.kind) +
           "\",\"margin\":" + format_double(v.margin) + "}";
}

std::string entanglement_to_json(const EntanglementReport& rep) {
    std::string out = "{\"concurrence\":" + format_double(rep.concurrence);
    out += ",\"pt_min_eigenvalue\":" + format_double(rep.pt_min_eigenvalue);
    out += std::string(",\"entangled\":") + (rep.entangled ? "true" : "false");
    out += std::string(",\"boundary\":") + (rep.boundary ? "true" : "false");
    out += ",\"linear_entropy_global\":" + format_double(rep.linear_entropy_global);
    out += ",\"linear_entropy_marginals\":";
    append_array(out, rep.linear_entropy_marginals.data(), 2);
    out += '}';
    return out;
}

std::string decompose_result_to_json(const DensityMatrix& rho) {
    const BlochDecomposition d = decompose(rho);
    const ModelPoint p = model_point(rho);
    const std::vector<double> marginals = marginal_bloch_lengths(rho);

    std::string out = decomposition_to_json(d);
    out.pop_back();  // reopen the object
    out += ",\"model_point\":[" + format_double(p.x) + ',' + format_double(p.y) + ',' +
           format_double(p.z) + ']';
    out += ",\"bloch_lengths\":{\"global\":" + format_double(bloch_length(rho));
    out += ",\"a\":" + format_double(marginals[0]);
    out += ",\"b\":" + format_double(marginals[1]) + "}}";
    return out;
}

std::string audit_to_json(const AuditReport& report) {
    std::string out = "{\"version\":\"v1\"";
    out += ",\"spec\":{\"kind\":\"" + ensemble_kind_name(report.spec.kind) + "\"";
    out += ",\"count\":" + std::to_string(report.spec.count);
    out += ",\"dims\":[";
    for (size_t i = 0; i < report.spec.dims.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(report.spec.dims[i]);
    }
    out += "],\"seed\":" + std::to_string(report.spec.seed);
    if (report.spec.kind == EnsembleKind::FixedRank)
        out += ",\"rank\":" + std::to_string(report.spec.rank);
    if (report.spec.kind == EnsembleKind::FamilyGrid)
        out += ",\"family\":\"" + report.spec.family + "\"";
    out += "},\"checks\":[";
    for (size_t i = 0; i < report.checks.size(); ++i) {
        const CheckResult& c = report.checks[i];
        if (i) out += ',';
        out += "{\"name\":\"" + c.name + "\"";
        out += ",\"samples\":" + std::to_string(c.samples);
        out += ",\"violations\":" + std::to_string(c.violations);
        out += ",\"max_violation\":" + format_double(c.max_violation);
        out += ",\"worst_seed_offset\":" + std::to_string(c.worst_seed_offset) + "}";
    }
    out += "],\"passed\":";
    out += report.passed() ? "true" : "false";
    out += '}';
    return out;
}

std::string point_cloud_to_csv(const std::vector<SampleRecord>& records) {
    std::string out = "x,y,z,purity,concurrence,pt_min_eig,verdict,family,p1,p2,seed_offset\n";
    for (const auto& r : records) {
        out += format_double(r.point.x) + ',' + format_double(r.point.y) + ',' +
               format_double(r.point.z) + ',';
        out += format_double(r.purity) + ',' + format_double(r.concurrence) + ',' +
               format_double(r.pt_min_eig) + ',';
        out += region_name(r.verdict.kind) + ',' + r.family + ',';
        out += (r.params.size() > 0 ? format_double(r.params[0]) : std::string()) + ',';
        out += (r.params.size() > 1 ? format_double(r.params[1]) : std::string()) + ',';
        out += std::to_string(r.seed_offset) + '\n';
    }
    return out;
}

std::string surface_mesh_csv(int grid) {
    if (grid < 2) throw argument_error("surface mesh: grid must be >= 2");
    std::string out = "x,y,z_lower,z_upper\n";
    for (int i = 0; i < grid; ++i) {
        const double x = static_cast<double>(i) / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double y = static_cast<double>(j) / (grid - 1);
            out += format_double(x) + ',' + format_double(y) + ',';
            if (upper_surface_domain_empty(x, y)) {
                out += "nan,nan\n";
            } else {
                out += format_double(lower_surface(x, y)) + ',' +
                       format_double(upper_surface(x, y)) + '\n';
            }
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw argument_error("cannot open output file '" + tmp.string() + "'");
        out << content;
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw argument_error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace blochgeo
