#include "vsheet/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace vsheet {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ContractError("unknown configuration key \"" + key + "\" in " + where);
    }
}

Fibration parse_fibration(const json& doc) {
    const std::string f = doc.value("fibration", "parallel");
    if (f == "parallel") return Fibration::ParallelCircles;
    if (f == "meridian") return Fibration::Meridians;
    throw ContractError("unknown fibration \"" + f + "\" (expected \"parallel\" or \"meridian\")");
}

int parse_grid_n(const json& doc) {
    if (!doc.contains("grid")) return 128;
    const json& g = doc.at("grid");
    reject_unknown_keys(g, {"n"}, "grid");
    return g.value("n", 128);
}

FourierSeries parse_series(const json& s, const std::string& where) {
    reject_unknown_keys(s, {"a0", "cos", "sin"}, where);
    FourierSeries out;
    out.a0 = s.value("a0", 0.0);
    if (s.contains("cos")) out.cos_coeffs = s.at("cos").get<std::vector<double>>();
    if (s.contains("sin")) out.sin_coeffs = s.at("sin").get<std::vector<double>>();
    return out;
}

}  // namespace

RevolutionSheet sheet_from_json(const json& doc) {
    const std::string preset = doc.value("preset", "");
    if (preset == "torus") {
        reject_unknown_keys(doc, {"preset", "R", "r", "ell", "fibration", "grid"}, "preset");
        return make_torus_preset(doc.value("R", 2.0), doc.value("r", 1.0), parse_fibration(doc),
                                 doc.value("ell", 1.0), parse_grid_n(doc));
    }
    if (preset == "fourier") {
        reject_unknown_keys(doc, {"preset", "fibration", "grid", "fourier"}, "preset");
        const json& f = doc.at("fourier");
        reject_unknown_keys(f, {"xi", "eta", "zeta"}, "fourier");
        const json& z = f.at("zeta");
        reject_unknown_keys(z, {"winding", "c", "a0", "cos", "sin"}, "fourier.zeta");
        ZetaSpec zeta;
        zeta.winding = z.value("winding", 0.0);
        zeta.theta_constant = z.value("c", 0.0);
        zeta.periodic.a0 = z.value("a0", 0.0);
        if (z.contains("cos")) zeta.periodic.cos_coeffs = z.at("cos").get<std::vector<double>>();
        if (z.contains("sin")) zeta.periodic.sin_coeffs = z.at("sin").get<std::vector<double>>();
        return make_fourier_preset(parse_series(f.at("xi"), "fourier.xi"),
                                   parse_series(f.at("eta"), "fourier.eta"), zeta,
                                   parse_fibration(doc), parse_grid_n(doc));
    }
    throw ContractError("unknown preset \"" + preset + "\" (expected \"torus\" or \"fourier\")");
}

RevolutionSheet sheet_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open config file " + path);
    json doc;
    in >> doc;
    return sheet_from_json(doc);
}

json to_json(const ObservableSet& obs) {
    return json{{"a", obs.volume_a},
                {"h", obs.hamiltonian_h},
                {"k", obs.vertical_impulse_k},
                {"J", obs.se3_momentum}};
}

json to_json(const StationarityReport& report) {
    return json{{"max_abs_kg", report.max_abs_kg},
                {"kbB_relative_variation", report.kbB_relative_variation},
                {"is_stationary", report.is_stationary},
                {"kbB_field", report.kbB_field}};
}

json to_json(const PeriodClass& cls) {
    return json{{"m", cls.m}, {"n", cls.n}, {"ell", cls.ell}};
}

json to_json(const PrequantReport& report) {
    json j{{"a", report.a},
           {"ell", report.ell},
           {"product_over_2pi", report.product_over_2pi},
           {"prequantizable", report.prequantizable}};
    if (report.k)
        j["k"] = *report.k;
    else
        j["k"] = nullptr;
    return j;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

double rel_drift(double value, double initial) {
    const double scale = std::abs(initial) > 1.0 ? std::abs(initial) : 1.0;
    return (value - initial) / scale;
}

}  // namespace

std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "t,a,h,k,drift_a,drift_h,drift_k\n";
    if (traj.observables.empty()) return out;
    const ObservableSet& first = traj.observables.front();
    for (std::size_t i = 0; i < traj.observables.size(); ++i) {
        const ObservableSet& obs = traj.observables[i];
        out += format_double(traj.times[i]);
        out += ',';
        out += format_double(obs.volume_a);
        out += ',';
        out += format_double(obs.hamiltonian_h);
        out += ',';
        out += format_double(obs.vertical_impulse_k);
        out += ',';
        out += format_double(rel_drift(obs.volume_a, first.volume_a));
        out += ',';
        out += format_double(rel_drift(obs.hamiltonian_h, first.hamiltonian_h));
        out += ',';
        out += format_double(rel_drift(obs.vertical_impulse_k, first.vertical_impulse_k));
        out += '\n';
    }
    return out;
}

std::string snapshot_csv(const RevolutionSheet& sheet) {
    std::string out = "rho,xi,eta,zeta\n";
    const int n = sheet.n();
    for (int i = 0; i < n; ++i) {
        const double rho = sheet.grid().rho(i);
        const double zeta = sheet.vorticity.zeta_periodic[static_cast<std::size_t>(i)] +
                            sheet.vorticity.rho_winding / kTwoPi * rho;
        out += format_double(rho);
        out += ',';
        out += format_double(sheet.curve.xi[static_cast<std::size_t>(i)]);
        out += ',';
        out += format_double(sheet.curve.eta[static_cast<std::size_t>(i)]);
        out += ',';
        out += format_double(zeta);
        out += '\n';
    }
    return out;
}

}  // namespace vsheet
