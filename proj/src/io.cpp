#include "polycc/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polycc::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

const char* theta_kind_name(const twist& t) {
    if (!t.canonical) return "radians";
    return t.numer == 0 ? "0" : "pi-over-n";
}

ordered_json params_meta(const twisted_polygon_params& p) {
    ordered_json meta;
    meta["n"] = p.n;
    meta["a"] = p.a;
    meta["b"] = p.b;
    meta["h"] = p.h;
    meta["theta_kind"] = theta_kind_name(p.theta);
    meta["theta"] = p.theta.radians(p.n);
    meta["m"] = p.m;
    return meta;
}

}  // namespace

std::string body_system_json(const body_system& sys,
                             const std::optional<twisted_polygon_params>& meta) {
    ordered_json doc;
    doc["bodies"] = ordered_json::array();
    for (const auto& b : sys.bodies) {
        ordered_json body;
        body["mass"] = b.mass;
        body["position"] = {b.position.x, b.position.y, b.position.z};
        doc["bodies"].push_back(std::move(body));
    }
    if (meta) doc["meta"] = params_meta(*meta);
    return doc.dump(2) + "\n";
}

body_system parse_body_system(const std::string& text,
                              std::optional<twisted_polygon_params>* meta_out) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("bodies") || !doc["bodies"].is_array() || doc["bodies"].empty())
        throw std::runtime_error("document has no bodies array");
    body_system sys;
    for (const auto& b : doc["bodies"]) {
        if (!b.contains("mass") || !b.contains("position") || !b["position"].is_array() ||
            b["position"].size() != 3)
            throw std::runtime_error("body entry needs mass and a 3-component position");
        double mass = b["mass"].get<double>();
        if (!(mass > 0.0)) throw std::runtime_error("body mass must be positive");
        sys.bodies.push_back(
            {mass,
             {b["position"][0].get<double>(), b["position"][1].get<double>(),
              b["position"][2].get<double>()}});
    }
    if (meta_out) {
        meta_out->reset();
        if (doc.contains("meta")) {
            const auto& m = doc["meta"];
            twisted_polygon_params p;
            p.n = m.at("n").get<int>();
            p.a = m.at("a").get<double>();
            p.b = m.at("b").get<double>();
            p.h = m.at("h").get<double>();
            p.m = m.at("m").get<double>();
            std::string kind = m.at("theta_kind").get<std::string>();
            if (kind == "0") {
                p.theta = twist::zero();
            } else if (kind == "pi-over-n") {
                p.theta = twist::half_step();
            } else {
                p.theta = twist::from_radians(m.at("theta").get<double>(), p.n);
            }
            *meta_out = p;
        }
    }
    return sys;
}

std::string cc_report_json(const cc_report& report) {
    ordered_json doc;
    doc["lambda"] = report.lambda;
    doc["max_residual"] = report.max_residual;
    doc["is_central"] = report.is_central;
    doc["tolerance"] = report.tolerance;
    doc["residuals"] = ordered_json::array();
    for (const auto& r : report.residuals) doc["residuals"].push_back({r.x, r.y, r.z});
    return doc.dump(2) + "\n";
}

std::string kernels_json(int n, double a, double h, const twist& theta, double x, yz_values yz) {
    ordered_json doc;
    doc["x"] = x;
    doc["y"] = yz.y;
    doc["z"] = yz.z;
    doc["N"] = n;
    doc["a"] = a;
    doc["h"] = h;
    doc["theta"] = theta.radians(n);
    return doc.dump(2) + "\n";
}

std::string solve_result_json(const solve_result& result) {
    ordered_json doc;
    doc["found"] = result.found;
    if (result.found) {
        doc["h_root"] = result.h_root;
        doc["lambda"] = result.lambda;
        doc["bracket"] = {result.bracket_lo, result.bracket_hi};
        doc["iterations"] = result.iterations;
        doc["residual_at_root"] = result.residual_at_root;
    } else {
        doc["note"] = result.note;
    }
    return doc.dump(2) + "\n";
}

std::string conditions_json(const condition_residual& report) {
    ordered_json doc;
    doc["r32"] = {report.r32_1, report.r32_2};
    doc["r34"] = ordered_json::array();
    for (const auto& r : report.r34) doc["r34"].push_back({r.re, r.im});
    doc["norm"] = report.norm;
    return doc.dump(2) + "\n";
}

std::string suite_report_json(const suite_report& report) {
    ordered_json doc;
    doc["pass"] = report.pass;
    doc["checks"] = ordered_json::array();
    for (const auto& ck : report.checks) {
        ordered_json c;
        c["name"] = ck.name;
        c["samples"] = ck.samples;
        c["violations"] = ck.violations;
        c["worst"] = ck.worst;
        doc["checks"].push_back(std::move(c));
    }
    return doc.dump(2) + "\n";
}

std::string check_report_json(const cc_report& report,
                              const std::optional<condition_residual>& conditions) {
    ordered_json doc = ordered_json::parse(cc_report_json(report));
    if (conditions) doc["conditions"] = ordered_json::parse(conditions_json(*conditions));
    return doc.dump(2) + "\n";
}

std::string scan_csv(const std::vector<scan_cell>& cells) {
    std::ostringstream out;
    out << "a,b,min_residual,argmin_h\n";
    for (const auto& c : cells) {
        out << fmt17(c.a) << ',' << fmt17(c.b) << ',' << fmt17(c.min_residual) << ','
            << fmt17(c.argmin_h) << '\n';
    }
    return out.str();
}

std::string trajectory_csv(const trajectory_report& report) {
    std::ostringstream out;
    out << "t,shape_drift,energy_rel_drift\n";
    for (size_t i = 0; i < report.times.size(); ++i) {
        out << fmt17(report.times[i]) << ',' << fmt17(report.shape_drift[i]) << ','
            << fmt17(report.energy_drift[i]) << '\n';
    }
    return out.str();
}

std::string manifest_json(const std::string& command, const std::string& params_json,
                          std::optional<long long> seed, const std::vector<std::string>& outputs) {
    ordered_json doc;
    doc["command"] = command;
    doc["params"] = ordered_json::parse(params_json);
    if (seed) {
        doc["seed"] = *seed;
    } else {
        doc["seed"] = nullptr;
    }
    doc["tool_version"] = tool_version;
    doc["outputs"] = outputs;
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw std::runtime_error("read failed for " + path);
    return buf.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out.good()) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move output into place at " + path);
    }
}

}  // namespace polycc::io
