#include "tolfit/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace tolfit {

namespace {

// Keys keep declaration order so diffs against stored reports stay readable.
using json = nlohmann::ordered_json;

// JSON has no infinity literal, so non-finite values travel as strings.
json encode_double(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

double decode_double(const json& v, const char* key) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    throw std::invalid_argument(std::string("report: bad numeric field '") +
                                key + "'");
}

json encode_vector(const std::vector<double>& v) {
    json out = json::array();
    for (double x : v) out.push_back(encode_double(x));
    return out;
}

std::vector<double> decode_vector(const json& v, const char* key) {
    if (!v.is_array())
        throw std::invalid_argument(std::string("report: field '") + key +
                                    "' must be an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const json& x : v) out.push_back(decode_double(x, key));
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

bool same_results(const Report& a, const Report& b) {
    const auto same_double = [](double x, double y) {
        // Exact comparison on purpose, treating NaN as equal to itself:
        // reports from identical runs must match bit for bit.
        if (std::isnan(x) || std::isnan(y))
            return std::isnan(x) && std::isnan(y);
        return x == y;
    };
    if (a.m != b.m || a.n != b.n || !same_double(a.max_tol, b.max_tol) ||
        a.x_hat.size() != b.x_hat.size() || a.converged != b.converged ||
        a.method != b.method || a.iterations != b.iterations ||
        a.boundedness != b.boundedness || a.unstable != b.unstable ||
        a.x_hat_zero != b.x_hat_zero || !same_double(a.min_cond, b.min_cond) ||
        a.cond_seed != b.cond_seed ||
        !same_double(a.b_hat_norm, b.b_hat_norm) ||
        !same_double(a.ive, b.ive) || !same_double(a.abs_ive, b.abs_ive) ||
        !same_double(a.rve, b.rve) ||
        a.sqrt_factor_dim != b.sqrt_factor_dim ||
        a.hull.has_value() != b.hull.has_value())
        return false;
    for (std::size_t j = 0; j < a.x_hat.size(); ++j)
        if (!same_double(a.x_hat[j], b.x_hat[j])) return false;
    if (a.hull) {
        if (a.hull->box.size() != b.hull->box.size() ||
            !same_double(a.hull->rad_inf, b.hull->rad_inf) ||
            !same_double(a.hull->rad_2, b.hull->rad_2))
            return false;
        for (std::size_t j = 0; j < a.hull->box.size(); ++j)
            if (!same_double(a.hull->box[j].lo, b.hull->box[j].lo) ||
                !same_double(a.hull->box[j].hi, b.hull->box[j].hi))
                return false;
    }
    return true;
}

std::string report_to_json(const Report& report) {
    json doc;
    doc["m"] = report.m;
    doc["n"] = report.n;
    doc["max_tol"] = encode_double(report.max_tol);
    doc["x_hat"] = encode_vector(report.x_hat);
    doc["converged"] = report.converged;
    doc["method"] = report.method;
    doc["iterations"] = report.iterations;
    doc["boundedness"] = report.boundedness;
    doc["unstable"] = report.unstable;
    doc["x_hat_zero"] = report.x_hat_zero;
    doc["min_cond"] = encode_double(report.min_cond);
    doc["cond_seed"] = report.cond_seed;
    doc["b_hat_norm"] = encode_double(report.b_hat_norm);
    doc["ive"] = encode_double(report.ive);
    doc["abs_ive"] = encode_double(report.abs_ive);
    doc["rve"] = encode_double(report.rve);
    doc["sqrt_factor_dim"] = report.sqrt_factor_dim;
    if (report.hull) {
        json box = json::array();
        for (const Interval& e : report.hull->box)
            box.push_back(
                json::array({encode_double(e.lo), encode_double(e.hi)}));
        doc["hull"] = {{"box", std::move(box)},
                       {"rad_inf", encode_double(report.hull->rad_inf)},
                       {"rad_2", encode_double(report.hull->rad_2)}};
    }
    doc["timing"] = {{"fit_ms", report.timing.fit_ms},
                     {"cond_ms", report.timing.cond_ms},
                     {"hull_ms", report.timing.hull_ms},
                     {"total_ms", report.timing.total_ms}};
    return doc.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("report: top level must be an object");

    const auto need = [&doc](const char* key) -> const json& {
        const auto it = doc.find(key);
        if (it == doc.end())
            throw std::invalid_argument(
                std::string("report: missing field '") + key + "'");
        return *it;
    };

    Report r;
    r.m = need("m").get<std::size_t>();
    r.n = need("n").get<std::size_t>();
    r.max_tol = decode_double(need("max_tol"), "max_tol");
    r.x_hat = decode_vector(need("x_hat"), "x_hat");
    r.converged = need("converged").get<bool>();
    r.method = need("method").get<std::string>();
    r.iterations = need("iterations").get<long>();
    r.boundedness = need("boundedness").get<std::string>();
    r.unstable = need("unstable").get<bool>();
    r.x_hat_zero = need("x_hat_zero").get<bool>();
    r.min_cond = decode_double(need("min_cond"), "min_cond");
    r.cond_seed = need("cond_seed").get<std::uint64_t>();
    r.b_hat_norm = decode_double(need("b_hat_norm"), "b_hat_norm");
    r.ive = decode_double(need("ive"), "ive");
    r.abs_ive = decode_double(need("abs_ive"), "abs_ive");
    r.rve = decode_double(need("rve"), "rve");
    r.sqrt_factor_dim = need("sqrt_factor_dim").get<std::size_t>();
    if (doc.contains("hull")) {
        const json& h = doc["hull"];
        HullReport hull;
        for (const json& pair : h.at("box")) {
            const double lo = decode_double(pair.at(0), "hull.box");
            const double hi = decode_double(pair.at(1), "hull.box");
            hull.box.emplace_back(lo, hi);
        }
        hull.rad_inf = decode_double(h.at("rad_inf"), "hull.rad_inf");
        hull.rad_2 = decode_double(h.at("rad_2"), "hull.rad_2");
        r.hull = std::move(hull);
    }
    if (doc.contains("timing")) {
        const json& t = doc["timing"];
        r.timing.fit_ms = t.value("fit_ms", 0.0);
        r.timing.cond_ms = t.value("cond_ms", 0.0);
        r.timing.hull_ms = t.value("hull_ms", 0.0);
        r.timing.total_ms = t.value("total_ms", 0.0);
    }
    return r;
}

std::string report_to_csv(const Report& report) {
    std::string out = "key,value\n";
    const auto put = [&out](const std::string& key, const std::string& value) {
        out += key + "," + value + "\n";
    };
    const auto put_d = [&put](const std::string& key, double v) {
        put(key, std::isfinite(v) ? format_double(v)
                                  : (std::isnan(v) ? "nan"
                                                   : (v > 0 ? "inf" : "-inf")));
    };

    put("m", std::to_string(report.m));
    put("n", std::to_string(report.n));
    put_d("max_tol", report.max_tol);
    for (std::size_t j = 0; j < report.x_hat.size(); ++j)
        put_d("x_hat_" + std::to_string(j), report.x_hat[j]);
    put("converged", report.converged ? "true" : "false");
    put("method", report.method);
    put("iterations", std::to_string(report.iterations));
    put("boundedness", report.boundedness);
    put("unstable", report.unstable ? "true" : "false");
    put("x_hat_zero", report.x_hat_zero ? "true" : "false");
    put_d("min_cond", report.min_cond);
    put("cond_seed", std::to_string(report.cond_seed));
    put_d("b_hat_norm", report.b_hat_norm);
    put_d("ive", report.ive);
    put_d("abs_ive", report.abs_ive);
    put_d("rve", report.rve);
    put("sqrt_factor_dim", std::to_string(report.sqrt_factor_dim));
    if (report.hull) {
        for (std::size_t j = 0; j < report.hull->box.size(); ++j) {
            put_d("hull_" + std::to_string(j) + "_lo", report.hull->box[j].lo);
            put_d("hull_" + std::to_string(j) + "_hi", report.hull->box[j].hi);
        }
        put_d("hull_rad_inf", report.hull->rad_inf);
        put_d("hull_rad_2", report.hull->rad_2);
    }
    put_d("fit_ms", report.timing.fit_ms);
    put_d("cond_ms", report.timing.cond_ms);
    put_d("hull_ms", report.timing.hull_ms);
    put_d("total_ms", report.timing.total_ms);
    return out;
}

}  // namespace tolfit
