#include "tolfit/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace tolfit {

namespace {

using json = nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(trim(cur));
    return fields;
}

double parse_number(const std::string& field, std::size_t line) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = first + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, "invalid number '" + field + "'");
    return value;
}

std::string expected_header(std::size_t n) {
    std::string h;
    for (std::size_t j = 1; j <= n; ++j) {
        h += "a" + std::to_string(j) + "_lo,";
        h += "a" + std::to_string(j) + "_hi,";
    }
    h += "b_lo,b_hi";
    return h;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// 1-based line number of a byte offset, for JSON syntax errors.
std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    const std::size_t end = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(
                   std::count(text.begin(), text.begin() + end, '\n'));
}

Interval make_interval(double lo, double hi, std::size_t line) {
    if (!(lo <= hi))
        throw ParseError(line, "empty interval [" + format_double(lo) + ", " +
                                   format_double(hi) + "]");
    return Interval(lo, hi);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ": " +
                                         message),
      line_(line) {}

IntervalSystem parse_dataset_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    // Header determines the predictor count.
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_csv(line);
        if (fields.size() < 4 || fields.size() % 2 != 0)
            throw ParseError(lineno, "header must name pairs a<j>_lo,a<j>_hi "
                                     "followed by b_lo,b_hi");
        n = fields.size() / 2 - 1;
        std::string got;
        for (std::size_t k = 0; k < fields.size(); ++k) {
            if (k) got += ',';
            std::string f = fields[k];
            std::transform(f.begin(), f.end(), f.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            got += f;
        }
        if (got != expected_header(n))
            throw ParseError(lineno, "unexpected header '" + trim(line) +
                                         "', want '" + expected_header(n) +
                                         "'");
        break;
    }
    if (n == 0) throw ParseError(lineno ? lineno : 1, "missing header row");

    std::vector<IntervalVector> rows;
    IntervalVector b;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 2 * n + 2)
            throw ParseError(lineno, "expected " + std::to_string(2 * n + 2) +
                                         " fields, got " +
                                         std::to_string(fields.size()));
        IntervalVector row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(make_interval(parse_number(fields[2 * j], lineno),
                                        parse_number(fields[2 * j + 1], lineno),
                                        lineno));
        b.push_back(make_interval(parse_number(fields[2 * n], lineno),
                                  parse_number(fields[2 * n + 1], lineno),
                                  lineno));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno, "no data rows");

    IntervalMatrix a(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rows[i][j];
    return IntervalSystem(std::move(a), std::move(b));
}

IntervalSystem parse_dataset_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(line_of_byte(text, e.byte), e.what());
    }

    if (!doc.is_object() || !doc.contains("A") || !doc.contains("b"))
        throw ParseError(0, "dataset must be an object with keys 'A' and 'b'");

    const auto read_interval = [](const json& v, const char* where) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
            !v[1].is_number())
            throw ParseError(0, std::string(where) +
                                    " entries must be [lo, hi] number pairs");
        const double lo = v[0].get<double>();
        const double hi = v[1].get<double>();
        if (!(lo <= hi))
            throw ParseError(0, std::string(where) + " has empty interval [" +
                                    format_double(lo) + ", " +
                                    format_double(hi) + "]");
        return Interval(lo, hi);
    };

    const json& ja = doc["A"];
    const json& jb = doc["b"];
    if (!ja.is_array() || ja.empty() || !jb.is_array() || jb.empty())
        throw ParseError(0, "'A' and 'b' must be nonempty arrays");
    if (ja.size() != jb.size())
        throw ParseError(0, "'A' has " + std::to_string(ja.size()) +
                                " rows but 'b' has " +
                                std::to_string(jb.size()));
    if (!ja[0].is_array() || ja[0].empty())
        throw ParseError(0, "'A' rows must be nonempty arrays");

    const std::size_t m = ja.size();
    const std::size_t n = ja[0].size();
    IntervalMatrix a(m, n);
    IntervalVector b;
    b.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!ja[i].is_array() || ja[i].size() != n)
            throw ParseError(0, "'A' row " + std::to_string(i) +
                                    " is not rectangular");
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = read_interval(ja[i][j], "'A'");
        b.push_back(read_interval(jb[i], "'b'"));
    }
    return IntervalSystem(std::move(a), std::move(b));
}

IntervalSystem load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path.string() + "'");
    if (path.extension() == ".csv") return parse_dataset_csv(in);
    if (path.extension() == ".json") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_dataset_json(buf.str());
    }
    throw ParseError(0, "unsupported dataset extension '" +
                            path.extension().string() +
                            "' (want .csv or .json)");
}

std::string dataset_to_csv(const IntervalSystem& sys) {
    std::string out = expected_header(sys.cols()) + "\n";
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        for (std::size_t j = 0; j < sys.cols(); ++j) {
            const Interval& e = sys.A.at(i, j);
            out += format_double(e.lo) + "," + format_double(e.hi) + ",";
        }
        out += format_double(sys.b[i].lo) + "," + format_double(sys.b[i].hi) +
               "\n";
    }
    return out;
}

std::string dataset_to_json(const IntervalSystem& sys) {
    json ja = json::array();
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < sys.cols(); ++j) {
            const Interval& e = sys.A.at(i, j);
            row.push_back(json::array({e.lo, e.hi}));
        }
        ja.push_back(std::move(row));
    }
    json jb = json::array();
    for (const Interval& e : sys.b) jb.push_back(json::array({e.lo, e.hi}));
    json doc;
    doc["A"] = std::move(ja);
    doc["b"] = std::move(jb);
    return doc.dump(2) + "\n";
}

IntervalSystem diagonal_benchmark_system(std::size_t n, double K,
                                         double theta) {
    if (n == 0) throw std::invalid_argument("diagonal_benchmark_system: n == 0");
    IntervalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = i == j ? Interval::point(theta) : Interval(0.0, 2.0);
    IntervalVector b(n, Interval(1.0, K));
    return IntervalSystem(std::move(a), std::move(b));
}

}  // namespace tolfit
