#pragma once

// Graph text files and JSON instance files. Rationals are always written as
// "p/q" strings (or "p" when q = 1) so that instances round-trip exactly.

#include "disc/gadgets.hpp"
#include "disc/reports.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace disc {

using json = nlohmann::json;

/// Error raised for malformed input files; the CLI maps it to exit code 2.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "n m" followed by m lines "u v" (1-indexed). Lines starting with '#' and
/// blank lines are ignored.
inline Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long n = 0, m = 0, seen = 0;
    Graph g;
    auto fail = [&](const std::string& what) {
        throw FormatError("graph line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        long a = 0, b = 0;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra))
            fail("expected two integers");
        if (!have_header) {
            if (a < 0 || b < 0)
                fail("negative count");
            n = a;
            m = b;
            g = Graph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        if (seen == m)
            fail("more edges than declared");
        try {
            g.add_edge(static_cast<int>(a), static_cast<int>(b));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        ++seen;
    }
    if (!have_header)
        throw FormatError("graph: missing 'n m' header");
    if (seen != m)
        throw FormatError("graph: declared " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return g;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write " + path);
    out << contents;
}

inline Rational rational_from_json(const json& j, const char* what)
{
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw FormatError(std::string(what) + ": " + e.what());
        }
    }
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw FormatError(std::string(what) + ": expected a \"p/q\" string");
}

inline json instance_to_json(const GadgetInstance& inst)
{
    json doc;
    doc["dim"] = inst.points.dim();
    doc["problem"] = to_string(inst.problem);
    json params;
    params["k"] = inst.params.k;
    params["n"] = inst.params.n;
    params["N"] = inst.params.N;
    if (inst.params.t)
        params["t"] = *inst.params.t;
    if (inst.params.mu)
        params["mu"] = inst.params.mu->str();
    if (inst.params.C)
        params["C"] = inst.params.C->str();
    if (inst.params.V)
        params["V"] = inst.params.V->str();
    if (inst.params.eps)
        params["eps"] = inst.params.eps->str();
    doc["params"] = params;
    if (integer_valued(inst.problem) && inst.expected_positive.is_integer())
        doc["expected_positive"] = inst.expected_positive.num().get_si();
    else
        doc["expected_positive"] = inst.expected_positive.str();
    if (inst.expected_negative)
        doc["expected_negative"] = inst.expected_negative->str();
    json points = json::array();
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        const auto& p = inst.points[i];
        json jp;
        json coords = json::array();
        for (const auto& c : p.coords)
            coords.push_back(c.str());
        jp["coords"] = coords;
        jp["color"] = p.color == Color::none ? json(nullptr) : json(to_string(p.color));
        jp["weight"] = p.weight;
        if (!inst.in_s.empty())
            jp["in_S"] = static_cast<bool>(inst.in_s[i]);
        points.push_back(jp);
    }
    doc["points"] = points;
    return doc;
}

inline std::string write_instance(const GadgetInstance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

inline GadgetInstance read_instance(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("instance: ") + e.what());
    }
    try {
        GadgetInstance inst;
        const auto dim = doc.at("dim").get<long>();
        if (dim < 1)
            throw FormatError("instance: dim must be positive");
        auto problem = parse_problem(doc.at("problem").get<std::string>());
        if (!problem)
            throw FormatError("instance: unknown problem '" + doc.at("problem").get<std::string>() + "'");
        inst.problem = *problem;
        const auto& params = doc.at("params");
        inst.params.k = params.at("k").get<int>();
        inst.params.n = params.at("n").get<int>();
        inst.params.N = params.at("N").get<std::uint64_t>();
        if (params.contains("t"))
            inst.params.t = params.at("t").get<std::uint64_t>();
        if (params.contains("mu"))
            inst.params.mu = rational_from_json(params.at("mu"), "mu");
        if (params.contains("C"))
            inst.params.C = rational_from_json(params.at("C"), "C");
        if (params.contains("V"))
            inst.params.V = rational_from_json(params.at("V"), "V");
        if (params.contains("eps"))
            inst.params.eps = rational_from_json(params.at("eps"), "eps");
        inst.expected_positive = rational_from_json(doc.at("expected_positive"), "expected_positive");
        if (doc.contains("expected_negative"))
            inst.expected_negative = rational_from_json(doc.at("expected_negative"), "expected_negative");
        inst.points = PointSet(static_cast<std::size_t>(dim));
        bool any_s = false;
        for (const auto& jp : doc.at("points")) {
            const auto& coords = jp.at("coords");
            if (!coords.is_array() || coords.size() != static_cast<std::size_t>(dim))
                throw FormatError("instance: point has " + std::to_string(coords.size()) + " coordinates, dim is " +
                                  std::to_string(dim));
            Point p;
            for (const auto& c : coords)
                p.push_back(rational_from_json(c, "coordinate"));
            Color color = Color::none;
            if (jp.contains("color") && !jp.at("color").is_null()) {
                auto s = jp.at("color").get<std::string>();
                if (s == "red")
                    color = Color::red;
                else if (s == "blue")
                    color = Color::blue;
                else
                    throw FormatError("instance: unknown color '" + s + "'");
            }
            const auto weight = jp.value("weight", std::int64_t{1});
            if (weight < 1)
                throw FormatError("instance: weights must be at least 1");
            inst.points.add(std::move(p), color, static_cast<std::uint64_t>(weight));
            bool s = jp.value("in_S", false);
            any_s = any_s || jp.contains("in_S");
            inst.in_s.push_back(s);
        }
        if (!any_s)
            inst.in_s.clear();
        return inst;
    } catch (const json::exception& e) {
        throw FormatError(std::string("instance: ") + e.what());
    }
}

} // namespace disc
