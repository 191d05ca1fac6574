#include "graphmax/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "graphmax/errors.hpp"

namespace graphmax {

double round_significant(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

namespace {

Json number(double x) { return round_significant(x); }

Json optional_number(const std::optional<double>& x) {
    return x ? number(*x) : Json(nullptr);
}

Json numbers(std::span<const double> xs) {
    Json out = Json::array();
    for (double x : xs) out.push_back(number(x));
    return out;
}

const Json& require(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw FormatError(std::string("JSON document is missing \"") + key + "\"");
    }
    return doc.at(key);
}

std::size_t vertex_id(const Json& value) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw FormatError("vertex ids must be nonnegative integers");
    }
    return value.get<std::size_t>();
}

}  // namespace

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    Json doc;
    doc["n"] = g.size();
    doc["edges"] = std::move(edges);
    return doc;
}

Graph graph_from_json(const Json& doc) {
    const Json& n = require(doc, "n");
    if (!n.is_number_integer() || n.get<long long>() < 1) {
        throw FormatError("\"n\" must be a positive integer");
    }
    const Json& edges = require(doc, "edges");
    if (!edges.is_array()) throw FormatError("\"edges\" must be an array");
    std::vector<Edge> parsed;
    parsed.reserve(edges.size());
    for (const Json& e : edges) {
        if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair [i, j]");
        parsed.emplace_back(vertex_id(e[0]), vertex_id(e[1]));
    }
    return Graph(n.get<std::size_t>(), parsed);
}

Json to_json(const VertexFunction& f) {
    Json doc;
    doc["values"] = numbers(f.values());
    return doc;
}

VertexFunction vertex_function_from_json(const Json& doc) {
    const Json& values = require(doc, "values");
    if (!values.is_array()) throw FormatError("\"values\" must be an array");
    std::vector<double> out;
    out.reserve(values.size());
    for (const Json& v : values) {
        if (!v.is_number()) throw FormatError("vertex values must be numbers");
        out.push_back(v.get<double>());
    }
    return VertexFunction(std::move(out));
}

Json to_json(const ConstantResult& c) {
    Json doc;
    doc["value"] = optional_number(c.value);
    doc["status"] = std::string(to_string(c.status));
    doc["source"] = c.source;
    doc["note"] = c.note;
    return doc;
}

Json to_json(PExponent p) {
    if (p.is_infinite()) return "inf";
    return number(p.value());
}

Json to_json(const SearchConfig& cfg) {
    Json doc;
    doc["target"] = std::string(to_string(cfg.target));
    doc["p"] = to_json(cfg.p);
    doc["alpha"] = number(cfg.alpha.value());
    doc["centered"] = cfg.centering == Centering::centered;
    doc["restarts"] = cfg.restarts;
    doc["max_iters"] = cfg.max_iters;
    doc["seed"] = cfg.seed;
    doc["step_init"] = number(cfg.step_init);
    doc["step_min"] = number(cfg.step_min);
    return doc;
}

Json to_json(const SearchReport& report) {
    Json doc;
    doc["config"] = to_json(report.config);
    doc["best_ratio"] = number(report.best_ratio);
    doc["best_f"] = numbers(report.best_f.values());
    doc["per_restart_best"] = numbers(report.per_restart_best);
    doc["iterations_used"] = report.iterations_used;
    Json closed = nullptr;
    if (report.closed_form) {
        closed = Json::object();
        closed["constant"] = to_json(*report.closed_form);
        closed["gap"] = optional_number(report.gap);
    }
    doc["closed_form"] = std::move(closed);
    if (report.two_level) {
        Json level;
        level["level_size"] = report.two_level->level_size;
        level["level_value"] = number(report.two_level->level_value);
        level["includes_center"] = report.two_level->includes_center;
        doc["two_level"] = std::move(level);
    }
    return doc;
}

Json to_json(const ScanRow& row) {
    Json doc;
    doc["family"] = std::string(to_string(row.family));
    doc["n"] = row.n;
    doc["p"] = to_json(row.p);
    doc["best_ratio"] = number(row.best_ratio);
    doc["one_minus_inverse_n"] = number(1.0 - 1.0 / static_cast<double>(row.n));
    doc["exceeds_one_minus_inverse_n"] = row.exceeds_one_minus_inverse;
    doc["flag"] = std::string(to_string(row.flag));
    doc["constant"] = to_json(row.constant);
    doc["estimate"] = to_json(row.estimate);
    doc["two_level"] = to_json(row.two_level);
    return doc;
}

Json to_json(const ProbeRow& row) {
    Json doc;
    doc["epsilon"] = number(row.epsilon);
    doc["variation_difference"] = number(row.variation_difference);
    doc["perturbation_variation"] = number(row.perturbation_variation);
    doc["bound"] = optional_number(row.bound);
    return doc;
}

Json to_json(const Report& report) {
    Json meta;
    meta["tool_version"] = report.metadata.tool_version;
    meta["seed"] = report.metadata.seed;
    meta["timestamp"] = report.metadata.timestamp ? Json(*report.metadata.timestamp) : Json(nullptr);
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json entry;
        entry["name"] = e.name;
        entry["family"] = e.family.empty() ? Json(nullptr) : Json(e.family);
        entry["n"] = e.n ? Json(*e.n) : Json(nullptr);
        entry["p"] = e.p ? to_json(*e.p) : Json(nullptr);
        entry["expected"] = optional_number(e.expected);
        entry["computed"] = number(e.computed);
        entry["tolerance"] = number(e.tolerance);
        entry["status"] = std::string(to_string(e.status));
        entries.push_back(std::move(entry));
    }
    Json doc;
    doc["metadata"] = std::move(meta);
    doc["summary"] = {{"entries", report.entries.size()},
                      {"failures", report.failures()},
                      {"passed", report.passed()}};
    doc["entries"] = std::move(entries);
    return doc;
}

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

std::string report_to_csv(const Report& report) {
    std::ostringstream out;
    out << "name,family,n,p,expected,computed,tolerance,status\n";
    for (const auto& e : report.entries) {
        out << csv_field(e.name) << ',' << csv_field(e.family) << ','
            << (e.n ? std::to_string(*e.n) : "") << ',' << (e.p ? e.p->to_string() : "") << ','
            << (e.expected ? csv_number(*e.expected) : "") << ',' << csv_number(e.computed) << ','
            << csv_number(e.tolerance) << ',' << to_string(e.status) << '\n';
    }
    return out.str();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace graphmax
