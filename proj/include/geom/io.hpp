#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "geom/chain.hpp"
#include "geom/errors.hpp"
#include "geom/field.hpp"
#include "geom/geometry.hpp"
#include "geom/polar.hpp"
#include "geom/report.hpp"

namespace geom {

using json = nlohmann::json;

inline json to_json(const PointSet& s) { return s.to_vector(); }

inline json to_json(const Geometry& g) {
    json lines = json::array();
    for (std::size_t i = 0; i < g.n_lines(); ++i) lines.push_back(g.line_points(i));
    return {{"points", g.n_points()}, {"lines", std::move(lines)}};
}

inline std::string dump(const json& j) { return j.dump(); }

/// Parses {"points": N, "lines": [[...], ...]}; the result is normalized.
inline Geometry geometry_from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("points") || !j.contains("lines"))
            throw FormatError("geometry JSON needs \"points\" and \"lines\"");
        if (!j.at("points").is_number_unsigned()) throw FormatError("\"points\" must be a non-negative integer");
        std::vector<std::vector<Point>> lines;
        for (const auto& l : j.at("lines")) {
            std::vector<Point> pts;
            for (const auto& p : l) {
                if (!p.is_number_unsigned()) throw FormatError("line entries must be non-negative integers");
                pts.push_back(p.get<Point>());
            }
            lines.push_back(std::move(pts));
        }
        return build_geometry(j.at("points").get<std::size_t>(), lines);
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed geometry JSON: ") + e.what());
    }
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << text << "\n";
}

inline Geometry load_geometry(const std::string& path) { return geometry_from_json(parse_json(read_file(path))); }

inline json to_json(const Chain& c) {
    json m = json::array();
    for (const auto& s : c.members()) m.push_back(to_json(s));
    return {{"members", std::move(m)}};
}

/// Parses {"members": [[...], ...]} and checks the chain against g.
inline Chain chain_from_json(const Geometry& g, const json& j) {
    try {
        if (!j.is_object() || !j.contains("members")) throw FormatError("chain JSON needs \"members\"");
        std::vector<PointSet> members;
        for (const auto& m : j.at("members")) {
            PointSet s(g.n_points());
            for (const auto& p : m) s.insert(p.get<Point>());
            members.push_back(std::move(s));
        }
        return Chain::from_members(g, std::move(members));
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed chain JSON: ") + e.what());
    }
}

inline json to_json(const RankBound& b) {
    json j = {{"exact", b.exact}, {"lower", b.lower}, {"upper", b.upper}};
    if (b.exact) j["value"] = b.lower;
    return j;
}

inline json to_json(const EPReport& r) {
    json j = {{"status", to_string(r.status)}, {"checks_performed", r.checks_performed}};
    if (r.witness) j["witness"] = {{"X", to_json(r.witness->X)}, {"x", r.witness->x}, {"y", r.witness->y}};
    return j;
}

inline json to_json(const RankReport& r) {
    json gen = to_json(r.rk_gen);
    gen["witness"] = r.rk_gen_witness;
    json wo = to_json(r.rk_wo);
    if (r.rk_wo_witness) wo["witness"] = to_json(*r.rk_wo_witness)["members"];
    return {{"rk_gen", gen},
            {"rk_wo", wo},
            {"rk_ind", {{"lower", r.rk_ind_lower}, {"exact", r.rk_ind_exact}, {"witness", r.rk_ind_witness}}},
            {"ep", to_json(r.ep)},
            {"basis_sizes", r.basis_sizes}};
}

inline json field_tag(const Field& F) {
    json j = {{"q", F.q()}};
    j["poly"] = F.poly().empty() ? json(nullptr) : json(F.poly());
    return j;
}

/// Sidecar for a polar geometry: point index -> vector element codes.
inline json embedding_json(const PolarGeometry& pg) {
    return {{"field", field_tag(pg.form.F())},
            {"kind", pg.kind},
            {"rank", pg.rank_param},
            {"dim", pg.form.dim},
            {"vectors", pg.embedding}};
}

inline json error_json(const std::exception& e) {
    const auto* ge = dynamic_cast<const GeometryError*>(&e);
    json j = {{"kind", ge ? ge->kind() : "Error"}, {"message", e.what()}};
    if (const auto* be = dynamic_cast<const BudgetExceeded*>(&e)) {
        j["lower"] = be->lower();
        j["upper"] = be->upper();
    }
    return {{"error", j}};
}

}  // namespace geom
