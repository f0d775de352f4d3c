#pragma once

/**
 * @file serialize.hpp
 * @brief JSON forms of library values and the registry overlay reader.
 *
 * Rationals are always the string "p/q" ("p" when q = 1); polynomials are
 * constant-first arrays of rationals.
 */

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "kwall/arrangement.hpp"
#include "kwall/gitwalls.hpp"
#include "kwall/groupoid.hpp"
#include "kwall/invariants.hpp"
#include "kwall/stackalg.hpp"
#include "kwall/wallsets.hpp"

namespace kwall {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

inline json to_json(const WallSet& ws) { return to_json(ws.walls()); }

inline json to_json(const Polynomial& p) { return to_json(p.coefficients()); }

inline json to_json(const MoebiusMap& m) {
    return json::array({m.a().str(), m.b().str(), m.c().str(), m.d().str()});
}

inline json to_json(const Position& p) {
    return json{{"kind", p.is_wall() ? "wall" : "chamber"}, {"index", p.index}};
}

inline json to_json(const Cell& c) {
    json coords = json::array();
    for (const auto& p : c.coords) coords.push_back(to_json(p));
    return json{{"coords", std::move(coords)}, {"codim", c.codim()}};
}

inline json to_json(const Chamber& ch) {
    return json{{"index", ch.index}, {"lower", ch.lower.str()}, {"upper", ch.upper.str()}};
}

inline json to_json(const FamilyRecord& rec) {
    json out;
    out["id"] = rec.id;
    out["dimension"] = rec.dimension;
    out["volume"] = rec.volume.str();
    out["c_walls"] = rec.c_walls ? to_json(*rec.c_walls) : json(nullptr);
    out["t_walls"] = rec.t_walls ? to_json(*rec.t_walls) : json(nullptr);
    out["reparam"] = rec.reparam ? to_json(*rec.reparam) : json(nullptr);
    out["hilbert"] = to_json(rec.hilbert);
    out["moduli_note"] = rec.moduli_note;
    out["point"] = rec.moduli_is_point;
    if (rec.good_moduli) out["good_moduli"] = *rec.good_moduli;
    return out;
}

inline json to_json(const ModuliDescriptor& d) {
    using K = ModuliDescriptor::Kind;
    switch (d.kind) {
        case K::point: return json{{"kind", "point"}};
        case K::atom: return json{{"kind", "atom"}, {"id", d.text}};
        case K::named: return json{{"kind", "named"}, {"text", d.text}};
        case K::sym: return json{{"kind", "sym"}, {"m", d.multiplicity}, {"children", json::array({to_json(d.children.front())})}};
        case K::product: {
            json kids = json::array();
            for (const auto& c : d.children) kids.push_back(to_json(c));
            return json{{"kind", "product"}, {"children", std::move(kids)}};
        }
    }
    return {};
}

inline ModuliDescriptor descriptor_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "point") return ModuliDescriptor::point();
    if (kind == "atom") return ModuliDescriptor::atom(j.at("id").get<std::string>());
    if (kind == "named") return ModuliDescriptor::named(j.at("text").get<std::string>());
    if (kind == "sym") {
        const auto& kids = j.at("children");
        if (kids.size() != 1) throw Error(ErrorCode::parse, "sym descriptor needs exactly one child");
        return ModuliDescriptor::sym(descriptor_from_json(kids.front()), j.at("m").get<unsigned>());
    }
    if (kind == "product") {
        std::vector<ModuliDescriptor> kids;
        for (const auto& c : j.at("children")) kids.push_back(descriptor_from_json(c));
        return ModuliDescriptor::product(std::move(kids));
    }
    throw Error(ErrorCode::parse, "unknown descriptor kind '" + kind + "'");
}

inline json to_json(const FiniteGroupoidModel& m) {
    json gens = json::array();
    for (const auto& g : m.generators()) gens.push_back(g);
    return json{{"carrier", m.carrier()}, {"generators", std::move(gens)}};
}

inline FiniteGroupoidModel groupoid_from_json(const json& j) {
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) gens.push_back(g.get<Permutation>());
    return FiniteGroupoidModel(j.at("carrier").get<std::size_t>(), std::move(gens));
}

inline json to_json(const CrossingGraph& g) {
    json nodes = json::array();
    for (const auto& c : g.nodes) nodes.push_back(to_json(c));
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back(json{{"from", e.from}, {"to", e.to}, {"wall", to_json(e.wall)}});
    return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"connected", g.is_connected()}};
}

inline json to_json(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

/// Arrangement document: factors, cell counts and every cell; folded orbits
/// when `fold` is given.
inline json arrangement_json(const ProductArrangement& arr, const FoldResult* fold = nullptr) {
    json factors = json::array();
    for (const auto& f : arr.factors()) factors.push_back(json{{"id", f.id}, {"walls", to_json(f.walls)}});
    json cells = json::array();
    json counts = json::array();
    for (std::size_t j = 0; j <= arr.dimension(); ++j) {
        const auto list = enumerate_cells(arr, j);
        counts.push_back(list.size());
        for (const auto& c : list) cells.push_back(to_json(c));
    }
    json out{{"dimension", arr.dimension()}, {"factors", std::move(factors)}, {"cell_counts", std::move(counts)},
             {"cells", std::move(cells)}};
    if (fold) {
        json classes = json::array();
        for (const auto& cls : fold->classes) classes.push_back(cls);
        json orbits = json::array();
        json orbit_counts = json::array();
        for (const auto& level : fold->orbits) {
            orbit_counts.push_back(level.size());
            for (const auto& o : level) {
                json members = json::array();
                for (const auto& m : o.members) members.push_back(to_json(m));
                orbits.push_back(json{{"representative", to_json(o.representative)}, {"members", std::move(members)}});
            }
        }
        out["fold"] = json{{"classes", std::move(classes)},
                           {"group_order", fold->group_order.str()},
                           {"orbit_counts", std::move(orbit_counts)},
                           {"burnside_counts", to_json(fold->burnside_counts)},
                           {"orbits", std::move(orbits)}};
    }
    return out;
}

inline json to_json(const git::WeightVector& r) {
    json out = json::array();
    for (const auto& x : r.values()) out.push_back(static_cast<long long>(x));
    return out;
}

inline json to_json(const git::WallReport& rep) {
    json witnesses = json::object();
    for (const auto& [wall, list] : rep.witnesses) {
        json arr = json::array();
        for (const auto& w : list) arr.push_back(json{{"r", to_json(w.r)}, {"m", w.m.exponents}, {"j", w.j}});
        witnesses[wall.str()] = std::move(arr);
    }
    return json{{"walls", to_json(rep.walls)}, {"candidates", to_json(rep.candidates)}, {"witnesses", std::move(witnesses)}};
}

namespace detail {

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw Error(ErrorCode::parse, "expected a \"p/q\" string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

inline std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::parse, "expected an array of rationals, got " + j.dump());
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        const Rational r = Rational::parse(j.get<std::string>());
        if (r.is_integer()) return r.numerator();
    }
    throw Error(ErrorCode::parse, "expected an integer, got " + j.dump());
}

}  // namespace detail

/// Reads one overlay entry. Missing wall or reparam fields leave them Absent.
inline FamilyRecord record_from_json(const std::string& id, const json& j) {
    try {
        FamilyRecord rec;
        rec.id = id;
        rec.dimension = j.at("dimension").get<unsigned>();
        rec.volume = detail::rational_from_json(j.at("volume"));
        if (j.contains("c_walls") && !j["c_walls"].is_null())
            rec.c_walls = WallSet(detail::rationals_from_json(j["c_walls"]));
        if (j.contains("t_walls") && !j["t_walls"].is_null())
            rec.t_walls = WallSet(detail::rationals_from_json(j["t_walls"]));
        if (j.contains("reparam") && !j["reparam"].is_null()) {
            const auto& m = j["reparam"];
            if (!m.is_array() || m.size() != 4) throw Error(ErrorCode::parse, id + ": reparam must be [a,b,c,d]");
            rec.reparam = MoebiusMap(detail::integer_from_json(m[0]), detail::integer_from_json(m[1]),
                                     detail::integer_from_json(m[2]), detail::integer_from_json(m[3]));
        }
        rec.hilbert = Polynomial(detail::rationals_from_json(j.at("hilbert")));
        rec.moduli_note = j.value("moduli_note", std::string{});
        rec.moduli_is_point = j.value("point", rec.moduli_note == "point");
        if (j.contains("good_moduli") && j["good_moduli"].is_string())
            rec.good_moduli = j["good_moduli"].get<std::string>();
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse, id + ": " + e.what());
    }
}

/// Adds or replaces registry records from an overlay object keyed by id.
/// Structural problems (bad JSON, unsorted walls) throw; invariant
/// violations are left for consistency_suite() to report.
inline void apply_overlay(Registry& reg, const json& overlay) {
    if (!overlay.is_object()) throw Error(ErrorCode::parse, "registry overlay must be a JSON object");
    for (const auto& [id, entry] : overlay.items()) reg.put_unchecked(record_from_json(id, entry));
}

inline Registry load_registry(const std::string& overlay_path) {
    Registry reg = load_registry();
    std::ifstream in(overlay_path);
    if (!in) throw Error(ErrorCode::parse, "cannot open registry overlay '" + overlay_path + "'");
    json overlay;
    try {
        overlay = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse, overlay_path + ": " + e.what());
    }
    apply_overlay(reg, overlay);
    return reg;
}

}  // namespace kwall
