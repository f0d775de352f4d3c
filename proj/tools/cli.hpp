#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams so it can be driven from tests.
//
// Exit codes: 0 success, 1 usage error, 2 computation error,
// 3 consistency-check failure.

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kwall/kwall.hpp"

namespace kwall::cli {

enum ExitCode : int { ok = 0, usage = 1, computation = 2, check_failed = 3 };

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    for (const auto& s : out)
        if (s.empty()) throw UsageError("empty entry in list '" + text + "'");
    return out;
}

inline Space parse_space(const std::string& s) { return s == "t" ? Space::t : Space::c; }

inline const char* space_name(Space s) { return s == Space::t ? "t" : "c"; }

inline void require_families(const Registry& reg, const std::vector<std::string>& ids) {
    for (const auto& id : ids)
        if (!reg.contains(id)) throw UsageError("unknown family '" + id + "'");
}

inline std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) out += (out.empty() ? "" : " x ") + id;
    return out;
}

inline ProductArrangement arrangement_for(const Registry& reg, const std::vector<std::string>& ids, Space space) {
    return build_product(reg, ids, space);
}

struct Options {
    std::string registry_path;

    std::string family;
    std::string families;
    std::string space = "c";
    std::string format = "text";
    bool fold = false;
    std::string point;

    std::string factors;
    std::string iso;

    unsigned degree = 3;
    unsigned dim = 3;
    unsigned jobs = 1;
    unsigned exhaustive_bound = 0;
    bool exploratory = false;
};

inline int cmd_walls(const Registry& reg, const Options& o, std::ostream& out) {
    require_families(reg, {o.family});
    const auto& rec = reg.at(o.family);
    const Space space = parse_space(o.space);
    const WallSet ws = walls_in(rec, space);
    if (o.format == "json") {
        json doc{{"family", rec.id}, {"space", space_name(space)}, {"walls", to_json(ws)}};
        out << doc.dump(2) << "\n";
    } else {
        out << ws.str() << "\n";
    }
    return ok;
}

inline int cmd_product(const Registry& reg, const Options& o, std::ostream& out) {
    const auto ids = split(o.families);
    require_families(reg, ids);
    const Space space = parse_space(o.space);
    const auto arr = arrangement_for(reg, ids, space);
    std::optional<FoldResult> fold;
    if (o.fold) fold = fold_symmetric(arr, group_by_id(arr));
    const FoldResult* fp = fold ? &*fold : nullptr;

    if (o.format == "json") {
        out << render(arr, Format::json, fp);
        return ok;
    }
    if (o.format == "svg") {
        out << render(arr, Format::svg, fp);
        return ok;
    }
    if (o.format == "ascii") {
        out << render(arr, Format::ascii, fp);
        return ok;
    }
    const auto chambers = enumerate_cells(arr, 0).size();
    const auto walls = arr.dimension() >= 1 ? enumerate_cells(arr, 1).size() : 0;
    out << join_ids(ids) << " (" << space_name(space) << "-space): " << chambers
        << (chambers == 1 ? " chamber, " : " chambers, ") << walls << (walls == 1 ? " wall" : " walls") << "\n";
    out << "cells by codimension:";
    for (std::size_t j = 0; j <= arr.dimension(); ++j) out << " " << j << ":" << enumerate_cells(arr, j).size();
    out << "\n";
    const auto g = crossing_graph(arr);
    out << "crossing graph: " << g.nodes.size() << " nodes, " << g.edges.size() << " edges, "
        << (g.is_connected() ? "connected" : "disconnected") << "\n";
    if (fold) {
        out << "folded orbits by codimension:";
        for (std::size_t j = 0; j < fold->orbits.size(); ++j) out << " " << j << ":" << fold->orbits[j].size();
        out << " (Burnside and enumeration agree; group order " << fold->group_order.str() << ")\n";
    }
    return ok;
}

inline int cmd_chamber(const Registry& reg, const Options& o, std::ostream& out) {
    const auto ids = split(o.families);
    require_families(reg, ids);
    std::vector<Rational> point;
    for (const auto& s : split(o.point)) {
        try {
            point.push_back(Rational::parse(s));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    if (point.size() != ids.size())
        throw UsageError("--point has " + std::to_string(point.size()) + " coordinates for " +
                         std::to_string(ids.size()) + " families");
    const auto arr = arrangement_for(reg, ids, parse_space(o.space));
    const Cell cell = locate_point(arr, point);
    if (o.format == "json") {
        out << to_json(cell).dump(2) << "\n";
    } else {
        out << cell.str() << " codim " << cell.codim() << "\n";
    }
    return ok;
}

inline int cmd_stack(const Registry& reg, const Options& o, std::ostream& out) {
    const auto ids = split(o.factors);
    FactorMultiset f = FactorMultiset::from_list(ids);
    if (!o.iso.empty()) {
        for (const auto& pair : split(o.iso)) {
            const auto eq = pair.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size())
                throw UsageError("--iso entries must look like A=B, got '" + pair + "'");
            f.iso.declare(pair.substr(0, eq), pair.substr(eq + 1));
        }
    }
    const auto desc = canonicalize(f, [&](const std::string& id) { return reg.is_point(id); });
    const auto lookup = [&](const std::string& id) -> std::optional<std::string> {
        if (!reg.contains(id)) return std::nullopt;
        return reg.at(id).good_moduli;
    };
    const auto named = substitute_named(desc, lookup);
    std::optional<ProductMapKind> kind;
    if (f.total() == 2) kind = classify_product_map(f);

    if (o.format == "json") {
        json doc{{"descriptor", to_json(desc)}, {"good_moduli", to_json(named)}};
        doc["product_map"] = kind ? json(to_string(*kind)) : json(nullptr);
        out << doc.dump(2) << "\n";
    } else {
        out << "moduli stack: " << desc.str() << "\n";
        out << "good moduli space: " << named.str() << "\n";
        if (kind) out << "product map: " << to_string(*kind) << "\n";
    }
    return ok;
}

inline int cmd_git_walls(const Registry& reg, const Options& o, std::ostream& out, std::ostream& err) {
    git::Config cfg;
    cfg.jobs = o.jobs == 0 ? 1 : o.jobs;
    cfg.exhaustive_bound = o.exhaustive_bound;
    cfg.exploratory = o.exploratory;
    const auto rep = git::compute_walls(o.dim, o.degree, cfg);

    std::optional<WallSet> reference;
    if (o.dim == 3 && o.degree == 3 && reg.contains("dp3") && reg.at("dp3").t_walls) reference = reg.at("dp3").t_walls;
    const bool matches = reference && *reference == rep.walls;

    if (o.format == "json") {
        json doc = to_json(rep);
        doc["exploratory"] = rep.exploratory;
        doc["weight_vectors"] = rep.weight_count;
        doc["matches_registry"] = reference ? json(matches) : json(nullptr);
        out << doc.dump(2) << "\n";
    } else {
        out << rep.walls.str() << "\n";
        out << rep.candidates.size() << " candidate slopes from " << rep.weight_count << " weight vectors\n";
        if (reference) out << (matches ? "matches" : "DIFFERS FROM") << " registry dp3 t-walls: " << reference->str() << "\n";
        else out << "exploratory target; no reference table\n";
    }
    if (reference && !matches) {
        err << "computed walls {" << rep.walls.str() << "} differ from registry {" << reference->str() << "}\n";
        return check_failed;
    }
    return ok;
}

inline int cmd_check(const Registry& reg, const Options& o, std::ostream& out) {
    const auto results = consistency_suite(reg);
    bool all = true;
    json doc = json::array();
    for (const auto& r : results) {
        all = all && r.ok;
        if (o.format == "json") {
            doc.push_back(json{{"check", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        } else {
            out << (r.ok ? "ok   " : "FAIL ") << r.name;
            if (!r.ok) out << ": " << r.detail;
            out << "\n";
        }
    }
    if (o.format == "json") out << doc.dump(2) << "\n";
    else out << (all ? "all checks passed" : "consistency checks FAILED") << "\n";
    return all ? ok : check_failed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Options;
    Options o;
    CLI::App app{"Exact wall-and-chamber toolkit for K-moduli of products of log Fano pairs", "kwall"};
    app.require_subcommand(1);
    app.add_option("--registry", o.registry_path, "JSON registry overlay file");

    const auto formats = [](std::initializer_list<std::string> allowed) { return CLI::IsMember(std::vector<std::string>(allowed)); };
    const auto spaces = CLI::IsMember(std::vector<std::string>{"c", "t"});

    auto* walls = app.add_subcommand("walls", "Print the wall list of one family");
    walls->add_option("--family", o.family, "Family id")->required();
    walls->add_option("--space", o.space, "Coefficient space: c (K-moduli) or t (GIT slope)")->check(spaces);
    walls->add_option("--format", o.format, "text or json")->check(formats({"text", "json"}));

    auto* product = app.add_subcommand("product", "Product wall-chamber arrangement");
    product->add_option("--families", o.families, "Comma-separated family ids")->required();
    product->add_flag("--fold", o.fold, "Fold positions carrying the same family by permutation");
    product->add_option("--space", o.space, "c or t")->check(spaces);
    product->add_option("--format", o.format, "text, json, ascii or svg")->check(formats({"text", "json", "ascii", "svg"}));

    auto* chamber = app.add_subcommand("chamber", "Locate a point in a product arrangement");
    chamber->add_option("--families", o.families, "Comma-separated family ids")->required();
    chamber->add_option("--point", o.point, "Comma-separated coordinates p/q,...")->required();
    chamber->add_option("--space", o.space, "c or t")->check(spaces);
    chamber->add_option("--format", o.format, "text or json")->check(formats({"text", "json"}));

    auto* stack = app.add_subcommand("stack", "Canonical moduli descriptor of a product");
    stack->add_option("--factors", o.factors, "Comma-separated factor ids, repeats allowed")->required();
    stack->add_option("--iso", o.iso, "Declared isomorphisms A=B,...");
    stack->add_option("--format", o.format, "text or json")->check(formats({"text", "json"}));

    auto* gitw = app.add_subcommand("git-walls", "Recompute VGIT walls by the Hilbert-Mumford criterion");
    gitw->add_option("--degree", o.degree, "Hypersurface degree d");
    gitw->add_option("--dim", o.dim, "Ambient projective dimension n");
    gitw->add_option("--jobs", o.jobs, "Worker threads");
    gitw->add_option("--exhaustive-bound", o.exhaustive_bound, "Also use all weights with |r_i| <= B");
    gitw->add_flag("--exploratory", o.exploratory, "Allow targets other than cubic surfaces");
    gitw->add_option("--format", o.format, "text or json")->check(formats({"text", "json"}));

    auto* check = app.add_subcommand("check", "Run the internal consistency suite");
    check->add_option("--format", o.format, "text or json")->check(formats({"text", "json"}));

    // The first bare word is the verb; report a misspelled one by name.
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--registry") {
            ++i;
            continue;
        }
        if (!args[i].empty() && args[i].front() == '-') continue;
        if (app.get_subcommand_no_throw(args[i]) == nullptr) {
            err << "error: unknown command '" << args[i] << "'\n\n" << app.help();
            return ExitCode::usage;
        }
        break;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return ExitCode::usage;
    }

    try {
        Registry reg;
        try {
            reg = o.registry_path.empty() ? load_registry() : load_registry(o.registry_path);
        } catch (const Error& e) {
            throw detail::UsageError(e.what());
        }
        if (walls->parsed()) return detail::cmd_walls(reg, o, out);
        if (product->parsed()) return detail::cmd_product(reg, o, out);
        if (chamber->parsed()) return detail::cmd_chamber(reg, o, out);
        if (stack->parsed()) return detail::cmd_stack(reg, o, out);
        if (gitw->parsed()) return detail::cmd_git_walls(reg, o, out, err);
        if (check->parsed()) return detail::cmd_check(reg, o, out);
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::computation;
    }
    err << "error: no command\n";
    return ExitCode::usage;
}

}  // namespace kwall::cli
