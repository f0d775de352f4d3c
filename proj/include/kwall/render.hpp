#pragma once

/**
 * @file render.hpp
 * @brief SVG, ASCII and JSON views of a product arrangement.
 *
 * SVG output draws the unit box [0,1]^k (k <= 2) on a 720 x 720 square inset
 * by a 60-unit margin. Every coordinate is computed exactly from the wall
 * rationals and printed with six decimals, so identical inputs give
 * byte-identical documents.
 */

#include <algorithm>
#include <sstream>
#include <string>

#include "kwall/arrangement.hpp"
#include "kwall/serialize.hpp"

namespace kwall {

enum class Format { svg, ascii, json };

namespace render_detail {

inline constexpr long long margin = 60;
inline constexpr long long box = 720;

inline std::string fx(const Rational& v) { return (Rational(margin) + Rational(box) * v).to_fixed(6); }
/// y measured upward inside the box of height `height`.
inline std::string fy(const Rational& v, long long height = box) {
    return (Rational(margin) + Rational(height) * (Rational(1) - v)).to_fixed(6);
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

inline std::string title_of(const ProductArrangement& arr) {
    if (arr.dimension() == 0) return "Wall-chamber decomposition: (no factors)";
    std::string t = "Wall-chamber decomposition:";
    for (std::size_t i = 0; i < arr.dimension(); ++i) t += (i ? " x " : " ") + arr.factors()[i].id;
    return t;
}

inline Rational midpoint(const WallSet& ws, std::size_t chamber) {
    return (ws.chamber_lower(chamber) + ws.chamber_upper(chamber)) / Rational(2);
}

}  // namespace render_detail

/// SVG document for an arrangement with at most two factors. With `fold`,
/// each chamber is labeled by its orbit number and the diagonal is drawn
/// when the two factors are folded together.
inline std::string render_svg(const ProductArrangement& arr, const FoldResult* fold = nullptr) {
    using namespace render_detail;
    const std::size_t k = arr.dimension();
    if (k > 2) throw Error(ErrorCode::unsupported_dimension, "SVG needs at most 2 factors, got " + std::to_string(k));
    const long long height = k == 1 ? 120 : box;
    const long long canvas_w = box + 2 * margin;
    const long long canvas_h = height + 2 * margin;
    const Rational zero(0);
    const Rational one(1);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas_w << "\" height=\""
        << canvas_h << "\" viewBox=\"0 0 " << canvas_w << " " << canvas_h << "\">\n";
    out << "<title>" << escape(title_of(arr)) << "</title>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << canvas_w << "\" height=\"" << canvas_h << "\" fill=\"white\"/>\n";
    out << "<rect class=\"box\" x=\"" << fx(zero) << "\" y=\"" << fy(one, height) << "\" width=\"" << Rational(box).to_fixed(6)
        << "\" height=\"" << Rational(height).to_fixed(6) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

    out << "<g class=\"walls\" stroke=\"black\" stroke-width=\"1\">\n";
    if (k >= 1) {
        const auto& ws = arr.walls(0);
        for (std::size_t i = 0; i < ws.size(); ++i)
            out << "<line class=\"wall\" data-axis=\"0\" data-index=\"" << i << "\" data-value=\"" << ws[i].str()
                << "\" x1=\"" << fx(ws[i]) << "\" y1=\"" << fy(one, height) << "\" x2=\"" << fx(ws[i]) << "\" y2=\""
                << fy(zero, height) << "\"/>\n";
    }
    if (k == 2) {
        const auto& ws = arr.walls(1);
        for (std::size_t i = 0; i < ws.size(); ++i)
            out << "<line class=\"wall\" data-axis=\"1\" data-index=\"" << i << "\" data-value=\"" << ws[i].str()
                << "\" x1=\"" << fx(zero) << "\" y1=\"" << fy(ws[i]) << "\" x2=\"" << fx(one) << "\" y2=\""
                << fy(ws[i]) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g class=\"ticks\" font-family=\"monospace\" font-size=\"12\">\n";
    const std::string base_y = Rational(margin + height + 18).to_fixed(6);
    auto xtick = [&](const Rational& v) {
        out << "<text x=\"" << fx(v) << "\" y=\"" << base_y << "\" text-anchor=\"middle\">" << v.str() << "</text>\n";
    };
    if (k >= 1) {
        xtick(zero);
        for (const auto& w : arr.walls(0).walls()) xtick(w);
        xtick(one);
    }
    if (k == 2) {
        const std::string left_x = Rational(margin - 8).to_fixed(6);
        auto ytick = [&](const Rational& v) {
            out << "<text x=\"" << left_x << "\" y=\"" << (Rational(margin + 4) + Rational(box) * (one - v)).to_fixed(6)
                << "\" text-anchor=\"end\">" << v.str() << "</text>\n";
        };
        ytick(zero);
        for (const auto& w : arr.walls(1).walls()) ytick(w);
        ytick(one);
    }
    out << "</g>\n";

    out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"14\">\n";
    if (k >= 1)
        out << "<text x=\"" << fx(Rational(1, 2)) << "\" y=\"" << Rational(margin + height + 44).to_fixed(6)
            << "\" text-anchor=\"middle\">c1 (" << escape(arr.factors()[0].id) << ")</text>\n";
    if (k == 2)
        out << "<text x=\"" << Rational(18).to_fixed(6) << "\" y=\"" << fy(Rational(1, 2)) << "\" text-anchor=\"middle\" transform=\"rotate(-90 "
            << Rational(18).to_fixed(6) << " " << fy(Rational(1, 2)) << ")\">c2 (" << escape(arr.factors()[1].id)
            << ")</text>\n";
    out << "</g>\n";

    if (fold) {
        const bool swapped = k == 2 && fold->classes.size() == 1;
        if (swapped)
            out << "<line class=\"mirror\" x1=\"" << fx(zero) << "\" y1=\"" << fy(zero) << "\" x2=\"" << fx(one)
                << "\" y2=\"" << fy(one) << "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
        out << "<g class=\"orbits\" font-family=\"monospace\" font-size=\"10\" fill=\"gray\" text-anchor=\"middle\">\n";
        for (const auto& cell : enumerate_cells(arr, 0)) {
            const std::size_t orbit = fold->orbit_of(cell);
            const Rational cx = k >= 1 ? midpoint(arr.walls(0), cell.coords[0].index) : Rational(1, 2);
            const Rational cy = k == 2 ? midpoint(arr.walls(1), cell.coords[1].index) : Rational(1, 2);
            out << "<text class=\"orbit\" data-orbit=\"" << orbit << "\" x=\"" << fx(cx) << "\" y=\""
                << (Rational(margin + 4) + Rational(height) * (one - cy)).to_fixed(6) << "\">" << orbit << "</text>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

/// Two-factor figure; the diagram used for the dp3 x dp4 decomposition.
inline std::string emit_figure(const ProductArrangement& arr, const FoldResult* fold = nullptr) {
    if (arr.dimension() != 2 && arr.dimension() != 0)
        throw Error(ErrorCode::unsupported_dimension, "figure needs a 2-factor arrangement");
    return render_svg(arr, fold);
}

/// Text diagram: walls are '|' on a labeled interval (one factor), or a
/// grid of '|' and '-' with '+' at crossings (two factors).
inline std::string render_ascii(const ProductArrangement& arr) {
    const std::size_t k = arr.dimension();
    if (k > 2) throw Error(ErrorCode::unsupported_dimension, "ASCII needs at most 2 factors, got " + std::to_string(k));
    std::ostringstream out;
    if (k == 0) {
        out << "single cell (no factors)\n";
        return out.str();
    }
    auto width_for = [](const WallSet& ws) {
        std::size_t w = 3;
        for (const auto& x : ws.walls()) w = std::max(w, x.str().size() + 2);
        return w;
    };
    const WallSet& xs = arr.walls(0);
    const std::size_t wx = width_for(xs);

    // Column of each vertical wall inside a row starting at `lead` characters.
    auto wall_labels = [&](std::size_t lead) {
        std::string line(lead, ' ');
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const std::size_t col = lead + (i + 1) * (wx + 1) - 1;
            if (line.size() < col) line.append(col - line.size(), ' ');
            line += xs[i].str();
        }
        return line;
    };

    if (k == 1) {
        out << arr.factors()[0].id << ": " << xs.size() << " walls, " << xs.chamber_count() << " chambers\n";
        std::string axis = "0 ";
        for (std::size_t i = 0; i < xs.chamber_count(); ++i) {
            axis += std::string(wx, '-');
            if (i + 1 < xs.chamber_count()) axis += '|';
        }
        out << axis << " 1\n";
        out << wall_labels(2) << "\n";
        return out.str();
    }

    const WallSet& ys = arr.walls(1);
    std::size_t lead = 2;
    for (const auto& y : ys.walls()) lead = std::max(lead, y.str().size() + 1);
    lead += 1;
    auto border = [&](char fill, char joint, char edge) {
        std::string s(1, edge);
        for (std::size_t i = 0; i < xs.chamber_count(); ++i) {
            s += std::string(wx, fill);
            s += i + 1 < xs.chamber_count() ? joint : edge;
        }
        return s;
    };
    auto label = [&](const std::string& text) {
        return std::string(lead - 1 - text.size(), ' ') + text + " ";
    };
    out << arr.factors()[0].id << " x " << arr.factors()[1].id << ": " << xs.chamber_count() * ys.chamber_count()
        << " chambers\n";
    out << label("1") << border('-', '+', '+') << "\n";
    for (std::size_t row = ys.chamber_count(); row-- > 0;) {
        out << label("") << border(' ', '|', '|') << "\n";
        if (row > 0) out << label(ys[row - 1].str()) << border('-', '+', '+') << "\n";
    }
    out << label("0") << border('-', '+', '+') << "\n";
    std::string bottom = std::string(lead, ' ') + "0";
    const std::string walls_line = wall_labels(lead);
    if (walls_line.size() > bottom.size()) bottom += walls_line.substr(bottom.size());
    const std::size_t right = lead + xs.chamber_count() * (wx + 1);
    if (bottom.size() < right) bottom.append(right - bottom.size(), ' ');
    bottom += "1";
    out << bottom << "\n";
    return out.str();
}

inline std::string render(const ProductArrangement& arr, Format format, const FoldResult* fold = nullptr) {
    switch (format) {
        case Format::svg: return render_svg(arr, fold);
        case Format::ascii: return render_ascii(arr);
        case Format::json: return arrangement_json(arr, fold).dump(2) + "\n";
    }
    return {};
}

}  // namespace kwall
