#pragma once

/**
 * @file wallsets.hpp
 * @brief Per-family wall data, chamber bookkeeping in one coefficient, and
 *        the compiled-in family registry.
 *
 * A wall set lives in the open interval (0, 1). The endpoints 0 and 1 bound
 * the first and last chambers and are never stored as walls, so a family
 * with w walls has w + 1 chambers.
 */

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwall/moebius.hpp"
#include "kwall/polynomial.hpp"
#include "kwall/rational.hpp"

namespace kwall {

/// Chamber or wall index along one coefficient axis.
///
/// Positions are ordered by where they sit on the axis:
/// chamber 0 < wall 0 < chamber 1 < wall 1 < ... < chamber w.
struct Position {
    enum class Kind { chamber, wall };

    Kind kind = Kind::chamber;
    std::size_t index = 0;

    static Position chamber(std::size_t i) { return {Kind::chamber, i}; }
    static Position wall(std::size_t i) { return {Kind::wall, i}; }

    bool is_wall() const { return kind == Kind::wall; }
    std::size_t axis_rank() const { return 2 * index + (is_wall() ? 1 : 0); }

    friend bool operator==(const Position&, const Position&) = default;
    friend std::strong_ordering operator<=>(const Position& a, const Position& b) {
        return a.axis_rank() <=> b.axis_rank();
    }

    std::string str() const { return (is_wall() ? "Wall " : "Chamber ") + std::to_string(index); }
};

/// Open interval (lower, upper) of one chamber.
struct Chamber {
    std::size_t index = 0;
    Rational lower;
    Rational upper;

    bool contains(const Rational& x) const { return lower < x && x < upper; }
    friend bool operator==(const Chamber&, const Chamber&) = default;
};

class WallSet {
public:
    WallSet() = default;

    /// Throws InvalidArgument unless `walls` is strictly increasing inside (0, 1).
    explicit WallSet(std::vector<Rational> walls) : walls_(std::move(walls)) {
        for (std::size_t i = 0; i < walls_.size(); ++i) {
            if (walls_[i] <= Rational(0) || walls_[i] >= Rational(1))
                throw Error(ErrorCode::invalid_argument, "wall " + walls_[i].str() + " outside (0,1)");
            if (i > 0 && walls_[i - 1] >= walls_[i])
                throw Error(ErrorCode::invalid_argument, "walls not strictly increasing at " + walls_[i].str());
        }
    }

    const std::vector<Rational>& walls() const { return walls_; }
    std::size_t size() const { return walls_.size(); }
    bool empty() const { return walls_.empty(); }
    const Rational& operator[](std::size_t i) const { return walls_[i]; }
    std::size_t chamber_count() const { return walls_.size() + 1; }

    Rational chamber_lower(std::size_t i) const { return i == 0 ? Rational(0) : walls_[i - 1]; }
    Rational chamber_upper(std::size_t i) const { return i == walls_.size() ? Rational(1) : walls_[i]; }

    std::string str() const {
        std::string out;
        for (const auto& w : walls_) {
            if (!out.empty()) out += ' ';
            out += w.str();
        }
        return out;
    }

    friend bool operator==(const WallSet&, const WallSet&) = default;

private:
    std::vector<Rational> walls_;
};

inline std::vector<Chamber> chambers_of(const WallSet& ws) {
    std::vector<Chamber> out;
    out.reserve(ws.chamber_count());
    for (std::size_t i = 0; i < ws.chamber_count(); ++i) out.push_back({i, ws.chamber_lower(i), ws.chamber_upper(i)});
    return out;
}

/// Chamber containing `x`, or the wall equal to `x`. Requires 0 < x < 1.
inline Position locate(const WallSet& ws, const Rational& x) {
    if (x <= Rational(0) || x >= Rational(1))
        throw Error(ErrorCode::out_of_range, x.str() + " is not inside (0,1)");
    const auto& w = ws.walls();
    const auto it = std::lower_bound(w.begin(), w.end(), x);
    const auto i = static_cast<std::size_t>(it - w.begin());
    if (it != w.end() && *it == x) return Position::wall(i);
    return Position::chamber(i);
}

enum class Space { c, t };

struct FamilyRecord {
    std::string id;
    unsigned dimension = 0;
    Rational volume;
    std::optional<WallSet> c_walls;
    std::optional<WallSet> t_walls;
    std::optional<MoebiusMap> reparam;
    std::string moduli_note;
    Polynomial hilbert;
    /// The K-moduli of this family is a single point; products elide it.
    bool moduli_is_point = false;
    /// Explicit description of the good moduli space, when one is known.
    std::optional<std::string> good_moduli;
};

/// Image of the c-walls under the reparametrization. When the record also
/// stores t-walls they must agree exactly.
inline WallSet c_to_t_walls(const FamilyRecord& rec) {
    if (!rec.c_walls) throw Error(ErrorCode::missing_data, rec.id + " has no c-walls");
    if (!rec.reparam) throw Error(ErrorCode::missing_data, rec.id + " has no reparametrization");
    std::vector<Rational> image;
    image.reserve(rec.c_walls->size());
    for (const auto& c : rec.c_walls->walls()) image.push_back(rec.reparam->eval(c));
    WallSet out(std::move(image));
    if (rec.t_walls && *rec.t_walls != out)
        throw Error(ErrorCode::inconsistent,
                    rec.id + ": image of c-walls {" + out.str() + "} differs from stored t-walls {" +
                        rec.t_walls->str() + "}");
    return out;
}

inline WallSet walls_in(const FamilyRecord& rec, Space space) {
    if (space == Space::c) {
        if (!rec.c_walls) throw Error(ErrorCode::missing_data, rec.id + " has no c-walls");
        return *rec.c_walls;
    }
    if (rec.t_walls) return *rec.t_walls;
    return c_to_t_walls(rec);
}

/// Violated record invariants, empty when the record is consistent.
inline std::vector<std::string> record_violations(const FamilyRecord& rec) {
    std::vector<std::string> out;
    if (rec.hilbert(Rational(0)) != Rational(1))
        out.push_back(rec.id + ": hilbert(0) = " + rec.hilbert(Rational(0)).str() + ", expected 1");
    if (rec.hilbert.degree() != static_cast<int>(rec.dimension))
        out.push_back(rec.id + ": hilbert degree " + std::to_string(rec.hilbert.degree()) + " != dimension " +
                      std::to_string(rec.dimension));
    const Rational top = Rational(factorial(rec.dimension)) * rec.hilbert.coefficient(rec.dimension);
    if (top != rec.volume)
        out.push_back(rec.id + ": n! * lead = " + top.str() + " != volume " + rec.volume.str());
    if (rec.c_walls && rec.reparam) {
        try {
            c_to_t_walls(rec);
        } catch (const Error& e) {
            out.push_back(e.what());
        }
    }
    return out;
}

class Registry {
public:
    using Map = std::map<std::string, FamilyRecord>;

    const FamilyRecord& at(const std::string& id) const {
        const auto it = records_.find(id);
        if (it == records_.end()) throw Error(ErrorCode::invalid_argument, "unknown family '" + id + "'");
        return it->second;
    }
    const FamilyRecord& operator[](const std::string& id) const { return at(id); }

    bool contains(const std::string& id) const { return records_.count(id) != 0; }
    std::size_t size() const { return records_.size(); }

    /// Inserts or replaces a record after checking its invariants.
    void put(FamilyRecord rec) {
        const auto bad = record_violations(rec);
        if (!bad.empty()) throw Error(ErrorCode::invalid_argument, bad.front());
        std::string key = rec.id;
        records_.insert_or_assign(std::move(key), std::move(rec));
    }

    /// Inserts or replaces without validation; consistency_suite() reports
    /// whatever is wrong with such records.
    void put_unchecked(FamilyRecord rec) {
        std::string key = rec.id;
        records_.insert_or_assign(std::move(key), std::move(rec));
    }

    Map::const_iterator begin() const { return records_.begin(); }
    Map::const_iterator end() const { return records_.end(); }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        for (const auto& [id, rec] : records_) out.push_back(id);
        return out;
    }

    bool is_point(const std::string& id) const {
        const auto it = records_.find(id);
        return it != records_.end() && it->second.moduli_is_point;
    }

private:
    Map records_;
};

namespace detail {

inline WallSet walls_from(std::initializer_list<std::pair<long long, long long>> fractions) {
    std::vector<Rational> out;
    for (const auto& [p, q] : fractions) out.emplace_back(p, q);
    return WallSet(std::move(out));
}

inline Polynomial poly_from(std::initializer_list<std::pair<long long, long long>> coeffs) {
    std::vector<Rational> out;
    for (const auto& [p, q] : coeffs) out.emplace_back(p, q);
    return Polynomial(std::move(out));
}

}  // namespace detail

/// Families known out of the box.
///
/// Hilbert polynomials are chi(-mK) = 1 + d m(m+1)/2 for a del Pezzo surface
/// of degree d and 2m + 1 for the projective line.
inline Registry load_registry() {
    using detail::poly_from;
    using detail::walls_from;
    Registry reg;

    FamilyRecord dp3;
    dp3.id = "dp3";
    dp3.dimension = 2;
    dp3.volume = 3;
    dp3.c_walls = walls_from({{2, 11}, {4, 13}, {2, 5}, {10, 19}, {2, 3}});
    dp3.t_walls = walls_from({{1, 5}, {1, 3}, {3, 7}, {5, 9}, {9, 13}});
    dp3.reparam = MoebiusMap(9, 0, 1, 8);
    dp3.moduli_note =
        "cubic surfaces with a hyperplane section; K-moduli of (X, cD) is the VGIT quotient of "
        "(cubic, hyperplane) pairs in P^3 by PGL(4) at slope t(c) = 9c/(8+c)";
    dp3.hilbert = poly_from({{1, 1}, {3, 2}, {3, 2}});
    dp3.good_moduli = "P(1,2,3,4,5)";
    reg.put(std::move(dp3));

    FamilyRecord dp4;
    dp4.id = "dp4";
    dp4.dimension = 2;
    dp4.volume = 4;
    dp4.c_walls = walls_from({{1, 7}, {1, 4}, {1, 3}, {1, 2}, {5, 8}});
    dp4.t_walls = walls_from({{1, 6}, {2, 7}, {3, 8}, {6, 11}, {2, 3}});
    dp4.reparam = MoebiusMap(6, 0, 1, 5);
    dp4.moduli_note =
        "complete intersections of two quadrics with a hyperplane section; K-moduli of (X, cD) is the "
        "VGIT quotient of (Gr(2, H^0(O(2))), hyperplane) pairs in P^4 by PGL(5) at slope t(c) = 6c/(5+c)";
    dp4.hilbert = poly_from({{1, 1}, {2, 1}, {2, 1}});
    dp4.good_moduli = "P(1,2,3)";
    reg.put(std::move(dp4));

    FamilyRecord p1;
    p1.id = "p1";
    p1.dimension = 1;
    p1.volume = 2;
    p1.c_walls = WallSet{};
    p1.t_walls = WallSet{};
    p1.reparam = MoebiusMap::identity();
    p1.moduli_note = "point";
    p1.hilbert = poly_from({{1, 1}, {2, 1}});
    p1.moduli_is_point = true;
    p1.good_moduli = "pt";
    reg.put(std::move(p1));

    FamilyRecord dp2;
    dp2.id = "dp2";
    dp2.dimension = 2;
    dp2.volume = 2;
    dp2.moduli_note =
        "degree-2 del Pezzo surfaces; K-moduli is the Kirwan blow-up of the GIT quotient of plane quartics "
        "along the double conic 2C (for pairs: of the (quartic, line) VGIT along (2C, L)); no wall values recorded";
    dp2.hilbert = poly_from({{1, 1}, {1, 1}, {1, 1}});
    dp2.good_moduli = "Kirwan blow-up of quartic-curve GIT";
    reg.put(std::move(dp2));

    FamilyRecord dp1;
    dp1.id = "dp1";
    dp1.dimension = 2;
    dp1.volume = 1;
    dp1.moduli_note = "degree-1 del Pezzo surfaces; K-moduli of K-semistable degenerations; no wall values recorded";
    dp1.hilbert = poly_from({{1, 1}, {1, 2}, {1, 2}});
    reg.put(std::move(dp1));

    return reg;
}

}  // namespace kwall
