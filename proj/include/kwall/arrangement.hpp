#pragma once

/**
 * @file arrangement.hpp
 * @brief Axis-parallel product of per-factor wall-chamber decompositions.
 *
 * A cell is a tuple of per-factor positions (chamber or wall). Because every
 * wall is a coordinate hyperplane, the face poset is the product of the
 * factors' path posets and no geometry beyond the wall values is needed.
 * Cells are ordered lexicographically by per-axis position
 * (chamber 0 < wall 0 < chamber 1 < ...).
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "kwall/wallsets.hpp"

namespace kwall {

struct Factor {
    std::string id;
    WallSet walls;
};

struct Cell {
    std::vector<Position> coords;

    std::size_t codim() const {
        return static_cast<std::size_t>(std::count_if(coords.begin(), coords.end(), [](const Position& p) { return p.is_wall(); }));
    }

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell& a, const Cell& b) { return a.coords <=> b.coords; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out += ", ";
            out += coords[i].str();
        }
        return out + ")";
    }
};

class ProductArrangement {
public:
    ProductArrangement() = default;
    explicit ProductArrangement(std::vector<Factor> factors) : factors_(std::move(factors)) {}

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t dimension() const { return factors_.size(); }
    const WallSet& walls(std::size_t i) const { return factors_[i].walls; }

    /// Number of cells of each codimension 0..k, from the product formula.
    std::vector<Integer> cell_counts() const {
        // Coefficient of x^j in prod_i ((w_i + 1) + w_i x).
        std::vector<Integer> poly{1};
        for (const auto& f : factors_) {
            std::vector<Integer> next(poly.size() + 1, 0);
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j] * (f.walls.size() + 1);
                next[j + 1] += poly[j] * f.walls.size();
            }
            poly = std::move(next);
        }
        return poly;
    }

private:
    std::vector<Factor> factors_;
};

inline ProductArrangement build_product(std::vector<Factor> factors) { return ProductArrangement(std::move(factors)); }

inline ProductArrangement build_product(const Registry& reg, const std::vector<std::string>& ids, Space space = Space::c) {
    std::vector<Factor> factors;
    factors.reserve(ids.size());
    for (const auto& id : ids) factors.push_back({id, walls_in(reg.at(id), space)});
    return ProductArrangement(std::move(factors));
}

namespace detail {

inline Position position_from_rank(std::size_t rank) {
    return rank % 2 == 0 ? Position::chamber(rank / 2) : Position::wall(rank / 2);
}

/// Calls fn(cell) for every cell, in lexicographic order.
template <typename Fn>
void for_each_cell(const ProductArrangement& arr, Fn&& fn) {
    const std::size_t k = arr.dimension();
    std::vector<std::size_t> rank(k, 0);
    Cell cell;
    cell.coords.assign(k, Position::chamber(0));
    while (true) {
        for (std::size_t i = 0; i < k; ++i) cell.coords[i] = position_from_rank(rank[i]);
        fn(static_cast<const Cell&>(cell));
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++rank[i] < 2 * arr.walls(i).size() + 1) break;
            rank[i] = 0;
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

}  // namespace detail

inline std::vector<Cell> enumerate_cells(const ProductArrangement& arr, std::size_t codim) {
    if (codim > arr.dimension())
        throw Error(ErrorCode::bad_codim,
                    "codimension " + std::to_string(codim) + " outside 0.." + std::to_string(arr.dimension()));
    std::vector<Cell> out;
    detail::for_each_cell(arr, [&](const Cell& c) {
        if (c.codim() == codim) out.push_back(c);
    });
    return out;
}

inline Cell locate_point(const ProductArrangement& arr, const std::vector<Rational>& point) {
    if (point.size() != arr.dimension())
        throw Error(ErrorCode::dimension_mismatch, "point has " + std::to_string(point.size()) +
                                                       " coordinates, arrangement has " +
                                                       std::to_string(arr.dimension()) + " factors");
    Cell cell;
    for (std::size_t i = 0; i < point.size(); ++i) cell.coords.push_back(locate(arr.walls(i), point[i]));
    return cell;
}

struct CrossingEdge {
    std::size_t from = 0;  // node on the lower side of the wall
    std::size_t to = 0;
    Cell wall;
};

struct CrossingGraph {
    std::vector<Cell> nodes;
    std::vector<CrossingEdge> edges;

    std::size_t node_index(const Cell& c) const {
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
        if (it == nodes.end() || *it != c) throw Error(ErrorCode::invalid_argument, "not a node: " + c.str());
        return static_cast<std::size_t>(it - nodes.begin());
    }

    bool is_connected() const {
        if (nodes.empty()) return true;
        std::vector<std::vector<std::size_t>> adj(nodes.size());
        for (const auto& e : edges) {
            adj[e.from].push_back(e.to);
            adj[e.to].push_back(e.from);
        }
        std::vector<bool> seen(nodes.size(), false);
        std::queue<std::size_t> todo;
        todo.push(0);
        seen[0] = true;
        std::size_t reached = 1;
        while (!todo.empty()) {
            const auto u = todo.front();
            todo.pop();
            for (auto v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    ++reached;
                    todo.push(v);
                }
        }
        return reached == nodes.size();
    }
};

/// Chambers joined across each codimension-1 cell.
inline CrossingGraph crossing_graph(const ProductArrangement& arr) {
    CrossingGraph g;
    g.nodes = enumerate_cells(arr, 0);
    if (arr.dimension() == 0) return g;
    for (const auto& wall : enumerate_cells(arr, 1)) {
        const auto axis = static_cast<std::size_t>(
            std::find_if(wall.coords.begin(), wall.coords.end(), [](const Position& p) { return p.is_wall(); }) -
            wall.coords.begin());
        Cell lo = wall;
        Cell hi = wall;
        lo.coords[axis] = Position::chamber(wall.coords[axis].index);
        hi.coords[axis] = Position::chamber(wall.coords[axis].index + 1);
        g.edges.push_back({g.node_index(lo), g.node_index(hi), wall});
    }
    return g;
}

using Grouping = std::vector<std::vector<std::size_t>>;

/// Each factor position in its own class.
inline Grouping singleton_grouping(std::size_t k) {
    Grouping out;
    for (std::size_t i = 0; i < k; ++i) out.push_back({i});
    return out;
}

/// Positions grouped by family id, classes ordered by first occurrence.
inline Grouping group_by_id(const ProductArrangement& arr) {
    Grouping out;
    std::map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < arr.dimension(); ++i) {
        const auto [it, fresh] = slot.emplace(arr.factors()[i].id, out.size());
        if (fresh) out.emplace_back();
        out[it->second].push_back(i);
    }
    return out;
}

struct CellOrbit {
    Cell representative;  // lexicographically smallest member
    std::vector<Cell> members;
};

struct FoldResult {
    Grouping classes;
    Integer group_order;
    /// orbits[j]: orbits of codimension-j cells, ordered by representative.
    std::vector<std::vector<CellOrbit>> orbits;
    /// Orbit counts per codimension from the Burnside average over the group.
    std::vector<Integer> burnside_counts;

    std::size_t orbit_count(std::size_t codim) const { return orbits.at(codim).size(); }

    /// Index of the orbit containing `cell` within orbits[cell.codim()].
    std::size_t orbit_of(const Cell& cell) const {
        const auto& list = orbits.at(cell.codim());
        for (std::size_t i = 0; i < list.size(); ++i)
            if (std::binary_search(list[i].members.begin(), list[i].members.end(), cell)) return i;
        throw Error(ErrorCode::invalid_argument, "cell not in arrangement: " + cell.str());
    }
};

namespace detail {

inline void validate_grouping(const ProductArrangement& arr, const Grouping& grouping) {
    std::vector<int> seen(arr.dimension(), 0);
    for (const auto& cls : grouping) {
        if (cls.empty()) throw Error(ErrorCode::invalid_argument, "empty class in grouping");
        for (auto pos : cls) {
            if (pos >= arr.dimension())
                throw Error(ErrorCode::invalid_argument, "grouping position " + std::to_string(pos) + " out of range");
            ++seen[pos];
        }
        for (auto pos : cls)
            if (arr.walls(pos) != arr.walls(cls.front()))
                throw Error(ErrorCode::mismatched_wall_sets, "positions " + std::to_string(cls.front()) + " and " +
                                                                 std::to_string(pos) + " carry different walls");
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != 1)
            throw Error(ErrorCode::invalid_argument, "grouping is not a partition at position " + std::to_string(i));
}

/// Burnside: average over all within-class permutations of the number of
/// fixed cells, split by codimension.
inline std::vector<Integer> burnside_cell_orbits(const ProductArrangement& arr, const Grouping& grouping,
                                                 Integer& group_order) {
    // Cycle-length multisets of every permutation of each class.
    struct ClassCycles {
        std::size_t walls;
        std::vector<std::vector<std::size_t>> per_element;
    };
    std::vector<ClassCycles> classes;
    group_order = 1;
    for (const auto& cls : grouping) {
        ClassCycles cc{arr.walls(cls.front()).size(), {}};
        std::vector<std::size_t> perm(cls.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<bool> done(perm.size(), false);
            std::vector<std::size_t> lengths;
            for (std::size_t s = 0; s < perm.size(); ++s) {
                if (done[s]) continue;
                std::size_t len = 0;
                for (std::size_t x = s; !done[x]; x = perm[x]) {
                    done[x] = true;
                    ++len;
                }
                lengths.push_back(len);
            }
            cc.per_element.push_back(std::move(lengths));
        } while (std::next_permutation(perm.begin(), perm.end()));
        group_order *= cc.per_element.size();
        classes.push_back(std::move(cc));
    }
    if (group_order > 1'000'000) throw Error(ErrorCode::bound_exceeded, "folding group order " + group_order.str());

    const std::size_t k = arr.dimension();
    std::vector<Integer> total(k + 1, 0);
    // Odometer over the product group.
    std::vector<std::size_t> pick(classes.size(), 0);
    while (true) {
        // A cycle of length L is fixed iff all its positions share one tag:
        // (w+1) chamber choices contributing x^0, w wall choices contributing x^L.
        std::vector<Integer> fixed{1};
        for (std::size_t c = 0; c < classes.size(); ++c) {
            for (auto len : classes[c].per_element[pick[c]]) {
                std::vector<Integer> next(fixed.size() + len, 0);
                for (std::size_t j = 0; j < fixed.size(); ++j) {
                    next[j] += fixed[j] * (classes[c].walls + 1);
                    next[j + len] += fixed[j] * classes[c].walls;
                }
                fixed = std::move(next);
            }
        }
        for (std::size_t j = 0; j < fixed.size() && j <= k; ++j) total[j] += fixed[j];
        std::size_t c = classes.size();
        bool wrapped = true;
        while (c > 0) {
            --c;
            if (++pick[c] < classes[c].per_element.size()) {
                wrapped = false;
                break;
            }
            pick[c] = 0;
        }
        if (wrapped) break;
    }
    for (auto& t : total) {
        if (t % group_order != 0) throw Error(ErrorCode::inconsistent, "Burnside sum not divisible by group order");
        t /= group_order;
    }
    return total;
}

}  // namespace detail

/// Orbits of cells under permutations of positions within each class of
/// `grouping`. Grouped positions must carry equal wall sets. Orbit counts are
/// produced twice, by Burnside's lemma and by explicit orbit enumeration, and
/// a disagreement raises Inconsistent.
inline FoldResult fold_symmetric(const ProductArrangement& arr, const Grouping& grouping) {
    detail::validate_grouping(arr, grouping);
    FoldResult result;
    result.classes = grouping;
    result.burnside_counts = detail::burnside_cell_orbits(arr, grouping, result.group_order);

    // Generators: adjacent transpositions inside each class.
    std::vector<std::pair<std::size_t, std::size_t>> swaps;
    for (auto cls : grouping) {
        std::sort(cls.begin(), cls.end());
        for (std::size_t i = 0; i + 1 < cls.size(); ++i) swaps.emplace_back(cls[i], cls[i + 1]);
    }

    for (std::size_t codim = 0; codim <= arr.dimension(); ++codim) {
        const auto cells = enumerate_cells(arr, codim);
        std::vector<bool> assigned(cells.size(), false);
        std::vector<CellOrbit> orbits;
        for (std::size_t s = 0; s < cells.size(); ++s) {
            if (assigned[s]) continue;
            CellOrbit orbit;
            std::queue<std::size_t> todo;
            todo.push(s);
            assigned[s] = true;
            while (!todo.empty()) {
                const auto u = todo.front();
                todo.pop();
                orbit.members.push_back(cells[u]);
                for (const auto& [a, b] : swaps) {
                    Cell moved = cells[u];
                    std::swap(moved.coords[a], moved.coords[b]);
                    const auto v = static_cast<std::size_t>(
                        std::lower_bound(cells.begin(), cells.end(), moved) - cells.begin());
                    if (!assigned[v]) {
                        assigned[v] = true;
                        todo.push(v);
                    }
                }
            }
            std::sort(orbit.members.begin(), orbit.members.end());
            orbit.representative = orbit.members.front();
            orbits.push_back(std::move(orbit));
        }
        // Cells are scanned in order, so the first unassigned cell is each new
        // orbit's minimum and orbits come out sorted by representative.
        if (Integer(orbits.size()) != result.burnside_counts[codim])
            throw Error(ErrorCode::inconsistent, "codim " + std::to_string(codim) + ": enumeration found " +
                                                     std::to_string(orbits.size()) + " orbits, Burnside gives " +
                                                     result.burnside_counts[codim].str());
        result.orbits.push_back(std::move(orbits));
    }
    return result;
}

}  // namespace kwall
