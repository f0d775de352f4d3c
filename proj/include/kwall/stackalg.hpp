#pragma once

/**
 * @file stackalg.hpp
 * @brief Symbolic moduli descriptors for products of families.
 *
 * The moduli of a product of pairwise non-isomorphic factors is the product
 * of the factor moduli; s isomorphic copies of one factor contribute the
 * symmetric quotient [M^s / S_s]; factors whose moduli is a point drop out.
 * canonicalize() applies exactly these rules to a multiset of factors.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kwall/error.hpp"

namespace kwall {

struct ModuliDescriptor {
    enum class Kind { atom, point, product, sym, named };

    Kind kind = Kind::point;
    /// Family id for atoms, display text for named spaces; empty otherwise.
    std::string text;
    std::vector<ModuliDescriptor> children;
    /// Symmetric power for Kind::sym.
    unsigned multiplicity = 0;

    static ModuliDescriptor point() { return {}; }
    static ModuliDescriptor atom(std::string id) { return {Kind::atom, std::move(id), {}, 0}; }
    static ModuliDescriptor named(std::string text) { return {Kind::named, std::move(text), {}, 0}; }
    static ModuliDescriptor sym(ModuliDescriptor base, unsigned m) {
        if (m < 2) throw Error(ErrorCode::invalid_argument, "symmetric quotient needs m >= 2");
        return {Kind::sym, {}, {std::move(base)}, m};
    }
    static ModuliDescriptor product(std::vector<ModuliDescriptor> children) {
        if (children.size() < 2) throw Error(ErrorCode::invalid_argument, "product needs at least two children");
        return {Kind::product, {}, std::move(children), 0};
    }

    friend bool operator==(const ModuliDescriptor& a, const ModuliDescriptor& b) {
        return a.kind == b.kind && a.text == b.text && a.multiplicity == b.multiplicity && a.children == b.children;
    }

    friend bool operator<(const ModuliDescriptor& a, const ModuliDescriptor& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.text != b.text) return a.text < b.text;
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(),
                                            b.children.end());
    }

    /// Text form, e.g. "M(dp3) x [M(dp4)^2 / S_2]".
    std::string str() const {
        switch (kind) {
            case Kind::point: return "pt";
            case Kind::atom: return "M(" + text + ")";
            case Kind::named: return text;
            case Kind::sym: return "[" + children.front().str() + "^" + std::to_string(multiplicity) + " / S_" +
                                   std::to_string(multiplicity) + "]";
            case Kind::product: {
                std::string out;
                for (const auto& c : children) {
                    if (!out.empty()) out += " x ";
                    out += c.kind == Kind::product ? "(" + c.str() + ")" : c.str();
                }
                return out;
            }
        }
        return {};
    }
};

/// Caller-declared isomorphisms between family ids. Ids that were never
/// declared are isomorphic only to themselves.
class IsoRelation {
public:
    void declare(const std::string& a, const std::string& b) {
        const auto ra = find(a);
        const auto rb = find(b);
        if (ra == rb) return;
        // Keep the lexicographically smaller id as the class root.
        if (ra < rb) parent_[rb] = ra;
        else parent_[ra] = rb;
    }

    /// Smallest id of the class containing `id`.
    std::string representative(const std::string& id) const { return find(id); }

    bool isomorphic(const std::string& a, const std::string& b) const { return find(a) == find(b); }

private:
    std::string find(const std::string& id) const {
        std::string cur = id;
        for (auto it = parent_.find(cur); it != parent_.end(); it = parent_.find(cur)) cur = it->second;
        return cur;
    }

    std::map<std::string, std::string> parent_;
};

struct FactorMultiset {
    std::vector<std::pair<std::string, unsigned>> factors;
    IsoRelation iso;
    /// Entries that stand for named spaces rather than family ids.
    std::set<std::string> named;

    FactorMultiset() = default;
    FactorMultiset(std::initializer_list<std::pair<std::string, unsigned>> init) : factors(init) {}

    /// One entry per listed id, repeats accumulate.
    static FactorMultiset from_list(const std::vector<std::string>& ids) {
        FactorMultiset out;
        for (const auto& id : ids) out.add(id);
        return out;
    }

    void add(const std::string& id, unsigned multiplicity = 1) {
        if (multiplicity == 0) throw Error(ErrorCode::invalid_argument, "zero multiplicity for " + id);
        for (auto& [fid, m] : factors)
            if (fid == id) {
                m += multiplicity;
                return;
            }
        factors.emplace_back(id, multiplicity);
    }

    unsigned total() const {
        unsigned n = 0;
        for (const auto& [id, m] : factors) n += m;
        return n;
    }
};

using PointPredicate = std::function<bool(const std::string&)>;

/// Product over iso-classes of Atom (s = 1) or SymQuotient(Atom, s).
/// Factors flagged by `is_point` are dropped; a product of one child is the
/// child itself; an empty product is the point.
inline ModuliDescriptor canonicalize(const FactorMultiset& f, const PointPredicate& is_point = {}) {
    std::map<std::string, unsigned> classes;
    for (const auto& [id, m] : f.factors) {
        if (m == 0) throw Error(ErrorCode::invalid_argument, "zero multiplicity for " + id);
        if (is_point && is_point(id)) continue;
        classes[f.iso.representative(id)] += m;
    }
    std::vector<ModuliDescriptor> parts;
    for (const auto& [id, s] : classes) {
        auto leaf = f.named.count(id) ? ModuliDescriptor::named(id) : ModuliDescriptor::atom(id);
        parts.push_back(s == 1 ? std::move(leaf) : ModuliDescriptor::sym(std::move(leaf), s));
    }
    std::sort(parts.begin(), parts.end());
    if (parts.empty()) return ModuliDescriptor::point();
    if (parts.size() == 1) return std::move(parts.front());
    return ModuliDescriptor::product(std::move(parts));
}

namespace detail {

inline void collect_factors(const ModuliDescriptor& d, unsigned weight, FactorMultiset& out) {
    using K = ModuliDescriptor::Kind;
    switch (d.kind) {
        case K::point: return;
        case K::atom: out.add(d.text, weight); return;
        case K::named:
            out.add(d.text, weight);
            out.named.insert(d.text);
            return;
        case K::sym:
            for (const auto& c : d.children) collect_factors(c, weight * d.multiplicity, out);
            return;
        case K::product:
            for (const auto& c : d.children) collect_factors(c, weight, out);
            return;
    }
}

}  // namespace detail

/// Factor multiset a descriptor stands for. A symmetric quotient of a
/// product is read as the power of each child.
inline FactorMultiset to_multiset(const ModuliDescriptor& d) {
    FactorMultiset out;
    detail::collect_factors(d, 1, out);
    return out;
}

/// Re-canonicalizes an arbitrary descriptor tree (flattening nested products
/// and merging powers of the same atom).
inline ModuliDescriptor normalize(const ModuliDescriptor& d, const IsoRelation& iso = {},
                                  const PointPredicate& is_point = {}) {
    FactorMultiset f = to_multiset(d);
    f.iso = iso;
    return canonicalize(f, is_point);
}

enum class ProductMapKind { isomorphism, s2_gerbe };

inline const char* to_string(ProductMapKind k) { return k == ProductMapKind::isomorphism ? "Isomorphism" : "S2Gerbe"; }

/// Nature of the map M(X1) x M(X2) -> M(X1 x X2) for exactly two factor slots.
inline ProductMapKind classify_product_map(const FactorMultiset& f) {
    if (f.total() != 2)
        throw Error(ErrorCode::arity, "product map classification needs exactly two factors, got " +
                                          std::to_string(f.total()));
    std::vector<std::string> slots;
    for (const auto& [id, m] : f.factors)
        for (unsigned i = 0; i < m; ++i) slots.push_back(id);
    return f.iso.isomorphic(slots[0], slots[1]) ? ProductMapKind::s2_gerbe : ProductMapKind::isomorphism;
}

inline ProductMapKind classify_product_map(const std::string& a, const std::string& b, const IsoRelation& iso = {}) {
    FactorMultiset f;
    f.iso = iso;
    f.factors = {{a, 1}, {b, 1}};
    if (a == b) f.factors = {{a, 2}};
    return classify_product_map(f);
}

/// Replaces atoms by named good moduli spaces where `lookup` knows one.
inline ModuliDescriptor substitute_named(const ModuliDescriptor& d,
                                         const std::function<std::optional<std::string>(const std::string&)>& lookup) {
    if (d.kind == ModuliDescriptor::Kind::atom) {
        if (auto name = lookup(d.text)) return ModuliDescriptor::named(*name);
        return d;
    }
    ModuliDescriptor out = d;
    for (auto& c : out.children) c = substitute_named(c, lookup);
    return out;
}

}  // namespace kwall
