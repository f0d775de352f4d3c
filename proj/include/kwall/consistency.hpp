#pragma once

#include <string>
#include <vector>

#include "kwall/arrangement.hpp"
#include "kwall/invariants.hpp"
#include "kwall/wallsets.hpp"

namespace kwall {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

/// Internal checks over every registered family: reparametrization
/// round-trips, record invariants, c/t wall agreement, product
/// volume/Hilbert identities and arrangement counts.
inline std::vector<CheckResult> consistency_suite(const Registry& reg) {
    std::vector<CheckResult> results;
    auto record = [&](std::string name, const std::vector<std::string>& problems) {
        CheckResult r{std::move(name), problems.empty(), {}};
        for (const auto& p : problems) r.detail += (r.detail.empty() ? "" : "; ") + p;
        results.push_back(std::move(r));
    };

    for (const auto& [id, rec] : reg) {
        record("record invariants: " + id, record_violations(rec));

        if (rec.reparam) {
            std::vector<std::string> bad;
            const MoebiusMap& f = *rec.reparam;
            const MoebiusMap g = f.inverse();
            try {
                if (g.inverse() != f) bad.push_back("inverse of inverse differs");
                if (f.compose(g) != MoebiusMap::identity()) bad.push_back("f o f^-1 is not the identity");
                if (f.eval(Rational(0)) != Rational(0)) bad.push_back("t(0) != 0");
                if (f.eval(Rational(1)) != Rational(1)) bad.push_back("t(1) != 1");
                std::vector<Rational> probes;
                if (rec.c_walls) probes = rec.c_walls->walls();
                for (long long q = 2; q <= 12; ++q)
                    for (long long p = 1; p < q; ++p) probes.emplace_back(p, q);
                for (const auto& x : probes)
                    if (g.eval(f.eval(x)) != x) bad.push_back("round trip fails at " + x.str());
            } catch (const Error& e) {
                bad.push_back(e.what());
            }
            record("reparametrization round trip: " + id, bad);
        }

        if (rec.c_walls && rec.reparam && rec.t_walls) {
            std::vector<std::string> bad;
            try {
                c_to_t_walls(rec);
            } catch (const Error& e) {
                bad.push_back(e.what());
            }
            record("c/t wall agreement: " + id, bad);
        }
    }

    {
        std::vector<std::string> bad;
        for (const auto& [ida, a] : reg)
            for (const auto& [idb, b] : reg) {
                const auto prod = product_numerics(FanoNumerics::of(a), FanoNumerics::of(b));
                for (const auto& p : consistency_check(prod)) bad.push_back(ida + " x " + idb + ": " + p);
            }
        record("product volume/Hilbert identity", bad);
    }

    {
        std::vector<std::string> bad;
        std::vector<Factor> factors;
        for (const auto& [id, rec] : reg)
            if (rec.c_walls) factors.push_back({id, *rec.c_walls});
        // Pairs of wall-carrying families.
        for (const auto& a : factors)
            for (const auto& b : factors) {
                const ProductArrangement arr({a, b});
                const auto counts = arr.cell_counts();
                for (std::size_t j = 0; j <= 2; ++j)
                    if (Integer(enumerate_cells(arr, j).size()) != counts[j])
                        bad.push_back(a.id + " x " + b.id + ": codim " + std::to_string(j) + " count mismatch");
                const auto g = crossing_graph(arr);
                if (g.edges.size() != enumerate_cells(arr, 1).size())
                    bad.push_back(a.id + " x " + b.id + ": crossing edges != codim-1 cells");
                if (!g.is_connected()) bad.push_back(a.id + " x " + b.id + ": crossing graph disconnected");
            }
        record("product arrangement counts", bad);
    }
    return results;
}

}  // namespace kwall
