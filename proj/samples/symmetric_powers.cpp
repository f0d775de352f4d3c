// Chamber orbits of [M(dp3)^k / S_k] for k = 1..4, next to the descriptor
// the product moduli reduces to.

#include <iostream>
#include <string>
#include <vector>

#include "kwall/kwall.hpp"

int main() {
    const auto reg = kwall::load_registry();
    for (unsigned k = 1; k <= 4; ++k) {
        const std::vector<std::string> ids(k, "dp3");
        const auto arr = kwall::build_product(reg, ids);
        const auto fold = kwall::fold_symmetric(arr, kwall::group_by_id(arr));
        const auto desc = kwall::canonicalize(kwall::FactorMultiset::from_list(ids));
        std::cout << desc.str() << ": " << fold.orbit_count(0) << " chamber orbits (of "
                  << arr.cell_counts()[0] << " chambers)\n";
    }
}
