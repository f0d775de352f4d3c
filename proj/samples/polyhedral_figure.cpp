// Writes the dp3 x dp4 wall-chamber figure to stdout as SVG and a summary
// to stderr.
//
//   ./sample_polyhedral_figure > figure.svg

#include <iostream>

#include "kwall/kwall.hpp"

int main() {
    const auto reg = kwall::load_registry();
    const auto arr = kwall::build_product(reg, {"dp3", "dp4"});
    const auto counts = arr.cell_counts();
    std::cerr << "dp3 x dp4: " << counts[0] << " chambers, " << counts[1] << " walls, " << counts[2]
              << " wall intersections\n";
    std::cout << kwall::emit_figure(arr);
}
