// T0 2-covers through simple graphs without isolated-edge components.
#include <iostream>

#include "t0enum/catalog/catalog.hpp"
#include "t0enum/oracle.hpp"

int main() {
    using namespace t0enum;
    std::cout << "graphs without isolated edges (formula / brute force)\n";
    for (int m = 0; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n)
            std::cout << (n > 1 ? "\t" : "") << catalog::theta_circ_03(m, n, false) << '/'
                      << oracle::count_graphs_without_bare_edges(m, n, false, false);
        std::cout << '\n';
    }
    const auto& cls = catalog::resolve_class("beta_bar_star_13");
    std::cout << cls.id << ": " << cls.citation << '\n';
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) std::cout << (n > 1 ? "\t" : "") << cls.evaluate(m, n, std::nullopt);
        std::cout << '\n';
    }
}
