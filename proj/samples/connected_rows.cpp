// Connected hypergraphs without empty edges, ordered edges (convention 2).
#include <iostream>

#include "t0enum/catalog/connected.hpp"

int main() {
    using namespace t0enum;
    const auto conv = RowConvention::ordered;
    std::cout << "m\\n";
    for (int n = 1; n <= 6; ++n) std::cout << '\t' << n;
    std::cout << '\n';
    for (int m = 1; m <= 6; ++m) {
        std::cout << m;
        for (int n = 1; n <= 6; ++n) std::cout << '\t' << catalog::omega1(conv, m, n);
        std::cout << '\n';
    }
    std::cout << "T0 versions:\n";
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 6; ++n) std::cout << (n > 1 ? "\t" : "") << catalog::omega_star(1, conv, m, n);
        std::cout << '\n';
    }
}
