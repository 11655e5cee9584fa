#include <cassert>
#include <iostream>
#include "arr/groebner.hpp"

using namespace arr;

int main() {
    using P = Poly<QQ>;
    ModuleCtx r1{2, {0}, MonomialOrder::grevlex()};
    P x = P::variable(2, 0), y = P::variable(2, 1);

    auto g1 = modops::from_poly(r1, x + y);
    std::cout << "g1 terms " << g1.t.size() << "\n";
    for (auto& t : g1.t) std::cout << "  (" << t.comp << "," << t.m.str() << "," << t.c.str() << ")\n";

    Buchberger<QQ> eng(r1);
    eng.add_input(g1);
    std::cout << "added 1\n";
    eng.add_input(modops::from_poly(r1, x - y));
    std::cout << "added 2\n";
    eng.run();
    std::cout << "ran, basis " << eng.basis().size() << "\n";
    for (auto& b : eng.basis()) {
        for (auto& t : b.t) std::cout << "  (" << t.comp << "," << t.m.str() << "," << t.c.str() << ") ";
        std::cout << "\n";
    }
    return 0;
}
