#include <cassert>
#include <iostream>
#include "arr/groebner.hpp"

using namespace arr;

int main() {
    using P = Poly<QQ>;
    ModuleCtx r1{2, {0}, MonomialOrder::grevlex()};
    P x = P::variable(2, 0), y = P::variable(2, 1);

    std::cout << "kernel of (x y)...\n";
    auto [kctx, ker] =
        kernel_of_map<QQ>(r1, {modops::from_poly(r1, x), modops::from_poly(r1, y)}, {1, 1});
    std::cout << "kernel gens " << ker.size() << "\n";
    for (auto& k : ker) {
        for (auto& t : k.t) std::cout << "  (" << t.comp << "," << t.m.str() << "," << t.c.str() << ")";
        std::cout << "\n";
    }
    std::cout << "min gens of {x, x^2}...\n";
    auto mg = min_generators<QQ>(r1, {modops::from_poly(r1, x), modops::from_poly(r1, x * x)});
    std::cout << "count " << mg.size() << "\n";
    return 0;
}
