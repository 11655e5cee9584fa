#include <cassert>
#include <iostream>
#include "arr/groebner.hpp"
#include "arr/hilbert.hpp"
#include "arr/resolution.hpp"

using namespace arr;

int main(int argc, char** argv) {
    using P = Poly<QQ>;
    ModuleCtx r1{2, {0}, MonomialOrder::grevlex()};
    P x = P::variable(2, 0), y = P::variable(2, 1);
    auto g1 = modops::from_poly(r1, x + y);
    auto g2 = modops::from_poly(r1, x - y);
    int step = argc > 1 ? atoi(argv[1]) : 0;

    if (step == 0) {
        std::cout << "same_module...\n";
        bool s = same_module<QQ>(r1, {g1, g2}, {modops::from_poly(r1, x), modops::from_poly(r1, y)});
        std::cout << "same = " << s << "\n";
    } else if (step == 1) {
        std::cout << "resolution of (x,y)...\n";
        auto res = minimal_resolution<QQ>(r1, {modops::from_poly(r1, x), modops::from_poly(r1, y)});
        std::cout << "pd " << res.pd() << "\n" << betti_table(res).text();
    } else if (step == 2) {
        std::cout << "hilbert...\n";
        auto dims = hilbert_dims<QQ>(r1, {modops::from_poly(r1, x), modops::from_poly(r1, y)}, 0, 5);
        for (long d : dims) std::cout << d << " ";
        std::cout << "\n";
    }
    return 0;
}
