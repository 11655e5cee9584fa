#include <cassert>
#include <iostream>
#include "arr/groebner.hpp"
#include "arr/hilbert.hpp"
#include "arr/resolution.hpp"

using namespace arr;

int main(int argc, char** argv) {
    int step = argc > 1 ? atoi(argv[1]) : 0;
    if (step == 0) {
        using P = Poly<QQ>;
        ModuleCtx r3{3, {0}, MonomialOrder::grevlex()};
        P X = P::variable(3, 0), Y = P::variable(3, 1), Z = P::variable(3, 2);
        auto resk = minimal_resolution<QQ>(
            r3, {modops::from_poly(r3, X), modops::from_poly(r3, Y), modops::from_poly(r3, Z)});
        auto btk = betti_table(resk);
        std::cout << "koszul pd = " << resk.pd() << std::endl << btk.text() << std::endl;
        std::cout << "complex ok " << complex_property_holds(resk) << std::endl;
        std::cout << "hilbert ok " << hilbert_oracle_agrees<QQ>(r3, resk.stages[0], btk, 0, 7) << std::endl;
    } else {
        ModuleCtx r3{3, {0}, MonomialOrder::grevlex()};
        using Pp = Poly<Zp>;
        Zp one(1, Zp::kDefaultPrime);
        std::vector<MVec<Zp>> gens;
        for (int i = 0; i < 3; ++i) {
            Pp p = Pp::monomial(3, Mono::var(3, i), one);
            gens.push_back(modops::from_poly(r3, p));
        }
        std::cout << "built gens" << std::endl;
        auto resp = minimal_resolution<Zp>(r3, gens);
        auto btp = betti_table(resp);
        std::cout << "zp koszul pd = " << resp.pd() << std::endl << btp.text() << std::endl;
    }
    return 0;
}
