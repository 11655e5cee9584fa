// quick engine smoke test (not part of the build)
#include <cassert>
#include <iostream>
#include "arr/groebner.hpp"
#include "arr/hilbert.hpp"
#include "arr/resolution.hpp"

using namespace arr;

int main() {
    using P = Poly<QQ>;
    // ring S = Q[x,y]
    ModuleCtx r1{2, {0}, MonomialOrder::grevlex()};
    P x = P::variable(2, 0), y = P::variable(2, 1);

    // GB of (x+y, x-y) should contain x and y up to the module it generates
    auto g1 = modops::from_poly(r1, x + y);
    auto g2 = modops::from_poly(r1, x - y);
    auto gb = groebner_basis<QQ>(r1, {g1, g2});
    std::cout << "gb size " << gb.size() << "\n";
    assert(same_module<QQ>(r1, {g1, g2}, {modops::from_poly(r1, x), modops::from_poly(r1, y)}));

    // kernel of (x y): S[-1]^2 -> S
    auto [kctx, ker] = kernel_of_map<QQ>(r1, {modops::from_poly(r1, x), modops::from_poly(r1, y)}, {1, 1});
    std::cout << "kernel gens " << ker.size() << "\n";
    for (auto& k : ker) {
        std::cout << "  deg " << modops::degree(kctx, k) << ": ";
        for (auto& t : k.t) std::cout << "(" << t.comp << "," << t.m.str() << "," << t.c.str() << ") ";
        std::cout << "\n";
    }
    assert(ker.size() == 1);
    assert(modops::degree(kctx, ker[0]) == 2);

    // resolution of ideal (x, y) in 2 vars: 0 -> S(-2) -> S(-1)^2 -> I -> 0
    auto res = minimal_resolution<QQ>(r1, {modops::from_poly(r1, x), modops::from_poly(r1, y)});
    auto bt = betti_table(res);
    std::cout << "pd = " << res.pd() << "\n" << bt.text();
    assert(res.pd() == 1);
    assert(bt.at(0, 1) == 2 && bt.at(1, 2) == 1);
    assert(complex_property_holds(res));
    assert(hilbert_oracle_agrees<QQ>(r1, res.stages[0], bt, 0, 6));

    // Koszul: ideal (x,y,z) in 3 vars: betti 0:{1:3} 1:{2:3} 2:{3:1}
    ModuleCtx r3{3, {0}, MonomialOrder::grevlex()};
    P X = P::variable(3, 0), Y = P::variable(3, 1), Z = P::variable(3, 2);
    auto resk = minimal_resolution<QQ>(
        r3, {modops::from_poly(r3, X), modops::from_poly(r3, Y), modops::from_poly(r3, Z)});
    auto btk = betti_table(resk);
    std::cout << "koszul pd = " << resk.pd() << "\n" << btk.text();
    assert(resk.pd() == 2);
    assert(btk.at(0, 1) == 3 && btk.at(1, 2) == 3 && btk.at(2, 3) == 1);
    assert(complex_property_holds(resk));
    assert(hilbert_oracle_agrees<QQ>(r3, resk.stages[0], btk, 0, 7));

    // same over F_p
    ModuleCtx r3p = r3;
    using Pp = Poly<Zp>;
    auto vp = [&](int i) { return Pp::variable(3, i); };
    Zp one(1, Zp::kDefaultPrime);
    std::vector<MVec<Zp>> gens;
    for (int i = 0; i < 3; ++i) {
        Pp p(3);
        p = Pp::monomial(3, Mono::var(3, i), one);
        gens.push_back(modops::from_poly(r3p, p));
    }
    auto resp = minimal_resolution<Zp>(r3p, gens);
    auto btp = betti_table(resp);
    assert(btp.at(0, 1) == 3 && btp.at(1, 2) == 3 && btp.at(2, 3) == 1);

    std::cout << "smoke1 OK\n";
    return 0;
}
