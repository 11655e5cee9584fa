#include <chrono>
#include <iostream>
#include "arr/logder.hpp"

using namespace arr;
using Clock = std::chrono::steady_clock;

static double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) {
    int step = argc > 1 ? atoi(argv[1]) : 0;

    if (step == 0) {
        // Boolean xyz
        Arrangement boolean3(3, true,
                             {hyperplane_from_ints({1, 0, 0}), hyperplane_from_ints({0, 1, 0}),
                              hyperplane_from_ints({0, 0, 1})});
        for (auto strat : {DerStrategy::MultiplierKernel, DerStrategy::Incremental, DerStrategy::JacobianSyzygy}) {
            auto data = derivation_module<QQ>(boolean3, strat);
            std::cout << "boolean strat " << (int)strat << ": " << data->min_gens.size() << " gens, degs";
            for (auto& g : data->min_gens) std::cout << " " << modops::degree(data->ctx, g);
            std::cout << "; d0 gens " << data->d0_gens.size() << "\n";
        }
        auto rep = exponents_if_free(boolean3);
        std::cout << "free=" << rep.free << " exps";
        for (int e : rep.exponents) std::cout << " " << e;
        std::cout << "\n";
    } else if (step == 1) {
        // B2 Weyl cone: free with exponents (1,1,3)? cA_{B2}: chi=(t-1)^2(t-3)
        auto rs = positive_roots(RootType::B2, 2);
        Arrangement a = cone(deformation(rs, 0, 0));
        std::cout << "cA_B2 lines: " << a.size() << "\n";
        auto rep = exponents_if_free(a);
        std::cout << "free=" << rep.free << " exps";
        for (int e : rep.exponents) std::cout << " " << e;
        std::cout << " pd=" << rep.pd << "\n";
    } else if (step == 2) {
        // B2 deformation [0,2] coned: 13 lines; D0 gens {6:1, 7:2}, syz {8:1}
        auto rs = positive_roots(RootType::B2, 2);
        Arrangement a = cone(deformation(rs, 0, 2));
        std::cout << "c A^{[0,2]}_B2 lines: " << a.size() << "\n";
        auto t0 = Clock::now();
        auto res = d0_resolution<QQ>(a, DerStrategy::MultiplierKernel);
        auto t1 = Clock::now();
        std::cout << "multiplier-kernel: " << secs(t0, t1) << "s\n" << betti_table(*res).text();
    } else if (step == 3) {
        auto rs = positive_roots(RootType::B2, 2);
        Arrangement a = cone(deformation(rs, 0, 2));
        auto t0 = Clock::now();
        auto data = derivation_module<QQ>(a, DerStrategy::Incremental);
        auto t1 = Clock::now();
        std::cout << "incremental D gens: " << data->min_gens.size() << " in " << secs(t0, t1) << "s\n";
        auto res = minimal_resolution<QQ>(data->ctx, data->d0_gens, 4);
        std::cout << betti_table(res).text();
    } else if (step == 4) {
        // B2 j=3 k=0: 17 lines; expect gens {9:2,10:2}, syz {11:2}
        auto rs = positive_roots(RootType::B2, 2);
        Arrangement a = cone(deformation(rs, 0, 3));
        auto t0 = Clock::now();
        auto data = derivation_module<QQ>(a, DerStrategy::Incremental);
        auto t1 = Clock::now();
        std::cout << "j3 incremental D gens: " << data->min_gens.size() << " in " << secs(t0, t1)
                  << "s, d0 gens " << data->d0_gens.size() << "\n";
        auto t2 = Clock::now();
        auto res = minimal_resolution<QQ>(data->ctx, data->d0_gens, 4);
        auto t3 = Clock::now();
        std::cout << "resolution in " << secs(t2, t3) << "s\n" << betti_table(res).text();
        std::cout << "dims check: ";
        auto dims = hilbert_dims<QQ>(data->ctx, data->d0_gens, 0, 13);
        for (int d = 0; d <= 13; ++d)
            std::cout << dims[d] << "/" << hilbert_from_betti(betti_table(res), 3, d) << " ";
        std::cout << "\n";
        for (int d = 8; d <= 11; ++d) {
            long ora = derivation_space_dim(a, d);
            long viaD = dims[d] + (d >= 1 ? dim_poly_ring(3, d - 1) : 0);
            std::cout << "D dim deg " << d << ": oracle " << ora << " vs gens " << viaD << "\n";
        }
    } else if (step == 5) {
        // multi exponents: Ziegler of boolean, и {x,y,x-y} simple
        Arrangement boolean3(3, true,
                             {hyperplane_from_ints({1, 0, 0}), hyperplane_from_ints({0, 1, 0}),
                              hyperplane_from_ints({0, 0, 1})});
        auto z = ziegler_restriction(boolean3, hyperplane_from_ints({0, 0, 1}));
        auto me = multi_exponents(z);
        std::cout << "ziegler boolean exps: " << me.exponents[0] << "," << me.exponents[1] << "\n";
        Arrangement three(2, true,
                          {hyperplane_from_ints({1, 0}), hyperplane_from_ints({0, 1}),
                           hyperplane_from_ints({1, -1})});
        Multiarrangement m3{three, {1, 1, 1}};
        auto me3 = multi_exponents(m3);
        std::cout << "{x,y,x-y} m=1 exps: " << me3.exponents[0] << "," << me3.exponents[1] << "\n";
    }
    return 0;
}
