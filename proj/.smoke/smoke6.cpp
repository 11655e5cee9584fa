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
        // B2 k=1 j=5: 33 lines. Expect gens {t+m+4+i:2, i=0..m} t=4k+4m=12,m=2:
        // {18:2,19:2,20:2}, syz {20+?}: r=1: syz {t+m+5+i:2,i=1..2} = {20:2,21:2}? t=12,m=2: t+m+5+i: 19+i+... = {20:2, 21:2}? wait t+m+5+1=20, +2=21
        auto rs = positive_roots(RootType::B2, 2);
        Arrangement a = cone(deformation(rs, -1, 6));
        std::cout << "B2 k=1 j=5 lines: " << a.size() << "\n";
        auto t0 = Clock::now();
        auto data = derivation_module<QQ>(a, DerStrategy::Incremental);
        auto t1 = Clock::now();
        std::cout << "D gens " << data->min_gens.size() << " in " << secs(t0, t1) << "s\n";
        auto t2 = Clock::now();
        auto res = minimal_resolution<QQ>(data->ctx, data->d0_gens, 4);
        auto t3 = Clock::now();
        std::cout << "res in " << secs(t2, t3) << "s\n" << betti_table(res).text();
    } else if (step == 1) {
        // A3 extended Shi k=0: 25 planes in K^4; exp (1,8,8,8)
        auto rs = positive_roots(RootType::A, 3);
        Arrangement a = cone(deformation(rs, -1, 2));
        std::cout << "A3 ext shi k=0 planes: " << a.size() << " dim " << a.dim() << "\n";
        auto t0 = Clock::now();
        auto data = derivation_module<QQ>(a, DerStrategy::Incremental);
        auto t1 = Clock::now();
        std::cout << "D gens " << data->min_gens.size() << " in " << secs(t0, t1) << "s, degs";
        for (auto& g : data->min_gens) std::cout << " " << modops::degree(data->ctx, g);
        std::cout << "\n";
    } else if (step == 2) {
        // A3 deformation [0,2] coned: 19 planes; D0 betti {7:6},{8:3}
        auto rs = positive_roots(RootType::A, 3);
        Arrangement a = cone(deformation(rs, 0, 2));
        std::cout << "cA^{[0,2]}_A3 planes: " << a.size() << "\n";
        auto t0 = Clock::now();
        auto data = derivation_module<QQ>(a, DerStrategy::Incremental);
        auto t1 = Clock::now();
        std::cout << "D gens " << data->min_gens.size() << " in " << secs(t0, t1) << "s\n";
        auto t2 = Clock::now();
        auto res = minimal_resolution<QQ>(data->ctx, data->d0_gens, 5);
        auto t3 = Clock::now();
        std::cout << "res in " << secs(t2, t3) << "s\n" << betti_table(res).text();
    } else if (step == 3) {
        // multiplier-kernel on the 17-line B2 j=3 (cross-validation cost probe)
        auto rs = positive_roots(RootType::B2, 2);
        Arrangement a = cone(deformation(rs, 0, 3));
        auto t0 = Clock::now();
        auto data = derivation_module<QQ>(a, DerStrategy::MultiplierKernel);
        auto t1 = Clock::now();
        std::cout << "mk j3: D gens " << data->min_gens.size() << " in " << secs(t0, t1) << "s\n";
    } else if (step == 4) {
        // A3 ext shi k=1: 37 planes (the heaviest free check)
        auto rs = positive_roots(RootType::A, 3);
        Arrangement a = cone(deformation(rs, -2, 3));
        std::cout << "A3 ext shi k=1 planes: " << a.size() << "\n";
        auto t0 = Clock::now();
        auto data = derivation_module<QQ>(a, DerStrategy::Incremental);
        auto t1 = Clock::now();
        std::cout << "D gens " << data->min_gens.size() << " in " << secs(t0, t1) << "s, degs";
        for (auto& g : data->min_gens) std::cout << " " << modops::degree(data->ctx, g);
        std::cout << "\n";
    } else if (step == 5) {
        // A3 deformation [-1,3] coned: 31 planes; D0 betti {11:6},{12:3}
        auto rs = positive_roots(RootType::A, 3);
        Arrangement a = cone(deformation(rs, -1, 3));
        std::cout << "cA^{[-1,3]}_A3 planes: " << a.size() << "\n";
        auto t0 = Clock::now();
        auto data = derivation_module<QQ>(a, DerStrategy::Incremental);
        auto t1 = Clock::now();
        std::cout << "D gens " << data->min_gens.size() << " in " << secs(t0, t1) << "s\n";
        auto t2 = Clock::now();
        auto res = minimal_resolution<QQ>(data->ctx, data->d0_gens, 5);
        auto t3 = Clock::now();
        std::cout << "res in " << secs(t2, t3) << "s\n" << betti_table(res).text();
    }
    return 0;
}
