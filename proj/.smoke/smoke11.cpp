#include <chrono>
#include <iostream>
#include "arr/logder.hpp"

using namespace arr;
using Clock = std::chrono::steady_clock;
static double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) {
    int which = argc > 1 ? atoi(argv[1]) : 0;
    Arrangement A = which == 0 ? cone(deformation(positive_roots(RootType::A, 3), 0, 2))
                               : cone(deformation(positive_roots(RootType::B2, 2), -1, 6));
    auto data = derivation_module<QQ>(A, DerStrategy::Incremental);
    auto g0 = min_generators(data->ctx, data->d0_gens);
    std::cout << "gens " << g0.size() << "\n";

    auto t0 = Clock::now();
    Buchberger<QQ> eng(data->ctx, GBOpts{false, true, UINT64_MAX});
    for (auto& g : g0) eng.add_input(g);
    eng.run();
    auto t1 = Clock::now();
    std::cout << "untracked GB: " << secs(t0, t1) << "s, basis " << eng.basis().size() << ", steps "
              << eng.steps() << "\n";
    size_t maxbits = 0, terms = 0;
    for (auto& b : eng.basis())
        for (auto& t : b.t) {
            maxbits = std::max(maxbits, mpz_sizeinbase(t.c.num().get_mpz_t(), 2));
            ++terms;
        }
    std::cout << "terms " << terms << " max bits " << maxbits << "\n";
    return 0;
}
