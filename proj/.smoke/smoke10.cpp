#include <chrono>
#include <iostream>
#include "arr/logder.hpp"

using namespace arr;
using Clock = std::chrono::steady_clock;
static double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main() {
    auto rs = positive_roots(RootType::A, 3);
    Arrangement A = cone(deformation(rs, 0, 2));
    auto data = derivation_module<QQ>(A, DerStrategy::Incremental);
    std::cout << "d0 gens " << data->d0_gens.size() << "\n";
    auto g0 = min_generators(data->ctx, data->d0_gens);

    auto t0 = Clock::now();
    Buchberger<QQ> eng(data->ctx, GBOpts{true, false, UINT64_MAX});
    for (auto& g : g0) eng.add_input(g);
    eng.run();
    auto t1 = Clock::now();
    std::cout << "syzygy run: " << secs(t0, t1) << "s, basis " << eng.basis().size() << ", syz "
              << eng.syzygies().size() << ", steps " << eng.steps() << "\n";
    size_t maxbits = 0, terms = 0;
    int maxdeg = 0;
    for (auto& b : eng.basis()) {
        for (auto& t : b.t) maxbits = std::max(maxbits, mpz_sizeinbase(t.c.num().get_mpz_t(), 2));
        terms += b.t.size();
        maxdeg = std::max(maxdeg, modops::degree(eng.ctx(), b));
    }
    std::cout << "basis terms " << terms << " max coeff bits " << maxbits << " max deg " << maxdeg
              << "\n";
    return 0;
}
