#include <chrono>
#include <iostream>
#include "arr/logder.hpp"

using namespace arr;
using Clock = std::chrono::steady_clock;

static double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

static void stats(const ModuleCtx& ctx, const std::vector<MVec<QQ>>& gens, const char* name) {
    size_t terms = 0, maxbits = 0;
    for (const auto& g : gens) {
        terms += g.t.size();
        for (const auto& t : g.t) {
            size_t b = mpz_sizeinbase(t.c.num().get_mpz_t(), 2);
            maxbits = std::max(maxbits, b);
        }
    }
    std::cout << name << ": " << gens.size() << " gens, " << terms << " terms, max coeff bits "
              << maxbits << "\n";
}

int main() {
    auto rs = positive_roots(RootType::B2, 2);
    Arrangement a = cone(deformation(rs, -1, 6));
    auto t0 = Clock::now();
    auto data = derivation_module<QQ>(a, DerStrategy::Incremental);
    auto t1 = Clock::now();
    std::cout << "D gens in " << secs(t0, t1) << "s\n";
    stats(data->ctx, data->d0_gens, "d0 gens");

    auto t2 = Clock::now();
    auto g0 = min_generators(data->ctx, data->d0_gens);
    auto t3 = Clock::now();
    std::cout << "min_generators: " << secs(t2, t3) << "s\n";

    auto t4 = Clock::now();
    Buchberger<QQ> eng(data->ctx, GBOpts{true, false, UINT64_MAX});
    for (auto& g : g0) eng.add_input(g);
    eng.run();
    auto t5 = Clock::now();
    std::cout << "syzygy buchberger: " << secs(t4, t5) << "s, basis " << eng.basis().size()
              << ", syz " << eng.syzygies().size() << ", steps " << eng.steps() << "\n";
    stats(eng.ctx(), eng.basis(), "final basis");
    stats(eng.syzygy_ctx(), eng.syzygies(), "raw syzygies");

    auto t6 = Clock::now();
    auto msyz = min_generators(eng.syzygy_ctx(), eng.syzygies());
    auto t7 = Clock::now();
    std::cout << "minimalize syzygies: " << secs(t6, t7) << "s -> " << msyz.size() << "\n";

    auto t8 = Clock::now();
    auto [sctx2, syz2] = syzygy_module<QQ>(eng.syzygy_ctx(), msyz);
    auto t9 = Clock::now();
    std::cout << "stage2 syzygies: " << secs(t8, t9) << "s -> " << syz2.size() << "\n";
    return 0;
}
