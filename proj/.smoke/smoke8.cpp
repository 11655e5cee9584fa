#include <chrono>
#include <iostream>
#include "arr/logder.hpp"

using namespace arr;
using Clock = std::chrono::steady_clock;
static double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

// replica of derivation_gens_incremental with per-phase timing
int main() {
    auto rs = positive_roots(RootType::A, 3);
    Arrangement A = cone(deformation(rs, 0, 2));
    const uint64_t prime = Zp::kDefaultPrime;
    const int n = A.dim();
    ModuleCtx ctx{n, std::vector<int>(n, 0), MonomialOrder::grevlex()};
    std::vector<MVec<QQ>> gens;
    for (int i = 0; i < n; ++i) gens.push_back(unit_vector<QQ>(i, n));
    double t_beta = 0, t_ker = 0, t_min = 0;
    int step = 0;
    for (const auto& h : A.hyperplanes()) {
        auto t0 = Clock::now();
        Poly<QQ> alpha = h.form<QQ>();
        auto chart = arr::detail::chart_images<QQ>(h, prime);
        ModuleCtx bar{n - 1, {0}, MonomialOrder::grevlex()};
        std::vector<MVec<QQ>> cols;
        std::vector<int> shifts;
        for (const auto& g : gens) {
            Poly<QQ> beta(n);
            for (const auto& tm : g.t) {
                const QQ& ai = h.a[tm.comp];
                if (ai.is_zero()) continue;
                beta += Poly<QQ>::monomial(n, tm.m, tm.c * ai);
            }
            cols.push_back(modops::from_poly(bar, beta.substitute(chart)));
            shifts.push_back(modops::degree(ctx, g));
        }
        auto t1 = Clock::now();
        auto [sctx, syz] = kernel_of_map<QQ>(bar, cols, shifts);
        auto t2 = Clock::now();
        std::vector<MVec<QQ>> next;
        for (const auto& s : syz) {
            MVec<QQ> comb;
            for (const auto& tm : s.t) {
                std::vector<int> exps(n, 0);
                int k = 0;
                for (int v = 0; v < n; ++v) {
                    if (v == h.pivot()) continue;
                    exps[v] = tm.m.exp(k);
                    ++k;
                }
                comb = modops::axpy(ctx, comb, tm.c, Mono::from_exponents(exps), gens[tm.comp]);
            }
            if (!comb.is_zero()) next.push_back(std::move(comb));
        }
        for (const auto& g : gens) {
            MVec<QQ> ag;
            for (const auto& [m, c] : alpha.terms()) ag = modops::axpy(ctx, ag, c, m, g);
            next.push_back(std::move(ag));
        }
        auto t3 = Clock::now();
        gens = min_generators(ctx, next);
        auto t4 = Clock::now();
        t_beta += secs(t0, t1) + secs(t2, t3);
        t_ker += secs(t1, t2);
        t_min += secs(t3, t4);
        size_t terms = 0;
        for (auto& g : gens) terms += g.t.size();
        std::cout << "step " << ++step << " gens " << gens.size() << " cand " << next.size()
                  << " terms " << terms << " times: build " << secs(t0, t1) + secs(t2, t3)
                  << " ker " << secs(t1, t2) << " min " << secs(t3, t4) << "\n";
    }
    std::cout << "totals: build " << t_beta << " ker " << t_ker << " min " << t_min << "\n";
    return 0;
}
