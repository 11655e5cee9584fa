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
    const int n = A.dim();
    ModuleCtx ctx{n, std::vector<int>(n, 0), MonomialOrder::grevlex()};

    auto t0 = Clock::now();
    auto gens = arr::detail::derivation_gens_incremental<QQ>(A, Zp::kDefaultPrime, UINT64_MAX);
    auto t1 = Clock::now();
    std::cout << "gens: " << gens.size() << " in " << secs(t0, t1) << "s\n";
    size_t maxbits = 0, terms = 0;
    for (auto& g : gens)
        for (auto& t : g.t) {
            maxbits = std::max(maxbits, mpz_sizeinbase(t.c.num().get_mpz_t(), 2));
            ++terms;
        }
    std::cout << "terms " << terms << " max coeff bits " << maxbits << "\n";

    // euler split timing
    auto t2 = Clock::now();
    std::vector<MVec<QQ>> d0;
    QQ inv_count = QQ(1) / QQ((long)A.size());
    double t_apply = 0, t_div = 0, t_corr = 0;
    for (const auto& g : gens) {
        Derivation<QQ> th = derivation_from_mvec(n, g);
        Poly<QQ> p(n);
        for (const auto& h : A.hyperplanes()) {
            auto ta = Clock::now();
            Poly<QQ> alpha = h.form<QQ>();
            Poly<QQ> val = apply_derivation(th, alpha);
            auto tb = Clock::now();
            t_apply += secs(ta, tb);
            if (val.is_zero()) continue;
            auto quot = val.exact_divide(alpha);
            auto tc = Clock::now();
            t_div += secs(tb, tc);
            p += *quot;
        }
        auto td = Clock::now();
        MVec<QQ> proj = g;
        if (!p.is_zero()) {
            for (int i = 0; i < n; ++i) {
                Poly<QQ> corr = p.scaled(inv_count) * Poly<QQ>::variable(n, i);
                for (const auto& [m, c] : corr.terms())
                    proj = modops::axpy(ctx, proj, -c, m, unit_vector<QQ>(i, n));
            }
        }
        auto te = Clock::now();
        t_corr += secs(td, te);
        if (!proj.is_zero()) d0.push_back(std::move(proj));
    }
    auto t3 = Clock::now();
    std::cout << "euler split total " << secs(t2, t3) << " (apply " << t_apply << " div " << t_div
              << " corr " << t_corr << ")\n";
    auto t4 = Clock::now();
    auto mg = min_generators(ctx, d0);
    auto t5 = Clock::now();
    std::cout << "d0 min_generators " << secs(t4, t5) << " -> " << mg.size() << "\n";
    return 0;
}
