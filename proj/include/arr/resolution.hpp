#ifndef ARR_RESOLUTION_HPP
#define ARR_RESOLUTION_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace arr {

/// Graded Betti numbers: (homological stage, internal degree) -> count.
struct BettiTable {
    std::map<std::pair<int, int>, long> b;

    long at(int i, int d) const {
        auto it = b.find({i, d});
        return it == b.end() ? 0 : it->second;
    }
    void add(int i, int d, long c = 1) {
        if (c == 0) return;
        b[{i, d}] += c;
        if (b[{i, d}] == 0) b.erase({i, d});
    }
    long total(int i) const {
        long s = 0;
        for (const auto& [k, v] : b)
            if (k.first == i) s += v;
        return s;
    }
    int max_stage() const {
        int m = -1;
        for (const auto& [k, v] : b) m = std::max(m, k.first);
        return m;
    }
    int max_degree() const {
        int m = -1;
        for (const auto& [k, v] : b) m = std::max(m, k.second);
        return m;
    }
    /// Degrees present at a stage, as a sorted multiset expansion.
    std::vector<int> degrees(int i) const {
        std::vector<int> out;
        for (const auto& [k, v] : b)
            if (k.first == i)
                for (long t = 0; t < v; ++t) out.push_back(k.second);
        return out;
    }
    BettiTable shifted(int s) const {
        BettiTable out;
        for (const auto& [k, v] : b) out.b[{k.first, k.second + s}] = v;
        return out;
    }
    friend bool operator==(const BettiTable& x, const BettiTable& y) { return x.b == y.b; }
    friend bool operator!=(const BettiTable& x, const BettiTable& y) { return !(x.b == y.b); }

    std::string text() const {
        std::ostringstream os;
        os << "degree | generators | syzygies\n";
        std::map<int, std::pair<long, long>> rows;
        for (const auto& [k, v] : b) {
            if (k.first == 0) rows[k.second].first += v;
            if (k.first == 1) rows[k.second].second += v;
        }
        for (const auto& [d, gs] : rows) {
            os << d << " | " << gs.first << " | " << gs.second << "\n";
        }
        int ms = max_stage();
        for (int i = 2; i <= ms; ++i) {
            os << "stage " << i << ":";
            for (const auto& [k, v] : b)
                if (k.first == i) os << " " << k.second << "^" << v;
            os << "\n";
        }
        return os.str();
    }
};

/// Minimal graded free resolution of the submodule generated by the input
/// elements.  stages[0] holds minimal generators inside the ambient module,
/// stages[i] (i>=1) holds minimal generators of the i-th syzygy module,
/// expressed in the free module on the previous stage's generators.
template <class K>
struct Resolution {
    ModuleCtx ambient;
    std::vector<ModuleCtx> stage_ctx; // stage_ctx[i] = container of stages[i]
    std::vector<std::vector<MVec<K>>> stages;
    bool truncated = false;

    int pd() const { return (int)stages.size() - 1; }

    std::vector<int> stage_degrees(int i) const {
        std::vector<int> d;
        for (const auto& g : stages[i]) d.push_back(modops::degree(stage_ctx[i], g));
        return d;
    }

    BettiTable betti() const {
        BettiTable t;
        for (int i = 0; i < (int)stages.size(); ++i)
            for (int d : stage_degrees(i)) t.add(i, d);
        return t;
    }
};

/// Hilbert's syzygy theorem bounds the length; max_length below the true
/// projective dimension yields a truncated result, flagged.
template <class K>
Resolution<K> minimal_resolution(const ModuleCtx& ctx, const std::vector<MVec<K>>& gens,
                                 int max_length = kMaxVars + 1, uint64_t max_steps = UINT64_MAX) {
    Resolution<K> res;
    res.ambient = ctx;
    std::vector<MVec<K>> cur = min_generators(ctx, gens, max_steps);
    ModuleCtx cur_ctx = ctx;
    res.stage_ctx.push_back(cur_ctx);
    res.stages.push_back(cur);
    int stage = 0;
    while (!res.stages.back().empty()) {
        auto [sctx, syz] = syzygy_module(cur_ctx, res.stages.back(), max_steps);
        std::vector<MVec<K>> msyz = min_generators(sctx, syz, max_steps);
        if (msyz.empty()) break;
        ++stage;
        if (stage > max_length) {
            res.truncated = true;
            break;
        }
        res.stage_ctx.push_back(sctx);
        res.stages.push_back(std::move(msyz));
        cur_ctx = res.stage_ctx.back();
    }
    return res;
}

/// Betti numbers read off a minimal resolution.  Rejects non-minimal input
/// (a unit entry in any differential).
template <class K>
BettiTable betti_table(const Resolution<K>& res) {
    for (int i = 1; i < (int)res.stages.size(); ++i)
        for (const auto& g : res.stages[i])
            for (const auto& tm : g.t)
                if (tm.m.deg == 0) throw error("betti_table: resolution is not minimal");
    return res.betti();
}

/// Apply the stage-i differential to an element of stage i's container,
/// producing an element of stage (i-1)'s container.
template <class K>
MVec<K> apply_map(const Resolution<K>& res, int i, const MVec<K>& v) {
    const ModuleCtx& dst = res.stage_ctx[i - 1];
    MVec<K> out;
    for (const auto& tm : v.t) {
        out = modops::axpy(dst, out, tm.c, tm.m, res.stages[i - 1][tm.comp]);
    }
    return out;
}

/// d_i . d_{i+1} = 0 for all consecutive stages.
template <class K>
bool complex_property_holds(const Resolution<K>& res) {
    for (int i = 2; i < (int)res.stages.size(); ++i) {
        for (const auto& g : res.stages[i]) {
            MVec<K> one = apply_map(res, i, g);
            MVec<K> zero = apply_map(res, i - 1, one);
            if (!zero.is_zero()) return false;
        }
    }
    // stage-1 elements are syzygies of stage-0 generators by construction;
    // re-check anyway.
    if (res.stages.size() >= 2) {
        for (const auto& g : res.stages[1]) {
            MVec<K> img = apply_map(res, 1, g);
            if (!img.is_zero()) return false;
        }
    }
    return true;
}

} // namespace arr

#endif
