#ifndef ARR_GROEBNER_HPP
#define ARR_GROEBNER_HPP

#include <cstdint>
#include <queue>
#include <unordered_set>
#include <vector>

#include "module.hpp"

namespace arr {

struct GBOpts {
    bool track_syzygies = false;
    /// Buchberger pair criteria.  While tracking syzygies only the
    /// syzygy-safe pruning rule is applied; otherwise chain + product.
    bool use_criteria = true;
    uint64_t max_steps = UINT64_MAX;
    /// Ignore S-pairs above this degree.  A degree-truncated basis of a
    /// homogeneous module still decides membership up to the bound.  Not
    /// honored in syzygy mode (completeness needs every pair).
    int max_degree = INT32_MAX;
};

/// Buchberger engine for graded submodules of free modules, with optional
/// coordinate tracking.  When tracking, every S-pair that reduces to zero
/// contributes one generator of the syzygy module of the *input* elements.
template <class K>
class Buchberger {
  public:
    Buchberger(ModuleCtx ctx, GBOpts opts = {}) : ctx_(std::move(ctx)), opts_(opts) {
        if (opts_.track_syzygies) opts_.use_criteria = false;
        by_comp_.resize(ctx_.rank());
    }

    /// Register an input generator (nonzero, homogeneous).
    void add_input(const MVec<K>& g) {
        if (g.is_zero()) throw error("Buchberger: zero input generator");
        if (!modops::is_homogeneous(ctx_, g)) throw error("Buchberger: inhomogeneous input");
        int idx = (int)items_.size();
        Item it;
        it.v = g;
        modops::scal_normalize(it.v);
        if (opts_.track_syzygies) {
            sctx_.nvars = ctx_.nvars;
            sctx_.ord = ctx_.ord;
            sctx_.shifts.push_back(modops::degree(ctx_, g));
            // track the *normalized* element: v = f * g_input
            K f = it.v.lead().c / g.lead().c;
            it.cv.t.push_back(MTerm<K>{idx, Mono::one(ctx_.nvars), f});
        }
        push_item(std::move(it));
        ninputs_ = (int)items_.size();
    }

    /// Process all pending S-pairs (up to the degree bound in basis mode).
    void run() {
        while (!pairs_.empty()) {
            if (!opts_.track_syzygies && pairs_.top().deg > opts_.max_degree) break;
            Pair p = pairs_.top();
            pairs_.pop();
            mark_done(p.i, p.j);
            if (opts_.track_syzygies) {
                if (syzygy_safe_chain(p)) continue;
            } else if (opts_.use_criteria) {
                if (chain_criterion(p)) continue;
                if (ctx_.rank() == 1 && product_criterion(p)) continue;
            }
            step();
            Work w = make_spair(p);
            reduce_full(w);
            if (w.v.is_zero()) {
                if (opts_.track_syzygies && !w.cv.is_zero()) {
                    modops::scal_normalize(w.cv);
                    syz_.push_back(std::move(w.cv));
                }
                continue;
            }
            normalize_work(w);
            Item it;
            it.v = std::move(w.v);
            it.cv = std::move(w.cv);
            push_item(std::move(it));
        }
    }

    /// Add one more generator to an already-run basis and re-run (incremental
    /// Buchberger; used by minimal-generator selection).
    void add_and_run(const MVec<K>& g) {
        add_input(g);
        run();
    }

    const ModuleCtx& ctx() const { return ctx_; }
    int input_count() const { return ninputs_; }

    std::vector<MVec<K>> basis() const {
        std::vector<MVec<K>> out;
        out.reserve(items_.size());
        for (const auto& it : items_) out.push_back(it.v);
        return out;
    }

    /// Full normal form against the current basis (no tracking).
    MVec<K> normal_form(const MVec<K>& f) const {
        MVec<K> r = f;
        size_t pos = 0;
        uint64_t guard = 0;
        while (pos < r.t.size()) {
            int red = find_reducer(r.t[pos].comp, r.t[pos].m);
            if (red < 0) {
                ++pos;
                continue;
            }
            reduce_term(r, nullptr, pos, red);
            modops::scal_normalize(r);
            if (++guard > opts_.max_steps) throw resource_cap("normal_form: step budget exceeded");
        }
        modops::scal_normalize(r);
        return r;
    }

    /// Membership test by top reduction: true iff f reduces to zero.
    bool reduces_to_zero(const MVec<K>& f) const {
        MVec<K> r = f;
        while (!r.is_zero()) {
            int red = find_reducer(r.t[0].comp, r.t[0].m);
            if (red < 0) return false;
            reduce_term(r, nullptr, 0, red);
            modops::scal_normalize(r);
        }
        return true;
    }

    /// Syzygies of the input generators collected so far, as elements of
    /// S^{#inputs} with shifts equal to the input degrees.
    const std::vector<MVec<K>>& syzygies() const { return syz_; }
    const ModuleCtx& syzygy_ctx() const { return sctx_; }

    uint64_t steps() const { return steps_; }

  private:
    struct Item {
        MVec<K> v;
        MVec<K> cv; // expression of v in the inputs (tracking mode)
    };
    struct Work {
        MVec<K> v;
        MVec<K> cv;
    };
    struct Pair {
        int deg;
        int comp;
        int i, j;
        bool operator>(const Pair& o) const {
            if (deg != o.deg) return deg > o.deg;
            if (comp != o.comp) return comp > o.comp;
            if (j != o.j) return j > o.j;
            return i > o.i;
        }
    };

    void step() {
        if (++steps_ > opts_.max_steps) throw resource_cap("Buchberger: step budget exceeded");
    }

    void push_item(Item it) {
        int idx = (int)items_.size();
        int comp = it.v.lead().comp;
        for (int other : by_comp_[comp]) {
            Mono l = items_[other].v.lead().m.lcm(it.v.lead().m);
            pairs_.push(Pair{ctx_.sdeg(comp, l), comp, other, idx});
        }
        by_comp_[comp].push_back(idx);
        items_.push_back(std::move(it));
    }

    Work make_spair(const Pair& p) {
        const Item& a = items_[p.i];
        const Item& b = items_[p.j];
        const auto& la = a.v.lead();
        const auto& lb = b.v.lead();
        Mono l = la.m.lcm(lb.m);
        Mono da = l.div(la.m), db = l.div(lb.m);
        // lc_b * x^da * a - lc_a * x^db * b
        Work w;
        w.v = modops::axpy(ctx_, modops::scaled(modops::mono_mul(a.v, da), lb.c), -la.c, db, b.v);
        if (opts_.track_syzygies)
            w.cv = modops::axpy(sctx_, modops::scaled(modops::mono_mul(a.cv, da), lb.c), -la.c, db, b.cv);
        return w;
    }

    int find_reducer(int comp, const Mono& m) const {
        for (int idx : by_comp_[comp])
            if (items_[idx].v.lead().m.divides(m)) return idx;
        return -1;
    }

    /// One reduction step of the term at position pos by basis item red.
    /// Cross-multiplies, so integral coefficients stay integral.
    void reduce_term(MVec<K>& v, MVec<K>* cv, size_t pos, int red) const {
        const Item& b = items_[red];
        const auto& lb = b.v.lead();
        const K tc = v.t[pos].c;
        Mono delta = v.t[pos].m.div(lb.m);
        v = modops::combine(ctx_, std::move(v), lb.c, -tc, delta, b.v);
        if (cv) *cv = modops::combine(sctx_, std::move(*cv), lb.c, -tc, delta, b.cv);
    }

    void reduce_full(Work& w) {
        size_t pos = 0;
        while (pos < w.v.t.size()) {
            int red = find_reducer(w.v.t[pos].comp, w.v.t[pos].m);
            if (red < 0) {
                ++pos;
                continue;
            }
            step();
            reduce_term(w.v, opts_.track_syzygies ? &w.cv : nullptr, pos, red);
            normalize_work(w);
        }
    }

    /// Rescale (v, cv) jointly so v is scalar-normalized; returns the factor.
    K normalize_work(Work& w) {
        if (w.v.is_zero()) return K(1);
        K before = w.v.lead().c;
        modops::scal_normalize(w.v);
        K f = w.v.lead().c / before;
        if (opts_.track_syzygies && !f.is_one()) w.cv = modops::scaled(w.cv, f);
        return f;
    }

    uint64_t pair_key(int i, int j) const { return ((uint64_t)i << 32) | (uint32_t)j; }
    void mark_done(int i, int j) { done_.insert(pair_key(i, j)); }
    bool is_done(int i, int j) const { return done_.count(pair_key(std::min(i, j), std::max(i, j))) > 0; }

    bool chain_criterion(const Pair& p) const {
        const Mono l = items_[p.i].v.lead().m.lcm(items_[p.j].v.lead().m);
        for (int k : by_comp_[p.comp]) {
            if (k == p.i || k == p.j) continue;
            if (!items_[k].v.lead().m.divides(l)) continue;
            if (is_done(std::min(p.i, k), std::max(p.i, k)) && is_done(std::min(p.j, k), std::max(p.j, k)))
                return true;
        }
        return false;
    }

    /// Pair pruning that keeps the collected zero-reduction syzygies a
    /// generating set.  The syzygy of (i,j) has its top coordinate on e_i
    /// (i < j, the position order breaks the tie); a witness pair (i,k) with
    /// k > i, lm_k | lcm_ij covers that top whenever its lcm strictly
    /// divides lcm_ij (well-founded descent) or equals it with k < j (keep
    /// one pair per (i, lcm) class).
    bool syzygy_safe_chain(const Pair& p) const {
        const Mono& li = items_[p.i].v.lead().m;
        const Mono& lj = items_[p.j].v.lead().m;
        const Mono l = li.lcm(lj);
        for (int k : by_comp_[p.comp]) {
            if (k <= p.i || k == p.j) continue;
            const Mono& lk = items_[k].v.lead().m;
            if (!lk.divides(l)) continue;
            if (!(li.lcm(lk) == l) || k < p.j) return true;
        }
        return false;
    }

    bool product_criterion(const Pair& p) const {
        const Mono& a = items_[p.i].v.lead().m;
        const Mono& b = items_[p.j].v.lead().m;
        return a.lcm(b).deg == a.deg + b.deg;
    }

    ModuleCtx ctx_;
    ModuleCtx sctx_;
    GBOpts opts_;
    std::vector<Item> items_;
    std::vector<std::vector<int>> by_comp_;
    std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs_;
    std::unordered_set<uint64_t> done_;
    std::vector<MVec<K>> syz_;
    int ninputs_ = 0;
    uint64_t steps_ = 0;
};

/// Gröbner basis of the submodule generated by gens.
template <class K>
std::vector<MVec<K>> groebner_basis(const ModuleCtx& ctx, const std::vector<MVec<K>>& gens,
                                    uint64_t max_steps = UINT64_MAX) {
    Buchberger<K> eng(ctx, GBOpts{false, true, max_steps});
    for (const auto& g : gens)
        if (!g.is_zero()) eng.add_input(g);
    eng.run();
    return eng.basis();
}

/// Indices of a minimal generating subset, greedy by degree (graded
/// Nakayama: an element is redundant iff it lies in the submodule generated
/// by the ones already kept).
template <class K>
std::vector<int> min_generator_indices(const ModuleCtx& ctx, const std::vector<MVec<K>>& gens,
                                       uint64_t max_steps = UINT64_MAX) {
    std::vector<int> order;
    int maxdeg = 0;
    for (int i = 0; i < (int)gens.size(); ++i)
        if (!gens[i].is_zero()) {
            order.push_back(i);
            maxdeg = std::max(maxdeg, modops::degree(ctx, gens[i]));
        }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = modops::degree(ctx, gens[a]);
        int db = modops::degree(ctx, gens[b]);
        if (da != db) return da < db;
        return a < b;
    });
    Buchberger<K> eng(ctx, GBOpts{false, true, max_steps, maxdeg});
    std::vector<int> kept;
    for (int idx : order) {
        if (kept.empty() || !eng.reduces_to_zero(gens[idx])) {
            kept.push_back(idx);
            eng.add_and_run(gens[idx]);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

template <class K>
std::vector<MVec<K>> min_generators(const ModuleCtx& ctx, const std::vector<MVec<K>>& gens,
                                    uint64_t max_steps = UINT64_MAX) {
    std::vector<MVec<K>> out;
    for (int i : min_generator_indices(ctx, gens, max_steps)) out.push_back(gens[i]);
    return out;
}

/// Generators of the syzygy module of gens, living in S^{#gens} with shifts
/// equal to the generator degrees.
template <class K>
std::pair<ModuleCtx, std::vector<MVec<K>>> syzygy_module(const ModuleCtx& ctx,
                                                         const std::vector<MVec<K>>& gens,
                                                         uint64_t max_steps = UINT64_MAX) {
    Buchberger<K> eng(ctx, GBOpts{true, false, max_steps});
    for (const auto& g : gens) eng.add_input(g);
    eng.run();
    ModuleCtx sctx = eng.syzygy_ctx();
    if (gens.empty()) {
        sctx.nvars = ctx.nvars;
        sctx.ord = ctx.ord;
    }
    return {sctx, eng.syzygies()};
}

/// Kernel of the module map defined by columns: F_src -> F_dst, e_c -> cols[c].
/// Zero columns contribute basis vectors of the kernel directly.
template <class K>
std::pair<ModuleCtx, std::vector<MVec<K>>> kernel_of_map(const ModuleCtx& dst,
                                                         const std::vector<MVec<K>>& cols,
                                                         const std::vector<int>& src_shifts,
                                                         uint64_t max_steps = UINT64_MAX) {
    ModuleCtx src{dst.nvars, src_shifts, dst.ord};
    std::vector<int> nonzero;
    std::vector<MVec<K>> live;
    for (int c = 0; c < (int)cols.size(); ++c) {
        if (cols[c].is_zero()) continue;
        int d = modops::degree(dst, cols[c]);
        if (d != src_shifts[c]) throw error("kernel_of_map: column degree disagrees with source shift");
        nonzero.push_back(c);
        live.push_back(cols[c]);
    }
    auto [sctx, syz] = syzygy_module(dst, live, max_steps);
    std::vector<MVec<K>> out;
    for (const auto& s : syz) {
        std::vector<MTerm<K>> ts;
        ts.reserve(s.t.size());
        for (const auto& tm : s.t) ts.push_back(MTerm<K>{nonzero[tm.comp], tm.m, tm.c});
        out.push_back(modops::normalized(src, std::move(ts)));
    }
    for (int c = 0; c < (int)cols.size(); ++c) {
        if (!cols[c].is_zero()) continue;
        MVec<K> e;
        e.t.push_back(MTerm<K>{c, Mono::one(dst.nvars), K(1)});
        out.push_back(std::move(e));
    }
    return {src, out};
}

/// Same submodule test via mutual membership (degree-truncated bases).
template <class K>
bool same_module(const ModuleCtx& ctx, const std::vector<MVec<K>>& a, const std::vector<MVec<K>>& b) {
    auto maxdeg = [&](const std::vector<MVec<K>>& v) {
        int d = 0;
        for (const auto& g : v)
            if (!g.is_zero()) d = std::max(d, modops::degree(ctx, g));
        return d;
    };
    {
        GBOpts opts;
        opts.max_degree = maxdeg(b);
        Buchberger<K> ea(ctx, opts);
        for (const auto& g : a)
            if (!g.is_zero()) ea.add_input(g);
        ea.run();
        for (const auto& g : b)
            if (!g.is_zero() && !ea.reduces_to_zero(g)) return false;
    }
    {
        GBOpts opts;
        opts.max_degree = maxdeg(a);
        Buchberger<K> eb(ctx, opts);
        for (const auto& g : b)
            if (!g.is_zero()) eb.add_input(g);
        eb.run();
        for (const auto& g : a)
            if (!g.is_zero() && !eb.reduces_to_zero(g)) return false;
    }
    return true;
}

} // namespace arr

#endif
