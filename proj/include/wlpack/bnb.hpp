#pragma once

// Exact integral set packing and hitting set by branch and bound. Both
// searches branch on the lowest-index live ground element / unhit set,
// explore children in increasing set / element order, and keep the first
// optimum found, so results and witnesses are deterministic. The exact
// LP relaxation bounds the root; interior nodes use cheap combinatorial
// bounds, which keeps the node cost tiny.

#include <wlpack/set_system.hpp>

#include <cstdint>

namespace wlpack {

struct BnbOptions {
    long long node_budget = 200'000'000;
    bool lp_root_bound = true;
    SolverOptions lp;
};

struct BnbResult {
    long long value = 0;
    std::vector<int> witness;  // chosen set indices (packing) or ground elements (hitting)
    long long nodes = 0;
};

namespace detail {

struct PackState {
    const SetSystem* sys;
    std::vector<std::vector<int>> sets_with;  // ground element -> set indices
    std::vector<char> set_alive;
    std::vector<char> elem_live;  // not yet used by a chosen set
    std::vector<int> chosen;
    std::vector<int> best_witness;
    long long best = -1;
    long long nodes = 0, budget = 0;
    long long root_bound = -1;  // LP-derived cap on the optimum, -1 if absent
    int min_set_size = 1;

    long long cheap_bound() const {
        // any further chosen set uses >= min_set_size live coverable elements
        long long coverable = 0;
        for (int e = 0; e < sys->ground_size; e++) {
            if (!elem_live[e]) continue;
            for (int s : sets_with[e])
                if (set_alive[s]) {
                    coverable++;
                    break;
                }
        }
        return (long long)chosen.size() + coverable / min_set_size;
    }

    void run(int from_elem) {
        if (++nodes > budget) throw resource_limit_error(
            "integral_packing: node budget exceeded; best known value " + std::to_string(best));
        if ((long long)chosen.size() > best) {
            best = (long long)chosen.size();
            best_witness = chosen;
            std::sort(best_witness.begin(), best_witness.end());
        }
        if (root_bound >= 0 && best >= root_bound) return;  // proven optimal
        if (cheap_bound() <= best) return;

        // first live element still covered by some alive set
        int e = -1;
        std::vector<int> avail;
        for (int cand = from_elem; cand < sys->ground_size; cand++) {
            if (!elem_live[cand]) continue;
            for (int s : sets_with[cand])
                if (set_alive[s]) avail.push_back(s);
            if (!avail.empty()) {
                e = cand;
                break;
            }
        }
        if (e < 0) return;  // no further set can be added

        // children: take one of the sets containing e, in index order
        for (int s : avail) {
            std::vector<int> killed;
            std::vector<int> used_elems;
            for (int x : sys->sets[s]) {
                elem_live[x] = 0;
                used_elems.push_back(x);
                for (int t : sets_with[x])
                    if (set_alive[t]) {
                        set_alive[t] = 0;
                        killed.push_back(t);
                    }
            }
            chosen.push_back(s);
            run(e + 1);
            chosen.pop_back();
            for (int t : killed) set_alive[t] = 1;
            for (int x : used_elems) elem_live[x] = 1;
        }

        // or no chosen set covers e
        for (int s : avail) set_alive[s] = 0;
        run(e + 1);
        for (int s : avail) set_alive[s] = 1;
    }
};

struct HitState {
    const SetSystem* sys;
    std::vector<std::vector<int>> sets_with;
    std::vector<int> hit_count;  // per set, how many chosen elements hit it
    std::vector<char> elem_allowed;
    std::vector<int> chosen;
    std::vector<int> best_witness;
    long long best = -1;
    long long nodes = 0, budget = 0;
    long long root_bound = -1;  // LP-derived floor on the optimum
    int max_cover = 1;          // max number of sets one element can hit

    int unhit() const {
        int u = 0;
        for (int c : hit_count)
            if (c == 0) u++;
        return u;
    }

    void run() {
        if (++nodes > budget) throw resource_limit_error(
            "integral_hitting: node budget exceeded; best known value " +
            std::to_string(best < 0 ? -1 : best));
        int remaining = unhit();
        if (remaining == 0) {
            if (best < 0 || (long long)chosen.size() < best) {
                best = (long long)chosen.size();
                best_witness = chosen;
                std::sort(best_witness.begin(), best_witness.end());
            }
            return;
        }
        long long lb = (long long)chosen.size() + (remaining + max_cover - 1) / max_cover;
        if (root_bound >= 0) lb = std::max(lb, root_bound);
        if (best >= 0 && lb >= best) return;

        // branch on the lowest-index unhit set; branch i commits to its
        // element and excludes the elements of earlier branches
        int target = -1;
        for (int s = 0; s < (int)sys->sets.size(); s++)
            if (hit_count[s] == 0) {
                target = s;
                break;
            }
        std::vector<int> disabled_here;
        for (int x : sys->sets[target]) {
            if (!elem_allowed[x]) continue;
            elem_allowed[x] = 0;
            disabled_here.push_back(x);
            for (int s : sets_with[x]) hit_count[s]++;
            chosen.push_back(x);
            run();
            chosen.pop_back();
            for (int s : sets_with[x]) hit_count[s]--;
        }
        for (int x : disabled_here) elem_allowed[x] = 1;
    }
};

inline std::vector<std::vector<int>> build_sets_with(const SetSystem& sys) {
    std::vector<std::vector<int>> sw(sys.ground_size);
    for (int i = 0; i < (int)sys.sets.size(); i++)
        for (int x : sys.sets[i]) sw[x].push_back(i);
    return sw;
}

inline long long rational_floor(const Rational& r) {
    Int q = num(r) / den(r);
    if (num(r) < 0 && q * den(r) != num(r)) q -= 1;
    return q.convert_to<long long>();
}

inline long long rational_ceil(const Rational& r) { return -rational_floor(-r); }

}  // namespace detail

// Maximum number of pairwise disjoint sets, with a witness. The witness
// is the one found first in the deterministic search order.
inline BnbResult integral_packing(const SetSystem& sys, BnbOptions opts = {}) {
    detail::PackState st;
    st.sys = &sys;
    st.sets_with = detail::build_sets_with(sys);
    st.set_alive.assign(sys.sets.size(), 1);
    st.elem_live.assign(sys.ground_size, 1);
    st.budget = opts.node_budget;
    st.min_set_size = sys.ground_size;
    for (const auto& s : sys.sets) st.min_set_size = std::min(st.min_set_size, (int)s.size());
    if (sys.sets.empty()) return {0, {}, 1};
    if (opts.lp_root_bound)
        st.root_bound = detail::rational_floor(frac_matching(sys, opts.lp));
    st.run(0);
    return {st.best, st.best_witness, st.nodes};
}

// Minimum number of ground elements meeting every set, with a witness.
inline BnbResult integral_hitting(const SetSystem& sys, BnbOptions opts = {}) {
    detail::HitState st;
    st.sys = &sys;
    st.sets_with = detail::build_sets_with(sys);
    st.hit_count.assign(sys.sets.size(), 0);
    st.elem_allowed.assign(sys.ground_size, 1);
    st.budget = opts.node_budget;
    for (const auto& sw : st.sets_with) st.max_cover = std::max(st.max_cover, (int)sw.size());
    if (sys.sets.empty()) return {0, {}, 1};
    if (opts.lp_root_bound)
        st.root_bound = detail::rational_ceil(frac_hitting(sys, opts.lp));
    st.run();
    if (st.best < 0) throw std::logic_error("integral_hitting: no cover found");
    return {st.best, st.best_witness, st.nodes};
}

}  // namespace wlpack
