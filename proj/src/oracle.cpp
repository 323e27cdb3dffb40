#include "zkmc/oracle.hpp"

namespace zkmc::oracle {

namespace {

struct Product {
    size_t n;  // |S| * |Q|
    std::vector<std::vector<uint32_t>> adj;
    std::vector<std::vector<uint8_t>> fair;  // parallel to adj
    std::vector<uint32_t> roots;
};

Product build_product(const ExplicitSystem& sys, const BuchiSpec& spec) {
    Product p;
    size_t Q = spec.num_q;
    p.n = sys.num_states * Q;
    p.adj.resize(p.n);
    p.fair.resize(p.n);
    for (auto [s, s2] : sys.trans) {
        for (const auto& t : spec.trans) {
            if (!spec.matches(t, sys.labels[s])) continue;
            uint32_t u = uint32_t(s * Q + t.from);
            uint32_t v = uint32_t(s2 * Q + t.to);
            p.adj[u].push_back(v);
            p.fair[u].push_back(t.fair ? 1 : 0);
        }
    }
    for (uint32_t s : sys.init)
        for (uint32_t q : spec.init_q) p.roots.push_back(uint32_t(s * Q + q));
    return p;
}

// iterative Tarjan
std::vector<uint32_t> scc_of(const Product& p, std::vector<uint8_t>& reachable) {
    std::vector<uint32_t> comp(p.n, UINT32_MAX), low(p.n), idx(p.n, UINT32_MAX);
    std::vector<uint8_t> onstack(p.n, 0);
    std::vector<uint32_t> stack;
    uint32_t counter = 0, comps = 0;

    struct Frame {
        uint32_t v;
        size_t edge;
    };
    reachable.assign(p.n, 0);
    for (uint32_t root : p.roots) {
        if (idx[root] != UINT32_MAX) continue;
        std::vector<Frame> call;
        call.push_back({root, 0});
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        onstack[root] = 1;
        reachable[root] = 1;
        while (!call.empty()) {
            auto& f = call.back();
            if (f.edge < p.adj[f.v].size()) {
                uint32_t w = p.adj[f.v][f.edge++];
                reachable[w] = 1;
                if (idx[w] == UINT32_MAX) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    onstack[w] = 1;
                    call.push_back({w, 0});
                } else if (onstack[w]) {
                    low[f.v] = std::min(low[f.v], idx[w]);
                }
            } else {
                if (low[f.v] == idx[f.v]) {
                    for (;;) {
                        uint32_t w = stack.back();
                        stack.pop_back();
                        onstack[w] = 0;
                        comp[w] = comps;
                        if (w == f.v) break;
                    }
                    comps++;
                }
                uint32_t v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return comp;
}

}  // namespace

bool fair_cycle_exists(const ExplicitSystem& sys, const BuchiSpec& spec) {
    sys.validate();
    spec.validate();
    Product p = build_product(sys, spec);
    std::vector<uint8_t> reachable;
    auto comp = scc_of(p, reachable);
    // a reachable cycle through a fair edge exists iff some fair edge has both
    // endpoints in one SCC (self-loops included) and its source is reachable
    for (uint32_t u = 0; u < p.n; u++) {
        if (!reachable[u] || comp[u] == UINT32_MAX) continue;
        for (size_t e = 0; e < p.adj[u].size(); e++) {
            if (!p.fair[u][e]) continue;
            uint32_t v = p.adj[u][e];
            if (comp[v] == comp[u]) return true;
        }
    }
    return false;
}

std::vector<std::vector<int64_t>> ground_points(const SymbolicSystem& sys, uint64_t max_states) {
    uint64_t total = 1;
    for (const auto& v : sys.vars) {
        uint64_t range = uint64_t(v.hi - v.lo + 1);
        if (total > max_states / range) throw Error("grounding: state space exceeds limit");
        total *= range;
    }
    std::vector<std::vector<int64_t>> pts;
    pts.reserve(total);
    std::vector<int64_t> cur(sys.vars.size());
    for (size_t i = 0; i < sys.vars.size(); i++) cur[i] = sys.vars[i].lo;
    for (uint64_t c = 0; c < total; c++) {
        pts.push_back(cur);
        // odometer increment, last variable fastest
        for (size_t i = sys.vars.size(); i-- > 0;) {
            if (cur[i] < sys.vars[i].hi) {
                cur[i]++;
                break;
            }
            cur[i] = sys.vars[i].lo;
        }
    }
    return pts;
}

ExplicitSystem ground(const SymbolicSystem& sys, const BuchiSpec& spec, uint64_t max_states) {
    auto pts = ground_points(sys, max_states);
    ExplicitSystem out;
    out.num_states = pts.size();
    out.labels.resize(pts.size());
    for (size_t i = 0; i < pts.size(); i++) out.labels[i] = letter_at(spec, pts[i]);
    for (size_t i = 0; i < pts.size(); i++)
        if (sys.init.sat(pts[i])) out.init.push_back(uint32_t(i));
    std::vector<LinSys> joints;
    for (const auto& cmd : sys.commands) joints.push_back(cmd.joint(sys.num_vars()));
    std::vector<int64_t> joint(2 * sys.num_vars());
    for (size_t i = 0; i < pts.size(); i++) {
        std::copy(pts[i].begin(), pts[i].end(), joint.begin());
        for (size_t j = 0; j < pts.size(); j++) {
            std::copy(pts[j].begin(), pts[j].end(), joint.begin() + ptrdiff_t(sys.num_vars()));
            for (const auto& js : joints) {
                if (js.sat(joint)) {
                    out.trans.push_back({uint32_t(i), uint32_t(j)});
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace zkmc::oracle
