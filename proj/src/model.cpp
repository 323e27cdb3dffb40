#include "zkmc/model.hpp"

#include <functional>

#include "zkmc/lp.hpp"

namespace zkmc {

void ExplicitSystem::validate() const {
    if (num_states == 0) throw Error("explicit system: empty state space");
    if (labels.size() != num_states) throw Error("explicit system: labeling not total");
    for (uint32_t s : init)
        if (s >= num_states) throw Error("explicit system: init state out of range");
    for (auto [a, b] : trans)
        if (a >= num_states || b >= num_states)
            throw Error("explicit system: transition out of range");
}

void BuchiSpec::validate() const {
    if (num_q == 0) throw Error("automaton: empty state set");
    if (props.size() > 12) throw Error("automaton: too many atomic propositions");
    for (uint32_t q : init_q)
        if (q >= num_q) throw Error("automaton: initial state out of range");
    for (const auto& t : trans) {
        if (t.from >= num_q || t.to >= num_q) throw Error("automaton: transition out of range");
        if (!t.wildcard && t.letter >= alphabet_size())
            throw Error("automaton: letter out of range");
    }
}

LinSys GuardedCommand::joint(size_t num_vars) const {
    LinSys out = guard.pad_cols(2 * num_vars, 0);
    for (const auto& up : updates) {
        size_t primed = num_vars + up.var;
        if (up.is_range) {
            IntMat hi_row(1, 2 * num_vars);
            hi_row.at(0, primed) = 1;
            out.A = IntMat::vstack(out.A, hi_row);
            out.b.push_back(up.hi);
            IntMat lo_row(1, 2 * num_vars);
            lo_row.at(0, primed) = -1;
            out.A = IntMat::vstack(out.A, lo_row);
            out.b.push_back(-up.lo);
        } else {
            // x' - rhs <= c and rhs - x' <= -c
            for (int flip = 0; flip < 2; flip++) {
                int sign = flip ? -1 : 1;
                IntMat row(1, 2 * num_vars);
                row.at(0, primed) = sign;
                for (size_t i = 0; i < num_vars; i++) row.at(0, i) -= sign * up.coeff[i];
                out.A = IntMat::vstack(out.A, row);
                out.b.push_back(sign * up.constant);
            }
        }
    }
    return out;
}

void SymbolicSystem::validate(int64_t coeff_bound) const {
    if (vars.empty()) throw Error("system: no variables");
    size_t v = vars.size();
    for (const auto& var : vars)
        if (var.lo > var.hi) throw Error("system: empty range for " + var.name);
    if (init.cols() != v) throw Error("system: init arity mismatch");
    auto check_bound = [&](const LinSys& s, const std::string& what) {
        if (s.A.max_abs() > coeff_bound)
            throw Error("system: coefficient overflow beyond bound in " + what);
        for (int64_t x : s.b)
            if (x > coeff_bound || x < -coeff_bound)
                throw Error("system: coefficient overflow beyond bound in " + what);
    };
    check_bound(init, "init");
    for (const auto& c : commands) {
        if (c.guard.cols() != v) throw Error("system: command arity mismatch in " + c.name);
        std::vector<bool> seen(v, false);
        for (const auto& up : c.updates) {
            if (up.var >= v || seen[up.var])
                throw Error("system: bad update list in " + c.name);
            seen[up.var] = true;
        }
        for (bool s : seen)
            if (!s) throw Error("system: command " + c.name + " leaves a variable unassigned");
        check_bound(c.joint(v), "command " + c.name);
    }
}

Letter letter_at(const BuchiSpec& spec, std::span<const int64_t> x) {
    Letter l = 0;
    for (size_t i = 0; i < spec.pred_map.size(); i++) {
        const auto& p = spec.pred_map[i];
        __int128 acc = 0;
        for (size_t j = 0; j < p.coeff.size(); j++) acc += __int128(p.coeff[j]) * x[j];
        if (acc <= p.bound) l |= Letter(1) << i;
    }
    return l;
}

LinSys sigma_to_polyhedron(const BuchiSpec& spec, Letter sigma) {
    if (spec.pred_map.size() != spec.props.size())
        throw Error("sigma_to_polyhedron: missing predicate mapping");
    size_t v = spec.pred_map.empty() ? 0 : spec.pred_map[0].coeff.size();
    LinSys out;
    out.A = IntMat(spec.props.size(), v);
    out.b.resize(spec.props.size());
    for (size_t i = 0; i < spec.props.size(); i++) {
        const auto& p = spec.pred_map[i];
        bool holds = (sigma >> i) & 1;
        for (size_t j = 0; j < v; j++)
            out.A.at(i, j) = holds ? p.coeff[j] : -p.coeff[j];
        // negation of a.x <= b over integers: -a.x <= -b-1
        out.b[i] = holds ? p.bound : -p.bound - 1;
    }
    return out;
}

RankingReport check_ranking_explicit(const ExplicitSystem& sys, const BuchiSpec& spec,
                                     const ExplicitRanking& V) {
    RankingReport report;
    bool base_hit = false, step_hit = false, fair_hit = false;
    // base: s in S0 and q in Q0 => V(s,q) finite
    for (uint32_t s : sys.init) {
        for (uint32_t q : spec.init_q) {
            if (V.at(s, q).inf && !base_hit) {
                report.violations.push_back({RankingViolation::Base, s, 0, q, 0});
                base_hit = true;
            }
        }
    }
    // step and fair over all transitions and automaton edges
    for (auto [s, s2] : sys.trans) {
        for (const auto& t : spec.trans) {
            if (!spec.matches(t, sys.labels[s])) continue;
            const RankValue& from = V.at(s, t.from);
            if (from.inf) continue;
            const RankValue& to = V.at(s2, t.to);
            if (!step_hit && from < to) {
                report.violations.push_back({RankingViolation::Step, s, s2, t.from, t.to});
                step_hit = true;
            }
            if (t.fair && !fair_hit && from <= to) {
                report.violations.push_back({RankingViolation::Fair, s, s2, t.from, t.to});
                fair_hit = true;
            }
        }
    }
    return report;
}

namespace {

LinSys case_system(const RankCase& c) { return {c.C, c.d}; }
LinSys case_system(const InfCase& c) { return {c.E, c.f}; }

bool lp_infeasible(const LinSys& s) { return !lp_feasible(s.A, s.b).sat; }

// all case polyhedra of one automaton state in a uniform view
struct CaseView {
    LinSys sys;
    const std::vector<int64_t>* w = nullptr;  // finite cases only
    int64_t u = 0;
};

std::vector<CaseView> views_for(const PiecewiseRanking& rk, size_t q) {
    std::vector<CaseView> out;
    for (const auto& c : rk.finite[q]) out.push_back({case_system(c), &c.w, c.u});
    for (const auto& c : rk.infinite[q]) out.push_back({case_system(c), nullptr, 0});
    return out;
}

// coverage check: for every choice of one negated row per case, the
// conjunction must be infeasible (integer-offset negations, case-split LP)
bool covers(const std::vector<CaseView>& cases, size_t num_vars) {
    LinSys acc;
    acc.A = IntMat(0, num_vars);

    // depth-first over choice tuples with early pruning
    std::function<bool(size_t, const LinSys&)> rec = [&](size_t idx, const LinSys& sofar) -> bool {
        if (idx == cases.size()) return false;  // a full choice tuple is feasible: gap
        const LinSys& cs = cases[idx].sys;
        for (size_t r = 0; r < cs.rows(); r++) {
            LinSys next = sofar;
            IntMat neg_row(1, num_vars);
            for (size_t j = 0; j < num_vars; j++) neg_row.at(0, j) = -cs.A.at(r, j);
            next.A = IntMat::vstack(next.A, neg_row);
            next.b.push_back(-cs.b[r] - 1);
            if (!lp_feasible(next.A, next.b).sat) continue;  // pruned: already infeasible
            if (!rec(idx + 1, next)) return false;
        }
        return true;  // every extension infeasible
    };
    return rec(0, acc);
}

}  // namespace

WellformednessReport check_wellformedness(const PiecewiseRanking& rk, const BuchiSpec& spec,
                                          size_t num_vars) {
    WellformednessReport report;
    if (rk.finite.size() != spec.num_q || rk.infinite.size() != spec.num_q)
        throw Error("ranking: per-state case lists must cover all automaton states");
    for (uint32_t q = 0; q < spec.num_q; q++) {
        auto cases = views_for(rk, q);
        // (i) pairwise disjoint
        for (size_t a = 0; a < cases.size(); a++) {
            for (size_t b = a + 1; b < cases.size(); b++) {
                LinSys both = LinSys::vstack(cases[a].sys, cases[b].sys);
                if (!lp_infeasible(both))
                    report.issues.push_back(
                        {WellformednessIssue::Overlap, q, int(a), int(b)});
            }
        }
        // (ii) joint coverage
        if (!cases.empty() && !covers(cases, num_vars))
            report.issues.push_back({WellformednessIssue::CoverageGap, q, -1, -1});
        if (cases.empty())
            report.issues.push_back({WellformednessIssue::CoverageGap, q, -1, -1});
        // (iii) nonnegativity of finite cases: {Cx <= d, w.x <= -u-1} infeasible
        for (size_t a = 0; a < rk.finite[q].size(); a++) {
            const auto& c = rk.finite[q][a];
            IntMat neg(1, num_vars);
            for (size_t j = 0; j < num_vars; j++) neg.at(0, j) = c.w[j];
            LinSys test = case_system(c);
            test.A = IntMat::vstack(test.A, neg);
            test.b.push_back(-c.u - 1);
            if (!lp_infeasible(test))
                report.issues.push_back({WellformednessIssue::Negative, q, int(a), -1});
        }
    }
    return report;
}

}  // namespace zkmc
