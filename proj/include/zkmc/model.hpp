#pragma once

#include <map>
#include <set>
#include <string>

#include "zkmc/linsys.hpp"

namespace zkmc {

// A letter is a valuation of the atomic propositions, as a bitmask over the
// proposition list of the owning BuchiSpec.
using Letter = uint32_t;

struct ExplicitSystem {
    size_t num_states = 0;
    std::vector<Letter> labels;                       // total labeling
    std::vector<uint32_t> init;                       // sorted state indices
    std::vector<std::pair<uint32_t, uint32_t>> trans; // sorted pairs

    bool operator==(const ExplicitSystem& o) const = default;
    void validate() const;  // invariants: nonempty, ranges, totality
};

// atomic proposition as one linear inequality coeff . x <= bound
struct AtomicPred {
    std::vector<int64_t> coeff;
    int64_t bound = 0;
    bool operator==(const AtomicPred& o) const = default;
};

struct BuchiTransition {
    uint32_t from = 0, to = 0;
    bool fair = false;
    bool wildcard = false;  // "true" label: matches every letter
    Letter letter = 0;
    bool operator==(const BuchiTransition& o) const = default;
};

struct BuchiSpec {
    uint32_t num_q = 0;
    std::vector<uint32_t> init_q;
    std::vector<std::string> props;        // proposition names, bit i of Letter
    std::vector<AtomicPred> pred_map;      // symbolic mode only; parallel to props
    std::vector<BuchiTransition> trans;

    bool matches(const BuchiTransition& t, Letter l) const {
        return t.wildcard || t.letter == l;
    }
    size_t alphabet_size() const { return size_t(1) << props.size(); }
    bool operator==(const BuchiSpec& o) const = default;
    void validate() const;
};

struct RankValue {
    bool inf = false;
    uint64_t v = 0;

    static RankValue infinity() { return {true, 0}; }
    static RankValue finite(uint64_t x) { return {false, x}; }
    bool operator==(const RankValue& o) const {
        return inf == o.inf && (inf || v == o.v);
    }
    // infinity compares greater than every finite value; inf < inf is false
    bool operator<(const RankValue& o) const {
        if (inf) return false;
        if (o.inf) return true;
        return v < o.v;
    }
    bool operator<=(const RankValue& o) const { return *this == o || *this < o; }
};

struct ExplicitRanking {
    size_t num_states = 0, num_q = 0;
    std::vector<RankValue> table;  // s * num_q + q

    bool operator==(const ExplicitRanking& o) const = default;

    const RankValue& at(size_t s, size_t q) const { return table[s * num_q + q]; }
    RankValue& at(size_t s, size_t q) { return table[s * num_q + q]; }
};

// finite case: value w.x + u on polyhedron C x <= d
struct RankCase {
    IntMat C;
    std::vector<int64_t> d;
    std::vector<int64_t> w;
    int64_t u = 0;
    bool operator==(const RankCase& o) const = default;
};

// infinite case: polyhedron E x <= f
struct InfCase {
    IntMat E;
    std::vector<int64_t> f;
    bool operator==(const InfCase& o) const = default;
};

struct PiecewiseRanking {
    std::vector<std::vector<RankCase>> finite;   // per automaton state
    std::vector<std::vector<InfCase>> infinite;  // per automaton state

    size_t m_at(size_t q) const { return finite[q].size(); }
    size_t l_at(size_t q) const { return infinite[q].size(); }
    bool operator==(const PiecewiseRanking& o) const = default;
};

struct VarDecl {
    std::string name;
    int64_t lo = 0, hi = 0;  // finite declared range (oracle grounding only)
    bool operator==(const VarDecl& o) const = default;
};

// next-state update of one variable: either an affine assignment over the
// current-state variables or a nondeterministic bounded choice
struct Update {
    uint32_t var = 0;
    bool is_range = false;
    std::vector<int64_t> coeff;  // assignment: x' = coeff . x + constant
    int64_t constant = 0;
    int64_t lo = 0, hi = 0;      // range form
    bool operator==(const Update& o) const = default;
};

struct GuardedCommand {
    std::string name;
    LinSys guard;                 // over x (vars columns)
    std::vector<Update> updates;  // each variable exactly once
    bool operator==(const GuardedCommand& o) const = default;

    // joint system A [x x']^T <= b (guard rows plus update rows)
    LinSys joint(size_t num_vars) const;
};

struct SymbolicSystem {
    std::vector<VarDecl> vars;
    LinSys init;  // over x: vars columns
    std::vector<GuardedCommand> commands;

    size_t num_vars() const { return vars.size(); }
    bool operator==(const SymbolicSystem& o) const = default;
    void validate(int64_t coeff_bound) const;
};

// Evaluate which letter holds at an integer point (symbolic labeling).
Letter letter_at(const BuchiSpec& spec, std::span<const int64_t> x);

// Linear system (P, r) over x characterizing "exactly the propositions in
// sigma hold"; negations use the integer offset-of-1 rule.
LinSys sigma_to_polyhedron(const BuchiSpec& spec, Letter sigma);

// Theorem-1 check on explicit data. Returns every first-violation per
// condition (base, step, fair) with its witness tuple.
struct RankingViolation {
    enum Cond { Base, Step, Fair } cond;
    uint32_t s, s2, q, q2;  // s2/q2 unused for Base
};
struct RankingReport {
    std::vector<RankingViolation> violations;
    bool ok() const { return violations.empty(); }
};
RankingReport check_ranking_explicit(const ExplicitSystem& sys, const BuchiSpec& spec,
                                     const ExplicitRanking& V);

// Well-formedness of a piecewise ranking: (i) pairwise-disjoint cases,
// (ii) joint coverage, (iii) nonnegative finite values. LP-discharged.
struct WellformednessIssue {
    enum Kind { Overlap, CoverageGap, Negative } kind;
    uint32_t q;
    int case_a, case_b;  // indices; cases order finite then infinite
};
struct WellformednessReport {
    std::vector<WellformednessIssue> issues;
    bool ok() const { return issues.empty(); }
};
WellformednessReport check_wellformedness(const PiecewiseRanking& rk, const BuchiSpec& spec,
                                          size_t num_vars);

}  // namespace zkmc
