#pragma once

#include "zkmc/model.hpp"

namespace zkmc {

// One uniform proof obligation: secret system (per command or init, referenced
// by index) together with public rows G_p y <= h_p over y = [x, x'].
struct Obligation {
    enum class Kind : uint8_t { Init = 0, Finiteness = 1, Rank = 2 };
    static constexpr uint32_t kInitCommand = 0xffffffff;

    Kind kind = Kind::Init;
    uint32_t command = kInitCommand;  // index into SymbolicSystem::commands
    uint32_t delta_index = 0;         // expanded-transition index (not Init)
    uint32_t q_from = 0, q_to = 0;
    Letter letter = 0;
    uint32_t case_j = 0, case_k = 0;

    IntMat Gp;                 // public rows, 2v columns
    std::vector<int64_t> hp;
};

// automaton transition after wildcard expansion to concrete letters
struct ExpandedTransition {
    uint32_t from, to;
    Letter letter;
    bool fair;
};

std::vector<ExpandedTransition> expand_delta(const BuchiSpec& spec);

struct ObligationCounts {
    uint64_t init = 0, finiteness = 0, rank = 0;
    uint64_t total() const { return init + finiteness + rank; }
};

// closed-form counts (per-state case sums)
ObligationCounts count_obligations(const SymbolicSystem& sys, const BuchiSpec& spec,
                                   const PiecewiseRanking& rk);

struct ObligationSet {
    std::vector<Obligation> obligations;  // ordered by (kind, command, delta, j, k)
    ObligationCounts counts;
    size_t y_dim = 0;  // 2 * num_vars

    // secret sides, zero-padded to y_dim columns: per command plus init
    LinSys secret_for(const SymbolicSystem& sys, uint32_t command) const;
};

std::vector<Obligation> gen_init(const SymbolicSystem& sys, const BuchiSpec& spec,
                                 const PiecewiseRanking& rk);
std::vector<Obligation> gen_finiteness(const SymbolicSystem& sys, const BuchiSpec& spec,
                                       const PiecewiseRanking& rk);
std::vector<Obligation> gen_rank(const SymbolicSystem& sys, const BuchiSpec& spec,
                                 const PiecewiseRanking& rk);

ObligationSet generate_obligations(const SymbolicSystem& sys, const BuchiSpec& spec,
                                   const PiecewiseRanking& rk);

}  // namespace zkmc
