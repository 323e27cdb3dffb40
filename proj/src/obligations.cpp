#include "zkmc/obligations.hpp"

namespace zkmc {

std::vector<ExpandedTransition> expand_delta(const BuchiSpec& spec) {
    std::vector<ExpandedTransition> out;
    for (const auto& t : spec.trans) {
        if (t.wildcard) {
            for (Letter l = 0; l < spec.alphabet_size(); l++)
                out.push_back({t.from, t.to, l, t.fair});
        } else {
            out.push_back({t.from, t.to, t.letter, t.fair});
        }
    }
    return out;
}

ObligationCounts count_obligations(const SymbolicSystem& sys, const BuchiSpec& spec,
                                   const PiecewiseRanking& rk) {
    ObligationCounts c;
    for (uint32_t q : spec.init_q) c.init += rk.l_at(q);
    auto delta = expand_delta(spec);
    uint64_t n = sys.commands.size();
    for (const auto& t : delta) {
        c.finiteness += n * rk.m_at(t.from) * rk.l_at(t.to);
        c.rank += n * rk.m_at(t.from) * rk.m_at(t.to);
    }
    return c;
}

namespace {

// premise rows (P^sigma, r^sigma) and (C_j, d_j) on the x columns, plus an
// optional (C_k, d_k) on the x' columns
LinSys premise(const BuchiSpec& spec, Letter sigma, const RankCase* cj, const RankCase* ck,
               size_t v) {
    LinSys sys = sigma_to_polyhedron(spec, sigma).pad_cols(2 * v, 0);
    if (cj) sys = LinSys::vstack(sys, LinSys{cj->C, cj->d}.pad_cols(2 * v, 0));
    if (ck) sys = LinSys::vstack(sys, LinSys{ck->C, ck->d}.pad_cols(2 * v, v));
    return sys;
}

Obligation make(Obligation::Kind kind, uint32_t command, const LinSys& Cp, const LinSys& Ep) {
    Obligation ob;
    ob.kind = kind;
    ob.command = command;
    LinSys g = LinSys::vstack(Cp, Ep);
    ob.Gp = g.A;
    ob.hp = g.b;
    return ob;
}

}  // namespace

std::vector<Obligation> gen_init(const SymbolicSystem& sys, const BuchiSpec& spec,
                                 const PiecewiseRanking& rk) {
    size_t v = sys.num_vars();
    std::vector<Obligation> out;
    for (uint32_t q : spec.init_q) {
        for (uint32_t k = 0; k < rk.l_at(q); k++) {
            const auto& inf = rk.infinite[q][k];
            LinSys none;
            none.A = IntMat(0, 2 * v);
            LinSys consequent = LinSys{inf.E, inf.f}.pad_cols(2 * v, 0);
            Obligation ob = make(Obligation::Kind::Init, Obligation::kInitCommand, none,
                                 consequent);
            ob.q_from = ob.q_to = q;
            ob.case_k = k;
            out.push_back(std::move(ob));
        }
    }
    return out;
}

std::vector<Obligation> gen_finiteness(const SymbolicSystem& sys, const BuchiSpec& spec,
                                       const PiecewiseRanking& rk) {
    size_t v = sys.num_vars();
    auto delta = expand_delta(spec);
    std::vector<Obligation> out;
    for (uint32_t i = 0; i < sys.commands.size(); i++) {
        for (uint32_t d = 0; d < delta.size(); d++) {
            const auto& t = delta[d];
            for (uint32_t j = 0; j < rk.m_at(t.from); j++) {
                for (uint32_t k = 0; k < rk.l_at(t.to); k++) {
                    const auto& inf = rk.infinite[t.to][k];
                    LinSys consequent = LinSys{inf.E, inf.f}.pad_cols(2 * v, v);
                    Obligation ob = make(
                        Obligation::Kind::Finiteness, i,
                        premise(spec, t.letter, &rk.finite[t.from][j], nullptr, v), consequent);
                    ob.delta_index = d;
                    ob.q_from = t.from;
                    ob.q_to = t.to;
                    ob.letter = t.letter;
                    ob.case_j = j;
                    ob.case_k = k;
                    out.push_back(std::move(ob));
                }
            }
        }
    }
    return out;
}

std::vector<Obligation> gen_rank(const SymbolicSystem& sys, const BuchiSpec& spec,
                                 const PiecewiseRanking& rk) {
    size_t v = sys.num_vars();
    auto delta = expand_delta(spec);
    std::vector<Obligation> out;
    for (uint32_t i = 0; i < sys.commands.size(); i++) {
        for (uint32_t d = 0; d < delta.size(); d++) {
            const auto& t = delta[d];
            for (uint32_t j = 0; j < rk.m_at(t.from); j++) {
                for (uint32_t k = 0; k < rk.m_at(t.to); k++) {
                    const auto& cj = rk.finite[t.from][j];
                    const auto& ck = rk.finite[t.to][k];
                    // single consequent row [w_j, -w_k] y <= u_k - u_j + 1_F - 1
                    LinSys consequent;
                    consequent.A = IntMat(1, 2 * v);
                    for (size_t c = 0; c < v; c++) {
                        consequent.A.at(0, c) = cj.w[c];
                        consequent.A.at(0, v + c) = -ck.w[c];
                    }
                    consequent.b.push_back(ck.u - cj.u + (t.fair ? 1 : 0) - 1);
                    Obligation ob =
                        make(Obligation::Kind::Rank, i,
                             premise(spec, t.letter, &cj, &ck, v), consequent);
                    ob.delta_index = d;
                    ob.q_from = t.from;
                    ob.q_to = t.to;
                    ob.letter = t.letter;
                    ob.case_j = j;
                    ob.case_k = k;
                    out.push_back(std::move(ob));
                }
            }
        }
    }
    return out;
}

LinSys ObligationSet::secret_for(const SymbolicSystem& sys, uint32_t command) const {
    if (command == Obligation::kInitCommand) return sys.init.pad_cols(y_dim, 0);
    return sys.commands.at(command).joint(sys.num_vars());
}

ObligationSet generate_obligations(const SymbolicSystem& sys, const BuchiSpec& spec,
                                   const PiecewiseRanking& rk) {
    ObligationSet set;
    set.y_dim = 2 * sys.num_vars();
    auto init = gen_init(sys, spec, rk);
    auto fin = gen_finiteness(sys, spec, rk);
    auto rank = gen_rank(sys, spec, rk);
    set.counts = count_obligations(sys, spec, rk);
    if (init.size() != set.counts.init || fin.size() != set.counts.finiteness ||
        rank.size() != set.counts.rank)
        throw Error("obligations: generated sizes disagree with the closed-form count");
    set.obligations.reserve(set.counts.total());
    for (auto& o : init) set.obligations.push_back(std::move(o));
    for (auto& o : fin) set.obligations.push_back(std::move(o));
    for (auto& o : rank) set.obligations.push_back(std::move(o));
    return set;
}

}  // namespace zkmc
