#include <json.hpp>

#include "zkmc/explicit_cert.hpp"

namespace zkmc {

namespace {

uint32_t log2_ceil(size_t n) {
    uint32_t l = 0;
    while ((size_t(1) << l) < n) l++;
    return l;
}

}  // namespace

Embedding Embedding::build(size_t num_states) {
    if (num_states == 0) throw Error("embedding: empty state space");
    Embedding emb;
    emb.num_states = num_states;
    uint32_t l1 = log2_ceil(num_states);
    uint32_t l2 = log2_ceil(num_states * num_states);
    if (l2 > FR_TWO_ADICITY) throw Error("embedding: state space too large for the field domains");
    // D2 is the plain subgroup H2; D1 the coset 7*H1. H1 is a subgroup of H2,
    // and 7 generates the full multiplicative group, so the cosets are disjoint.
    emb.d1 = EvalDomain::radix2(l1, fr_multiplicative_generator());
    emb.d2 = EvalDomain::radix2(l2, Fr::one());
    emb.d1_points.resize(emb.d1.size());
    Fr cur = emb.d1.shift;
    for (size_t i = 0; i < emb.d1.size(); i++) {
        emb.d1_points[i] = cur;
        cur = cur * emb.d1.omega;
    }
    emb.d2_points.resize(emb.d2.size());
    cur = emb.d2.shift;
    for (size_t i = 0; i < emb.d2.size(); i++) {
        emb.d2_points[i] = cur;
        cur = cur * emb.d2.omega;
    }
    return emb;
}

std::vector<Fr> BatchSets::e_step_fair_union() const {
    std::vector<Fr> all = e_step;
    all.insert(all.end(), e_fair.begin(), e_fair.end());
    std::sort(all.begin(), all.end(), [](const Fr& a, const Fr& b) { return b.canonical_gt(a); });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

namespace {

void sort_points(std::vector<Fr>& v) {
    std::sort(v.begin(), v.end(), [](const Fr& a, const Fr& b) { return b.canonical_gt(a); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <bool Parallel>
BatchSets enumerate_impl(const ExplicitCert& cert, const Embedding& emb) {
    const auto& V = cert.ranking;
    const auto& spec = cert.spec;
    size_t n = cert.num_states;

    BatchSets out;
    // B_init: some q in Q0 has V(s, q) infinite
    for (uint32_t s = 0; s < uint32_t(n); s++) {
        for (uint32_t q : spec.init_q) {
            if (V.at(s, q).inf) {
                out.b_init.push_back(s);
                break;
            }
        }
    }

    // B_step / B_fair over pairs, parallel over the source state
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> step_parts(n), fair_parts(n);
#pragma omp parallel for schedule(static) if (Parallel)
    for (uint32_t s = 0; s < uint32_t(n); s++) {
        for (uint32_t s2 = 0; s2 < uint32_t(n); s2++) {
            bool in_step = false, in_fair = false;
            for (const auto& t : spec.trans) {
                if (!spec.matches(t, cert.labels[s])) continue;
                const RankValue& from = V.at(s, t.from);
                if (from.inf) continue;
                const RankValue& to = V.at(s2, t.to);
                if (from < to) in_step = true;
                if (t.fair && from <= to) in_fair = true;
                if (in_step && in_fair) break;
            }
            if (in_step) step_parts[s].push_back({s, s2});
            if (in_fair) fair_parts[s].push_back({s, s2});
        }
    }
    for (uint32_t s = 0; s < uint32_t(n); s++) {
        out.b_step.insert(out.b_step.end(), step_parts[s].begin(), step_parts[s].end());
        out.b_fair.insert(out.b_fair.end(), fair_parts[s].begin(), fair_parts[s].end());
    }

    for (uint32_t s : out.b_init) out.e_init.push_back(emb.e1(s));
    for (auto [a, b] : out.b_step) out.e_step.push_back(emb.e2(a, b));
    for (auto [a, b] : out.b_fair) out.e_fair.push_back(emb.e2(a, b));
    sort_points(out.e_init);
    sort_points(out.e_step);
    sort_points(out.e_fair);
    return out;
}

}  // namespace

BatchSets enumerate_batches(const ExplicitCert& cert, const Embedding& emb) {
    return enumerate_impl<true>(cert, emb);
}

BatchSets enumerate_batches_serial(const ExplicitCert& cert, const Embedding& emb) {
    return enumerate_impl<false>(cert, emb);
}

bool plaintext_disjointness(const ExplicitSystem& sys, const BatchSets& batches) {
    for (uint32_t s : batches.b_init)
        if (std::binary_search(sys.init.begin(), sys.init.end(), s)) return false;
    for (auto p : batches.b_step)
        if (std::binary_search(sys.trans.begin(), sys.trans.end(), p)) return false;
    for (auto p : batches.b_fair)
        if (std::binary_search(sys.trans.begin(), sys.trans.end(), p)) return false;
    return true;
}

Bytes32 cert_digest(const ExplicitCert& cert) {
    Writer w;
    w.u8(1);  // embedding/digest schema version
    w.u64(cert.num_states);
    w.u32(uint32_t(cert.spec.num_q));
    for (const auto& p : cert.spec.props) w.str(p);
    for (Letter l : cert.labels) w.u32(l);
    for (uint32_t q : cert.spec.init_q) w.u32(q);
    for (const auto& t : cert.spec.trans) {
        w.u32(t.from);
        w.u32(t.to);
        w.u8(uint8_t(t.fair ? 1 : 0));
        w.u8(uint8_t(t.wildcard ? 1 : 0));
        w.u32(t.letter);
    }
    for (const auto& v : cert.ranking.table) {
        w.u8(v.inf ? 1 : 0);
        w.u64(v.v);
    }
    return sha256(w.bytes());
}

std::string batches_to_json(const BatchSets& b) {
    nlohmann::json j;
    auto dump = [](const std::vector<Fr>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Fr& x : v) arr.push_back(to_hex(x.to_bytes()));
        return arr;
    };
    j["e_init"] = dump(b.e_init);
    j["e_step"] = dump(b.e_step);
    j["e_fair"] = dump(b.e_fair);
    return j.dump(2);
}

}  // namespace zkmc
