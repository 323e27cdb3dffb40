#include <fstream>

#include "doctest.h"
#include "zkmc/certlang.hpp"
#include "zkmc/explicit_cert.hpp"
#include "zkmc/oracle.hpp"
#include "zkmc/pedersen.hpp"
#include "zkmc/poly.hpp"

using namespace zkmc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    return std::string(std::istreambuf_iterator<char>(f), {});
}

const ParsedUnit& handshake() {
    static const ParsedUnit u =
        parse_unit(slurp(std::string(ZKMC_SOURCE_DIR) + "/models/handshake.zkgc"),
                   int64_t(DEFAULT_BOUND_M));
    return u;
}

const ZkxFile& handshake_small() {
    static const ZkxFile f =
        zkx_from_json(slurp(std::string(ZKMC_SOURCE_DIR) + "/models/handshake_small.zkx.json"));
    return f;
}

}  // namespace

TEST_CASE("sigma_to_polyhedron direct and negated") {
    BuchiSpec spec;
    spec.num_q = 1;
    spec.init_q = {0};
    spec.props = {"p"};
    spec.pred_map = {{{1}, 5}};  // p := x <= 5
    spec.validate();

    auto direct = sigma_to_polyhedron(spec, 1);
    CHECK(direct.A.at(0, 0) == 1);
    CHECK(direct.b[0] == 5);
    // negation picks up the offset of 1
    auto negated = sigma_to_polyhedron(spec, 0);
    CHECK(negated.A.at(0, 0) == -1);
    CHECK(negated.b[0] == -6);
}

TEST_CASE("sigma polyhedron membership matches letter_at on a box") {
    BuchiSpec spec;
    spec.num_q = 1;
    spec.init_q = {0};
    spec.props = {"p", "q"};
    spec.pred_map = {{{1, 0}, 5}, {{1, -2}, 0}};
    spec.validate();
    for (int64_t x = -6; x <= 8; x++) {
        for (int64_t y = -6; y <= 8; y++) {
            std::vector<int64_t> pt = {x, y};
            Letter actual = letter_at(spec, pt);
            for (Letter sigma = 0; sigma < 4; sigma++) {
                auto poly = sigma_to_polyhedron(spec, sigma);
                CHECK(poly.sat(pt) == (sigma == actual));
            }
        }
    }
}

TEST_CASE("check_ranking_explicit on the bundled small model") {
    const auto& f = handshake_small();
    auto sys = f.system();
    auto report = check_ranking_explicit(sys, f.pub.spec, f.pub.ranking);
    CHECK(report.ok());
    // V == 0 with a fair self-loop violates the fair step
    ExplicitRanking zero;
    zero.num_states = sys.num_states;
    zero.num_q = f.pub.spec.num_q;
    zero.table.assign(sys.num_states * f.pub.spec.num_q, RankValue::finite(0));
    auto bad = check_ranking_explicit(sys, f.pub.spec, zero);
    REQUIRE(!bad.ok());
    bool fair_violation = false;
    for (const auto& v : bad.violations)
        if (v.cond == RankingViolation::Fair) fair_violation = true;
    CHECK(fair_violation);
}

TEST_CASE("wellformedness of the handshake ranking") {
    const auto& u = handshake();
    auto report = check_wellformedness(u.ranking, u.spec, u.system.num_vars());
    CHECK(report.ok());
}

TEST_CASE("wellformedness detects the named failures") {
    BuchiSpec spec;
    spec.num_q = 1;
    spec.init_q = {0};
    spec.validate();
    // integer dichotomy: x <= 0 and -x <= -1 are disjoint and covering
    PiecewiseRanking good;
    good.finite.resize(1);
    good.infinite.resize(1);
    RankCase low;
    low.C = IntMat(1, 1);
    low.C.at(0, 0) = 1;
    low.d = {0};
    low.w = {-1};
    low.u = 0;  // value -x on x <= 0
    RankCase high;
    high.C = IntMat(1, 1);
    high.C.at(0, 0) = -1;
    high.d = {-1};
    high.w = {1};
    high.u = 0;
    good.finite[0] = {low, high};
    CHECK(check_wellformedness(good, spec, 1).ok());

    // overlap: x <= 5 and -x <= 0 intersect
    auto overlap = good;
    overlap.finite[0][0].C.at(0, 0) = 1;
    overlap.finite[0][0].d = {5};
    overlap.finite[0][1].C.at(0, 0) = -1;
    overlap.finite[0][1].d = {0};
    auto rep = check_wellformedness(overlap, spec, 1);
    REQUIRE(!rep.ok());
    CHECK(rep.issues[0].kind == WellformednessIssue::Overlap);

    // coverage gap: only x <= 0
    PiecewiseRanking gap;
    gap.finite.resize(1);
    gap.infinite.resize(1);
    gap.finite[0] = {low};
    auto rep2 = check_wellformedness(gap, spec, 1);
    REQUIRE(!rep2.ok());
    CHECK(rep2.issues[0].kind == WellformednessIssue::CoverageGap);

    // negativity: value x - 10 on x <= 0 dips below zero
    auto negative = good;
    negative.finite[0][0].w = {1};
    negative.finite[0][0].u = -10;
    auto rep3 = check_wellformedness(negative, spec, 1);
    REQUIRE(!rep3.ok());
    bool has_neg = false;
    for (const auto& i : rep3.issues)
        if (i.kind == WellformednessIssue::Negative) has_neg = true;
    CHECK(has_neg);
}

TEST_CASE("embedding determinism and disjointness") {
    auto a = Embedding::build(32);
    auto b = Embedding::build(32);
    CHECK(a.d1.size() == 32);
    CHECK(a.d2.size() == 1024);
    for (size_t i = 0; i < 32; i++) CHECK(a.e1(i) == b.e1(i));
    CHECK(a.e2(31, 31) == b.e2(31, 31));
    // injectivity and D1/D2 disjointness on the small case
    auto tiny = Embedding::build(2);
    CHECK(tiny.d1.size() == 2);
    CHECK(tiny.d2.size() == 4);
    std::vector<Fr> all;
    for (size_t i = 0; i < 2; i++) all.push_back(tiny.e1(i));
    for (size_t i = 0; i < 2; i++)
        for (size_t j = 0; j < 2; j++) all.push_back(tiny.e2(i, j));
    for (size_t i = 0; i < all.size(); i++)
        for (size_t j = i + 1; j < all.size(); j++) CHECK(all[i] != all[j]);
}

TEST_CASE("batch enumeration on the bundled small model") {
    const auto& f = handshake_small();
    auto emb = Embedding::build(f.pub.num_states);
    auto batches = enumerate_batches(f.pub, emb);
    CHECK(batches.e_init.size() == 0);
    CHECK(batches.e_step.size() == 46);
    CHECK(batches.e_fair.size() == 58);
    CHECK(batches.total_embedded() == 104);
    // parallel kernel agrees with the serial reference
    auto serial = enumerate_batches_serial(f.pub, emb);
    CHECK(batches.e_step == serial.e_step);
    CHECK(batches.e_fair == serial.e_fair);
    CHECK(batches.e_init == serial.e_init);
    // the bundled secret system avoids every batch
    CHECK(plaintext_disjointness(f.system(), batches));
}

TEST_CASE("constant ranking batches") {
    // V == 0 everywhere, no fair transitions: B_init and B_step empty,
    // B_fair would be empty too since F is empty
    ExplicitCert cert;
    cert.num_states = 4;
    cert.labels = {0, 0, 0, 0};
    cert.spec.num_q = 1;
    cert.spec.init_q = {0};
    cert.spec.trans = {{0, 0, false, true, 0}};
    cert.ranking.num_states = 4;
    cert.ranking.num_q = 1;
    cert.ranking.table.assign(4, RankValue::finite(0));
    auto emb = Embedding::build(4);
    auto b = enumerate_batches(cert, emb);
    CHECK(b.e_init.empty());
    CHECK(b.e_step.empty());
    CHECK(b.e_fair.empty());
    // with the loop marked fair, 0 <= 0 puts every labeled pair in B_fair
    cert.spec.trans[0].fair = true;
    auto b2 = enumerate_batches(cert, emb);
    CHECK(b2.b_fair.size() == 16);
    CHECK(b2.e_step.empty());
}

TEST_CASE("membership polynomials evaluate to indicators") {
    const auto& f = handshake_small();
    auto sys = f.system();
    auto emb = Embedding::build(sys.num_states);
    Drbg rng(Bytes{21});
    auto polys = build_membership_polys(sys, emb, rng);
    for (uint32_t s = 0; s < sys.num_states; s++) {
        bool is_init = std::binary_search(sys.init.begin(), sys.init.end(), s);
        CHECK(poly::eval(polys.p_init, emb.e1(s)) ==
              (is_init ? Fr::one() : Fr::zero()));
    }
    for (uint32_t a = 0; a < sys.num_states; a++)
        for (uint32_t b = 0; b < sys.num_states; b++) {
            bool is_t = std::binary_search(sys.trans.begin(), sys.trans.end(),
                                           std::make_pair(a, b));
            CHECK(poly::eval(polys.p_trans, emb.e2(a, b)) ==
                  (is_t ? Fr::one() : Fr::zero()));
        }
    CHECK(polys.p_init.size() <= emb.d1.size());
    CHECK(polys.p_trans.size() <= emb.d2.size());
}

TEST_CASE("lagrange membership on two points") {
    // S = {s0, s1}, S0 = {s0}: indicator through any two points x0, x1 is the
    // line v(x) = (x - x1) / (x0 - x1); for points {1, 2} this is 2 - x
    Fr x0 = Fr::from_u64(1), x1 = Fr::from_u64(2);
    auto lagrange = [&](const Fr& x) { return (x - x1) * (x0 - x1).inv(); };
    CHECK(lagrange(x0) == Fr::one());
    CHECK(lagrange(x1) == Fr::zero());
    CHECK(lagrange(Fr::zero()) == Fr::from_u64(2));  // 2 - 0
    CHECK(lagrange(Fr::from_u64(3)) == Fr::one().neg());
}

TEST_CASE("contraposition: disjointness iff ranking check passes") {
    Drbg rng(Bytes{22});
    int checked_valid = 0;
    for (int trial = 0; trial < 120; trial++) {
        // random 5-state system and 2-state automaton with random V
        ExplicitCert cert;
        cert.num_states = 5;
        cert.spec.num_q = 2;
        cert.spec.init_q = {0};
        cert.spec.props = {"a"};
        for (int i = 0; i < 5; i++) cert.labels.push_back(Letter(rng.next_u64() % 2));
        cert.spec.trans.push_back({0, 0, false, true, 0});
        cert.spec.trans.push_back({0, 1, false, false, 1});
        cert.spec.trans.push_back({1, 1, true, false, 1});
        cert.ranking.num_states = 5;
        cert.ranking.num_q = 2;
        for (int i = 0; i < 10; i++) {
            uint64_t roll = rng.next_u64() % 5;
            cert.ranking.table.push_back(roll == 4 ? RankValue::infinity()
                                                   : RankValue::finite(roll));
        }
        ExplicitSystem sys;
        sys.num_states = 5;
        sys.labels = cert.labels;
        for (uint32_t s = 0; s < 5; s++) {
            if (rng.next_u64() % 2) sys.init.push_back(s);
            for (uint32_t t = 0; t < 5; t++)
                if (rng.next_u64() % 3 == 0) sys.trans.push_back({s, t});
        }
        if (sys.init.empty()) sys.init.push_back(0);
        auto emb = Embedding::build(5);
        auto batches = enumerate_batches(cert, emb);
        bool disjoint = plaintext_disjointness(sys, batches);
        bool valid = check_ranking_explicit(sys, cert.spec, cert.ranking).ok();
        CHECK(disjoint == valid);
        if (valid) checked_valid++;
    }
    CHECK(checked_valid > 0);
}

TEST_CASE("oracle fair cycle detection") {
    // two states with a reachable fair self-loop
    ExplicitSystem sys;
    sys.num_states = 2;
    sys.labels = {0, 0};
    sys.init = {0};
    sys.trans = {{0, 1}, {1, 1}};
    BuchiSpec spec;
    spec.num_q = 1;
    spec.init_q = {0};
    spec.trans = {{0, 0, true, true, 0}};
    CHECK(oracle::fair_cycle_exists(sys, spec));
    // remove the self-loop: no infinite run at all
    sys.trans = {{0, 1}};
    CHECK(!oracle::fair_cycle_exists(sys, spec));
}

TEST_CASE("oracle on the bundled handshake models") {
    const auto& f = handshake_small();
    CHECK(!oracle::fair_cycle_exists(f.system(), f.pub.spec));
    const auto& u = handshake();
    auto grounded = oracle::ground(u.system, u.spec);
    CHECK(grounded.num_states == 24);
    CHECK(!oracle::fair_cycle_exists(grounded, u.spec));
}

TEST_CASE("grounding the unit counter") {
    // 1 var in [0,3], command x' = x+1 guarded x <= 2: 4 states, 3 transitions
    ParsedUnit u = parse_unit(R"(
system {
  var x in [0, 3];
  init: x = 0;
  command step: guard x <= 2 update x' = x + 1;
}
automaton { states: q; init: q; aps: trans: }
ranking { at q: case x <= 100 -> 0; case -x <= -101 -> 0; }
)",
                              1 << 20);
    auto g = oracle::ground(u.system, u.spec);
    CHECK(g.num_states == 4);
    CHECK(g.trans.size() == 3);
    CHECK(g.init == std::vector<uint32_t>{0});
}

TEST_CASE("oracle agrees with bounded unrolling on random systems") {
    Drbg rng(Bytes{23});
    for (int trial = 0; trial < 60; trial++) {
        ExplicitSystem sys;
        sys.num_states = 2 + rng.next_u64() % 6;
        for (size_t i = 0; i < sys.num_states; i++)
            sys.labels.push_back(Letter(rng.next_u64() % 2));
        sys.init = {0};
        for (uint32_t s = 0; s < sys.num_states; s++)
            for (uint32_t t = 0; t < sys.num_states; t++)
                if (rng.next_u64() % 3 == 0) sys.trans.push_back({s, t});
        BuchiSpec spec;
        spec.num_q = 2;
        spec.init_q = {0};
        spec.props = {"a"};
        spec.trans.push_back({0, 0, false, true, 0});
        spec.trans.push_back({0, 1, false, false, 1});
        spec.trans.push_back({1, 1, true, false, 1});

        // bounded search: fair edge count along paths up to 4|S||Q| steps
        // reaches |S||Q|+1 iff a fair cycle exists
        size_t n = sys.num_states * spec.num_q;
        std::vector<std::vector<std::pair<uint32_t, bool>>> adj(n);
        for (auto [s, s2] : sys.trans)
            for (const auto& t : spec.trans)
                if (spec.matches(t, sys.labels[s]))
                    adj[s * spec.num_q + t.from].push_back(
                        {uint32_t(s2 * spec.num_q + t.to), t.fair});
        // DP over exact fair-count reachability
        std::vector<std::vector<uint8_t>> reach(n, std::vector<uint8_t>(n + 2, 0));
        std::vector<uint8_t> cur(n, 0);
        for (uint32_t q : spec.init_q) cur[0 * spec.num_q + q] = 1;
        bool found = false;
        // BFS layers: track max fair credits seen per node, capped
        std::vector<int> credit(n, -1);
        for (size_t i = 0; i < n; i++)
            if (cur[i]) credit[i] = 0;
        for (size_t step = 0; step < 4 * n * n && !found; step++) {
            std::vector<int> next = credit;
            for (size_t u = 0; u < n; u++) {
                if (credit[u] < 0) continue;
                for (auto [v, fair] : adj[u]) {
                    int c = credit[u] + (fair ? 1 : 0);
                    if (c > int(n) + 1) c = int(n) + 1;
                    if (c > next[v]) next[v] = c;
                }
            }
            if (next == credit) break;
            credit = next;
            for (size_t u = 0; u < n; u++)
                if (credit[u] > int(n)) found = true;
        }
        CHECK(oracle::fair_cycle_exists(sys, spec) == found);
    }
}
