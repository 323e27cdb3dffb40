#include <fstream>

#include "doctest.h"
#include "zkmc/certlang.hpp"
#include "zkmc/pedersen.hpp"
#include "zkmc/zkxjson.hpp"

using namespace zkmc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    return std::string(std::istreambuf_iterator<char>(f), {});
}

const char* kMinimal = R"(
system {
  var x in [0, 7];
  init: x <= 0, -x <= 0;
  command inc: guard x <= 3 update x' = x + 1;
}
automaton {
  states: q;
  init: q;
  aps:
    low: x <= 3;
  trans:
    q -- true --> q;
}
ranking {
  at q:
    case x <= 100 -> 7;
    case -x <= -101 -> 7;
}
)";

}  // namespace

TEST_CASE("minimal unit parses") {
    auto u = parse_unit(kMinimal, int64_t(DEFAULT_BOUND_M));
    CHECK(u.system.vars.size() == 1);
    CHECK(u.system.commands.size() == 1);
    CHECK(u.system.init.rows() == 2);
    CHECK(u.spec.num_q == 1);
    CHECK(u.spec.trans.size() == 1);
    CHECK(u.ranking.m_at(0) == 2);
}

TEST_CASE("handshake transcription parses with expected shape") {
    auto u = parse_unit(slurp(std::string(ZKMC_SOURCE_DIR) + "/models/handshake.zkgc"),
                        int64_t(DEFAULT_BOUND_M));
    CHECK(u.system.vars.size() == 3);
    CHECK(u.system.commands.size() == 8);
    CHECK(u.spec.trans.size() == 3);
    int fair = 0;
    for (const auto& t : u.spec.trans) fair += t.fair;
    CHECK(fair == 1);
    CHECK(u.ranking.m_at(0) == 4);
    CHECK(u.ranking.l_at(0) == 1);
    CHECK(u.ranking.m_at(1) == 6);
    CHECK(u.ranking.l_at(1) == 1);
}

TEST_CASE("strict inequalities rejected") {
    std::string bad = kMinimal;
    auto pos = bad.find("x <= 3");
    bad.replace(pos, 6, "x < 3");
    try {
        parse_unit(bad, int64_t(DEFAULT_BOUND_M));
        FAIL("expected rejection");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("strict inequalities unsupported") != std::string::npos);
        REQUIRE(!e.diagnostics.empty());
        CHECK(e.diagnostics[0].span.line > 1);
    }
}

TEST_CASE("diagnostics carry spans") {
    try {
        parse_unit("system {\n  var x in [0, 1];\n  init: y <= 0;\n}", 1 << 20);
        FAIL("expected rejection");
    } catch (const ParseError& e) {
        REQUIRE(!e.diagnostics.empty());
        CHECK(e.diagnostics[0].span.line == 3);
        CHECK(e.diagnostics[0].message.find("unknown variable") != std::string::npos);
    }
}

TEST_CASE("coefficient overflow detected at validation") {
    std::string big = R"(
system {
  var x in [0, 1];
  init: 4294967297*x <= 0;
}
automaton { states: q; init: q; aps: trans: }
ranking { }
)";
    CHECK_THROWS_WITH_AS(parse_unit(big, int64_t(DEFAULT_BOUND_M)),
                         doctest::Contains("coefficient overflow"), Error);
}

TEST_CASE("round trip on minimal and handshake") {
    for (const std::string text :
         {std::string(kMinimal),
          slurp(std::string(ZKMC_SOURCE_DIR) + "/models/handshake.zkgc")}) {
        auto u = parse_unit(text, int64_t(DEFAULT_BOUND_M));
        auto printed = print_unit(u);
        auto u2 = parse_unit(printed, int64_t(DEFAULT_BOUND_M));
        CHECK(u2 == u);
        // print is a fixed point after one round
        CHECK(print_unit(u2) == printed);
    }
}

TEST_CASE("round trip property on generated units") {
    Drbg rng(Bytes{33});
    for (int trial = 0; trial < 40; trial++) {
        ParsedUnit u;
        size_t nv = 1 + rng.next_u64() % 3;
        for (size_t i = 0; i < nv; i++)
            u.system.vars.push_back({"v" + std::to_string(i),
                                     int64_t(rng.next_u64() % 5),
                                     int64_t(5 + rng.next_u64() % 5)});
        auto rnd_linsys = [&](size_t rows) {
            LinSys s;
            s.A = IntMat(rows, nv);
            for (auto& c : s.A.a) c = int64_t(rng.next_u64() % 9) - 4;
            for (size_t r = 0; r < rows; r++) s.b.push_back(int64_t(rng.next_u64() % 15) - 7);
            return s;
        };
        u.system.init = rnd_linsys(1 + rng.next_u64() % 3);
        size_t nc = 1 + rng.next_u64() % 3;
        for (size_t c = 0; c < nc; c++) {
            GuardedCommand cmd;
            cmd.name = "c" + std::to_string(c);
            cmd.guard = rnd_linsys(1 + rng.next_u64() % 2);
            for (uint32_t v = 0; v < nv; v++) {
                Update up;
                up.var = v;
                if (rng.next_u64() % 2) {
                    up.is_range = true;
                    up.lo = int64_t(rng.next_u64() % 4);
                    up.hi = up.lo + int64_t(rng.next_u64() % 4);
                } else {
                    up.coeff.assign(nv, 0);
                    up.coeff[rng.next_u64() % nv] = int64_t(rng.next_u64() % 5) - 2;
                    up.constant = int64_t(rng.next_u64() % 7) - 3;
                }
                cmd.updates.push_back(up);
            }
            u.system.commands.push_back(cmd);
        }
        u.q_names = {"qa", "qb"};
        u.spec.num_q = 2;
        u.spec.init_q = {0};
        u.spec.props = {"p0"};
        AtomicPred pred;
        pred.coeff.assign(nv, 0);
        pred.coeff[0] = 1;
        pred.bound = 2;
        u.spec.pred_map = {pred};
        u.spec.trans.push_back({0, 0, false, true, 0});
        u.spec.trans.push_back({0, 1, bool(rng.next_u64() % 2), false, 1});
        u.ranking.finite.resize(2);
        u.ranking.infinite.resize(2);
        for (int q = 0; q < 2; q++) {
            RankCase c;
            auto g = rnd_linsys(1);
            c.C = g.A;
            c.d = g.b;
            c.w.assign(nv, 0);
            c.w[0] = int64_t(rng.next_u64() % 5) - 2;
            c.u = int64_t(rng.next_u64() % 9);
            u.ranking.finite[q].push_back(c);
            if (rng.next_u64() % 2) {
                auto e = rnd_linsys(1);
                u.ranking.infinite[q].push_back({e.A, e.b});
            }
        }
        auto printed = print_unit(u);
        CAPTURE(printed);
        auto u2 = parse_unit(printed, int64_t(DEFAULT_BOUND_M));
        CHECK(u2 == u);
    }
}

TEST_CASE("parser survives arbitrary byte input") {
    Drbg rng(Bytes{34});
    const std::string alphabet = "sy{}[];:,'-<=>*+ \n\tvarinitcommandguardupdate0123456789xq";
    for (int trial = 0; trial < 300; trial++) {
        size_t len = rng.next_u64() % 200;
        std::string junk;
        for (size_t i = 0; i < len; i++) {
            if (trial % 2)
                junk.push_back(char(alphabet[rng.next_u64() % alphabet.size()]));
            else
                junk.push_back(char(rng.next_u64() % 256));
        }
        try {
            parse_unit(junk, 1 << 20);
        } catch (const ParseError&) {
            // structured rejection is the expected outcome
        }
    }
    CHECK(true);
}

TEST_CASE("zkx json round trip") {
    auto text = slurp(std::string(ZKMC_SOURCE_DIR) + "/models/handshake_small.zkx.json");
    auto f = zkx_from_json(text);
    CHECK(f.pub.num_states == 32);
    REQUIRE(f.secret.has_value());
    auto full = zkx_from_json(zkx_to_json(f, true));
    CHECK(full == f);
    // public-only projection drops the secret and still loads
    auto pub = zkx_from_json(zkx_to_json(f, false));
    CHECK(!pub.secret.has_value());
    CHECK(pub.pub == f.pub);
}
