#include "zkmc/ops_counter.hpp"

namespace zkmc::ops {

Counters& counters() {
    static Counters c;
    return c;
}

Snapshot snapshot() {
    auto& c = counters();
    return {c.group_ops.load(), c.pairings.load(), c.field_muls.load()};
}

void reset() {
    auto& c = counters();
    c.group_ops = 0;
    c.pairings = 0;
    c.field_muls = 0;
}

}  // namespace zkmc::ops
