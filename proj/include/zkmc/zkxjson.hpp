#pragma once

#include "zkmc/model.hpp"

namespace zkmc {

// Public certificate data of the explicit scheme: everything except the
// initial states and the transition relation.
struct ExplicitCert {
    size_t num_states = 0;
    std::vector<Letter> labels;
    BuchiSpec spec;
    ExplicitRanking ranking;
    std::vector<std::string> q_names;

    bool operator==(const ExplicitCert& o) const = default;
};

struct ExplicitSecret {
    std::vector<uint32_t> init;
    std::vector<std::pair<uint32_t, uint32_t>> trans;

    bool operator==(const ExplicitSecret& o) const = default;
};

struct ZkxFile {
    ExplicitCert pub;
    std::optional<ExplicitSecret> secret;

    ExplicitSystem system() const;  // requires the secret part
    bool operator==(const ZkxFile& o) const = default;
};

ZkxFile zkx_from_json(const std::string& text);
std::string zkx_to_json(const ZkxFile& file, bool include_secret);

}  // namespace zkmc
