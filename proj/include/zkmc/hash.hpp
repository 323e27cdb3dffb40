#pragma once

#include "zkmc/common.hpp"

namespace zkmc {

Bytes32 sha256(std::span<const uint8_t> data);

// DRBG: SHA-256 in counter mode. Used both for seeded test runs and, keyed
// from the OS, for release randomness. Byte stream is platform-independent.
class Drbg {
public:
    explicit Drbg(std::span<const uint8_t> seed);
    static Drbg from_os_entropy();

    void fill(std::span<uint8_t> out);
    Bytes bytes(size_t n);
    uint64_t next_u64();
    // Independent child stream; parent state is unaffected.
    Drbg derive(const std::string& label) const;

private:
    Bytes32 key_{};
    uint64_t counter_ = 0;
};

// Fiat-Shamir transcript: 32-byte rolling state, label-domain-separated,
// length-prefixed absorption. Copyable for forked sub-protocols.
class Transcript {
public:
    explicit Transcript(const std::string& protocol_label);

    void absorb(const std::string& label, std::span<const uint8_t> data);
    void absorb_u64(const std::string& label, uint64_t v);
    // 64 bytes of challenge material; also advances the state.
    std::array<uint8_t, 64> challenge_bytes(const std::string& label);

    const Bytes32& state() const { return state_; }

private:
    Bytes32 state_{};
};

}  // namespace zkmc
