#include "zkmc/hash.hpp"

#include <openssl/sha.h>

#include <fstream>

namespace zkmc {

Bytes32 sha256(std::span<const uint8_t> data) {
    Bytes32 out;
    SHA256(data.data(), data.size(), out.data());
    return out;
}

Drbg::Drbg(std::span<const uint8_t> seed) {
    Bytes material;
    const std::string tag = "zkmc.drbg.v1";
    append(material, std::span(reinterpret_cast<const uint8_t*>(tag.data()), tag.size()));
    append(material, seed);
    key_ = sha256(material);
}

Drbg Drbg::from_os_entropy() {
    std::array<uint8_t, 48> seed{};
    std::ifstream urandom("/dev/urandom", std::ios::binary);
    if (!urandom.read(reinterpret_cast<char*>(seed.data()), seed.size()))
        throw Error("cannot read OS entropy");
    return Drbg(seed);
}

void Drbg::fill(std::span<uint8_t> out) {
    size_t off = 0;
    while (off < out.size()) {
        Bytes block(key_.begin(), key_.end());
        append_u64(block, counter_++);
        Bytes32 h = sha256(block);
        size_t n = std::min<size_t>(32, out.size() - off);
        std::memcpy(out.data() + off, h.data(), n);
        off += n;
    }
}

Bytes Drbg::bytes(size_t n) {
    Bytes out(n);
    fill(out);
    return out;
}

uint64_t Drbg::next_u64() {
    std::array<uint8_t, 8> b{};
    fill(b);
    uint64_t v = 0;
    for (int i = 0; i < 8; i++) v |= uint64_t(b[i]) << (8 * i);
    return v;
}

Drbg Drbg::derive(const std::string& label) const {
    Bytes material(key_.begin(), key_.end());
    append_u32(material, uint32_t(label.size()));
    append(material, std::span(reinterpret_cast<const uint8_t*>(label.data()), label.size()));
    Bytes32 k = sha256(material);
    return Drbg(k);
}

Transcript::Transcript(const std::string& protocol_label) {
    Bytes material;
    const std::string tag = "zkmc.transcript.v1";
    append_u32(material, uint32_t(tag.size()));
    append(material, std::span(reinterpret_cast<const uint8_t*>(tag.data()), tag.size()));
    append_u32(material, uint32_t(protocol_label.size()));
    append(material,
           std::span(reinterpret_cast<const uint8_t*>(protocol_label.data()), protocol_label.size()));
    state_ = sha256(material);
}

void Transcript::absorb(const std::string& label, std::span<const uint8_t> data) {
    Bytes material(state_.begin(), state_.end());
    material.push_back(0x01);
    append_u32(material, uint32_t(label.size()));
    append(material, std::span(reinterpret_cast<const uint8_t*>(label.data()), label.size()));
    append_u64(material, data.size());
    append(material, data);
    state_ = sha256(material);
}

void Transcript::absorb_u64(const std::string& label, uint64_t v) {
    Bytes b;
    append_u64(b, v);
    absorb(label, b);
}

std::array<uint8_t, 64> Transcript::challenge_bytes(const std::string& label) {
    Bytes material(state_.begin(), state_.end());
    material.push_back(0x02);
    append_u32(material, uint32_t(label.size()));
    append(material, std::span(reinterpret_cast<const uint8_t*>(label.data()), label.size()));
    Bytes32 lo = sha256(material);
    material.push_back(0x03);
    Bytes32 hi = sha256(material);
    // advance state so successive challenges differ
    material.push_back(0x04);
    state_ = sha256(material);

    std::array<uint8_t, 64> out{};
    std::memcpy(out.data(), lo.data(), 32);
    std::memcpy(out.data() + 32, hi.data(), 32);
    return out;
}

}  // namespace zkmc
