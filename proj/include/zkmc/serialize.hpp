#pragma once

#include "zkmc/common.hpp"

namespace zkmc {

// Little-endian binary writer/reader for the bundle and SRS files.
// Every artifact starts with a version byte.
class Writer {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u32(uint32_t v) { append_u32(buf_, v); }
    void u64(uint64_t v) { append_u64(buf_, v); }
    void raw(std::span<const uint8_t> b) { append(buf_, b); }
    void blob(std::span<const uint8_t> b) {
        u64(b.size());
        raw(b);
    }
    void str(const std::string& s) {
        blob(std::span(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
    }
    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

class Reader {
public:
    explicit Reader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8() { return take(1)[0]; }
    uint32_t u32() {
        auto b = take(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; i++) v |= uint32_t(b[i]) << (8 * i);
        return v;
    }
    uint64_t u64() {
        auto b = take(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; i++) v |= uint64_t(b[i]) << (8 * i);
        return v;
    }
    std::span<const uint8_t> raw(size_t n) { return take(n); }
    std::span<const uint8_t> blob() {
        uint64_t n = u64();
        if (n > remaining()) throw Error("truncated blob");
        return take(n);
    }
    std::string str() {
        auto b = blob();
        return std::string(reinterpret_cast<const char*>(b.data()), b.size());
    }
    size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return remaining() == 0; }

private:
    std::span<const uint8_t> take(size_t n) {
        if (n > remaining()) throw Error("truncated input");
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

Bytes read_file(const std::string& path);
void write_file(const std::string& path, std::span<const uint8_t> data);

}  // namespace zkmc
