// Copyright 2026 The cliffordlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffordlearn {

// Fixed-length bit vector over GF(2), packed into 64-bit words.
//
// String form is normative for all file formats: character k of the string
// is bit k, so index 0 is the leftmost character.
class BitVec {
  public:
    BitVec() = default;

    explicit BitVec(size_t len) : len_(len), w_(word_count(len), 0) {}

    static BitVec from_string(const std::string& s) {
        BitVec v(s.size());
        for (size_t i = 0; i < s.size(); i++) {
            if (s[i] == '1') {
                v.set(i, true);
            } else if (s[i] != '0') {
                throw std::invalid_argument("bit string must contain only '0' and '1'");
            }
        }
        return v;
    }

    static BitVec random(size_t len, std::mt19937_64& rng) {
        BitVec v(len);
        for (auto& w : v.w_) {
            w = rng();
        }
        v.mask_top();
        return v;
    }

    // Interprets an integer as a bit string with bit 0 most significant,
    // matching lexicographic order of the serialized strings. Used to index
    // dense probability tables.
    static BitVec from_index_msb0(size_t len, uint64_t index) {
        if (len > 63) {
            throw std::invalid_argument("index form limited to 63 bits");
        }
        BitVec v(len);
        for (size_t i = 0; i < len; i++) {
            v.set(i, (index >> (len - 1 - i)) & 1u);
        }
        return v;
    }

    size_t size() const { return len_; }

    bool get(size_t i) const {
        check_index(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(size_t i, bool v) {
        check_index(i);
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) {
            w_[i >> 6] |= m;
        } else {
            w_[i >> 6] &= ~m;
        }
    }

    BitVec& operator^=(const BitVec& other) {
        check_same_len(other);
        for (size_t k = 0; k < w_.size(); k++) {
            w_[k] ^= other.w_[k];
        }
        return *this;
    }

    BitVec operator^(const BitVec& other) const {
        BitVec r = *this;
        r ^= other;
        return r;
    }

    // Inner product mod 2.
    bool dot(const BitVec& other) const {
        check_same_len(other);
        uint64_t acc = 0;
        for (size_t k = 0; k < w_.size(); k++) {
            acc ^= w_[k] & other.w_[k];
        }
        return std::popcount(acc) & 1u;
    }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : w_) {
            c += std::popcount(w);
        }
        return c;
    }

    bool none() const {
        for (uint64_t w : w_) {
            if (w) {
                return false;
            }
        }
        return true;
    }

    bool any() const { return !none(); }

    uint64_t to_index_msb0() const {
        if (len_ > 63) {
            throw std::invalid_argument("index form limited to 63 bits");
        }
        uint64_t r = 0;
        for (size_t i = 0; i < len_; i++) {
            r = (r << 1) | uint64_t{get(i)};
        }
        return r;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (size_t i = 0; i < len_; i++) {
            if (get(i)) {
                s[i] = '1';
            }
        }
        return s;
    }

    const std::vector<uint64_t>& words() const { return w_; }

    bool operator==(const BitVec& other) const {
        return len_ == other.len_ && w_ == other.w_;
    }

    bool operator!=(const BitVec& other) const { return !(*this == other); }

  private:
    static size_t word_count(size_t len) { return (len + 63) >> 6; }

    void check_index(size_t i) const {
        if (i >= len_) {
            throw std::out_of_range("bit index out of range");
        }
    }

    void check_same_len(const BitVec& other) const {
        if (len_ != other.len_) {
            throw std::invalid_argument("bit vector length mismatch");
        }
    }

    void mask_top() {
        if (len_ & 63) {
            w_.back() &= (uint64_t{1} << (len_ & 63)) - 1;
        }
    }

    size_t len_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace cliffordlearn
