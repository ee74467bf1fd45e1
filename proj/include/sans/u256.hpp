// Copyright 2026 The SANS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SANS_U256_HPP_
#define SANS_U256_HPP_

#include <array>
#include <cstdint>
#include <cstring>
#include <string>

namespace sans {

// 256-bit unsigned integer, four 64-bit limbs, least significant first.
struct U256 {
    std::array<uint64_t, 4> v{0, 0, 0, 0};

    constexpr U256() = default;
    constexpr explicit U256(uint64_t x) : v{x, 0, 0, 0} {}
    constexpr U256(uint64_t l0, uint64_t l1, uint64_t l2, uint64_t l3) : v{l0, l1, l2, l3} {}

    constexpr bool operator==(const U256& o) const = default;

    constexpr bool is_zero() const { return v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0; }

    constexpr bool bit(int i) const { return (v[i / 64] >> (i % 64)) & 1; }

    // Index of the highest set bit, or -1 for zero.
    constexpr int top_bit() const {
        for (int i = 3; i >= 0; --i) {
            if (v[i] == 0) continue;
            int b = 63;
            while (!((v[i] >> b) & 1)) --b;
            return i * 64 + b;
        }
        return -1;
    }

    constexpr bool operator<(const U256& o) const {
        for (int i = 3; i >= 0; --i) {
            if (v[i] != o.v[i]) return v[i] < o.v[i];
        }
        return false;
    }
    constexpr bool operator>=(const U256& o) const { return !(*this < o); }

    // Returns the carry out.
    static constexpr uint64_t add(const U256& a, const U256& b, U256& out) {
        uint64_t carry = 0;
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 s = (unsigned __int128)a.v[i] + b.v[i] + carry;
            out.v[i] = (uint64_t)s;
            carry = (uint64_t)(s >> 64);
        }
        return carry;
    }

    // Returns the borrow out.
    static constexpr uint64_t sub(const U256& a, const U256& b, U256& out) {
        uint64_t borrow = 0;
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 d = (unsigned __int128)a.v[i] - b.v[i] - borrow;
            out.v[i] = (uint64_t)d;
            borrow = (uint64_t)(d >> 64) & 1;
        }
        return borrow;
    }

    constexpr U256 shr1() const {
        U256 r;
        for (int i = 0; i < 4; ++i) {
            r.v[i] = v[i] >> 1;
            if (i < 3) r.v[i] |= v[i + 1] << 63;
        }
        return r;
    }

    // Quotient in place, returns the remainder. d must be nonzero.
    uint64_t divmod_u64(uint64_t d) {
        unsigned __int128 rem = 0;
        for (int i = 3; i >= 0; --i) {
            unsigned __int128 cur = (rem << 64) | v[i];
            v[i] = (uint64_t)(cur / d);
            rem = cur % d;
        }
        return (uint64_t)rem;
    }

    // In-place multiply by small scalar plus addend; both must not overflow 256 bits
    // for the intended use (decimal parsing of canonical values).
    void mul_add_u64(uint64_t mul, uint64_t addend) {
        unsigned __int128 carry = addend;
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 cur = (unsigned __int128)v[i] * mul + carry;
            v[i] = (uint64_t)cur;
            carry = cur >> 64;
        }
    }

    std::array<uint8_t, 32> to_bytes_le() const {
        std::array<uint8_t, 32> out;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 8; ++j) out[i * 8 + j] = (uint8_t)(v[i] >> (8 * j));
        }
        return out;
    }

    static U256 from_bytes_le(const uint8_t* b) {
        U256 r;
        for (int i = 0; i < 4; ++i) {
            uint64_t limb = 0;
            for (int j = 7; j >= 0; --j) limb = (limb << 8) | b[i * 8 + j];
            r.v[i] = limb;
        }
        return r;
    }

    std::string to_dec() const {
        if (is_zero()) return "0";
        U256 t = *this;
        std::string s;
        while (!t.is_zero()) s.push_back((char)('0' + t.divmod_u64(10)));
        return std::string(s.rbegin(), s.rend());
    }

    // Parses a decimal string; returns false on bad characters or overflow past 2^256.
    static bool from_dec(const std::string& s, U256& out) {
        if (s.empty()) return false;
        out = U256();
        for (char c : s) {
            if (c < '0' || c > '9') return false;
            if (out.v[3] > UINT64_MAX / 10) return false;
            out.mul_add_u64(10, (uint64_t)(c - '0'));
        }
        return true;
    }
};

}  // namespace sans

#endif  // SANS_U256_HPP_
