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
//
// Prime-field arithmetic in Montgomery form over 4x64-bit limbs.
// Instantiated for the two BN254 fields: Fr (the scalar field, which is the
// native field of every circuit value and of the embedded signature curve)
// and Fq (the base field of the pairing groups).

#ifndef SANS_FF_HPP_
#define SANS_FF_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sans/u256.hpp"

namespace sans {

namespace detail {

// -p^{-1} mod 2^64 by Newton iteration (p odd).
constexpr uint64_t mont_word_inv(uint64_t p0) {
    uint64_t inv = 1;
    for (int i = 0; i < 6; ++i) inv *= 2 - p0 * inv;
    return ~inv + 1;  // negate mod 2^64
}

constexpr U256 add_mod(const U256& a, const U256& b, const U256& m) {
    U256 s;
    uint64_t carry = U256::add(a, b, s);
    if (carry || s >= m) {
        U256 t;
        U256::sub(s, m, t);
        return t;
    }
    return s;
}

// 2^512 mod m, by 512 modular doublings of 1.
constexpr U256 compute_r2(const U256& m) {
    U256 acc(1);
    for (int i = 0; i < 512; ++i) acc = add_mod(acc, acc, m);
    return acc;
}

}  // namespace detail

// Montgomery-form element of the prime field defined by Params::modulus.
template <typename Params>
class Fp {
  public:
    static constexpr U256 kModulus = Params::modulus;
    static constexpr uint64_t kInv = detail::mont_word_inv(Params::modulus.v[0]);
    static constexpr U256 kR2 = detail::compute_r2(Params::modulus);

    constexpr Fp() = default;

    static Fp zero() { return Fp(); }
    static Fp one() {
        // R mod p = mont(1)
        return from_u256(U256(1));
    }

    static Fp from_u64(uint64_t x) { return from_u256(U256(x)); }

    static Fp from_u256(const U256& x) {
        Fp r;
        r.m_ = mont_mul(x, kR2);
        return r;
    }

    // Canonical (non-Montgomery) integer value.
    U256 to_u256() const { return mont_reduce_wide(m_); }

    bool is_zero() const { return m_.is_zero(); }
    bool operator==(const Fp& o) const = default;

    Fp operator+(const Fp& o) const {
        Fp r;
        r.m_ = detail::add_mod(m_, o.m_, kModulus);
        return r;
    }
    Fp operator-(const Fp& o) const {
        Fp r;
        U256 t;
        if (U256::sub(m_, o.m_, t)) {
            U256 u;
            U256::add(t, kModulus, u);
            t = u;
        }
        r.m_ = t;
        return r;
    }
    Fp operator-() const { return zero() - *this; }
    Fp operator*(const Fp& o) const {
        Fp r;
        r.m_ = mont_mul(m_, o.m_);
        return r;
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp square() const { return *this * *this; }

    Fp dbl() const { return *this + *this; }

    Fp pow(const U256& e) const {
        Fp acc = one();
        int top = e.top_bit();
        for (int i = top; i >= 0; --i) {
            acc = acc.square();
            if (e.bit(i)) acc = acc * *this;
        }
        return acc;
    }

    // Multiplicative inverse; zero maps to zero.
    Fp inverse() const {
        U256 e;
        U256::sub(kModulus, U256(2), e);
        return pow(e);
    }

    // Square root for moduli = 3 mod 4 (a single exponentiation by (p+1)/4).
    std::optional<Fp> sqrt() const {
        static_assert(Params::modulus.v[0] % 4 == 3);
        U256 e;
        U256::add(kModulus, U256(1), e);
        e = e.shr1().shr1();
        Fp r = pow(e);
        if (r * r == *this) return r;
        return std::nullopt;
    }

    // 32-byte little-endian canonical encoding.
    std::array<uint8_t, 32> to_bytes() const { return to_u256().to_bytes_le(); }

    // Rejects encodings >= modulus.
    static std::optional<Fp> from_bytes(std::span<const uint8_t> b) {
        if (b.size() != 32) return std::nullopt;
        U256 x = U256::from_bytes_le(b.data());
        if (x >= kModulus) return std::nullopt;
        return from_u256(x);
    }

    std::string to_dec() const { return to_u256().to_dec(); }

    static std::optional<Fp> from_dec(const std::string& s) {
        U256 x;
        if (!U256::from_dec(s, x)) return std::nullopt;
        if (x >= kModulus) return std::nullopt;
        return from_u256(x);
    }

    // Raw Montgomery limbs; only for serialization of internal tables.
    const U256& mont_repr() const { return m_; }
    static Fp from_mont_repr(const U256& m) {
        Fp r;
        r.m_ = m;
        return r;
    }

  private:
    U256 m_{};  // Montgomery form: value * R mod p

    // t (512 bits, low half given separately) -> t * R^{-1} mod p. Operand-scanning
    // Montgomery reduction over the full product.
    static U256 mont_mul(const U256& a, const U256& b) {
        uint64_t t[8] = {0};
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 carry = 0;
            for (int j = 0; j < 4; ++j) {
                unsigned __int128 cur = (unsigned __int128)a.v[i] * b.v[j] + t[i + j] + carry;
                t[i + j] = (uint64_t)cur;
                carry = cur >> 64;
            }
            t[i + 4] = (uint64_t)carry;
        }
        return reduce_512(t);
    }

    static U256 mont_reduce_wide(const U256& lo) {
        uint64_t t[8] = {lo.v[0], lo.v[1], lo.v[2], lo.v[3], 0, 0, 0, 0};
        return reduce_512(t);
    }

    static U256 reduce_512(uint64_t t[8]) {
        uint64_t extra = 0;
        for (int i = 0; i < 4; ++i) {
            uint64_t m = t[i] * kInv;
            unsigned __int128 carry = 0;
            for (int j = 0; j < 4; ++j) {
                unsigned __int128 cur = (unsigned __int128)m * kModulus.v[j] + t[i + j] + carry;
                t[i + j] = (uint64_t)cur;
                carry = cur >> 64;
            }
            for (int j = i + 4; j < 8 && carry; ++j) {
                unsigned __int128 cur = (unsigned __int128)t[j] + carry;
                t[j] = (uint64_t)cur;
                carry = cur >> 64;
            }
            extra += (uint64_t)carry;
        }
        U256 r(t[4], t[5], t[6], t[7]);
        if (extra || r >= kModulus) {
            U256 s;
            U256::sub(r, kModulus, s);
            r = s;
        }
        return r;
    }
};

// BN254 scalar field r = 21888242871839275222246405745257275088548364400416034343698204186575808495617.
struct FrParams {
    static constexpr U256 modulus{0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                  0xb85045b68181585dULL, 0x30644e72e131a029ULL};
    // Smallest multiplicative generator; r - 1 = 2^28 * odd.
    static constexpr uint64_t generator = 5;
    static constexpr int two_adicity = 28;
};

// BN254 base field q = 21888242871839275222246405745257275088696311157297823662689037894645226208583.
struct FqParams {
    static constexpr U256 modulus{0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL,
                                  0xb85045b68181585dULL, 0x30644e72e131a029ULL};
};

using Fr = Fp<FrParams>;
using Fq = Fp<FqParams>;

}  // namespace sans

#endif  // SANS_FF_HPP_
