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

#include "sans/bn254.hpp"

namespace sans::bn254 {

namespace {

constexpr uint8_t kFlagSign = 0x80;
constexpr uint8_t kFlagInfinity = 0x40;

Fq fq_dec(const char* s) { return Fq::from_dec(s).value(); }

// y is "positive" when it is the lexicographically larger of {y, -y}.
bool y_sign(const Fq& y) {
    U256 v = y.to_u256();
    U256 neg;
    U256::sub(FqParams::modulus, v, neg);
    return !v.is_zero() && neg < v;
}

bool y_sign(const Fq2& y) {
    U256 v1 = y.c1.to_u256();
    if (!v1.is_zero()) {
        U256 neg;
        U256::sub(FqParams::modulus, v1, neg);
        return neg < v1;
    }
    return y_sign(y.c0);
}

template <typename FF>
std::optional<FF> solve_y(const FF& x, bool sign) {
    FF rhs = x.square() * x + curve_b<FF>();
    auto y = rhs.sqrt();
    if (!y) return std::nullopt;
    if (y_sign(*y) != sign) return -*y;
    return y;
}

}  // namespace

const Fq& g1_b() {
    static const Fq b = Fq::from_u64(3);
    return b;
}

const Fq2& g2_b() {
    static const Fq2 b = xi().inverse().scale(Fq::from_u64(3));
    return b;
}

template <> const Fq& curve_b<Fq>() { return g1_b(); }
template <> const Fq2& curve_b<Fq2>() { return g2_b(); }

const G1Affine& g1_generator() {
    static const G1Affine g{Fq::from_u64(1), Fq::from_u64(2), false};
    return g;
}

const G2Affine& g2_generator() {
    static const G2Affine g{
        Fq2{fq_dec("10857046999023057135944570762232829481370756359578518086990519993285655852781"),
            fq_dec("11559732032986387107991004021392285783925812861821192530917403151452391805634")},
        Fq2{fq_dec("8495653923123431417604973247489272438418190587263600148770280649306958101930"),
            fq_dec("4082367875863433681332203403145435568316851327593401208105741076214120093531")},
        false};
    return g;
}

bool in_g1(const G1Affine& p) { return on_curve(p); }

bool in_g2(const G2Affine& p) {
    if (!on_curve(p)) return false;
    if (p.infinity) return true;
    return mul(p, FrParams::modulus).is_infinity();
}

std::array<uint8_t, 32> compress_g1(const G1Affine& p) {
    std::array<uint8_t, 32> out{};
    if (p.infinity) {
        out[31] = kFlagInfinity;
        return out;
    }
    out = p.x.to_bytes();
    if (y_sign(p.y)) out[31] |= kFlagSign;
    return out;
}

std::optional<G1Affine> decompress_g1(std::span<const uint8_t> bytes) {
    if (bytes.size() != 32) return std::nullopt;
    std::array<uint8_t, 32> b;
    std::copy(bytes.begin(), bytes.end(), b.begin());
    bool sign = b[31] & kFlagSign;
    bool inf = b[31] & kFlagInfinity;
    b[31] &= 0x3f;
    if (inf) {
        // Canonical infinity is all-zero apart from the flag.
        if (sign) return std::nullopt;
        for (uint8_t byte : b) {
            if (byte != 0) return std::nullopt;
        }
        return G1Affine{};
    }
    auto x = Fq::from_bytes(b);
    if (!x) return std::nullopt;
    auto y = solve_y(*x, sign);
    if (!y) return std::nullopt;
    return G1Affine{*x, *y, false};
}

std::array<uint8_t, 64> compress_g2(const G2Affine& p) {
    std::array<uint8_t, 64> out{};
    if (p.infinity) {
        out[63] = kFlagInfinity;
        return out;
    }
    auto c0 = p.x.c0.to_bytes(), c1 = p.x.c1.to_bytes();
    std::copy(c0.begin(), c0.end(), out.begin());
    std::copy(c1.begin(), c1.end(), out.begin() + 32);
    if (y_sign(p.y)) out[63] |= kFlagSign;
    return out;
}

std::optional<G2Affine> decompress_g2(std::span<const uint8_t> bytes) {
    if (bytes.size() != 64) return std::nullopt;
    std::array<uint8_t, 64> b;
    std::copy(bytes.begin(), bytes.end(), b.begin());
    bool sign = b[63] & kFlagSign;
    bool inf = b[63] & kFlagInfinity;
    b[63] &= 0x3f;
    if (inf) {
        if (sign) return std::nullopt;
        for (uint8_t byte : b) {
            if (byte != 0) return std::nullopt;
        }
        return G2Affine{};
    }
    auto c0 = Fq::from_bytes(std::span<const uint8_t>(b).subspan(0, 32));
    auto c1 = Fq::from_bytes(std::span<const uint8_t>(b).subspan(32, 32));
    if (!c0 || !c1) return std::nullopt;
    Fq2 x{*c0, *c1};
    auto y = solve_y(x, sign);
    if (!y) return std::nullopt;
    G2Affine p{x, *y, false};
    if (!in_g2(p)) return std::nullopt;
    return p;
}

std::array<uint8_t, 64> encode_g1(const G1Affine& p) {
    std::array<uint8_t, 64> out{};
    if (p.infinity) {
        out[63] = kFlagInfinity;
        return out;
    }
    auto xb = p.x.to_bytes(), yb = p.y.to_bytes();
    std::copy(xb.begin(), xb.end(), out.begin());
    std::copy(yb.begin(), yb.end(), out.begin() + 32);
    return out;
}

std::optional<G1Affine> decode_g1(std::span<const uint8_t> bytes) {
    if (bytes.size() != 64) return std::nullopt;
    if (bytes[63] & kFlagInfinity) {
        for (size_t i = 0; i < 63; ++i) {
            if (bytes[i] != 0) return std::nullopt;
        }
        return G1Affine{};
    }
    auto x = Fq::from_bytes(bytes.subspan(0, 32));
    auto y = Fq::from_bytes(bytes.subspan(32, 32));
    if (!x || !y) return std::nullopt;
    G1Affine p{*x, *y, false};
    if (!on_curve(p)) return std::nullopt;
    return p;
}

std::array<uint8_t, 128> encode_g2(const G2Affine& p) {
    std::array<uint8_t, 128> out{};
    if (p.infinity) {
        out[127] = kFlagInfinity;
        return out;
    }
    auto a = p.x.c0.to_bytes(), b = p.x.c1.to_bytes();
    auto c = p.y.c0.to_bytes(), d = p.y.c1.to_bytes();
    std::copy(a.begin(), a.end(), out.begin());
    std::copy(b.begin(), b.end(), out.begin() + 32);
    std::copy(c.begin(), c.end(), out.begin() + 64);
    std::copy(d.begin(), d.end(), out.begin() + 96);
    return out;
}

std::optional<G2Affine> decode_g2(std::span<const uint8_t> bytes) {
    if (bytes.size() != 128) return std::nullopt;
    if (bytes[127] & kFlagInfinity) {
        for (size_t i = 0; i < 127; ++i) {
            if (bytes[i] != 0) return std::nullopt;
        }
        return G2Affine{};
    }
    auto a = Fq::from_bytes(bytes.subspan(0, 32));
    auto b = Fq::from_bytes(bytes.subspan(32, 32));
    auto c = Fq::from_bytes(bytes.subspan(64, 32));
    auto d = Fq::from_bytes(bytes.subspan(96, 32));
    if (!a || !b || !c || !d) return std::nullopt;
    G2Affine p{Fq2{*a, *b}, Fq2{*c, *d}, false};
    if (!on_curve(p)) return std::nullopt;
    return p;
}

}  // namespace sans::bn254
