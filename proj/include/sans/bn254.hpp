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
// BN254 pairing groups. G1: y^2 = x^3 + 3 over Fq. G2: y^2 = x^3 + 3/xi over
// Fq2 (sextic D-twist). Jacobian coordinates internally, affine at the edges.

#ifndef SANS_BN254_HPP_
#define SANS_BN254_HPP_

#include <array>
#include <optional>
#include <vector>

#include "sans/tower.hpp"

namespace sans::bn254 {

// Curve point templated over the coordinate field. FF is Fq for G1, Fq2 for G2.
template <typename FF>
struct Affine {
    FF x = FF::zero();
    FF y = FF::zero();
    bool infinity = true;

    bool operator==(const Affine& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }

    Affine neg() const { return infinity ? *this : Affine{x, -y, false}; }
};

template <typename FF>
struct Jacobian {
    FF x = FF::one();
    FF y = FF::one();
    FF z = FF::zero();  // z == 0 encodes infinity

    bool is_infinity() const { return z.is_zero(); }
};

using G1Affine = Affine<Fq>;
using G2Affine = Affine<Fq2>;
using G1 = Jacobian<Fq>;
using G2 = Jacobian<Fq2>;

const Fq& g1_b();        // 3
const Fq2& g2_b();       // 3 / xi
const G1Affine& g1_generator();
const G2Affine& g2_generator();

template <typename FF> const FF& curve_b();

template <typename FF>
bool on_curve(const Affine<FF>& p) {
    if (p.infinity) return true;
    return p.y.square() == p.x.square() * p.x + curve_b<FF>();
}

template <typename FF>
Jacobian<FF> to_jacobian(const Affine<FF>& p) {
    if (p.infinity) return {};
    return {p.x, p.y, FF::one()};
}

template <typename FF>
Affine<FF> to_affine(const Jacobian<FF>& p) {
    if (p.is_infinity()) return {};
    FF zinv = p.z.inverse();
    FF zinv2 = zinv.square();
    return {p.x * zinv2, p.y * zinv2 * zinv, false};
}

template <typename FF>
Jacobian<FF> dbl(const Jacobian<FF>& p) {
    if (p.is_infinity()) return p;
    FF a = p.x.square();
    FF b = p.y.square();
    FF c = b.square();
    FF t = (p.x + b).square() - a - c;
    FF d = t + t;
    FF e = a + a + a;
    FF f = e.square();
    FF x3 = f - (d + d);
    FF c8 = c + c;
    c8 = c8 + c8;
    c8 = c8 + c8;
    FF y3 = e * (d - x3) - c8;
    FF z3 = (p.y * p.z);
    return {x3, y3, z3 + z3};
}

template <typename FF>
Jacobian<FF> add(const Jacobian<FF>& p, const Jacobian<FF>& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    FF z1z1 = p.z.square();
    FF z2z2 = q.z.square();
    FF u1 = p.x * z2z2;
    FF u2 = q.x * z1z1;
    FF s1 = p.y * q.z * z2z2;
    FF s2 = q.y * p.z * z1z1;
    if (u1 == u2) {
        if (s1 == s2) return dbl(p);
        return {};  // p == -q
    }
    FF h = u2 - u1;
    FF i = (h + h).square();
    FF j = h * i;
    FF r = s2 - s1;
    r = r + r;
    FF v = u1 * i;
    FF x3 = r.square() - j - (v + v);
    FF s1j = s1 * j;
    FF y3 = r * (v - x3) - (s1j + s1j);
    FF z3 = ((p.z + q.z).square() - z1z1 - z2z2) * h;
    return {x3, y3, z3};
}

template <typename FF>
Jacobian<FF> add_mixed(const Jacobian<FF>& p, const Affine<FF>& q) {
    return add(p, to_jacobian(q));
}

template <typename FF>
Jacobian<FF> mul(const Jacobian<FF>& p, const U256& scalar) {
    Jacobian<FF> acc;
    for (int i = scalar.top_bit(); i >= 0; --i) {
        acc = dbl(acc);
        if (scalar.bit(i)) acc = add(acc, p);
    }
    return acc;
}

template <typename FF>
Jacobian<FF> mul(const Affine<FF>& p, const U256& scalar) {
    return mul(to_jacobian(p), scalar);
}

inline G1 mul(const G1Affine& p, const Fr& k) { return mul(p, k.to_u256()); }
inline G2 mul(const G2Affine& p, const Fr& k) { return mul(p, k.to_u256()); }

// G1 has cofactor 1, so on-curve implies in-group. G2 needs the full
// order check.
bool in_g1(const G1Affine& p);
bool in_g2(const G2Affine& p);

// Compressed encodings: the x coordinate little-endian with the high bit of
// the final byte carrying the sign of y (set = lexicographically larger root)
// and the next bit flagging infinity. 32 bytes for G1, 64 for G2.
std::array<uint8_t, 32> compress_g1(const G1Affine& p);
std::array<uint8_t, 64> compress_g2(const G2Affine& p);
std::optional<G1Affine> decompress_g1(std::span<const uint8_t> bytes);  // validates in_g1
std::optional<G2Affine> decompress_g2(std::span<const uint8_t> bytes);  // validates in_g2

// Uncompressed (x, y) encodings used inside parameter files.
std::array<uint8_t, 64> encode_g1(const G1Affine& p);
std::array<uint8_t, 128> encode_g2(const G2Affine& p);
std::optional<G1Affine> decode_g1(std::span<const uint8_t> bytes);
std::optional<G2Affine> decode_g2(std::span<const uint8_t> bytes);

}  // namespace sans::bn254

#endif  // SANS_BN254_HPP_
