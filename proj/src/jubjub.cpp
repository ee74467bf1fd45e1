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

#include "sans/jubjub.hpp"

#include <cassert>

#include "sans/errors.hpp"
#include "sans/poseidon.hpp"

namespace sans::jubjub {

namespace {

// Key-derivation domain tags: scalar vs nonce-prefix halves of the key.
const uint64_t kTagScalar = 1;
const uint64_t kTagPrefix = 2;

Point select(bool take_a, const Point& a, const Point& b) {
    // Limb-level mask select; no data-dependent branch.
    uint64_t mask = take_a ? ~0ULL : 0ULL;
    Point out;
    U256 ax = a.x.mont_repr(), bx = b.x.mont_repr();
    U256 ay = a.y.mont_repr(), by = b.y.mont_repr();
    U256 ox, oy;
    for (int i = 0; i < 4; ++i) {
        ox.v[i] = (ax.v[i] & mask) | (bx.v[i] & ~mask);
        oy.v[i] = (ay.v[i] & mask) | (by.v[i] & ~mask);
    }
    out.x = Fr::from_mont_repr(ox);
    out.y = Fr::from_mont_repr(oy);
    return out;
}

}  // namespace

Fr curve_a() { return Fr::from_u64(168700); }
Fr curve_d() { return Fr::from_u64(168696); }

const Point& base8() {
    static const Point b{
        Fr::from_dec("5299619240641551281634865583518297030282874472190772894086521144482721001553").value(),
        Fr::from_dec("16950150798460657717958625567821834550301663161624707787222815936182638968203").value()};
    return b;
}

bool on_curve(const Point& p) {
    Fr x2 = p.x.square(), y2 = p.y.square();
    return curve_a() * x2 + y2 == Fr::one() + curve_d() * x2 * y2;
}

Point add(const Point& p, const Point& q) {
    // Complete twisted Edwards addition.
    Fr x1x2 = p.x * q.x;
    Fr y1y2 = p.y * q.y;
    Fr x1y2 = p.x * q.y;
    Fr y1x2 = p.y * q.x;
    Fr dxy = curve_d() * x1x2 * y1y2;
    Fr x3 = (x1y2 + y1x2) * (Fr::one() + dxy).inverse();
    Fr y3 = (y1y2 - curve_a() * x1x2) * (Fr::one() - dxy).inverse();
    return {x3, y3};
}

Point dbl(const Point& p) { return add(p, p); }

Point negate(const Point& p) { return {-p.x, p.y}; }

Point mul(const Point& p, const U256& scalar) {
    Point acc{};  // identity
    for (int i = 255; i >= 0; --i) {
        acc = dbl(acc);
        Point sum = add(acc, p);
        acc = select(scalar.bit(i), sum, acc);
    }
    return acc;
}

bool in_subgroup(const Point& p) {
    if (!on_curve(p)) return false;
    return mul(p, SubOrderParams::modulus).is_identity();
}

SigningKeypair keygen(const std::array<uint8_t, 32>& seed) {
    // Split the seed into two 128-bit field elements and derive the scalar
    // and prefix halves through domain-separated hashes.
    uint8_t lo[32] = {0}, hi[32] = {0};
    std::copy(seed.begin(), seed.begin() + 16, lo);
    std::copy(seed.begin() + 16, seed.end(), hi);
    Fr s0 = *Fr::from_bytes(std::span<const uint8_t>(lo, 32));
    Fr s1 = *Fr::from_bytes(std::span<const uint8_t>(hi, 32));

    SigningKeypair kp;
    Fr raw = poseidon_hash({s0, s1, Fr::from_u64(kTagScalar)});
    kp.sk = Scalar::from_u256(raw.to_u256());
    assert(!kp.sk.is_zero());
    kp.prefix = poseidon_hash({s0, s1, Fr::from_u64(kTagPrefix)});
    kp.pk = mul(base8(), kp.sk);
    return kp;
}

Fr challenge(const Point& r, const Point& pk, const Fr& msg) {
    Fr bind = poseidon_hash({r.x, r.y, pk.x, pk.y});
    return poseidon_hash({bind, msg});
}

Signature sign(const SigningKeypair& kp, const Fr& msg) {
    Fr k_raw = poseidon_hash({kp.prefix, msg});
    Scalar k = Scalar::from_u256(k_raw.to_u256());
    Point r = mul(base8(), k);
    Fr e = challenge(r, kp.pk, msg);
    Scalar s = k + Scalar::from_u256(e.to_u256()) * kp.sk;
    return {r, s};
}

bool verify(const Point& pk, const Fr& msg, const Signature& sig) {
    if (pk.is_identity() || !in_subgroup(pk)) throw Error(Errc::malformed_point, "bad public key");
    if (!in_subgroup(sig.r)) throw Error(Errc::malformed_point, "bad signature R");
    Fr e = challenge(sig.r, pk, msg);
    Point lhs = mul(base8(), sig.s);
    Point rhs = add(sig.r, mul(pk, Scalar::from_u256(e.to_u256())));
    return lhs == rhs;
}

std::array<uint8_t, 64> encode_point(const Point& p) {
    std::array<uint8_t, 64> out;
    auto xb = p.x.to_bytes(), yb = p.y.to_bytes();
    std::copy(xb.begin(), xb.end(), out.begin());
    std::copy(yb.begin(), yb.end(), out.begin() + 32);
    return out;
}

std::optional<Point> decode_point(std::span<const uint8_t> bytes) {
    if (bytes.size() != 64) return std::nullopt;
    auto x = Fr::from_bytes(bytes.subspan(0, 32));
    auto y = Fr::from_bytes(bytes.subspan(32, 32));
    if (!x || !y) return std::nullopt;
    Point p{*x, *y};
    if (!on_curve(p)) return std::nullopt;
    return p;
}

std::array<uint8_t, 96> encode_signature(const Signature& sig) {
    std::array<uint8_t, 96> out;
    auto rb = encode_point(sig.r);
    auto sb = sig.s.to_bytes();
    std::copy(rb.begin(), rb.end(), out.begin());
    std::copy(sb.begin(), sb.end(), out.begin() + 64);
    return out;
}

std::optional<Signature> decode_signature(std::span<const uint8_t> bytes) {
    if (bytes.size() != 96) return std::nullopt;
    auto r = decode_point(bytes.subspan(0, 64));
    if (!r) return std::nullopt;
    auto s = Scalar::from_bytes(bytes.subspan(64, 32));  // rejects s >= subgroup order
    if (!s) return std::nullopt;
    return Signature{*r, *s};
}

Token sample_token(Rng& rng) {
    uint8_t buf[32] = {0};
    rng.fill(std::span<uint8_t>(buf, 31));  // top byte stays zero: value < 2^248
    return Token{*Fr::from_bytes(std::span<const uint8_t>(buf, 32))};
}

}  // namespace sans::jubjub
