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
// Baby Jubjub: the twisted Edwards curve a*x^2 + y^2 = 1 + d*x^2*y^2 over the
// BN254 scalar field (a = 168700, d = 168696), with EdDSA keying, signing and
// verification in its prime-order subgroup. The complete addition law holds
// for every pair of curve points, which is what makes the curve cheap to
// express inside an arithmetic circuit.

#ifndef SANS_JUBJUB_HPP_
#define SANS_JUBJUB_HPP_

#include <array>
#include <optional>

#include "sans/ff.hpp"
#include "sans/rng.hpp"

namespace sans::jubjub {

// Prime order of the EdDSA subgroup (curve order = 8 * kSubOrder).
struct SubOrderParams {
    static constexpr U256 modulus{0x677297dc392126f1ULL, 0xab3eedb83920ee0aULL,
                                  0x370a08b6d0302b0bULL, 0x060c89ce5c263405ULL};
};
using Scalar = Fp<SubOrderParams>;

Fr curve_a();
Fr curve_d();

struct Point {
    Fr x = Fr::zero();
    Fr y = Fr::one();

    bool operator==(const Point&) const = default;
    bool is_identity() const { return x.is_zero() && y == Fr::one(); }
};

// Generator of the prime-order subgroup.
const Point& base8();

bool on_curve(const Point& p);
Point add(const Point& p, const Point& q);
Point dbl(const Point& p);
Point negate(const Point& p);
// Branch-free double-and-add over the fixed 256-bit scalar width.
Point mul(const Point& p, const U256& scalar);
inline Point mul(const Point& p, const Scalar& s) { return mul(p, s.to_u256()); }
// True iff p is on the curve and kSubOrder * p == identity.
bool in_subgroup(const Point& p);

struct Signature {
    Point r;
    Scalar s;

    bool operator==(const Signature&) const = default;
};

struct SigningKeypair {
    Scalar sk;   // secret scalar
    Fr prefix;   // deterministic-nonce secret
    Point pk;    // sk * base8
};

// Deterministic key derivation from a 32-byte seed.
SigningKeypair keygen(const std::array<uint8_t, 32>& seed);

// EdDSA challenge e = poseidon2(poseidon4(R.x, R.y, pk.x, pk.y), msg).
Fr challenge(const Point& r, const Point& pk, const Fr& msg);

// Deterministic signature (nonce derived from the keypair prefix and msg):
// R = k*B, s = k + e*sk over the subgroup order.
Signature sign(const SigningKeypair& kp, const Fr& msg);

// True iff s*B == R + e*pk. Throws Error(malformed_point) when pk or R is off
// the curve or outside the prime-order subgroup, or pk is the identity.
bool verify(const Point& pk, const Fr& msg, const Signature& sig);

// 64-byte (x, y) encoding shared by credentials and wire messages.
std::array<uint8_t, 64> encode_point(const Point& p);
std::optional<Point> decode_point(std::span<const uint8_t> bytes);  // canonical + on-curve

// 96-byte signature encoding: R then s.
std::array<uint8_t, 96> encode_signature(const Signature& sig);
std::optional<Signature> decode_signature(std::span<const uint8_t> bytes);

// Secret token embedded in one field element, sampled from 31 random bytes
// so its value is below 2^248.
struct Token {
    Fr value;

    bool operator==(const Token&) const = default;
};

Token sample_token(Rng& rng);

}  // namespace sans::jubjub

#endif  // SANS_JUBJUB_HPP_
