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

#include <doctest.h>

#include <set>

#include "sans/errors.hpp"
#include "sans/jubjub.hpp"
#include "test_util.hpp"

using namespace sans;
using namespace sans::jubjub;

namespace {

Point pt(const nlohmann::json& j) { return Point{test::fr_dec(j[0]), test::fr_dec(j[1])}; }

}  // namespace

TEST_SUITE_BEGIN("jubjub");

TEST_CASE("curve operations match the circomlibjs reference") {
    auto vec = test::load_vectors("babyjub_oracle.json");
    for (const auto& c : vec["adds"]) {
        CHECK_EQ(add(pt(c["p"]), pt(c["q"])), pt(c["r"]));
    }
    for (const auto& c : vec["muls"]) {
        U256 scalar;
        REQUIRE(U256::from_dec(c["scalar"].get<std::string>(), scalar));
        CHECK_EQ(mul(pt(c["base"]), scalar), pt(c["result"]));
    }
    for (const auto& c : vec["in_subgroup"]) {
        CHECK_EQ(in_subgroup(pt(c["point"])), c["member"].get<bool>());
    }
}

TEST_CASE("signing vectors from the independent reference") {
    auto vec = test::load_vectors("eddsa_vectors.json");
    size_t n = 0;
    for (const auto& c : vec["cases"]) {
        auto seed_bytes = from_hex(c["seed"].get<std::string>());
        REQUIRE(seed_bytes.has_value());
        std::array<uint8_t, 32> seed;
        std::copy(seed_bytes->begin(), seed_bytes->end(), seed.begin());
        auto kp = keygen(seed);
        CHECK_EQ(kp.sk.to_dec(), c["sk"].get<std::string>());
        CHECK_EQ(kp.prefix.to_dec(), c["prefix"].get<std::string>());
        CHECK_EQ(kp.pk, pt(c["pk"]));

        Fr msg = test::fr_dec(c["msg"]);
        auto sig = sign(kp, msg);
        CHECK_EQ(sig.r, pt(c["R"]));
        CHECK_EQ(sig.s.to_dec(), c["s"].get<std::string>());
        CHECK_EQ(challenge(sig.r, kp.pk, msg).to_dec(), c["challenge"].get<std::string>());
        CHECK(verify(kp.pk, msg, sig));
        ++n;
    }
    CHECK_GE(n, 10);
}

TEST_CASE("keygen is deterministic and seed-sensitive") {
    TestRng rng(42);
    auto s1 = rng.bytes32();
    auto kp_a = keygen(s1);
    auto kp_b = keygen(s1);
    CHECK_EQ(kp_a.pk, kp_b.pk);
    CHECK_EQ(kp_a.sk, kp_b.sk);
    CHECK(on_curve(kp_a.pk));
    CHECK(in_subgroup(kp_a.pk));

    std::set<std::array<uint8_t, 64>> pks;
    for (int i = 0; i < 1000; ++i) {
        auto kp = keygen(rng.bytes32());
        pks.insert(encode_point(kp.pk));
    }
    CHECK_EQ(pks.size(), 1000);  // no collisions across distinct seeds
}

TEST_CASE("completeness and tamper rejection") {
    TestRng rng(99);
    for (int i = 0; i < 20; ++i) {
        auto kp = keygen(rng.bytes32());
        Fr msg = test::random_fr(rng);
        auto sig = sign(kp, msg);
        CHECK(verify(kp.pk, msg, sig));

        auto bad_s = sig;
        bad_s.s = bad_s.s + Scalar::from_u64(1);
        CHECK_FALSE(verify(kp.pk, msg, bad_s));

        CHECK_FALSE(verify(kp.pk, msg + Fr::one(), sig));
    }
}

TEST_CASE("cross-key matrix rejects") {
    TestRng rng(7);
    constexpr int n = 6;
    std::vector<SigningKeypair> kps;
    std::vector<Signature> sigs;
    Fr msg = Fr::from_u64(1000001);
    for (int i = 0; i < n; ++i) {
        kps.push_back(keygen(rng.bytes32()));
        sigs.push_back(sign(kps.back(), msg));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            CHECK_EQ(verify(kps[i].pk, msg, sigs[j]), i == j);
        }
    }
}

TEST_CASE("single-bit flips never verify") {
    TestRng rng(31337);
    auto kp = keygen(rng.bytes32());
    Fr msg = test::random_fr(rng);
    auto sig = sign(kp, msg);
    auto sig_bytes = encode_signature(sig);

    for (int trial = 0; trial < 100; ++trial) {
        auto flipped = sig_bytes;
        size_t bit = (size_t)(rng.bytes32()[0] % 96) * 8 + (rng.bytes32()[1] % 8);
        flipped[bit / 8] ^= (uint8_t)(1u << (bit % 8));
        auto decoded = decode_signature(flipped);
        if (!decoded) continue;  // non-canonical flip rejected at decode
        bool ok = false;
        try {
            ok = verify(kp.pk, msg, *decoded);
        } catch (const Error& e) {
            CHECK_EQ(e.code(), Errc::malformed_point);
            continue;
        }
        CHECK_FALSE(ok);
    }
}

TEST_CASE("verify rejects malformed points") {
    TestRng rng(13);
    auto kp = keygen(rng.bytes32());
    Fr msg = Fr::from_u64(5);
    auto sig = sign(kp, msg);

    Point off_curve{Fr::from_u64(1), Fr::from_u64(1)};
    CHECK_THROWS_AS((void)verify(off_curve, msg, sig), Error);

    // the full-order generator is on the curve but outside the prime subgroup
    Point full_order{
        test::fr_dec("995203441582195749578291179787384436505546430278305826713579947235728471134"),
        test::fr_dec("5472060717959818805561601436314318772137091100104008585924551046643952123905")};
    CHECK(on_curve(full_order));
    CHECK_FALSE(in_subgroup(full_order));
    CHECK_THROWS_AS((void)verify(full_order, msg, sig), Error);

    auto bad_r = sig;
    bad_r.r = full_order;
    CHECK_THROWS_AS((void)verify(kp.pk, msg, bad_r), Error);
}

TEST_CASE("token sampling") {
    TestRng rng(2024);
    std::set<std::array<uint8_t, 32>> seen;
    U256 bound;  // 2^248
    bound.v[3] = 1ULL << 56;
    for (int i = 0; i < 10000; ++i) {
        Token t = sample_token(rng);
        CHECK(t.value.to_u256() < bound);
        auto enc = t.value.to_bytes();
        CHECK_EQ(enc.size(), 32);
        seen.insert(enc);
    }
    CHECK_EQ(seen.size(), 10000);  // distinct across 10^4 draws
}

TEST_CASE("point and signature encodings") {
    TestRng rng(55);
    auto kp = keygen(rng.bytes32());
    auto enc = encode_point(kp.pk);
    auto dec = decode_point(enc);
    REQUIRE(dec.has_value());
    CHECK_EQ(*dec, kp.pk);

    // off-curve (x, y) rejected
    auto bad = enc;
    bad[0] ^= 1;
    CHECK_FALSE(decode_point(bad).has_value());

    auto sig = sign(kp, Fr::from_u64(9));
    auto sig_enc = encode_signature(sig);
    auto sig_dec = decode_signature(sig_enc);
    REQUIRE(sig_dec.has_value());
    CHECK_EQ(*sig_dec, sig);

    // s >= subgroup order rejected
    auto s_big = sig_enc;
    auto order_bytes = U256{SubOrderParams::modulus}.to_bytes_le();
    std::copy(order_bytes.begin(), order_bytes.end(), s_big.begin() + 64);
    CHECK_FALSE(decode_signature(s_big).has_value());
}

TEST_SUITE_END();
