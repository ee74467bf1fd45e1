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

#include "sans/ff.hpp"
#include "test_util.hpp"

using namespace sans;

TEST_SUITE_BEGIN("ff");

TEST_CASE("encoding roundtrip vectors") {
    auto vec = test::load_vectors("field_vectors.json");
    for (const auto& c : vec["roundtrip"]) {
        Fr x = test::fr_dec(c["value"]);
        auto bytes = x.to_bytes();
        CHECK_EQ(to_hex(bytes), c["le_hex"].get<std::string>());
        auto back = Fr::from_bytes(bytes);
        REQUIRE(back.has_value());
        CHECK_EQ(*back, x);
    }
}

TEST_CASE("decode rejects r .. r+32") {
    auto vec = test::load_vectors("field_vectors.json");
    size_t n = 0;
    for (const auto& h : vec["reject_le_hex"]) {
        auto bytes = from_hex(h.get<std::string>());
        REQUIRE(bytes.has_value());
        CHECK_FALSE(Fr::from_bytes(*bytes).has_value());
        ++n;
    }
    CHECK_EQ(n, 33);
}

TEST_CASE("decode rejects wrong lengths") {
    std::vector<uint8_t> short_buf(31, 0), long_buf(33, 0);
    CHECK_FALSE(Fr::from_bytes(short_buf).has_value());
    CHECK_FALSE(Fr::from_bytes(long_buf).has_value());
}

TEST_CASE("field axioms on random elements") {
    TestRng rng(1234);
    for (int i = 0; i < 200; ++i) {
        Fr a = test::random_fr(rng), b = test::random_fr(rng), c = test::random_fr(rng);
        CHECK_EQ(a * (b + c), a * b + a * c);
        CHECK_EQ(a + (-a), Fr::zero());
        CHECK_EQ((a - b) + b, a);
        if (!a.is_zero()) CHECK_EQ(a * a.inverse(), Fr::one());
    }
}

TEST_CASE("pow matches repeated multiplication") {
    Fr a = Fr::from_u64(3);
    Fr acc = Fr::one();
    for (int i = 0; i < 13; ++i) acc *= a;
    CHECK_EQ(a.pow(U256(13)), acc);
    CHECK_EQ(a.pow(U256(0)), Fr::one());
}

TEST_CASE("decimal parsing") {
    CHECK_EQ(Fr::from_dec("0")->to_dec(), "0");
    CHECK_EQ(Fr::from_dec("1")->to_dec(), "1");
    // modulus itself is rejected, modulus-1 accepted
    CHECK_FALSE(Fr::from_dec("21888242871839275222246405745257275088548364400416034343698204186575808495617").has_value());
    CHECK(Fr::from_dec("21888242871839275222246405745257275088548364400416034343698204186575808495616").has_value());
    CHECK_FALSE(Fr::from_dec("12x").has_value());
    CHECK_FALSE(Fr::from_dec("").has_value());
}

TEST_CASE("fq sqrt") {
    TestRng rng(77);
    int squares = 0;
    for (int i = 0; i < 50; ++i) {
        auto b = rng.bytes32();
        b[31] &= 0x3f;
        auto x = Fq::from_bytes(b);
        if (!x) continue;
        Fq sq = x->square();
        auto root = sq.sqrt();
        REQUIRE(root.has_value());
        CHECK((*root == *x || *root == -*x));
        ++squares;
    }
    CHECK_GT(squares, 30);
}

TEST_SUITE_END();
