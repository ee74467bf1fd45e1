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

#include "sans/multiexp.hpp"
#include "sans/pairing.hpp"
#include "test_util.hpp"

using namespace sans;
using namespace sans::bn254;

TEST_SUITE_BEGIN("bn254");

TEST_CASE("generators are valid") {
    CHECK(on_curve(g1_generator()));
    CHECK(on_curve(g2_generator()));
    CHECK(in_g1(g1_generator()));
    CHECK(in_g2(g2_generator()));
    CHECK(mul(g1_generator(), FrParams::modulus).is_infinity());
    CHECK(mul(g2_generator(), FrParams::modulus).is_infinity());
}

TEST_CASE("group laws") {
    TestRng rng(8);
    Fr a = test::random_fr(rng), b = test::random_fr(rng);
    auto P = to_affine(mul(g1_generator(), a));
    auto Q = to_affine(mul(g1_generator(), b));
    // (a+b)G == aG + bG
    CHECK_EQ(to_affine(mul(g1_generator(), a + b)), to_affine(add(to_jacobian(P), to_jacobian(Q))));
    // doubling consistent with addition
    CHECK_EQ(to_affine(dbl(to_jacobian(P))), to_affine(add(to_jacobian(P), to_jacobian(P))));
    // infinity is the identity
    CHECK_EQ(to_affine(add(to_jacobian(P), G1{})), P);
}

TEST_CASE("pairing bilinearity and non-degeneracy") {
    Fq12 e = pairing(g1_generator(), g2_generator());
    CHECK_FALSE(e == Fq12::one());
    CHECK_EQ(e.pow(FrParams::modulus), Fq12::one());

    TestRng rng(21);
    for (int i = 0; i < 4; ++i) {
        Fr a = test::random_fr(rng), b = test::random_fr(rng);
        auto aP = to_affine(mul(g1_generator(), a));
        auto bQ = to_affine(mul(g2_generator(), b));
        CHECK_EQ(pairing(aP, bQ), e.pow((a * b).to_u256()));
    }
}

TEST_CASE("pairing product cancellation") {
    TestRng rng(3);
    Fr a = test::random_fr(rng);
    auto aP = to_affine(mul(g1_generator(), a));
    std::array<std::pair<G1Affine, G2Affine>, 2> pairs{{
        {aP, g2_generator()},
        {aP.neg(), g2_generator()},
    }};
    CHECK_EQ(pairing_product(pairs), Fq12::one());
}

TEST_CASE("compression roundtrip") {
    TestRng rng(14);
    for (int i = 0; i < 20; ++i) {
        Fr k = test::random_fr(rng);
        auto p1 = to_affine(mul(g1_generator(), k));
        auto c1 = compress_g1(p1);
        auto d1 = decompress_g1(c1);
        REQUIRE(d1.has_value());
        CHECK_EQ(*d1, p1);

        auto p2 = to_affine(mul(g2_generator(), k));
        auto c2 = compress_g2(p2);
        auto d2 = decompress_g2(c2);
        REQUIRE(d2.has_value());
        CHECK_EQ(*d2, p2);
    }
}

TEST_CASE("decompression rejects junk") {
    // x with no curve solution, and a non-canonical x >= q
    std::array<uint8_t, 32> bytes{};
    bytes[0] = 4;  // x=4: 67 is not a square mod q
    CHECK_FALSE(decompress_g1(bytes).has_value());
    auto q_bytes = U256{FqParams::modulus}.to_bytes_le();
    CHECK_FALSE(decompress_g1(q_bytes).has_value());
}

TEST_CASE("g2 decompression enforces the subgroup") {
    // A point on the twist but outside the r-order subgroup: build one by
    // scanning x values and checking the full-order multiple.
    Fq2 x = Fq2::from_u64(1, 0);
    std::optional<G2Affine> outside;
    for (int i = 1; i < 40 && !outside; ++i) {
        x = Fq2::from_u64((uint64_t)i, 3);
        Fq2 rhs = x.square() * x + g2_b();
        auto y = rhs.sqrt();
        if (!y) continue;
        G2Affine cand{x, *y, false};
        if (!in_g2(cand)) outside = cand;
    }
    REQUIRE(outside.has_value());
    CHECK(on_curve(*outside));
    CHECK_FALSE(decompress_g2(compress_g2(*outside)).has_value());
}

TEST_CASE("msm agrees with the naive sum") {
    TestRng rng(100);
    std::vector<G1Affine> bases;
    std::vector<Fr> scalars;
    G1 naive;
    for (int i = 0; i < 150; ++i) {
        Fr k = test::random_fr(rng);
        auto p = to_affine(mul(g1_generator(), test::random_fr(rng)));
        bases.push_back(p);
        scalars.push_back(k);
        naive = add(naive, mul(p, k));
    }
    CHECK_EQ(to_affine(msm<Fq>(bases, scalars, 1)), to_affine(naive));
    CHECK_EQ(to_affine(msm<Fq>(bases, scalars, 2)), to_affine(naive));
}

TEST_CASE("fixed-base table agrees with plain scalar mul") {
    FixedBaseTable<Fq> table(g1_generator());
    TestRng rng(6);
    for (int i = 0; i < 10; ++i) {
        Fr k = test::random_fr(rng);
        CHECK_EQ(to_affine(table.mul(k)), to_affine(mul(g1_generator(), k)));
    }
}

TEST_SUITE_END();
