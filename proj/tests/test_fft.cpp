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

#include "sans/fft.hpp"
#include "test_util.hpp"

using namespace sans;

namespace {

Fr eval_poly(const std::vector<Fr>& coeffs, const Fr& x) {
    Fr acc = Fr::zero();
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

}  // namespace

TEST_SUITE_BEGIN("fft");

TEST_CASE("fft equals direct evaluation") {
    EvaluationDomain d(16);
    CHECK_EQ(d.size(), 16);
    TestRng rng(1);
    std::vector<Fr> coeffs;
    for (int i = 0; i < 16; ++i) coeffs.push_back(test::random_fr(rng));

    std::vector<Fr> evals = coeffs;
    d.fft(evals);
    Fr w = Fr::one();
    for (size_t i = 0; i < 16; ++i) {
        CHECK_EQ(evals[i], eval_poly(coeffs, w));
        w *= d.root();
    }
}

TEST_CASE("ifft inverts fft, coset too") {
    EvaluationDomain d(64);
    TestRng rng(2);
    std::vector<Fr> coeffs;
    for (size_t i = 0; i < d.size(); ++i) coeffs.push_back(test::random_fr(rng));

    auto a = coeffs;
    d.fft(a);
    d.ifft(a);
    CHECK_EQ(a, coeffs);

    a = coeffs;
    d.coset_fft(a);
    d.coset_ifft(a);
    CHECK_EQ(a, coeffs);
}

TEST_CASE("root has exact order") {
    EvaluationDomain d(256);
    Fr r = d.root();
    CHECK_EQ(r.pow(U256(256)), Fr::one());
    CHECK_NE(r.pow(U256(128)), Fr::one());
}

TEST_CASE("vanishing polynomial is constant on the coset") {
    EvaluationDomain d(32);
    // Z(g w^i) = g^32 - 1 for every i; spot-check via the shifted evaluations
    // of Z's coefficient vector (x^32 - 1 truncated into the domain basis is
    // the zero vector, so check directly).
    Fr g = Fr::from_u64(FrParams::generator);
    Fr w = Fr::one();
    for (int i = 0; i < 32; ++i) {
        Fr x = g * w;
        CHECK_EQ(x.pow(U256(32)) - Fr::one(), d.z_on_coset());
        w *= d.root();
    }
    CHECK_FALSE(d.z_on_coset().is_zero());
}

TEST_SUITE_END();
