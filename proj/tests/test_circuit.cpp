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

#include "sans/auth_circuit.hpp"
#include "sans/errors.hpp"
#include "sans/gadgets.hpp"
#include "sans/poseidon.hpp"
#include "test_util.hpp"

using namespace sans;

namespace {

// Pinned against regression; update deliberately if the circuit changes.
constexpr size_t kExpectedConstraints = 7875;

}  // namespace

TEST_SUITE_BEGIN("circuit");

TEST_CASE("constraint count is pinned and within budget") {
    const AuthCircuit& c = auth_circuit();
    CHECK_GT(c.constraint_count(), 0);
    CHECK_LT(c.constraint_count(), 30000);
    CHECK_EQ(c.constraint_count(), kExpectedConstraints);
}

TEST_CASE("two builds agree") {
    // auth_circuit() caches; rebuild through the public Synthesizer path by
    // fingerprinting twice plus re-describing.
    const AuthCircuit& c = auth_circuit();
    CHECK_EQ(c.fingerprint, c.cs.fingerprint());
    std::string d1 = c.describe(), d2 = c.describe();
    CHECK_EQ(d1, d2);
    CHECK(d1.find("constraints: " + std::to_string(kExpectedConstraints)) != std::string::npos);
}

TEST_CASE("public slot order is c, pk_x, pk_y, t_exp, out") {
    const AuthCircuit& c = auth_circuit();
    REQUIRE_EQ(c.cs.public_names.size(), 5);
    CHECK_EQ(c.cs.public_names[0], "c");
    CHECK_EQ(c.cs.public_names[1], "pk_x");
    CHECK_EQ(c.cs.public_names[2], "pk_y");
    CHECK_EQ(c.cs.public_names[3], "t_exp");
    CHECK_EQ(c.cs.public_names[4], "out");
}

TEST_CASE("honest witness satisfies; out equals poseidon2(c, token)") {
    const AuthCircuit& circuit = auth_circuit();
    Credential cred = test::make_credential(1);
    Fr challenge = Fr::from_u64(26537074);
    auto w = assign_witness(cred, challenge);
    CHECK(satisfied(circuit, w));
    CHECK_EQ(w.out(), poseidon_hash({challenge, cred.token.value}));
    auto pub = w.public_inputs();
    CHECK_EQ(pub[0], challenge);
    CHECK_EQ(pub[1], cred.pk_so.x);
    CHECK_EQ(pub[2], cred.pk_so.y);
    CHECK_EQ(pub[3], cred.t_exp);
    CHECK_EQ(pub[4], w.out());
}

TEST_CASE("invalid signature still satisfies with out = 0") {
    const AuthCircuit& circuit = auth_circuit();
    Credential cred = test::make_credential(2);
    cred.sig.s = cred.sig.s + jubjub::Scalar::from_u64(1);
    auto w = assign_witness(cred, Fr::from_u64(12345));
    CHECK(satisfied(circuit, w));
    CHECK(w.out().is_zero());
}

TEST_CASE("expired but validly signed credential satisfies") {
    // Expiry is the verifier's job, not the circuit's.
    const AuthCircuit& circuit = auth_circuit();
    Credential cred = test::make_credential(3, 1000);  // expired long ago
    auto w = assign_witness(cred, Fr::from_u64(999));
    CHECK(satisfied(circuit, w));
    CHECK_FALSE(w.out().is_zero());
}

TEST_CASE("distinct challenges give distinct outputs") {
    Credential cred = test::make_credential(4);
    auto w1 = assign_witness(cred, Fr::from_u64(1000));
    auto w2 = assign_witness(cred, Fr::from_u64(1001));
    CHECK_NE(w1.out(), w2.out());
    CHECK_EQ(w1.out(), poseidon_hash({Fr::from_u64(1000), cred.token.value}));
    CHECK_EQ(w2.out(), poseidon_hash({Fr::from_u64(1001), cred.token.value}));
}

TEST_CASE("perturbing any private input wire breaks satisfaction") {
    const AuthCircuit& circuit = auth_circuit();
    TestRng rng(50);
    // wires 6..9 are token, R_x, R_y, s
    for (int trial = 0; trial < 50; ++trial) {
        Credential cred = test::make_credential(100 + (uint64_t)trial);
        auto w = assign_witness(cred, test::random_fr(rng));
        REQUIRE(satisfied(circuit, w));
        Wire target = 6 + (Wire)(trial % 4);
        auto tampered = w;
        tampered.values[target] += Fr::one();
        CHECK_FALSE(satisfied(circuit, tampered));
    }
}

TEST_CASE("b-wire booleanity is constraint-enforced") {
    // Locate the b wire through the out constraint: out = b * h. Setting the
    // b wire to anything outside {0,1} must violate some constraint even if
    // out is fixed up accordingly.
    const AuthCircuit& circuit = auth_circuit();
    Credential cred = test::make_credential(5);
    Fr challenge = Fr::from_u64(777);
    auto w = assign_witness(cred, challenge);
    REQUIRE(satisfied(circuit, w));

    // The constraint b * h == out is the last one before the public-input
    // pins; read the b wire index out of it.
    const auto& cons = circuit.cs.constraints;
    size_t out_cons = cons.size() - 1 - (AuthCircuit::kNumPublicInputs + 1);
    REQUIRE_EQ(cons[out_cons].c.terms().size(), 1);
    REQUIRE_EQ(cons[out_cons].c.terms()[0].wire, AuthCircuit::kOut);
    REQUIRE_EQ(cons[out_cons].a.terms().size(), 1);
    Wire b_wire = cons[out_cons].a.terms()[0].wire;
    CHECK_EQ(w.values[b_wire], Fr::one());

    auto tampered = w;
    tampered.values[b_wire] = Fr::from_u64(2);
    tampered.values[AuthCircuit::kOut] = Fr::from_u64(2) * poseidon_hash({challenge, cred.token.value});
    CHECK_FALSE(satisfied(circuit, tampered));
}

TEST_CASE("satisfied rejects wrong dimension") {
    const AuthCircuit& circuit = auth_circuit();
    WitnessAssignment w;
    w.values.assign(3, Fr::zero());
    CHECK_THROWS_AS((void)satisfied(circuit, w), Error);
}

TEST_CASE("assign_witness rejects structurally bad credentials") {
    Credential cred = test::make_credential(6);
    cred.pk_so = jubjub::Point{Fr::from_u64(1), Fr::from_u64(1)};  // off curve
    CHECK_THROWS_WITH_AS(assign_witness(cred, Fr::zero()), doctest::Contains("malformed_credential"),
                         Error);
}

TEST_CASE("poseidon gadget agrees with the native hash") {
    TestRng rng(60);
    for (int arity = 1; arity <= 4; ++arity) {
        Synthesizer syn(true);
        std::vector<LinComb> in_lcs;
        std::vector<Fr> values;
        for (int i = 0; i < arity; ++i) {
            Fr v = test::random_fr(rng);
            Wire w = syn.alloc_public("in" + std::to_string(i));
            syn.set_value(w, v);
            in_lcs.push_back(LinComb::from_wire(w));
            values.push_back(v);
        }
        LinComb digest = gadgets::poseidon(syn, in_lcs);
        CHECK_EQ(syn.eval(digest), poseidon_hash(values));
    }
}

TEST_CASE("edwards gadgets agree with native curve ops") {
    TestRng rng(61);
    auto kp = jubjub::keygen(rng.bytes32());
    auto p = kp.pk;
    auto q = jubjub::mul(jubjub::base8(), U256(98765));

    Synthesizer syn(true);
    Wire px = syn.alloc_public("px"), py = syn.alloc_public("py");
    syn.set_value(px, p.x);
    syn.set_value(py, p.y);
    gadgets::EdwardsLC plc{LinComb::from_wire(px), LinComb::from_wire(py)};
    auto sum = gadgets::edwards_add(syn, plc, gadgets::EdwardsLC::constant(q));
    auto native = jubjub::add(p, q);
    CHECK_EQ(syn.eval(sum.x), native.x);
    CHECK_EQ(syn.eval(sum.y), native.y);

    // fixed-base mul over a small scalar
    Synthesizer syn2(true);
    Wire k = syn2.alloc_public("k");
    syn2.set_value(k, Fr::from_u64(173));
    auto bits = gadgets::bits(syn2, LinComb::from_wire(k), 10);
    auto prod = gadgets::fixed_base_mul(syn2, bits, jubjub::base8());
    auto expect = jubjub::mul(jubjub::base8(), U256(173));
    CHECK_EQ(syn2.eval(prod.x), expect.x);
    CHECK_EQ(syn2.eval(prod.y), expect.y);
}

TEST_SUITE_END();
