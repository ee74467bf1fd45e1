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

#include <chrono>
#include <set>

#include "sans/auth_circuit.hpp"
#include "sans/errors.hpp"
#include "sans/serialization.hpp"
#include "test_util.hpp"

using namespace sans;

namespace {

// One setup per suite run; trusted-setup time dominates otherwise.
struct Fixture {
    const AuthCircuit& circuit = auth_circuit();
    ProvingArtifacts arts;
    SystemRng rng;

    Fixture() { arts = groth16_setup(circuit.cs, rng, 2); }

    static Fixture& get() {
        static Fixture f;
        return f;
    }
};

}  // namespace

TEST_SUITE_BEGIN("groth16");

TEST_CASE("honest end-to-end completeness") {
    auto& f = Fixture::get();
    Credential cred = test::make_credential(11);
    auto w = assign_witness(cred, Fr::from_u64(5000));
    Proof proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    CHECK(groth16_verify(f.arts.vk, w.public_inputs(), proof));
}

TEST_CASE("proving is randomized, both proofs verify") {
    auto& f = Fixture::get();
    Credential cred = test::make_credential(12);
    auto w = assign_witness(cred, Fr::from_u64(6000));
    Proof p1 = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    Proof p2 = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    CHECK_FALSE(p1 == p2);
    CHECK(groth16_verify(f.arts.vk, w.public_inputs(), p1));
    CHECK(groth16_verify(f.arts.vk, w.public_inputs(), p2));
}

TEST_CASE("each perturbed public input is rejected") {
    auto& f = Fixture::get();
    Credential cred = test::make_credential(13);
    auto w = assign_witness(cred, Fr::from_u64(7000));
    Proof proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    auto pub = w.public_inputs();
    for (size_t i = 0; i < pub.size(); ++i) {
        auto bad = pub;
        bad[i] += Fr::one();
        CHECK_FALSE(groth16_verify(f.arts.vk, bad, proof));
    }
}

TEST_CASE("swapping the c and t_exp slots breaks an otherwise valid proof") {
    auto& f = Fixture::get();
    Credential cred = test::make_credential(23);
    auto w = assign_witness(cred, Fr::from_u64(7500));
    Proof proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    auto pub = w.public_inputs();
    REQUIRE(groth16_verify(f.arts.vk, pub, proof));
    std::swap(pub[0], pub[3]);
    CHECK_FALSE(groth16_verify(f.arts.vk, pub, proof));
}

TEST_CASE("out slot replaced by a random element is rejected") {
    auto& f = Fixture::get();
    TestRng trng(90);
    Credential cred = test::make_credential(14);
    auto w = assign_witness(cred, Fr::from_u64(8000));
    Proof proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    auto pub = w.public_inputs();
    pub[4] = test::random_fr(trng);
    CHECK_FALSE(groth16_verify(f.arts.vk, pub, proof));
}

TEST_CASE("tampered witness proves (unchecked) but never verifies") {
    auto& f = Fixture::get();
    Credential cred = test::make_credential(15);
    auto w = assign_witness(cred, Fr::from_u64(8500));
    for (Wire target : {6u, 7u, 8u, 9u}) {  // token, R_x, R_y, s
        auto tampered = w;
        tampered.values[target] += Fr::one();
        REQUIRE_FALSE(satisfied(f.circuit, tampered));
        Proof proof = groth16_prove_unchecked(f.arts.pk, f.circuit.cs, tampered.values, f.rng, 2);
        CHECK_FALSE(groth16_verify(f.arts.vk, tampered.public_inputs(), proof));
    }
    // the strict prover refuses outright
    auto tampered = w;
    tampered.values[6] += Fr::one();
    CHECK_THROWS_WITH_AS(groth16_prove(f.arts.pk, f.circuit.cs, tampered.values, f.rng, 2),
                         doctest::Contains("proving_failure"), Error);
}

TEST_CASE("cross-setup proofs are rejected") {
    auto& f = Fixture::get();
    SystemRng rng;
    ProvingArtifacts other = groth16_setup(f.circuit.cs, rng, 2);
    // randomized setups produce different parameters
    CHECK_FALSE(other.pk == f.arts.pk);
    CHECK_FALSE(other.vk == f.arts.vk);

    Credential cred = test::make_credential(16);
    auto w = assign_witness(cred, Fr::from_u64(9000));
    Proof proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    CHECK(groth16_verify(f.arts.vk, w.public_inputs(), proof));
    CHECK_FALSE(groth16_verify(other.vk, w.public_inputs(), proof));
}

TEST_CASE("fingerprint gates proving") {
    auto& f = Fixture::get();
    Credential cred = test::make_credential(17);
    auto w = assign_witness(cred, Fr::from_u64(9100));
    ProvingKey wrong = f.arts.pk;
    wrong.fingerprint[0] ^= 0xff;
    CHECK_THROWS_WITH_AS(groth16_prove(wrong, f.circuit.cs, w.values, f.rng, 2),
                         doctest::Contains("fingerprint_mismatch"), Error);
}

TEST_CASE("verify checks the public input count") {
    auto& f = Fixture::get();
    std::vector<Fr> four(4, Fr::one());
    CHECK_THROWS_AS((void)groth16_verify(f.arts.vk, four, Proof{}), Error);
}

TEST_CASE("constant proof encoding size") {
    auto& f = Fixture::get();
    std::set<size_t> sizes;
    for (int i = 0; i < 5; ++i) {
        Credential cred = test::make_credential(200 + (uint64_t)i);
        auto w = assign_witness(cred, Fr::from_u64(10000 + (uint64_t)i));
        Proof proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
        sizes.insert(serialize_proof(proof, f.circuit.fingerprint).size());
    }
    CHECK_EQ(sizes.size(), 1);
}

TEST_CASE("serialization roundtrips bit-exactly") {
    auto& f = Fixture::get();
    auto pk_bytes = serialize_proving_key(f.arts.pk);
    auto vk_bytes = serialize_verifying_key(f.arts.vk);
    CHECK_EQ(serialize_proving_key(deserialize_proving_key(pk_bytes)), pk_bytes);
    CHECK_EQ(serialize_verifying_key(deserialize_verifying_key(vk_bytes)), vk_bytes);

    Credential cred = test::make_credential(18);
    auto w = assign_witness(cred, Fr::from_u64(9200));
    Proof proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    auto proof_bytes = serialize_proof(proof, f.circuit.fingerprint);
    auto [back, fp] = deserialize_proof(proof_bytes);
    CHECK(back == proof);
    CHECK_EQ(fp, f.circuit.fingerprint);
    CHECK_EQ(serialize_proof(back, fp), proof_bytes);
}

TEST_CASE("header corruption is detected") {
    auto& f = Fixture::get();
    Credential cred = test::make_credential(19);
    auto w = assign_witness(cred, Fr::from_u64(9300));
    Proof proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    auto bytes = serialize_proof(proof, f.circuit.fingerprint);

    auto bad_magic = bytes;
    bad_magic[0] = 'X';
    CHECK_THROWS_WITH_AS(deserialize_proof(bad_magic), doctest::Contains("bad_magic"), Error);

    auto bad_version = bytes;
    bad_version[4] = 0x7f;
    CHECK_THROWS_WITH_AS(deserialize_proof(bad_version), doctest::Contains("unsupported_version"), Error);

    auto bad_fp = bytes;
    bad_fp[10] ^= 1;
    CHECK_THROWS_WITH_AS(deserialize_proof(bad_fp, f.circuit.fingerprint),
                         doctest::Contains("fingerprint_mismatch"), Error);

    // vk bytes presented as a proof
    auto vk_bytes = serialize_verifying_key(f.arts.vk);
    CHECK_THROWS_AS(deserialize_proof(vk_bytes), Error);
}

TEST_CASE("truncation at every boundary is rejected") {
    auto& f = Fixture::get();
    Credential cred = test::make_credential(20);
    auto w = assign_witness(cred, Fr::from_u64(9400));
    Proof proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    auto bytes = serialize_proof(proof, f.circuit.fingerprint);
    for (size_t n = 0; n < bytes.size(); ++n) {
        std::span<const uint8_t> prefix(bytes.data(), n);
        CHECK_THROWS_AS(deserialize_proof(prefix), Error);
    }
    // trailing garbage is rejected too
    auto extended = bytes;
    extended.push_back(0);
    CHECK_THROWS_AS(deserialize_proof(extended), Error);
}

TEST_CASE("verifying key load rejects a foreign fingerprint") {
    auto& f = Fixture::get();
    auto vk_bytes = serialize_verifying_key(f.arts.vk);
    Fingerprint other = f.circuit.fingerprint;
    other[0] ^= 0x5a;
    CHECK_THROWS_WITH_AS(deserialize_verifying_key(vk_bytes, other),
                         doctest::Contains("fingerprint_mismatch"), Error);
    CHECK_THROWS_WITH_AS(deserialize_proving_key(serialize_proving_key(f.arts.pk), other),
                         doctest::Contains("fingerprint_mismatch"), Error);
}

TEST_CASE("verification cost does not scale with the circuit") {
    auto& f = Fixture::get();
    // A ~10x smaller circuit with the same number of public inputs.
    Synthesizer syn(true);
    std::vector<Wire> pubs;
    for (int i = 0; i < 5; ++i) {
        Wire p = syn.alloc_public("p" + std::to_string(i));
        syn.set_value(p, Fr::from_u64((uint64_t)i + 2));
        pubs.push_back(p);
    }
    LinComb x = LinComb::from_wire(pubs[0]);
    for (int i = 0; i < 700; ++i) x = LinComb::from_wire(syn.mul(x, x));
    for (Wire p = 0; p <= 5; ++p) syn.enforce(LinComb::from_wire(p), LinComb(), LinComb());
    ConstraintSystem small_cs = syn.take_cs();
    auto small_w = syn.take_values();
    REQUIRE_LT(small_cs.constraints.size(), f.circuit.constraint_count() / 10);

    SystemRng rng;
    ProvingArtifacts small_arts = groth16_setup(small_cs, rng, 2);
    Proof small_proof = groth16_prove(small_arts.pk, small_cs, small_w, rng, 2);
    std::vector<Fr> small_pub(small_w.begin() + 1, small_w.begin() + 6);
    REQUIRE(groth16_verify(small_arts.vk, small_pub, small_proof));

    Credential cred = test::make_credential(22);
    auto w = assign_witness(cred, Fr::from_u64(9600));
    Proof big_proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    auto big_pub = w.public_inputs();
    REQUIRE(groth16_verify(f.arts.vk, big_pub, big_proof));

    auto time_verifies = [](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < 10; ++i) fn();
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };
    double t_small = time_verifies([&] { (void)groth16_verify(small_arts.vk, small_pub, small_proof); });
    double t_big = time_verifies([&] { (void)groth16_verify(f.arts.vk, big_pub, big_proof); });
    double ratio = t_big / t_small;
    INFO("verify: small ", t_small, " ms, auth ", t_big, " ms, ratio ", ratio);
    CHECK_LT(ratio, 2.0);
    CHECK_GT(ratio, 0.5);
}

TEST_CASE("flipped proof bytes never verify") {
    auto& f = Fixture::get();
    Credential cred = test::make_credential(21);
    auto w = assign_witness(cred, Fr::from_u64(9500));
    Proof proof = groth16_prove(f.arts.pk, f.circuit.cs, w.values, f.rng, 2);
    auto bytes = serialize_proof(proof, f.circuit.fingerprint);
    TestRng trng(500);
    auto pub = w.public_inputs();
    int decoded_ok = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto flipped = bytes;
        size_t header = 40;
        size_t pos = header + (size_t)(trng.bytes32()[0] % (flipped.size() - header));
        flipped[pos] ^= (uint8_t)(1u << (trng.bytes32()[1] % 8));
        try {
            auto [p, fp] = deserialize_proof(flipped, f.circuit.fingerprint);
            ++decoded_ok;
            CHECK_FALSE(groth16_verify(f.arts.vk, pub, p));
        } catch (const Error&) {
            // malformed encodings are an acceptable outcome
        }
    }
    INFO("decodable flips: ", decoded_ok);
}

TEST_SUITE_END();
