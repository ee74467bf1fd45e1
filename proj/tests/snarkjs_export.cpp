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
// Emits a verifying key, proof and public-input vector in the snarkjs JSON
// format, so an independent Groth16 implementation can check this prover's
// output. Usage: snarkjs_export <out-dir>

#include <filesystem>
#include <fstream>

#include "sans/auth_circuit.hpp"
#include "sans/poseidon.hpp"
#include "sans/protocol.hpp"

using namespace sans;
using namespace sans::bn254;

namespace {

std::string g1_json(const G1Affine& p) {
    return "[\"" + p.x.to_dec() + "\",\"" + p.y.to_dec() + "\",\"1\"]";
}

std::string g2_json(const G2Affine& p) {
    return "[[\"" + p.x.c0.to_dec() + "\",\"" + p.x.c1.to_dec() + "\"],[\"" + p.y.c0.to_dec() +
           "\",\"" + p.y.c1.to_dec() + "\"],[\"1\",\"0\"]]";
}

std::string fq12_json(const Fq12& f) {
    auto f2 = [](const Fq2& e) { return "[\"" + e.c0.to_dec() + "\",\"" + e.c1.to_dec() + "\"]"; };
    auto f6 = [&](const Fq6& e) { return "[" + f2(e.a0) + "," + f2(e.a1) + "," + f2(e.a2) + "]"; };
    return "[" + f6(f.c0) + "," + f6(f.c1) + "]";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        fprintf(stderr, "usage: %s <out-dir>\n", argv[0]);
        return 2;
    }
    std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);

    const AuthCircuit& circuit = auth_circuit();
    SystemRng rng;
    ProvingArtifacts arts = groth16_setup(circuit.cs, rng, 2);

    TestRng seed_rng(4321);
    auto kp = jubjub::keygen(seed_rng.bytes32());
    Credential cred;
    cred.token = jubjub::sample_token(rng);
    cred.t_exp = Fr::from_u64(4102444800);
    cred.pk_so = kp.pk;
    cred.sig = jubjub::sign(kp, poseidon_hash({cred.token.value, cred.t_exp}));

    auto w = assign_witness(cred, Fr::from_u64(29876543));
    Proof proof = groth16_prove(arts.pk, circuit.cs, w.values, rng, 2);
    auto pub = w.public_inputs();
    if (!groth16_verify(arts.vk, pub, proof)) {
        fprintf(stderr, "self-verification failed\n");
        return 1;
    }

    std::ofstream vk(dir / "vk.json");
    vk << "{\"protocol\":\"groth16\",\"curve\":\"bn128\",\"nPublic\":" << pub.size() << ","
       << "\"vk_alpha_1\":" << g1_json(arts.pk.alpha_g1) << ","
       << "\"vk_beta_2\":" << g2_json(arts.pk.beta_g2) << ","
       << "\"vk_gamma_2\":" << g2_json(arts.vk.gamma_g2) << ","
       << "\"vk_delta_2\":" << g2_json(arts.vk.delta_g2) << ","
       << "\"vk_alphabeta_12\":" << fq12_json(arts.vk.alpha_beta) << ",\"IC\":[";
    for (size_t i = 0; i < arts.vk.ic.size(); ++i) vk << (i ? "," : "") << g1_json(arts.vk.ic[i]);
    vk << "]}\n";

    std::ofstream pf(dir / "proof.json");
    pf << "{\"pi_a\":" << g1_json(proof.a) << ",\"pi_b\":" << g2_json(proof.b)
       << ",\"pi_c\":" << g1_json(proof.c) << ",\"protocol\":\"groth16\",\"curve\":\"bn128\"}\n";

    std::ofstream pb(dir / "public.json");
    pb << "[";
    for (size_t i = 0; i < pub.size(); ++i) pb << (i ? "," : "") << "\"" << pub[i].to_dec() << "\"";
    pb << "]\n";

    // The same vector with the output slot bumped; must NOT verify.
    auto bad = pub;
    bad[4] += Fr::one();
    std::ofstream pbb(dir / "public_bad.json");
    pbb << "[";
    for (size_t i = 0; i < bad.size(); ++i) pbb << (i ? "," : "") << "\"" << bad[i].to_dec() << "\"";
    pbb << "]\n";

    printf("exported to %s\n", dir.c_str());
    return 0;
}
