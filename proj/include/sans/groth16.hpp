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
// Pairing-based SNARK with per-circuit trusted setup, constant 128-byte
// proofs and single-equation verification over three pairings. The setup
// trapdoor values live only on the stack of setup() and are wiped before it
// returns.

#ifndef SANS_GROTH16_HPP_
#define SANS_GROTH16_HPP_

#include <array>
#include <vector>

#include "sans/multiexp.hpp"
#include "sans/pairing.hpp"
#include "sans/r1cs.hpp"
#include "sans/rng.hpp"

namespace sans {

using Fingerprint = std::array<uint8_t, 32>;

struct ProvingKey {
    bn254::G1Affine alpha_g1, beta_g1, delta_g1;
    bn254::G2Affine beta_g2, delta_g2;
    std::vector<bn254::G1Affine> a_query;     // u_j(tau) G1, all wires
    std::vector<bn254::G1Affine> b_g1_query;  // v_j(tau) G1
    std::vector<bn254::G2Affine> b_g2_query;  // v_j(tau) G2
    std::vector<bn254::G1Affine> l_query;     // (beta u + alpha v + w)/delta, private wires
    std::vector<bn254::G1Affine> h_query;     // tau^i Z(tau)/delta, i < domain-1
    Fingerprint fingerprint{};

    bool operator==(const ProvingKey&) const = default;
};

struct VerifyingKey {
    Fq12 alpha_beta;  // e(alpha G1, beta G2), precomputed
    bn254::G2Affine gamma_g2, delta_g2;
    std::vector<bn254::G1Affine> ic;  // (beta u + alpha v + w)/gamma, wires 0..num_public
    Fingerprint fingerprint{};

    bool operator==(const VerifyingKey&) const = default;
};

// Both halves of one setup run; matching fingerprints by construction.
struct ProvingArtifacts {
    ProvingKey pk;
    VerifyingKey vk;
};

struct Proof {
    bn254::G1Affine a;
    bn254::G2Affine b;
    bn254::G1Affine c;

    bool operator==(const Proof&) const = default;
};

// Per-operator trusted setup over the constraint system. The sampled
// trapdoor (tau, alpha, beta, gamma, delta) is erased before return and no
// accessor exposes it.
ProvingArtifacts groth16_setup(const ConstraintSystem& cs, Rng& rng, int threads = 1);

// Randomized proof; repeated calls on the same witness yield distinct proofs.
// Throws Error(fingerprint_mismatch) if pk does not match cs, and
// Error(proving_failure) if the assignment does not satisfy cs.
Proof groth16_prove(const ProvingKey& pk, const ConstraintSystem& cs,
                    std::span<const Fr> assignment, Rng& rng, int threads = 1);

// Same arithmetic without the satisfiability gate. Exists so the test suites
// can confirm that proofs built from tampered witnesses never verify; an
// honest caller has no reason to use it.
Proof groth16_prove_unchecked(const ProvingKey& pk, const ConstraintSystem& cs,
                              std::span<const Fr> assignment, Rng& rng, int threads = 1);

// The single-equation pairing check. public_inputs excludes the constant
// wire. Throws Error(dimension_mismatch) on a wrong-length vector.
bool groth16_verify(const VerifyingKey& vk, std::span<const Fr> public_inputs, const Proof& proof);

}  // namespace sans

#endif  // SANS_GROTH16_HPP_
