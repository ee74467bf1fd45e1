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
// The session-authentication circuit. Proves knowledge of (token, R, s) with
//   M    = poseidon2(token, t_exp)
//   b    = [s*B8 == R + e*pk],  e = poseidon2(poseidon4(Rx, Ry, pkx, pky), M)
//   out  = b * poseidon2(c, token)
// over public inputs [c, pk_x, pk_y, t_exp, out]. The signature bit is
// multiplied into the hash rather than asserted, so an invalid credential
// still satisfies the circuit with out = 0; the verifier policy rejects
// zero outputs.

#ifndef SANS_AUTH_CIRCUIT_HPP_
#define SANS_AUTH_CIRCUIT_HPP_

#include <array>
#include <string>
#include <vector>

#include "sans/credential.hpp"
#include "sans/r1cs.hpp"

namespace sans {

struct AuthCircuit {
    ConstraintSystem cs;
    std::array<uint8_t, 32> fingerprint;

    static constexpr size_t kNumPublicInputs = 5;
    // Public wire indices (wire 0 is the constant one).
    static constexpr Wire kChallenge = 1;
    static constexpr Wire kPkX = 2;
    static constexpr Wire kPkY = 3;
    static constexpr Wire kTExp = 4;
    static constexpr Wire kOut = 5;

    size_t constraint_count() const { return cs.constraints.size(); }

    // Stable audit text: wire counts, public-input order, constraint count,
    // fingerprint.
    std::string describe() const;
};

// Deterministic for a fixed build.
const AuthCircuit& auth_circuit();

struct WitnessAssignment {
    std::vector<Fr> values;  // one per wire, including public slots

    Fr out() const { return values[AuthCircuit::kOut]; }
    std::array<Fr, AuthCircuit::kNumPublicInputs> public_inputs() const {
        return {values[1], values[2], values[3], values[4], values[5]};
    }
};

// Computes the full assignment for a credential and challenge. A well-formed
// credential with an invalid signature yields b = 0, out = 0. Throws
// Error(malformed_credential) for structurally invalid credentials.
WitnessAssignment assign_witness(const Credential& cred, const Fr& challenge);

// The constraint-evaluation oracle, independent of the proving system.
bool satisfied(const AuthCircuit& circuit, const WitnessAssignment& w);

// The public-input vector in layout order.
std::array<Fr, AuthCircuit::kNumPublicInputs> make_public_inputs(const Fr& challenge,
                                                                 const jubjub::Point& pk_so,
                                                                 const Fr& t_exp, const Fr& out);

}  // namespace sans

#endif  // SANS_AUTH_CIRCUIT_HPP_
