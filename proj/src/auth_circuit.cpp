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

#include "sans/auth_circuit.hpp"

#include <sstream>

#include "sans/errors.hpp"
#include "sans/gadgets.hpp"
#include "sans/hex.hpp"

namespace sans {

namespace {

// Bit widths of the scalar decompositions: s < 2^251 (the subgroup order is
// 251 bits), e is a full field element.
constexpr int kScalarBits = 251;
constexpr int kChallengeBits = 254;

struct AssignInputs {
    Fr c, pkx, pky, texp;     // public slots (out is computed)
    Fr token, rx, ry, s;      // private slots
};

// One synthesis path for both layout and witness construction; control flow
// never depends on values.
void synthesize(Synthesizer& syn, const AssignInputs* in) {
    using namespace gadgets;

    Wire c_w = syn.alloc_public("c");
    Wire pkx_w = syn.alloc_public("pk_x");
    Wire pky_w = syn.alloc_public("pk_y");
    Wire texp_w = syn.alloc_public("t_exp");
    Wire out_w = syn.alloc_public("out");

    Wire token_w = syn.alloc_private();
    Wire rx_w = syn.alloc_private();
    Wire ry_w = syn.alloc_private();
    Wire s_w = syn.alloc_private();
    if (in) {
        syn.set_value(c_w, in->c);
        syn.set_value(pkx_w, in->pkx);
        syn.set_value(pky_w, in->pky);
        syn.set_value(texp_w, in->texp);
        syn.set_value(token_w, in->token);
        syn.set_value(rx_w, in->rx);
        syn.set_value(ry_w, in->ry);
        syn.set_value(s_w, in->s);
    }

    LinComb c_lc = LinComb::from_wire(c_w);
    LinComb token_lc = LinComb::from_wire(token_w);
    EdwardsLC pk{LinComb::from_wire(pkx_w), LinComb::from_wire(pky_w)};
    EdwardsLC r_point{LinComb::from_wire(rx_w), LinComb::from_wire(ry_w)};

    enforce_on_curve(syn, r_point);

    // M = poseidon2(token, t_exp)
    std::array<LinComb, 2> m_in{token_lc, LinComb::from_wire(texp_w)};
    LinComb m = poseidon(syn, m_in);

    // e = poseidon2(poseidon4(Rx, Ry, pkx, pky), M)
    std::array<LinComb, 4> bind_in{r_point.x, r_point.y, pk.x, pk.y};
    LinComb bind = poseidon(syn, bind_in);
    std::array<LinComb, 2> e_in{bind, m};
    LinComb e = poseidon(syn, e_in);

    // Signature equation s*B8 == R + e*pk as a boolean.
    std::vector<Wire> s_bits = bits(syn, LinComb::from_wire(s_w), kScalarBits);
    std::vector<Wire> e_bits = bits(syn, e, kChallengeBits);
    EdwardsLC lhs = fixed_base_mul(syn, s_bits, jubjub::base8());
    EdwardsLC e_pk = var_base_mul(syn, e_bits, pk);
    EdwardsLC rhs = edwards_add(syn, r_point, e_pk);
    Wire eq_x = is_equal(syn, lhs.x, rhs.x);
    Wire eq_y = is_equal(syn, lhs.y, rhs.y);
    Wire b = syn.mul(LinComb::from_wire(eq_x), LinComb::from_wire(eq_y));

    // out = b * poseidon2(c, token)
    std::array<LinComb, 2> h_in{c_lc, token_lc};
    LinComb h = poseidon(syn, h_in);
    syn.enforce(LinComb::from_wire(b), h, LinComb::from_wire(out_w));
    if (in) syn.set_value(out_w, syn.value_of(b) * syn.eval(h));

    // Pin every public wire (including the constant) into the first-vector
    // polynomials: w * 0 == 0.
    for (Wire w = 0; w <= out_w; ++w) {
        syn.enforce(LinComb::from_wire(w), LinComb(), LinComb());
    }
}

AuthCircuit build() {
    Synthesizer syn(false);
    synthesize(syn, nullptr);
    AuthCircuit circuit;
    circuit.cs = syn.take_cs();
    circuit.fingerprint = circuit.cs.fingerprint();
    return circuit;
}

}  // namespace

const AuthCircuit& auth_circuit() {
    static const AuthCircuit circuit = build();
    return circuit;
}

std::string AuthCircuit::describe() const {
    std::ostringstream os;
    os << "auth circuit\n";
    os << "public inputs:";
    for (const auto& n : cs.public_names) os << " " << n;
    os << "\n";
    os << "private inputs: token r_x r_y s\n";
    os << "wires: " << cs.num_wires << "\n";
    os << "constraints: " << cs.constraints.size() << "\n";
    os << "fingerprint: " << to_hex(fingerprint) << "\n";
    return os.str();
}

WitnessAssignment assign_witness(const Credential& cred, const Fr& challenge) {
    if (!cred.well_formed()) {
        throw Error(Errc::malformed_credential, "credential points are not valid subgroup members");
    }
    Synthesizer syn(true);
    AssignInputs in{challenge, cred.pk_so.x, cred.pk_so.y, cred.t_exp,
                    cred.token.value, cred.sig.r.x, cred.sig.r.y,
                    Fr::from_u256(cred.sig.s.to_u256())};
    synthesize(syn, &in);
    return WitnessAssignment{syn.take_values()};
}

bool satisfied(const AuthCircuit& circuit, const WitnessAssignment& w) {
    return circuit.cs.satisfied(w.values);
}

std::array<Fr, AuthCircuit::kNumPublicInputs> make_public_inputs(const Fr& challenge,
                                                                 const jubjub::Point& pk_so,
                                                                 const Fr& t_exp, const Fr& out) {
    return {challenge, pk_so.x, pk_so.y, t_exp, out};
}

}  // namespace sans
