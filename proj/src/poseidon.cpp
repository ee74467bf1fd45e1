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

#include "sans/poseidon.hpp"

#include <array>
#include <cassert>

#include "sans/errors.hpp"
#include "sans/poseidon_constants.hpp"

namespace sans {

namespace {

Fr load(const uint64_t limbs[4]) {
    return Fr::from_u256(U256(limbs[0], limbs[1], limbs[2], limbs[3]));
}

PoseidonParams build(int t) {
    PoseidonParams p;
    p.width = t;
    p.full_rounds = poseidon_constants::kFullRounds;
    p.partial_rounds = poseidon_constants::kPartialRounds[t - 2];
    const uint64_t(*consts)[4] = nullptr;
    const uint64_t(*mds)[4] = nullptr;
    size_t n_consts = (size_t)(p.full_rounds + p.partial_rounds) * t;
    switch (t) {
        case 2: consts = poseidon_constants::kRoundConstants2; mds = poseidon_constants::kMds2; break;
        case 3: consts = poseidon_constants::kRoundConstants3; mds = poseidon_constants::kMds3; break;
        case 4: consts = poseidon_constants::kRoundConstants4; mds = poseidon_constants::kMds4; break;
        case 5: consts = poseidon_constants::kRoundConstants5; mds = poseidon_constants::kMds5; break;
        default: assert(false);
    }
    p.round_constants.reserve(n_consts);
    for (size_t i = 0; i < n_consts; ++i) p.round_constants.push_back(load(consts[i]));
    p.mds.reserve((size_t)t * t);
    for (size_t i = 0; i < (size_t)t * t; ++i) p.mds.push_back(load(mds[i]));
    return p;
}

Fr pow5(const Fr& x) {
    Fr x2 = x.square();
    return x2.square() * x;
}

}  // namespace

const PoseidonParams& PoseidonParams::for_width(int t) {
    assert(t >= 2 && t <= 5);
    static const std::array<PoseidonParams, 4> all = {build(2), build(3), build(4), build(5)};
    return all[t - 2];
}

void poseidon_permute(const PoseidonParams& params, std::span<Fr> state) {
    const int t = params.width;
    assert((int)state.size() == t);
    const int half_full = params.full_rounds / 2;
    const int total = params.full_rounds + params.partial_rounds;
    std::vector<Fr> mixed((size_t)t);
    for (int r = 0; r < total; ++r) {
        for (int i = 0; i < t; ++i) state[i] += params.round_constants[(size_t)r * t + i];
        if (r < half_full || r >= half_full + params.partial_rounds) {
            for (int i = 0; i < t; ++i) state[i] = pow5(state[i]);
        } else {
            state[0] = pow5(state[0]);
        }
        for (int i = 0; i < t; ++i) {
            Fr acc = Fr::zero();
            for (int j = 0; j < t; ++j) acc += params.mds[(size_t)i * t + j] * state[j];
            mixed[(size_t)i] = acc;
        }
        for (int i = 0; i < t; ++i) state[i] = mixed[(size_t)i];
    }
}

Fr poseidon_hash(std::span<const Fr> inputs) {
    if (inputs.empty()) throw Error(Errc::empty_input, "poseidon_hash needs at least one input");
    if (inputs.size() > 4) throw Error(Errc::arity_too_large, "poseidon_hash supports arity 1..4");
    const int t = (int)inputs.size() + 1;
    const PoseidonParams& params = PoseidonParams::for_width(t);
    std::vector<Fr> state((size_t)t, Fr::zero());
    for (size_t i = 0; i < inputs.size(); ++i) state[i + 1] = inputs[i];
    poseidon_permute(params, state);
    return state[0];
}

}  // namespace sans
