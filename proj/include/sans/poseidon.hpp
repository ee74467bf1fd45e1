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
// Poseidon hash over the BN254 scalar field, x^5 S-box, widths 2..5
// (input arities 1..4). Matches the circomlib parameter set.

#ifndef SANS_POSEIDON_HPP_
#define SANS_POSEIDON_HPP_

#include <span>
#include <vector>

#include "sans/ff.hpp"

namespace sans {

// Round constants and MDS matrix for one state width, in Montgomery form.
struct PoseidonParams {
    int width = 0;
    int full_rounds = 0;
    int partial_rounds = 0;
    std::vector<Fr> round_constants;  // (full+partial) * width
    std::vector<Fr> mds;              // width * width, row-major

    // Parameters for state width t (2..5). Built once, immutable after.
    static const PoseidonParams& for_width(int t);
};

// Applies the permutation in place. state.size() must equal params.width.
void poseidon_permute(const PoseidonParams& params, std::span<Fr> state);

// Digest of 1..4 field elements: permutation of [0, inputs...], first cell out.
// Throws Error(empty_input) / Error(arity_too_large).
Fr poseidon_hash(std::span<const Fr> inputs);

inline Fr poseidon_hash(std::initializer_list<Fr> inputs) {
    return poseidon_hash(std::span<const Fr>(inputs.begin(), inputs.size()));
}

}  // namespace sans

#endif  // SANS_POSEIDON_HPP_
