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
// Constraint gadgets: bit decomposition, Poseidon permutation, twisted
// Edwards arithmetic and equality tests. Linear steps stay symbolic
// (LinComb); only nonlinear steps allocate wires.

#ifndef SANS_GADGETS_HPP_
#define SANS_GADGETS_HPP_

#include <vector>

#include "sans/jubjub.hpp"
#include "sans/r1cs.hpp"

namespace sans::gadgets {

// n bit wires (LSB first) with booleanity constraints plus the recomposition
// constraint sum(2^i b_i) == lc.
std::vector<Wire> bits(Synthesizer& s, const LinComb& lc, int n);

// In-circuit Poseidon over symbolic state cells; width = inputs + 1.
LinComb poseidon(Synthesizer& s, std::span<const LinComb> inputs);

// out == 1 iff lc == 0, enforced by the inverse-witness construction.
Wire is_zero(Synthesizer& s, const LinComb& lc);
Wire is_equal(Synthesizer& s, const LinComb& a, const LinComb& b);

struct EdwardsLC {
    LinComb x, y;

    static EdwardsLC constant(const jubjub::Point& p) {
        return {LinComb(p.x), LinComb(p.y)};
    }
};

// Complete twisted Edwards addition over symbolic points.
EdwardsLC edwards_add(Synthesizer& s, const EdwardsLC& p, const EdwardsLC& q);

// acc + base if bit else acc.
EdwardsLC edwards_cond_add(Synthesizer& s, const EdwardsLC& acc, const EdwardsLC& base, Wire bit);

// Enforces a x^2 + y^2 == 1 + d x^2 y^2.
void enforce_on_curve(Synthesizer& s, const EdwardsLC& p);

// scalar_bits * base for a fixed base, via precomputed power-of-two multiples.
EdwardsLC fixed_base_mul(Synthesizer& s, std::span<const Wire> scalar_bits, const jubjub::Point& base);

// scalar_bits * point for a symbolic point (in-circuit doubling chain).
EdwardsLC var_base_mul(Synthesizer& s, std::span<const Wire> scalar_bits, const EdwardsLC& point);

}  // namespace sans::gadgets

#endif  // SANS_GADGETS_HPP_
