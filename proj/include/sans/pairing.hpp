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
// Optimal ate pairing on BN254.

#ifndef SANS_PAIRING_HPP_
#define SANS_PAIRING_HPP_

#include <span>
#include <utility>

#include "sans/bn254.hpp"

namespace sans::bn254 {

// Miller loop value, before the final exponentiation.
Fq12 miller_loop(const G1Affine& p, const G2Affine& q);

Fq12 final_exponentiation(const Fq12& f);

inline Fq12 pairing(const G1Affine& p, const G2Affine& q) {
    return final_exponentiation(miller_loop(p, q));
}

// Product of pairings sharing one final exponentiation; the verifier's
// three-pairing check uses this.
Fq12 pairing_product(std::span<const std::pair<G1Affine, G2Affine>> pairs);

}  // namespace sans::bn254

#endif  // SANS_PAIRING_HPP_
