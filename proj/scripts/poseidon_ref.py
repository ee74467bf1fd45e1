#!/usr/bin/env python3
# Copyright 2026 The SANS Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Plain-integer Poseidon reference, independent of the C++ implementation.

Used to mint and cross-check test vectors. Shares only the parameter
generator with the production path; all arithmetic here is python ints.
"""

from functools import lru_cache

from gen_poseidon_params import FULL_ROUNDS, PARTIAL_ROUNDS, PRIME, generate


@lru_cache(maxsize=None)
def params(t):
    return generate(t)


def poseidon(inputs):
    assert 1 <= len(inputs) <= 4
    t = len(inputs) + 1
    consts, mds = params(t)
    r_f, r_p = FULL_ROUNDS, PARTIAL_ROUNDS[t]
    state = [0] + [x % PRIME for x in inputs]
    for r in range(r_f + r_p):
        state = [(a + consts[r * t + i]) % PRIME for i, a in enumerate(state)]
        if r < r_f // 2 or r >= r_f // 2 + r_p:
            state = [pow(a, 5, PRIME) for a in state]
        else:
            state[0] = pow(state[0], 5, PRIME)
        state = [sum(mds[i][j] * state[j] for j in range(t)) % PRIME for i in range(t)]
    return state[0]
