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

"""Poseidon round constants and MDS matrices for the BN254 scalar field.

Reproduces the Grain-LFSR generation procedure published with the Poseidon
hash (generate_parameters_grain.sage, invoked as `1 0 254 t 8 R_P <r_hex>`),
for widths t = 2..5 with the x^5 S-box at the 128-bit security level.
The output is bit-for-bit identical to the widely deployed circomlib
constant set; `--check` verifies that against a circomlibjs dump.

Usage:
    gen_poseidon_params.py --header include/sans/poseidon_constants.hpp
    gen_poseidon_params.py --check poseidon_oracle.json
"""

import argparse
import json

PRIME = 21888242871839275222246405745257275088548364400416034343698204186575808495617
N_BITS = 254
FULL_ROUNDS = 8
PARTIAL_ROUNDS = {2: 56, 3: 57, 4: 56, 5: 60}


class GrainLFSR:
    """80-bit Grain LFSR with the self-shrinking output filter."""

    def __init__(self, field_tag, sbox_tag, n, t, r_f, r_p):
        bits = (_bits(field_tag, 2) + _bits(sbox_tag, 4) + _bits(n, 12) +
                _bits(t, 12) + _bits(r_f, 10) + _bits(r_p, 10) + [1] * 30)
        assert len(bits) == 80
        self.state = bits
        for _ in range(160):
            self._raw_bit()

    def _raw_bit(self):
        s = self.state
        bit = s[62] ^ s[51] ^ s[38] ^ s[23] ^ s[13] ^ s[0]
        s.pop(0)
        s.append(bit)
        return bit

    def bit(self):
        # Emit a bit only when the preceding raw bit is 1.
        while True:
            gate = self._raw_bit()
            out = self._raw_bit()
            if gate == 1:
                return out

    def integer(self, num_bits):
        v = 0
        for _ in range(num_bits):
            v = (v << 1) | self.bit()
        return v

    def field_element(self):
        # Rejection sampling below the modulus (round constants only).
        while True:
            v = self.integer(N_BITS)
            if v < PRIME:
                return v


def _bits(v, width):
    return [int(b) for b in bin(v)[2:].zfill(width)]


def generate(t):
    """Returns (round_constants, mds) for state width t, canonical integers."""
    g = GrainLFSR(1, 0, N_BITS, t, FULL_ROUNDS, PARTIAL_ROUNDS[t])
    consts = [g.field_element() for _ in range((FULL_ROUNDS + PARTIAL_ROUNDS[t]) * t)]
    # Cauchy MDS M[i][j] = 1/(x_i + y_j); the x/y draws take the raw 254-bit
    # stream value reduced mod r, with no rejection step.
    xs = [g.integer(N_BITS) % PRIME for _ in range(t)]
    ys = [g.integer(N_BITS) % PRIME for _ in range(t)]
    mds = [[pow((xs[i] + ys[j]) % PRIME, PRIME - 2, PRIME) for j in range(t)]
           for i in range(t)]
    return consts, mds


def _limbs(x):
    return ", ".join(f"0x{(x >> (64 * i)) & 0xffffffffffffffff:016x}ULL" for i in range(4))


def emit_header(path):
    lines = []
    lines.append("// Copyright 2026 The SANS Authors")
    lines.append("//")
    lines.append('// Licensed under the Apache License, Version 2.0 (the "License");')
    lines.append("// you may not use this file except in compliance with the License.")
    lines.append("// You may obtain a copy of the License at")
    lines.append("//")
    lines.append("//     http://www.apache.org/licenses/LICENSE-2.0")
    lines.append("//")
    lines.append("// Unless required by applicable law or agreed to in writing, software")
    lines.append('// distributed under the License is distributed on an "AS IS" BASIS,')
    lines.append("// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.")
    lines.append("// See the License for the specific language governing permissions and")
    lines.append("// limitations under the License.")
    lines.append("//")
    lines.append("// Generated by scripts/gen_poseidon_params.py. Do not edit by hand;")
    lines.append("// regenerate and diff instead. Values are canonical (non-Montgomery)")
    lines.append("// little-endian u64 limbs of BN254 scalar-field elements.")
    lines.append("")
    lines.append("#ifndef SANS_POSEIDON_CONSTANTS_HPP_")
    lines.append("#define SANS_POSEIDON_CONSTANTS_HPP_")
    lines.append("")
    lines.append("#include <cstdint>")
    lines.append("")
    lines.append("namespace sans::poseidon_constants {")
    lines.append("")
    lines.append(f"inline constexpr int kFullRounds = {FULL_ROUNDS};")
    parts = ", ".join(str(PARTIAL_ROUNDS[t]) for t in range(2, 6))
    lines.append(f"inline constexpr int kPartialRounds[4] = {{{parts}}};  // widths 2..5")
    lines.append("")
    for t in range(2, 6):
        consts, mds = generate(t)
        lines.append(f"// width {t}: {len(consts)} round constants, {t}x{t} MDS")
        lines.append(f"inline constexpr uint64_t kRoundConstants{t}[{len(consts)}][4] = {{")
        for c in consts:
            lines.append(f"    {{{_limbs(c)}}},")
        lines.append("};")
        lines.append(f"inline constexpr uint64_t kMds{t}[{t * t}][4] = {{")
        for row in mds:
            for e in row:
                lines.append(f"    {{{_limbs(e)}}},")
        lines.append("};")
        lines.append("")
    lines.append("}  // namespace sans::poseidon_constants")
    lines.append("")
    lines.append("#endif  // SANS_POSEIDON_CONSTANTS_HPP_")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {path}")


def check(oracle_path):
    with open(oracle_path) as f:
        oracle = json.load(f)
    for t in range(2, 6):
        consts, mds = generate(t)
        oc = [int(x) for x in oracle["C"][str(t)]]
        om = [[int(x) for x in row] for row in oracle["M"][str(t)]]
        assert consts == oc, f"t={t}: round constants diverge"
        assert mds == om, f"t={t}: MDS diverges"
        print(f"t={t}: OK ({len(consts)} constants + {t}x{t} MDS match)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--header", help="emit C++ constants header to this path")
    ap.add_argument("--check", help="compare against a circomlibjs constants dump (JSON)")
    args = ap.parse_args()
    if args.check:
        check(args.check)
    if args.header:
        emit_header(args.header)
    if not args.check and not args.header:
        for t in range(2, 6):
            consts, _ = generate(t)
            print(f"t={t}: first constant {consts[0]}")
