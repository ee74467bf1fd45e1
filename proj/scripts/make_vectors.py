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

"""Regenerates the frozen test vectors under tests/vectors/.

Poseidon digests and Baby Jubjub point operations come from a circomlibjs
dump (tests/vectors/poseidon_oracle.json, babyjub_oracle.json, produced by
scripts/dump_circomlibjs.mjs) and are cross-checked here against the
plain-integer references. EdDSA, field-encoding and challenge vectors are
minted by the references directly.
"""

import hashlib
import json
import os
import random
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import eddsa_ref
from gen_poseidon_params import PRIME as R
from poseidon_ref import poseidon

VEC_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests", "vectors")


def check_poseidon_oracle():
    path = os.path.join(VEC_DIR, "poseidon_oracle.json")
    with open(path) as f:
        oracle = json.load(f)
    for case in oracle["digests"]:
        inputs = [int(x) for x in case["inputs"]]
        assert poseidon(inputs) == int(case["digest"]), f"poseidon mismatch on {case}"
    for pair in oracle["order_pairs"]:
        a, b = int(pair["a"]), int(pair["b"])
        assert poseidon([a, b]) == int(pair["h_ab"])
        assert poseidon([b, a]) == int(pair["h_ba"])
    print(f"poseidon_oracle.json: {len(oracle['digests'])} digests agree with the python reference")


def check_babyjub_oracle():
    path = os.path.join(VEC_DIR, "babyjub_oracle.json")
    with open(path) as f:
        oracle = json.load(f)
    for case in oracle["adds"]:
        p = tuple(int(x) for x in case["p"])
        q = tuple(int(x) for x in case["q"])
        r = tuple(int(x) for x in case["r"])
        assert eddsa_ref.add(p, q) == r
    for case in oracle["muls"]:
        base = tuple(int(x) for x in case["base"])
        res = tuple(int(x) for x in case["result"])
        assert eddsa_ref.mul(base, int(case["scalar"])) == res
    print(f"babyjub_oracle.json: {len(oracle['muls'])} muls agree with the python reference")


def make_eddsa_vectors():
    rng = random.Random(20260811)
    cases = []
    for i in range(100):
        seed = bytes(rng.randrange(256) for _ in range(32))
        kp = eddsa_ref.keygen(seed)
        msg = rng.randrange(R)
        sig = eddsa_ref.sign(kp, msg)
        assert eddsa_ref.verify(kp["pk"], msg, sig)
        cases.append({
            "seed": seed.hex(),
            "sk": str(kp["sk"]),
            "prefix": str(kp["prefix"]),
            "pk": [str(kp["pk"][0]), str(kp["pk"][1])],
            "msg": str(msg),
            "R": [str(sig["R"][0]), str(sig["R"][1])],
            "s": str(sig["s"]),
            "challenge": str(eddsa_ref.challenge(sig["R"], kp["pk"], msg)),
        })
    out = {"cases": cases}
    with open(os.path.join(VEC_DIR, "eddsa_vectors.json"), "w") as f:
        json.dump(out, f, indent=1)
    print(f"eddsa_vectors.json: {len(cases)} signing vectors")


def make_field_vectors():
    rng = random.Random(424242)
    values = [0, 1, 2**248 - 1, R - 1] + [rng.randrange(R) for _ in range(10)]
    cases = [{"value": str(v), "le_hex": v.to_bytes(32, "little").hex()} for v in values]
    rejects = [str(R + i) for i in range(33)]
    reject_hex = [(R + i).to_bytes(32, "little").hex() for i in range(33)]
    out = {"roundtrip": cases, "reject_values": rejects, "reject_le_hex": reject_hex}
    with open(os.path.join(VEC_DIR, "field_vectors.json"), "w") as f:
        json.dump(out, f, indent=1)
    print(f"field_vectors.json: {len(cases)} roundtrips, {len(rejects)} rejects")


def make_challenge_vectors():
    cases = [
        {"unix_seconds": 0, "bucket": 0},
        {"unix_seconds": 59, "bucket": 0},
        {"unix_seconds": 60, "bucket": 1},
        {"unix_seconds": 61, "bucket": 1},
        {"unix_seconds": 1592224496, "bucket": 1592224496 // 60},
        {"unix_seconds": 2**40, "bucket": 2**40 // 60},
    ]
    assert cases[4]["bucket"] == 26537074
    with open(os.path.join(VEC_DIR, "challenge_vectors.json"), "w") as f:
        json.dump({"cases": cases}, f, indent=1)
    print(f"challenge_vectors.json: {len(cases)} cases")


if __name__ == "__main__":
    check_poseidon_oracle()
    check_babyjub_oracle()
    make_eddsa_vectors()
    make_field_vectors()
    make_challenge_vectors()
    print("all vectors written to", os.path.abspath(VEC_DIR))
