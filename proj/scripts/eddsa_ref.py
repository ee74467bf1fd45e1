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

"""Plain-integer Baby Jubjub + EdDSA reference, independent of the C++ path.

Implements the same scheme: Poseidon-derived keys and nonces, challenge
e = poseidon2(poseidon4(Rx, Ry, Ax, Ay), msg), s = k + e*sk mod the
subgroup order, verification s*B8 == R + e*pk.
"""

from gen_poseidon_params import PRIME as R
from poseidon_ref import poseidon

A = 168700
D = 168696
SUB_ORDER = 2736030358979909402780800718157159386076813972158567259200215660948447373041
BASE8 = (5299619240641551281634865583518297030282874472190772894086521144482721001553,
         16950150798460657717958625567821834550301663161624707787222815936182638968203)
IDENTITY = (0, 1)

TAG_SCALAR = 1
TAG_PREFIX = 2


def inv(x):
    return pow(x % R, R - 2, R)


def on_curve(p):
    x, y = p
    return (A * x * x + y * y) % R == (1 + D * x * x * y * y) % R


def add(p, q):
    x1, y1 = p
    x2, y2 = q
    dxy = D * x1 * x2 % R * y1 % R * y2 % R
    x3 = (x1 * y2 + y1 * x2) * inv(1 + dxy) % R
    y3 = (y1 * y2 - A * x1 * x2) * inv(1 - dxy) % R
    return (x3, y3)


def mul(p, e):
    acc = IDENTITY
    while e:
        if e & 1:
            acc = add(acc, p)
        p = add(p, p)
        e >>= 1
    return acc


def in_subgroup(p):
    return on_curve(p) and mul(p, SUB_ORDER) == IDENTITY


def keygen(seed):
    assert len(seed) == 32
    s0 = int.from_bytes(seed[:16], "little")
    s1 = int.from_bytes(seed[16:], "little")
    sk = poseidon([s0, s1, TAG_SCALAR]) % SUB_ORDER
    prefix = poseidon([s0, s1, TAG_PREFIX])
    pk = mul(BASE8, sk)
    return {"sk": sk, "prefix": prefix, "pk": pk}


def challenge(r_point, pk, msg):
    bind = poseidon([r_point[0], r_point[1], pk[0], pk[1]])
    return poseidon([bind, msg])


def sign(kp, msg):
    k = poseidon([kp["prefix"], msg]) % SUB_ORDER
    r_point = mul(BASE8, k)
    e = challenge(r_point, kp["pk"], msg)
    s = (k + e * kp["sk"]) % SUB_ORDER
    return {"R": r_point, "s": s}


def verify(pk, msg, sig):
    if pk == IDENTITY or not in_subgroup(pk) or not in_subgroup(sig["R"]):
        return False
    if not (0 <= sig["s"] < SUB_ORDER):
        return False
    e = challenge(sig["R"], pk, msg)
    return mul(BASE8, sig["s"]) == add(sig["R"], mul(pk, e % SUB_ORDER))
