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
// Extension-field tower for BN254 pairings:
//   Fq2  = Fq[u]  / (u^2 + 1)
//   Fq6  = Fq2[v] / (v^3 - xi),  xi = 9 + u
//   Fq12 = Fq6[w] / (w^2 - v)

#ifndef SANS_TOWER_HPP_
#define SANS_TOWER_HPP_

#include <optional>

#include "sans/ff.hpp"

namespace sans {

struct Fq2 {
    Fq c0, c1;

    static Fq2 zero() { return {Fq::zero(), Fq::zero()}; }
    static Fq2 one() { return {Fq::one(), Fq::zero()}; }
    static Fq2 from_u64(uint64_t a, uint64_t b) { return {Fq::from_u64(a), Fq::from_u64(b)}; }

    bool operator==(const Fq2&) const = default;
    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }

    Fq2 operator+(const Fq2& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Fq2 operator-(const Fq2& o) const { return {c0 - o.c0, c1 - o.c1}; }
    Fq2 operator-() const { return {-c0, -c1}; }

    Fq2 operator*(const Fq2& o) const {
        Fq a = c0 * o.c0;
        Fq b = c1 * o.c1;
        Fq cross = (c0 + c1) * (o.c0 + o.c1);
        return {a - b, cross - a - b};
    }

    Fq2 square() const {
        Fq a = c0 * c1;
        return {(c0 + c1) * (c0 - c1), a + a};
    }

    Fq2 scale(const Fq& k) const { return {c0 * k, c1 * k}; }

    Fq2 conjugate() const { return {c0, -c1}; }

    Fq2 inverse() const {
        Fq norm = c0.square() + c1.square();
        Fq ninv = norm.inverse();
        return {c0 * ninv, -(c1 * ninv)};
    }

    Fq2 pow(const U256& e) const {
        Fq2 acc = one();
        for (int i = e.top_bit(); i >= 0; --i) {
            acc = acc.square();
            if (e.bit(i)) acc = acc * *this;
        }
        return acc;
    }

    // Square root, if one exists. p = 3 mod 4 makes the Fq case a single
    // exponentiation; the Fq2 case uses the norm trick and verifies.
    std::optional<Fq2> sqrt() const;
};

// xi = 9 + u, the sextic-twist constant.
inline Fq2 xi() { return Fq2::from_u64(9, 1); }

struct Fq6 {
    Fq2 a0, a1, a2;  // a0 + a1 v + a2 v^2

    static Fq6 zero() { return {Fq2::zero(), Fq2::zero(), Fq2::zero()}; }
    static Fq6 one() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

    bool operator==(const Fq6&) const = default;
    bool is_zero() const { return a0.is_zero() && a1.is_zero() && a2.is_zero(); }

    Fq6 operator+(const Fq6& o) const { return {a0 + o.a0, a1 + o.a1, a2 + o.a2}; }
    Fq6 operator-(const Fq6& o) const { return {a0 - o.a0, a1 - o.a1, a2 - o.a2}; }
    Fq6 operator-() const { return {-a0, -a1, -a2}; }

    Fq6 operator*(const Fq6& o) const {
        Fq2 v0 = a0 * o.a0;
        Fq2 v1 = a1 * o.a1;
        Fq2 v2 = a2 * o.a2;
        Fq2 c0 = v0 + xi() * ((a1 + a2) * (o.a1 + o.a2) - v1 - v2);
        Fq2 c1 = (a0 + a1) * (o.a0 + o.a1) - v0 - v1 + xi() * v2;
        Fq2 c2 = (a0 + a2) * (o.a0 + o.a2) - v0 - v2 + v1;
        return {c0, c1, c2};
    }

    Fq6 square() const { return *this * *this; }

    // Multiplication by v: (a0, a1, a2) -> (xi*a2, a0, a1).
    Fq6 mul_by_v() const { return {xi() * a2, a0, a1}; }

    Fq6 inverse() const {
        Fq2 c0 = a0.square() - xi() * (a1 * a2);
        Fq2 c1 = xi() * a2.square() - a0 * a1;
        Fq2 c2 = a1.square() - a0 * a2;
        Fq2 t = (a2 * c1 + a1 * c2) * xi() + a0 * c0;
        Fq2 tinv = t.inverse();
        return {c0 * tinv, c1 * tinv, c2 * tinv};
    }
};

struct Fq12 {
    Fq6 c0, c1;  // c0 + c1 w

    static Fq12 zero() { return {Fq6::zero(), Fq6::zero()}; }
    static Fq12 one() { return {Fq6::one(), Fq6::zero()}; }

    bool operator==(const Fq12&) const = default;

    Fq12 operator*(const Fq12& o) const {
        Fq6 v0 = c0 * o.c0;
        Fq6 v1 = c1 * o.c1;
        Fq6 cross = (c0 + c1) * (o.c0 + o.c1);
        return {v0 + v1.mul_by_v(), cross - v0 - v1};
    }

    Fq12 square() const {
        Fq6 v0 = c0 * c1;
        Fq6 t = (c0 + c1) * (c0 + c1.mul_by_v());
        return {t - v0 - v0.mul_by_v(), v0 + v0};
    }

    // Inverse of a unitary (cyclotomic-subgroup) element; used after the easy
    // part of the final exponentiation where inversion degenerates to this.
    Fq12 conjugate() const { return {c0, -c1}; }

    Fq12 inverse() const {
        Fq6 t = (c0.square() - c1.square().mul_by_v()).inverse();
        return {c0 * t, -(c1 * t)};
    }

    Fq12 pow_u64(uint64_t e) const {
        Fq12 acc = one();
        for (int i = 63; i >= 0; --i) {
            acc = acc.square();
            if ((e >> i) & 1) acc = acc * *this;
        }
        return acc;
    }

    Fq12 pow(const U256& e) const {
        Fq12 acc = one();
        for (int i = e.top_bit(); i >= 0; --i) {
            acc = acc.square();
            if (e.bit(i)) acc = acc * *this;
        }
        return acc;
    }

    // p^i-power Frobenius endomorphism, i in {1, 2, 3}.
    Fq12 frobenius(int power) const;
};

// Twist-coordinate Frobenius constants: xi^{(p-1)/3} and xi^{(p-1)/2}.
const Fq2& twist_frob_x();
const Fq2& twist_frob_y();

}  // namespace sans

#endif  // SANS_TOWER_HPP_
