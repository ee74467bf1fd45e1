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

#include "sans/tower.hpp"

#include <array>
#include <vector>

namespace sans {

namespace {

// Little-endian arbitrary-width unsigned integer, just enough for the
// Frobenius exponents (p^i - 1) / k with i <= 3.
struct Wide {
    std::vector<uint64_t> v;

    static Wide from_u256(const U256& x) { return {{x.v[0], x.v[1], x.v[2], x.v[3]}}; }

    void mul_u256(const U256& m) {
        std::vector<uint64_t> out(v.size() + 4, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            unsigned __int128 carry = 0;
            for (size_t j = 0; j < 4; ++j) {
                unsigned __int128 cur = (unsigned __int128)v[i] * m.v[j] + out[i + j] + carry;
                out[i + j] = (uint64_t)cur;
                carry = cur >> 64;
            }
            size_t k = i + 4;
            while (carry) {
                unsigned __int128 cur = (unsigned __int128)out[k] + carry;
                out[k] = (uint64_t)cur;
                carry = cur >> 64;
                ++k;
            }
        }
        v = std::move(out);
    }

    void sub_one() {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i]-- != 0) break;
        }
    }

    void div_small(uint64_t d) {
        unsigned __int128 rem = 0;
        for (size_t i = v.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | v[i];
            v[i] = (uint64_t)(cur / d);
            rem = cur % d;
        }
    }

    int top_bit() const {
        for (size_t i = v.size(); i-- > 0;) {
            if (v[i] == 0) continue;
            int b = 63;
            while (!((v[i] >> b) & 1)) --b;
            return (int)i * 64 + b;
        }
        return -1;
    }

    bool bit(int i) const { return (v[(size_t)i / 64] >> (i % 64)) & 1; }
};

Fq2 pow_wide(const Fq2& base, const Wide& e) {
    Fq2 acc = Fq2::one();
    for (int i = e.top_bit(); i >= 0; --i) {
        acc = acc.square();
        if (e.bit(i)) acc = acc * base;
    }
    return acc;
}

// gamma[i-1][j] = xi^{j (p^i - 1) / 6}, the per-coefficient Frobenius factors
// for the w-power basis of Fq12.
struct FrobTables {
    std::array<std::array<Fq2, 6>, 3> gamma;

    FrobTables() {
        for (int i = 1; i <= 3; ++i) {
            Wide e = Wide::from_u256(U256(1));
            for (int k = 0; k < i; ++k) e.mul_u256(FqParams::modulus);
            e.sub_one();
            e.div_small(6);  // (p^i - 1) / 6
            Fq2 base = pow_wide(xi(), e);
            gamma[(size_t)i - 1][0] = Fq2::one();
            for (int j = 1; j < 6; ++j) gamma[(size_t)i - 1][(size_t)j] = gamma[(size_t)i - 1][(size_t)j - 1] * base;
        }
    }
};

const FrobTables& frob_tables() {
    static const FrobTables t;
    return t;
}

Fq2 conj_pow(const Fq2& a, int power) {
    // a^(p^i) in Fq2 is conjugation for odd i, identity for even i.
    return (power % 2 == 1) ? a.conjugate() : a;
}

}  // namespace

Fq12 Fq12::frobenius(int power) const {
    const auto& g = frob_tables().gamma[(size_t)power - 1];
    Fq12 r;
    // w-power basis: c0 = (A0, A2, A4), c1 = (A1, A3, A5).
    r.c0.a0 = conj_pow(c0.a0, power) * g[0];
    r.c1.a0 = conj_pow(c1.a0, power) * g[1];
    r.c0.a1 = conj_pow(c0.a1, power) * g[2];
    r.c1.a1 = conj_pow(c1.a1, power) * g[3];
    r.c0.a2 = conj_pow(c0.a2, power) * g[4];
    r.c1.a2 = conj_pow(c1.a2, power) * g[5];
    return r;
}

const Fq2& twist_frob_x() {
    static const Fq2 v = frob_tables().gamma[0][2];  // xi^{(p-1)/3}
    return v;
}

const Fq2& twist_frob_y() {
    static const Fq2 v = frob_tables().gamma[0][3];  // xi^{(p-1)/2}
    return v;
}

std::optional<Fq2> Fq2::sqrt() const {
    auto fq_sqrt = [](const Fq& a) { return a.sqrt(); };

    if (c1.is_zero()) {
        if (auto r = fq_sqrt(c0)) return Fq2{*r, Fq::zero()};
        // -c0 must then be square: sqrt = sqrt(-c0) * u.
        if (auto r = fq_sqrt(-c0)) return Fq2{Fq::zero(), *r};
        return std::nullopt;
    }

    // Norm trick: for x = x0 + x1 u with x^2 = c, x0^2 = (c0 ± sqrt(c0^2 + c1^2)) / 2.
    Fq norm = c0.square() + c1.square();
    auto s = fq_sqrt(norm);
    if (!s) return std::nullopt;
    Fq half = Fq::from_u64(2).inverse();
    for (Fq sign : {*s, -*s}) {
        Fq x0sq = (c0 + sign) * half;
        if (auto x0 = fq_sqrt(x0sq)) {
            if (x0->is_zero()) continue;
            Fq x1 = c1 * half * x0->inverse();
            Fq2 cand{*x0, x1};
            if (cand.square() == *this) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace sans
