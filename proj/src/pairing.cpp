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

#include "sans/pairing.hpp"

namespace sans::bn254 {

namespace {

// BN parameter z and the ate loop count 6z + 2 (65 bits).
constexpr uint64_t kBnZ = 4965661367192848881ULL;
const U256 kAteLoop{0x9d797039be763ba8ULL, 0x1ULL, 0, 0};

// The twist point being walked through the Miller loop, in affine Fq2
// coordinates. The complete-formula corner cases (doubling a 2-torsion
// point, adding inverses) cannot occur for subgroup inputs.
struct MillerState {
    Fq2 x, y;
};

// Line through psi(T) and psi(T) (tangent) or psi(T), psi(Q) (chord),
// evaluated at P: yP - lambda*xP*w + (lambda*T.x - T.y)*w^3. The w and w^3
// coefficients live in c1.a0 and c1.a1 of the tower layout.
Fq12 line_value(const Fq2& lambda, const Fq2& tx, const Fq2& ty, const G1Affine& p) {
    Fq12 l = Fq12::zero();
    l.c0.a0 = Fq2{p.y, Fq::zero()};
    l.c1.a0 = -(lambda.scale(p.x));
    l.c1.a1 = lambda * tx - ty;
    return l;
}

Fq12 double_step(MillerState& t, const G1Affine& p) {
    Fq2 lambda = (t.x.square().scale(Fq::from_u64(3))) * (t.y + t.y).inverse();
    Fq2 x3 = lambda.square() - t.x - t.x;
    Fq2 y3 = lambda * (t.x - x3) - t.y;
    Fq12 l = line_value(lambda, t.x, t.y, p);
    t = {x3, y3};
    return l;
}

Fq12 add_step(MillerState& t, const Fq2& qx, const Fq2& qy, const G1Affine& p) {
    Fq2 lambda = (qy - t.y) * (qx - t.x).inverse();
    Fq2 x3 = lambda.square() - t.x - qx;
    Fq2 y3 = lambda * (t.x - x3) - t.y;
    Fq12 l = line_value(lambda, t.x, t.y, p);
    t = {x3, y3};
    return l;
}

Fq12 exp_by_neg_z(const Fq12& f) {
    // Elements here are unitary, so inversion is conjugation.
    return f.pow_u64(kBnZ).conjugate();
}

}  // namespace

Fq12 miller_loop(const G1Affine& p, const G2Affine& q) {
    if (p.infinity || q.infinity) return Fq12::one();

    MillerState t{q.x, q.y};
    Fq12 f = Fq12::one();
    for (int i = kAteLoop.top_bit() - 1; i >= 0; --i) {
        f = f.square() * double_step(t, p);
        if (kAteLoop.bit(i)) f = f * add_step(t, q.x, q.y, p);
    }

    // BN tail: the two Frobenius-twisted additions.
    Fq2 q1x = q.x.conjugate() * twist_frob_x();
    Fq2 q1y = q.y.conjugate() * twist_frob_y();
    Fq2 q2x = q1x.conjugate() * twist_frob_x();
    Fq2 q2y = q1y.conjugate() * twist_frob_y();
    f = f * add_step(t, q1x, q1y, p);
    f = f * add_step(t, q2x, -q2y, p);
    return f;
}

Fq12 final_exponentiation(const Fq12& f) {
    // Easy part: f^{(p^6 - 1)(p^2 + 1)}.
    Fq12 r = f.conjugate() * f.inverse();
    r = r.frobenius(2) * r;

    // Hard part, standard addition chain in z for BN curves.
    Fq12 y0 = exp_by_neg_z(r);
    Fq12 y1 = y0.square();
    Fq12 y2 = y1.square();
    Fq12 y3 = y2 * y1;
    Fq12 y4 = exp_by_neg_z(y3);
    Fq12 y5 = y4.square();
    Fq12 y6 = exp_by_neg_z(y5);
    y3 = y3.conjugate();
    y6 = y6.conjugate();
    Fq12 y7 = y6 * y4;
    Fq12 y8 = y7 * y3;
    Fq12 y9 = y8 * y1;
    Fq12 y10 = y8 * y4;
    Fq12 y11 = y10 * r;
    Fq12 y12 = y9.frobenius(1);
    Fq12 y13 = y12 * y11;
    y8 = y8.frobenius(2);
    Fq12 y14 = y8 * y13;
    r = r.conjugate();
    Fq12 y15 = r * y9;
    y15 = y15.frobenius(3);
    return y15 * y14;
}

Fq12 pairing_product(std::span<const std::pair<G1Affine, G2Affine>> pairs) {
    Fq12 f = Fq12::one();
    for (const auto& [p, q] : pairs) f = f * miller_loop(p, q);
    return final_exponentiation(f);
}

}  // namespace sans::bn254
