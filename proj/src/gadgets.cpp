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

#include "sans/gadgets.hpp"

#include <cassert>

#include "sans/poseidon.hpp"

namespace sans::gadgets {

std::vector<Wire> bits(Synthesizer& s, const LinComb& lc, int n) {
    Fr value = s.with_values() ? s.eval(lc) : Fr::zero();
    U256 repr = value.to_u256();
    std::vector<Wire> out;
    out.reserve((size_t)n);
    LinComb recompose;
    Fr pow2 = Fr::one();
    for (int i = 0; i < n; ++i) {
        Wire b = s.alloc_computed([&] { return repr.bit(i) ? Fr::one() : Fr::zero(); });
        // b * (1 - b) == 0
        s.enforce(LinComb::from_wire(b), LinComb(Fr::one()) - LinComb::from_wire(b), LinComb());
        recompose.add_term(b, pow2);
        pow2 = pow2.dbl();
        out.push_back(b);
    }
    s.enforce(recompose - lc, LinComb(Fr::one()), LinComb());
    return out;
}

namespace {

LinComb pow5(Synthesizer& s, const LinComb& x) {
    Wire x2 = s.mul(x, x);
    Wire x4 = s.mul(LinComb::from_wire(x2), LinComb::from_wire(x2));
    Wire x5 = s.mul(LinComb::from_wire(x4), x);
    return LinComb::from_wire(x5);
}

}  // namespace

LinComb poseidon(Synthesizer& s, std::span<const LinComb> inputs) {
    assert(!inputs.empty() && inputs.size() <= 4);
    const int t = (int)inputs.size() + 1;
    const PoseidonParams& params = PoseidonParams::for_width(t);
    std::vector<LinComb> state((size_t)t);
    state[0] = LinComb();
    for (size_t i = 0; i < inputs.size(); ++i) state[i + 1] = inputs[i];

    const int half_full = params.full_rounds / 2;
    const int total = params.full_rounds + params.partial_rounds;
    for (int r = 0; r < total; ++r) {
        for (int i = 0; i < t; ++i) state[(size_t)i] = state[(size_t)i] + LinComb(params.round_constants[(size_t)r * t + i]);
        if (r < half_full || r >= half_full + params.partial_rounds) {
            for (int i = 0; i < t; ++i) state[(size_t)i] = pow5(s, state[(size_t)i]);
        } else {
            state[0] = pow5(s, state[0]);
        }
        std::vector<LinComb> mixed((size_t)t);
        for (int i = 0; i < t; ++i) {
            LinComb acc;
            for (int j = 0; j < t; ++j) acc = acc + state[(size_t)j].scale(params.mds[(size_t)i * t + j]);
            mixed[(size_t)i] = acc;
        }
        state = std::move(mixed);
    }
    return state[0];
}

Wire is_zero(Synthesizer& s, const LinComb& lc) {
    // out = 1 - lc*inv;  lc*out = 0.  inv is the inverse witness (anything
    // when lc == 0).
    Wire inv = s.alloc_computed([&] {
        Fr v = s.eval(lc);
        return v.is_zero() ? Fr::zero() : v.inverse();
    });
    Wire out = s.alloc_computed([&] { return s.eval(lc).is_zero() ? Fr::one() : Fr::zero(); });
    s.enforce(lc, LinComb::from_wire(inv), LinComb(Fr::one()) - LinComb::from_wire(out));
    s.enforce(lc, LinComb::from_wire(out), LinComb());
    return out;
}

Wire is_equal(Synthesizer& s, const LinComb& a, const LinComb& b) { return is_zero(s, a - b); }

EdwardsLC edwards_add(Synthesizer& s, const EdwardsLC& p, const EdwardsLC& q) {
    const Fr a = jubjub::curve_a();
    const Fr d = jubjub::curve_d();
    Wire x1x2 = s.mul(p.x, q.x);
    Wire y1y2 = s.mul(p.y, q.y);
    Wire x1y2 = s.mul(p.x, q.y);
    Wire y1x2 = s.mul(p.y, q.x);
    Wire prod = s.mul(LinComb::from_wire(x1x2), LinComb::from_wire(y1y2));
    LinComb dprod = LinComb::from_wire(prod).scale(d);

    // x3 (1 + d x1x2y1y2) = x1y2 + y1x2
    Wire x3 = s.alloc_computed([&] {
        Fr denom = Fr::one() + s.eval(dprod);
        return (s.value_of(x1y2) + s.value_of(y1x2)) * denom.inverse();
    });
    s.enforce(LinComb::from_wire(x3), LinComb(Fr::one()) + dprod,
              LinComb::from_wire(x1y2) + LinComb::from_wire(y1x2));

    // y3 (1 - d x1x2y1y2) = y1y2 - a x1x2
    Wire y3 = s.alloc_computed([&] {
        Fr denom = Fr::one() - s.eval(dprod);
        return (s.value_of(y1y2) - a * s.value_of(x1x2)) * denom.inverse();
    });
    s.enforce(LinComb::from_wire(y3), LinComb(Fr::one()) - dprod,
              LinComb::from_wire(y1y2) - LinComb::from_wire(x1x2).scale(a));

    return {LinComb::from_wire(x3), LinComb::from_wire(y3)};
}

EdwardsLC edwards_cond_add(Synthesizer& s, const EdwardsLC& acc, const EdwardsLC& base, Wire bit) {
    EdwardsLC sum = edwards_add(s, acc, base);
    // out = acc + bit (sum - acc), one constraint per coordinate.
    LinComb bit_lc = LinComb::from_wire(bit);
    Wire ox = s.alloc_computed([&] {
        return s.value_of(bit).is_zero() ? s.eval(acc.x) : s.eval(sum.x);
    });
    s.enforce(bit_lc, sum.x - acc.x, LinComb::from_wire(ox) - acc.x);
    Wire oy = s.alloc_computed([&] {
        return s.value_of(bit).is_zero() ? s.eval(acc.y) : s.eval(sum.y);
    });
    s.enforce(bit_lc, sum.y - acc.y, LinComb::from_wire(oy) - acc.y);
    return {LinComb::from_wire(ox), LinComb::from_wire(oy)};
}

void enforce_on_curve(Synthesizer& s, const EdwardsLC& p) {
    const Fr a = jubjub::curve_a();
    const Fr d = jubjub::curve_d();
    Wire xx = s.mul(p.x, p.x);
    Wire yy = s.mul(p.y, p.y);
    Wire xxyy = s.mul(LinComb::from_wire(xx), LinComb::from_wire(yy));
    // a xx + yy - 1 - d xxyy == 0
    LinComb rel = LinComb::from_wire(xx).scale(a) + LinComb::from_wire(yy) -
                  LinComb(Fr::one()) - LinComb::from_wire(xxyy).scale(d);
    s.enforce(rel, LinComb(Fr::one()), LinComb());
}

EdwardsLC fixed_base_mul(Synthesizer& s, std::span<const Wire> scalar_bits, const jubjub::Point& base) {
    EdwardsLC acc = EdwardsLC::constant(jubjub::Point{});  // identity
    jubjub::Point power = base;
    for (size_t i = 0; i < scalar_bits.size(); ++i) {
        acc = edwards_cond_add(s, acc, EdwardsLC::constant(power), scalar_bits[i]);
        power = jubjub::dbl(power);
    }
    return acc;
}

EdwardsLC var_base_mul(Synthesizer& s, std::span<const Wire> scalar_bits, const EdwardsLC& point) {
    EdwardsLC acc = EdwardsLC::constant(jubjub::Point{});
    EdwardsLC power = point;
    for (size_t i = 0; i < scalar_bits.size(); ++i) {
        acc = edwards_cond_add(s, acc, power, scalar_bits[i]);
        if (i + 1 < scalar_bits.size()) power = edwards_add(s, power, power);
    }
    return acc;
}

}  // namespace sans::gadgets
