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
// Rank-1 constraint system: conjunction of relations <a,z> * <b,z> = <c,z>
// over the scalar field, where z is the wire assignment and wire 0 is the
// constant one.

#ifndef SANS_R1CS_HPP_
#define SANS_R1CS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sans/ff.hpp"

namespace sans {

using Wire = uint32_t;
inline constexpr Wire kOneWire = 0;

struct Term {
    Wire wire;
    Fr coeff;

    bool operator==(const Term&) const = default;
};

// Sparse linear combination over wires, kept sorted by wire index.
class LinComb {
  public:
    LinComb() = default;
    explicit LinComb(const Fr& constant) { add_term(kOneWire, constant); }
    static LinComb from_wire(Wire w) {
        LinComb lc;
        lc.add_term(w, Fr::one());
        return lc;
    }

    void add_term(Wire w, const Fr& coeff);
    LinComb operator+(const LinComb& o) const;
    LinComb operator-(const LinComb& o) const;
    LinComb scale(const Fr& k) const;

    Fr evaluate(std::span<const Fr> assignment) const;
    std::span<const Term> terms() const { return terms_; }
    bool operator==(const LinComb&) const = default;

  private:
    std::vector<Term> terms_;
};

struct Constraint {
    LinComb a, b, c;
};

struct ConstraintSystem {
    size_t num_wires = 1;    // includes the constant wire
    size_t num_public = 0;   // wires 1..num_public
    std::vector<Constraint> constraints;
    std::vector<std::string> public_names;

    size_t num_private() const { return num_wires - 1 - num_public; }

    // Direct constraint evaluation; the proving-system-independent oracle.
    // Throws Error(dimension_mismatch) if assignment size differs.
    bool satisfied(std::span<const Fr> assignment) const;

    // Stable textual description: wire counts, public ordering, per-constraint
    // term lists. Input to the circuit fingerprint.
    std::string describe() const;

    // SHA-256 of describe().
    std::array<uint8_t, 32> fingerprint() const;
};

// Single-pass circuit builder. Construct once for the layout; construct with
// `with_values` to also produce an assignment (same allocation order, so the
// layout is identical by construction).
class Synthesizer {
  public:
    explicit Synthesizer(bool with_values) : with_values_(with_values) {
        values_.push_back(Fr::one());
    }

    // Public inputs must all be allocated before any private wire.
    Wire alloc_public(const std::string& name);
    Wire alloc_private();

    bool with_values() const { return with_values_; }
    void set_value(Wire w, const Fr& value);
    Fr value_of(Wire w) const;
    Fr eval(const LinComb& lc) const;

    // Allocate a private wire whose value (when building with values) is
    // computed by `compute` from the current partial assignment.
    Wire alloc_computed(const std::function<Fr()>& compute);

    void enforce(const LinComb& a, const LinComb& b, const LinComb& c);

    // enforce(lc_a * lc_b == product), returning the product wire.
    Wire mul(const LinComb& a, const LinComb& b);

    ConstraintSystem take_cs() { return std::move(cs_); }
    const ConstraintSystem& cs() const { return cs_; }
    std::vector<Fr> take_values() { return std::move(values_); }

  private:
    ConstraintSystem cs_;
    std::vector<Fr> values_;
    bool with_values_;
    bool saw_private_ = false;
};

}  // namespace sans

#endif  // SANS_R1CS_HPP_
