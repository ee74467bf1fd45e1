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

#include "sans/r1cs.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sans/errors.hpp"
#include "sans/hex.hpp"

namespace sans {

void LinComb::add_term(Wire w, const Fr& coeff) {
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, Wire w2) { return t.wire < w2; });
    if (it != terms_.end() && it->wire == w) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
        return;
    }
    terms_.insert(it, Term{w, coeff});
}

LinComb LinComb::operator+(const LinComb& o) const {
    LinComb r = *this;
    for (const Term& t : o.terms_) r.add_term(t.wire, t.coeff);
    return r;
}

LinComb LinComb::operator-(const LinComb& o) const {
    LinComb r = *this;
    for (const Term& t : o.terms_) r.add_term(t.wire, -t.coeff);
    return r;
}

LinComb LinComb::scale(const Fr& k) const {
    LinComb r;
    if (k.is_zero()) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff *= k;
    return r;
}

Fr LinComb::evaluate(std::span<const Fr> assignment) const {
    Fr acc = Fr::zero();
    for (const Term& t : terms_) acc += t.coeff * assignment[t.wire];
    return acc;
}

bool ConstraintSystem::satisfied(std::span<const Fr> assignment) const {
    if (assignment.size() != num_wires) {
        throw Error(Errc::dimension_mismatch, "assignment has " + std::to_string(assignment.size()) +
                                                  " wires, expected " + std::to_string(num_wires));
    }
    if (assignment[kOneWire] != Fr::one()) return false;
    for (const Constraint& c : constraints) {
        if (c.a.evaluate(assignment) * c.b.evaluate(assignment) != c.c.evaluate(assignment)) return false;
    }
    return true;
}

std::string ConstraintSystem::describe() const {
    std::ostringstream os;
    os << "r1cs v1\n";
    os << "wires " << num_wires << "\n";
    os << "public";
    for (const auto& n : public_names) os << " " << n;
    os << "\n";
    os << "constraints " << constraints.size() << "\n";
    auto dump = [&os](const LinComb& lc) {
        os << lc.terms().size();
        for (const Term& t : lc.terms()) os << " " << t.wire << ":" << t.coeff.to_dec();
    };
    for (const Constraint& c : constraints) {
        dump(c.a);
        os << " | ";
        dump(c.b);
        os << " | ";
        dump(c.c);
        os << "\n";
    }
    return os.str();
}

std::array<uint8_t, 32> ConstraintSystem::fingerprint() const {
    // Streamed binary form of the system: counts, public names, then every
    // term as wire index + canonical coefficient bytes.
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    auto u64 = [ctx](uint64_t v) {
        uint8_t b[8];
        for (int i = 0; i < 8; ++i) b[i] = (uint8_t)(v >> (8 * i));
        EVP_DigestUpdate(ctx, b, 8);
    };
    EVP_DigestUpdate(ctx, "r1cs-fp-v1", 10);
    u64(num_wires);
    u64(num_public);
    for (const auto& n : public_names) {
        u64(n.size());
        EVP_DigestUpdate(ctx, n.data(), n.size());
    }
    u64(constraints.size());
    auto feed = [&](const LinComb& lc) {
        u64(lc.terms().size());
        for (const Term& t : lc.terms()) {
            u64(t.wire);
            auto bytes = t.coeff.to_bytes();
            EVP_DigestUpdate(ctx, bytes.data(), bytes.size());
        }
    };
    for (const Constraint& c : constraints) {
        feed(c.a);
        feed(c.b);
        feed(c.c);
    }
    std::array<uint8_t, 32> out;
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, out.data(), &len);
    EVP_MD_CTX_free(ctx);
    return out;
}

Wire Synthesizer::alloc_public(const std::string& name) {
    assert(!saw_private_ && "public inputs must precede private wires");
    Wire w = (Wire)cs_.num_wires++;
    cs_.num_public++;
    cs_.public_names.push_back(name);
    values_.push_back(Fr::zero());
    return w;
}

Wire Synthesizer::alloc_private() {
    saw_private_ = true;
    Wire w = (Wire)cs_.num_wires++;
    values_.push_back(Fr::zero());
    return w;
}

void Synthesizer::set_value(Wire w, const Fr& value) {
    if (with_values_) values_[w] = value;
}

Fr Synthesizer::value_of(Wire w) const { return values_[w]; }

Fr Synthesizer::eval(const LinComb& lc) const { return lc.evaluate(values_); }

Wire Synthesizer::alloc_computed(const std::function<Fr()>& compute) {
    Wire w = alloc_private();
    if (with_values_) values_[w] = compute();
    return w;
}

void Synthesizer::enforce(const LinComb& a, const LinComb& b, const LinComb& c) {
    cs_.constraints.push_back({a, b, c});
}

Wire Synthesizer::mul(const LinComb& a, const LinComb& b) {
    Wire w = alloc_computed([&] { return eval(a) * eval(b); });
    enforce(a, b, LinComb::from_wire(w));
    return w;
}

}  // namespace sans
