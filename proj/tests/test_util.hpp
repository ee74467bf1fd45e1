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

#ifndef SANS_TESTS_TEST_UTIL_HPP_
#define SANS_TESTS_TEST_UTIL_HPP_

#include <fstream>
#include <string>

#include <json.hpp>

#include "sans/credential.hpp"
#include "sans/ff.hpp"
#include "sans/hex.hpp"
#include "sans/poseidon.hpp"
#include "sans/rng.hpp"

namespace sans::test {

inline nlohmann::json load_vectors(const std::string& name) {
    std::string path = std::string(SANS_TEST_VECTOR_DIR) + "/" + name;
    std::ifstream f(path);
    REQUIRE_MESSAGE(f.good(), "missing vector file ", path);
    return nlohmann::json::parse(f);
}

inline Fr fr_dec(const std::string& s) {
    auto v = Fr::from_dec(s);
    REQUIRE_MESSAGE(v.has_value(), "bad decimal field element ", s);
    return *v;
}

inline Fr random_fr(Rng& rng) {
    for (;;) {
        auto b = rng.bytes32();
        b[31] &= 0x3f;
        if (auto x = Fr::from_bytes(b)) return *x;
    }
}

// A fresh honest credential signed by a keypair derived from `seed_byte`.
inline Credential make_credential(uint64_t seed, uint64_t t_exp_seconds = 4102444800 /* 2100-01-01 */) {
    TestRng rng(seed);
    auto kp_seed = rng.bytes32();
    auto kp = jubjub::keygen(kp_seed);
    Credential cred;
    cred.token = jubjub::sample_token(rng);
    cred.t_exp = Fr::from_u64(t_exp_seconds);
    cred.pk_so = kp.pk;
    cred.sig = jubjub::sign(kp, poseidon_hash({cred.token.value, cred.t_exp}));
    return cred;
}

}  // namespace sans::test

#endif  // SANS_TESTS_TEST_UTIL_HPP_
