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

#ifndef SANS_RNG_HPP_
#define SANS_RNG_HPP_

#include <array>
#include <cstdint>
#include <span>

namespace sans {

// Byte source for all randomized operations. Handles are caller-owned and
// must not be shared across threads.
class Rng {
  public:
    virtual ~Rng() = default;
    virtual void fill(std::span<uint8_t> out) = 0;

    std::array<uint8_t, 32> bytes32() {
        std::array<uint8_t, 32> b;
        fill(b);
        return b;
    }
};

// OS entropy (getrandom / /dev/urandom). Throws Error(rng_failure) if the
// kernel source is unavailable.
class SystemRng final : public Rng {
  public:
    void fill(std::span<uint8_t> out) override;
};

// Deterministic generator for tests: SplitMix64 keystream over a seed.
// Not cryptographic.
class TestRng final : public Rng {
  public:
    explicit TestRng(uint64_t seed) : state_(seed) {}

    void fill(std::span<uint8_t> out) override {
        for (size_t i = 0; i < out.size(); i += 8) {
            uint64_t w = next();
            for (size_t j = 0; j < 8 && i + j < out.size(); ++j) out[i + j] = (uint8_t)(w >> (8 * j));
        }
    }

  private:
    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t state_;
};

// Best-effort erasure that the optimizer may not elide.
void secure_wipe(void* p, size_t n);

}  // namespace sans

#endif  // SANS_RNG_HPP_
