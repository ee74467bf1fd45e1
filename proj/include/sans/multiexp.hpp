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
// Multi-scalar multiplication (Pippenger buckets) and fixed-base tables.

#ifndef SANS_MULTIEXP_HPP_
#define SANS_MULTIEXP_HPP_

#include <atomic>
#include <cassert>
#include <span>
#include <thread>
#include <vector>

#include "sans/bn254.hpp"

namespace sans::bn254 {

namespace detail {

inline unsigned window_bits(size_t n) {
    if (n < 32) return 3;
    unsigned c = 1;
    while ((size_t(1) << (c + 1)) < n) ++c;
    return c > 16 ? 16 : c;
}

inline unsigned scalar_window(const U256& s, unsigned lo_bit, unsigned bits) {
    unsigned limb = lo_bit / 64, off = lo_bit % 64;
    uint64_t w = s.v[limb] >> off;
    if (off + bits > 64 && limb < 3) w |= s.v[limb + 1] << (64 - off);
    return (unsigned)(w & ((uint64_t(1) << bits) - 1));
}

}  // namespace detail

// sum_i scalars[i] * bases[i]. Scalars are canonical field values. threads <= 0
// means one thread per hardware core.
template <typename FF>
Jacobian<FF> msm(std::span<const Affine<FF>> bases, std::span<const Fr> scalars, int threads = 1) {
    assert(bases.size() == scalars.size());
    const size_t n = bases.size();
    if (n == 0) return {};

    std::vector<U256> repr(n);
    for (size_t i = 0; i < n; ++i) repr[i] = scalars[i].to_u256();

    const unsigned c = detail::window_bits(n);
    const unsigned windows = (254 + c - 1) / c;
    if (threads <= 0) threads = (int)std::thread::hardware_concurrency();
    if (threads < 1) threads = 1;

    std::vector<Jacobian<FF>> window_sums(windows);
    auto run_window = [&](unsigned w) {
        std::vector<Jacobian<FF>> buckets((size_t(1) << c) - 1);
        for (size_t i = 0; i < n; ++i) {
            unsigned digit = detail::scalar_window(repr[i], w * c, c);
            if (digit != 0) buckets[digit - 1] = add_mixed(buckets[digit - 1], bases[i]);
        }
        Jacobian<FF> running, total;
        for (size_t b = buckets.size(); b-- > 0;) {
            running = add(running, buckets[b]);
            total = add(total, running);
        }
        window_sums[w] = total;
    };

    if (threads == 1 || windows == 1) {
        for (unsigned w = 0; w < windows; ++w) run_window(w);
    } else {
        std::vector<std::thread> pool;
        std::atomic<unsigned> next{0};
        for (int t = 0; t < threads && t < (int)windows; ++t) {
            pool.emplace_back([&]() {
                for (unsigned w = next.fetch_add(1); w < windows; w = next.fetch_add(1)) run_window(w);
            });
        }
        for (auto& th : pool) th.join();
    }

    Jacobian<FF> acc;
    for (size_t w = windows; w-- > 0;) {
        for (unsigned i = 0; i < c; ++i) acc = dbl(acc);
        acc = add(acc, window_sums[w]);
    }
    return acc;
}

// Windowed table for many scalar multiples of one base; setup uses this for
// the query vectors.
template <typename FF>
class FixedBaseTable {
  public:
    explicit FixedBaseTable(const Affine<FF>& base, unsigned bits = 8) : bits_(bits) {
        const unsigned windows = (254 + bits - 1) / bits;
        table_.resize(windows);
        Jacobian<FF> current = to_jacobian(base);
        for (unsigned w = 0; w < windows; ++w) {
            auto& row = table_[w];
            row.resize((size_t(1) << bits));
            Jacobian<FF> acc;
            for (size_t d = 1; d < row.size(); ++d) {
                acc = add(acc, current);
                row[d] = acc;
            }
            current = acc;  // (2^bits - 1) * current
            current = add(current, table_[w][1]);
        }
    }

    Jacobian<FF> mul(const Fr& k) const {
        U256 s = k.to_u256();
        Jacobian<FF> acc;
        for (unsigned w = 0; w < table_.size(); ++w) {
            unsigned digit = detail::scalar_window(s, w * bits_, bits_);
            if (digit) acc = add(acc, table_[w][digit]);
        }
        return acc;
    }

  private:
    unsigned bits_;
    std::vector<std::vector<Jacobian<FF>>> table_;
};

// Batched Jacobian -> affine conversion with one shared inversion chain.
template <typename FF>
std::vector<Affine<FF>> batch_to_affine(std::span<const Jacobian<FF>> points) {
    std::vector<Affine<FF>> out(points.size());
    std::vector<FF> zs;
    zs.reserve(points.size());
    for (const auto& p : points) {
        if (!p.is_infinity()) zs.push_back(p.z);
    }
    // Montgomery batch inversion.
    std::vector<FF> prefix(zs.size() + 1);
    prefix[0] = FF::one();
    for (size_t i = 0; i < zs.size(); ++i) prefix[i + 1] = prefix[i] * zs[i];
    FF inv_all = prefix.back().inverse();
    std::vector<FF> zinv(zs.size());
    for (size_t i = zs.size(); i-- > 0;) {
        zinv[i] = prefix[i] * inv_all;
        inv_all = inv_all * zs[i];
    }
    size_t k = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (p.is_infinity()) {
            out[i] = {};
            continue;
        }
        FF zi = zinv[k++];
        FF zi2 = zi.square();
        out[i] = {p.x * zi2, p.y * zi2 * zi, false};
    }
    return out;
}

}  // namespace sans::bn254

#endif  // SANS_MULTIEXP_HPP_
