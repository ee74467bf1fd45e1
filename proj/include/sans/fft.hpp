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
// Radix-2 evaluation domain over the BN254 scalar field (2-adicity 28).

#ifndef SANS_FFT_HPP_
#define SANS_FFT_HPP_

#include <cassert>
#include <vector>

#include "sans/ff.hpp"

namespace sans {

class EvaluationDomain {
  public:
    // Smallest power-of-two domain with size >= min_size.
    explicit EvaluationDomain(size_t min_size) {
        size_ = 1;
        log_size_ = 0;
        while (size_ < min_size) {
            size_ <<= 1;
            ++log_size_;
        }
        assert(log_size_ <= FrParams::two_adicity);
        // root = g^((r-1) / size), g the field generator.
        U256 e;
        U256::sub(FrParams::modulus, U256(1), e);
        for (int i = 0; i < log_size_; ++i) e = e.shr1();
        Fr g = Fr::from_u64(FrParams::generator);
        root_ = g.pow(e);
        root_inv_ = root_.inverse();
        size_inv_ = Fr::from_u64(size_).inverse();
        coset_shift_ = g;
        coset_shift_inv_ = g.inverse();
        // Z(shift * w^i) = shift^size - 1, identical across the coset.
        z_on_coset_ = coset_shift_.pow(U256(size_)) - Fr::one();
    }

    size_t size() const { return size_; }
    const Fr& root() const { return root_; }
    const Fr& z_on_coset() const { return z_on_coset_; }

    // In-place FFT: coefficients -> evaluations at w^i (natural order).
    void fft(std::vector<Fr>& a) const { transform(a, root_); }

    // In-place inverse FFT: evaluations -> coefficients.
    void ifft(std::vector<Fr>& a) const {
        transform(a, root_inv_);
        for (Fr& x : a) x *= size_inv_;
    }

    // Evaluations over the coset shift * w^i.
    void coset_fft(std::vector<Fr>& a) const {
        Fr power = Fr::one();
        for (Fr& x : a) {
            x *= power;
            power *= coset_shift_;
        }
        fft(a);
    }

    void coset_ifft(std::vector<Fr>& a) const {
        ifft(a);
        Fr power = Fr::one();
        for (Fr& x : a) {
            x *= power;
            power *= coset_shift_inv_;
        }
    }

  private:
    void transform(std::vector<Fr>& a, const Fr& base_root) const {
        assert(a.size() == size_);
        // Bit-reversal permutation, then butterflies.
        for (size_t i = 1, j = 0; i < size_; ++i) {
            size_t bit = size_ >> 1;
            for (; j & bit; bit >>= 1) j ^= bit;
            j ^= bit;
            if (i < j) std::swap(a[i], a[j]);
        }
        for (size_t len = 2; len <= size_; len <<= 1) {
            Fr wlen = base_root.pow(U256(size_ / len));
            for (size_t i = 0; i < size_; i += len) {
                Fr w = Fr::one();
                for (size_t k = 0; k < len / 2; ++k) {
                    Fr u = a[i + k];
                    Fr v = a[i + k + len / 2] * w;
                    a[i + k] = u + v;
                    a[i + k + len / 2] = u - v;
                    w *= wlen;
                }
            }
        }
    }

    size_t size_;
    int log_size_;
    Fr root_, root_inv_, size_inv_;
    Fr coset_shift_, coset_shift_inv_;
    Fr z_on_coset_;
};

}  // namespace sans

#endif  // SANS_FFT_HPP_
