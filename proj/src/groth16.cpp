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

#include "sans/groth16.hpp"

#include <cstring>

#include "sans/errors.hpp"
#include "sans/fft.hpp"

namespace sans {

using namespace bn254;

namespace {

Fr random_fr(Rng& rng) {
    for (;;) {
        auto b = rng.bytes32();
        b[31] &= 0x3f;  // the modulus is 254 bits
        if (auto x = Fr::from_bytes(b)) return *x;
    }
}

Fr random_nonzero_fr(Rng& rng) {
    for (;;) {
        Fr x = random_fr(rng);
        if (!x.is_zero()) return x;
    }
}

// QAP polynomial evaluations u_j(tau), v_j(tau), w_j(tau) for every wire j,
// via the Lagrange basis over the evaluation domain.
struct QapEvals {
    std::vector<Fr> u, v, w;
    Fr z_at_tau;
    size_t domain_size;
};

QapEvals evaluate_qap(const ConstraintSystem& cs, const Fr& tau) {
    const size_t m_cons = cs.constraints.size();
    EvaluationDomain domain(m_cons);
    const size_t m = domain.size();

    // Z(tau) and the Lagrange values L_i(tau) = Z(tau) w^i / (m (tau - w^i)).
    Fr z_at_tau = tau.pow(U256(m)) - Fr::one();
    std::vector<Fr> omega_pow(m_cons), denom(m_cons);
    Fr w = Fr::one();
    for (size_t i = 0; i < m_cons; ++i) {
        omega_pow[i] = w;
        denom[i] = tau - w;
        w *= domain.root();
    }
    // Batch inversion of the denominators.
    std::vector<Fr> prefix(m_cons + 1);
    prefix[0] = Fr::one();
    for (size_t i = 0; i < m_cons; ++i) prefix[i + 1] = prefix[i] * denom[i];
    Fr inv_all = prefix[m_cons].inverse();
    std::vector<Fr> lagrange(m_cons);
    Fr m_inv = Fr::from_u64(m).inverse();
    for (size_t i = m_cons; i-- > 0;) {
        Fr d_inv = prefix[i] * inv_all;
        inv_all *= denom[i];
        lagrange[i] = z_at_tau * omega_pow[i] * m_inv * d_inv;
    }

    QapEvals evals;
    evals.u.assign(cs.num_wires, Fr::zero());
    evals.v.assign(cs.num_wires, Fr::zero());
    evals.w.assign(cs.num_wires, Fr::zero());
    evals.z_at_tau = z_at_tau;
    evals.domain_size = m;
    for (size_t i = 0; i < m_cons; ++i) {
        const Constraint& c = cs.constraints[i];
        for (const Term& t : c.a.terms()) evals.u[t.wire] += t.coeff * lagrange[i];
        for (const Term& t : c.b.terms()) evals.v[t.wire] += t.coeff * lagrange[i];
        for (const Term& t : c.c.terms()) evals.w[t.wire] += t.coeff * lagrange[i];
    }
    return evals;
}

std::vector<G1Affine> fixed_base_batch_g1(const FixedBaseTable<Fq>& table, std::span<const Fr> scalars) {
    std::vector<G1> jac(scalars.size());
    for (size_t i = 0; i < scalars.size(); ++i) jac[i] = table.mul(scalars[i]);
    return batch_to_affine<Fq>(jac);
}

std::vector<G2Affine> fixed_base_batch_g2(const FixedBaseTable<Fq2>& table, std::span<const Fr> scalars) {
    std::vector<G2> jac(scalars.size());
    for (size_t i = 0; i < scalars.size(); ++i) jac[i] = table.mul(scalars[i]);
    return batch_to_affine<Fq2>(jac);
}

}  // namespace

ProvingArtifacts groth16_setup(const ConstraintSystem& cs, Rng& rng, int threads) {
    (void)threads;
    Fr tau = random_nonzero_fr(rng);
    Fr alpha = random_nonzero_fr(rng);
    Fr beta = random_nonzero_fr(rng);
    Fr gamma = random_nonzero_fr(rng);
    Fr delta = random_nonzero_fr(rng);

    QapEvals qap = evaluate_qap(cs, tau);
    const size_t n_wires = cs.num_wires;
    const size_t n_pub = cs.num_public;
    const size_t m = qap.domain_size;

    Fr gamma_inv = gamma.inverse();
    Fr delta_inv = delta.inverse();

    // Scalar sides of every query.
    std::vector<Fr> l_scalars;
    l_scalars.reserve(n_wires - n_pub - 1);
    std::vector<Fr> ic_scalars;
    ic_scalars.reserve(n_pub + 1);
    for (size_t j = 0; j < n_wires; ++j) {
        Fr combined = beta * qap.u[j] + alpha * qap.v[j] + qap.w[j];
        if (j <= n_pub) {
            ic_scalars.push_back(combined * gamma_inv);
        } else {
            l_scalars.push_back(combined * delta_inv);
        }
    }
    std::vector<Fr> h_scalars(m - 1);
    Fr zd = qap.z_at_tau * delta_inv;
    Fr tpow = Fr::one();
    for (size_t i = 0; i + 1 < m; ++i) {
        h_scalars[i] = tpow * zd;
        tpow *= tau;
    }

    FixedBaseTable<Fq> g1_table(g1_generator());
    FixedBaseTable<Fq2> g2_table(g2_generator());

    ProvingArtifacts out;
    ProvingKey& pk = out.pk;
    pk.alpha_g1 = to_affine(g1_table.mul(alpha));
    pk.beta_g1 = to_affine(g1_table.mul(beta));
    pk.delta_g1 = to_affine(g1_table.mul(delta));
    pk.beta_g2 = to_affine(g2_table.mul(beta));
    pk.delta_g2 = to_affine(g2_table.mul(delta));
    pk.a_query = fixed_base_batch_g1(g1_table, qap.u);
    pk.b_g1_query = fixed_base_batch_g1(g1_table, qap.v);
    pk.b_g2_query = fixed_base_batch_g2(g2_table, qap.v);
    pk.l_query = fixed_base_batch_g1(g1_table, l_scalars);
    pk.h_query = fixed_base_batch_g1(g1_table, h_scalars);
    pk.fingerprint = cs.fingerprint();

    VerifyingKey& vk = out.vk;
    vk.alpha_beta = pairing(pk.alpha_g1, pk.beta_g2);
    vk.gamma_g2 = to_affine(g2_table.mul(gamma));
    vk.delta_g2 = pk.delta_g2;
    vk.ic = fixed_base_batch_g1(g1_table, ic_scalars);
    vk.fingerprint = pk.fingerprint;

    // Destroy the trapdoor before returning.
    secure_wipe(&tau, sizeof(tau));
    secure_wipe(&alpha, sizeof(alpha));
    secure_wipe(&beta, sizeof(beta));
    secure_wipe(&gamma, sizeof(gamma));
    secure_wipe(&delta, sizeof(delta));
    secure_wipe(&gamma_inv, sizeof(gamma_inv));
    secure_wipe(&delta_inv, sizeof(delta_inv));
    return out;
}

Proof groth16_prove(const ProvingKey& pk, const ConstraintSystem& cs,
                    std::span<const Fr> assignment, Rng& rng, int threads) {
    if (!cs.satisfied(assignment)) {
        throw Error(Errc::proving_failure, "assignment does not satisfy the constraint system");
    }
    return groth16_prove_unchecked(pk, cs, assignment, rng, threads);
}

Proof groth16_prove_unchecked(const ProvingKey& pk, const ConstraintSystem& cs,
                              std::span<const Fr> assignment, Rng& rng, int threads) {
    if (pk.fingerprint != cs.fingerprint()) {
        throw Error(Errc::fingerprint_mismatch, "proving key was generated for a different circuit");
    }
    if (assignment.size() != cs.num_wires) {
        throw Error(Errc::dimension_mismatch, "assignment size");
    }

    EvaluationDomain domain(cs.constraints.size());
    const size_t m = domain.size();

    // Constraint-row evaluations, padded to the domain.
    std::vector<Fr> a_evals(m, Fr::zero()), b_evals(m, Fr::zero()), c_evals(m, Fr::zero());
    for (size_t i = 0; i < cs.constraints.size(); ++i) {
        const Constraint& c = cs.constraints[i];
        a_evals[i] = c.a.evaluate(assignment);
        b_evals[i] = c.b.evaluate(assignment);
        c_evals[i] = c.c.evaluate(assignment);
    }

    // H = (A*B - C) / Z over the shifted coset, back to coefficients.
    domain.ifft(a_evals);
    domain.ifft(b_evals);
    domain.ifft(c_evals);
    domain.coset_fft(a_evals);
    domain.coset_fft(b_evals);
    domain.coset_fft(c_evals);
    Fr zinv = domain.z_on_coset().inverse();
    std::vector<Fr> h_evals(m);
    for (size_t i = 0; i < m; ++i) h_evals[i] = (a_evals[i] * b_evals[i] - c_evals[i]) * zinv;
    domain.coset_ifft(h_evals);
    h_evals.pop_back();  // degree <= m-2

    Fr r = random_fr(rng);
    Fr s = random_fr(rng);

    G1 a_acc = msm<Fq>(pk.a_query, assignment, threads);
    a_acc = add(a_acc, to_jacobian(pk.alpha_g1));
    a_acc = add(a_acc, mul(pk.delta_g1, r));
    G1Affine a = to_affine(a_acc);

    G2 b_acc = msm<Fq2>(pk.b_g2_query, assignment, threads);
    b_acc = add(b_acc, to_jacobian(pk.beta_g2));
    b_acc = add(b_acc, mul(pk.delta_g2, s));
    G2Affine b = to_affine(b_acc);

    G1 b1_acc = msm<Fq>(pk.b_g1_query, assignment, threads);
    b1_acc = add(b1_acc, to_jacobian(pk.beta_g1));
    b1_acc = add(b1_acc, mul(pk.delta_g1, s));

    std::span<const Fr> aux = assignment.subspan(cs.num_public + 1);
    G1 c_acc = msm<Fq>(pk.l_query, aux, threads);
    c_acc = add(c_acc, msm<Fq>(pk.h_query, h_evals, threads));
    c_acc = add(c_acc, mul(a, s));
    c_acc = add(c_acc, mul(to_affine(b1_acc), r));
    Fr rs = r * s;
    c_acc = add(c_acc, mul(pk.delta_g1, -rs));
    G1Affine c = to_affine(c_acc);

    return Proof{a, b, c};
}

bool groth16_verify(const VerifyingKey& vk, std::span<const Fr> public_inputs, const Proof& proof) {
    if (public_inputs.size() + 1 != vk.ic.size()) {
        throw Error(Errc::dimension_mismatch, "expected " + std::to_string(vk.ic.size() - 1) +
                                                  " public inputs, got " + std::to_string(public_inputs.size()));
    }
    if (proof.a.infinity || proof.b.infinity || proof.c.infinity) return false;
    if (!on_curve(proof.a) || !on_curve(proof.b) || !on_curve(proof.c)) return false;

    G1 acc = to_jacobian(vk.ic[0]);
    for (size_t i = 0; i < public_inputs.size(); ++i) {
        acc = add(acc, mul(vk.ic[i + 1], public_inputs[i]));
    }
    G1Affine acc_neg = to_affine(acc).neg();

    std::array<std::pair<G1Affine, G2Affine>, 3> pairs{{
        {proof.a, proof.b},
        {acc_neg, vk.gamma_g2},
        {proof.c.neg(), vk.delta_g2},
    }};
    return pairing_product(pairs) == vk.alpha_beta;
}

}  // namespace sans
