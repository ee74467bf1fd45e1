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
// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line each. Usage: sans_acceptance <sans-cli> <scratch-dir>

#include <spawn.h>
#include <sys/resource.h>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "sans/auth_circuit.hpp"
#include "sans/hex.hpp"
#include "sans/poseidon.hpp"
#include "sans/protocol.hpp"
#include "sans/serialization.hpp"
#include "sans/wire.hpp"

extern char** environ;

using namespace sans;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kThreads = 2;

struct Harness {
    int failures = 0;

    void report(const std::string& name, bool pass, const std::string& detail) {
        printf("%s  %-24s %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
        fflush(stdout);
        if (!pass) ++failures;
    }
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Shared material for the whole run.
struct World {
    const AuthCircuit& circuit = auth_circuit();
    ProvingArtifacts arts;
    jubjub::SigningKeypair op_key;
    SystemRng rng;
    int64_t base_now = 1750000000;

    VerifierState make_verifier(int64_t* clock_cell) {
        return VerifierState(arts.vk, op_key, VerifierConfig{}, open_registration_policy(),
                             [clock_cell] { return *clock_cell; });
    }
};

struct HonestRun {
    Credential cred;
    AuthRequest req;
    WitnessAssignment witness;
    std::vector<uint8_t> proof_bytes;
    bool granted = false;
};

int spawn_and_measure(const std::vector<std::string>& args, double& peak_rss_mib) {
    std::vector<char*> argv;
    for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    pid_t pid = 0;
    if (posix_spawn(&pid, args[0].c_str(), nullptr, nullptr, argv.data(), environ) != 0) return -1;
    int status = 0;
    rusage ru{};
    if (wait4(pid, &status, 0, &ru) < 0) return -1;
    peak_rss_mib = (double)ru.ru_maxrss / 1024.0;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        fprintf(stderr, "usage: %s <sans-cli-path> <scratch-dir>\n", argv[0]);
        return 2;
    }
    std::string cli = argv[1];
    std::filesystem::path scratch = argv[2];
    std::filesystem::create_directories(scratch);

    Harness h;
    World w;

    // --- constraint-count fidelity -------------------------------------------
    {
        size_t n = w.circuit.constraint_count();
        bool pass = n > 0 && n < 30000 && n == w.circuit.cs.constraints.size();
        std::ostringstream d;
        d << n << " constraints (reference point 7565, bound < 30000)";
        h.report("constraint-count", pass, d.str());
    }

    printf("     running trusted setup...\n");
    auto t_setup = Clock::now();
    w.arts = groth16_setup(w.circuit.cs, w.rng, kThreads);
    printf("     setup took %.0f ms\n", ms_since(t_setup));
    {
        TestRng seed_rng(20260811);
        w.op_key = jubjub::keygen(seed_rng.bytes32());
    }

    // --- completeness: 100/100 honest runs, randomized --------------------------
    // Also feeds: constant proof size (100 proofs), prove/verify timing, the
    // honest half of oracle equivalence, and unlinkability material.
    std::vector<HonestRun> runs;
    {
        TestRng trng(1);
        int64_t verifier_clock = w.base_now;
        VerifierState state = w.make_verifier(&verifier_clock);
        int granted = 0;
        double prove_ms_total = 0;
        int prove_timed = 0;
        for (int i = 0; i < 100; ++i) {
            uint64_t validity = 3600 + (trng.bytes32()[0] % 90) * 86400ULL;
            int64_t prover_now = w.base_now + i * 7;
            int64_t skew = ((int64_t)(trng.bytes32()[1] % 3) - 1) * kBucketSeconds;
            verifier_clock = prover_now + skew;

            HonestRun run;
            {
                // register with the verifier's clock
                SystemRng reg_rng;
                run.cred = state.register_user({}, validity, reg_rng);
            }
            auto t0 = Clock::now();
            run.req = authenticate_prove(run.cred, prover_now, w.arts.pk, w.rng, kThreads);
            if (prove_timed < 20) {
                prove_ms_total += ms_since(t0);
                ++prove_timed;
            }
            run.witness = assign_witness(run.cred, Fr::from_u64(run.req.c_bucket));
            run.proof_bytes = serialize_proof(run.req.proof, w.circuit.fingerprint);
            Decision d = state.authenticate_verify(run.req, verifier_clock);
            run.granted = d.granted;
            if (d.granted) ++granted;
            runs.push_back(std::move(run));
        }
        std::ostringstream d;
        d << granted << "/100 grants across randomized tokens, validity windows, skew";
        h.report("completeness-suite", granted == 100, d.str());

        // --- proving time -----------------------------------------------------
        double prove_mean = prove_ms_total / prove_timed;
        std::ostringstream dp;
        dp << "mean " << (int)prove_mean << " ms over " << prove_timed << " runs (bound 5000 ms)";
        h.report("proving-time", prove_timed >= 10 && prove_mean <= 5000.0, dp.str());
    }

    // --- verification time ------------------------------------------------------
    {
        auto pub = runs[0].req.public_inputs();
        // warm call, then timed loop
        (void)groth16_verify(w.arts.vk, pub, runs[0].req.proof);
        constexpr int kIters = 20;
        auto t0 = Clock::now();
        bool all = true;
        for (int i = 0; i < kIters; ++i) {
            const auto& r = runs[(size_t)i % runs.size()];
            all = all && groth16_verify(w.arts.vk, r.req.public_inputs(), r.req.proof);
        }
        double mean = ms_since(t0) / kIters;
        std::ostringstream d;
        d << "mean " << mean << " ms over " << kIters << " runs (bound 50 ms)";
        h.report("verification-time", all && mean <= 50.0, d.str());
    }

    // --- constant proof size ------------------------------------------------------
    {
        std::set<size_t> sizes;
        for (const auto& r : runs) sizes.insert(r.proof_bytes.size());
        std::ostringstream d;
        d << "encoded size " << *sizes.begin() << " bytes across " << runs.size() << " credentials";
        h.report("constant-proof-size", sizes.size() == 1, d.str());
    }

    // --- native memory: peak RSS of a fresh prove process ------------------------
    {
        auto pk_path = scratch / "accept.pk";
        auto vk_path = scratch / "accept.vk";
        auto cred_path = scratch / "accept.cred";
        auto req_path = scratch / "accept.req";
        write_file(pk_path, serialize_proving_key(w.arts.pk));
        write_file(vk_path, serialize_verifying_key(w.arts.vk));
        write_file(cred_path, encode_credential(runs[0].cred));
        double rss = 0;
        int rc = spawn_and_measure({cli, "prove", "--credential", cred_path.string(), "--pk-params",
                                    pk_path.string(), "--out", req_path.string(), "--now",
                                    std::to_string(w.base_now), "--threads", "2"},
                                   rss);
        std::ostringstream d;
        d << "prove child exit " << rc << ", peak RSS " << (int)rss << " MiB (bound 200 MiB)";
        h.report("native-memory", rc == 0 && rss > 0 && rss <= 200.0, d.str());
    }

    // --- soundness: the negative matrix, zero acceptances -------------------------
    {
        int accepted = 0, attempts = 0;
        int64_t verifier_clock = w.base_now;
        VerifierState state = w.make_verifier(&verifier_clock);

        // (a) tampered private wires, proved with the unchecked prover
        {
            TestRng trng(2);
            for (int i = 0; i < 12; ++i) {
                const auto& r = runs[(size_t)i];
                auto tampered = r.witness;
                Wire wire = 6 + (Wire)(i % 4);
                tampered.values[wire] += Fr::one();
                Proof p = groth16_prove_unchecked(w.arts.pk, w.circuit.cs, tampered.values, w.rng, kThreads);
                ++attempts;
                if (groth16_verify(w.arts.vk, tampered.public_inputs(), p)) ++accepted;
            }
        }
        // (b) 5-way public input perturbation on an honest proof
        {
            auto pub = runs[1].req.public_inputs();
            for (size_t i = 0; i < pub.size(); ++i) {
                auto bad = pub;
                bad[i] += Fr::one();
                ++attempts;
                if (groth16_verify(w.arts.vk, bad, runs[1].req.proof)) ++accepted;
            }
        }
        // (c) cross-setup proof
        {
            SystemRng rng2;
            ProvingArtifacts other = groth16_setup(w.circuit.cs, rng2, kThreads);
            ++attempts;
            if (groth16_verify(other.vk, runs[2].req.public_inputs(), runs[2].req.proof)) ++accepted;
        }
        // (d) expired credential via the verifier policy
        {
            SystemRng reg_rng;
            verifier_clock = w.base_now;
            Credential cred = state.register_user({}, 3600, reg_rng);
            int64_t later = (int64_t)t_exp_seconds(cred) + 61;
            AuthRequest req = authenticate_prove(cred, later, w.arts.pk, w.rng, kThreads);
            verifier_clock = later;
            ++attempts;
            Decision d = state.authenticate_verify(req, later);
            if (d.granted) ++accepted;
            bool right_reason = !d.granted && d.reason == DenyReason::expired;
            if (!right_reason) ++accepted;  // wrong rejection reason fails the criterion too
        }
        // (e) stale challenge
        {
            const auto& r = runs[3];
            verifier_clock = w.base_now + 3000;
            ++attempts;
            Decision d = state.authenticate_verify(r.req, verifier_clock);
            if (d.granted || d.reason != DenyReason::stale_challenge) ++accepted;
        }
        // (f) zero-output proof from an invalid signature
        {
            Credential broken = runs[4].cred;
            broken.sig.s = broken.sig.s + jubjub::Scalar::from_u64(1);
            AuthRequest req = authenticate_prove(broken, w.base_now, w.arts.pk, w.rng, kThreads);
            verifier_clock = w.base_now;
            ++attempts;
            Decision d = state.authenticate_verify(req, w.base_now);
            if (d.granted || d.reason != DenyReason::zero_output) ++accepted;
        }
        // (g) replayed out with a fresh challenge slot
        {
            auto req = runs[5].req;
            req.c_bucket += 1;  // fresh bucket, stale everything else
            verifier_clock = (int64_t)(req.c_bucket * kBucketSeconds);
            ++attempts;
            Decision d = state.authenticate_verify(req, verifier_clock);
            if (d.granted) ++accepted;
        }
        std::ostringstream d;
        d << accepted << " acceptances over " << attempts << " adversarial attempts";
        h.report("soundness-suite", accepted == 0, d.str());
    }

    // --- replay suite ---------------------------------------------------------------
    {
        int64_t verifier_clock = w.base_now;
        VerifierState state = w.make_verifier(&verifier_clock);
        wire::Server server(state, w.circuit.fingerprint, nullptr);
        server.start("127.0.0.1", 0);
        SystemRng reg_rng;
        Credential cred = state.register_user({}, 86400 * 30, reg_rng);
        AuthRequest req = authenticate_prove(cred, w.base_now, w.arts.pk, w.rng, kThreads);
        std::string frame = wire::encode_auth_req(req, w.circuit.fingerprint);

        auto first = wire::client_send_auth_frame("127.0.0.1", server.port(), frame, w.circuit.fingerprint);
        auto second = wire::client_send_auth_frame("127.0.0.1", server.port(), frame, w.circuit.fingerprint);
        bool first_terminated = !state.is_session_active(first.session_id);

        // same credential, next bucket: a fresh grant with a distinct output
        int64_t next = w.base_now + kBucketSeconds;
        verifier_clock = next;
        AuthRequest req2 = authenticate_prove(cred, next, w.arts.pk, w.rng, kThreads);
        auto third = wire::client_send_auth_frame("127.0.0.1", server.port(),
                                                  wire::encode_auth_req(req2, w.circuit.fingerprint),
                                                  w.circuit.fingerprint);
        server.stop();

        bool pass = first.granted && !second.granted && second.code == "replay_detected" &&
                    first_terminated && third.granted && !(req2.out == req.out);
        std::ostringstream d;
        d << "grant,replay(" << second.code << "),terminated=" << first_terminated
          << ",next-bucket grant with distinct out";
        h.report("replay-suite", pass, d.str());
    }

    // --- unlinkability across 20 buckets ----------------------------------------------
    {
        SystemRng reg_rng;
        int64_t verifier_clock = w.base_now;
        VerifierState state = w.make_verifier(&verifier_clock);
        Credential cred = state.register_user({}, 86400 * 30, reg_rng);
        std::set<std::string> outs, proofs, challenges;
        std::set<std::string> pks, texps;
        for (int i = 0; i < 20; ++i) {
            int64_t now = w.base_now + i * kBucketSeconds;
            AuthRequest req = authenticate_prove(cred, now, w.arts.pk, w.rng, kThreads);
            outs.insert(req.out.to_dec());
            proofs.insert(to_hex(serialize_proof(req.proof, w.circuit.fingerprint)));
            challenges.insert(std::to_string(req.c_bucket));
            pks.insert(to_hex(jubjub::encode_point(req.pk_so)));
            texps.insert(std::to_string(req.t_exp));
        }
        bool pass = outs.size() == 20 && proofs.size() == 20 && challenges.size() == 20 &&
                    pks.size() == 1 && texps.size() == 1;
        std::ostringstream d;
        d << outs.size() << "/20 distinct outs, " << proofs.size()
          << "/20 distinct proof encodings; pk_SO and t_exp constant";
        h.report("unlinkability", pass, d.str());
    }

    // --- oracle equivalence -----------------------------------------------------------
    {
        bool vectors_ok = true;
        size_t poseidon_checked = 0, eddsa_checked = 0;
        try {
            std::ifstream pf(std::string(TEST_VECTOR_DIR_PATH) + "/poseidon_oracle.json");
            nlohmann::json pj = nlohmann::json::parse(pf);
            for (const auto& c : pj["digests"]) {
                std::vector<Fr> inputs;
                for (const auto& s : c["inputs"]) inputs.push_back(*Fr::from_dec(s.get<std::string>()));
                vectors_ok &= poseidon_hash(inputs).to_dec() == c["digest"].get<std::string>();
                ++poseidon_checked;
            }
            std::ifstream ef(std::string(TEST_VECTOR_DIR_PATH) + "/eddsa_vectors.json");
            nlohmann::json ej = nlohmann::json::parse(ef);
            for (const auto& c : ej["cases"]) {
                auto seed_bytes = from_hex(c["seed"].get<std::string>());
                std::array<uint8_t, 32> seed;
                std::copy(seed_bytes->begin(), seed_bytes->end(), seed.begin());
                auto kp = jubjub::keygen(seed);
                Fr msg = *Fr::from_dec(c["msg"].get<std::string>());
                auto sig = jubjub::sign(kp, msg);
                vectors_ok &= sig.r.x.to_dec() == c["R"][0].get<std::string>();
                vectors_ok &= sig.s.to_dec() == c["s"].get<std::string>();
                vectors_ok &= jubjub::verify(kp.pk, msg, sig);
                ++eddsa_checked;
            }
        } catch (const std::exception& e) {
            vectors_ok = false;
        }

        // satisfied() vs end-to-end prove/verify on 50 honest + 50 tampered
        int agree = 0;
        TestRng trng(3);
        for (int i = 0; i < 50; ++i) {
            const auto& r = runs[(size_t)i];
            bool sat = satisfied(w.circuit, r.witness);
            bool ver = groth16_verify(w.arts.vk, r.req.public_inputs(), r.req.proof);
            if (sat && ver) ++agree;
        }
        for (int i = 0; i < 50; ++i) {
            auto tampered = runs[(size_t)(i % runs.size())].witness;
            Wire wire = 6 + (Wire)(i % 4);
            tampered.values[wire] += Fr::from_u64(1 + trng.bytes32()[0] % 255);
            bool sat = satisfied(w.circuit, tampered);
            Proof p = groth16_prove_unchecked(w.arts.pk, w.circuit.cs, tampered.values, w.rng, kThreads);
            bool ver = groth16_verify(w.arts.vk, tampered.public_inputs(), p);
            if (!sat && !ver) ++agree;
        }
        bool pass = vectors_ok && poseidon_checked >= 40 && eddsa_checked >= 10 && agree == 100;
        std::ostringstream d;
        d << poseidon_checked << " poseidon + " << eddsa_checked << " eddsa vectors bit-exact; "
          << agree << "/100 oracle/pipeline agreements";
        h.report("oracle-equivalence", pass, d.str());
    }

    printf("%s: %d criterion(s) failed\n", h.failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
           h.failures);
    return h.failures == 0 ? 0 : 1;
}
