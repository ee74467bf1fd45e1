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
// Operator and user command-line entry points, plus the benchmark harness.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sans/auth_circuit.hpp"
#include "sans/errors.hpp"
#include "sans/hex.hpp"
#include "sans/poseidon.hpp"
#include "sans/protocol.hpp"
#include "sans/serialization.hpp"
#include "sans/wire.hpp"

using namespace sans;
using json = nlohmann::json;

namespace {

// Exit codes, one per error class.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kFormat = 3,       // bad magic / version / truncation / encoding
    kFingerprint = 4,  // artifact belongs to a different circuit
    kInvalidProof = 5,
    kReplay = 6,
    kExpired = 7,
    kRejected = 8,  // other policy rejections
    kTransport = 9,
    kRequirements = 10,
    kInternal = 11,
};

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::bad_magic:
        case Errc::unsupported_version:
        case Errc::truncated_data:
        case Errc::bad_encoding:
        case Errc::malformed_credential:
        case Errc::malformed_point: return kFormat;
        case Errc::fingerprint_mismatch: return kFingerprint;
        case Errc::malformed_proof: return kInvalidProof;
        case Errc::transport_error:
        case Errc::bind_failure: return kTransport;
        case Errc::requirements_not_met:
        case Errc::server_rejected:
        case Errc::invalid_issued_credential: return kRequirements;
        case Errc::frame_too_large: return kFormat;
        default: return kInternal;
    }
}

int exit_code_for_denial(const std::string& code) {
    if (code == "replay_detected") return kReplay;
    if (code == "expired") return kExpired;
    if (code == "invalid_proof") return kInvalidProof;
    return kRejected;
}

int64_t wall_clock() {
    return (int64_t)std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

double rss_mib() {
    rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    return (double)ru.ru_maxrss / 1024.0;
}

struct KeyFile {
    std::array<uint8_t, 32> seed;
};

constexpr char kKeyMagic[8] = {'S', 'A', 'N', 'S', 'K', 'E', 'Y', '1'};

void write_key_file(const std::string& path, const KeyFile& kf) {
    std::vector<uint8_t> out(kKeyMagic, kKeyMagic + 8);
    out.push_back(1);
    out.push_back(0);
    out.insert(out.end(), kf.seed.begin(), kf.seed.end());
    write_file(path, out);
}

KeyFile read_key_file(const std::string& path) {
    auto bytes = read_file(path);
    if (bytes.size() != 42 || memcmp(bytes.data(), kKeyMagic, 8) != 0) {
        throw Error(Errc::bad_magic, path + " is not an operator key file");
    }
    if (bytes[8] != 1 || bytes[9] != 0) throw Error(Errc::unsupported_version, "key file version");
    KeyFile kf;
    std::copy(bytes.begin() + 10, bytes.end(), kf.seed.begin());
    return kf;
}

std::pair<std::string, uint16_t> parse_hostport(const std::string& s) {
    auto pos = s.rfind(':');
    if (pos == std::string::npos) throw Error(Errc::bad_encoding, "expected host:port, got " + s);
    int port = std::stoi(s.substr(pos + 1));
    if (port <= 0 || port > 65535) throw Error(Errc::bad_encoding, "bad port in " + s);
    return {s.substr(0, pos), (uint16_t)port};
}

struct ServeConfig {
    VerifierConfig verifier;
    std::string registration_policy = "preshared";
    std::vector<uint8_t> registration_secret;
};

ServeConfig load_serve_config(const std::string& path) {
    ServeConfig cfg;
    if (!path.empty()) {
        std::ifstream f(path);
        if (!f) throw Error(Errc::truncated_data, "cannot open config " + path);
        json j = json::parse(f, nullptr, false);
        if (j.is_discarded()) throw Error(Errc::bad_encoding, "config is not valid JSON");
        if (j.contains("skew_tolerance_buckets")) cfg.verifier.skew_tolerance_buckets = j["skew_tolerance_buckets"].get<uint64_t>();
        if (j.contains("default_validity_seconds")) cfg.verifier.default_validity_seconds = j["default_validity_seconds"].get<uint64_t>();
        if (j.contains("terminate_active_on_replay")) cfg.verifier.terminate_active_on_replay = j["terminate_active_on_replay"].get<bool>();
        if (j.contains("registration_policy")) cfg.registration_policy = j["registration_policy"].get<std::string>();
        if (j.contains("registration_secret_hex")) {
            auto s = from_hex(j["registration_secret_hex"].get<std::string>());
            if (!s) throw Error(Errc::bad_encoding, "registration_secret_hex is not hex");
            cfg.registration_secret = *s;
        }
    }
    // Environment overrides.
    if (const char* v = std::getenv("SANS_SKEW_TOLERANCE_BUCKETS")) cfg.verifier.skew_tolerance_buckets = std::stoull(v);
    if (const char* v = std::getenv("SANS_DEFAULT_VALIDITY_SECONDS")) cfg.verifier.default_validity_seconds = std::stoull(v);
    if (const char* v = std::getenv("SANS_TERMINATE_ON_REPLAY")) cfg.verifier.terminate_active_on_replay = std::string(v) != "0";
    if (const char* v = std::getenv("SANS_REGISTRATION_POLICY")) cfg.registration_policy = v;
    if (const char* v = std::getenv("SANS_REGISTRATION_SECRET_HEX")) {
        auto s = from_hex(v);
        if (!s) throw Error(Errc::bad_encoding, "SANS_REGISTRATION_SECRET_HEX is not hex");
        cfg.registration_secret = *s;
    }
    return cfg;
}

RegistrationPolicy make_policy(const ServeConfig& cfg) {
    if (cfg.registration_policy == "open") return open_registration_policy();
    if (cfg.registration_policy == "preshared") {
        if (cfg.registration_secret.empty()) {
            // Refuse every registration until a secret is configured; an
            // empty secret must not silently accept empty evidence.
            std::cerr << "serve: preshared registration policy with no secret configured; "
                         "registrations will be refused\n";
            return [](std::span<const uint8_t>) { return false; };
        }
        return preshared_secret_policy(cfg.registration_secret);
    }
    throw Error(Errc::bad_encoding, "unknown registration policy " + cfg.registration_policy);
}

std::vector<uint8_t> load_evidence(const std::string& hex_arg, const std::string& file_arg) {
    if (!file_arg.empty()) return read_file(file_arg);
    auto b = from_hex(hex_arg);
    if (!b) throw Error(Errc::bad_encoding, "--evidence is not lowercase hex");
    return *b;
}

// --- bench -------------------------------------------------------------------

struct BenchRecord {
    std::string operation;
    int iterations;
    double mean_ms;
    double p95_ms;
    double peak_rss_mib;
    size_t constraint_count;
    int thread_count;
    std::string curve = "bn254";
};

const char* kBenchCsvHeader = "operation,iterations,mean_ms,p95_ms,peak_rss_mib,constraint_count,thread_count,curve";

std::string csv_line(const BenchRecord& r) {
    char buf[256];
    snprintf(buf, sizeof(buf), "%s,%d,%.3f,%.3f,%.1f,%zu,%d,%s", r.operation.c_str(), r.iterations,
             r.mean_ms, r.p95_ms, r.peak_rss_mib, r.constraint_count, r.thread_count, r.curve.c_str());
    return buf;
}

json json_record(const BenchRecord& r) {
    json j;
    j["operation"] = r.operation;
    j["iterations"] = r.iterations;
    j["mean_ms"] = r.mean_ms;
    j["p95_ms"] = r.p95_ms;
    j["peak_rss_mib"] = r.peak_rss_mib;
    j["constraint_count"] = r.constraint_count;
    j["thread_count"] = r.thread_count;
    j["curve"] = r.curve;
    return j;
}

template <typename F>
BenchRecord time_op(const std::string& name, int iterations, int threads, size_t constraints, F&& op) {
    std::vector<double> samples;
    samples.reserve((size_t)iterations);
    for (int i = 0; i < iterations; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        op(i);
        samples.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    double mean = 0;
    for (double s : samples) mean += s;
    mean /= (double)samples.size();
    double p95 = sorted[(size_t)((double)(sorted.size() - 1) * 0.95)];
    return BenchRecord{name, iterations, mean, p95, rss_mib(), constraints, threads};
}

int run_bench(int iterations, int threads, const std::string& out_path, bool json_out) {
    if (iterations < 10) iterations = 10;  // prove/verify records need >= 10 samples
    const AuthCircuit& circuit = auth_circuit();
    SystemRng rng;
    std::vector<BenchRecord> records;

    ProvingArtifacts arts;
    records.push_back(time_op("setup", 1, threads, circuit.constraint_count(),
                              [&](int) { arts = groth16_setup(circuit.cs, rng, threads); }));

    auto seed = rng.bytes32();
    auto kp = jubjub::keygen(seed);
    Credential cred;
    cred.token = jubjub::sample_token(rng);
    cred.t_exp = Fr::from_u64((uint64_t)quantize_expiry(wall_clock(), 30 * 86400));
    cred.pk_so = kp.pk;
    cred.sig = jubjub::sign(kp, poseidon_hash({cred.token.value, cred.t_exp}));

    int64_t now = wall_clock();
    WitnessAssignment w = assign_witness(cred, derive_challenge(now).value());
    Proof proof;
    records.push_back(time_op("prove", iterations, threads, circuit.constraint_count(),
                              [&](int) { proof = groth16_prove(arts.pk, circuit.cs, w.values, rng, threads); }));

    auto pub = w.public_inputs();
    bool all_ok = true;
    records.push_back(time_op("verify", iterations, threads, circuit.constraint_count(),
                              [&](int) { all_ok = all_ok && groth16_verify(arts.vk, pub, proof); }));
    if (!all_ok) {
        std::cerr << "bench: verification failed\n";
        return kFailure;
    }

    std::string csv = kBenchCsvHeader;
    csv += "\n";
    for (const auto& r : records) csv += csv_line(r) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << csv;
    }
    if (json_out) {
        json j = json::array();
        for (const auto& r : records) j.push_back(json_record(r));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << csv;
        double prove_mean = records[1].mean_ms;
        std::cout << "constraints: " << circuit.constraint_count()
                  << " (circomlib-gadget baseline: 7565)\n";
        std::cout << "prove mean: " << prove_mean << " ms against a 5000 ms desktop budget; "
                  << "verify mean: " << records[2].mean_ms << " ms against a 50 ms budget\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SANS: self-sovereign network-slice authentication"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output");

    // keygen
    auto* cmd_keygen = app.add_subcommand("keygen", "generate an operator signing key");
    std::string keygen_out, keygen_seed_hex;
    cmd_keygen->add_option("--out", keygen_out, "key file path")->required();
    cmd_keygen->add_option("--seed", keygen_seed_hex, "32-byte hex seed (default: system entropy)");

    // setup
    auto* cmd_setup = app.add_subcommand("setup", "per-operator trusted setup for the auth circuit");
    std::string setup_pk = "sans.pk", setup_vk = "sans.vk";
    int setup_threads = 1;
    cmd_setup->add_option("--pk", setup_pk, "proving parameters output");
    cmd_setup->add_option("--vk", setup_vk, "verifying parameters output");
    cmd_setup->add_option("--threads", setup_threads, "prover thread budget");

    // circuit-info
    auto* cmd_info = app.add_subcommand("circuit-info", "print the circuit layout description");

    // issue
    auto* cmd_issue = app.add_subcommand("issue", "issue a credential locally (operator)");
    std::string issue_key, issue_out;
    uint64_t issue_validity = 0;
    int64_t issue_now = -1;
    cmd_issue->add_option("--key", issue_key, "operator key file")->required();
    cmd_issue->add_option("--out", issue_out, "credential output path")->required();
    cmd_issue->add_option("--validity", issue_validity, "validity in seconds (default 30 days)");
    cmd_issue->add_option("--now", issue_now, "clock override (unix seconds)");

    // prove
    auto* cmd_prove = app.add_subcommand("prove", "build an authentication request");
    std::string prove_cred, prove_pk, prove_out;
    int64_t prove_now = -1;
    int prove_threads = 1;
    cmd_prove->add_option("--credential", prove_cred, "credential file")->required();
    cmd_prove->add_option("--pk-params", prove_pk, "proving parameters file")->required();
    cmd_prove->add_option("--out", prove_out, "request payload output")->required();
    cmd_prove->add_option("--now", prove_now, "clock override (unix seconds)");
    cmd_prove->add_option("--threads", prove_threads, "prover thread budget");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify a request's proof against public inputs");
    std::string verify_vk, verify_req;
    cmd_verify->add_option("--vk", verify_vk, "verifying parameters file")->required();
    cmd_verify->add_option("--request", verify_req, "request payload file")->required();

    // serve
    auto* cmd_serve = app.add_subcommand("serve", "run the slice-operator daemon");
    std::string serve_bind = "127.0.0.1:7450", serve_vk, serve_key, serve_config;
    cmd_serve->add_option("--bind", serve_bind, "host:port to bind");
    cmd_serve->add_option("--vk", serve_vk, "verifying parameters file")->required();
    cmd_serve->add_option("--key", serve_key, "operator key file")->required();
    cmd_serve->add_option("--config", serve_config, "JSON config file");

    // register
    auto* cmd_register = app.add_subcommand("register", "register with an operator (user)");
    std::string reg_server, reg_evidence_hex, reg_evidence_file, reg_out;
    cmd_register->add_option("--server", reg_server, "host:port")->required();
    cmd_register->add_option("--evidence", reg_evidence_hex, "evidence bytes, lowercase hex");
    cmd_register->add_option("--evidence-file", reg_evidence_file, "evidence from file");
    cmd_register->add_option("--out", reg_out, "credential output path")->required();

    // authenticate
    auto* cmd_auth = app.add_subcommand("authenticate", "authenticate a session (user)");
    std::string auth_server, auth_cred, auth_pk;
    int64_t auth_now = -1;
    int auth_threads = 1;
    cmd_auth->add_option("--server", auth_server, "host:port")->required();
    cmd_auth->add_option("--credential", auth_cred, "credential file")->required();
    cmd_auth->add_option("--pk-params", auth_pk, "proving parameters file")->required();
    cmd_auth->add_option("--now", auth_now, "clock override (unix seconds)");
    cmd_auth->add_option("--threads", auth_threads, "prover thread budget");

    // bench
    auto* cmd_bench = app.add_subcommand("bench", "measure setup/prove/verify cost");
    int bench_iterations = 10, bench_threads = 1;
    std::string bench_out;
    cmd_bench->add_option("--iterations", bench_iterations, "iterations per operation (min 10)")
        ->check(CLI::Range(1, 100000));
    cmd_bench->add_option("--threads", bench_threads, "prover thread budget");
    cmd_bench->add_option("--out", bench_out, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const AuthCircuit& circuit = auth_circuit();

        if (*cmd_keygen) {
            KeyFile kf;
            if (!keygen_seed_hex.empty()) {
                auto seed = from_hex(keygen_seed_hex);
                if (!seed || seed->size() != 32) throw Error(Errc::bad_encoding, "--seed must be 32 bytes of hex");
                std::copy(seed->begin(), seed->end(), kf.seed.begin());
            } else {
                SystemRng rng;
                kf.seed = rng.bytes32();
            }
            write_key_file(keygen_out, kf);
            auto kp = jubjub::keygen(kf.seed);
            if (json_out) {
                json j;
                j["pk"] = to_hex(jubjub::encode_point(kp.pk));
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "operator key written to " << keygen_out << "\n";
                std::cout << "pk: " << to_hex(jubjub::encode_point(kp.pk)) << "\n";
            }
            return kOk;
        }

        if (*cmd_setup) {
            SystemRng rng;
            ProvingArtifacts arts = groth16_setup(circuit.cs, rng, setup_threads);
            write_file(setup_pk, serialize_proving_key(arts.pk));
            write_file(setup_vk, serialize_verifying_key(arts.vk));
            if (json_out) {
                json j;
                j["pk"] = setup_pk;
                j["vk"] = setup_vk;
                j["constraints"] = circuit.constraint_count();
                j["fingerprint"] = to_hex(circuit.fingerprint);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "setup complete: " << setup_pk << ", " << setup_vk << " ("
                          << circuit.constraint_count() << " constraints)\n";
            }
            return kOk;
        }

        if (*cmd_info) {
            std::cout << circuit.describe();
            return kOk;
        }

        if (*cmd_issue) {
            KeyFile kf = read_key_file(issue_key);
            auto kp = jubjub::keygen(kf.seed);
            int64_t now = issue_now >= 0 ? issue_now : wall_clock();
            VerifierConfig cfg;
            VerifierState state(VerifyingKey{}, kp, cfg, open_registration_policy(), [now] { return now; });
            SystemRng rng;
            Credential cred = state.register_user({}, issue_validity, rng);
            write_file(issue_out, encode_credential(cred));
            if (json_out) {
                json j;
                j["credential"] = issue_out;
                j["t_exp"] = t_exp_seconds(cred);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "credential written to " << issue_out << " (t_exp " << t_exp_seconds(cred) << ")\n";
            }
            return kOk;
        }

        if (*cmd_prove) {
            auto cred = decode_credential(read_file(prove_cred));
            auto pk = deserialize_proving_key(read_file(prove_pk), circuit.fingerprint);
            int64_t now = prove_now >= 0 ? prove_now : wall_clock();
            SystemRng rng;
            AuthRequest req = authenticate_prove(cred, now, pk, rng, prove_threads);
            std::string payload = wire::encode_auth_req(req, pk.fingerprint);
            write_file(prove_out, std::vector<uint8_t>(payload.begin(), payload.end()));
            if (json_out) {
                json j;
                j["request"] = prove_out;
                j["c"] = req.c_bucket;
                j["out"] = to_hex(req.out.to_bytes());
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "request written to " << prove_out << " (bucket " << req.c_bucket << ")\n";
            }
            return kOk;
        }

        if (*cmd_verify) {
            auto vk = deserialize_verifying_key(read_file(verify_vk), circuit.fingerprint);
            auto payload_bytes = read_file(verify_req);
            std::string payload(payload_bytes.begin(), payload_bytes.end());
            auto msg = wire::decode_message(payload, vk.fingerprint);
            if (msg.type != "AUTH_REQ") throw Error(Errc::bad_encoding, "not an AUTH_REQ payload");
            bool ok = groth16_verify(vk, msg.auth_request.public_inputs(), msg.auth_request.proof);
            if (json_out) {
                json j;
                j["verified"] = ok;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (ok ? "proof verifies\n" : "proof does NOT verify\n");
            }
            return ok ? kOk : kInvalidProof;
        }

        if (*cmd_serve) {
            auto [host, port] = parse_hostport(serve_bind);
            auto vk = deserialize_verifying_key(read_file(serve_vk), circuit.fingerprint);
            KeyFile kf = read_key_file(serve_key);
            auto kp = jubjub::keygen(kf.seed);
            ServeConfig cfg = load_serve_config(serve_config);
            VerifierState state(vk, kp, cfg.verifier, make_policy(cfg), [] { return wall_clock(); });
            wire::Server server(state, circuit.fingerprint, &std::cout);
            server.start(host, port);
            std::cout << "serving on " << host << ":" << server.port() << "\n";
            // Run until interrupted.
            static std::atomic<bool> stop_flag{false};
            std::signal(SIGINT, [](int) { stop_flag = true; });
            std::signal(SIGTERM, [](int) { stop_flag = true; });
            while (!stop_flag) {
                std::this_thread::sleep_for(std::chrono::milliseconds(200));
                state.sweep_cache(state.now());
            }
            server.stop();
            return kOk;
        }

        if (*cmd_register) {
            auto [host, port] = parse_hostport(reg_server);
            auto evidence = load_evidence(reg_evidence_hex, reg_evidence_file);
            Credential cred = wire::client_register(host, port, evidence);
            write_file(reg_out, encode_credential(cred));
            if (json_out) {
                json j;
                j["credential"] = reg_out;
                j["t_exp"] = t_exp_seconds(cred);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "registered; credential written to " << reg_out << "\n";
            }
            return kOk;
        }

        if (*cmd_auth) {
            auto [host, port] = parse_hostport(auth_server);
            auto cred = decode_credential(read_file(auth_cred));
            auto pk = deserialize_proving_key(read_file(auth_pk), circuit.fingerprint);
            int64_t now = auth_now >= 0 ? auth_now : wall_clock();
            auto outcome = wire::client_authenticate(host, port, cred, pk, now, auth_threads);
            if (json_out) {
                json j;
                j["granted"] = outcome.granted;
                if (outcome.granted) {
                    j["session_id"] = to_hex(outcome.session_id);
                } else {
                    j["code"] = outcome.code;
                }
                std::cout << j.dump() << "\n";
            } else if (outcome.granted) {
                std::cout << "granted, session " << to_hex(outcome.session_id) << "\n";
            } else {
                std::cout << "rejected: " << outcome.code << "\n";
            }
            return outcome.granted ? kOk : exit_code_for_denial(outcome.code);
        }

        if (*cmd_bench) {
            return run_bench(bench_iterations, bench_threads, bench_out, json_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
