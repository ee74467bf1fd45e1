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

#include "sans/serialization.hpp"

#include <cstring>
#include <fstream>

#include "sans/errors.hpp"

namespace sans {

using namespace bn254;

namespace {

constexpr char kMagic[4] = {'S', 'A', 'N', 'S'};

class Writer {
  public:
    void u16(uint16_t v) {
        out_.push_back((uint8_t)(v & 0xff));
        out_.push_back((uint8_t)(v >> 8));
    }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) out_.push_back((uint8_t)(v >> (8 * i)));
    }
    void bytes(std::span<const uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
    void fq(const Fq& x) { bytes(x.to_bytes()); }
    void g1(const G1Affine& p) { bytes(encode_g1(p)); }
    void g2(const G2Affine& p) { bytes(encode_g2(p)); }
    void fq12(const Fq12& f) {
        for (const Fq2* e : {&f.c0.a0, &f.c0.a1, &f.c0.a2, &f.c1.a0, &f.c1.a1, &f.c1.a2}) {
            fq(e->c0);
            fq(e->c1);
        }
    }
    std::vector<uint8_t> take() { return std::move(out_); }

  private:
    std::vector<uint8_t> out_;
};

class Reader {
  public:
    explicit Reader(std::span<const uint8_t> b) : data_(b) {}

    std::span<const uint8_t> take(size_t n) {
        if (n > data_.size() - pos_) throw Error(Errc::truncated_data, "payload ends early");
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    uint16_t u16() {
        auto b = take(2);
        return (uint16_t)(b[0] | (b[1] << 8));
    }
    uint32_t u32() {
        auto b = take(4);
        return (uint32_t)b[0] | ((uint32_t)b[1] << 8) | ((uint32_t)b[2] << 16) | ((uint32_t)b[3] << 24);
    }
    Fq fq() {
        auto x = Fq::from_bytes(take(32));
        if (!x) throw Error(Errc::bad_encoding, "non-canonical field element");
        return *x;
    }
    G1Affine g1() {
        auto p = decode_g1(take(64));
        if (!p) throw Error(Errc::bad_encoding, "invalid G1 point");
        return *p;
    }
    G2Affine g2() {
        auto p = decode_g2(take(128));
        if (!p) throw Error(Errc::bad_encoding, "invalid G2 point");
        return *p;
    }
    Fq12 fq12() {
        Fq12 f;
        for (Fq2* e : {&f.c0.a0, &f.c0.a1, &f.c0.a2, &f.c1.a0, &f.c1.a1, &f.c1.a2}) {
            e->c0 = fq();
            e->c1 = fq();
        }
        return f;
    }
    void expect_end() const {
        if (pos_ != data_.size()) throw Error(Errc::truncated_data, "trailing bytes after payload");
    }

  private:
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

void write_header(Writer& w, ArtifactKind kind, const Fingerprint& fp) {
    w.bytes(std::span<const uint8_t>((const uint8_t*)kMagic, 4));
    w.u16(kFormatVersion);
    uint8_t kind_byte = (uint8_t)kind;
    uint8_t curve = kCurveBn254;
    w.bytes(std::span<const uint8_t>(&kind_byte, 1));
    w.bytes(std::span<const uint8_t>(&curve, 1));
    w.bytes(fp);
}

Fingerprint read_header(Reader& r, ArtifactKind kind, const std::optional<Fingerprint>& expected) {
    auto magic = r.take(4);
    if (std::memcmp(magic.data(), kMagic, 4) != 0) throw Error(Errc::bad_magic, "not a SANS artifact");
    uint16_t version = r.u16();
    if (version != kFormatVersion) {
        throw Error(Errc::unsupported_version, "format version " + std::to_string(version));
    }
    uint8_t k = r.take(1)[0];
    if (k != (uint8_t)kind) throw Error(Errc::bad_magic, "wrong artifact kind");
    uint8_t curve = r.take(1)[0];
    if (curve != kCurveBn254) throw Error(Errc::unsupported_version, "unknown curve id");
    auto fp_bytes = r.take(32);
    Fingerprint fp;
    std::copy(fp_bytes.begin(), fp_bytes.end(), fp.begin());
    if (expected && fp != *expected) {
        throw Error(Errc::fingerprint_mismatch, "artifact belongs to a different circuit");
    }
    return fp;
}

}  // namespace

std::vector<uint8_t> serialize_proving_key(const ProvingKey& pk) {
    Writer w;
    write_header(w, ArtifactKind::proving_key, pk.fingerprint);
    w.g1(pk.alpha_g1);
    w.g1(pk.beta_g1);
    w.g1(pk.delta_g1);
    w.g2(pk.beta_g2);
    w.g2(pk.delta_g2);
    w.u32((uint32_t)pk.a_query.size());
    for (const auto& p : pk.a_query) w.g1(p);
    w.u32((uint32_t)pk.b_g1_query.size());
    for (const auto& p : pk.b_g1_query) w.g1(p);
    w.u32((uint32_t)pk.b_g2_query.size());
    for (const auto& p : pk.b_g2_query) w.g2(p);
    w.u32((uint32_t)pk.l_query.size());
    for (const auto& p : pk.l_query) w.g1(p);
    w.u32((uint32_t)pk.h_query.size());
    for (const auto& p : pk.h_query) w.g1(p);
    return w.take();
}

ProvingKey deserialize_proving_key(std::span<const uint8_t> bytes,
                                   const std::optional<Fingerprint>& expected) {
    Reader r(bytes);
    ProvingKey pk;
    pk.fingerprint = read_header(r, ArtifactKind::proving_key, expected);
    pk.alpha_g1 = r.g1();
    pk.beta_g1 = r.g1();
    pk.delta_g1 = r.g1();
    pk.beta_g2 = r.g2();
    pk.delta_g2 = r.g2();
    auto read_g1_vec = [&r](std::vector<G1Affine>& v) {
        v.resize(r.u32());
        for (auto& p : v) p = r.g1();
    };
    read_g1_vec(pk.a_query);
    read_g1_vec(pk.b_g1_query);
    pk.b_g2_query.resize(r.u32());
    for (auto& p : pk.b_g2_query) p = r.g2();
    read_g1_vec(pk.l_query);
    read_g1_vec(pk.h_query);
    r.expect_end();
    return pk;
}

std::vector<uint8_t> serialize_verifying_key(const VerifyingKey& vk) {
    Writer w;
    write_header(w, ArtifactKind::verifying_key, vk.fingerprint);
    w.fq12(vk.alpha_beta);
    w.g2(vk.gamma_g2);
    w.g2(vk.delta_g2);
    w.u32((uint32_t)vk.ic.size());
    for (const auto& p : vk.ic) w.g1(p);
    return w.take();
}

VerifyingKey deserialize_verifying_key(std::span<const uint8_t> bytes,
                                       const std::optional<Fingerprint>& expected) {
    Reader r(bytes);
    VerifyingKey vk;
    vk.fingerprint = read_header(r, ArtifactKind::verifying_key, expected);
    vk.alpha_beta = r.fq12();
    vk.gamma_g2 = r.g2();
    vk.delta_g2 = r.g2();
    vk.ic.resize(r.u32());
    for (auto& p : vk.ic) p = r.g1();
    r.expect_end();
    if (!in_g2(vk.gamma_g2) || !in_g2(vk.delta_g2)) {
        throw Error(Errc::bad_encoding, "verifying key G2 point outside the subgroup");
    }
    return vk;
}

std::vector<uint8_t> serialize_proof(const Proof& proof, const Fingerprint& fp) {
    Writer w;
    write_header(w, ArtifactKind::proof, fp);
    w.bytes(compress_g1(proof.a));
    w.bytes(compress_g2(proof.b));
    w.bytes(compress_g1(proof.c));
    return w.take();
}

std::pair<Proof, Fingerprint> deserialize_proof(std::span<const uint8_t> bytes,
                                                const std::optional<Fingerprint>& expected) {
    Reader r(bytes);
    Fingerprint fp = read_header(r, ArtifactKind::proof, expected);
    try {
        auto a = decompress_g1(r.take(32));
        auto b = decompress_g2(r.take(64));
        auto c = decompress_g1(r.take(32));
        r.expect_end();
        if (!a || !b || !c) throw Error(Errc::malformed_proof, "non-canonical group element");
        if (a->infinity || b->infinity || c->infinity) {
            throw Error(Errc::malformed_proof, "proof element at infinity");
        }
        return {Proof{*a, *b, *c}, fp};
    } catch (const Error& e) {
        if (e.code() == Errc::truncated_data) throw;
        throw Error(Errc::malformed_proof, e.what());
    }
}

void write_file(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::truncated_data, "cannot open " + path.string() + " for writing");
    f.write((const char*)bytes.data(), (std::streamsize)bytes.size());
    if (!f) throw Error(Errc::truncated_data, "short write to " + path.string());
}

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f) throw Error(Errc::truncated_data, "cannot open " + path.string());
    std::streamsize n = f.tellg();
    f.seekg(0);
    std::vector<uint8_t> out((size_t)n);
    f.read((char*)out.data(), n);
    if (!f) throw Error(Errc::truncated_data, "short read from " + path.string());
    return out;
}

}  // namespace sans
