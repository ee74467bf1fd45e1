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

#include "sans/errors.hpp"

namespace sans {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::empty_input: return "empty_input";
        case Errc::arity_too_large: return "arity_too_large";
        case Errc::malformed_point: return "malformed_point";
        case Errc::malformed_credential: return "malformed_credential";
        case Errc::rng_failure: return "rng_failure";
        case Errc::bad_magic: return "bad_magic";
        case Errc::unsupported_version: return "unsupported_version";
        case Errc::fingerprint_mismatch: return "fingerprint_mismatch";
        case Errc::truncated_data: return "truncated_data";
        case Errc::malformed_proof: return "malformed_proof";
        case Errc::requirements_not_met: return "requirements_not_met";
        case Errc::clock_error: return "clock_error";
        case Errc::proving_failure: return "proving_failure";
        case Errc::transport_error: return "transport_error";
        case Errc::server_rejected: return "server_rejected";
        case Errc::invalid_issued_credential: return "invalid_issued_credential";
        case Errc::frame_too_large: return "frame_too_large";
        case Errc::bind_failure: return "bind_failure";
        case Errc::dimension_mismatch: return "dimension_mismatch";
        case Errc::bad_encoding: return "bad_encoding";
    }
    return "unknown";
}

}  // namespace sans
