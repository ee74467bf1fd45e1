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

#ifndef SANS_ERRORS_HPP_
#define SANS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sans {

enum class Errc {
    empty_input,
    arity_too_large,
    malformed_point,
    malformed_credential,
    rng_failure,
    bad_magic,
    unsupported_version,
    fingerprint_mismatch,
    truncated_data,
    malformed_proof,
    requirements_not_met,
    clock_error,
    proving_failure,
    transport_error,
    server_rejected,
    invalid_issued_credential,
    frame_too_large,
    bind_failure,
    dimension_mismatch,
    bad_encoding,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

}  // namespace sans

#endif  // SANS_ERRORS_HPP_
