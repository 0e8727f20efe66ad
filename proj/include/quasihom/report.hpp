#pragma once

#include <string>

#include "quasihom/embedding.hpp"
#include "quasihom/problem.hpp"

namespace qh {

struct RunOutput {
    std::string summary;   // human-readable
    std::string document;  // canonical JSON, byte-deterministic
};

RunOutput run_spectrum(const ProblemFile& p);
RunOutput run_normal_form(const ProblemFile& p);
RunOutput run_quasi_homogenize(const ProblemFile& p);
RunOutput run_embed_check(const ProblemFile& p);

// Full independent re-verification of a serialized NormalFormCertificate or
// QHResult document. Throws Error(VerifyFailed) naming the first failing
// check; parse/version problems throw Error(Parse/VerifyFailed) accordingly.
RunOutput certify_document(const std::string& text);

}  // namespace qh
