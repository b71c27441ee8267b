#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kcl {

// Base of all library errors. `code()` is a stable machine-readable tag used
// by the CLI when emitting error JSON; `what()` carries the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define KCL_ERROR_TYPE(Name, code_tag)                                  \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& message)                       \
            : Error(code_tag, message) {}                               \
    };

KCL_ERROR_TYPE(MalformedCode, "malformed_code")
KCL_ERROR_TYPE(CycleDetected, "cycle_detected")
KCL_ERROR_TYPE(TooFewExamples, "too_few_examples")
KCL_ERROR_TYPE(EmptyDocument, "empty_document")
KCL_ERROR_TYPE(UnknownKey, "unknown_key")
KCL_ERROR_TYPE(NothingToMask, "nothing_to_mask")
KCL_ERROR_TYPE(DivergenceDetected, "divergence_detected")
KCL_ERROR_TYPE(UnknownLabel, "unknown_label")
KCL_ERROR_TYPE(EmptyText, "empty_text")
KCL_ERROR_TYPE(EmptyPredictions, "empty_predictions")
KCL_ERROR_TYPE(InsufficientRanking, "insufficient_ranking")
KCL_ERROR_TYPE(MismatchedSeeds, "mismatched_seeds")
KCL_ERROR_TYPE(DegenerateCategories, "degenerate_categories")
KCL_ERROR_TYPE(OutOfRange, "out_of_range")
KCL_ERROR_TYPE(MissingInput, "missing_input")
KCL_ERROR_TYPE(VersionMismatch, "version_mismatch")
KCL_ERROR_TYPE(ConfigError, "config_error")
KCL_ERROR_TYPE(IoError, "io_error")

#undef KCL_ERROR_TYPE

} // namespace kcl
