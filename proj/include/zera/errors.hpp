#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace zera {

// Base for every error the engine raises on purpose. Catch this at the CLI
// boundary; catch the concrete types in code that can recover.
class Error : public std::runtime_error {
public:
    explicit Error(std::string message) : std::runtime_error(std::move(message)) {}
};

// -- domain ------------------------------------------------------------
struct MissingPrinciple : Error {
    using Error::Error;
};
struct UnexpectedPrinciple : Error {
    using Error::Error;
};
struct ScoreOutOfRange : Error {
    using Error::Error;
};
struct WeightOutOfRange : Error {
    using Error::Error;
};
struct NonPositiveWeightSum : Error {
    using Error::Error;
};

// -- llm_gateway -------------------------------------------------------
struct BackendUnavailable : Error {
    using Error::Error;
};
struct ContextOverflow : Error {
    using Error::Error;
};
struct AuthMissing : Error {
    using Error::Error;
};
struct CorruptTranscript : Error {
    CorruptTranscript(std::string message, std::size_t line_number)
        : Error(std::move(message)), line(line_number) {}
    std::size_t line;
};

// -- pcg ---------------------------------------------------------------
struct TemplateSlotMissing : Error {
    using Error::Error;
};
struct NoJsonFound : Error {
    using Error::Error;
};
struct PrincipleNameUnrecognized : Error {
    using Error::Error;
};
struct CritiqueParseFailure : Error {
    CritiqueParseFailure(std::string message, std::string raw_text)
        : Error(std::move(message)), raw(std::move(raw_text)) {}
    std::string raw;  // the evaluator output that failed to parse, for diagnosis
};

// -- scoring -----------------------------------------------------------
struct TooFewSamples : Error {
    using Error::Error;
};

// -- mpr ---------------------------------------------------------------
struct IterationMissing : Error {
    using Error::Error;
};
struct RefinementParseFailure : Error {
    using Error::Error;
};

// -- history -----------------------------------------------------------
struct NonContiguousIteration : Error {
    using Error::Error;
};
struct StorageFailure : Error {
    using Error::Error;
};
struct EmptyLedger : Error {
    using Error::Error;
};

// -- tasks -------------------------------------------------------------
struct SampleCountExceedsPool : Error {
    using Error::Error;
};
struct ExternalJudgeFailure : Error {
    ExternalJudgeFailure(std::string message, std::string stderr_text)
        : Error(std::move(message)), stderr_output(std::move(stderr_text)) {}
    std::string stderr_output;
};
struct DatasetInvalid : Error {
    using Error::Error;
};

// -- orchestrator ------------------------------------------------------
struct IterationAborted : Error {
    using Error::Error;
};
struct ResumeMismatch : Error {
    using Error::Error;
};

// -- cli / config ------------------------------------------------------
struct ConfigError : Error {
    ConfigError(std::string message, std::string key_name)
        : Error(std::move(message)), key(std::move(key_name)) {}
    std::string key;  // the offending "section.key"
};

}  // namespace zera
