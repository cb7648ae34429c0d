#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace zera {

// The eight scoring principles, in canonical order. Everything that indexes
// per-principle data uses this order.
enum class Principle : std::uint8_t {
    MeaningAccuracy = 0,
    Completeness,
    ExpressionStyle,
    Faithfulness,
    Conciseness,
    Correctness,
    StructuralAlignment,
    ReasoningQuality,
};

inline constexpr std::size_t kPrincipleCount = 8;

constexpr std::array<Principle, kPrincipleCount> all_principles() {
    return {Principle::MeaningAccuracy,  Principle::Completeness,
            Principle::ExpressionStyle,  Principle::Faithfulness,
            Principle::Conciseness,      Principle::Correctness,
            Principle::StructuralAlignment, Principle::ReasoningQuality};
}

// "Meaning Accuracy" — used in rendered prompts and reports.
std::string_view principle_display_name(Principle p);
// "meaning_accuracy" — used in JSON, CSV headers, and config values.
std::string_view principle_key(Principle p);
// One-line summary of what the principle checks.
std::string_view principle_short_description(Principle p);
// The shipped detailed criteria for the principle (from the rubric fixture).
std::string_view principle_detailed_criteria(Principle p);

// Case-insensitive lookup with space/underscore/hyphen folding:
// "Meaning Accuracy", "meaning_accuracy", "MeaningAccuracy" all resolve.
std::optional<Principle> principle_from_name(std::string_view name);

// Full rubric fixture: one block per principle in canonical order. Its
// SHA-256 is pinned and re-verified wherever the rubric is consumed.
std::string_view rubric_text();
std::string_view rubric_sha256_hex_expected();
void verify_rubric_checksum();  // throws StorageFailure on mismatch

// -- value types ---------------------------------------------------------

struct PromptPair {
    std::string system_prompt;
    std::string user_prompt;

    bool operator==(const PromptPair&) const = default;
};

struct TaskDescription {
    std::string text;     // may be empty only at iteration 0
    int version = 0;      // iteration index of origin

    bool operator==(const TaskDescription&) const = default;
};

struct TaskSample {
    std::string id;
    std::string input;
    std::string reference;

    bool operator==(const TaskSample&) const = default;
};

struct ModelOutput {
    std::string sample_id;
    std::string text;
    std::string backend_fingerprint;  // model name + parameter hash

    bool operator==(const ModelOutput&) const = default;
};

// Per-principle slice of a critique.
struct CritiqueEntry {
    Principle principle = Principle::MeaningAccuracy;
    double weight = 0.0;   // importance, normalized across the active set
    double score = 0.0;    // quality rating in [1, 10]
    std::string analysis;
    std::string suggestion;

    bool operator==(const CritiqueEntry&) const = default;
};

struct CritiqueTuple {
    std::string sample_id;
    std::vector<CritiqueEntry> entries;  // canonical principle order

    const CritiqueEntry* find(Principle p) const;
    std::vector<double> weights() const;
    std::vector<double> scores() const;

    bool operator==(const CritiqueTuple&) const = default;
};

struct SampleEvaluation {
    TaskSample sample;
    ModelOutput output;
    CritiqueTuple critique;
    double unified_score = 0.0;

    bool operator==(const SampleEvaluation&) const = default;
};

struct IterationRecord {
    int t = 0;
    PromptPair prompt;
    TaskDescription task_description;
    std::vector<SampleEvaluation> evaluations;
    double mean_unified = 0.0;
    std::string config_fingerprint;

    bool operator==(const IterationRecord&) const = default;
};

// -- operations ------------------------------------------------------------

// The fixed zero-initialization starting point.
std::pair<PromptPair, TaskDescription> zero_init();

inline constexpr std::string_view kZeroInitSystemPrompt = "You are a helpful assistant";
inline constexpr std::string_view kZeroInitUserPrompt = "Hello! I'm here to help you";

using PrincipleSet = std::vector<Principle>;  // canonical order, no duplicates

PrincipleSet full_principle_set();

// Checks a parsed critique against the active principle set and returns the
// validated tuple: entries reordered canonically, weights normalized to sum 1.
// Scores outside [1,10] and negative weights are rejected, not clamped.
// Idempotent on its own output.
CritiqueTuple validate_critique(const CritiqueTuple& raw,
                                const PrincipleSet& active = full_principle_set());

// -- canonical JSON ----------------------------------------------------------
// nlohmann::json orders keys alphabetically, so dump() is byte-stable; these
// define the documented schema used by the ledger and replay fixtures.

nlohmann::json to_json(const PromptPair&);
nlohmann::json to_json(const TaskDescription&);
nlohmann::json to_json(const TaskSample&);
nlohmann::json to_json(const ModelOutput&);
nlohmann::json to_json(const CritiqueTuple&);
nlohmann::json to_json(const SampleEvaluation&);
nlohmann::json to_json(const IterationRecord&);

PromptPair prompt_pair_from_json(const nlohmann::json&);
TaskDescription task_description_from_json(const nlohmann::json&);
TaskSample task_sample_from_json(const nlohmann::json&);
ModelOutput model_output_from_json(const nlohmann::json&);
CritiqueTuple critique_from_json(const nlohmann::json&);
SampleEvaluation sample_evaluation_from_json(const nlohmann::json&);
IterationRecord iteration_record_from_json(const nlohmann::json&);

}  // namespace zera
