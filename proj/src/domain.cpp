#include "zera/domain.hpp"

#include <algorithm>
#include <cmath>

#include "zera/errors.hpp"
#include "zera/hash.hpp"
#include "zera/text.hpp"

namespace zera {

namespace {

struct PrincipleInfo {
    std::string_view display_name;
    std::string_view key;
    std::string_view short_description;
    std::string_view criteria;
};

constexpr std::string_view kMeaningAccuracyCriteria =
    "- Does the output convey the same intended meaning as the expected output?\n"
    "- Is the reasoning process logically consistent with the way the expected output "
    "addresses the task?";

constexpr std::string_view kCompletenessCriteria =
    "- Does the output include all key elements present in the expected output?\n"
    "- Are any core ideas, steps, or facts missing compared to the expected answer?";

constexpr std::string_view kExpressionStyleCriteria =
    "- Does the output follow the format, tone, and structure shown in the expected output?\n"
    "- Are there unnecessary differences in sentence style, layout, or tone?";

constexpr std::string_view kFaithfulnessCriteria =
    "- Does the output avoid adding content not present in the expected output?\n"
    "- Are all statements supported by the original question and context?";

constexpr std::string_view kConcisenessCriteria =
    "- Does the output maintain a similar level of brevity as the expected output?\n"
    "- Are there unnecessary additions or repeated content beyond what is expected?\n"
    "- If visible reasoning is expected or allowed by the task, do not penalize the output "
    "for justified length due to reasoning steps. Only penalize verbosity that is unrelated "
    "to the task objective or that repeats content unnecessarily.";

constexpr std::string_view kCorrectnessCriteria =
    "- Does the final output match the correct result, based strictly on factual or logical "
    "correctness?\n"
    "- Do not consider the reasoning or explanation here, only whether the final output is "
    "correct and aligned with task constraints.\n"
    "- For fixed-format tasks or tasks requiring structured answers, the final answer must "
    "match the expected output exactly in format, content, and position (e.g., on a separate "
    "line if required).";

constexpr std::string_view kStructuralAlignmentCriteria =
    "- Does the output follow the expected structural organization (e.g., headline-body "
    "separation, bullet points, code block structure)?\n"
    "- Are the sections, hierarchy, or formatting explicitly aligned with the expected "
    "style?\n"
    "- If the task expects visible reasoning followed by a final answer, check that the "
    "reasoning precedes the final answer and that the final answer is clearly isolated "
    "(e.g., on a separate line and in the required format). The final answer must appear in "
    "the same structure and format as shown in the expected output.";

constexpr std::string_view kReasoningQualityCriteria =
    "- Is the reasoning process logically valid, step-by-step, and aligned with the task "
    "intent?\n"
    "- Are intermediate steps necessary, accurate, and well-structured?\n"
    "- If the prompt expects visible reasoning, ensure it is included in the output and "
    "forms a logically coherent path to the answer.";

constexpr std::array<PrincipleInfo, kPrincipleCount> kPrincipleTable = {{
    {"Meaning Accuracy", "meaning_accuracy",
     "Preserves intended meaning and logical consistency with the expected answer "
     "(output fidelity).",
     kMeaningAccuracyCriteria},
    {"Completeness", "completeness",
     "Includes all key ideas or steps; no critical elements are missing.",
     kCompletenessCriteria},
    {"Expression Style", "expression_style",
     "Matches tone, format, and stylistic elements of the expected answer.",
     kExpressionStyleCriteria},
    {"Faithfulness", "faithfulness",
     "Avoids hallucination; stays true to given input and context.", kFaithfulnessCriteria},
    {"Conciseness", "conciseness",
     "Maintains brevity; avoids unnecessary or repetitive content.", kConcisenessCriteria},
    {"Correctness", "correctness",
     "Final answer is factually/logically correct and meets formatting constraints.",
     kCorrectnessCriteria},
    {"Structural Alignment", "structural_alignment",
     "Matches the structure, formatting, and layout of the expected answer.",
     kStructuralAlignmentCriteria},
    {"Reasoning Quality", "reasoning_quality",
     "Provides logically sound and well-structured reasoning process aligned with task "
     "goals.",
     kReasoningQualityCriteria},
}};

const PrincipleInfo& info(Principle p) {
    return kPrincipleTable[static_cast<std::size_t>(p)];
}

std::string build_rubric_text() {
    std::string out;
    for (Principle p : all_principles()) {
        out += info(p).display_name;
        out += ":\n";
        out += info(p).criteria;
        out += "\n\n";
    }
    return out;
}

// Pinned at first release; verify_rubric_checksum() guards against fixture drift.
constexpr std::string_view kRubricSha256 = "@RUBRIC_SHA256@";

constexpr double kWeightSumTolerance = 1e-9;

}  // namespace

std::string_view principle_display_name(Principle p) { return info(p).display_name; }
std::string_view principle_key(Principle p) { return info(p).key; }
std::string_view principle_short_description(Principle p) { return info(p).short_description; }
std::string_view principle_detailed_criteria(Principle p) { return info(p).criteria; }

std::optional<Principle> principle_from_name(std::string_view name) {
    const std::string folded = text::fold_name(name);
    for (Principle p : all_principles()) {
        if (folded == text::fold_name(info(p).display_name)) return p;
    }
    return std::nullopt;
}

std::string_view rubric_text() {
    static const std::string rubric = build_rubric_text();
    return rubric;
}

std::string_view rubric_sha256_hex_expected() { return kRubricSha256; }

void verify_rubric_checksum() {
    const std::string actual = sha256_hex(rubric_text());
    if (actual != kRubricSha256) {
        throw StorageFailure("rubric fixture checksum mismatch: expected " +
                             std::string(kRubricSha256) + ", got " + actual);
    }
}

const CritiqueEntry* CritiqueTuple::find(Principle p) const {
    for (const auto& e : entries) {
        if (e.principle == p) return &e;
    }
    return nullptr;
}

std::vector<double> CritiqueTuple::weights() const {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.weight);
    return out;
}

std::vector<double> CritiqueTuple::scores() const {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.score);
    return out;
}

std::pair<PromptPair, TaskDescription> zero_init() {
    return {PromptPair{std::string(kZeroInitSystemPrompt), std::string(kZeroInitUserPrompt)},
            TaskDescription{"", 0}};
}

PrincipleSet full_principle_set() {
    const auto all = all_principles();
    return PrincipleSet(all.begin(), all.end());
}

CritiqueTuple validate_critique(const CritiqueTuple& raw, const PrincipleSet& active) {
    if (active.empty()) {
        throw MissingPrinciple("active principle set is empty");
    }

    const auto is_active = [&](Principle p) {
        return std::find(active.begin(), active.end(), p) != active.end();
    };

    std::array<const CritiqueEntry*, kPrincipleCount> by_principle{};
    for (const auto& entry : raw.entries) {
        if (!is_active(entry.principle)) {
            throw UnexpectedPrinciple("critique contains inactive principle \"" +
                                      std::string(principle_display_name(entry.principle)) +
                                      "\"");
        }
        auto& slot = by_principle[static_cast<std::size_t>(entry.principle)];
        if (slot != nullptr) {
            throw UnexpectedPrinciple("duplicate critique entry for \"" +
                                      std::string(principle_display_name(entry.principle)) +
                                      "\"");
        }
        slot = &entry;
    }

    double weight_sum = 0.0;
    for (Principle p : active) {
        const CritiqueEntry* entry = by_principle[static_cast<std::size_t>(p)];
        if (entry == nullptr) {
            throw MissingPrinciple("critique is missing principle \"" +
                                   std::string(principle_display_name(p)) + "\"");
        }
        if (!(entry->score >= 1.0 && entry->score <= 10.0)) {
            throw ScoreOutOfRange("score for \"" +
                                  std::string(principle_display_name(p)) + "\" is " +
                                  std::to_string(entry->score) + ", outside [1,10]");
        }
        if (!(entry->weight >= 0.0) || !std::isfinite(entry->weight)) {
            throw WeightOutOfRange("weight for \"" +
                                   std::string(principle_display_name(p)) + "\" is " +
                                   std::to_string(entry->weight) + ", must be >= 0");
        }
        weight_sum += entry->weight;
    }
    if (!(weight_sum > 0.0) || !std::isfinite(weight_sum)) {
        throw NonPositiveWeightSum("critique weights sum to " + std::to_string(weight_sum));
    }

    CritiqueTuple out;
    out.sample_id = raw.sample_id;
    out.entries.reserve(active.size());
    const bool already_normalized = std::fabs(weight_sum - 1.0) <= kWeightSumTolerance;
    for (Principle p : active) {
        CritiqueEntry e = *by_principle[static_cast<std::size_t>(p)];
        if (!already_normalized) e.weight /= weight_sum;
        out.entries.push_back(std::move(e));
    }
    return out;
}

// -- JSON schema -------------------------------------------------------------

nlohmann::json to_json(const PromptPair& p) {
    return {{"system_prompt", p.system_prompt}, {"user_prompt", p.user_prompt}};
}

nlohmann::json to_json(const TaskDescription& t) {
    return {{"text", t.text}, {"version", t.version}};
}

nlohmann::json to_json(const TaskSample& s) {
    return {{"id", s.id}, {"input", s.input}, {"reference", s.reference}};
}

nlohmann::json to_json(const ModelOutput& o) {
    return {{"backend_fingerprint", o.backend_fingerprint},
            {"sample_id", o.sample_id},
            {"text", o.text}};
}

nlohmann::json to_json(const CritiqueTuple& c) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : c.entries) {
        entries.push_back({{"analysis", e.analysis},
                           {"principle", std::string(principle_key(e.principle))},
                           {"score", e.score},
                           {"suggestion", e.suggestion},
                           {"weight", e.weight}});
    }
    return {{"entries", std::move(entries)}, {"sample_id", c.sample_id}};
}

nlohmann::json to_json(const SampleEvaluation& e) {
    return {{"critique", to_json(e.critique)},
            {"output", to_json(e.output)},
            {"sample", to_json(e.sample)},
            {"unified_score", e.unified_score}};
}

nlohmann::json to_json(const IterationRecord& r) {
    nlohmann::json evals = nlohmann::json::array();
    for (const auto& e : r.evaluations) evals.push_back(to_json(e));
    return {{"config_fingerprint", r.config_fingerprint},
            {"evaluations", std::move(evals)},
            {"mean_unified", r.mean_unified},
            {"prompt", to_json(r.prompt)},
            {"t", r.t},
            {"task_description", to_json(r.task_description)}};
}

PromptPair prompt_pair_from_json(const nlohmann::json& j) {
    return {j.at("system_prompt").get<std::string>(), j.at("user_prompt").get<std::string>()};
}

TaskDescription task_description_from_json(const nlohmann::json& j) {
    return {j.at("text").get<std::string>(), j.at("version").get<int>()};
}

TaskSample task_sample_from_json(const nlohmann::json& j) {
    return {j.at("id").get<std::string>(), j.at("input").get<std::string>(),
            j.at("reference").get<std::string>()};
}

ModelOutput model_output_from_json(const nlohmann::json& j) {
    return {j.at("sample_id").get<std::string>(), j.at("text").get<std::string>(),
            j.at("backend_fingerprint").get<std::string>()};
}

CritiqueTuple critique_from_json(const nlohmann::json& j) {
    CritiqueTuple c;
    c.sample_id = j.at("sample_id").get<std::string>();
    for (const auto& je : j.at("entries")) {
        const std::string name = je.at("principle").get<std::string>();
        const auto p = principle_from_name(name);
        if (!p) {
            throw PrincipleNameUnrecognized("unrecognized principle \"" + name + "\"");
        }
        c.entries.push_back({*p, je.at("weight").get<double>(), je.at("score").get<double>(),
                             je.at("analysis").get<std::string>(),
                             je.at("suggestion").get<std::string>()});
    }
    return c;
}

SampleEvaluation sample_evaluation_from_json(const nlohmann::json& j) {
    SampleEvaluation e;
    e.sample = task_sample_from_json(j.at("sample"));
    e.output = model_output_from_json(j.at("output"));
    e.critique = critique_from_json(j.at("critique"));
    e.unified_score = j.at("unified_score").get<double>();
    return e;
}

IterationRecord iteration_record_from_json(const nlohmann::json& j) {
    IterationRecord r;
    r.t = j.at("t").get<int>();
    r.prompt = prompt_pair_from_json(j.at("prompt"));
    r.task_description = task_description_from_json(j.at("task_description"));
    for (const auto& je : j.at("evaluations")) {
        r.evaluations.push_back(sample_evaluation_from_json(je));
    }
    r.mean_unified = j.at("mean_unified").get<double>();
    r.config_fingerprint = j.at("config_fingerprint").get<std::string>();
    return r;
}

}  // namespace zera
