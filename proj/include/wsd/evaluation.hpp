#ifndef WSD_EVALUATION_HPP
#define WSD_EVALUATION_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsd/lexicon.hpp"

namespace wsd {

enum class AlgorithmKind { a0, aeps_syn, aeps_sent_syn, k, mfs };

std::string to_string(AlgorithmKind kind);
AlgorithmKind parse_algorithm(const std::string& name);
bool depends_on_epsilon(AlgorithmKind kind) noexcept;

struct ReportRow {
    std::string target;
    AlgorithmKind algorithm = AlgorithmKind::a0;
    std::optional<double> epsilon;
    int n_evaluated = 0;
    int n_correct = 0;
    int n_skipped = 0;
    int n_tie_unresolved = 0;
};

struct EvaluationReport {
    std::vector<ReportRow> rows;
};

// One sentence outcome, retained so that best-epsilon summaries and
// per-sentence exports can be derived from a sweep.
struct SentenceOutcome {
    std::string target;
    AlgorithmKind algorithm = AlgorithmKind::a0;
    std::optional<double> epsilon;
    std::size_t sentence_index = 0;  // position in the dataset
    int chosen = 0;
    int gold = 0;
    bool correct = false;
};

struct SweepResult {
    EvaluationReport report;
    std::vector<SentenceOutcome> outcomes;
    bool outcomes_retained = false;
};

struct EvalOptions {
    SelectorOptions selector;
    // Worker threads for sweeps; 0 means hardware concurrency.
    unsigned jobs = 0;
    bool retain_outcomes = true;
};

// Runs one selector over the dataset at a single epsilon (the per-sentence
// tie loop is disabled: a tie falls back immediately and is counted). One
// row per target lemma; epsilon-independent algorithms get an absent
// epsilon. MFS frequencies are the gold counts of the dataset itself.
std::vector<ReportRow> evaluate_fixed_epsilon(const std::vector<TaggedSentence>& dataset,
                                              const std::vector<SenseInventory>& inventories,
                                              const EmbeddingModel& model, AlgorithmKind algorithm,
                                              double epsilon, const EvalOptions& options = {});

// Runs one selector with the full schedule per sentence (the do-while tie
// loop). Rows carry an absent epsilon since the schedule resolves per
// sentence.
std::vector<ReportRow> evaluate_with_schedule(const std::vector<TaggedSentence>& dataset,
                                              const std::vector<SenseInventory>& inventories,
                                              const EmbeddingModel& model, AlgorithmKind algorithm,
                                              const EpsilonSchedule& schedule,
                                              const EvalOptions& options = {});

// Full grid: one evaluate_fixed_epsilon row set per (algorithm, epsilon);
// epsilon-independent algorithms contribute a single row set. Cells are
// evaluated in parallel; the report ordering is canonical regardless of the
// number of jobs.
SweepResult sweep(const std::vector<TaggedSentence>& dataset,
                  const std::vector<SenseInventory>& inventories, const EmbeddingModel& model,
                  const std::vector<AlgorithmKind>& algorithms, const EpsilonSchedule& schedule,
                  const EvalOptions& options = {});

struct BestEpsilonRow {
    std::string target;
    AlgorithmKind algorithm = AlgorithmKind::a0;
    int n_correct_any_epsilon = 0;
    int n_evaluated = 0;
};

// Counts sentences correct under at-least-one-epsilon semantics. Requires a
// sweep that retained per-sentence outcomes.
std::vector<BestEpsilonRow> best_epsilon_summary(const SweepResult& result);

// Distinct accuracy proportions attained across the grid, with
// multiplicities, per (target, algorithm). Only epsilon-dependent rows
// contribute.
struct DistributionSummary {
    struct Group {
        std::string target;
        AlgorithmKind algorithm;
        std::map<double, int> outcome_counts;  // accuracy -> number of grid points
    };
    std::vector<Group> groups;
};

DistributionSummary distribution_summary(const SweepResult& result);

// CSV with header target,algorithm,epsilon,n_evaluated,n_correct,n_skipped,
// n_tie_unresolved; rows sorted by (target, algorithm, epsilon with absent
// last); byte-deterministic for identical reports.
void export_csv(const EvaluationReport& report, const std::filesystem::path& path);
EvaluationReport parse_report_csv(const std::filesystem::path& path);

// JSONL per-sentence outcomes of a sweep, in report order.
void export_per_sentence_jsonl(const SweepResult& result, const std::filesystem::path& path);

}  // namespace wsd

#endif
