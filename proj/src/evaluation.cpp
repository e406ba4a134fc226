#include "wsd/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace wsd {

using ordered_json = nlohmann::ordered_json;

std::string to_string(AlgorithmKind kind) {
    switch (kind) {
        case AlgorithmKind::a0: return "a0";
        case AlgorithmKind::aeps_syn: return "aeps-syn";
        case AlgorithmKind::aeps_sent_syn: return "aeps-sent-syn";
        case AlgorithmKind::k: return "k";
        case AlgorithmKind::mfs: return "mfs";
    }
    return "unknown";
}

AlgorithmKind parse_algorithm(const std::string& name) {
    if (name == "a0") return AlgorithmKind::a0;
    if (name == "aeps-syn") return AlgorithmKind::aeps_syn;
    if (name == "aeps-sent-syn") return AlgorithmKind::aeps_sent_syn;
    if (name == "k") return AlgorithmKind::k;
    if (name == "mfs") return AlgorithmKind::mfs;
    throw std::invalid_argument("unknown algorithm: " + name +
                                " (expected a0|aeps-syn|aeps-sent-syn|k|mfs)");
}

bool depends_on_epsilon(AlgorithmKind kind) noexcept {
    return kind == AlgorithmKind::aeps_syn || kind == AlgorithmKind::aeps_sent_syn ||
           kind == AlgorithmKind::k;
}

namespace {

// Dataset resolved once and shared by every evaluation cell.
struct ResolvedDataset {
    const std::vector<TaggedSentence>* sentences = nullptr;
    std::vector<std::optional<DisambiguationTask>> tasks;  // nullopt = OOV target, skipped
    std::map<std::string, std::map<int, int>> gold_frequencies;
};

ResolvedDataset resolve_all(const std::vector<TaggedSentence>& dataset,
                            const std::vector<SenseInventory>& inventories,
                            const EmbeddingModel& model) {
    const InventoryIndex index(inventories);
    ResolvedDataset resolved;
    resolved.sentences = &dataset;
    resolved.tasks.reserve(dataset.size());
    for (const auto& sentence : dataset) {
        const SenseInventory* inventory = index.find(sentence.target_lemma());
        if (inventory == nullptr) {
            throw ValidationError("no inventory for target lemma '" + sentence.target_lemma() +
                                  "'");
        }
        resolved.gold_frequencies[sentence.target_lemma()][sentence.gold_sense_id] += 1;
        try {
            resolved.tasks.push_back(resolve_task(sentence, *inventory, model));
        } catch (const TargetOovError&) {
            resolved.tasks.emplace_back();
        }
    }
    // Senses never observed in the gold tags still participate in the MFS
    // argmax with count zero.
    for (const auto& inventory : inventories) {
        auto it = resolved.gold_frequencies.find(inventory.target_lemma);
        if (it == resolved.gold_frequencies.end()) {
            continue;
        }
        for (const auto& sense : inventory.senses) {
            it->second.try_emplace(sense.sense_id, 0);
        }
    }
    return resolved;
}

SenseDecision run_selector(const ResolvedDataset& resolved, std::size_t sentence_index,
                           AlgorithmKind algorithm, const EpsilonSchedule* schedule,
                           const SelectorOptions& selector) {
    const DisambiguationTask& task = *resolved.tasks[sentence_index];
    switch (algorithm) {
        case AlgorithmKind::a0:
            return select_a0(task, selector);
        case AlgorithmKind::aeps_syn:
            return select_a_eps_synonyms(task, *schedule, selector);
        case AlgorithmKind::aeps_sent_syn:
            return select_a_eps_sentence_synonyms(task, *schedule, selector);
        case AlgorithmKind::k:
            return select_k_algorithm(task, *schedule, selector);
        case AlgorithmKind::mfs: {
            const auto& sentence = (*resolved.sentences)[sentence_index];
            return select_mfs(resolved.gold_frequencies.at(sentence.target_lemma()));
        }
    }
    throw std::logic_error("unreachable algorithm kind");
}

struct CellResult {
    std::vector<ReportRow> rows;
    std::vector<SentenceOutcome> outcomes;
};

// One (algorithm, epsilon) evaluation over the whole dataset. epsilon is
// absent for epsilon-independent algorithms and for schedule mode.
CellResult run_cell(const ResolvedDataset& resolved, AlgorithmKind algorithm,
                    std::optional<double> epsilon, const EpsilonSchedule* schedule,
                    const EvalOptions& options, bool retain_outcomes) {
    struct Counts {
        int evaluated = 0, correct = 0, skipped = 0, ties = 0;
    };
    std::map<std::string, Counts> per_target;
    CellResult cell;

    const auto& dataset = *resolved.sentences;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto& sentence = dataset[i];
        Counts& counts = per_target[sentence.target_lemma()];
        if (!resolved.tasks[i].has_value()) {
            ++counts.skipped;
            continue;
        }
        const SenseDecision decision =
            run_selector(resolved, i, algorithm, schedule, options.selector);
        ++counts.evaluated;
        const bool correct = decision.chosen_sense_id == sentence.gold_sense_id;
        if (correct) {
            ++counts.correct;
        }
        if (decision.tie_unresolved) {
            ++counts.ties;
        }
        if (retain_outcomes) {
            cell.outcomes.push_back(SentenceOutcome{sentence.target_lemma(), algorithm, epsilon,
                                                    i, decision.chosen_sense_id,
                                                    sentence.gold_sense_id, correct});
        }
    }
    for (const auto& [target, counts] : per_target) {
        cell.rows.push_back(ReportRow{target, algorithm, epsilon, counts.evaluated,
                                      counts.correct, counts.skipped, counts.ties});
    }
    return cell;
}

}  // namespace

std::vector<ReportRow> evaluate_fixed_epsilon(const std::vector<TaggedSentence>& dataset,
                                              const std::vector<SenseInventory>& inventories,
                                              const EmbeddingModel& model, AlgorithmKind algorithm,
                                              double epsilon, const EvalOptions& options) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in [0, 1)");
    }
    const ResolvedDataset resolved = resolve_all(dataset, inventories, model);
    if (depends_on_epsilon(algorithm)) {
        const EpsilonSchedule single({epsilon});
        return run_cell(resolved, algorithm, epsilon, &single, options, false).rows;
    }
    return run_cell(resolved, algorithm, std::nullopt, nullptr, options, false).rows;
}

std::vector<ReportRow> evaluate_with_schedule(const std::vector<TaggedSentence>& dataset,
                                              const std::vector<SenseInventory>& inventories,
                                              const EmbeddingModel& model, AlgorithmKind algorithm,
                                              const EpsilonSchedule& schedule,
                                              const EvalOptions& options) {
    const ResolvedDataset resolved = resolve_all(dataset, inventories, model);
    if (depends_on_epsilon(algorithm)) {
        return run_cell(resolved, algorithm, std::nullopt, &schedule, options, false).rows;
    }
    return run_cell(resolved, algorithm, std::nullopt, nullptr, options, false).rows;
}

SweepResult sweep(const std::vector<TaggedSentence>& dataset,
                  const std::vector<SenseInventory>& inventories, const EmbeddingModel& model,
                  const std::vector<AlgorithmKind>& algorithms, const EpsilonSchedule& schedule,
                  const EvalOptions& options) {
    const ResolvedDataset resolved = resolve_all(dataset, inventories, model);

    struct Cell {
        AlgorithmKind algorithm;
        std::optional<double> epsilon;
    };
    std::vector<Cell> cells;
    for (AlgorithmKind algorithm : algorithms) {
        if (depends_on_epsilon(algorithm)) {
            for (double epsilon : schedule.values()) {
                cells.push_back(Cell{algorithm, epsilon});
            }
        } else {
            cells.push_back(Cell{algorithm, std::nullopt});
        }
    }

    std::vector<CellResult> results(cells.size());
    const auto worker_body = [&](std::atomic<std::size_t>& next) {
        for (std::size_t c = next.fetch_add(1); c < cells.size(); c = next.fetch_add(1)) {
            const Cell& cell = cells[c];
            const EpsilonSchedule single(
                {cell.epsilon.has_value() ? *cell.epsilon : 0.0});
            results[c] = run_cell(resolved, cell.algorithm, cell.epsilon,
                                  cell.epsilon.has_value() ? &single : nullptr, options,
                                  options.retain_outcomes);
        }
    };

    unsigned jobs = options.jobs != 0 ? options.jobs : std::thread::hardware_concurrency();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
    std::atomic<std::size_t> next{0};
    if (jobs <= 1) {
        worker_body(next);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) {
            workers.emplace_back([&] { worker_body(next); });
        }
        for (auto& w : workers) {
            w.join();
        }
    }

    SweepResult result;
    result.outcomes_retained = options.retain_outcomes;
    for (auto& cell : results) {
        result.report.rows.insert(result.report.rows.end(), cell.rows.begin(), cell.rows.end());
        result.outcomes.insert(result.outcomes.end(), cell.outcomes.begin(),
                               cell.outcomes.end());
    }
    return result;
}

std::vector<BestEpsilonRow> best_epsilon_summary(const SweepResult& result) {
    if (!result.outcomes_retained) {
        throw std::invalid_argument(
            "best_epsilon_summary requires a sweep with retained per-sentence outcomes");
    }
    // (target, algorithm) -> sentence -> correct at any epsilon
    std::map<std::pair<std::string, AlgorithmKind>, std::map<std::size_t, bool>> groups;
    for (const auto& outcome : result.outcomes) {
        auto& per_sentence = groups[{outcome.target, outcome.algorithm}];
        auto [it, inserted] = per_sentence.try_emplace(outcome.sentence_index, outcome.correct);
        if (!inserted) {
            it->second = it->second || outcome.correct;
        }
    }
    std::vector<BestEpsilonRow> rows;
    for (const auto& [key, per_sentence] : groups) {
        BestEpsilonRow row;
        row.target = key.first;
        row.algorithm = key.second;
        row.n_evaluated = static_cast<int>(per_sentence.size());
        for (const auto& [index, correct] : per_sentence) {
            if (correct) {
                ++row.n_correct_any_epsilon;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

DistributionSummary distribution_summary(const SweepResult& result) {
    std::map<std::pair<std::string, AlgorithmKind>, std::map<double, int>> groups;
    for (const auto& row : result.report.rows) {
        if (!row.epsilon.has_value() || row.n_evaluated == 0) {
            continue;
        }
        const double accuracy =
            static_cast<double>(row.n_correct) / static_cast<double>(row.n_evaluated);
        groups[{row.target, row.algorithm}][accuracy] += 1;
    }
    DistributionSummary summary;
    for (auto& [key, counts] : groups) {
        summary.groups.push_back(
            DistributionSummary::Group{key.first, key.second, std::move(counts)});
    }
    return summary;
}

namespace {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

std::vector<ReportRow> sorted_rows(const EvaluationReport& report) {
    std::vector<ReportRow> rows = report.rows;
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.target != b.target) return a.target < b.target;
        const std::string an = to_string(a.algorithm);
        const std::string bn = to_string(b.algorithm);
        if (an != bn) return an < bn;
        if (a.epsilon.has_value() != b.epsilon.has_value()) {
            return a.epsilon.has_value();  // absent epsilon sorts last
        }
        if (a.epsilon.has_value() && b.epsilon.has_value()) return *a.epsilon < *b.epsilon;
        return false;
    });
    return rows;
}

}  // namespace

void export_csv(const EvaluationReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open for writing: " + path.string());
    }
    out << "target,algorithm,epsilon,n_evaluated,n_correct,n_skipped,n_tie_unresolved\n";
    for (const auto& row : sorted_rows(report)) {
        out << row.target << ',' << to_string(row.algorithm) << ',';
        if (row.epsilon.has_value()) {
            out << format_double(*row.epsilon);
        }
        out << ',' << row.n_evaluated << ',' << row.n_correct << ',' << row.n_skipped << ','
            << row.n_tie_unresolved << '\n';
    }
    if (!out) {
        throw ParseError("write failed: " + path.string());
    }
}

EvaluationReport parse_report_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open report: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) ||
        line != "target,algorithm,epsilon,n_evaluated,n_correct,n_skipped,n_tie_unresolved") {
        throw ParseError(path.string() + ": missing or unexpected CSV header");
    }
    EvaluationReport report;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const std::size_t next = line.find(',', pos);
            if (next == std::string::npos) {
                fields.push_back(line.substr(pos));
                break;
            }
            fields.push_back(line.substr(pos, next - pos));
            pos = next + 1;
        }
        const std::string where = path.string() + ":" + std::to_string(line_no);
        if (fields.size() != 7) {
            throw ParseError(where + ": expected 7 fields");
        }
        ReportRow row;
        row.target = fields[0];
        row.algorithm = parse_algorithm(fields[1]);
        if (!fields[2].empty()) {
            double epsilon = 0.0;
            auto [ptr, ec] =
                std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), epsilon);
            if (ec != std::errc() || ptr != fields[2].data() + fields[2].size()) {
                throw ParseError(where + ": bad epsilon field");
            }
            row.epsilon = epsilon;
        }
        const auto parse_int = [&](const std::string& field, int& out) {
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
            if (ec != std::errc() || ptr != field.data() + field.size()) {
                throw ParseError(where + ": bad integer field '" + field + "'");
            }
        };
        parse_int(fields[3], row.n_evaluated);
        parse_int(fields[4], row.n_correct);
        parse_int(fields[5], row.n_skipped);
        parse_int(fields[6], row.n_tie_unresolved);
        report.rows.push_back(std::move(row));
    }
    return report;
}

void export_per_sentence_jsonl(const SweepResult& result, const std::filesystem::path& path) {
    if (!result.outcomes_retained) {
        throw std::invalid_argument(
            "per-sentence export requires a sweep with retained outcomes");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open for writing: " + path.string());
    }
    for (const auto& outcome : result.outcomes) {
        ordered_json entry;
        entry["target"] = outcome.target;
        entry["algorithm"] = to_string(outcome.algorithm);
        if (outcome.epsilon.has_value()) {
            entry["epsilon"] = *outcome.epsilon;
        } else {
            entry["epsilon"] = nullptr;
        }
        entry["sentence_index"] = outcome.sentence_index;
        entry["chosen"] = outcome.chosen;
        entry["gold"] = outcome.gold;
        entry["correct"] = outcome.correct;
        out << entry.dump() << '\n';
    }
    if (!out) {
        throw ParseError("write failed: " + path.string());
    }
}

}  // namespace wsd
