// Command-line surface: disambiguate a single sentence, evaluate a dataset
// at one epsilon, sweep an epsilon grid, or inspect the proximity functions
// on two vector sets. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 unresolvable target (OOV), 2 malformed input.

#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsd/evaluation.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json decision_to_json(const wsd::SenseDecision& decision,
                              const wsd::SenseInventory& inventory) {
    ordered_json out;
    out["chosen_sense_id"] = decision.chosen_sense_id;
    const wsd::Synset* sense = inventory.find_sense(decision.chosen_sense_id);
    if (sense != nullptr && sense->gloss.has_value()) {
        out["gloss"] = *sense->gloss;
    }
    if (decision.epsilon_used.has_value()) {
        out["epsilon_used"] = *decision.epsilon_used;
    } else {
        out["epsilon_used"] = nullptr;
    }
    out["tie_unresolved"] = decision.tie_unresolved;
    ordered_json scores = ordered_json::array();
    for (const auto& [id, score] : decision.per_sense_scores) {
        scores.push_back({{"sense_id", id}, {"score", score}});
    }
    out["per_sense_scores"] = scores;
    if (decision.trace.has_value()) {
        ordered_json senses = ordered_json::array();
        for (const auto& st : decision.trace->senses) {
            ordered_json sense_json;
            sense_json["sense_id"] = st.sense_id;
            sense_json["candidate_synonyms"] = st.candidate_synonyms;
            sense_json["candidate_sentence"] = st.candidate_sentence;
            ordered_json near = ordered_json::array();
            for (const auto& ref : st.near) {
                near.push_back({{"label", ref.label}, {"origin", wsd::to_string(ref.origin)}});
            }
            ordered_json distant = ordered_json::array();
            for (const auto& ref : st.distant) {
                distant.push_back({{"label", ref.label}, {"origin", wsd::to_string(ref.origin)}});
            }
            sense_json["near"] = near;
            sense_json["distant"] = distant;
            senses.push_back(std::move(sense_json));
        }
        out["trace"] = {{"epsilon", decision.trace->epsilon}, {"senses", senses}};
    }
    return out;
}

ordered_json member_set_to_json(const wsd::MemberSet& refs) {
    ordered_json out = ordered_json::array();
    for (const auto& ref : refs) {
        out.push_back({{"label", ref.label}, {"origin", wsd::to_string(ref.origin)}});
    }
    return out;
}

wsd::VectorSet set_from_json(const std::string& text, const wsd::Origin& origin) {
    wsd::VectorSet set;
    const auto doc = nlohmann::json::parse(text);
    for (const auto& entry : doc) {
        wsd::WordVector member;
        member.label = entry.at("label").get<std::string>();
        member.components = entry.at("vector").get<std::vector<double>>();
        member.origin = origin;
        set.add(std::move(member));
    }
    return set;
}

wsd::VectorSet set_from_lemmas(const std::vector<std::string>& lemmas,
                               const wsd::EmbeddingModel& model, const wsd::Origin& origin) {
    wsd::VectorSet set;
    for (const auto& lemma : lemmas) {
        auto vector = wsd::lookup(model, lemma, origin);
        if (!vector.has_value()) {
            throw wsd::ValidationError("lemma not in model: " + lemma);
        }
        set.add(std::move(*vector));
    }
    return set;
}

struct CommonOptions {
    std::string model_path;
    std::string inventory_path;
    std::string dataset_path;
    std::vector<std::string> algorithms;
    std::string epsilon_spec = "0:1:0.01";
    std::string comparator = "strict";
    std::string out_path;
    std::string per_sentence_path;
    unsigned jobs = 0;
    bool include_target_mean = false;
    bool exclude_target_k = false;
};

wsd::Comparator parse_comparator(const std::string& name) {
    if (name == "strict") return wsd::Comparator::strict;
    if (name == "inclusive") return wsd::Comparator::inclusive;
    throw CLI::ValidationError("--comparator", "must be 'strict' or 'inclusive'");
}

wsd::SelectorOptions selector_options(const CommonOptions& common) {
    wsd::SelectorOptions selector;
    selector.include_target_in_sentence_mean = common.include_target_mean;
    selector.exclude_target = common.exclude_target_k;
    selector.comparator = parse_comparator(common.comparator);
    return selector;
}

void print_report_summary(const wsd::EvaluationReport& report) {
    std::map<std::string, std::pair<int, int>> totals;  // algorithm -> (correct, evaluated)
    for (const auto& row : report.rows) {
        auto& [correct, evaluated] = totals[wsd::to_string(row.algorithm)];
        correct += row.n_correct;
        evaluated += row.n_evaluated;
    }
    for (const auto& [algorithm, counts] : totals) {
        std::cout << algorithm << ": " << counts.first << "/" << counts.second << " correct\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"word-sense disambiguation via epsilon-filtered context proximity"};
    app.require_subcommand(1);
    CommonOptions common;

    // disambiguate
    auto* cmd_dis = app.add_subcommand("disambiguate", "select a sense for one sentence");
    std::vector<std::string> lemmas;
    std::size_t target_index = 0;
    std::string algorithm_name = "k";
    cmd_dis->add_option("--model", common.model_path, "word2vec text model")->required();
    cmd_dis->add_option("--inventory", common.inventory_path, "sense inventory JSON")->required();
    cmd_dis->add_option("--algorithm", algorithm_name, "a0|aeps-syn|aeps-sent-syn|k|mfs");
    cmd_dis->add_option("--epsilon", common.epsilon_spec, "epsilon value or start:stop:step grid");
    cmd_dis->add_option("--comparator", common.comparator, "strict|inclusive");
    cmd_dis->add_option("--target-index", target_index, "0-based target position")->required();
    cmd_dis->add_flag("--include-target-mean", common.include_target_mean,
                      "include the target vector in the sentence mean");
    cmd_dis->add_flag("--exclude-target-k", common.exclude_target_k,
                      "drop the target vector from the proximity sets");
    cmd_dis->add_option("lemmas", lemmas, "sentence lemmas")->required()->expected(-1);

    // evaluate
    auto* cmd_eval = app.add_subcommand("evaluate", "evaluate a dataset at one epsilon");
    bool schedule_ties = false;
    cmd_eval->add_option("--model", common.model_path)->required();
    cmd_eval->add_option("--inventory", common.inventory_path)->required();
    cmd_eval->add_option("--dataset", common.dataset_path)->required();
    cmd_eval->add_option("--algorithm", common.algorithms, "algorithms to run")->required();
    cmd_eval->add_option("--epsilon", common.epsilon_spec,
                         "epsilon value (or grid with --ties-schedule)");
    cmd_eval->add_option("--comparator", common.comparator);
    cmd_eval->add_flag("--ties-schedule", schedule_ties,
                       "resolve ties per sentence by walking the whole epsilon grid");
    cmd_eval->add_option("--out", common.out_path, "CSV output path");
    cmd_eval->add_flag("--include-target-mean", common.include_target_mean);
    cmd_eval->add_flag("--exclude-target-k", common.exclude_target_k);

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "evaluate across an epsilon grid");
    cmd_sweep->add_option("--model", common.model_path)->required();
    cmd_sweep->add_option("--inventory", common.inventory_path)->required();
    cmd_sweep->add_option("--dataset", common.dataset_path)->required();
    cmd_sweep->add_option("--algorithm", common.algorithms, "algorithms to run")->required();
    cmd_sweep->add_option("--epsilon", common.epsilon_spec, "grid spec start:stop:step");
    cmd_sweep->add_option("--comparator", common.comparator);
    cmd_sweep->add_option("--out", common.out_path, "CSV output path")->required();
    cmd_sweep->add_option("--per-sentence", common.per_sentence_path,
                          "also write per-sentence outcomes as JSONL");
    cmd_sweep->add_option("--jobs", common.jobs, "worker threads (default: all cores)");
    cmd_sweep->add_flag("--include-target-mean", common.include_target_mean);
    cmd_sweep->add_flag("--exclude-target-k", common.exclude_target_k);

    // proximity
    auto* cmd_prox = app.add_subcommand("proximity", "near/distant sets and K functions");
    std::string a_json, b_json;
    std::vector<std::string> a_lemmas, b_lemmas;
    double prox_epsilon = 0.5;
    cmd_prox->add_option("--a-json", a_json, "set A as JSON [{\"label\":...,\"vector\":[...]}]");
    cmd_prox->add_option("--b-json", b_json, "set B as JSON");
    cmd_prox->add_option("--a-lemmas", a_lemmas, "set A as lemmas resolved against --model");
    cmd_prox->add_option("--b-lemmas", b_lemmas, "set B as lemmas resolved against --model");
    cmd_prox->add_option("--model", common.model_path, "model for lemma resolution");
    cmd_prox->add_option("--epsilon", prox_epsilon, "epsilon threshold");
    cmd_prox->add_option("--comparator", common.comparator);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_dis->parsed()) {
        const auto model = wsd::load_word2vec_text(common.model_path);
        const auto inventories = wsd::load_inventory(common.inventory_path);
        if (target_index >= lemmas.size()) {
            throw wsd::ValidationError("target index out of bounds");
        }
        wsd::TaggedSentence sentence;
        sentence.lemmas = lemmas;
        sentence.target_index = target_index;
        const wsd::InventoryIndex index(inventories);
        const wsd::SenseInventory* inventory = index.find(sentence.target_lemma());
        if (inventory == nullptr) {
            throw wsd::ValidationError("no inventory for target lemma '" +
                                       sentence.target_lemma() + "'");
        }
        sentence.gold_sense_id = inventory->senses.front().sense_id;  // unused by selectors
        const wsd::DisambiguationTask task = wsd::resolve_task(sentence, *inventory, model);

        wsd::SelectorOptions selector = selector_options(common);
        selector.record_trace = true;
        const wsd::AlgorithmKind algorithm = wsd::parse_algorithm(algorithm_name);
        wsd::SenseDecision decision;
        if (algorithm == wsd::AlgorithmKind::a0) {
            decision = wsd::select_a0(task, selector);
        } else if (algorithm == wsd::AlgorithmKind::mfs) {
            throw wsd::ValidationError("mfs needs a dataset; use the evaluate command");
        } else {
            const auto schedule = wsd::EpsilonSchedule::parse(common.epsilon_spec);
            if (algorithm == wsd::AlgorithmKind::aeps_syn) {
                decision = wsd::select_a_eps_synonyms(task, schedule, selector);
            } else if (algorithm == wsd::AlgorithmKind::aeps_sent_syn) {
                decision = wsd::select_a_eps_sentence_synonyms(task, schedule, selector);
            } else {
                decision = wsd::select_k_algorithm(task, schedule, selector);
            }
        }
        std::cout << decision_to_json(decision, *inventory).dump(2) << '\n';
        return 0;
    }

    if (cmd_eval->parsed() || cmd_sweep->parsed()) {
        const auto model = wsd::load_word2vec_text(common.model_path);
        const auto inventories = wsd::load_inventory(common.inventory_path);
        const auto dataset = wsd::load_dataset(common.dataset_path, inventories);
        std::vector<wsd::AlgorithmKind> algorithms;
        for (const auto& name : common.algorithms) {
            algorithms.push_back(wsd::parse_algorithm(name));
        }
        wsd::EvalOptions options;
        options.selector = selector_options(common);
        options.jobs = common.jobs;

        wsd::EvaluationReport report;
        wsd::SweepResult sweep_result;
        if (cmd_sweep->parsed()) {
            const auto schedule = wsd::EpsilonSchedule::parse(common.epsilon_spec);
            options.retain_outcomes = !common.per_sentence_path.empty();
            sweep_result = wsd::sweep(dataset, inventories, model, algorithms, schedule, options);
            report = sweep_result.report;
        } else {
            for (wsd::AlgorithmKind algorithm : algorithms) {
                std::vector<wsd::ReportRow> rows;
                if (!wsd::depends_on_epsilon(algorithm)) {
                    rows = wsd::evaluate_fixed_epsilon(dataset, inventories, model, algorithm,
                                                       0.0, options);
                } else if (schedule_ties) {
                    const auto schedule = wsd::EpsilonSchedule::parse(common.epsilon_spec);
                    rows = wsd::evaluate_with_schedule(dataset, inventories, model, algorithm,
                                                       schedule, options);
                } else {
                    const auto schedule = wsd::EpsilonSchedule::parse(common.epsilon_spec);
                    if (schedule.size() != 1) {
                        throw wsd::ValidationError(
                            "evaluate expects a single epsilon; use sweep for grids or pass "
                            "--ties-schedule");
                    }
                    rows = wsd::evaluate_fixed_epsilon(dataset, inventories, model, algorithm,
                                                       schedule.values().front(), options);
                }
                report.rows.insert(report.rows.end(), rows.begin(), rows.end());
            }
        }
        if (!common.out_path.empty()) {
            wsd::export_csv(report, common.out_path);
            std::cerr << "wrote " << common.out_path << '\n';
        }
        if (!common.per_sentence_path.empty()) {
            wsd::export_per_sentence_jsonl(sweep_result, common.per_sentence_path);
            std::cerr << "wrote " << common.per_sentence_path << '\n';
        }
        print_report_summary(report);
        return 0;
    }

    if (cmd_prox->parsed()) {
        wsd::VectorSet set_a, set_b;
        if (!a_json.empty()) {
            set_a = set_from_json(a_json, wsd::Origin::sentence());
        }
        if (!b_json.empty()) {
            set_b = set_from_json(b_json, wsd::Origin::for_synset(0));
        }
        if (!a_lemmas.empty() || !b_lemmas.empty()) {
            if (common.model_path.empty()) {
                throw wsd::ValidationError("--model is required to resolve lemma sets");
            }
            const auto model = wsd::load_word2vec_text(common.model_path);
            if (!a_lemmas.empty()) {
                set_a = set_from_lemmas(a_lemmas, model, wsd::Origin::sentence());
            }
            if (!b_lemmas.empty()) {
                set_b = set_from_lemmas(b_lemmas, model, wsd::Origin::for_synset(0));
            }
        }
        if (set_a.empty() || set_b.empty()) {
            throw wsd::ValidationError("proximity requires two nonempty sets");
        }
        const auto cmp = parse_comparator(common.comparator);
        const auto result = wsd::compute_proximity(set_a, set_b, prox_epsilon, cmp);
        ordered_json out;
        out["epsilon"] = result.epsilon;
        out["near"] = member_set_to_json(result.near);
        out["distant"] = member_set_to_json(result.distant);
        out["k"] = result.k_value;
        out["k_tilde"] = result.k_tilde_value;
        out["average_similarity"] = wsd::average_similarity(set_a, set_b);
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wsd::TargetOovError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
