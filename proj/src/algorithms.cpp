#include "wsd/algorithms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "wsd/kernels.hpp"

namespace wsd {

std::vector<int> DisambiguationTask::empty_sense_ids() const {
    std::vector<int> ids;
    for (std::size_t k = 0; k < sense_vector_sets.size(); ++k) {
        const auto& members = sense_vector_sets[k].members();
        const bool has_synonym = std::any_of(members.begin(), members.end(), [&](const auto& m) {
            return m.label != target_vector.label;
        });
        if (!has_synonym) {
            ids.push_back(sense_ids[k]);
        }
    }
    return ids;
}

EpsilonSchedule::EpsilonSchedule(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("epsilon schedule must be nonempty");
    }
    double previous = -1.0;
    for (double v : values_) {
        if (!(v >= 0.0 && v < 1.0)) {
            throw std::invalid_argument("epsilon values must lie in [0, 1)");
        }
        if (v <= previous) {
            throw std::invalid_argument("epsilon values must be strictly increasing");
        }
        previous = v;
    }
}

EpsilonSchedule EpsilonSchedule::parse(const std::string& spec) {
    const auto first_colon = spec.find(':');
    if (first_colon == std::string::npos) {
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), value);
        if (ec != std::errc() || ptr != spec.data() + spec.size()) {
            throw std::invalid_argument("bad epsilon spec: " + spec);
        }
        return EpsilonSchedule({value});
    }
    const auto second_colon = spec.find(':', first_colon + 1);
    if (second_colon == std::string::npos) {
        throw std::invalid_argument("bad epsilon grid spec (want start:stop:step): " + spec);
    }
    const auto parse_part = [&](std::size_t from, std::size_t to) {
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(spec.data() + from, spec.data() + to, value);
        if (ec != std::errc() || ptr != spec.data() + to) {
            throw std::invalid_argument("bad epsilon grid spec: " + spec);
        }
        return value;
    };
    const double start = parse_part(0, first_colon);
    const double stop = parse_part(first_colon + 1, second_colon);
    const double step = parse_part(second_colon + 1, spec.size());
    if (step <= 0.0 || stop <= start) {
        throw std::invalid_argument("bad epsilon grid spec: " + spec);
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        values.push_back(start + static_cast<double>(i) * step);
    }
    return EpsilonSchedule(std::move(values));
}

namespace {

std::vector<double> mean_of(const std::vector<const WordVector*>& members, std::size_t dimension) {
    std::vector<double> mean(dimension, 0.0);
    if (members.empty()) {
        return mean;  // zero vector, scores the sentinel through cosine
    }
    for (const auto* m : members) {
        for (std::size_t i = 0; i < dimension; ++i) {
            mean[i] += m->components[i];
        }
    }
    for (double& c : mean) {
        c /= static_cast<double>(members.size());
    }
    return mean;
}

std::vector<double> sentence_mean(const DisambiguationTask& task, bool include_target) {
    std::vector<const WordVector*> members;
    for (const auto& m : task.sentence_vectors.members()) {
        if (m.origin.kind == OriginKind::sentence ||
            (include_target && m.origin.kind == OriginKind::target)) {
            members.push_back(&m);
        }
    }
    return mean_of(members, task.sentence_vectors.dimension());
}

void require_task(const DisambiguationTask& task) {
    if (task.sense_vector_sets.size() != task.sense_ids.size() || task.sense_ids.size() < 2) {
        throw std::invalid_argument("task must carry at least two senses with matching ids");
    }
}

// Sense ids attaining the maximal score; scores compare with exact
// floating-point equality so that rational fixtures tie exactly.
std::vector<int> argmax_ids(const std::vector<std::pair<int, double>>& scores) {
    double best = scores.front().second;
    for (const auto& [id, s] : scores) {
        best = std::max(best, s);
    }
    std::vector<int> ids;
    for (const auto& [id, s] : scores) {
        if (s == best) {
            ids.push_back(id);
        }
    }
    return ids;
}

SenseDecision make_decision(std::vector<std::pair<int, double>> scores,
                            std::optional<double> epsilon, bool tie_unresolved) {
    const std::vector<int> best = argmax_ids(scores);
    SenseDecision decision;
    decision.chosen_sense_id = *std::min_element(best.begin(), best.end());
    decision.epsilon_used = epsilon;
    decision.per_sense_scores = std::move(scores);
    decision.tie_unresolved = tie_unresolved;
    return decision;
}

// Pairwise similarities between a sense set and reference vectors, computed
// once per task; the epsilon loop only re-filters.
struct SenseSimilarities {
    std::vector<const WordVector*> synonyms;          // sense members, target excluded
    std::vector<double> to_target;                    // sim(synonym, v*)
    std::vector<std::vector<double>> to_sentence;     // [synonym][sentence word], targets excluded
};

std::vector<const WordVector*> non_target_sentence(const DisambiguationTask& task) {
    std::vector<const WordVector*> out;
    for (const auto& m : task.sentence_vectors.members()) {
        if (m.origin.kind != OriginKind::target) {
            out.push_back(&m);
        }
    }
    return out;
}

SenseSimilarities sense_similarities(const DisambiguationTask& task, const VectorSet& sense,
                                     const std::vector<const WordVector*>& sentence_words,
                                     bool with_sentence) {
    SenseSimilarities sims;
    for (const auto& m : sense.members()) {
        if (m.label == task.target_vector.label) {
            continue;  // u != v*
        }
        sims.synonyms.push_back(&m);
        sims.to_target.push_back(
            kernels::cosine_similarity(m.components, task.target_vector.components));
        if (with_sentence) {
            std::vector<double> row;
            row.reserve(sentence_words.size());
            for (const auto* w : sentence_words) {
                row.push_back(kernels::cosine_similarity(m.components, w->components));
            }
            sims.to_sentence.push_back(std::move(row));
        }
    }
    return sims;
}

}  // namespace

SenseDecision select_a0(const DisambiguationTask& task, const SelectorOptions& options) {
    require_task(task);
    const std::vector<double> s_mean =
        sentence_mean(task, options.include_target_in_sentence_mean);

    std::vector<std::pair<int, double>> scores;
    FilterTrace trace;
    for (std::size_t k = 0; k < task.sense_vector_sets.size(); ++k) {
        std::vector<const WordVector*> synonyms;
        for (const auto& m : task.sense_vector_sets[k].members()) {
            if (m.label != task.target_vector.label) {
                synonyms.push_back(&m);
            }
        }
        double score = -1.0;
        if (!synonyms.empty()) {
            score = kernels::cosine_similarity(
                mean_of(synonyms, task.sentence_vectors.dimension()), s_mean);
        }
        scores.emplace_back(task.sense_ids[k], score);
        if (options.record_trace) {
            SenseTrace st;
            st.sense_id = task.sense_ids[k];
            for (const auto* m : synonyms) st.candidate_synonyms.push_back(m->label);
            trace.senses.push_back(std::move(st));
        }
    }

    const std::vector<int> best = argmax_ids(scores);
    SenseDecision decision = make_decision(std::move(scores), std::nullopt, best.size() > 1);
    if (options.record_trace) {
        decision.trace = std::move(trace);
    }
    return decision;
}

SenseDecision select_a_eps_synonyms(const DisambiguationTask& task,
                                    const EpsilonSchedule& schedule,
                                    const SelectorOptions& options) {
    require_task(task);
    const std::vector<double> s_mean =
        sentence_mean(task, options.include_target_in_sentence_mean);
    const std::size_t dimension = task.sentence_vectors.dimension();

    std::vector<SenseSimilarities> per_sense;
    per_sense.reserve(task.sense_vector_sets.size());
    for (const auto& sense : task.sense_vector_sets) {
        per_sense.push_back(sense_similarities(task, sense, {}, false));
    }

    const auto score_at = [&](double epsilon, FilterTrace* trace) {
        std::vector<std::pair<int, double>> scores;
        for (std::size_t k = 0; k < per_sense.size(); ++k) {
            const auto& sims = per_sense[k];
            std::vector<const WordVector*> candidates;
            for (std::size_t i = 0; i < sims.synonyms.size(); ++i) {
                if (passes(sims.to_target[i], epsilon, options.comparator)) {
                    candidates.push_back(sims.synonyms[i]);
                }
            }
            const double score =
                kernels::cosine_similarity(mean_of(candidates, dimension), s_mean);
            scores.emplace_back(task.sense_ids[k], score);
            if (trace != nullptr) {
                SenseTrace st;
                st.sense_id = task.sense_ids[k];
                for (const auto* m : candidates) st.candidate_synonyms.push_back(m->label);
                trace->senses.push_back(std::move(st));
            }
        }
        return scores;
    };

    std::vector<std::pair<int, double>> scores;
    for (std::size_t idx = 0; idx < schedule.size(); ++idx) {
        const double epsilon = schedule.values()[idx];
        scores = score_at(epsilon, nullptr);
        if (argmax_ids(scores).size() == 1) {
            SenseDecision decision = make_decision(std::move(scores), epsilon, false);
            if (options.record_trace) {
                FilterTrace trace;
                trace.epsilon = epsilon;
                score_at(epsilon, &trace);
                decision.trace = std::move(trace);
            }
            return decision;
        }
    }
    const double last = schedule.values().back();
    SenseDecision decision = make_decision(std::move(scores), last, true);
    if (options.record_trace) {
        FilterTrace trace;
        trace.epsilon = last;
        score_at(last, &trace);
        decision.trace = std::move(trace);
    }
    return decision;
}

SenseDecision select_a_eps_sentence_synonyms(const DisambiguationTask& task,
                                             const EpsilonSchedule& schedule,
                                             const SelectorOptions& options) {
    require_task(task);
    const std::size_t dimension = task.sentence_vectors.dimension();
    const std::vector<const WordVector*> sentence_words = non_target_sentence(task);

    std::vector<SenseSimilarities> per_sense;
    per_sense.reserve(task.sense_vector_sets.size());
    for (const auto& sense : task.sense_vector_sets) {
        per_sense.push_back(sense_similarities(task, sense, sentence_words, true));
    }

    const auto score_at = [&](double epsilon, FilterTrace* trace) {
        std::vector<std::pair<int, double>> scores;
        for (std::size_t k = 0; k < per_sense.size(); ++k) {
            const auto& sims = per_sense[k];
            std::vector<const WordVector*> synonym_candidates;
            std::vector<bool> sentence_near(sentence_words.size(), false);
            for (std::size_t i = 0; i < sims.synonyms.size(); ++i) {
                bool any = false;
                for (std::size_t j = 0; j < sentence_words.size(); ++j) {
                    if (passes(sims.to_sentence[i][j], epsilon, options.comparator)) {
                        any = true;
                        sentence_near[j] = true;
                    }
                }
                if (any) {
                    synonym_candidates.push_back(sims.synonyms[i]);
                }
            }
            std::vector<const WordVector*> sentence_candidates;
            for (std::size_t j = 0; j < sentence_words.size(); ++j) {
                if (sentence_near[j]) {
                    sentence_candidates.push_back(sentence_words[j]);
                }
            }
            const double score =
                kernels::cosine_similarity(mean_of(sentence_candidates, dimension),
                                           mean_of(synonym_candidates, dimension));
            scores.emplace_back(task.sense_ids[k], score);
            if (trace != nullptr) {
                SenseTrace st;
                st.sense_id = task.sense_ids[k];
                for (const auto* m : synonym_candidates)
                    st.candidate_synonyms.push_back(m->label);
                for (const auto* m : sentence_candidates)
                    st.candidate_sentence.push_back(m->label);
                trace->senses.push_back(std::move(st));
            }
        }
        return scores;
    };

    std::vector<std::pair<int, double>> scores;
    for (std::size_t idx = 0; idx < schedule.size(); ++idx) {
        const double epsilon = schedule.values()[idx];
        scores = score_at(epsilon, nullptr);
        if (argmax_ids(scores).size() == 1) {
            SenseDecision decision = make_decision(std::move(scores), epsilon, false);
            if (options.record_trace) {
                FilterTrace trace;
                trace.epsilon = epsilon;
                score_at(epsilon, &trace);
                decision.trace = std::move(trace);
            }
            return decision;
        }
    }
    const double last = schedule.values().back();
    SenseDecision decision = make_decision(std::move(scores), last, true);
    if (options.record_trace) {
        FilterTrace trace;
        trace.epsilon = last;
        score_at(last, &trace);
        decision.trace = std::move(trace);
    }
    return decision;
}

SenseDecision select_k_algorithm(const DisambiguationTask& task, const EpsilonSchedule& schedule,
                                 const SelectorOptions& options) {
    require_task(task);

    // Sentence side; the target stays in S unless exclude_target is set.
    std::vector<const WordVector*> sentence;
    for (const auto& m : task.sentence_vectors.members()) {
        if (options.exclude_target && m.origin.kind == OriginKind::target) {
            continue;
        }
        sentence.push_back(&m);
    }

    struct SenseMatrix {
        std::vector<const WordVector*> members;       // syn_k side
        std::vector<std::vector<double>> sims;        // [member][sentence word]
    };
    std::vector<SenseMatrix> matrices;
    matrices.reserve(task.sense_vector_sets.size());
    for (const auto& sense : task.sense_vector_sets) {
        SenseMatrix m;
        for (const auto& member : sense.members()) {
            if (options.exclude_target && member.label == task.target_vector.label) {
                continue;
            }
            m.members.push_back(&member);
            std::vector<double> row;
            row.reserve(sentence.size());
            for (const auto* w : sentence) {
                row.push_back(kernels::cosine_similarity(member.components, w->components));
            }
            m.sims.push_back(std::move(row));
        }
        matrices.push_back(std::move(m));
    }

    const auto score_at = [&](double epsilon, FilterTrace* trace) {
        std::vector<std::pair<int, double>> scores;
        for (std::size_t k = 0; k < matrices.size(); ++k) {
            const SenseMatrix& m = matrices[k];
            std::vector<bool> member_near(m.members.size(), false);
            std::vector<bool> word_near(sentence.size(), false);
            for (std::size_t i = 0; i < m.members.size(); ++i) {
                for (std::size_t j = 0; j < sentence.size(); ++j) {
                    if (passes(m.sims[i][j], epsilon, options.comparator)) {
                        member_near[i] = true;
                        word_near[j] = true;
                    }
                }
            }
            const auto near_count =
                static_cast<std::size_t>(std::count(member_near.begin(), member_near.end(), true)) +
                static_cast<std::size_t>(std::count(word_near.begin(), word_near.end(), true));
            const std::size_t total = m.members.size() + sentence.size();
            const std::size_t distant_count = total - near_count;
            const double k_tilde =
                static_cast<double>(near_count) / static_cast<double>(1 + distant_count);
            scores.emplace_back(task.sense_ids[k], k_tilde);
            if (trace != nullptr) {
                SenseTrace st;
                st.sense_id = task.sense_ids[k];
                for (std::size_t i = 0; i < m.members.size(); ++i) {
                    auto& dest = member_near[i] ? st.near : st.distant;
                    dest.insert(MemberRef{m.members[i]->label, m.members[i]->origin});
                }
                for (std::size_t j = 0; j < sentence.size(); ++j) {
                    auto& dest = word_near[j] ? st.near : st.distant;
                    dest.insert(MemberRef{sentence[j]->label, sentence[j]->origin});
                }
                trace->senses.push_back(std::move(st));
            }
        }
        return scores;
    };

    std::vector<std::pair<int, double>> scores;
    for (std::size_t idx = 0; idx < schedule.size(); ++idx) {
        const double epsilon = schedule.values()[idx];
        scores = score_at(epsilon, nullptr);
        if (argmax_ids(scores).size() == 1) {
            SenseDecision decision = make_decision(std::move(scores), epsilon, false);
            if (options.record_trace) {
                FilterTrace trace;
                trace.epsilon = epsilon;
                score_at(epsilon, &trace);
                decision.trace = std::move(trace);
            }
            return decision;
        }
    }
    const double last = schedule.values().back();
    SenseDecision decision = make_decision(std::move(scores), last, true);
    if (options.record_trace) {
        FilterTrace trace;
        trace.epsilon = last;
        score_at(last, &trace);
        decision.trace = std::move(trace);
    }
    return decision;
}

SenseDecision select_mfs(const std::map<int, int>& frequencies) {
    if (frequencies.empty()) {
        throw std::invalid_argument("select_mfs requires nonempty frequencies");
    }
    std::vector<std::pair<int, double>> scores;
    for (const auto& [id, count] : frequencies) {
        if (count < 0) {
            throw std::invalid_argument("select_mfs requires counts >= 0");
        }
        scores.emplace_back(id, static_cast<double>(count));
    }
    const std::vector<int> best = argmax_ids(scores);
    return make_decision(std::move(scores), std::nullopt, best.size() > 1);
}

}  // namespace wsd
