#ifndef WSD_ALGORITHMS_HPP
#define WSD_ALGORITHMS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsd/proximity.hpp"

namespace wsd {

// One sentence with a target word, fully resolved against an embedding
// model: the sentence vectors (origins sentence/target), the target vector
// itself, and one vector set per sense. Every sense set carries a copy of
// the target vector (origin synset(k)); the averaging selectors exclude it
// explicitly, the K selector keeps it.
struct DisambiguationTask {
    VectorSet sentence_vectors;
    WordVector target_vector;
    std::vector<VectorSet> sense_vector_sets;
    std::vector<int> sense_ids;
    std::vector<std::string> dropped_lemmas;

    // Senses whose synonyms were all out of vocabulary (only the target
    // copy remains in their vector set).
    std::vector<int> empty_sense_ids() const;
};

// Strictly increasing epsilon values in [0, 1). The tie-resolution loop
// walks the schedule in order.
class EpsilonSchedule {
public:
    explicit EpsilonSchedule(std::vector<double> values);

    // Accepts a single value ("0.5") or a grid "start:stop:step" with stop
    // exclusive ("0:1:0.25" -> 0, 0.25, 0.5, 0.75).
    static EpsilonSchedule parse(const std::string& spec);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
};

// Filter state per sense at the epsilon that produced a decision.
struct SenseTrace {
    int sense_id = 0;
    std::vector<std::string> candidate_synonyms;  // cand_k / cand syn_k labels
    std::vector<std::string> candidate_sentence;  // cand_kS labels
    MemberSet near;                               // C_k (K selector)
    MemberSet distant;                            // D_k (K selector)

    std::size_t synonym_candidate_count() const noexcept { return candidate_synonyms.size(); }
    std::size_t sentence_candidate_count() const noexcept { return candidate_sentence.size(); }
};

struct FilterTrace {
    double epsilon = 0.0;
    std::vector<SenseTrace> senses;
};

struct SenseDecision {
    int chosen_sense_id = 0;
    // The epsilon that produced the decision; on tie exhaustion, the last
    // epsilon tried. Absent for selectors that do not depend on epsilon.
    std::optional<double> epsilon_used;
    std::vector<std::pair<int, double>> per_sense_scores;
    bool tie_unresolved = false;
    std::optional<FilterTrace> trace;
};

struct SelectorOptions {
    // Whether the target vector participates in the sentence mean (the
    // averaging selectors). Default: excluded.
    bool include_target_in_sentence_mean = false;
    Comparator comparator = Comparator::strict;
    // K selector only: drop the target vector from both sides before
    // computing near/distant sets.
    bool exclude_target = false;
    bool record_trace = false;
};

// Baseline averaging: sentence mean vs. per-sense synonym mean, no
// filtration. A sense with no usable synonyms scores the sentinel -1.
SenseDecision select_a0(const DisambiguationTask& task, const SelectorOptions& options = {});

// Synonym eps-filtration: per epsilon, each sense keeps the synonyms whose
// similarity to the target beats epsilon, then compares the candidate mean
// with the sentence mean. Ties advance to the next epsilon.
SenseDecision select_a_eps_synonyms(const DisambiguationTask& task,
                                    const EpsilonSchedule& schedule,
                                    const SelectorOptions& options = {});

// Sentence and synonym eps-filtration: both the sentence words and the
// synonyms are filtered by cross-set similarity before averaging.
SenseDecision select_a_eps_sentence_synonyms(const DisambiguationTask& task,
                                             const EpsilonSchedule& schedule,
                                             const SelectorOptions& options = {});

// Proximity-ratio selector: per epsilon, scores each sense by the ratio of
// near to distant elements between the sense set and the sentence set.
SenseDecision select_k_algorithm(const DisambiguationTask& task, const EpsilonSchedule& schedule,
                                 const SelectorOptions& options = {});

// Most-frequent-sense baseline over gold counts.
SenseDecision select_mfs(const std::map<int, int>& frequencies);

}  // namespace wsd

#endif
