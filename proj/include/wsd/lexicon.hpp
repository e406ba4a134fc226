#ifndef WSD_LEXICON_HPP
#define WSD_LEXICON_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wsd/algorithms.hpp"
#include "wsd/embeddings.hpp"

namespace wsd {

struct Synset {
    int sense_id = 0;                    // >= 1
    std::vector<std::string> synonyms;   // non-empty, single-word, pairwise distinct
    std::optional<std::string> gloss;
};

// Target lemma with its ordered senses. Monosemous targets are rejected, as
// are targets where two senses share the same synonym set (they cannot be
// discerned by synonyms alone).
struct SenseInventory {
    std::string target_lemma;
    std::vector<Synset> senses;

    const Synset* find_sense(int sense_id) const;
};

struct TaggedSentence {
    std::vector<std::string> lemmas;
    std::size_t target_index = 0;
    int gold_sense_id = 0;

    const std::string& target_lemma() const { return lemmas.at(target_index); }
};

// Lookup table over loaded inventories, keyed by target lemma.
class InventoryIndex {
public:
    explicit InventoryIndex(const std::vector<SenseInventory>& inventories);

    const SenseInventory* find(const std::string& target_lemma) const;

private:
    std::unordered_map<std::string, const SenseInventory*> by_lemma_;
};

// Inventory file: JSON array of
//   {"target": str, "senses": [{"id": int, "synonyms": [str, ...], "gloss": str?}, ...]}
std::vector<SenseInventory> load_inventory(const std::filesystem::path& path);

// Dataset file: JSON Lines, one object per sentence:
//   {"lemmas": [str, ...], "target_index": int, "gold_sense_id": int}
// Each sentence is cross-checked against the loaded inventories.
std::vector<TaggedSentence> load_dataset(const std::filesystem::path& path,
                                         const std::vector<SenseInventory>& inventories);

void save_dataset(const std::vector<TaggedSentence>& dataset,
                  const std::filesystem::path& path);

// Resolves a sentence against the model: sentence vectors (the target at its
// position with origin target), per-sense synonym vectors plus a copy of the
// target vector in every sense set, and the list of dropped OOV lemmas.
// Throws TargetOovError when the target itself has no vector.
DisambiguationTask resolve_task(const TaggedSentence& sentence, const SenseInventory& inventory,
                                const EmbeddingModel& model);

}  // namespace wsd

#endif
