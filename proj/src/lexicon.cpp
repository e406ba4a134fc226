#include "wsd/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wsd {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const Synset* SenseInventory::find_sense(int sense_id) const {
    for (const auto& sense : senses) {
        if (sense.sense_id == sense_id) {
            return &sense;
        }
    }
    return nullptr;
}

InventoryIndex::InventoryIndex(const std::vector<SenseInventory>& inventories) {
    for (const auto& inventory : inventories) {
        by_lemma_.emplace(inventory.target_lemma, &inventory);
    }
}

const SenseInventory* InventoryIndex::find(const std::string& target_lemma) const {
    auto it = by_lemma_.find(target_lemma);
    return it == by_lemma_.end() ? nullptr : it->second;
}

namespace {

bool has_whitespace(const std::string& s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

void validate_inventory(const SenseInventory& inventory, std::vector<std::string>& problems) {
    const std::string where = "target '" + inventory.target_lemma + "'";
    if (inventory.target_lemma.empty()) {
        problems.push_back("inventory entry with empty target lemma");
        return;
    }
    if (inventory.senses.size() < 2) {
        problems.push_back(where + ": needs at least 2 senses, got " +
                           std::to_string(inventory.senses.size()));
    }
    std::set<int> seen_ids;
    std::vector<std::set<std::string>> synonym_sets;
    for (const auto& sense : inventory.senses) {
        const std::string sense_where =
            where + ", sense " + std::to_string(sense.sense_id);
        if (sense.sense_id < 1) {
            problems.push_back(sense_where + ": sense id must be >= 1");
        }
        if (!seen_ids.insert(sense.sense_id).second) {
            problems.push_back(sense_where + ": duplicate sense id");
        }
        if (sense.synonyms.empty()) {
            problems.push_back(sense_where + ": empty synonym list");
        }
        std::set<std::string> synonym_set;
        for (const auto& synonym : sense.synonyms) {
            if (synonym.empty()) {
                problems.push_back(sense_where + ": empty synonym");
            } else if (has_whitespace(synonym)) {
                problems.push_back(sense_where + ": multiword synonym '" + synonym +
                                   "' (only single-word synonyms are supported)");
            }
            if (!synonym_set.insert(synonym).second) {
                problems.push_back(sense_where + ": duplicate synonym '" + synonym + "'");
            }
        }
        for (std::size_t other = 0; other < synonym_sets.size(); ++other) {
            if (synonym_sets[other] == synonym_set) {
                problems.push_back(where + ": senses " +
                                   std::to_string(inventory.senses[other].sense_id) + " and " +
                                   std::to_string(sense.sense_id) +
                                   " have equal synonym sets; the senses cannot be discerned by "
                                   "synonyms alone");
            }
        }
        synonym_sets.push_back(std::move(synonym_set));
    }
}

}  // namespace

std::vector<SenseInventory> load_inventory(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open inventory file: " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError(path.string() + ": expected a JSON array of inventory entries");
    }

    std::vector<SenseInventory> inventories;
    std::vector<std::string> problems;
    std::set<std::string> seen_targets;
    for (const auto& entry : doc) {
        SenseInventory inventory;
        try {
            inventory.target_lemma = entry.at("target").get<std::string>();
            for (const auto& sense_json : entry.at("senses")) {
                Synset sense;
                sense.sense_id = sense_json.at("id").get<int>();
                sense.synonyms = sense_json.at("synonyms").get<std::vector<std::string>>();
                if (sense_json.contains("gloss")) {
                    sense.gloss = sense_json.at("gloss").get<std::string>();
                }
                inventory.senses.push_back(std::move(sense));
            }
        } catch (const json::exception& e) {
            throw ParseError(path.string() + ": malformed inventory entry: " + e.what());
        }
        if (!seen_targets.insert(inventory.target_lemma).second) {
            problems.push_back("duplicate target lemma '" + inventory.target_lemma + "'");
        }
        validate_inventory(inventory, problems);
        inventories.push_back(std::move(inventory));
    }
    if (!problems.empty()) {
        std::ostringstream message;
        message << path.string() << ": invalid inventory";
        for (const auto& p : problems) {
            message << "\n  - " << p;
        }
        throw ValidationError(message.str());
    }
    return inventories;
}

std::vector<TaggedSentence> load_dataset(const std::filesystem::path& path,
                                         const std::vector<SenseInventory>& inventories) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open dataset file: " + path.string());
    }
    const InventoryIndex index(inventories);

    std::vector<TaggedSentence> dataset;
    std::vector<std::string> problems;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::string where = path.string() + ":" + std::to_string(line_no);
        TaggedSentence sentence;
        long long target_index = 0;
        try {
            const json entry = json::parse(line);
            sentence.lemmas = entry.at("lemmas").get<std::vector<std::string>>();
            target_index = entry.at("target_index").get<long long>();
            sentence.gold_sense_id = entry.at("gold_sense_id").get<int>();
        } catch (const json::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (sentence.lemmas.empty()) {
            problems.push_back(where + ": empty lemma list");
            continue;
        }
        if (target_index < 0 ||
            static_cast<std::size_t>(target_index) >= sentence.lemmas.size()) {
            problems.push_back(where + ": target_index " + std::to_string(target_index) +
                               " out of bounds for " + std::to_string(sentence.lemmas.size()) +
                               " lemmas");
            continue;
        }
        sentence.target_index = static_cast<std::size_t>(target_index);
        const SenseInventory* inventory = index.find(sentence.target_lemma());
        if (inventory == nullptr) {
            problems.push_back(where + ": no inventory for target lemma '" +
                               sentence.target_lemma() + "'");
            continue;
        }
        if (inventory->find_sense(sentence.gold_sense_id) == nullptr) {
            problems.push_back(where + ": gold_sense_id " +
                               std::to_string(sentence.gold_sense_id) +
                               " not present in the inventory of '" + sentence.target_lemma() +
                               "'");
            continue;
        }
        dataset.push_back(std::move(sentence));
    }
    if (!problems.empty()) {
        std::ostringstream message;
        message << path.string() << ": invalid dataset";
        for (const auto& p : problems) {
            message << "\n  - " << p;
        }
        throw ValidationError(message.str());
    }
    return dataset;
}

void save_dataset(const std::vector<TaggedSentence>& dataset,
                  const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open for writing: " + path.string());
    }
    for (const auto& sentence : dataset) {
        ordered_json entry;
        entry["lemmas"] = sentence.lemmas;
        entry["target_index"] = sentence.target_index;
        entry["gold_sense_id"] = sentence.gold_sense_id;
        out << entry.dump() << '\n';
    }
    if (!out) {
        throw ParseError("write failed: " + path.string());
    }
}

DisambiguationTask resolve_task(const TaggedSentence& sentence, const SenseInventory& inventory,
                                const EmbeddingModel& model) {
    if (sentence.target_lemma() != inventory.target_lemma) {
        throw std::invalid_argument("sentence target '" + sentence.target_lemma() +
                                    "' does not match inventory target '" +
                                    inventory.target_lemma + "'");
    }
    const std::vector<double>* target_components = model.find(inventory.target_lemma);
    if (target_components == nullptr) {
        throw TargetOovError(inventory.target_lemma);
    }

    DisambiguationTask task;
    task.target_vector = WordVector{inventory.target_lemma, *target_components, Origin::target()};

    const auto record_dropped = [&task](const std::string& lemma) {
        if (std::find(task.dropped_lemmas.begin(), task.dropped_lemmas.end(), lemma) ==
            task.dropped_lemmas.end()) {
            task.dropped_lemmas.push_back(lemma);
        }
    };

    for (std::size_t i = 0; i < sentence.lemmas.size(); ++i) {
        if (i == sentence.target_index) {
            task.sentence_vectors.add(task.target_vector);
            continue;
        }
        const std::string& lemma = sentence.lemmas[i];
        const std::vector<double>* components = model.find(lemma);
        if (components == nullptr) {
            record_dropped(lemma);
            continue;
        }
        task.sentence_vectors.add(WordVector{lemma, *components, Origin::sentence()});
    }

    for (std::size_t k = 0; k < inventory.senses.size(); ++k) {
        const Synset& sense = inventory.senses[k];
        const Origin origin = Origin::for_synset(static_cast<std::int32_t>(k));
        VectorSet vectors;
        vectors.add(WordVector{inventory.target_lemma, *target_components, origin});
        for (const auto& synonym : sense.synonyms) {
            const std::vector<double>* components = model.find(synonym);
            if (components == nullptr) {
                record_dropped(synonym);
                continue;
            }
            vectors.add(WordVector{synonym, *components, origin});
        }
        task.sense_vector_sets.push_back(std::move(vectors));
        task.sense_ids.push_back(sense.sense_id);
    }
    return task;
}

}  // namespace wsd
