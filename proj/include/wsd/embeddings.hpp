#ifndef WSD_EMBEDDINGS_HPP
#define WSD_EMBEDDINGS_HPP

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wsd/errors.hpp"

namespace wsd {

// Namespace tag for set membership. Word-vector sets compare elements by
// (label, origin), so the same lemma occurring as a sentence word, as the
// target, or inside different synsets stays distinct.
enum class OriginKind : std::uint8_t { sentence, synset, target };

struct Origin {
    OriginKind kind = OriginKind::sentence;
    std::int32_t synset = -1;  // position of the sense, only for OriginKind::synset

    static Origin sentence() noexcept { return {OriginKind::sentence, -1}; }
    static Origin target() noexcept { return {OriginKind::target, -1}; }
    static Origin for_synset(std::int32_t k) noexcept { return {OriginKind::synset, k}; }

    auto operator<=>(const Origin&) const = default;
};

std::string to_string(const Origin& origin);

struct WordVector {
    std::string label;
    std::vector<double> components;
    Origin origin;

    std::size_t dimension() const noexcept { return components.size(); }
};

// Immutable lemma -> dense vector map with a fixed dimension. Entries keep
// insertion order so that serialization is stable; lookups go through a
// hash index. Safe to share across threads once loaded.
class EmbeddingModel {
public:
    explicit EmbeddingModel(std::size_t dimension);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return entries_.size(); }

    // Number of duplicate-lemma inserts observed (last occurrence wins).
    std::size_t duplicate_count() const noexcept { return duplicates_; }

    void insert(std::string lemma, std::vector<double> components);

    // nullptr when the lemma is absent.
    const std::vector<double>* find(std::string_view lemma) const;
    bool contains(std::string_view lemma) const { return find(lemma) != nullptr; }

    struct Entry {
        std::string lemma;
        std::vector<double> components;
    };
    const std::vector<Entry>& entries() const noexcept { return entries_; }

private:
    std::size_t dimension_;
    std::size_t duplicates_ = 0;
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

// word2vec text format: a header line "vocab_count dimension", then one line
// per entry, "lemma c1 ... c_dimension", single-space separated.
EmbeddingModel load_word2vec_text(const std::filesystem::path& path);
void save_word2vec_text(const EmbeddingModel& model, const std::filesystem::path& path);

std::optional<WordVector> lookup(const EmbeddingModel& model, std::string_view lemma,
                                 Origin origin = Origin::sentence());

// Cosine of the angle between the two word vectors, in [-1, 1]. Zero-norm
// operands yield the sentinel -1. Throws on dimension mismatch.
double similarity(const WordVector& u, const WordVector& v);

}  // namespace wsd

#endif
