#include "wsd/embeddings.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "wsd/kernels.hpp"

namespace wsd {

std::string to_string(const Origin& origin) {
    switch (origin.kind) {
        case OriginKind::sentence: return "sentence";
        case OriginKind::target: return "target";
        case OriginKind::synset: return "synset(" + std::to_string(origin.synset) + ")";
    }
    return "unknown";
}

EmbeddingModel::EmbeddingModel(std::size_t dimension) : dimension_(dimension) {
    if (dimension_ < 1) {
        throw std::invalid_argument("embedding dimension must be >= 1");
    }
}

void EmbeddingModel::insert(std::string lemma, std::vector<double> components) {
    if (lemma.empty()) {
        throw std::invalid_argument("lemma must be non-empty");
    }
    if (components.size() != dimension_) {
        throw std::invalid_argument("vector dimension mismatch for lemma: " + lemma);
    }
    for (double c : components) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("non-finite component for lemma: " + lemma);
        }
    }
    auto it = index_.find(lemma);
    if (it != index_.end()) {
        entries_[it->second].components = std::move(components);
        ++duplicates_;
        return;
    }
    index_.emplace(lemma, entries_.size());
    entries_.push_back(Entry{std::move(lemma), std::move(components)});
}

const std::vector<double>* EmbeddingModel::find(std::string_view lemma) const {
    auto it = index_.find(std::string(lemma));
    if (it == index_.end()) {
        return nullptr;
    }
    return &entries_[it->second].components;
}

namespace {

// Parses one full token as T; the whole token must be consumed.
template <typename T>
bool parse_token(std::string_view token, T& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_on_spaces(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const std::size_t next = line.find(' ', pos);
        if (next == std::string_view::npos) {
            tokens.push_back(line.substr(pos));
            break;
        }
        tokens.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return tokens;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

}  // namespace

EmbeddingModel load_word2vec_text(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open embedding file: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(path.string() + ": missing header line");
    }
    strip_cr(line);
    const auto header = split_on_spaces(line);
    std::uint64_t vocab_count = 0;
    std::int64_t dimension = 0;
    if (header.size() != 2 || !parse_token(header[0], vocab_count) ||
        !parse_token(header[1], dimension)) {
        throw ParseError(path.string() + ": malformed header, expected 'vocab_count dimension'");
    }
    if (dimension < 1) {
        throw ParseError(path.string() + ": dimension must be >= 1");
    }

    EmbeddingModel model(static_cast<std::size_t>(dimension));
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const auto tokens = split_on_spaces(line);
        const std::string where = path.string() + ":" + std::to_string(line_no);
        if (tokens.size() != static_cast<std::size_t>(dimension) + 1) {
            throw ParseError(where + ": expected lemma + " + std::to_string(dimension) +
                             " components, got " + std::to_string(tokens.size() - 1));
        }
        if (tokens[0].empty()) {
            throw ParseError(where + ": empty lemma");
        }
        std::vector<double> components(static_cast<std::size_t>(dimension));
        for (std::size_t i = 0; i < components.size(); ++i) {
            double value = 0.0;
            if (!parse_token(tokens[i + 1], value) || !std::isfinite(value)) {
                throw ParseError(where + ": non-numeric component '" + std::string(tokens[i + 1]) +
                                 "'");
            }
            components[i] = value;
        }
        model.insert(std::string(tokens[0]), std::move(components));
    }
    // The header's vocab_count is informational; duplicate lines collapse, so
    // the entry count may legitimately differ.
    return model;
}

void save_word2vec_text(const EmbeddingModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open for writing: " + path.string());
    }
    out << model.size() << ' ' << model.dimension() << '\n';
    char buf[64];
    for (const auto& entry : model.entries()) {
        out << entry.lemma;
        for (double c : entry.components) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), c);
            out << ' ';
            out.write(buf, ptr - buf);
            (void)ec;
        }
        out << '\n';
    }
    if (!out) {
        throw ParseError("write failed: " + path.string());
    }
}

std::optional<WordVector> lookup(const EmbeddingModel& model, std::string_view lemma,
                                 Origin origin) {
    const auto* components = model.find(lemma);
    if (components == nullptr) {
        return std::nullopt;
    }
    return WordVector{std::string(lemma), *components, origin};
}

double similarity(const WordVector& u, const WordVector& v) {
    return kernels::cosine_similarity(u.components, v.components);
}

}  // namespace wsd
