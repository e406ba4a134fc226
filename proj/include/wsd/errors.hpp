#ifndef WSD_ERRORS_HPP
#define WSD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wsd {

// File could not be read or its syntax does not match the declared format.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input parsed but violates a semantic invariant (inventory/dataset checks).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The target word of a sentence has no vector in the embedding model. The
// sentence cannot be disambiguated and is counted as skipped by evaluation.
class TargetOovError : public std::runtime_error {
public:
    explicit TargetOovError(const std::string& lemma)
        : std::runtime_error("target lemma not in embedding model: " + lemma), lemma_(lemma) {}

    const std::string& lemma() const noexcept { return lemma_; }

private:
    std::string lemma_;
};

}  // namespace wsd

#endif
