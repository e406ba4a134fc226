#ifndef WSD_PROXIMITY_HPP
#define WSD_PROXIMITY_HPP

#include <set>
#include <string>
#include <vector>

#include "wsd/embeddings.hpp"

namespace wsd {

// Whether a pair counts as "near" at sim > eps (strict) or sim >= eps
// (inclusive). The sense-selection algorithms use strict.
enum class Comparator { strict, inclusive };

inline bool passes(double sim, double epsilon, Comparator cmp) noexcept {
    return cmp == Comparator::strict ? sim > epsilon : sim >= epsilon;
}

// Identity of a set member; cardinалities and set algebra are computed over
// these pairs, never over vector values.
struct MemberRef {
    std::string label;
    Origin origin;

    auto operator<=>(const MemberRef&) const = default;
};

using MemberSet = std::set<MemberRef>;

// Finite labeled set of word vectors. Members are unique by (label, origin)
// and share one dimension.
class VectorSet {
public:
    VectorSet() = default;

    // Returns false (and leaves the set unchanged) when an equal
    // (label, origin) member is already present. Throws on dimension mismatch.
    bool add(WordVector member);

    bool empty() const noexcept { return members_.empty(); }
    std::size_t size() const noexcept { return members_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<WordVector>& members() const noexcept { return members_; }
    bool contains(const MemberRef& ref) const;

private:
    std::vector<WordVector> members_;
    std::size_t dimension_ = 0;
};

struct ProximityResult {
    double epsilon = 0.0;
    MemberSet near;
    MemberSet distant;
    double k_value = 0.0;        // |C| / |V1 u V2|
    double k_tilde_value = 0.0;  // |C| / (1 + |D|)
};

// Elements of either set that have a cross-set partner with similarity
// beyond eps. Both inputs must be nonempty and share a dimension.
MemberSet near_set(const VectorSet& v1, const VectorSet& v2, double epsilon,
                   Comparator cmp = Comparator::strict);

// Complement of near_set within the (label, origin) union of the two sets.
MemberSet distant_set(const VectorSet& v1, const VectorSet& v2, double epsilon,
                      Comparator cmp = Comparator::strict);

double k_proximity(const VectorSet& v1, const VectorSet& v2, double epsilon,
                   Comparator cmp = Comparator::strict);

double k_tilde_proximity(const VectorSet& v1, const VectorSet& v2, double epsilon,
                         Comparator cmp = Comparator::strict);

ProximityResult compute_proximity(const VectorSet& v1, const VectorSet& v2, double epsilon,
                                  Comparator cmp = Comparator::strict);

// Cosine of the two arithmetic-mean vectors; a zero mean yields the
// sentinel -1. Both sets must be nonempty.
double average_similarity(const VectorSet& v1, const VectorSet& v2);

// Hausdorff distance between finite point sets under the Euclidean metric:
// max(max_a min_b |a-b|, max_b min_a |a-b|), which equals the smallest eps
// whose dilatation covers both sets.
double euclidean_hausdorff(const std::vector<std::vector<double>>& a,
                           const std::vector<std::vector<double>>& b);

}  // namespace wsd

#endif
