#include "wsd/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wsd/kernels.hpp"

namespace wsd {

bool VectorSet::add(WordVector member) {
    if (members_.empty()) {
        if (member.components.empty()) {
            throw std::invalid_argument("VectorSet members must have dimension >= 1");
        }
        dimension_ = member.components.size();
    } else if (member.components.size() != dimension_) {
        throw std::invalid_argument("VectorSet dimension mismatch for label: " + member.label);
    }
    if (contains(MemberRef{member.label, member.origin})) {
        return false;
    }
    members_.push_back(std::move(member));
    return true;
}

bool VectorSet::contains(const MemberRef& ref) const {
    return std::any_of(members_.begin(), members_.end(), [&](const WordVector& m) {
        return m.label == ref.label && m.origin == ref.origin;
    });
}

namespace {

void require_comparable(const VectorSet& v1, const VectorSet& v2) {
    if (v1.empty() || v2.empty()) {
        throw std::invalid_argument("proximity requires nonempty sets");
    }
    if (v1.dimension() != v2.dimension()) {
        throw std::invalid_argument("proximity requires equal dimensions");
    }
}

MemberSet union_refs(const VectorSet& v1, const VectorSet& v2) {
    MemberSet out;
    for (const auto& m : v1.members()) out.insert(MemberRef{m.label, m.origin});
    for (const auto& m : v2.members()) out.insert(MemberRef{m.label, m.origin});
    return out;
}

std::vector<double> mean_vector(const VectorSet& v) {
    std::vector<double> mean(v.dimension(), 0.0);
    for (const auto& m : v.members()) {
        for (std::size_t i = 0; i < mean.size(); ++i) {
            mean[i] += m.components[i];
        }
    }
    const double n = static_cast<double>(v.size());
    for (double& c : mean) {
        c /= n;
    }
    return mean;
}

}  // namespace

MemberSet near_set(const VectorSet& v1, const VectorSet& v2, double epsilon, Comparator cmp) {
    require_comparable(v1, v2);
    MemberSet near;
    for (const auto& u : v1.members()) {
        for (const auto& v : v2.members()) {
            if (passes(kernels::cosine_similarity(u.components, v.components), epsilon, cmp)) {
                near.insert(MemberRef{u.label, u.origin});
                near.insert(MemberRef{v.label, v.origin});
            }
        }
    }
    return near;
}

MemberSet distant_set(const VectorSet& v1, const VectorSet& v2, double epsilon, Comparator cmp) {
    const MemberSet near = near_set(v1, v2, epsilon, cmp);
    MemberSet distant;
    for (const auto& ref : union_refs(v1, v2)) {
        if (!near.contains(ref)) {
            distant.insert(ref);
        }
    }
    return distant;
}

double k_proximity(const VectorSet& v1, const VectorSet& v2, double epsilon, Comparator cmp) {
    const MemberSet near = near_set(v1, v2, epsilon, cmp);
    const MemberSet all = union_refs(v1, v2);
    return static_cast<double>(near.size()) / static_cast<double>(all.size());
}

double k_tilde_proximity(const VectorSet& v1, const VectorSet& v2, double epsilon,
                         Comparator cmp) {
    const MemberSet near = near_set(v1, v2, epsilon, cmp);
    const MemberSet all = union_refs(v1, v2);
    const std::size_t distant = all.size() - near.size();
    return static_cast<double>(near.size()) / static_cast<double>(1 + distant);
}

ProximityResult compute_proximity(const VectorSet& v1, const VectorSet& v2, double epsilon,
                                  Comparator cmp) {
    ProximityResult result;
    result.epsilon = epsilon;
    result.near = near_set(v1, v2, epsilon, cmp);
    for (const auto& ref : union_refs(v1, v2)) {
        if (!result.near.contains(ref)) {
            result.distant.insert(ref);
        }
    }
    const std::size_t total = result.near.size() + result.distant.size();
    result.k_value = static_cast<double>(result.near.size()) / static_cast<double>(total);
    result.k_tilde_value =
        static_cast<double>(result.near.size()) / static_cast<double>(1 + result.distant.size());
    return result;
}

double average_similarity(const VectorSet& v1, const VectorSet& v2) {
    require_comparable(v1, v2);
    const std::vector<double> m1 = mean_vector(v1);
    const std::vector<double> m2 = mean_vector(v2);
    return kernels::cosine_similarity(m1, m2);
}

double euclidean_hausdorff(const std::vector<std::vector<double>>& a,
                           const std::vector<std::vector<double>>& b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("euclidean_hausdorff requires nonempty sets");
    }
    const std::size_t dim = a.front().size();
    for (const auto& p : a) {
        if (p.size() != dim) throw std::invalid_argument("euclidean_hausdorff: ragged point set");
    }
    for (const auto& p : b) {
        if (p.size() != dim) throw std::invalid_argument("euclidean_hausdorff: dimension mismatch");
    }

    const auto directed = [dim](const std::vector<std::vector<double>>& from,
                                const std::vector<std::vector<double>>& to) {
        double worst = 0.0;
        for (const auto& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : to) {
                double d2 = 0.0;
                for (std::size_t i = 0; i < dim; ++i) {
                    const double delta = p[i] - q[i];
                    d2 += delta * delta;
                }
                best = std::min(best, d2);
            }
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };

    return std::max(directed(a, b), directed(b, a));
}

}  // namespace wsd
