#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "shx/errors.hpp"

namespace shx::detail {

/// Symmetrized product of the multiset {groups[g].first, multiplicity
/// groups[g].second}. Every distinct arrangement of the multiset occurs the
/// same number of times (prod n_g!) in the full N!-term symmetrization, so
/// averaging the ordered products over the N!/prod(n_g!) distinct words
/// reproduces the N!-average exactly. Requires N >= 1.
template <class T>
T symmetrized_multiset_product(const std::vector<std::pair<T, int>>& groups) {
    std::vector<int> word;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].second < 0) throw DegreeError("negative multiplicity");
        word.insert(word.end(), static_cast<std::size_t>(groups[g].second), static_cast<int>(g));
    }
    if (word.empty()) throw DegreeError("symmetrized product of an empty multiset");

    long long count = 0;
    std::optional<T> acc;
    do {
        T prod = groups[static_cast<std::size_t>(word[0])].first;
        for (std::size_t k = 1; k < word.size(); ++k)
            prod = prod * groups[static_cast<std::size_t>(word[k])].first;
        acc = acc ? (*acc + prod) : prod;
        ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return (1.0 / static_cast<double>(count)) * (*acc);
}

}  // namespace shx::detail
