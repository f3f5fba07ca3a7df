#include "probfrac/kfold.hpp"

#include "probfrac/error.hpp"
#include "probfrac/features.hpp"
#include "probfrac/rng.hpp"

namespace probfrac {

std::vector<int> kfold_split(std::span<const int> labels, int k, std::uint64_t seed,
                             std::span<const std::string> class_names) {
    if (k < 2) throw ManifestError("fold count must be at least 2, got " + std::to_string(k));
    const int n_classes = count_classes(labels);
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(n_classes));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) throw ManifestError("negative class label");
        members[static_cast<std::size_t>(labels[i])].push_back(i);
    }

    std::vector<int> folds(labels.size(), -1);
    std::size_t dealt = 0;
    for (int c = 0; c < n_classes; ++c) {
        auto& idx = members[static_cast<std::size_t>(c)];
        if (idx.empty()) continue;
        if (idx.size() < static_cast<std::size_t>(k)) {
            const std::string name = static_cast<std::size_t>(c) < class_names.size()
                                         ? "'" + class_names[static_cast<std::size_t>(c)] + "'"
                                         : std::to_string(c);
            throw ManifestError("class " + name + " has " + std::to_string(idx.size()) +
                                " samples, fewer than k = " + std::to_string(k));
        }
        Xoshiro256 rng(seed, static_cast<std::uint64_t>(c));
        rng.shuffle(std::span(idx));
        for (std::size_t p = 0; p < idx.size(); ++p) {
            folds[idx[p]] = static_cast<int>((dealt + p) % static_cast<std::size_t>(k));
        }
        dealt += idx.size();
    }
    return folds;
}

std::vector<std::size_t> train_indices(std::span<const int> folds, int fold) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < folds.size(); ++i) {
        if (folds[i] != fold) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> test_indices(std::span<const int> folds, int fold) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < folds.size(); ++i) {
        if (folds[i] == fold) out.push_back(i);
    }
    return out;
}

}  // namespace probfrac
