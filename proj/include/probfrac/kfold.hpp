#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace probfrac {

// Stratified fold assignment: fold index in [0, k) per sample.
//
// Each class's sample indices are shuffled with Xoshiro256(seed, class) and
// dealt round-robin over the folds, starting at (samples dealt so far) mod k
// so that remainders spread across folds. Per-class and overall fold sizes
// therefore differ by at most one.
//
// Throws ManifestError if k < 2 or a class present in labels has fewer than
// k samples. class_names, when given, are used in the message.
std::vector<int> kfold_split(std::span<const int> labels, int k, std::uint64_t seed,
                             std::span<const std::string> class_names = {});

// Indices whose fold differs from (train) or equals (test) the given fold.
std::vector<std::size_t> train_indices(std::span<const int> folds, int fold);
std::vector<std::size_t> test_indices(std::span<const int> folds, int fold);

}  // namespace probfrac
