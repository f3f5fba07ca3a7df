#pragma once

#include <string>
#include <vector>

namespace probfrac {

// Strictly increasing cell sizes, each >= 2, at least three of them.
class ScaleSet {
public:
    explicit ScaleSet(std::vector<int> deltas);

    // first, first+1, ..., last.
    static ScaleSet range(int first, int last);

    // 2, 3, ..., min(2 + count - 1, floor(min(width, height) / 2)).
    static ScaleSet default_for(int width, int height, int count = kDefaultCount);

    static constexpr int kDefaultCount = 10;

    // Largest admissible delta for an image: floor(min(width, height) / 2).
    static int max_delta_for(int width, int height) noexcept;

    // Throws ScaleError if a delta exceeds max_delta_for(width, height).
    void check_fits(int width, int height) const;

    const std::vector<int>& deltas() const noexcept { return deltas_; }
    std::size_t size() const noexcept { return deltas_.size(); }

    friend bool operator==(const ScaleSet&, const ScaleSet&) = default;

private:
    std::vector<int> deltas_;
};

// How a run picks its ladder: the default ladder for each image, an
// explicit list, or a range whose upper end may be the per-image maximum.
class ScalePolicy {
public:
    ScalePolicy() = default;

    // Accepts "auto", "A..B", "A..max" or a comma list "2,3,5".
    static ScalePolicy parse(const std::string& spec);
    static ScalePolicy explicit_set(ScaleSet set);

    ScaleSet resolve(int width, int height) const;
    std::string to_string() const;

private:
    enum class Kind { automatic, list, open_range };
    Kind kind_ = Kind::automatic;
    std::vector<int> deltas_;
    int first_ = 2;
};

}  // namespace probfrac
