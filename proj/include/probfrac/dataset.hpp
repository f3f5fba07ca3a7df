#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace probfrac {

struct Sample {
    std::filesystem::path path;
    int label = 0;
};

// Directory-per-class texture dataset. Classes are sorted by name and
// samples by (class, filename), so the manifest does not depend on the
// order in which the filesystem enumerates entries.
struct DatasetManifest {
    std::filesystem::path root;
    std::vector<std::string> classes;
    std::vector<Sample> samples;

    std::vector<int> labels() const;
    std::size_t class_size(int label) const;
};

// Files with a .pgm or .png extension (case-insensitive) count as images.
bool is_image_file(const std::filesystem::path& path);

// Throws LoadError when root is not a readable directory and ManifestError
// when fewer than two class directories exist or a class holds fewer than
// min_per_class images.
DatasetManifest scan_dataset(const std::filesystem::path& root, std::size_t min_per_class = 5);

// "path,class" rows with a header.
std::string manifest_csv(const DatasetManifest& manifest);

}  // namespace probfrac
