#include "probfrac/dataset.hpp"

#include "probfrac/csv.hpp"
#include "probfrac/error.hpp"

#include <algorithm>
#include <cctype>
#include <system_error>

namespace fs = std::filesystem;

namespace probfrac {

std::vector<int> DatasetManifest::labels() const {
    std::vector<int> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.label);
    return out;
}

std::size_t DatasetManifest::class_size(int label) const {
    return static_cast<std::size_t>(std::count_if(
        samples.begin(), samples.end(), [label](const Sample& s) { return s.label == label; }));
}

bool is_image_file(const fs::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".pgm" || ext == ".png";
}

DatasetManifest scan_dataset(const fs::path& root, std::size_t min_per_class) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw LoadError(root.string() + ": not a directory");
    }

    std::vector<fs::path> class_dirs;
    for (fs::directory_iterator it(root, ec), end; !ec && it != end; it.increment(ec)) {
        if (it->is_directory(ec)) class_dirs.push_back(it->path());
    }
    if (ec) throw LoadError(root.string() + ": " + ec.message());
    if (class_dirs.empty()) {
        throw ManifestError(root.string() + ": no class directories");
    }
    if (class_dirs.size() < 2) {
        throw ManifestError(root.string() + ": at least 2 classes required, found 1");
    }
    std::sort(class_dirs.begin(), class_dirs.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    DatasetManifest manifest;
    manifest.root = root;
    for (std::size_t c = 0; c < class_dirs.size(); ++c) {
        std::vector<fs::path> files;
        for (fs::directory_iterator it(class_dirs[c], ec), end; !ec && it != end;
             it.increment(ec)) {
            if (it->is_regular_file(ec) && is_image_file(it->path())) files.push_back(it->path());
        }
        if (ec) throw LoadError(class_dirs[c].string() + ": " + ec.message());
        const std::string name = class_dirs[c].filename().string();
        if (files.size() < min_per_class) {
            throw ManifestError("class '" + name + "' has " + std::to_string(files.size()) +
                                " images, at least " + std::to_string(min_per_class) +
                                " required");
        }
        std::sort(files.begin(), files.end(),
                  [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
        manifest.classes.push_back(name);
        for (auto& f : files) manifest.samples.push_back({std::move(f), static_cast<int>(c)});
    }
    return manifest;
}

std::string manifest_csv(const DatasetManifest& manifest) {
    std::string out = "path,class\n";
    for (const auto& s : manifest.samples) {
        out += csv_field(s.path.generic_string());
        out += ',';
        out += csv_field(manifest.classes[s.label]);
        out += '\n';
    }
    return out;
}

}  // namespace probfrac
