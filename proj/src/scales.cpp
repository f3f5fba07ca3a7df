#include "probfrac/scales.hpp"

#include "probfrac/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace probfrac {

ScaleSet::ScaleSet(std::vector<int> deltas) : deltas_(std::move(deltas)) {
    if (deltas_.size() < 3) {
        throw ScaleError("scale set needs at least 3 cell sizes, got " +
                         std::to_string(deltas_.size()));
    }
    for (std::size_t i = 0; i < deltas_.size(); ++i) {
        if (deltas_[i] < 2) {
            throw ScaleError("cell size " + std::to_string(deltas_[i]) + " is below 2");
        }
        if (i > 0 && deltas_[i] <= deltas_[i - 1]) {
            throw ScaleError("cell sizes must be strictly increasing");
        }
    }
}

ScaleSet ScaleSet::range(int first, int last) {
    std::vector<int> d;
    for (int v = first; v <= last; ++v) d.push_back(v);
    return ScaleSet(std::move(d));
}

int ScaleSet::max_delta_for(int width, int height) noexcept {
    return std::min(width, height) / 2;
}

ScaleSet ScaleSet::default_for(int width, int height, int count) {
    const int last = std::min(2 + count - 1, max_delta_for(width, height));
    if (last < 4) {
        throw ScaleError("image " + std::to_string(width) + "x" + std::to_string(height) +
                         " is too small for a 3-point scale ladder (needs at least 8x8)");
    }
    return range(2, last);
}

void ScaleSet::check_fits(int width, int height) const {
    const int limit = max_delta_for(width, height);
    if (deltas_.back() > limit) {
        throw ScaleError("cell size " + std::to_string(deltas_.back()) + " exceeds " +
                         std::to_string(limit) + " for a " + std::to_string(width) + "x" +
                         std::to_string(height) + " image");
    }
}

namespace {

int parse_int(const std::string& s, const std::string& spec) {
    int v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) {
        throw ConfigError("bad scale specification '" + spec + "'");
    }
    return v;
}

}  // namespace

ScalePolicy ScalePolicy::parse(const std::string& spec) {
    ScalePolicy p;
    if (spec.empty() || spec == "auto") return p;
    if (const auto dots = spec.find(".."); dots != std::string::npos) {
        const int first = parse_int(spec.substr(0, dots), spec);
        const std::string upper = spec.substr(dots + 2);
        if (upper == "max" || upper == "N") {
            p.kind_ = Kind::open_range;
            p.first_ = first;
            if (first < 2) throw ScaleError("cell size " + std::to_string(first) + " is below 2");
            return p;
        }
        return explicit_set(ScaleSet::range(first, parse_int(upper, spec)));
    }
    std::vector<int> deltas;
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ',');) deltas.push_back(parse_int(tok, spec));
    return explicit_set(ScaleSet(std::move(deltas)));
}

ScalePolicy ScalePolicy::explicit_set(ScaleSet set) {
    ScalePolicy p;
    p.kind_ = Kind::list;
    p.deltas_ = set.deltas();
    return p;
}

ScaleSet ScalePolicy::resolve(int width, int height) const {
    switch (kind_) {
        case Kind::list: {
            ScaleSet s(deltas_);
            s.check_fits(width, height);
            return s;
        }
        case Kind::open_range: {
            const int last = ScaleSet::max_delta_for(width, height);
            if (last < first_ + 2) {
                throw ScaleError("image " + std::to_string(width) + "x" + std::to_string(height) +
                                 " admits fewer than 3 cell sizes from " + std::to_string(first_));
            }
            return ScaleSet::range(first_, last);
        }
        case Kind::automatic:
        default:
            return ScaleSet::default_for(width, height);
    }
}

std::string ScalePolicy::to_string() const {
    switch (kind_) {
        case Kind::list: {
            std::string out;
            for (std::size_t i = 0; i < deltas_.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(deltas_[i]);
            }
            return out;
        }
        case Kind::open_range:
            return std::to_string(first_) + "..max";
        case Kind::automatic:
        default:
            return "auto";
    }
}

}  // namespace probfrac
