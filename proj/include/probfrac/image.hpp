#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace probfrac {

// 8-bit gray-level image, row-major. Width and height are at least 2.
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);
    // Filled with a constant value.
    GrayImage(int width, int height, std::uint8_t value);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }

    // (x, y) = (column, row).
    std::uint8_t at(int x, int y) const noexcept {
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }
    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::span<const std::uint8_t> row(int y) const noexcept {
        return std::span(pixels_).subspan(static_cast<std::size_t>(y) * width_, width_);
    }

    std::uint8_t min_value() const noexcept;
    std::uint8_t max_value() const noexcept;

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

// BT.601 luma with round-half-up, in exact integer arithmetic.
inline std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept {
    return static_cast<std::uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
}

// 16-bit sample to 8-bit.
inline std::uint8_t reduce16(std::uint16_t v) noexcept {
    return static_cast<std::uint8_t>(v / 257u);
}

// Reads binary PGM (P5, maxval 255 or 65535) or PNG (gray/RGB, with or
// without alpha, 8 or 16 bit; palettes and low bit depths expanded).
// Throws LoadError naming the path on any failure.
GrayImage load_image(const std::filesystem::path& path);

GrayImage decode_pgm(std::span<const std::uint8_t> bytes, const std::string& name = "<memory>");
GrayImage decode_png(std::span<const std::uint8_t> bytes, const std::string& name = "<memory>");

std::vector<std::uint8_t> encode_pgm(const GrayImage& img);
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

}  // namespace probfrac
