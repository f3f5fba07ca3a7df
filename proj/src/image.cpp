#include "probfrac/image.hpp"

#include "probfrac/error.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>

namespace probfrac {

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width < 2 || height < 2) {
        throw ConfigError("image too small: " + std::to_string(width) + "x" +
                          std::to_string(height) + " (minimum 2x2)");
    }
    if (pixels_.size() != static_cast<std::size_t>(width) * height) {
        throw ConfigError("pixel count " + std::to_string(pixels_.size()) +
                          " does not match " + std::to_string(width) + "x" +
                          std::to_string(height));
    }
}

GrayImage::GrayImage(int width, int height, std::uint8_t value)
    : GrayImage(width, height,
                std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(width, 0)) *
                                              std::max(height, 0),
                                          value)) {}

std::uint8_t GrayImage::min_value() const noexcept {
    return pixels_.empty() ? 0 : *std::min_element(pixels_.begin(), pixels_.end());
}

std::uint8_t GrayImage::max_value() const noexcept {
    return pixels_.empty() ? 0 : *std::max_element(pixels_.begin(), pixels_.end());
}

namespace {

[[noreturn]] void fail(const std::string& name, const std::string& cause) {
    throw LoadError(name + ": " + cause);
}

void check_size(const std::string& name, long long w, long long h) {
    if (w < 2 || h < 2) {
        fail(name, "image too small (" + std::to_string(w) + "x" + std::to_string(h) +
                       ", minimum 2x2)");
    }
    if (w > (1 << 16) || h > (1 << 16)) {
        fail(name, "image too large (" + std::to_string(w) + "x" + std::to_string(h) + ")");
    }
}

// Netpbm header tokenizer: skips whitespace and '#' comments.
class PnmHeader {
public:
    PnmHeader(std::span<const std::uint8_t> bytes, const std::string& name)
        : bytes_(bytes), name_(name) {}

    long long next_int() {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
            fail(name_, "malformed PGM header");
        }
        long long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_++] - '0');
            if (v > (1LL << 31)) fail(name_, "malformed PGM header");
        }
        return v;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t raster_offset() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            fail(name_, "malformed PGM header");
        }
        return pos_ + 1;
    }

    void skip(std::size_t n) { pos_ += n; }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    const std::string& name_;
    std::size_t pos_ = 0;
};

bool is_png(std::span<const std::uint8_t> bytes) {
    return bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0;
}

bool is_pgm(std::span<const std::uint8_t> bytes) {
    return bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5';
}

// libpng reports errors through longjmp; the two guarded functions below
// keep only trivially destructible locals so the jump is well defined.
struct PngSource {
    const std::uint8_t* data = nullptr;
    std::size_t size = 0;
    std::size_t pos = 0;
    char message[256] = {};
};

void png_read_callback(png_structp png, png_bytep out, png_size_t n) {
    auto* src = static_cast<PngSource*>(png_get_io_ptr(png));
    if (src->pos + n > src->size) {
        png_error(png, "truncated PNG data");
    }
    std::memcpy(out, src->data + src->pos, n);
    src->pos += n;
}

void png_error_callback(png_structp png, png_const_charp msg) {
    auto* src = static_cast<PngSource*>(png_get_error_ptr(png));
    std::strncpy(src->message, msg, sizeof(src->message) - 1);
    png_longjmp(png, 1);
}

void png_warning_callback(png_structp, png_const_charp) {}

struct PngLayout {
    png_uint_32 width = 0;
    png_uint_32 height = 0;
    int channels = 0;
    int bit_depth = 0;
    std::size_t row_bytes = 0;
};

bool png_read_layout(png_structp png, png_infop info, PngLayout* layout) {
    if (setjmp(png_jmpbuf(png))) return false;
    png_read_info(png, info);
    png_set_expand(png);
    png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);
    layout->width = png_get_image_width(png, info);
    layout->height = png_get_image_height(png, info);
    layout->channels = png_get_channels(png, info);
    layout->bit_depth = png_get_bit_depth(png, info);
    layout->row_bytes = png_get_rowbytes(png, info);
    return true;
}

bool png_read_rows(png_structp png, png_infop info, png_bytepp rows) {
    if (setjmp(png_jmpbuf(png))) return false;
    png_read_image(png, rows);
    png_read_end(png, info);
    return true;
}

struct PngReadGuard {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReadGuard() { png_destroy_read_struct(&png, info ? &info : nullptr, nullptr); }
};

}  // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes, const std::string& name) {
    if (!is_pgm(bytes)) fail(name, "unsupported format (expected binary PGM P5)");
    PnmHeader header(bytes, name);
    header.skip(2);
    const long long w = header.next_int();
    const long long h = header.next_int();
    const long long maxval = header.next_int();
    const std::size_t offset = header.raster_offset();
    check_size(name, w, h);
    if (maxval != 255 && maxval != 65535) {
        fail(name, "unsupported PGM maxval " + std::to_string(maxval) + " (expected 255 or 65535)");
    }
    const std::size_t count = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    const std::size_t sample_bytes = maxval == 255 ? 1 : 2;
    if (bytes.size() < offset + count * sample_bytes) fail(name, "truncated PGM raster");

    std::vector<std::uint8_t> pixels(count);
    const std::uint8_t* raster = bytes.data() + offset;
    if (sample_bytes == 1) {
        std::copy_n(raster, count, pixels.begin());
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const auto v = static_cast<std::uint16_t>((raster[2 * i] << 8) | raster[2 * i + 1]);
            pixels[i] = reduce16(v);
        }
    }
    return GrayImage(static_cast<int>(w), static_cast<int>(h), std::move(pixels));
}

GrayImage decode_png(std::span<const std::uint8_t> bytes, const std::string& name) {
    if (!is_png(bytes)) fail(name, "unsupported format (expected PNG)");

    PngSource src;
    src.data = bytes.data();
    src.size = bytes.size();
    PngReadGuard guard;
    guard.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &src, png_error_callback,
                                       png_warning_callback);
    if (!guard.png) fail(name, "cannot initialize PNG decoder");
    guard.info = png_create_info_struct(guard.png);
    if (!guard.info) fail(name, "cannot initialize PNG decoder");
    png_set_read_fn(guard.png, &src, png_read_callback);

    PngLayout layout;
    if (!png_read_layout(guard.png, guard.info, &layout)) {
        fail(name, std::string("corrupt PNG: ") + src.message);
    }
    check_size(name, layout.width, layout.height);
    if (layout.channels != 1 && layout.channels != 3) {
        fail(name, "unsupported PNG channel count " + std::to_string(layout.channels));
    }
    if (layout.bit_depth != 8 && layout.bit_depth != 16) {
        fail(name, "unsupported PNG bit depth " + std::to_string(layout.bit_depth));
    }

    std::vector<png_byte> raster(layout.row_bytes * layout.height);
    std::vector<png_bytep> rows(layout.height);
    for (png_uint_32 y = 0; y < layout.height; ++y) rows[y] = raster.data() + y * layout.row_bytes;
    if (!png_read_rows(guard.png, guard.info, rows.data())) {
        fail(name, std::string("corrupt PNG: ") + src.message);
    }

    const std::size_t w = layout.width;
    const std::size_t h = layout.height;
    const bool wide = layout.bit_depth == 16;
    auto sample = [&](const png_byte* row, std::size_t idx) -> std::uint8_t {
        if (!wide) return row[idx];
        return reduce16(static_cast<std::uint16_t>((row[2 * idx] << 8) | row[2 * idx + 1]));
    };

    std::vector<std::uint8_t> pixels(w * h);
    for (std::size_t y = 0; y < h; ++y) {
        const png_byte* row = rows[y];
        for (std::size_t x = 0; x < w; ++x) {
            if (layout.channels == 1) {
                pixels[y * w + x] = sample(row, x);
            } else {
                pixels[y * w + x] =
                    luminance(sample(row, 3 * x), sample(row, 3 * x + 1), sample(row, 3 * x + 2));
            }
        }
    }
    return GrayImage(static_cast<int>(w), static_cast<int>(h), std::move(pixels));
}

GrayImage load_image(const std::filesystem::path& path) {
    const std::string name = path.string();
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(name, "cannot open file");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) fail(name, "read error");
    if (is_pgm(bytes)) return decode_pgm(bytes, name);
    if (is_png(bytes)) return decode_png(bytes, name);
    fail(name, "unsupported format (expected binary PGM P5 or PNG)");
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
    const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                               std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
    const auto bytes = encode_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw LoadError(path.string() + ": cannot open for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw LoadError(path.string() + ": write error");
}

}  // namespace probfrac
