#include "oracles.hpp"

#include <png.h>

#include <atomic>
#include <csetjmp>
#include <cstdio>
#include <unistd.h>

namespace oracle {

namespace {

bool write_rows(png_structp png, png_infop info, FILE* fp, int w, int h, int channels, int bit_depth,
                png_bytepp rows) {
    if (setjmp(png_jmpbuf(png))) return false;
    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(w), static_cast<png_uint_32>(h), bit_depth,
                 channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows);
    png_write_end(png, nullptr);
    return true;
}

}  // namespace

bool write_png(const std::filesystem::path& path, int w, int h, int channels, int bit_depth,
               const std::vector<std::uint16_t>& samples) {
    const std::size_t bytes_per_sample = bit_depth == 16 ? 2 : 1;
    const std::size_t stride = static_cast<std::size_t>(w) * channels * bytes_per_sample;
    std::vector<png_byte> raster(stride * h);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (bytes_per_sample == 2) {
            raster[2 * i] = static_cast<png_byte>(samples[i] >> 8);
            raster[2 * i + 1] = static_cast<png_byte>(samples[i] & 0xff);
        } else {
            raster[i] = static_cast<png_byte>(samples[i]);
        }
    }
    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y) rows[y] = raster.data() + y * stride;

    FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) return false;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    const bool ok = png && info && write_rows(png, info, fp, w, h, channels, bit_depth, rows.data());
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    return ok;
}

TempDir::TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("probfrac_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

}  // namespace oracle
