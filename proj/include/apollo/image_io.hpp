#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace apollo {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Row-major 8-bit RGB raster.
class Image {
public:
    Image(int width, int height, Rgb fill = {});

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    Rgb at(int x, int y) const;
    void set(int x, int y, Rgb c);
    const std::vector<std::uint8_t>& bytes() const noexcept { return data_; }
    std::vector<std::uint8_t>& bytes() noexcept { return data_; }

    friend bool operator==(const Image&, const Image&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> data_;
};

/// P6 with maxval 255.
std::string encode_ppm(const Image& img);
Image decode_ppm(const std::string& bytes);
void write_ppm(const Image& img, const std::filesystem::path& path);
Image read_ppm(const std::filesystem::path& path);
void write_png(const Image& img, const std::filesystem::path& path);

using CsvRow = std::vector<std::string>;
/// Header row first; fields containing ',' or '"' are quoted.
void write_csv(const CsvRow& header, const std::vector<CsvRow>& rows, const std::filesystem::path& path);
std::string encode_csv(const CsvRow& header, const std::vector<CsvRow>& rows);

}  // namespace apollo
