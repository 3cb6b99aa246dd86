#include "apollo/image_io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

#include <png.h>

#include "apollo/errors.hpp"

namespace apollo {

Image::Image(int width, int height, Rgb fill) : width_(width), height_(height) {
    if (width < 1 || height < 1) throw UsageError("image dimensions must be positive");
    data_.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < data_.size(); i += 3) {
        data_[i] = fill.r;
        data_[i + 1] = fill.g;
        data_[i + 2] = fill.b;
    }
}

Rgb Image::at(int x, int y) const {
    const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
    return {data_.at(i), data_.at(i + 1), data_.at(i + 2)};
}

void Image::set(int x, int y, Rgb c) {
    const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
    data_[i] = c.r;
    data_[i + 1] = c.g;
    data_[i + 2] = c.b;
}

std::string encode_ppm(const Image& img) {
    std::string out = "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.bytes().data()), img.bytes().size());
    return out;
}

Image decode_ppm(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    in >> magic >> w >> h >> maxval;
    if (!in || magic != "P6" || maxval != 255 || w < 1 || h < 1) throw ParseError("not a P6 PPM with maxval 255");
    in.get();  // single whitespace after the header
    Image img(w, h);
    const auto offset = static_cast<std::size_t>(in.tellg());
    if (bytes.size() < offset + img.bytes().size()) throw ParseError("truncated PPM");
    std::memcpy(img.bytes().data(), bytes.data() + offset, img.bytes().size());
    return img;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path.string(), "cannot open for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace

void write_ppm(const Image& img, const std::filesystem::path& path) { write_file(path, encode_ppm(img)); }

Image read_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return decode_ppm(ss.str());
    } catch (const ParseError& e) {
        throw IoError(path.string(), e.what());
    }
}

void write_png(const Image& img, const std::filesystem::path& path) {
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width());
    image.height = static_cast<png_uint_32>(img.height());
    image.format = PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&image, path.c_str(), 0, img.bytes().data(), 0, nullptr)) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw IoError(path.string(), "PNG encoding failed: " + msg);
    }
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void append_row(std::string& out, const CsvRow& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_field(row[i]);
    }
    out += '\n';
}

}  // namespace

std::string encode_csv(const CsvRow& header, const std::vector<CsvRow>& rows) {
    std::string out;
    append_row(out, header);
    for (const auto& r : rows) append_row(out, r);
    return out;
}

void write_csv(const CsvRow& header, const std::vector<CsvRow>& rows, const std::filesystem::path& path) {
    write_file(path, encode_csv(header, rows));
}

}  // namespace apollo
