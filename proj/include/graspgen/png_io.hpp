// SPDX-FileCopyrightText: Copyright (c) 2026 graspgen contributors
// SPDX-License-Identifier: Apache-2.0
//
// PNG input/output backed by libpng. Three fixed encodings:
//   RGB passes          8-bit/channel RGB
//   depth passes        16-bit grayscale, big-endian, millimeters
//   segmentation maps   8-bit grayscale, raw label values
// Settings are pinned so identical pixels produce identical files.

#ifndef GRASPGEN_PNG_IO_HPP
#define GRASPGEN_PNG_IO_HPP

#include <png.h>

#include <cstdio>
#include <filesystem>
#include <memory>

#include "graspgen/image.hpp"

namespace graspgen {

namespace detail {

struct file_closer {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using unique_file = std::unique_ptr<std::FILE, file_closer>;

inline unique_file open_file(const std::filesystem::path& path,
                             const char* mode) {
  unique_file file(std::fopen(path.string().c_str(), mode));
  if (!file) {
    throw error(mode[0] == 'r' ? errc::missing_file : errc::io_failure,
                std::string("cannot open ") + path.string());
  }
  return file;
}

class png_writer {
 public:
  explicit png_writer(const std::filesystem::path& path)
      : path_(path), file_(open_file(path, "wb")) {
    png_ = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                   nullptr);
    info_ = png_ ? png_create_info_struct(png_) : nullptr;
    if (!png_ || !info_)
      throw error(errc::io_failure, "libpng writer init failed");
    png_init_io(png_, file_.get());
    png_set_compression_level(png_, 6);  // pinned: byte-stable output
    png_set_filter(png_, 0, PNG_FILTER_NONE);
  }
  ~png_writer() { png_destroy_write_struct(&png_, &info_); }
  png_writer(const png_writer&) = delete;
  png_writer& operator=(const png_writer&) = delete;

  void write(int width, int height, int bit_depth, int color_type,
             const std::vector<png_bytep>& rows) {
    if (setjmp(png_jmpbuf(png_)))
      throw error(errc::io_failure, "png write failed: " + path_.string());
    png_set_IHDR(png_, info_, png_uint_32(width), png_uint_32(height),
                 bit_depth, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png_, info_);
    png_write_image(png_, const_cast<png_bytepp>(rows.data()));
    png_write_end(png_, nullptr);
  }

 private:
  std::filesystem::path path_;
  unique_file file_;
  png_structp png_ = nullptr;
  png_infop info_ = nullptr;
};

class png_reader {
 public:
  explicit png_reader(const std::filesystem::path& path)
      : path_(path), file_(open_file(path, "rb")) {
    png_ = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                  nullptr);
    info_ = png_ ? png_create_info_struct(png_) : nullptr;
    if (!png_ || !info_)
      throw error(errc::io_failure, "libpng reader init failed");
  }
  ~png_reader() { png_destroy_read_struct(&png_, &info_, nullptr); }
  png_reader(const png_reader&) = delete;
  png_reader& operator=(const png_reader&) = delete;

  // Reads the whole image; expected_color/bit select the required layout.
  void read(int expected_color, int expected_bit, int& width, int& height,
            std::vector<std::vector<png_byte>>& rows) {
    if (setjmp(png_jmpbuf(png_)))
      throw error(errc::parse_failure, "png read failed: " + path_.string());
    png_init_io(png_, file_.get());
    png_read_info(png_, info_);
    width = int(png_get_image_width(png_, info_));
    height = int(png_get_image_height(png_, info_));
    int color = png_get_color_type(png_, info_);
    int bit = png_get_bit_depth(png_, info_);
    if (color != expected_color || bit != expected_bit)
      throw error(errc::parse_failure,
                  path_.string() + ": unexpected png layout (color " +
                      std::to_string(color) + ", bit depth " +
                      std::to_string(bit) + ")");
    size_t row_bytes = png_get_rowbytes(png_, info_);
    rows.assign(size_t(height), std::vector<png_byte>(row_bytes));
    std::vector<png_bytep> row_ptrs(size_t(height));
    for (int y = 0; y < height; y++) row_ptrs[size_t(y)] = rows[size_t(y)].data();
    png_read_image(png_, row_ptrs.data());
    png_read_end(png_, nullptr);
  }

 private:
  std::filesystem::path path_;
  unique_file file_;
  png_structp png_ = nullptr;
  png_infop info_ = nullptr;
};

}  // namespace detail

inline void save_png_rgb8(const image_rgb& img,
                          const std::filesystem::path& path) {
  std::vector<std::vector<png_byte>> rows(size_t(img.height));
  std::vector<png_bytep> row_ptrs(size_t(img.height));
  for (int y = 0; y < img.height; y++) {
    auto& row = rows[size_t(y)];
    row.resize(size_t(img.width) * 3);
    for (int x = 0; x < img.width; x++) {
      const rgb& c = img.at(x, y);
      row[size_t(x) * 3 + 0] = quantize8(c.r);
      row[size_t(x) * 3 + 1] = quantize8(c.g);
      row[size_t(x) * 3 + 2] = quantize8(c.b);
    }
    row_ptrs[size_t(y)] = row.data();
  }
  detail::png_writer writer(path);
  writer.write(img.width, img.height, 8, PNG_COLOR_TYPE_RGB, row_ptrs);
}

inline void save_png_depth16(const image_depth& img,
                             const std::filesystem::path& path) {
  std::vector<std::vector<png_byte>> rows(size_t(img.height));
  std::vector<png_bytep> row_ptrs(size_t(img.height));
  for (int y = 0; y < img.height; y++) {
    auto& row = rows[size_t(y)];
    row.resize(size_t(img.width) * 2);
    for (int x = 0; x < img.width; x++) {
      uint16_t mm = quantize_depth_mm(img.at(x, y));
      row[size_t(x) * 2 + 0] = png_byte(mm >> 8);  // network byte order
      row[size_t(x) * 2 + 1] = png_byte(mm & 0xFF);
    }
    row_ptrs[size_t(y)] = row.data();
  }
  detail::png_writer writer(path);
  writer.write(img.width, img.height, 16, PNG_COLOR_TYPE_GRAY, row_ptrs);
}

inline void save_png_labels8(const image_labels& img,
                             const std::filesystem::path& path) {
  std::vector<png_bytep> row_ptrs(size_t(img.height));
  std::vector<std::vector<png_byte>> rows(size_t(img.height));
  for (int y = 0; y < img.height; y++) {
    auto& row = rows[size_t(y)];
    row.resize(size_t(img.width));
    for (int x = 0; x < img.width; x++) row[size_t(x)] = img.at(x, y);
    row_ptrs[size_t(y)] = row.data();
  }
  detail::png_writer writer(path);
  writer.write(img.width, img.height, 8, PNG_COLOR_TYPE_GRAY, row_ptrs);
}

// 8-bit RGB, returned as linear floats in [0,1] (value/255).
inline image_rgb load_png_rgb8(const std::filesystem::path& path) {
  detail::png_reader reader(path);
  int width = 0, height = 0;
  std::vector<std::vector<png_byte>> rows;
  reader.read(PNG_COLOR_TYPE_RGB, 8, width, height, rows);
  image_rgb img(width, height);
  for (int y = 0; y < height; y++) {
    for (int x = 0; x < width; x++) {
      img.at(x, y) = {rows[size_t(y)][size_t(x) * 3 + 0] / 255.0,
                      rows[size_t(y)][size_t(x) * 3 + 1] / 255.0,
                      rows[size_t(y)][size_t(x) * 3 + 2] / 255.0};
    }
  }
  return img;
}

// 16-bit grayscale depth in millimeters, returned as integer mm values.
inline image<uint16_t> load_png_depth16(const std::filesystem::path& path) {
  detail::png_reader reader(path);
  int width = 0, height = 0;
  std::vector<std::vector<png_byte>> rows;
  reader.read(PNG_COLOR_TYPE_GRAY, 16, width, height, rows);
  image<uint16_t> img(width, height);
  for (int y = 0; y < height; y++) {
    for (int x = 0; x < width; x++) {
      img.at(x, y) = uint16_t((rows[size_t(y)][size_t(x) * 2] << 8) |
                              rows[size_t(y)][size_t(x) * 2 + 1]);
    }
  }
  return img;
}

inline image_labels load_png_labels8(const std::filesystem::path& path) {
  detail::png_reader reader(path);
  int width = 0, height = 0;
  std::vector<std::vector<png_byte>> rows;
  reader.read(PNG_COLOR_TYPE_GRAY, 8, width, height, rows);
  image_labels img(width, height);
  for (int y = 0; y < height; y++)
    for (int x = 0; x < width; x++) img.at(x, y) = rows[size_t(y)][size_t(x)];
  return img;
}

}  // namespace graspgen

#endif
