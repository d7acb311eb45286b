/* Copyright 2026 The NBLGC Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

	http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
--------------------------------------------------------------------------------------------------------------*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nblgc {

// Gray levels exactly as stored in a PGM file.
struct RawImage {
	std::size_t width = 0;
	std::size_t height = 0;
	std::uint32_t maxGray = 0;
	std::vector<std::uint32_t> pixels; // row-major, width * height

	bool operator==( const RawImage& ) const = default;
};

// Unit-normalized raster, every value in [0, 1].
struct GrayImage {
	std::size_t width = 0;
	std::size_t height = 0;
	std::vector<double> pixels; // row-major

	double at( std::size_t row, std::size_t col ) const { return pixels[row * width + col]; }

	bool operator==( const GrayImage& ) const = default;
};

struct DatasetEntry {
	std::string classLabel;
	std::size_t imageIndex = 0; // ordinal within the class
	GrayImage image;
	std::string sourcePath;
};

// Decodes plain (P2) or binary (P5) PGM. Throws ParseError naming the byte offset.
RawImage parse_pgm( std::span<const std::uint8_t> bytes );
RawImage parse_pgm( std::string_view bytes );

// Serializes as plain P2; used to build fixtures.
std::string write_pgm_plain( const RawImage& image );
// Serializes as binary P5 (two big-endian bytes per sample when maxGray > 255).
std::string write_pgm_binary( const RawImage& image );

// Divides by the largest pixel present in this image (not the header max). All-zero stays all-zero.
GrayImage normalize_unit( const RawImage& raw );

// Bilinear resampling with pixel-center alignment and edge clamping.
GrayImage resize_bilinear( const GrayImage& image, std::size_t outWidth, std::size_t outHeight );

struct LoadOptions {
	std::size_t width = 63;
	std::size_t height = 63;
	bool skipErrors = false;
	unsigned workers = 0; // 0 = all available cores
};

struct LoadResult {
	std::vector<DatasetEntry> entries; // natural order of (class, file name)
	std::vector<std::string> warnings;
};

// Reads root/<class>/<image>.pgm. Class directories and files are visited in natural order (digit runs
// compare numerically). Target dimensions must be multiples of 3.
LoadResult load_dataset( const std::filesystem::path& root, const LoadOptions& options );

} // namespace nblgc
