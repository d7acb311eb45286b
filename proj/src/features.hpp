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

#include "contours.hpp"
#include "image_io.hpp"
#include "infoset.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nblgc {

struct FeatureVector {
	std::vector<double> values; // one F_w per block, row-major block order
	ContourVariant variant = ContourVariant::G1;
	FuzzifierRef ref = FuzzifierRef::Average;
	std::size_t blockRows = 0;
	std::size_t blockCols = 0;
};

// Non-overlapping 3x3 tiling in row-major block order. Dimensions must be multiples of 3.
std::vector<Window3x3> partition_blocks( const GrayImage& image );

// F_w = -mu_w * G * ln(G), with F_w = 0 when G = 0 or mu_w = 0.
double block_feature( const Window3x3& window, ContourVariant variant, FuzzifierRef ref );

FeatureVector extract( const GrayImage& image, ContourVariant variant, FuzzifierRef ref );

const char* to_string( ContourVariant variant ) noexcept;
const char* to_string( FuzzifierRef ref ) noexcept; // "avg", "max", "min"
ContourVariant parse_variant( const std::string& text );
FuzzifierRef parse_ref( const std::string& text );

} // namespace nblgc
