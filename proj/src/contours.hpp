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

#include "infoset.hpp"

namespace nblgc {

// Closed-loop topology over the 8-pixel ring.
enum class ContourVariant {
	G1, // single loop, stride 1
	G2, // double loop, two stride-2 loops (even and odd ring positions)
	G3, // triple loop, one stride-3 loop
};

struct DoubleLoop {
	double g20 = 0.0; // even positions 0, 6, 4, 2
	double g21 = 0.0; // odd positions 1, 7, 5, 3
	double g2 = 0.0;  // g20 + g21
};

struct ContourValues {
	double g1 = 0.0;
	double g20 = 0.0;
	double g21 = 0.0;
	double g2 = 0.0;
	double g3 = 0.0;
};

// Sums of absolute gray-level differences along each loop. The center pixel never contributes.
double contour_g1( const Window3x3& window );
DoubleLoop contour_g2( const Window3x3& window );
double contour_g3( const Window3x3& window );

ContourValues contour_values( const Window3x3& window );
double contour_value( const Window3x3& window, ContourVariant variant );

} // namespace nblgc
