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

#include <array>
#include <span>

namespace nblgc {

// Reference gray level the fuzzifier and memberships are measured against.
enum class FuzzifierRef {
	Average,
	Maximum,
	Minimum,
};

// One 3x3 block. The ring runs clockwise from the top-left pixel:
//
//   ring[0] ring[1] ring[2]
//   ring[7] center  ring[3]
//   ring[6] ring[5] ring[4]
//
// Any cyclic relabeling leaves the loop contours unchanged; this order is fixed so fixtures stay stable.
struct Window3x3 {
	double center = 0.0;
	std::array<double, 8> ring{};

	// Builds a window from nine values in raster order.
	static Window3x3 from_raster( std::span<const double, 9> values );

	// The nine values in raster order.
	std::array<double, 9> raster() const;

	// True when all nine values lie in [0, 1].
	bool is_valid() const;
};

double reference_value( const Window3x3& window, FuzzifierRef ref );

// Spread of the window about I(ref): sqrt( sum d^4 / sum d^2 ) with d = I(ref) - I_ij over all nine
// values. A constant window (zero denominator) yields 0.
double fuzzifier( const Window3x3& window, FuzzifierRef ref );

// exp( -|I_ij - I(ref)| / f_h^2 ) per value, raster order. All ones when f_h = 0.
std::array<double, 9> membership_exponential( const Window3x3& window, FuzzifierRef ref );

// exp( -((I_ij - I(ref)) / (sqrt(2) f_h))^2 ) per value, raster order. All ones when f_h = 0.
std::array<double, 9> membership_gaussian( const Window3x3& window, FuzzifierRef ref );

// Center-pixel membership center / f_h; 0 when f_h = 0. Not clamped.
double membership_center( const Window3x3& window, FuzzifierRef ref );

} // namespace nblgc
