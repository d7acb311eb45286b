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

#include "contours.hpp"

#include <cmath>

namespace nblgc {

namespace {

// Sum of |ring[loop[t+1]] - ring[loop[t]]| around the closed loop, in the listed order.
template<std::size_t N>
double loop_sum( const std::array<double, 8>& ring, const std::array<int, N>& loop )
{
	double sum = 0.0;
	for( std::size_t t = 0; t < N; ++t ) {
		sum += std::abs( ring[loop[( t + 1 ) % N]] - ring[loop[t]] );
	}
	return sum;
}

// Visiting orders follow the written term order: |I7-I0| + |I6-I7| + ... + |I0-I1|.
constexpr std::array<int, 8> singleLoop{ 0, 7, 6, 5, 4, 3, 2, 1 };
constexpr std::array<int, 4> evenLoop{ 0, 6, 4, 2 };
constexpr std::array<int, 4> oddLoop{ 1, 7, 5, 3 };
constexpr std::array<int, 8> strideThreeLoop{ 0, 5, 2, 7, 4, 1, 6, 3 };

} // namespace

double contour_g1( const Window3x3& window )
{
	return loop_sum( window.ring, singleLoop );
}

DoubleLoop contour_g2( const Window3x3& window )
{
	DoubleLoop result;
	result.g20 = loop_sum( window.ring, evenLoop );
	result.g21 = loop_sum( window.ring, oddLoop );
	result.g2 = result.g20 + result.g21;
	return result;
}

double contour_g3( const Window3x3& window )
{
	return loop_sum( window.ring, strideThreeLoop );
}

ContourValues contour_values( const Window3x3& window )
{
	const auto twin = contour_g2( window );
	return { contour_g1( window ), twin.g20, twin.g21, twin.g2, contour_g3( window ) };
}

double contour_value( const Window3x3& window, ContourVariant variant )
{
	switch( variant ) {
		case ContourVariant::G2:
			return contour_g2( window ).g2;
		case ContourVariant::G3:
			return contour_g3( window );
		case ContourVariant::G1:
			break;
	}
	return contour_g1( window );
}

} // namespace nblgc
