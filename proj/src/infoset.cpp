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

#include "infoset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nblgc {

Window3x3 Window3x3::from_raster( std::span<const double, 9> v )
{
	Window3x3 window;
	window.center = v[4];
	window.ring = { v[0], v[1], v[2], v[5], v[8], v[7], v[6], v[3] };
	return window;
}

std::array<double, 9> Window3x3::raster() const
{
	return { ring[0], ring[1], ring[2], ring[7], center, ring[3], ring[6], ring[5], ring[4] };
}

bool Window3x3::is_valid() const
{
	const auto values = raster();
	return std::all_of( values.begin(), values.end(), []( double v ) { return v >= 0.0 && v <= 1.0; } );
}

double reference_value( const Window3x3& window, FuzzifierRef ref )
{
	const auto values = window.raster();
	const auto [lo, hi] = std::minmax_element( values.begin(), values.end() );
	switch( ref ) {
		case FuzzifierRef::Maximum:
			return *hi;
		case FuzzifierRef::Minimum:
			return *lo;
		case FuzzifierRef::Average:
			break;
	}
	// A rounded mean of nine equal values can miss them by one ulp, which would turn a flat window
	// into a tiny nonzero spread.
	if( *lo == *hi ) {
		return *lo;
	}
	return std::clamp( std::accumulate( values.begin(), values.end(), 0.0 ) / 9.0, *lo, *hi );
}

double fuzzifier( const Window3x3& window, FuzzifierRef ref )
{
	const double reference = reference_value( window, ref );
	double fourth = 0.0;
	double second = 0.0;
	for( const double value : window.raster() ) {
		const double d2 = ( reference - value ) * ( reference - value );
		second += d2;
		fourth += d2 * d2;
	}
	if( second == 0.0 ) {
		return 0.0;
	}
	return std::sqrt( fourth / second );
}

std::array<double, 9> membership_exponential( const Window3x3& window, FuzzifierRef ref )
{
	std::array<double, 9> result;
	result.fill( 1.0 );
	const double fh = fuzzifier( window, ref );
	if( fh == 0.0 ) {
		return result;
	}
	const double reference = reference_value( window, ref );
	const auto values = window.raster();
	for( std::size_t i = 0; i < values.size(); ++i ) {
		result[i] = std::exp( -std::abs( values[i] - reference ) / ( fh * fh ) );
	}
	return result;
}

std::array<double, 9> membership_gaussian( const Window3x3& window, FuzzifierRef ref )
{
	std::array<double, 9> result;
	result.fill( 1.0 );
	const double fh = fuzzifier( window, ref );
	if( fh == 0.0 ) {
		return result;
	}
	const double reference = reference_value( window, ref );
	const auto values = window.raster();
	for( std::size_t i = 0; i < values.size(); ++i ) {
		const double z = ( values[i] - reference ) / ( std::sqrt( 2.0 ) * fh );
		result[i] = std::exp( -z * z );
	}
	return result;
}

double membership_center( const Window3x3& window, FuzzifierRef ref )
{
	const double fh = fuzzifier( window, ref );
	return fh == 0.0 ? 0.0 : window.center / fh;
}

} // namespace nblgc
