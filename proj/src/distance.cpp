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

#include "distance.hpp"

#include "error.hpp"

#include <cmath>

namespace nblgc {

namespace {

void check_lengths( std::span<const double> a, std::span<const double> b )
{
	require( a.size() == b.size(), ErrorCode::InvalidArgument,
		"vector length mismatch: " + std::to_string( a.size() ) + " vs " + std::to_string( b.size() ) );
}

} // namespace

double distance_log( std::span<const double> a, std::span<const double> b )
{
	check_lengths( a, b );
	double sum = 0.0;
	for( std::size_t i = 0; i < a.size(); ++i ) {
		sum += std::log1p( std::abs( a[i] - b[i] ) );
	}
	return sum;
}

double distance_euclidean( std::span<const double> a, std::span<const double> b )
{
	check_lengths( a, b );
	double sum = 0.0;
	for( std::size_t i = 0; i < a.size(); ++i ) {
		const double d = a[i] - b[i];
		sum += d * d;
	}
	return std::sqrt( sum );
}

double distance( DistanceKind kind, std::span<const double> a, std::span<const double> b )
{
	return kind == DistanceKind::Euclidean ? distance_euclidean( a, b ) : distance_log( a, b );
}

double kernel_poly( std::span<const double> a, std::span<const double> b, int degree, double offset )
{
	check_lengths( a, b );
	require( degree >= 1, ErrorCode::InvalidArgument, "polynomial kernel degree must be >= 1" );
	double dot = 0.0;
	for( std::size_t i = 0; i < a.size(); ++i ) {
		dot += a[i] * b[i];
	}
	const double base = dot + offset;
	double result = base;
	for( int d = 1; d < degree; ++d ) {
		result *= base;
	}
	return result;
}

const char* to_string( DistanceKind kind ) noexcept
{
	return kind == DistanceKind::Euclidean ? "euclidean" : "log";
}

DistanceKind parse_distance( const std::string& text )
{
	if( text == "log" ) {
		return DistanceKind::Log;
	}
	if( text == "euclidean" ) {
		return DistanceKind::Euclidean;
	}
	throw Error( ErrorCode::InvalidArgument, "unknown distance '" + text + "' (expected log or euclidean)" );
}

} // namespace nblgc
