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

#include <doctest.h>

#include "contours.hpp"
#include "support.hpp"

#include <random>

using namespace nblgc;
namespace oracle = nblgc::testing;

namespace {

Window3x3 ring_window( std::array<double, 8> ring, double center = 0.0 )
{
	return Window3x3{ center, ring };
}

Window3x3 random_window( std::mt19937_64& rng )
{
	std::uniform_real_distribution<double> unit( 0.0, 1.0 );
	Window3x3 w;
	w.center = unit( rng );
	for( auto& v : w.ring ) {
		v = unit( rng );
	}
	return w;
}

oracle::Matrix3 as_matrix( const Window3x3& w )
{
	const auto r = w.raster();
	return { { { r[0], r[1], r[2] }, { r[3], r[4], r[5] }, { r[6], r[7], r[8] } } };
}

constexpr ContourVariant kVariants[] = { ContourVariant::G1, ContourVariant::G2, ContourVariant::G3 };

} // namespace

TEST_CASE( "contours on a linear ramp" )
{
	const auto w = ring_window( { 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8 } );
	const auto v = contour_values( w );
	CHECK( v.g1 == doctest::Approx( 1.4 ) );
	CHECK( v.g20 == doctest::Approx( 1.2 ) );
	CHECK( v.g21 == doctest::Approx( 1.2 ) );
	CHECK( v.g2 == doctest::Approx( 2.4 ) );
	CHECK( v.g3 == doctest::Approx( 3.0 ) );
}

TEST_CASE( "contours of a constant ring vanish" )
{
	const auto w = ring_window( { 0.4, 0.4, 0.4, 0.4, 0.4, 0.4, 0.4, 0.4 }, 0.9 );
	for( const auto variant : kVariants ) {
		CHECK( contour_value( w, variant ) == 0.0 );
	}
}

TEST_CASE( "a single bright corner" )
{
	const auto w = ring_window( { 1, 0, 0, 0, 0, 0, 0, 0 } );
	CHECK( contour_g1( w ) == 2.0 );
	CHECK( contour_g2( w ).g20 == 2.0 );
	CHECK( contour_g2( w ).g21 == 0.0 );
	CHECK( contour_g3( w ) == 2.0 );
}

TEST_CASE( "contours match the written-out loop equations" )
{
	std::mt19937_64 rng( 31 );
	for( int trial = 0; trial < 10000; ++trial ) {
		const auto w = random_window( rng );
		const auto m = as_matrix( w );
		const auto p = oracle::oracle_name( m );
		const auto v = contour_values( w );
		CHECK( std::fabs( v.g1 - oracle::oracle_g1( p ) ) <= 1e-12 );
		CHECK( std::fabs( v.g20 - oracle::oracle_g20( p ) ) <= 1e-12 );
		CHECK( std::fabs( v.g21 - oracle::oracle_g21( p ) ) <= 1e-12 );
		CHECK( std::fabs( v.g3 - oracle::oracle_g3( p ) ) <= 1e-12 );
		CHECK( v.g2 == v.g20 + v.g21 );
		CHECK( contour_value( w, ContourVariant::G2 ) == v.g2 );
	}
}

TEST_CASE( "contour invariants" )
{
	std::mt19937_64 rng( 32 );
	std::uniform_real_distribution<double> shift( -1.0, 1.0 );
	std::uniform_real_distribution<double> scale( 0.0, 5.0 );
	for( int trial = 0; trial < 10000; ++trial ) {
		const auto w = random_window( rng );
		const auto v = contour_values( w );

		for( const double g : { v.g1, v.g20, v.g21, v.g2, v.g3 } ) {
			CHECK( g >= 0.0 );
		}
		CHECK( v.g1 <= 8.0 );
		CHECK( v.g2 <= 8.0 );
		CHECK( v.g3 <= 8.0 );

		// Each stride-2 and stride-3 step is bounded by the ring path between its endpoints.
		CHECK( v.g20 <= v.g1 + 1e-12 );
		CHECK( v.g21 <= v.g1 + 1e-12 );
		CHECK( v.g2 <= 2.0 * v.g1 + 1e-12 );
		CHECK( v.g3 <= 3.0 * v.g1 + 1e-12 );

		const double c = shift( rng );
		const double s = scale( rng );
		Window3x3 moved = w;
		Window3x3 scaled = w;
		moved.center += c;
		for( std::size_t i = 0; i < 8; ++i ) {
			moved.ring[i] += c;
			scaled.ring[i] *= s;
		}
		for( const auto variant : kVariants ) {
			const double g = contour_value( w, variant );
			CHECK( contour_value( moved, variant ) == doctest::Approx( g ).epsilon( 1e-10 ) );
			CHECK( contour_value( scaled, variant ) == doctest::Approx( s * g ).epsilon( 1e-10 ) );
		}

		// The center never enters a contour.
		Window3x3 recentered = w;
		recentered.center = 1.0 - w.center;
		for( const auto variant : kVariants ) {
			CHECK( contour_value( recentered, variant ) == contour_value( w, variant ) );
		}

		// Rotating the block by 90 degrees shifts the ring by two positions.
		Window3x3 rotated = w;
		for( std::size_t i = 0; i < 8; ++i ) {
			rotated.ring[( i + 2 ) % 8] = w.ring[i];
		}
		for( const auto variant : kVariants ) {
			CHECK( contour_value( rotated, variant ) == doctest::Approx( contour_value( w, variant ) ).epsilon( 1e-12 ) );
		}
		// Mirroring reverses the ring direction.
		Window3x3 mirrored = w;
		for( std::size_t i = 0; i < 8; ++i ) {
			mirrored.ring[( 8 - i ) % 8] = w.ring[i];
		}
		for( const auto variant : kVariants ) {
			CHECK( contour_value( mirrored, variant ) == doctest::Approx( contour_value( w, variant ) ).epsilon( 1e-12 ) );
		}
	}
}

TEST_CASE( "alternating ring" )
{
	const auto w = ring_window( { 1, 0, 1, 0, 1, 0, 1, 0 } );
	CHECK( contour_g1( w ) == 8.0 );
	const auto d = contour_g2( w );
	CHECK( d.g20 == 0.0 );
	CHECK( d.g21 == 0.0 );
	CHECK( d.g2 == 0.0 );
}

TEST_CASE( "rotating the ring by one position swaps the two double-loop halves" )
{
	std::mt19937_64 rng( 33 );
	for( int trial = 0; trial < 1000; ++trial ) {
		const auto w = random_window( rng );
		Window3x3 rotated = w;
		for( std::size_t i = 0; i < 8; ++i ) {
			rotated.ring[( i + 1 ) % 8] = w.ring[i];
		}
		const auto a = contour_values( w );
		const auto b = contour_values( rotated );
		CHECK( b.g1 == doctest::Approx( a.g1 ).epsilon( 1e-12 ) );
		CHECK( b.g3 == doctest::Approx( a.g3 ).epsilon( 1e-12 ) );
		CHECK( b.g20 == doctest::Approx( a.g21 ).epsilon( 1e-12 ) );
		CHECK( b.g21 == doctest::Approx( a.g20 ).epsilon( 1e-12 ) );
	}
}

TEST_CASE( "a contour is zero only when its loop is constant" )
{
	std::mt19937_64 rng( 34 );
	for( int trial = 0; trial < 1000; ++trial ) {
		auto w = random_window( rng );
		CHECK( contour_g1( w ) > 0.0 );
		CHECK( contour_g3( w ) > 0.0 );
		w.ring[0] = w.ring[2] = w.ring[4] = w.ring[6];
		CHECK( contour_g2( w ).g20 == 0.0 );
		CHECK( contour_g2( w ).g21 > 0.0 );
	}
}
