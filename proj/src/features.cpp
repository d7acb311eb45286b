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

#include "features.hpp"

#include "error.hpp"

#include <cmath>

namespace nblgc {

std::vector<Window3x3> partition_blocks( const GrayImage& image )
{
	require( image.width % 3 == 0 && image.height % 3 == 0 && image.width > 0 && image.height > 0,
		ErrorCode::InvalidArgument,
		"image " + std::to_string( image.width ) + "x" + std::to_string( image.height )
			+ " cannot be tiled by 3x3 blocks" );
	require( image.pixels.size() == image.width * image.height, ErrorCode::InvalidArgument,
		"image pixel count does not match its dimensions" );

	const std::size_t blockRows = image.height / 3;
	const std::size_t blockCols = image.width / 3;
	std::vector<Window3x3> blocks;
	blocks.reserve( blockRows * blockCols );
	std::array<double, 9> raster;
	for( std::size_t br = 0; br < blockRows; ++br ) {
		for( std::size_t bc = 0; bc < blockCols; ++bc ) {
			for( std::size_t r = 0; r < 3; ++r ) {
				for( std::size_t c = 0; c < 3; ++c ) {
					raster[r * 3 + c] = image.at( br * 3 + r, bc * 3 + c );
				}
			}
			blocks.push_back( Window3x3::from_raster( raster ) );
		}
	}
	return blocks;
}

double block_feature( const Window3x3& window, ContourVariant variant, FuzzifierRef ref )
{
	const double contour = contour_value( window, variant );
	if( contour == 0.0 ) {
		return 0.0;
	}
	const double membership = membership_center( window, ref );
	if( membership == 0.0 ) {
		return 0.0;
	}
	return -membership * contour * std::log( contour );
}

FeatureVector extract( const GrayImage& image, ContourVariant variant, FuzzifierRef ref )
{
	const auto blocks = partition_blocks( image );
	FeatureVector features;
	features.variant = variant;
	features.ref = ref;
	features.blockRows = image.height / 3;
	features.blockCols = image.width / 3;
	features.values.reserve( blocks.size() );
	for( const auto& block : blocks ) {
		features.values.push_back( block_feature( block, variant, ref ) );
	}
	return features;
}

const char* to_string( ContourVariant variant ) noexcept
{
	switch( variant ) {
		case ContourVariant::G1:
			return "G1";
		case ContourVariant::G2:
			return "G2";
		case ContourVariant::G3:
			return "G3";
	}
	return "?";
}

const char* to_string( FuzzifierRef ref ) noexcept
{
	switch( ref ) {
		case FuzzifierRef::Average:
			return "avg";
		case FuzzifierRef::Maximum:
			return "max";
		case FuzzifierRef::Minimum:
			return "min";
	}
	return "?";
}

ContourVariant parse_variant( const std::string& text )
{
	if( text == "G1" || text == "g1" ) {
		return ContourVariant::G1;
	}
	if( text == "G2" || text == "g2" ) {
		return ContourVariant::G2;
	}
	if( text == "G3" || text == "g3" ) {
		return ContourVariant::G3;
	}
	throw Error( ErrorCode::InvalidArgument, "unknown contour variant '" + text + "' (expected G1, G2 or G3)" );
}

FuzzifierRef parse_ref( const std::string& text )
{
	if( text == "avg" ) {
		return FuzzifierRef::Average;
	}
	if( text == "max" ) {
		return FuzzifierRef::Maximum;
	}
	if( text == "min" ) {
		return FuzzifierRef::Minimum;
	}
	throw Error( ErrorCode::InvalidArgument, "unknown fuzzifier reference '" + text + "' (expected avg, max or min)" );
}

} // namespace nblgc
