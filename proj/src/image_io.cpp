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

#include "image_io.hpp"

#include "error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

namespace nblgc {

const char* to_string( ParseErrorKind kind ) noexcept
{
	switch( kind ) {
		case ParseErrorKind::BadMagic:
			return "bad magic number";
		case ParseErrorKind::BadHeaderToken:
			return "non-numeric header token";
		case ParseErrorKind::BadHeaderValue:
			return "invalid header value";
		case ParseErrorKind::BadSample:
			return "non-numeric pixel sample";
		case ParseErrorKind::Truncated:
			return "truncated pixel data";
		case ParseErrorKind::PixelOutOfRange:
			return "pixel exceeds max gray";
	}
	return "unknown parse error";
}

ParseError::ParseError( ParseErrorKind kind, std::size_t offset, const std::string& detail ) :
	Error( ErrorCode::Parse,
		std::string( to_string( kind ) ) + " at byte " + std::to_string( offset ) + ( detail.empty() ? "" : ": " + detail ) ),
	errorKind( kind ),
	byteOffset( offset )
{
}

namespace {

class PgmReader {
public:
	explicit PgmReader( std::span<const std::uint8_t> data ) : bytes( data ) {}

	std::size_t offset() const { return pos; }

	bool atEnd() const { return pos >= bytes.size(); }

	// Skips whitespace and '#' comments (to end of line).
	void skipSeparators()
	{
		while( pos < bytes.size() ) {
			const auto c = bytes[pos];
			if( c == '#' ) {
				while( pos < bytes.size() && bytes[pos] != '\n' && bytes[pos] != '\r' ) {
					++pos;
				}
			} else if( std::isspace( c ) ) {
				++pos;
			} else {
				break;
			}
		}
	}

	// Returns false at end of input. Throws on a token that is not a decimal integer.
	bool readNumber( std::uint64_t& value, ParseErrorKind onGarbage )
	{
		skipSeparators();
		if( atEnd() ) {
			return false;
		}
		const std::size_t start = pos;
		value = 0;
		while( pos < bytes.size() && std::isdigit( bytes[pos] ) ) {
			value = value * 10 + ( bytes[pos] - '0' );
			if( value > std::numeric_limits<std::uint32_t>::max() ) {
				throw ParseError( ParseErrorKind::BadHeaderValue, start, "number too large" );
			}
			++pos;
		}
		if( pos == start || ( pos < bytes.size() && !std::isspace( bytes[pos] ) && bytes[pos] != '#' ) ) {
			throw ParseError( onGarbage, start, "expected decimal integer" );
		}
		return true;
	}

	std::uint8_t byte( std::size_t at ) const { return bytes[at]; }
	std::size_t size() const { return bytes.size(); }
	void advance( std::size_t count ) { pos += count; }

private:
	std::span<const std::uint8_t> bytes;
	std::size_t pos = 0;
};

std::uint64_t read_header_value( PgmReader& reader, const char* name )
{
	std::uint64_t value = 0;
	if( !reader.readNumber( value, ParseErrorKind::BadHeaderToken ) ) {
		throw ParseError( ParseErrorKind::Truncated, reader.offset(), std::string( "missing " ) + name );
	}
	return value;
}

void check_pixel( std::uint64_t value, std::uint32_t maxGray, std::size_t offset )
{
	if( value > maxGray ) {
		throw ParseError( ParseErrorKind::PixelOutOfRange, offset,
			std::to_string( value ) + " > " + std::to_string( maxGray ) );
	}
}

} // namespace

RawImage parse_pgm( std::span<const std::uint8_t> bytes )
{
	if( bytes.size() < 2 || bytes[0] != 'P' || ( bytes[1] != '2' && bytes[1] != '5' ) ) {
		throw ParseError( ParseErrorKind::BadMagic, 0, "expected P2 or P5" );
	}
	const bool binary = bytes[1] == '5';
	if( bytes.size() > 2 && !std::isspace( bytes[2] ) && bytes[2] != '#' ) {
		throw ParseError( ParseErrorKind::BadMagic, 2, "magic number not followed by whitespace" );
	}

	PgmReader reader( bytes );
	reader.advance( 2 );
	std::size_t headerOffset = reader.offset();
	const auto width = read_header_value( reader, "width" );
	const auto height = read_header_value( reader, "height" );
	headerOffset = reader.offset();
	const auto maxGray = read_header_value( reader, "max gray" );
	if( width == 0 || height == 0 ) {
		throw ParseError( ParseErrorKind::BadHeaderValue, headerOffset, "zero image dimension" );
	}
	if( maxGray == 0 || maxGray > 65535 ) {
		throw ParseError( ParseErrorKind::BadHeaderValue, headerOffset, "max gray must be in [1, 65535]" );
	}

	// Every sample needs at least one byte, so larger claims are truncated by construction.
	if( width > bytes.size() || height > bytes.size() || width * height > bytes.size() ) {
		throw ParseError( ParseErrorKind::Truncated, bytes.size(),
			"header claims " + std::to_string( width ) + "x" + std::to_string( height ) + " pixels" );
	}

	RawImage image;
	image.width = static_cast<std::size_t>( width );
	image.height = static_cast<std::size_t>( height );
	image.maxGray = static_cast<std::uint32_t>( maxGray );
	const std::size_t count = image.width * image.height;
	image.pixels.resize( count );

	if( binary ) {
		// Exactly one whitespace byte separates the header from the raster.
		if( reader.atEnd() ) {
			throw ParseError( ParseErrorKind::Truncated, reader.offset(), "no raster after header" );
		}
		reader.advance( 1 );
		const std::size_t sampleBytes = image.maxGray > 255 ? 2 : 1;
		const std::size_t start = reader.offset();
		const std::size_t available = reader.size() - start;
		if( available / sampleBytes < count ) {
			throw ParseError( ParseErrorKind::Truncated, reader.size(),
				"expected " + std::to_string( count * sampleBytes ) + " raster bytes, found " + std::to_string( available ) );
		}
		for( std::size_t i = 0; i < count; ++i ) {
			const std::size_t at = start + i * sampleBytes;
			std::uint32_t value = reader.byte( at );
			if( sampleBytes == 2 ) {
				value = ( value << 8 ) | reader.byte( at + 1 );
			}
			check_pixel( value, image.maxGray, at );
			image.pixels[i] = value;
		}
		return image;
	}

	for( std::size_t i = 0; i < count; ++i ) {
		std::uint64_t value = 0;
		reader.skipSeparators();
		const std::size_t sampleOffset = reader.offset();
		if( !reader.readNumber( value, ParseErrorKind::BadSample ) ) {
			throw ParseError( ParseErrorKind::Truncated, reader.offset(),
				"expected " + std::to_string( count ) + " samples, found " + std::to_string( i ) );
		}
		check_pixel( value, image.maxGray, sampleOffset );
		image.pixels[i] = static_cast<std::uint32_t>( value );
	}
	return image;
}

RawImage parse_pgm( std::string_view bytes )
{
	return parse_pgm( std::span<const std::uint8_t>( reinterpret_cast<const std::uint8_t*>( bytes.data() ), bytes.size() ) );
}

std::string write_pgm_plain( const RawImage& image )
{
	std::ostringstream out;
	out << "P2\n" << image.width << ' ' << image.height << '\n' << image.maxGray << '\n';
	for( std::size_t row = 0; row < image.height; ++row ) {
		for( std::size_t col = 0; col < image.width; ++col ) {
			out << ( col == 0 ? "" : " " ) << image.pixels[row * image.width + col];
		}
		out << '\n';
	}
	return out.str();
}

std::string write_pgm_binary( const RawImage& image )
{
	std::string out = "P5\n" + std::to_string( image.width ) + ' ' + std::to_string( image.height ) + '\n'
		+ std::to_string( image.maxGray ) + '\n';
	for( const auto value : image.pixels ) {
		if( image.maxGray > 255 ) {
			out.push_back( static_cast<char>( ( value >> 8 ) & 0xFF ) );
		}
		out.push_back( static_cast<char>( value & 0xFF ) );
	}
	return out;
}

GrayImage normalize_unit( const RawImage& raw )
{
	GrayImage image{ raw.width, raw.height, std::vector<double>( raw.pixels.size(), 0.0 ) };
	const auto maxIt = std::max_element( raw.pixels.begin(), raw.pixels.end() );
	if( maxIt == raw.pixels.end() || *maxIt == 0 ) {
		return image;
	}
	const double peak = *maxIt;
	std::transform( raw.pixels.begin(), raw.pixels.end(), image.pixels.begin(),
		[peak]( std::uint32_t value ) { return value / peak; } );
	return image;
}

GrayImage resize_bilinear( const GrayImage& image, std::size_t outWidth, std::size_t outHeight )
{
	require( outWidth >= 1 && outHeight >= 1, ErrorCode::InvalidArgument, "resize target must be at least 1x1" );
	require( image.width >= 1 && image.height >= 1 && image.pixels.size() == image.width * image.height,
		ErrorCode::InvalidArgument, "resize source image is empty or inconsistent" );
	if( outWidth == image.width && outHeight == image.height ) {
		return image;
	}

	// Source coordinate of output pixel center x: (x + 0.5) * in / out - 0.5, clamped to the raster.
	struct Tap {
		std::size_t lo;
		std::size_t hi;
		double frac;
	};
	auto taps = []( std::size_t inSize, std::size_t outSize ) {
		std::vector<Tap> result( outSize );
		const double scale = static_cast<double>( inSize ) / static_cast<double>( outSize );
		for( std::size_t i = 0; i < outSize; ++i ) {
			const double src = std::clamp( ( i + 0.5 ) * scale - 0.5, 0.0, static_cast<double>( inSize - 1 ) );
			const auto lo = static_cast<std::size_t>( src );
			result[i] = { lo, std::min( lo + 1, inSize - 1 ), src - static_cast<double>( lo ) };
		}
		return result;
	};
	const auto xTaps = taps( image.width, outWidth );
	const auto yTaps = taps( image.height, outHeight );

	GrayImage out{ outWidth, outHeight, std::vector<double>( outWidth * outHeight ) };
	for( std::size_t y = 0; y < outHeight; ++y ) {
		const auto& ty = yTaps[y];
		for( std::size_t x = 0; x < outWidth; ++x ) {
			const auto& tx = xTaps[x];
			const double top = image.at( ty.lo, tx.lo ) + tx.frac * ( image.at( ty.lo, tx.hi ) - image.at( ty.lo, tx.lo ) );
			const double bottom = image.at( ty.hi, tx.lo ) + tx.frac * ( image.at( ty.hi, tx.hi ) - image.at( ty.hi, tx.lo ) );
			out.pixels[y * outWidth + x] = std::clamp( top + ty.frac * ( bottom - top ), 0.0, 1.0 );
		}
	}
	return out;
}

namespace {

// Digit runs compare by value, so "2.pgm" sorts before "10.pgm".
bool natural_less( const std::string& a, const std::string& b )
{
	std::size_t i = 0;
	std::size_t j = 0;
	while( i < a.size() && j < b.size() ) {
		const bool da = std::isdigit( static_cast<unsigned char>( a[i] ) ) != 0;
		const bool db = std::isdigit( static_cast<unsigned char>( b[j] ) ) != 0;
		if( da && db ) {
			std::size_t ei = i;
			std::size_t ej = j;
			while( ei < a.size() && std::isdigit( static_cast<unsigned char>( a[ei] ) ) ) {
				++ei;
			}
			while( ej < b.size() && std::isdigit( static_cast<unsigned char>( b[ej] ) ) ) {
				++ej;
			}
			std::size_t si = i;
			std::size_t sj = j;
			while( si + 1 < ei && a[si] == '0' ) {
				++si;
			}
			while( sj + 1 < ej && b[sj] == '0' ) {
				++sj;
			}
			if( ei - si != ej - sj ) {
				return ei - si < ej - sj;
			}
			const int cmp = a.compare( si, ei - si, b, sj, ej - sj );
			if( cmp != 0 ) {
				return cmp < 0;
			}
			i = ei;
			j = ej;
		} else {
			if( a[i] != b[j] ) {
				return static_cast<unsigned char>( a[i] ) < static_cast<unsigned char>( b[j] );
			}
			++i;
			++j;
		}
	}
	if( ( a.size() - i ) != ( b.size() - j ) ) {
		return a.size() - i < b.size() - j;
	}
	return a < b;
}

bool has_pgm_extension( const std::filesystem::path& path )
{
	auto ext = path.extension().string();
	std::transform( ext.begin(), ext.end(), ext.begin(), []( unsigned char c ) { return std::tolower( c ); } );
	return ext == ".pgm";
}

std::string read_file( const std::filesystem::path& path )
{
	std::ifstream in( path, std::ios::binary );
	if( !in ) {
		throw Error( ErrorCode::Io, "cannot open " + path.string() );
	}
	std::string data( ( std::istreambuf_iterator<char>( in ) ), std::istreambuf_iterator<char>() );
	if( in.bad() ) {
		throw Error( ErrorCode::Io, "read failed for " + path.string() );
	}
	return data;
}

} // namespace

LoadResult load_dataset( const std::filesystem::path& root, const LoadOptions& options )
{
	namespace fs = std::filesystem;
	require( options.width >= 3 && options.height >= 3 && options.width % 3 == 0 && options.height % 3 == 0,
		ErrorCode::InvalidArgument,
		"resize target " + std::to_string( options.width ) + "x" + std::to_string( options.height )
			+ " must be a positive multiple of 3 in both dimensions" );
	std::error_code ec;
	require( fs::is_directory( root, ec ), ErrorCode::Io, "dataset root is not a directory: " + root.string() );

	struct Job {
		std::string classLabel;
		fs::path path;
	};
	std::vector<Job> jobs;
	std::vector<fs::path> classDirs;
	for( const auto& entry : fs::directory_iterator( root ) ) {
		if( entry.is_directory() ) {
			classDirs.push_back( entry.path() );
		}
	}
	std::sort( classDirs.begin(), classDirs.end(),
		[]( const fs::path& a, const fs::path& b ) { return natural_less( a.filename().string(), b.filename().string() ); } );
	for( const auto& dir : classDirs ) {
		std::vector<fs::path> files;
		for( const auto& entry : fs::directory_iterator( dir ) ) {
			if( entry.is_regular_file() && has_pgm_extension( entry.path() ) ) {
				files.push_back( entry.path() );
			}
		}
		std::sort( files.begin(), files.end(),
			[]( const fs::path& a, const fs::path& b ) { return natural_less( a.filename().string(), b.filename().string() ); } );
		for( auto& file : files ) {
			jobs.push_back( { dir.filename().string(), std::move( file ) } );
		}
	}

	LoadResult result;
	if( jobs.empty() ) {
		result.warnings.push_back( "no PGM images found under " + root.string() );
		return result;
	}

	std::vector<GrayImage> images( jobs.size() );
	std::vector<std::string> failures( jobs.size() );
	parallel_for( jobs.size(), options.workers, [&]( std::size_t i ) {
		try {
			const auto raw = parse_pgm( read_file( jobs[i].path ) );
			images[i] = resize_bilinear( normalize_unit( raw ), options.width, options.height );
		} catch( const Error& error ) {
			if( !options.skipErrors ) {
				throw Error( error.code(), jobs[i].path.string() + ": " + error.what() );
			}
			failures[i] = jobs[i].path.string() + ": " + error.what();
		}
	} );

	std::size_t indexInClass = 0;
	for( std::size_t i = 0; i < jobs.size(); ++i ) {
		if( i > 0 && jobs[i].classLabel != jobs[i - 1].classLabel ) {
			indexInClass = 0;
		}
		if( !failures[i].empty() ) {
			result.warnings.push_back( "skipped " + failures[i] );
			continue;
		}
		result.entries.push_back( { jobs[i].classLabel, indexInClass++, std::move( images[i] ), jobs[i].path.string() } );
	}
	return result;
}

} // namespace nblgc
