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

// Test-only helpers and independent oracles. Nothing here calls into the library's feature or
// solver code paths; each oracle re-derives its result from the defining formulas.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace nblgc::testing {

enum class OracleRef { Average, Maximum, Minimum };
enum class OracleLoop { Single, Double, Triple };

// Window given as a 3x3 matrix S[row][col].
using Matrix3 = std::array<std::array<double, 3>, 3>;

inline double oracle_reference( const Matrix3& s, OracleRef ref )
{
	double sum = 0.0;
	double hi = s[0][0];
	double lo = s[0][0];
	for( int i = 0; i < 3; ++i ) {
		for( int j = 0; j < 3; ++j ) {
			sum += s[i][j];
			hi = std::max( hi, s[i][j] );
			lo = std::min( lo, s[i][j] );
		}
	}
	switch( ref ) {
		case OracleRef::Maximum:
			return hi;
		case OracleRef::Minimum:
			return lo;
		default:
			return sum / 9.0;
	}
}

// f_h^2 = sum (I(ref) - I_ij)^4 / sum (I(ref) - I_ij)^2, both sums over i, j = 1..w with w = 3.
inline double oracle_fuzzifier( const Matrix3& s, OracleRef ref )
{
	const double iref = oracle_reference( s, ref );
	double numerator = 0.0;
	double denominator = 0.0;
	for( int i = 0; i < 3; ++i ) {
		for( int j = 0; j < 3; ++j ) {
			numerator += std::pow( iref - s[i][j], 4 );
			denominator += std::pow( iref - s[i][j], 2 );
		}
	}
	return denominator == 0.0 ? 0.0 : std::sqrt( numerator / denominator );
}

// Peripheral pixels named I0..I7, clockwise from the top-left corner.
struct Named {
	double I0, I1, I2, I3, I4, I5, I6, I7, Ic;
};

inline Named oracle_name( const Matrix3& s )
{
	return { s[0][0], s[0][1], s[0][2], s[1][2], s[2][2], s[2][1], s[2][0], s[1][0], s[1][1] };
}

// Term lists written out exactly as the loop equations read.
inline double oracle_g1( const Named& p )
{
	return std::fabs( p.I7 - p.I0 ) + std::fabs( p.I6 - p.I7 ) + std::fabs( p.I5 - p.I6 ) + std::fabs( p.I4 - p.I5 )
		+ std::fabs( p.I3 - p.I4 ) + std::fabs( p.I2 - p.I3 ) + std::fabs( p.I1 - p.I2 ) + std::fabs( p.I0 - p.I1 );
}

inline double oracle_g20( const Named& p )
{
	return std::fabs( p.I6 - p.I0 ) + std::fabs( p.I4 - p.I6 ) + std::fabs( p.I2 - p.I4 ) + std::fabs( p.I0 - p.I2 );
}

inline double oracle_g21( const Named& p )
{
	return std::fabs( p.I7 - p.I1 ) + std::fabs( p.I5 - p.I7 ) + std::fabs( p.I3 - p.I5 ) + std::fabs( p.I1 - p.I3 );
}

inline double oracle_g3( const Named& p )
{
	return std::fabs( p.I5 - p.I0 ) + std::fabs( p.I2 - p.I5 ) + std::fabs( p.I7 - p.I2 ) + std::fabs( p.I4 - p.I7 )
		+ std::fabs( p.I1 - p.I4 ) + std::fabs( p.I6 - p.I1 ) + std::fabs( p.I3 - p.I6 ) + std::fabs( p.I0 - p.I3 );
}

inline double oracle_contour( const Matrix3& s, OracleLoop loop )
{
	const auto p = oracle_name( s );
	switch( loop ) {
		case OracleLoop::Double:
			return oracle_g20( p ) + oracle_g21( p );
		case OracleLoop::Triple:
			return oracle_g3( p );
		default:
			return oracle_g1( p );
	}
}

// F_w = -mu_w G ln G with mu_w = i_c / f_h.
inline double oracle_block_feature( const Matrix3& s, OracleLoop loop, OracleRef ref )
{
	const double fh = oracle_fuzzifier( s, ref );
	const double g = oracle_contour( s, loop );
	if( fh == 0.0 || g == 0.0 ) {
		return 0.0;
	}
	const double mu = oracle_name( s ).Ic / fh;
	return -mu * g * std::log( g );
}

// Naive end-to-end pipeline on a raw integer raster: divide by the image maximum, cut 3x3 blocks by
// explicit index arithmetic, evaluate each block directly.
inline std::vector<double> oracle_pipeline( const std::vector<std::uint32_t>& raw, std::size_t width, std::size_t height,
	OracleLoop loop, OracleRef ref )
{
	const double peak = *std::max_element( raw.begin(), raw.end() );
	std::vector<double> out;
	for( std::size_t by = 0; by < height / 3; ++by ) {
		for( std::size_t bx = 0; bx < width / 3; ++bx ) {
			Matrix3 s{};
			for( int i = 0; i < 3; ++i ) {
				for( int j = 0; j < 3; ++j ) {
					const double v = raw[( by * 3 + i ) * width + ( bx * 3 + j )];
					s[i][j] = peak == 0.0 ? 0.0 : v / peak;
				}
			}
			out.push_back( oracle_block_feature( s, loop, ref ) );
		}
	}
	return out;
}

// Exhaustive solver for the two-class dual on a handful of points: every multiplier is either at
// 0, at C, or free; for each of the 3^n assignments the free multipliers solve the KKT linear system
// (Q_FF a_F + y_F b = 1 - Q_FB a_B, y' a = 0). Returns the best feasible dual objective.
struct ExhaustiveDual {
	std::vector<double> alphas;
	double objective = -1.0;
};

inline bool solve_linear( std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x )
{
	const std::size_t n = b.size();
	for( std::size_t col = 0; col < n; ++col ) {
		std::size_t pivot = col;
		for( std::size_t r = col + 1; r < n; ++r ) {
			if( std::fabs( a[r][col] ) > std::fabs( a[pivot][col] ) ) {
				pivot = r;
			}
		}
		if( std::fabs( a[pivot][col] ) < 1e-12 ) {
			return false;
		}
		std::swap( a[pivot], a[col] );
		std::swap( b[pivot], b[col] );
		for( std::size_t r = 0; r < n; ++r ) {
			if( r == col ) {
				continue;
			}
			const double factor = a[r][col] / a[col][col];
			for( std::size_t c = col; c < n; ++c ) {
				a[r][c] -= factor * a[col][c];
			}
			b[r] -= factor * b[col];
		}
	}
	x.resize( n );
	for( std::size_t i = 0; i < n; ++i ) {
		x[i] = b[i] / a[i][i];
	}
	return true;
}

inline ExhaustiveDual exhaustive_dual( const std::vector<std::vector<double>>& gram, const std::vector<int>& y, double c )
{
	const std::size_t n = y.size();
	auto q = [&]( std::size_t i, std::size_t j ) { return y[i] * y[j] * gram[i][j]; };
	ExhaustiveDual best;
	std::size_t combos = 1;
	for( std::size_t i = 0; i < n; ++i ) {
		combos *= 3;
	}
	for( std::size_t code = 0; code < combos; ++code ) {
		std::vector<int> state( n );
		std::size_t rest = code;
		for( std::size_t i = 0; i < n; ++i ) {
			state[i] = static_cast<int>( rest % 3 ); // 0: zero, 1: at C, 2: free
			rest /= 3;
		}
		std::vector<double> alpha( n, 0.0 );
		std::vector<std::size_t> freeSet;
		for( std::size_t i = 0; i < n; ++i ) {
			if( state[i] == 1 ) {
				alpha[i] = c;
			} else if( state[i] == 2 ) {
				freeSet.push_back( i );
			}
		}
		if( !freeSet.empty() ) {
			const std::size_t m = freeSet.size();
			std::vector<std::vector<double>> a( m + 1, std::vector<double>( m + 1, 0.0 ) );
			std::vector<double> rhs( m + 1, 0.0 );
			for( std::size_t r = 0; r < m; ++r ) {
				const auto i = freeSet[r];
				for( std::size_t k = 0; k < m; ++k ) {
					a[r][k] = q( i, freeSet[k] );
				}
				a[r][m] = y[i];
				rhs[r] = 1.0;
				for( std::size_t j = 0; j < n; ++j ) {
					if( state[j] == 1 ) {
						rhs[r] -= q( i, j ) * c;
					}
				}
				a[m][r] = y[i];
			}
			for( std::size_t j = 0; j < n; ++j ) {
				if( state[j] == 1 ) {
					rhs[m] -= y[j] * c;
				}
			}
			std::vector<double> x;
			if( !solve_linear( a, rhs, x ) ) {
				continue;
			}
			bool inside = true;
			for( std::size_t r = 0; r < m; ++r ) {
				if( x[r] < -1e-9 || x[r] > c + 1e-9 ) {
					inside = false;
				}
				alpha[freeSet[r]] = x[r];
			}
			if( !inside ) {
				continue;
			}
		}
		double balance = 0.0;
		for( std::size_t i = 0; i < n; ++i ) {
			balance += y[i] * alpha[i];
		}
		if( std::fabs( balance ) > 1e-9 ) {
			continue;
		}
		double objective = 0.0;
		for( std::size_t i = 0; i < n; ++i ) {
			objective += alpha[i];
			for( std::size_t j = 0; j < n; ++j ) {
				objective -= 0.5 * alpha[i] * alpha[j] * q( i, j );
			}
		}
		if( objective > best.objective ) {
			best = { alpha, objective };
		}
	}
	return best;
}

// Scratch directory removed on destruction.
class TempDir {
public:
	explicit TempDir( const std::string& tag )
	{
		std::random_device rd;
		path_ = std::filesystem::temp_directory_path() / ( "nblgc_" + tag + "_" + std::to_string( rd() ) );
		std::filesystem::create_directories( path_ );
	}
	~TempDir()
	{
		std::error_code ec;
		std::filesystem::remove_all( path_, ec );
	}
	TempDir( const TempDir& ) = delete;
	TempDir& operator=( const TempDir& ) = delete;

	const std::filesystem::path& path() const { return path_; }

private:
	std::filesystem::path path_;
};

inline void write_bytes( const std::filesystem::path& path, const std::string& bytes )
{
	std::filesystem::create_directories( path.parent_path() );
	std::ofstream out( path, std::ios::binary );
	out << bytes;
}

inline std::string read_bytes( const std::filesystem::path& path )
{
	std::ifstream in( path, std::ios::binary );
	return std::string( std::istreambuf_iterator<char>( in ), std::istreambuf_iterator<char>() );
}

// Synthetic face-like dataset: each class has a smooth prototype pattern; images add small noise.
// Written as binary PGM under root/<class>/<nn>.pgm.
inline void write_synthetic_dataset( const std::filesystem::path& root, int classes, int perClass, int size,
	std::uint64_t seed )
{
	std::mt19937_64 rng( seed );
	std::uniform_real_distribution<double> phase( 0.0, 6.283185307179586 );
	std::normal_distribution<double> noise( 0.0, 6.0 );
	for( int c = 0; c < classes; ++c ) {
		const double fx = 0.15 + 0.05 * ( c % 5 );
		const double fy = 0.10 + 0.04 * ( c / 5 % 5 );
		const double px = phase( rng );
		const double py = phase( rng );
		for( int k = 0; k < perClass; ++k ) {
			std::string bytes = "P5\n" + std::to_string( size ) + " " + std::to_string( size ) + "\n255\n";
			for( int r = 0; r < size; ++r ) {
				for( int col = 0; col < size; ++col ) {
					double v = 128 + 60 * std::sin( fx * col + px ) * std::cos( fy * r + py ) + noise( rng );
					v = std::clamp( v, 0.0, 255.0 );
					bytes.push_back( static_cast<char>( static_cast<unsigned char>( std::lround( v ) ) ) );
				}
			}
			char name[32];
			std::snprintf( name, sizeof( name ), "%02d.pgm", k + 1 );
			char cls[32];
			std::snprintf( cls, sizeof( cls ), "c%02d", c + 1 );
			write_bytes( root / cls / name, bytes );
		}
	}
}

} // namespace nblgc::testing
