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

#include "svm.hpp"

#include "distance.hpp"
#include "error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nblgc {

namespace {

constexpr double kMinCurvature = 1e-12;

double bias_from_gradient( std::span<const double> alphas, std::span<const int> y, std::span<const double> gradient,
	double c )
{
	double upper = std::numeric_limits<double>::infinity();
	double lower = -std::numeric_limits<double>::infinity();
	double freeSum = 0.0;
	std::size_t freeCount = 0;
	for( std::size_t i = 0; i < alphas.size(); ++i ) {
		const double yG = y[i] * gradient[i];
		if( alphas[i] >= c ) {
			if( y[i] == -1 ) {
				upper = std::min( upper, yG );
			} else {
				lower = std::max( lower, yG );
			}
		} else if( alphas[i] <= 0.0 ) {
			if( y[i] == 1 ) {
				upper = std::min( upper, yG );
			} else {
				lower = std::max( lower, yG );
			}
		} else {
			++freeCount;
			freeSum += yG;
		}
	}
	const double rho = freeCount > 0 ? freeSum / static_cast<double>( freeCount ) : ( upper + lower ) / 2;
	return -rho;
}

} // namespace

DualSolution solve_binary_dual( std::span<const double> gram, std::span<const int> y, double c, double tol,
	std::size_t maxIterations )
{
	const std::size_t n = y.size();
	require( gram.size() == n * n, ErrorCode::InvalidArgument, "Gram matrix size does not match label count" );
	require( c > 0.0 && std::isfinite( c ), ErrorCode::InvalidArgument, "C must be a positive finite number" );
	require( std::find( y.begin(), y.end(), 1 ) != y.end() && std::find( y.begin(), y.end(), -1 ) != y.end(),
		ErrorCode::Data, "binary problem needs samples of both signs" );

	auto q = [&]( std::size_t i, std::size_t j ) { return y[i] * y[j] * gram[i * n + j]; };

	DualSolution solution;
	auto& alpha = solution.alphas;
	alpha.assign( n, 0.0 );
	std::vector<double> gradient( n, -1.0 ); // G = Q alpha - 1

	const auto inUp = [&]( std::size_t t ) { return ( y[t] == 1 && alpha[t] < c ) || ( y[t] == -1 && alpha[t] > 0 ); };
	const auto inLow = [&]( std::size_t t ) { return ( y[t] == -1 && alpha[t] < c ) || ( y[t] == 1 && alpha[t] > 0 ); };

	while( true ) {
		std::size_t i = n;
		std::size_t j = n;
		double maxUp = -std::numeric_limits<double>::infinity();
		double minLow = std::numeric_limits<double>::infinity();
		for( std::size_t t = 0; t < n; ++t ) {
			const double score = -y[t] * gradient[t];
			if( inUp( t ) && score > maxUp ) {
				maxUp = score;
				i = t;
			}
			if( inLow( t ) && score < minLow ) {
				minLow = score;
				j = t;
			}
		}
		solution.kktGap = ( i == n || j == n ) ? 0.0 : maxUp - minLow;
		if( i == n || j == n || solution.kktGap < tol ) {
			solution.converged = true;
			break;
		}
		if( solution.iterations >= maxIterations ) {
			break;
		}
		++solution.iterations;

		const double oldI = alpha[i];
		const double oldJ = alpha[j];
		if( y[i] != y[j] ) {
			double curvature = q( i, i ) + q( j, j ) + 2 * q( i, j );
			if( curvature <= 0 ) {
				curvature = kMinCurvature;
			}
			const double delta = ( -gradient[i] - gradient[j] ) / curvature;
			const double diff = alpha[i] - alpha[j];
			alpha[i] += delta;
			alpha[j] += delta;
			if( diff > 0 ) {
				if( alpha[j] < 0 ) {
					alpha[j] = 0;
					alpha[i] = diff;
				}
			} else if( alpha[i] < 0 ) {
				alpha[i] = 0;
				alpha[j] = -diff;
			}
			if( diff > 0 ) {
				if( alpha[i] > c ) {
					alpha[i] = c;
					alpha[j] = c - diff;
				}
			} else if( alpha[j] > c ) {
				alpha[j] = c;
				alpha[i] = c + diff;
			}
		} else {
			double curvature = q( i, i ) + q( j, j ) - 2 * q( i, j );
			if( curvature <= 0 ) {
				curvature = kMinCurvature;
			}
			const double delta = ( gradient[i] - gradient[j] ) / curvature;
			const double sum = alpha[i] + alpha[j];
			alpha[i] -= delta;
			alpha[j] += delta;
			if( sum > c ) {
				if( alpha[i] > c ) {
					alpha[i] = c;
					alpha[j] = sum - c;
				}
				if( alpha[j] > c ) {
					alpha[j] = c;
					alpha[i] = sum - c;
				}
			} else {
				if( alpha[j] < 0 ) {
					alpha[j] = 0;
					alpha[i] = sum;
				}
				if( alpha[i] < 0 ) {
					alpha[i] = 0;
					alpha[j] = sum;
				}
			}
		}

		const double deltaI = alpha[i] - oldI;
		const double deltaJ = alpha[j] - oldJ;
		for( std::size_t k = 0; k < n; ++k ) {
			gradient[k] += q( k, i ) * deltaI + q( k, j ) * deltaJ;
		}
	}

	solution.bias = bias_from_gradient( alpha, y, gradient, c );
	// W(alpha) = sum(alpha) - 1/2 alpha' Q alpha = -1/2 sum alpha_i (G_i - 1)
	double objective = 0.0;
	for( std::size_t t = 0; t < n; ++t ) {
		objective += alpha[t] * ( 1.0 - gradient[t] );
	}
	solution.objective = objective / 2;
	return solution;
}

SvmModel svm_train( const std::vector<LabeledSample>& data, const SvmParams& params, unsigned workers,
	std::vector<MachineDiagnostics>* diagnostics )
{
	require( params.degree == 1 || params.degree == 2, ErrorCode::InvalidArgument, "SVM kernel degree must be 1 or 2" );
	require( params.c > 0.0 && std::isfinite( params.c ), ErrorCode::InvalidArgument, "SVM C must be positive" );
	require( params.tol > 0.0, ErrorCode::InvalidArgument, "SVM tolerance must be positive" );
	require( params.maxPasses >= 1, ErrorCode::InvalidArgument, "SVM max passes must be >= 1" );
	require( !data.empty(), ErrorCode::Data, "SVM training set is empty" );
	const std::size_t dims = data.front().features.size();
	for( const auto& sample : data ) {
		require( sample.features.size() == dims, ErrorCode::InvalidArgument, "inconsistent feature vector lengths" );
		require( std::all_of( sample.features.begin(), sample.features.end(), []( double v ) { return std::isfinite( v ); } ),
			ErrorCode::Data, "non-finite feature value in sample of class '" + sample.label + "'" );
	}

	SvmModel model;
	model.params = params;
	model.classes = class_order( data );
	require( model.classes.size() >= 2, ErrorCode::Data, "SVM training needs at least two classes" );

	std::vector<std::vector<std::size_t>> members( model.classes.size() );
	for( std::size_t s = 0; s < data.size(); ++s ) {
		const auto pos = std::lower_bound( model.classes.begin(), model.classes.end(), data[s].label );
		members[static_cast<std::size_t>( pos - model.classes.begin() )].push_back( s );
	}

	std::vector<std::pair<std::size_t, std::size_t>> pairs;
	for( std::size_t a = 0; a + 1 < model.classes.size(); ++a ) {
		for( std::size_t b = a + 1; b < model.classes.size(); ++b ) {
			pairs.emplace_back( a, b );
		}
	}
	model.machines.resize( pairs.size() );
	std::vector<MachineDiagnostics> diag( pairs.size() );

	parallel_for( pairs.size(), workers, [&]( std::size_t p ) {
		const auto [a, b] = pairs[p];
		std::vector<std::size_t> index = members[a];
		index.insert( index.end(), members[b].begin(), members[b].end() );
		std::vector<int> labels( index.size(), -1 );
		std::fill( labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>( members[a].size() ), 1 );

		const std::size_t n = index.size();
		std::vector<double> gram( n * n );
		for( std::size_t r = 0; r < n; ++r ) {
			for( std::size_t col = r; col < n; ++col ) {
				const double k = kernel_poly( data[index[r]].features, data[index[col]].features, params.degree, params.offset );
				gram[r * n + col] = k;
				gram[col * n + r] = k;
			}
		}
		auto solution = solve_binary_dual( gram, labels, params.c, params.tol, params.maxPasses * n );

		auto& machine = model.machines[p];
		machine.positiveClass = a;
		machine.negativeClass = b;
		machine.bias = solution.bias;
		for( std::size_t t = 0; t < n; ++t ) {
			if( solution.alphas[t] > 0.0 ) {
				machine.supportVectors.push_back( data[index[t]].features );
				machine.coefficients.push_back( labels[t] * solution.alphas[t] );
			}
		}
		diag[p] = { a, b, std::move( solution ) };
	} );

	if( diagnostics != nullptr ) {
		*diagnostics = std::move( diag );
	}
	return model;
}

double decision_value( const BinaryMachine& machine, const SvmParams& params, std::span<const double> query )
{
	double sum = machine.bias;
	for( std::size_t s = 0; s < machine.supportVectors.size(); ++s ) {
		sum += machine.coefficients[s] * kernel_poly( machine.supportVectors[s], query, params.degree, params.offset );
	}
	return sum;
}

SvmPrediction svm_predict( const SvmModel& model, std::span<const double> query )
{
	require( !model.machines.empty() && model.classes.size() >= 2, ErrorCode::InvalidArgument, "SVM model is empty" );

	SvmPrediction prediction;
	prediction.votes.assign( model.classes.size(), 0 );
	prediction.voteMagnitude.assign( model.classes.size(), 0.0 );
	for( const auto& machine : model.machines ) {
		const double value = decision_value( machine, model.params, query );
		const std::size_t winner = value >= 0.0 ? machine.positiveClass : machine.negativeClass;
		++prediction.votes[winner];
		prediction.voteMagnitude[winner] += std::abs( value );
	}

	std::size_t best = 0;
	for( std::size_t k = 1; k < model.classes.size(); ++k ) {
		if( prediction.votes[k] > prediction.votes[best]
			|| ( prediction.votes[k] == prediction.votes[best] && prediction.voteMagnitude[k] > prediction.voteMagnitude[best] ) )
		{
			best = k;
		}
	}
	prediction.label = model.classes[best];
	return prediction;
}

} // namespace nblgc
