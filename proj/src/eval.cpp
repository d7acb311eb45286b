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

#include "eval.hpp"

#include "error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace nblgc {

namespace {

// Unbiased draw from [0, bound) by rejection; std::uniform_int_distribution is implementation-defined.
std::uint64_t bounded( std::mt19937_64& engine, std::uint64_t bound )
{
	const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
	std::uint64_t draw = 0;
	do {
		draw = engine();
	} while( draw >= limit );
	return draw % bound;
}

// Dataset indices grouped by label, classes in sorted order, members in dataset order.
std::map<std::string, std::vector<std::size_t>> group_by_class( const std::vector<LabeledSample>& data )
{
	std::map<std::string, std::vector<std::size_t>> groups;
	for( std::size_t i = 0; i < data.size(); ++i ) {
		groups[data[i].label].push_back( i );
	}
	return groups;
}

double percent( std::size_t part, std::size_t whole )
{
	return whole == 0 ? 0.0 : 100.0 * static_cast<double>( part ) / static_cast<double>( whole );
}

} // namespace

std::vector<std::size_t> seeded_permutation( std::size_t n, std::mt19937_64& engine )
{
	std::vector<std::size_t> order( n );
	for( std::size_t i = 0; i < n; ++i ) {
		order[i] = i;
	}
	for( std::size_t i = n; i > 1; --i ) {
		std::swap( order[i - 1], order[bounded( engine, i )] );
	}
	return order;
}

SplitIndices split_per_class( const std::vector<LabeledSample>& data, const SplitSpec& spec )
{
	require( spec.trainPerClass >= 1, ErrorCode::InvalidArgument, "training images per class must be >= 1" );
	require( !data.empty(), ErrorCode::Data, "cannot split an empty dataset" );
	const auto groups = group_by_class( data );
	for( const auto& [label, members] : groups ) {
		require( members.size() > spec.trainPerClass, ErrorCode::Data,
			"class '" + label + "' has " + std::to_string( members.size() ) + " images; need more than "
				+ std::to_string( spec.trainPerClass ) + " to leave a test image" );
	}

	SplitIndices split;
	std::mt19937_64 engine( spec.seed );
	for( const auto& [label, members] : groups ) {
		std::vector<std::size_t> order = members;
		if( spec.mode == SplitMode::SeededShuffle ) {
			const auto perm = seeded_permutation( members.size(), engine );
			for( std::size_t i = 0; i < perm.size(); ++i ) {
				order[i] = members[perm[i]];
			}
		}
		std::vector<std::size_t> train( order.begin(), order.begin() + static_cast<std::ptrdiff_t>( spec.trainPerClass ) );
		std::vector<std::size_t> test( order.begin() + static_cast<std::ptrdiff_t>( spec.trainPerClass ), order.end() );
		std::sort( train.begin(), train.end() );
		std::sort( test.begin(), test.end() );
		split.train.insert( split.train.end(), train.begin(), train.end() );
		split.test.insert( split.test.end(), test.begin(), test.end() );
	}
	return split;
}

std::vector<LabeledSample> gather( const std::vector<LabeledSample>& data, const std::vector<std::size_t>& indices )
{
	std::vector<LabeledSample> out;
	out.reserve( indices.size() );
	for( const auto i : indices ) {
		out.push_back( data.at( i ) );
	}
	return out;
}

EvalReport evaluate( const std::vector<LabeledSample>& train, const std::vector<LabeledSample>& test,
	const ClassifierConfig& config, unsigned workers )
{
	require( !test.empty(), ErrorCode::Data, "test set is empty" );
	const auto model = train_classifier( train, config, workers );

	std::vector<std::string> predicted( test.size() );
	parallel_for( test.size(), workers, [&]( std::size_t i ) { predicted[i] = predict( model, test[i].features ); } );

	EvalReport report;
	std::map<std::string, ClassCount> perClass;
	for( std::size_t i = 0; i < test.size(); ++i ) {
		auto& count = perClass[test[i].label];
		count.label = test[i].label;
		++count.total;
		if( predicted[i] == test[i].label ) {
			++count.correct;
			++report.correct;
		}
	}
	report.total = test.size();
	report.accuracy = percent( report.correct, report.total );
	for( auto& [label, count] : perClass ) {
		report.perClass.push_back( count );
	}
	return report;
}

std::vector<std::vector<std::size_t>> kfold_partition( const std::vector<LabeledSample>& data, std::size_t folds,
	SplitMode mode, std::uint64_t seed )
{
	require( folds >= 2, ErrorCode::InvalidArgument, "k-fold needs at least 2 folds" );
	require( data.size() >= folds, ErrorCode::Data,
		"dataset of " + std::to_string( data.size() ) + " samples is smaller than " + std::to_string( folds ) + " folds" );

	std::vector<std::vector<std::size_t>> partition( folds );
	std::mt19937_64 engine( seed );
	std::size_t position = 0;
	for( const auto& [label, members] : group_by_class( data ) ) {
		std::vector<std::size_t> order = members;
		if( mode == SplitMode::SeededShuffle ) {
			const auto perm = seeded_permutation( members.size(), engine );
			for( std::size_t i = 0; i < perm.size(); ++i ) {
				order[i] = members[perm[i]];
			}
		}
		for( const auto index : order ) {
			partition[position++ % folds].push_back( index );
		}
	}
	for( auto& fold : partition ) {
		std::sort( fold.begin(), fold.end() );
	}
	return partition;
}

EvalReport kfold( const std::vector<LabeledSample>& data, std::size_t folds, SplitMode mode, std::uint64_t seed,
	const ClassifierConfig& config, unsigned workers )
{
	const auto partition = kfold_partition( data, folds, mode, seed );
	std::vector<EvalReport> foldReports( folds );
	parallel_for( folds, workers, [&]( std::size_t f ) {
		std::vector<std::size_t> trainIndices;
		for( std::size_t g = 0; g < folds; ++g ) {
			if( g != f ) {
				trainIndices.insert( trainIndices.end(), partition[g].begin(), partition[g].end() );
			}
		}
		std::sort( trainIndices.begin(), trainIndices.end() );
		foldReports[f] = evaluate( gather( data, trainIndices ), gather( data, partition[f] ), config, 1 );
	} );

	EvalReport report;
	std::map<std::string, ClassCount> perClass;
	double accuracySum = 0.0;
	for( std::size_t f = 0; f < folds; ++f ) {
		const auto& fr = foldReports[f];
		report.folds.push_back( { f, fr.correct, fr.total, fr.accuracy } );
		report.correct += fr.correct;
		report.total += fr.total;
		accuracySum += fr.accuracy;
		for( const auto& count : fr.perClass ) {
			auto& merged = perClass[count.label];
			merged.label = count.label;
			merged.correct += count.correct;
			merged.total += count.total;
		}
	}
	report.accuracy = percent( report.correct, report.total );
	report.meanFoldAccuracy = accuracySum / static_cast<double>( folds );
	for( auto& [label, count] : perClass ) {
		report.perClass.push_back( count );
	}
	return report;
}

VerificationScores verification_scores( const std::vector<LabeledSample>& train, const std::vector<LabeledSample>& test,
	DistanceKind distanceKind, unsigned workers )
{
	const auto classes = class_order( train );
	std::vector<std::size_t> trainClass( train.size() );
	for( std::size_t i = 0; i < train.size(); ++i ) {
		trainClass[i] = static_cast<std::size_t>(
			std::lower_bound( classes.begin(), classes.end(), train[i].label ) - classes.begin() );
	}

	// minimum[t][c]: closest training sample of class c to test sample t
	std::vector<std::vector<double>> minimum( test.size() );
	parallel_for( test.size(), workers, [&]( std::size_t t ) {
		auto& row = minimum[t];
		row.assign( classes.size(), std::numeric_limits<double>::infinity() );
		for( std::size_t i = 0; i < train.size(); ++i ) {
			row[trainClass[i]] = std::min( row[trainClass[i]], distance( distanceKind, train[i].features, test[t].features ) );
		}
	} );

	VerificationScores scores;
	for( std::size_t t = 0; t < test.size(); ++t ) {
		for( std::size_t c = 0; c < classes.size(); ++c ) {
			( classes[c] == test[t].label ? scores.genuine : scores.impostor ).push_back( minimum[t][c] );
		}
	}
	return scores;
}

std::vector<RocPoint> roc_from_scores( const VerificationScores& scores, std::size_t sweepPoints )
{
	require( !scores.genuine.empty() && !scores.impostor.empty(), ErrorCode::Data,
		"ROC needs at least one genuine and one impostor trial" );
	require( sweepPoints >= 2, ErrorCode::InvalidArgument, "ROC sweep needs at least 2 points" );

	auto genuine = scores.genuine;
	auto impostor = scores.impostor;
	std::sort( genuine.begin(), genuine.end() );
	std::sort( impostor.begin(), impostor.end() );
	const double top = std::max( genuine.back(), impostor.back() );

	std::vector<double> thresholds;
	thresholds.reserve( sweepPoints + genuine.size() + impostor.size() );
	for( std::size_t i = 0; i < sweepPoints; ++i ) {
		thresholds.push_back( i + 1 == sweepPoints ? top : top * static_cast<double>( i ) / static_cast<double>( sweepPoints - 1 ) );
	}
	thresholds.insert( thresholds.end(), genuine.begin(), genuine.end() );
	thresholds.insert( thresholds.end(), impostor.begin(), impostor.end() );
	std::sort( thresholds.begin(), thresholds.end() );
	thresholds.erase( std::unique( thresholds.begin(), thresholds.end() ), thresholds.end() );

	std::vector<RocPoint> points;
	points.reserve( thresholds.size() );
	for( const double t : thresholds ) {
		const auto genuineAccepts = static_cast<std::size_t>( std::upper_bound( genuine.begin(), genuine.end(), t ) - genuine.begin() );
		const auto impostorAccepts = static_cast<std::size_t>( std::upper_bound( impostor.begin(), impostor.end(), t ) - impostor.begin() );
		points.push_back( { t, percent( impostorAccepts, impostor.size() ), percent( genuineAccepts, genuine.size() ) } );
	}
	return points;
}

EvalReport roc_far_gar( const std::vector<LabeledSample>& train, const std::vector<LabeledSample>& test,
	DistanceKind distanceKind, std::size_t sweepPoints, unsigned workers )
{
	require( class_order( train ).size() >= 2, ErrorCode::Data, "ROC needs at least two training classes" );
	const auto scores = verification_scores( train, test, distanceKind, workers );
	EvalReport report;
	report.roc = roc_from_scores( scores, sweepPoints );
	report.genuineTrials = scores.genuine.size();
	report.impostorTrials = scores.impostor.size();
	return report;
}

const char* to_string( SplitMode mode ) noexcept
{
	return mode == SplitMode::SeededShuffle ? "shuffle" : "index";
}

SplitMode parse_split_mode( const std::string& text )
{
	if( text == "index" ) {
		return SplitMode::ByIndex;
	}
	if( text == "shuffle" ) {
		return SplitMode::SeededShuffle;
	}
	throw Error( ErrorCode::InvalidArgument, "unknown split mode '" + text + "' (expected index or shuffle)" );
}

} // namespace nblgc
