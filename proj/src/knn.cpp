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

#include "knn.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>

namespace nblgc {

std::vector<std::string> class_order( const std::vector<LabeledSample>& samples )
{
	std::vector<std::string> labels;
	labels.reserve( samples.size() );
	for( const auto& sample : samples ) {
		labels.push_back( sample.label );
	}
	std::sort( labels.begin(), labels.end() );
	labels.erase( std::unique( labels.begin(), labels.end() ), labels.end() );
	return labels;
}

KnnPrediction knn_predict( const KnnModel& model, std::span<const double> query )
{
	require( !model.training.empty(), ErrorCode::InvalidArgument, "KNN model has no training vectors" );
	require( model.neighborsK >= 1 && model.neighborsK <= model.training.size(), ErrorCode::InvalidArgument,
		"neighbors k = " + std::to_string( model.neighborsK ) + " must be in [1, "
			+ std::to_string( model.training.size() ) + "]" );

	std::vector<Neighbor> all( model.training.size() );
	for( std::size_t i = 0; i < all.size(); ++i ) {
		all[i] = { i, distance( model.distance, model.training[i].features, query ) };
	}
	const auto closer = []( const Neighbor& a, const Neighbor& b ) {
		return a.distance < b.distance || ( a.distance == b.distance && a.index < b.index );
	};
	const auto kth = all.begin() + static_cast<std::ptrdiff_t>( model.neighborsK );
	std::partial_sort( all.begin(), kth, all.end(), closer );
	all.erase( kth, all.end() );

	struct Tally {
		std::size_t votes = 0;
		double distanceSum = 0.0;
	};
	std::map<std::string, Tally> tallies; // ordered by label
	for( const auto& neighbor : all ) {
		auto& tally = tallies[model.training[neighbor.index].label];
		++tally.votes;
		tally.distanceSum += neighbor.distance;
	}
	auto best = tallies.begin();
	for( auto it = std::next( tallies.begin() ); it != tallies.end(); ++it ) {
		if( it->second.votes > best->second.votes
			|| ( it->second.votes == best->second.votes && it->second.distanceSum < best->second.distanceSum ) )
		{
			best = it;
		}
	}
	return { best->first, std::move( all ) };
}

} // namespace nblgc
