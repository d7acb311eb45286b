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

#include "distance.hpp"
#include "sample.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nblgc {

struct KnnModel {
	std::vector<LabeledSample> training;
	std::size_t neighborsK = 1;
	DistanceKind distance = DistanceKind::Log;
};

struct Neighbor {
	std::size_t index = 0; // into KnnModel::training
	double distance = 0.0;
};

struct KnnPrediction {
	std::string label;
	std::vector<Neighbor> neighbors; // nearest first
};

// Majority vote among the k nearest training vectors (ties between equal distances go to the
// lower training index). Vote ties go to the smallest summed distance, then to class order.
KnnPrediction knn_predict( const KnnModel& model, std::span<const double> query );

} // namespace nblgc
