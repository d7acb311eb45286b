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
#include "knn.hpp"
#include "svm.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace nblgc {

enum class ClassifierKind {
	Knn,
	Svm,
};

struct ClassifierConfig {
	ClassifierKind kind = ClassifierKind::Knn;
	std::size_t neighborsK = 1;
	DistanceKind distance = DistanceKind::Log;
	SvmParams svm;
	bool zscore = false; // per-dimension standardization fitted on the training set
};

// Per-dimension (x - mean) / stddev; dimensions with zero spread keep stddev 1.
struct ZScore {
	std::vector<double> mean;
	std::vector<double> stddev;

	static ZScore fit( const std::vector<LabeledSample>& samples );
	std::vector<double> apply( std::span<const double> x ) const;
};

struct ClassifierModel {
	std::variant<KnnModel, SvmModel> model;
	std::optional<ZScore> scaler;
	std::map<std::string, std::string> metadata; // free-form provenance (feature variant, resize, ...)

	std::size_t dims() const;
};

ClassifierModel train_classifier( const std::vector<LabeledSample>& train, const ClassifierConfig& config,
	unsigned workers = 1 );

std::string predict( const ClassifierModel& model, std::span<const double> query );

// Line-oriented text format with 17 significant digits, so a reloaded model predicts identically.
void save_model( const ClassifierModel& model, std::ostream& out );
ClassifierModel load_model( std::istream& in );

const char* to_string( ClassifierKind kind ) noexcept;
ClassifierKind parse_classifier( const std::string& text );

} // namespace nblgc
