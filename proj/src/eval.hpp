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

#include "classifier.hpp"
#include "distance.hpp"
#include "sample.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace nblgc {

enum class SplitMode {
	ByIndex,       // first n images of each class, in load order
	SeededShuffle, // per-class permutation drawn from the seed first
};

struct SplitSpec {
	std::size_t trainPerClass = 7;
	SplitMode mode = SplitMode::ByIndex;
	std::uint64_t seed = 0;
};

struct SplitIndices {
	std::vector<std::size_t> train; // indices into the dataset, ascending within each class
	std::vector<std::size_t> test;
};

struct ClassCount {
	std::string label;
	std::size_t correct = 0;
	std::size_t total = 0;
};

struct FoldResult {
	std::size_t fold = 0;
	std::size_t correct = 0;
	std::size_t total = 0;
	double accuracy = 0.0;
};

struct RocPoint {
	double threshold = 0.0;
	double far = 0.0; // percent
	double gar = 0.0; // percent
};

struct EvalReport {
	std::vector<std::pair<std::string, std::string>> config; // echo, in insertion order
	std::size_t correct = 0;
	std::size_t total = 0;
	double accuracy = 0.0; // 100 * correct / total
	std::vector<ClassCount> perClass;
	std::vector<FoldResult> folds;
	double meanFoldAccuracy = 0.0;
	std::vector<RocPoint> roc; // ascending threshold
	std::size_t genuineTrials = 0;
	std::size_t impostorTrials = 0;
};

// Deterministic Fisher-Yates over [0, n) driven by mt19937_64; identical on every standard library.
std::vector<std::size_t> seeded_permutation( std::size_t n, std::mt19937_64& engine );

SplitIndices split_per_class( const std::vector<LabeledSample>& data, const SplitSpec& spec );

std::vector<LabeledSample> gather( const std::vector<LabeledSample>& data, const std::vector<std::size_t>& indices );

EvalReport evaluate( const std::vector<LabeledSample>& train, const std::vector<LabeledSample>& test,
	const ClassifierConfig& config, unsigned workers = 1 );

// Test-fold membership. Classes are laid out back to back (sorted by label, dataset order or seeded
// order inside each class) and position p goes to fold p mod k, which stratifies proportionally.
std::vector<std::vector<std::size_t>> kfold_partition( const std::vector<LabeledSample>& data, std::size_t folds,
	SplitMode mode, std::uint64_t seed );

EvalReport kfold( const std::vector<LabeledSample>& data, std::size_t folds, SplitMode mode, std::uint64_t seed,
	const ClassifierConfig& config, unsigned workers = 1 );

struct VerificationScores {
	std::vector<double> genuine;
	std::vector<double> impostor;
};

// Nearest-template verification: per test sample, the minimum distance to its own class (genuine)
// and to every other training class (impostor).
VerificationScores verification_scores( const std::vector<LabeledSample>& train, const std::vector<LabeledSample>& test,
	DistanceKind distance, unsigned workers = 1 );

// Accept iff score <= threshold. Thresholds: sweepPoints evenly spaced over [0, max score] plus
// every distinct observed score.
std::vector<RocPoint> roc_from_scores( const VerificationScores& scores, std::size_t sweepPoints = 200 );

EvalReport roc_far_gar( const std::vector<LabeledSample>& train, const std::vector<LabeledSample>& test,
	DistanceKind distance, std::size_t sweepPoints = 200, unsigned workers = 1 );

const char* to_string( SplitMode mode ) noexcept;
SplitMode parse_split_mode( const std::string& text );

} // namespace nblgc
