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

#include "sample.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nblgc {

struct SvmParams {
	int degree = 1;        // polynomial kernel degree, 1 or 2
	double c = 1.0;        // box constraint
	double offset = 1.0;   // kernel offset
	double tol = 1e-3;     // stopping tolerance on the maximal KKT violation
	std::size_t maxPasses = 100; // iteration cap = maxPasses * samples in the pair
};

// One pairwise machine. decision(x) >= 0 votes for positiveClass.
struct BinaryMachine {
	std::size_t positiveClass = 0; // index into SvmModel::classes
	std::size_t negativeClass = 0;
	std::vector<std::vector<double>> supportVectors;
	std::vector<double> coefficients; // label-signed multipliers y_i * alpha_i
	double bias = 0.0;
};

struct SvmModel {
	std::vector<std::string> classes; // sorted
	SvmParams params;
	std::vector<BinaryMachine> machines; // (i, j) pairs with i < j, lexicographic
};

// Result of the two-class dual solve:
//   max sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij,  0 <= alpha <= C,  sum y_i alpha_i = 0.
struct DualSolution {
	std::vector<double> alphas;
	double bias = 0.0;
	std::size_t iterations = 0;
	double kktGap = 0.0; // max violation m(alpha) - M(alpha) at exit
	bool converged = false;
	double objective = 0.0;
};

// SMO with maximal-violating-pair selection over a precomputed Gram matrix (row-major n x n).
// labels are +1 / -1 and both signs must be present.
DualSolution solve_binary_dual( std::span<const double> gram, std::span<const int> labels, double c, double tol,
	std::size_t maxIterations );

struct MachineDiagnostics {
	std::size_t positiveClass = 0;
	std::size_t negativeClass = 0;
	DualSolution solution;
};

// One-vs-one training. Pair machines are independent and may train concurrently.
SvmModel svm_train( const std::vector<LabeledSample>& data, const SvmParams& params, unsigned workers = 1,
	std::vector<MachineDiagnostics>* diagnostics = nullptr );

double decision_value( const BinaryMachine& machine, const SvmParams& params, std::span<const double> query );

struct SvmPrediction {
	std::string label;
	std::vector<std::size_t> votes;     // per class
	std::vector<double> voteMagnitude;  // per class, sum of |decision| over machines the class won
};

// One-vs-one voting. Vote ties go to the larger summed magnitude, then to class order.
SvmPrediction svm_predict( const SvmModel& model, std::span<const double> query );

} // namespace nblgc
