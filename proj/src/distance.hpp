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

#include <span>
#include <string>

namespace nblgc {

enum class DistanceKind {
	Log,       // sum ln(1 + |a_i - b_i|)
	Euclidean, // comparison baseline
};

double distance_log( std::span<const double> a, std::span<const double> b );
double distance_euclidean( std::span<const double> a, std::span<const double> b );
double distance( DistanceKind kind, std::span<const double> a, std::span<const double> b );

// (a . b + offset)^degree
double kernel_poly( std::span<const double> a, std::span<const double> b, int degree, double offset );

const char* to_string( DistanceKind kind ) noexcept;
DistanceKind parse_distance( const std::string& text );

} // namespace nblgc
