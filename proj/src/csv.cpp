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

#include "csv.hpp"

#include "format.hpp"

#include <ostream>

namespace nblgc {

namespace {

constexpr int kFeatureDigits = 12;
constexpr int kReportDigits = 6;

std::string real6( double value )
{
	return format_real( value, kReportDigits );
}

} // namespace

std::string csv_field( const std::string& text )
{
	if( text.find_first_of( ",\"\r\n" ) == std::string::npos ) {
		return text;
	}
	std::string quoted = "\"";
	for( const char c : text ) {
		if( c == '"' ) {
			quoted += '"';
		}
		quoted += c;
	}
	return quoted + '"';
}

void write_features_csv( std::ostream& out, const std::vector<FeatureRow>& rows )
{
	out << "path,class,variant,ref";
	const std::size_t dims = rows.empty() ? 0 : rows.front().features.values.size();
	for( std::size_t d = 0; d < dims; ++d ) {
		out << ",v" << d;
	}
	out << '\n';
	for( const auto& row : rows ) {
		out << csv_field( row.path ) << ',' << csv_field( row.label ) << ',' << to_string( row.features.variant ) << ','
			<< to_string( row.features.ref );
		for( const double v : row.features.values ) {
			out << ',' << format_real( v, kFeatureDigits );
		}
		out << '\n';
	}
}

void write_report_csv( std::ostream& out, const EvalReport& report )
{
	out << "section,key,value\n";
	for( const auto& [key, value] : report.config ) {
		out << "config," << csv_field( key ) << ',' << csv_field( value ) << '\n';
	}
	if( report.total > 0 ) {
		out << "result,correct," << report.correct << '\n';
		out << "result,total," << report.total << '\n';
		out << "result,accuracy," << real6( report.accuracy ) << '\n';
	}
	if( !report.folds.empty() ) {
		out << "result,folds," << report.folds.size() << '\n';
		out << "result,mean_fold_accuracy," << real6( report.meanFoldAccuracy ) << '\n';
	}
	if( !report.roc.empty() ) {
		out << "result,genuine_trials," << report.genuineTrials << '\n';
		out << "result,impostor_trials," << report.impostorTrials << '\n';
		out << "result,roc_points," << report.roc.size() << '\n';
	}
	for( const auto& count : report.perClass ) {
		out << "class_correct," << csv_field( count.label ) << ',' << count.correct << '\n';
		out << "class_total," << csv_field( count.label ) << ',' << count.total << '\n';
	}
}

void write_folds_csv( std::ostream& out, const EvalReport& report )
{
	out << "fold,accuracy,correct,total\n";
	for( const auto& fold : report.folds ) {
		out << fold.fold << ',' << real6( fold.accuracy ) << ',' << fold.correct << ',' << fold.total << '\n';
	}
	out << "mean," << real6( report.meanFoldAccuracy ) << ',' << report.correct << ',' << report.total << '\n';
}

void write_roc_csv( std::ostream& out, const EvalReport& report )
{
	out << "threshold,FAR,GAR\n";
	for( const auto& point : report.roc ) {
		out << real6( point.threshold ) << ',' << real6( point.far ) << ',' << real6( point.gar ) << '\n';
	}
	out << "# GAR = genuine accepts / genuine trials, computed directly rather than as 100 - FAR\n";
}

} // namespace nblgc
