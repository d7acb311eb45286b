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

#include "eval.hpp"
#include "features.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nblgc {

struct FeatureRow {
	std::string path;
	std::string label;
	FeatureVector features;
};

// RFC 4180 quoting when the field contains a comma, quote, or line break.
std::string csv_field( const std::string& text );

// `path,class,variant,ref,v0,...` with 12 significant digits.
void write_features_csv( std::ostream& out, const std::vector<FeatureRow>& rows );

// `section,key,value`: config echo, totals, per-class counts. 6 significant digits.
void write_report_csv( std::ostream& out, const EvalReport& report );

// `fold,accuracy,correct,total`, one row per fold plus a `mean` row.
void write_folds_csv( std::ostream& out, const EvalReport& report );

// `threshold,FAR,GAR`, ascending threshold, followed by a comment footer.
void write_roc_csv( std::ostream& out, const EvalReport& report );

} // namespace nblgc
