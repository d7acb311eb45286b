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

#include "nblgc/nblgc.h"

#include "classifier.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "eval.hpp"
#include "features.hpp"
#include "format.hpp"
#include "image_io.hpp"
#include "parallel.hpp"

#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

using namespace nblgc;

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

struct nblgc_dataset {
	LoadResult loaded;
	ConfigEcho echo;
	std::size_t classCount = 0;
};

struct nblgc_features {
	std::vector<FeatureRow> rows;
	std::vector<LabeledSample> samples;
	ConfigEcho echo;
	std::size_t width = 0;
	std::size_t height = 0;
};

struct nblgc_report {
	EvalReport report;
};

struct nblgc_model {
	ClassifierModel model;
};

namespace {

thread_local std::string lastError;

nblgc_status to_status( ErrorCode code )
{
	switch( code ) {
		case ErrorCode::InvalidArgument:
			return NBLGC_ERR_INVALID_ARGUMENT;
		case ErrorCode::Parse:
			return NBLGC_ERR_PARSE;
		case ErrorCode::Io:
			return NBLGC_ERR_IO;
		case ErrorCode::Data:
			return NBLGC_ERR_DATA;
		case ErrorCode::Internal:
			break;
	}
	return NBLGC_ERR_INTERNAL;
}

template<typename Body>
nblgc_status guarded( Body&& body )
{
	lastError.clear();
	try {
		body();
		return NBLGC_OK;
	} catch( const Error& error ) {
		lastError = error.what();
		return to_status( error.code() );
	} catch( const std::bad_alloc& ) {
		lastError = "out of memory";
	} catch( const std::exception& error ) {
		lastError = error.what();
	} catch( ... ) {
		lastError = "unknown error";
	}
	return NBLGC_ERR_INTERNAL;
}

void require_arg( const void* pointer, const char* name )
{
	require( pointer != nullptr, ErrorCode::InvalidArgument, std::string( name ) + " must not be NULL" );
}

ContourVariant to_variant( nblgc_variant variant )
{
	switch( variant ) {
		case NBLGC_VARIANT_G1:
			return ContourVariant::G1;
		case NBLGC_VARIANT_G2:
			return ContourVariant::G2;
		case NBLGC_VARIANT_G3:
			return ContourVariant::G3;
	}
	throw Error( ErrorCode::InvalidArgument, "invalid contour variant " + std::to_string( static_cast<int>( variant ) ) );
}

FuzzifierRef to_ref( nblgc_ref ref )
{
	switch( ref ) {
		case NBLGC_REF_AVERAGE:
			return FuzzifierRef::Average;
		case NBLGC_REF_MAXIMUM:
			return FuzzifierRef::Maximum;
		case NBLGC_REF_MINIMUM:
			return FuzzifierRef::Minimum;
	}
	throw Error( ErrorCode::InvalidArgument, "invalid fuzzifier reference " + std::to_string( static_cast<int>( ref ) ) );
}

DistanceKind to_distance( nblgc_distance distance )
{
	switch( distance ) {
		case NBLGC_DISTANCE_LOG:
			return DistanceKind::Log;
		case NBLGC_DISTANCE_EUCLIDEAN:
			return DistanceKind::Euclidean;
	}
	throw Error( ErrorCode::InvalidArgument, "invalid distance " + std::to_string( static_cast<int>( distance ) ) );
}

SplitMode to_split_mode( nblgc_split_mode mode )
{
	switch( mode ) {
		case NBLGC_SPLIT_BY_INDEX:
			return SplitMode::ByIndex;
		case NBLGC_SPLIT_SHUFFLE:
			return SplitMode::SeededShuffle;
	}
	throw Error( ErrorCode::InvalidArgument, "invalid split mode " + std::to_string( static_cast<int>( mode ) ) );
}

ClassifierConfig to_classifier( const nblgc_classifier_config& c )
{
	ClassifierConfig config;
	switch( c.kind ) {
		case NBLGC_CLASSIFIER_KNN:
			config.kind = ClassifierKind::Knn;
			break;
		case NBLGC_CLASSIFIER_SVM:
			config.kind = ClassifierKind::Svm;
			break;
		default:
			throw Error( ErrorCode::InvalidArgument, "invalid classifier kind " + std::to_string( static_cast<int>( c.kind ) ) );
	}
	config.neighborsK = c.neighbors_k;
	config.distance = to_distance( c.distance );
	config.svm.degree = c.svm_degree;
	config.svm.c = c.svm_c;
	config.svm.offset = c.svm_offset;
	config.svm.tol = c.svm_tol;
	config.svm.maxPasses = c.svm_max_passes;
	config.zscore = c.zscore != 0;
	return config;
}

SplitSpec to_split( const nblgc_split_config& s )
{
	return { s.train_per_class, to_split_mode( s.mode ), s.seed };
}

void echo_classifier( ConfigEcho& echo, const ClassifierConfig& config )
{
	echo.emplace_back( "classifier", to_string( config.kind ) );
	if( config.kind == ClassifierKind::Knn ) {
		echo.emplace_back( "k", std::to_string( config.neighborsK ) );
		echo.emplace_back( "distance", to_string( config.distance ) );
	} else {
		echo.emplace_back( "degree", std::to_string( config.svm.degree ) );
		echo.emplace_back( "C", format_real( config.svm.c, 17 ) );
		echo.emplace_back( "offset", format_real( config.svm.offset, 17 ) );
		echo.emplace_back( "tol", format_real( config.svm.tol, 17 ) );
		echo.emplace_back( "max_passes", std::to_string( config.svm.maxPasses ) );
	}
	echo.emplace_back( "zscore", config.zscore ? "1" : "0" );
}

void echo_split( ConfigEcho& echo, const SplitSpec& split, bool withTrainCount )
{
	if( withTrainCount ) {
		echo.emplace_back( "train_per_class", std::to_string( split.trainPerClass ) );
	}
	echo.emplace_back( "split_mode", to_string( split.mode ) );
	echo.emplace_back( "seed", std::to_string( split.seed ) );
}

template<typename Writer>
void write_file( const char* path, Writer&& writer )
{
	require_arg( path, "path" );
	std::ofstream out( path, std::ios::binary | std::ios::trunc );
	require( static_cast<bool>( out ), ErrorCode::Io, std::string( "cannot open " ) + path + " for writing" );
	writer( out );
	out.flush();
	require( static_cast<bool>( out ), ErrorCode::Io, std::string( "write failed for " ) + path );
}

} // namespace

extern "C" {

const char* nblgc_version( void )
{
	return "1.0.0";
}

const char* nblgc_status_string( nblgc_status status )
{
	switch( status ) {
		case NBLGC_OK:
			return "ok";
		case NBLGC_ERR_INVALID_ARGUMENT:
			return "invalid argument";
		case NBLGC_ERR_PARSE:
			return "parse error";
		case NBLGC_ERR_IO:
			return "i/o error";
		case NBLGC_ERR_DATA:
			return "data error";
		case NBLGC_ERR_INTERNAL:
			return "internal error";
	}
	return "unknown status";
}

const char* nblgc_last_error( void )
{
	return lastError.c_str();
}

void nblgc_classifier_config_init( nblgc_classifier_config* config )
{
	if( config == nullptr ) {
		return;
	}
	const ClassifierConfig defaults;
	config->kind = NBLGC_CLASSIFIER_KNN;
	config->neighbors_k = defaults.neighborsK;
	config->distance = NBLGC_DISTANCE_LOG;
	config->svm_degree = defaults.svm.degree;
	config->svm_c = defaults.svm.c;
	config->svm_offset = defaults.svm.offset;
	config->svm_tol = defaults.svm.tol;
	config->svm_max_passes = defaults.svm.maxPasses;
	config->zscore = 0;
}

void nblgc_split_config_init( nblgc_split_config* config )
{
	if( config == nullptr ) {
		return;
	}
	config->train_per_class = SplitSpec{}.trainPerClass;
	config->mode = NBLGC_SPLIT_BY_INDEX;
	config->seed = 0;
}

nblgc_status nblgc_dataset_load( const char* root, size_t width, size_t height, int skip_errors, unsigned workers,
	nblgc_dataset** out )
{
	return guarded( [&] {
		require_arg( root, "root" );
		require_arg( out, "out" );
		auto dataset = std::make_unique<nblgc_dataset>();
		dataset->loaded = load_dataset( root, { width, height, skip_errors != 0, workers } );
		std::set<std::string> classes;
		for( const auto& entry : dataset->loaded.entries ) {
			classes.insert( entry.classLabel );
		}
		dataset->classCount = classes.size();
		dataset->echo = {
			{ "data", root },
			{ "resize", std::to_string( width ) + "x" + std::to_string( height ) },
			{ "skip_errors", skip_errors != 0 ? "1" : "0" },
			{ "images", std::to_string( dataset->loaded.entries.size() ) },
			{ "classes", std::to_string( dataset->classCount ) },
		};
		*out = dataset.release();
	} );
}

void nblgc_dataset_free( nblgc_dataset* dataset )
{
	delete dataset;
}

size_t nblgc_dataset_size( const nblgc_dataset* dataset )
{
	return dataset == nullptr ? 0 : dataset->loaded.entries.size();
}

size_t nblgc_dataset_class_count( const nblgc_dataset* dataset )
{
	return dataset == nullptr ? 0 : dataset->classCount;
}

size_t nblgc_dataset_warning_count( const nblgc_dataset* dataset )
{
	return dataset == nullptr ? 0 : dataset->loaded.warnings.size();
}

const char* nblgc_dataset_warning( const nblgc_dataset* dataset, size_t index )
{
	if( dataset == nullptr || index >= dataset->loaded.warnings.size() ) {
		return nullptr;
	}
	return dataset->loaded.warnings[index].c_str();
}

nblgc_status nblgc_extract_pgm( const unsigned char* bytes, size_t length, size_t width, size_t height,
	nblgc_variant variant, nblgc_ref ref, double* out, size_t out_len, size_t* written )
{
	return guarded( [&] {
		require_arg( bytes, "bytes" );
		require_arg( written, "written" );
		require( width % 3 == 0 && height % 3 == 0 && width > 0 && height > 0, ErrorCode::InvalidArgument,
			"resize target must be a positive multiple of 3 in both dimensions" );
		const auto raw = parse_pgm( std::span<const std::uint8_t>( bytes, length ) );
		const auto features = extract( resize_bilinear( normalize_unit( raw ), width, height ), to_variant( variant ), to_ref( ref ) );
		require( out != nullptr && out_len >= features.values.size(), ErrorCode::InvalidArgument,
			"output buffer holds " + std::to_string( out_len ) + " values, need " + std::to_string( features.values.size() ) );
		std::copy( features.values.begin(), features.values.end(), out );
		*written = features.values.size();
	} );
}

nblgc_status nblgc_features_extract( const nblgc_dataset* dataset, nblgc_variant variant, nblgc_ref ref,
	unsigned workers, nblgc_features** out )
{
	return guarded( [&] {
		require_arg( dataset, "dataset" );
		require_arg( out, "out" );
		const auto contour = to_variant( variant );
		const auto reference = to_ref( ref );
		const auto& entries = dataset->loaded.entries;
		auto features = std::make_unique<nblgc_features>();
		features->rows.resize( entries.size() );
		parallel_for( entries.size(), workers, [&]( std::size_t i ) {
			features->rows[i] = { entries[i].sourcePath, entries[i].classLabel, extract( entries[i].image, contour, reference ) };
		} );
		features->samples.reserve( entries.size() );
		for( const auto& row : features->rows ) {
			features->samples.push_back( { row.features.values, row.label } );
		}
		if( !entries.empty() ) {
			features->width = entries.front().image.width;
			features->height = entries.front().image.height;
		}
		features->echo = dataset->echo;
		features->echo.emplace_back( "variant", to_string( contour ) );
		features->echo.emplace_back( "ref", to_string( reference ) );
		*out = features.release();
	} );
}

void nblgc_features_free( nblgc_features* features )
{
	delete features;
}

size_t nblgc_features_rows( const nblgc_features* features )
{
	return features == nullptr ? 0 : features->rows.size();
}

size_t nblgc_features_dims( const nblgc_features* features )
{
	return features == nullptr || features->rows.empty() ? 0 : features->rows.front().features.values.size();
}

const double* nblgc_features_row( const nblgc_features* features, size_t row )
{
	if( features == nullptr || row >= features->rows.size() ) {
		return nullptr;
	}
	return features->rows[row].features.values.data();
}

const char* nblgc_features_label( const nblgc_features* features, size_t row )
{
	if( features == nullptr || row >= features->rows.size() ) {
		return nullptr;
	}
	return features->rows[row].label.c_str();
}

nblgc_status nblgc_features_write_csv( const nblgc_features* features, const char* path )
{
	return guarded( [&] {
		require_arg( features, "features" );
		write_file( path, [&]( std::ostream& out ) { write_features_csv( out, features->rows ); } );
	} );
}

nblgc_status nblgc_evaluate( const nblgc_features* features, const nblgc_split_config* split,
	const nblgc_classifier_config* classifier, unsigned workers, nblgc_report** out )
{
	return guarded( [&] {
		require_arg( features, "features" );
		require_arg( split, "split" );
		require_arg( classifier, "classifier" );
		require_arg( out, "out" );
		const auto splitSpec = to_split( *split );
		const auto config = to_classifier( *classifier );
		const auto indices = split_per_class( features->samples, splitSpec );
		auto report = std::make_unique<nblgc_report>();
		report->report = evaluate( gather( features->samples, indices.train ), gather( features->samples, indices.test ),
			config, workers );
		auto& echo = report->report.config;
		echo.emplace_back( "command", "evaluate" );
		echo.insert( echo.end(), features->echo.begin(), features->echo.end() );
		echo_classifier( echo, config );
		echo_split( echo, splitSpec, true );
		*out = report.release();
	} );
}

nblgc_status nblgc_kfold( const nblgc_features* features, size_t folds, const nblgc_split_config* split,
	const nblgc_classifier_config* classifier, unsigned workers, nblgc_report** out )
{
	return guarded( [&] {
		require_arg( features, "features" );
		require_arg( split, "split" );
		require_arg( classifier, "classifier" );
		require_arg( out, "out" );
		const auto splitSpec = to_split( *split );
		const auto config = to_classifier( *classifier );
		auto report = std::make_unique<nblgc_report>();
		report->report = kfold( features->samples, folds, splitSpec.mode, splitSpec.seed, config, workers );
		auto& echo = report->report.config;
		echo.emplace_back( "command", "kfold" );
		echo.insert( echo.end(), features->echo.begin(), features->echo.end() );
		echo_classifier( echo, config );
		echo.emplace_back( "folds", std::to_string( folds ) );
		echo_split( echo, splitSpec, false );
		*out = report.release();
	} );
}

nblgc_status nblgc_roc( const nblgc_features* features, const nblgc_split_config* split, nblgc_distance distance,
	size_t sweep_points, unsigned workers, nblgc_report** out )
{
	return guarded( [&] {
		require_arg( features, "features" );
		require_arg( split, "split" );
		require_arg( out, "out" );
		const auto splitSpec = to_split( *split );
		const auto kind = to_distance( distance );
		const auto indices = split_per_class( features->samples, splitSpec );
		auto report = std::make_unique<nblgc_report>();
		report->report = roc_far_gar( gather( features->samples, indices.train ), gather( features->samples, indices.test ),
			kind, sweep_points, workers );
		auto& echo = report->report.config;
		echo.emplace_back( "command", "roc" );
		echo.insert( echo.end(), features->echo.begin(), features->echo.end() );
		echo.emplace_back( "distance", to_string( kind ) );
		echo.emplace_back( "sweep_points", std::to_string( sweep_points ) );
		echo_split( echo, splitSpec, true );
		*out = report.release();
	} );
}

void nblgc_report_free( nblgc_report* report )
{
	delete report;
}

double nblgc_report_accuracy( const nblgc_report* report )
{
	return report == nullptr ? 0.0 : report->report.accuracy;
}

size_t nblgc_report_fold_count( const nblgc_report* report )
{
	return report == nullptr ? 0 : report->report.folds.size();
}

double nblgc_report_fold_accuracy( const nblgc_report* report, size_t fold )
{
	if( report == nullptr || fold >= report->report.folds.size() ) {
		return 0.0;
	}
	return report->report.folds[fold].accuracy;
}

size_t nblgc_report_roc_count( const nblgc_report* report )
{
	return report == nullptr ? 0 : report->report.roc.size();
}

nblgc_status nblgc_report_roc_point( const nblgc_report* report, size_t index, double* threshold, double* far,
	double* gar )
{
	return guarded( [&] {
		require_arg( report, "report" );
		require( index < report->report.roc.size(), ErrorCode::InvalidArgument, "ROC point index out of range" );
		const auto& point = report->report.roc[index];
		if( threshold != nullptr ) {
			*threshold = point.threshold;
		}
		if( far != nullptr ) {
			*far = point.far;
		}
		if( gar != nullptr ) {
			*gar = point.gar;
		}
	} );
}

nblgc_status nblgc_report_write_csv( const nblgc_report* report, const char* path )
{
	return guarded( [&] {
		require_arg( report, "report" );
		write_file( path, [&]( std::ostream& out ) { write_report_csv( out, report->report ); } );
	} );
}

nblgc_status nblgc_report_write_folds_csv( const nblgc_report* report, const char* path )
{
	return guarded( [&] {
		require_arg( report, "report" );
		require( !report->report.folds.empty(), ErrorCode::InvalidArgument, "report has no folds" );
		write_file( path, [&]( std::ostream& out ) { write_folds_csv( out, report->report ); } );
	} );
}

nblgc_status nblgc_report_write_roc_csv( const nblgc_report* report, const char* path )
{
	return guarded( [&] {
		require_arg( report, "report" );
		require( !report->report.roc.empty(), ErrorCode::InvalidArgument, "report has no ROC points" );
		write_file( path, [&]( std::ostream& out ) { write_roc_csv( out, report->report ); } );
	} );
}

nblgc_status nblgc_model_train( const nblgc_features* features, const nblgc_classifier_config* classifier,
	unsigned workers, nblgc_model** out )
{
	return guarded( [&] {
		require_arg( features, "features" );
		require_arg( classifier, "classifier" );
		require_arg( out, "out" );
		auto model = std::make_unique<nblgc_model>();
		model->model = train_classifier( features->samples, to_classifier( *classifier ), workers );
		for( const auto& [key, value] : features->echo ) {
			if( key == "variant" || key == "ref" ) {
				model->model.metadata[key] = value;
			}
		}
		model->model.metadata["width"] = std::to_string( features->width );
		model->model.metadata["height"] = std::to_string( features->height );
		*out = model.release();
	} );
}

void nblgc_model_free( nblgc_model* model )
{
	delete model;
}

size_t nblgc_model_dims( const nblgc_model* model )
{
	return model == nullptr ? 0 : model->model.dims();
}

const char* nblgc_model_metadata( const nblgc_model* model, const char* key )
{
	if( model == nullptr || key == nullptr ) {
		return nullptr;
	}
	const auto it = model->model.metadata.find( key );
	return it == model->model.metadata.end() ? nullptr : it->second.c_str();
}

nblgc_status nblgc_model_save( const nblgc_model* model, const char* path )
{
	return guarded( [&] {
		require_arg( model, "model" );
		write_file( path, [&]( std::ostream& out ) { save_model( model->model, out ); } );
	} );
}

nblgc_status nblgc_model_load( const char* path, nblgc_model** out )
{
	return guarded( [&] {
		require_arg( path, "path" );
		require_arg( out, "out" );
		std::ifstream in( path, std::ios::binary );
		require( static_cast<bool>( in ), ErrorCode::Io, std::string( "cannot open " ) + path );
		auto model = std::make_unique<nblgc_model>();
		model->model = load_model( in );
		*out = model.release();
	} );
}

nblgc_status nblgc_model_predict( const nblgc_model* model, const double* features, size_t length, char* label,
	size_t label_cap )
{
	return guarded( [&] {
		require_arg( model, "model" );
		require_arg( features, "features" );
		require_arg( label, "label" );
		require( length == model->model.dims(), ErrorCode::InvalidArgument,
			"feature length " + std::to_string( length ) + " does not match model dimension "
				+ std::to_string( model->model.dims() ) );
		const auto predicted = predict( model->model, std::span<const double>( features, length ) );
		require( predicted.size() < label_cap, ErrorCode::InvalidArgument, "label buffer too small" );
		std::memcpy( label, predicted.c_str(), predicted.size() + 1 );
	} );
}

} // extern "C"
