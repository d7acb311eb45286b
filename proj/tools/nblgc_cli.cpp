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

// Command-line front end. Talks to the library only through the C API.

#include "nblgc/nblgc.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>
#include <thread>
#include <vector>

namespace {

enum ExitCode {
	kSuccess = 0,
	kUsage = 1,
	kData = 2,
	kInternal = 3,
};

struct RunConfig {
	std::string data;
	std::string resize = "63x63";
	std::string variant = "G1";
	std::string ref = "avg";
	std::string classifier = "knn";
	std::size_t k = 1;
	std::string distance = "log";
	int degree = 1;
	double c = 1.0;
	double offset = 1.0;
	double tol = 1e-3;
	std::size_t maxPasses = 100;
	bool zscore = false;
	std::size_t trainPerClass = 7;
	std::string split = "index";
	std::size_t folds = 10;
	std::uint64_t seed = 0;
	std::size_t sweep = 200;
	std::string out = ".";
	unsigned workers = 0;
	bool skipErrors = false;
	std::string model;
	std::string image;

	std::size_t width = 63;
	std::size_t height = 63;
};

// Thrown to unwind with a specific exit code after the message has been printed.
struct Exit {
	int code;
};

[[noreturn]] void usage_error( const std::string& message )
{
	std::cerr << "nblgc: " << message << '\n';
	throw Exit{ kUsage };
}

void check( nblgc_status status, const std::string& what )
{
	if( status == NBLGC_OK ) {
		return;
	}
	std::cerr << "nblgc: " << what << ": " << nblgc_status_string( status ) << ": " << nblgc_last_error() << '\n';
	switch( status ) {
		case NBLGC_ERR_INVALID_ARGUMENT:
			throw Exit{ kUsage };
		case NBLGC_ERR_PARSE:
		case NBLGC_ERR_IO:
		case NBLGC_ERR_DATA:
			throw Exit{ kData };
		default:
			throw Exit{ kInternal };
	}
}

template<typename T, void ( *Free )( T* )>
struct Deleter {
	void operator()( T* p ) const { Free( p ); }
};
using DatasetPtr = std::unique_ptr<nblgc_dataset, Deleter<nblgc_dataset, nblgc_dataset_free>>;
using FeaturesPtr = std::unique_ptr<nblgc_features, Deleter<nblgc_features, nblgc_features_free>>;
using ReportPtr = std::unique_ptr<nblgc_report, Deleter<nblgc_report, nblgc_report_free>>;
using ModelPtr = std::unique_ptr<nblgc_model, Deleter<nblgc_model, nblgc_model_free>>;

void parse_resize( RunConfig& config )
{
	const auto x = config.resize.find_first_of( "xX" );
	try {
		if( x == std::string::npos ) {
			throw std::invalid_argument( "missing 'x'" );
		}
		std::size_t used = 0;
		config.width = std::stoul( config.resize.substr( 0, x ), &used );
		if( used != x ) {
			throw std::invalid_argument( "width" );
		}
		const auto rest = config.resize.substr( x + 1 );
		config.height = std::stoul( rest, &used );
		if( used != rest.size() ) {
			throw std::invalid_argument( "height" );
		}
	} catch( const std::exception& ) {
		usage_error( "--resize expects WxH, got '" + config.resize + "'" );
	}
	if( config.width == 0 || config.height == 0 || config.width % 3 != 0 || config.height % 3 != 0 ) {
		usage_error( "--resize " + config.resize + ": both dimensions must be positive multiples of 3" );
	}
}

nblgc_variant variant_of( const std::string& text )
{
	if( text == "G1" ) {
		return NBLGC_VARIANT_G1;
	}
	if( text == "G2" ) {
		return NBLGC_VARIANT_G2;
	}
	return NBLGC_VARIANT_G3;
}

nblgc_ref ref_of( const std::string& text )
{
	if( text == "max" ) {
		return NBLGC_REF_MAXIMUM;
	}
	if( text == "min" ) {
		return NBLGC_REF_MINIMUM;
	}
	return NBLGC_REF_AVERAGE;
}

nblgc_distance distance_of( const std::string& text )
{
	return text == "euclidean" ? NBLGC_DISTANCE_EUCLIDEAN : NBLGC_DISTANCE_LOG;
}

nblgc_classifier_config classifier_of( const RunConfig& config )
{
	nblgc_classifier_config classifier;
	nblgc_classifier_config_init( &classifier );
	classifier.kind = config.classifier == "svm" ? NBLGC_CLASSIFIER_SVM : NBLGC_CLASSIFIER_KNN;
	classifier.neighbors_k = config.k;
	classifier.distance = distance_of( config.distance );
	classifier.svm_degree = config.degree;
	classifier.svm_c = config.c;
	classifier.svm_offset = config.offset;
	classifier.svm_tol = config.tol;
	classifier.svm_max_passes = config.maxPasses;
	classifier.zscore = config.zscore ? 1 : 0;
	return classifier;
}

nblgc_split_config split_of( const RunConfig& config )
{
	nblgc_split_config split;
	nblgc_split_config_init( &split );
	split.train_per_class = config.trainPerClass;
	split.mode = config.split == "shuffle" ? NBLGC_SPLIT_SHUFFLE : NBLGC_SPLIT_BY_INDEX;
	split.seed = config.seed;
	return split;
}

std::string output_path( const RunConfig& config, const char* name )
{
	std::error_code ec;
	std::filesystem::create_directories( config.out, ec );
	if( ec ) {
		std::cerr << "nblgc: cannot create output directory " << config.out << ": " << ec.message() << '\n';
		throw Exit{ kData };
	}
	return ( std::filesystem::path( config.out ) / name ).string();
}

FeaturesPtr load_features( const RunConfig& config )
{
	if( config.data.empty() ) {
		usage_error( "--data is required" );
	}
	nblgc_dataset* rawDataset = nullptr;
	check( nblgc_dataset_load( config.data.c_str(), config.width, config.height, config.skipErrors ? 1 : 0,
			   config.workers, &rawDataset ),
		"loading " + config.data );
	DatasetPtr dataset( rawDataset );
	for( std::size_t w = 0; w < nblgc_dataset_warning_count( dataset.get() ); ++w ) {
		std::cerr << "nblgc: warning: " << nblgc_dataset_warning( dataset.get(), w ) << '\n';
	}
	nblgc_features* rawFeatures = nullptr;
	check( nblgc_features_extract( dataset.get(), variant_of( config.variant ), ref_of( config.ref ), config.workers,
			   &rawFeatures ),
		"extracting features" );
	return FeaturesPtr( rawFeatures );
}

int cmd_extract( const RunConfig& config )
{
	const auto features = load_features( config );
	const auto path = output_path( config, "features.csv" );
	check( nblgc_features_write_csv( features.get(), path.c_str() ), "writing " + path );
	std::cout << "wrote " << nblgc_features_rows( features.get() ) << " rows x " << nblgc_features_dims( features.get() )
			  << " features to " << path << '\n';
	return kSuccess;
}

int cmd_evaluate( const RunConfig& config )
{
	const auto features = load_features( config );
	const auto split = split_of( config );
	const auto classifier = classifier_of( config );
	nblgc_report* raw = nullptr;
	check( nblgc_evaluate( features.get(), &split, &classifier, config.workers, &raw ), "evaluating" );
	ReportPtr report( raw );
	const auto path = output_path( config, "report.csv" );
	check( nblgc_report_write_csv( report.get(), path.c_str() ), "writing " + path );
	std::printf( "accuracy %.4f%%\n", nblgc_report_accuracy( report.get() ) );
	return kSuccess;
}

int cmd_kfold( const RunConfig& config )
{
	const auto features = load_features( config );
	const auto split = split_of( config );
	const auto classifier = classifier_of( config );
	nblgc_report* raw = nullptr;
	check( nblgc_kfold( features.get(), config.folds, &split, &classifier, config.workers, &raw ), "k-fold" );
	ReportPtr report( raw );
	const auto foldsPath = output_path( config, "folds.csv" );
	const auto reportPath = output_path( config, "report.csv" );
	check( nblgc_report_write_folds_csv( report.get(), foldsPath.c_str() ), "writing " + foldsPath );
	check( nblgc_report_write_csv( report.get(), reportPath.c_str() ), "writing " + reportPath );
	for( std::size_t f = 0; f < nblgc_report_fold_count( report.get() ); ++f ) {
		std::printf( "fold %zu: %.4f%%\n", f, nblgc_report_fold_accuracy( report.get(), f ) );
	}
	std::printf( "pooled accuracy %.4f%%\n", nblgc_report_accuracy( report.get() ) );
	return kSuccess;
}

int cmd_roc( const RunConfig& config )
{
	const auto features = load_features( config );
	const auto split = split_of( config );
	nblgc_report* raw = nullptr;
	check( nblgc_roc( features.get(), &split, distance_of( config.distance ), config.sweep, config.workers, &raw ), "ROC" );
	ReportPtr report( raw );
	const auto rocPath = output_path( config, "roc.csv" );
	const auto reportPath = output_path( config, "report.csv" );
	check( nblgc_report_write_roc_csv( report.get(), rocPath.c_str() ), "writing " + rocPath );
	check( nblgc_report_write_csv( report.get(), reportPath.c_str() ), "writing " + reportPath );
	std::cout << "wrote " << nblgc_report_roc_count( report.get() ) << " ROC points to " << rocPath << '\n';
	return kSuccess;
}

int cmd_train( const RunConfig& config )
{
	const auto features = load_features( config );
	const auto classifier = classifier_of( config );
	nblgc_model* raw = nullptr;
	check( nblgc_model_train( features.get(), &classifier, config.workers, &raw ), "training" );
	ModelPtr model( raw );
	const auto path = output_path( config, "model.txt" );
	check( nblgc_model_save( model.get(), path.c_str() ), "writing " + path );
	std::cout << "wrote model to " << path << '\n';
	return kSuccess;
}

int cmd_predict( RunConfig config )
{
	if( config.model.empty() || config.image.empty() ) {
		usage_error( "predict needs --model and --image" );
	}
	nblgc_model* raw = nullptr;
	check( nblgc_model_load( config.model.c_str(), &raw ), "loading " + config.model );
	ModelPtr model( raw );
	// The model records the feature settings it was trained with; they take precedence.
	if( const char* v = nblgc_model_metadata( model.get(), "variant" ) ) {
		config.variant = v;
	}
	if( const char* r = nblgc_model_metadata( model.get(), "ref" ) ) {
		config.ref = r;
	}
	const char* w = nblgc_model_metadata( model.get(), "width" );
	const char* h = nblgc_model_metadata( model.get(), "height" );
	if( w != nullptr && h != nullptr ) {
		config.resize = std::string( w ) + "x" + h;
		parse_resize( config );
	}

	std::ifstream in( config.image, std::ios::binary );
	if( !in ) {
		std::cerr << "nblgc: cannot open " << config.image << '\n';
		return kData;
	}
	const std::vector<unsigned char> bytes( ( std::istreambuf_iterator<char>( in ) ), std::istreambuf_iterator<char>() );
	std::vector<double> features( ( config.width / 3 ) * ( config.height / 3 ) );
	std::size_t written = 0;
	check( nblgc_extract_pgm( bytes.data(), bytes.size(), config.width, config.height, variant_of( config.variant ),
			   ref_of( config.ref ), features.data(), features.size(), &written ),
		"extracting " + config.image );
	std::vector<char> label( 4096 );
	check( nblgc_model_predict( model.get(), features.data(), written, label.data(), label.size() ), "predicting" );
	std::cout << label.data() << '\n';
	return kSuccess;
}

} // namespace

int main( int argc, char** argv )
{
	CLI::App app{ "Non-binary local gradient contour face descriptor: extraction, classification and evaluation" };
	app.set_config( "--config", "", "Read options from a TOML/INI file; command-line flags take precedence" );
	app.fallthrough();
	app.require_subcommand( 1 );

	RunConfig config;
	app.add_option( "--data", config.data, "Dataset root laid out as <root>/<class>/<image>.pgm" );
	app.add_option( "--resize", config.resize, "Resize target WxH, multiples of 3" )->capture_default_str();
	app.add_option( "--variant", config.variant, "Gradient contour loop" )
		->check( CLI::IsMember( { "G1", "G2", "G3" } ) )
		->capture_default_str();
	app.add_option( "--ref", config.ref, "Fuzzifier reference gray level" )
		->check( CLI::IsMember( { "avg", "max", "min" } ) )
		->capture_default_str();
	app.add_option( "--classifier", config.classifier, "Classifier" )
		->check( CLI::IsMember( { "knn", "svm" } ) )
		->capture_default_str();
	app.add_option( "--k", config.k, "KNN neighbor count" )->check( CLI::PositiveNumber )->capture_default_str();
	app.add_option( "--distance", config.distance, "KNN / ROC distance" )
		->check( CLI::IsMember( { "log", "euclidean" } ) )
		->capture_default_str();
	app.add_option( "--degree", config.degree, "SVM polynomial kernel degree" )
		->check( CLI::IsMember( { 1, 2 } ) )
		->capture_default_str();
	app.add_option( "--C", config.c, "SVM box constraint" )->check( CLI::PositiveNumber )->capture_default_str();
	app.add_option( "--offset", config.offset, "SVM kernel offset" )->capture_default_str();
	app.add_option( "--tol", config.tol, "SVM KKT tolerance" )->check( CLI::PositiveNumber )->capture_default_str();
	app.add_option( "--max-passes", config.maxPasses, "SVM iteration cap per pair, in multiples of the pair size" )
		->check( CLI::PositiveNumber )
		->capture_default_str();
	app.add_flag( "--zscore", config.zscore, "Standardize features on the training set" );
	app.add_option( "--train-per-class", config.trainPerClass, "Training images per class" )
		->check( CLI::PositiveNumber )
		->capture_default_str();
	app.add_option( "--split", config.split, "Per-class ordering before splitting or folding" )
		->check( CLI::IsMember( { "index", "shuffle" } ) )
		->capture_default_str();
	app.add_option( "--folds", config.folds, "Cross-validation folds" )->capture_default_str();
	app.add_option( "--seed", config.seed, "Seed for shuffled splits" )->capture_default_str();
	app.add_option( "--sweep", config.sweep, "Evenly spaced ROC thresholds" )->capture_default_str();
	app.add_option( "--out", config.out, "Output directory" )->capture_default_str();
	app.add_option( "--workers", config.workers, "Worker threads, 0 = all cores" )
		->envname( "NBLGC_WORKERS" )
		->capture_default_str();
	app.add_flag( "--skip-errors", config.skipErrors, "Warn and continue on unreadable images" );
	app.add_option( "--model", config.model, "Model file (predict)" );
	app.add_option( "--image", config.image, "PGM image (predict)" );

	auto* extract = app.add_subcommand( "extract", "Write features.csv for every image" );
	auto* evaluate = app.add_subcommand( "evaluate", "Train/test split, write report.csv" );
	auto* kfold = app.add_subcommand( "kfold", "Stratified k-fold cross-validation, write folds.csv and report.csv" );
	auto* roc = app.add_subcommand( "roc", "FAR/GAR threshold sweep, write roc.csv and report.csv" );
	auto* train = app.add_subcommand( "train", "Train on every image, write model.txt" );
	auto* predictCmd = app.add_subcommand( "predict", "Classify one PGM image with a saved model" );

	try {
		app.parse( argc, argv );
	} catch( const CLI::ParseError& e ) {
		const int code = app.exit( e );
		return code == 0 ? kSuccess : kUsage;
	}

	try {
		parse_resize( config );
		if( *extract ) {
			return cmd_extract( config );
		}
		if( *evaluate ) {
			return cmd_evaluate( config );
		}
		if( *kfold ) {
			return cmd_kfold( config );
		}
		if( *roc ) {
			return cmd_roc( config );
		}
		if( *train ) {
			return cmd_train( config );
		}
		if( *predictCmd ) {
			return cmd_predict( config );
		}
	} catch( const Exit& exit ) {
		return exit.code;
	} catch( const std::exception& error ) {
		std::cerr << "nblgc: internal error: " << error.what() << '\n';
		return kInternal;
	}
	return kUsage;
}
