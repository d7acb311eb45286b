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

#include <doctest.h>

#include <nblgc/nblgc.h>

#include "support.hpp"

#include <memory>
#include <string>
#include <vector>

using nblgc::testing::TempDir;
using nblgc::testing::read_bytes;
using nblgc::testing::write_bytes;

namespace {

struct Deleter {
	void operator()( nblgc_dataset* p ) const { nblgc_dataset_free( p ); }
	void operator()( nblgc_features* p ) const { nblgc_features_free( p ); }
	void operator()( nblgc_report* p ) const { nblgc_report_free( p ); }
	void operator()( nblgc_model* p ) const { nblgc_model_free( p ); }
};

template<class T>
using Handle = std::unique_ptr<T, Deleter>;

Handle<nblgc_features> load_features( const std::filesystem::path& root, unsigned workers = 2 )
{
	nblgc_dataset* dataset = nullptr;
	REQUIRE( nblgc_dataset_load( root.string().c_str(), 63, 63, 0, workers, &dataset ) == NBLGC_OK );
	Handle<nblgc_dataset> owned( dataset );
	nblgc_features* features = nullptr;
	REQUIRE( nblgc_features_extract( dataset, NBLGC_VARIANT_G1, NBLGC_REF_AVERAGE, workers, &features ) == NBLGC_OK );
	return Handle<nblgc_features>( features );
}

} // namespace

TEST_CASE( "version and status strings" )
{
	CHECK( std::string( nblgc_version() ).size() > 0 );
	CHECK( std::string( nblgc_status_string( NBLGC_ERR_PARSE ) ).size() > 0 );
}

TEST_CASE( "defaults" )
{
	nblgc_classifier_config c;
	nblgc_classifier_config_init( &c );
	CHECK( c.kind == NBLGC_CLASSIFIER_KNN );
	CHECK( c.neighbors_k == 1 );
	CHECK( c.distance == NBLGC_DISTANCE_LOG );
	CHECK( c.svm_degree == 1 );
	CHECK( c.svm_c == 1.0 );
	CHECK( c.svm_offset == 1.0 );
	CHECK( c.svm_tol == 1e-3 );
	CHECK( c.svm_max_passes == 100 );
	CHECK( c.zscore == 0 );
	nblgc_split_config s;
	nblgc_split_config_init( &s );
	CHECK( s.train_per_class == 7 );
	CHECK( s.mode == NBLGC_SPLIT_BY_INDEX );
}

TEST_CASE( "single image extraction" )
{
	std::string pgm = "P5\n9 9\n255\n";
	for( int i = 0; i < 81; ++i ) {
		pgm.push_back( static_cast<char>( ( i * 37 ) % 256 ) );
	}
	std::vector<double> out( 9 );
	std::size_t written = 0;
	CHECK( nblgc_extract_pgm( reinterpret_cast<const unsigned char*>( pgm.data() ), pgm.size(), 9, 9, NBLGC_VARIANT_G2,
			   NBLGC_REF_MAXIMUM, out.data(), out.size(), &written )
		== NBLGC_OK );
	CHECK( written == 9 );

	SUBCASE( "short buffer" )
	{
		CHECK( nblgc_extract_pgm( reinterpret_cast<const unsigned char*>( pgm.data() ), pgm.size(), 9, 9, NBLGC_VARIANT_G2,
				   NBLGC_REF_MAXIMUM, out.data(), 4, &written )
			== NBLGC_ERR_INVALID_ARGUMENT );
	}
	SUBCASE( "bad bytes report the offset" )
	{
		const std::string bad = "P2\n2 1\n100\n0 101";
		CHECK( nblgc_extract_pgm( reinterpret_cast<const unsigned char*>( bad.data() ), bad.size(), 3, 3, NBLGC_VARIANT_G1,
				   NBLGC_REF_AVERAGE, out.data(), out.size(), &written )
			== NBLGC_ERR_PARSE );
		CHECK( std::string( nblgc_last_error() ).find( "byte 13" ) != std::string::npos );
	}
	SUBCASE( "bad size" )
	{
		CHECK( nblgc_extract_pgm( reinterpret_cast<const unsigned char*>( pgm.data() ), pgm.size(), 10, 9, NBLGC_VARIANT_G1,
				   NBLGC_REF_AVERAGE, out.data(), out.size(), &written )
			== NBLGC_ERR_INVALID_ARGUMENT );
	}
	SUBCASE( "null arguments" )
	{
		CHECK( nblgc_extract_pgm( nullptr, 0, 9, 9, NBLGC_VARIANT_G1, NBLGC_REF_AVERAGE, out.data(), out.size(), &written )
			== NBLGC_ERR_INVALID_ARGUMENT );
		CHECK( nblgc_dataset_load( nullptr, 63, 63, 0, 1, nullptr ) == NBLGC_ERR_INVALID_ARGUMENT );
	}
}

TEST_CASE( "dataset through report" )
{
	TempDir dir( "capi" );
	nblgc::testing::write_synthetic_dataset( dir.path() / "data", 5, 10, 30, 3 );
	const auto features = load_features( dir.path() / "data" );
	CHECK( nblgc_features_rows( features.get() ) == 50 );
	CHECK( nblgc_features_dims( features.get() ) == 441 );
	CHECK( std::string( nblgc_features_label( features.get(), 0 ) ) == "c01" );
	CHECK( nblgc_features_row( features.get(), 50 ) == nullptr );

	nblgc_split_config split;
	nblgc_split_config_init( &split );
	nblgc_classifier_config classifier;
	nblgc_classifier_config_init( &classifier );

	SUBCASE( "evaluate" )
	{
		nblgc_report* raw = nullptr;
		REQUIRE( nblgc_evaluate( features.get(), &split, &classifier, 2, &raw ) == NBLGC_OK );
		Handle<nblgc_report> report( raw );
		CHECK( nblgc_report_accuracy( report.get() ) >= 0.0 );
		CHECK( nblgc_report_accuracy( report.get() ) <= 100.0 );
		const auto path = dir.path() / "report.csv";
		REQUIRE( nblgc_report_write_csv( report.get(), path.string().c_str() ) == NBLGC_OK );
		const auto text = read_bytes( path );
		CHECK( text.find( "config,classifier,knn" ) != std::string::npos );
		CHECK( text.find( "config,variant,G1" ) != std::string::npos );
		CHECK( text.find( "config,train_per_class,7" ) != std::string::npos );
		CHECK( text.find( "result,accuracy," ) != std::string::npos );
	}
	SUBCASE( "kfold" )
	{
		nblgc_report* raw = nullptr;
		REQUIRE( nblgc_kfold( features.get(), 5, &split, &classifier, 2, &raw ) == NBLGC_OK );
		Handle<nblgc_report> report( raw );
		CHECK( nblgc_report_fold_count( report.get() ) == 5 );
		CHECK( nblgc_report_fold_accuracy( report.get(), 0 ) >= 0.0 );
		CHECK( nblgc_kfold( features.get(), 1, &split, &classifier, 2, &raw ) == NBLGC_ERR_INVALID_ARGUMENT );
	}
	SUBCASE( "roc" )
	{
		nblgc_report* raw = nullptr;
		REQUIRE( nblgc_roc( features.get(), &split, NBLGC_DISTANCE_LOG, 200, 2, &raw ) == NBLGC_OK );
		Handle<nblgc_report> report( raw );
		const std::size_t n = nblgc_report_roc_count( report.get() );
		REQUIRE( n >= 200 );
		double t = 0;
		double far = 0;
		double gar = 0;
		REQUIRE( nblgc_report_roc_point( report.get(), n - 1, &t, &far, &gar ) == NBLGC_OK );
		CHECK( far == 100.0 );
		CHECK( gar == 100.0 );
		CHECK( nblgc_report_roc_point( report.get(), n, &t, &far, &gar ) == NBLGC_ERR_INVALID_ARGUMENT );
	}
	SUBCASE( "too many training images is a data error" )
	{
		split.train_per_class = 10;
		nblgc_report* raw = nullptr;
		CHECK( nblgc_evaluate( features.get(), &split, &classifier, 2, &raw ) == NBLGC_ERR_DATA );
		CHECK( raw == nullptr );
		CHECK( std::string( nblgc_last_error() ).size() > 0 );
	}
	SUBCASE( "model round trip" )
	{
		classifier.kind = NBLGC_CLASSIFIER_SVM;
		nblgc_model* raw = nullptr;
		REQUIRE( nblgc_model_train( features.get(), &classifier, 2, &raw ) == NBLGC_OK );
		Handle<nblgc_model> model( raw );
		CHECK( nblgc_model_dims( model.get() ) == 441 );
		CHECK( std::string( nblgc_model_metadata( model.get(), "variant" ) ) == "G1" );
		CHECK( nblgc_model_metadata( model.get(), "missing" ) == nullptr );
		const auto path = dir.path() / "model.txt";
		REQUIRE( nblgc_model_save( model.get(), path.string().c_str() ) == NBLGC_OK );
		nblgc_model* rawLoaded = nullptr;
		REQUIRE( nblgc_model_load( path.string().c_str(), &rawLoaded ) == NBLGC_OK );
		Handle<nblgc_model> loaded( rawLoaded );
		for( std::size_t r = 0; r < nblgc_features_rows( features.get() ); ++r ) {
			char a[64];
			char b[64];
			REQUIRE( nblgc_model_predict( model.get(), nblgc_features_row( features.get(), r ), 441, a, sizeof( a ) ) == NBLGC_OK );
			REQUIRE( nblgc_model_predict( loaded.get(), nblgc_features_row( features.get(), r ), 441, b, sizeof( b ) ) == NBLGC_OK );
			CHECK( std::string( a ) == std::string( b ) );
		}
		char small[2];
		CHECK( nblgc_model_predict( model.get(), nblgc_features_row( features.get(), 0 ), 441, small, sizeof( small ) )
			== NBLGC_ERR_INVALID_ARGUMENT );
		CHECK( nblgc_model_predict( model.get(), nblgc_features_row( features.get(), 0 ), 440, small, sizeof( small ) )
			== NBLGC_ERR_INVALID_ARGUMENT );
	}
	SUBCASE( "feature CSV does not depend on worker count" )
	{
		const auto single = load_features( dir.path() / "data", 1 );
		const auto a = dir.path() / "a.csv";
		const auto b = dir.path() / "b.csv";
		REQUIRE( nblgc_features_write_csv( features.get(), a.string().c_str() ) == NBLGC_OK );
		REQUIRE( nblgc_features_write_csv( single.get(), b.string().c_str() ) == NBLGC_OK );
		CHECK( read_bytes( a ) == read_bytes( b ) );
	}
}

TEST_CASE( "dataset errors" )
{
	TempDir dir( "capi_err" );
	nblgc_dataset* raw = nullptr;
	CHECK( nblgc_dataset_load( ( dir.path() / "missing" ).string().c_str(), 63, 63, 0, 1, &raw ) == NBLGC_ERR_IO );
	CHECK( nblgc_dataset_load( dir.path().string().c_str(), 62, 63, 0, 1, &raw ) == NBLGC_ERR_INVALID_ARGUMENT );

	write_bytes( dir.path() / "a" / "bad.pgm", "P7" );
	CHECK( nblgc_dataset_load( dir.path().string().c_str(), 63, 63, 0, 1, &raw ) == NBLGC_ERR_PARSE );
	REQUIRE( nblgc_dataset_load( dir.path().string().c_str(), 63, 63, 1, 1, &raw ) == NBLGC_OK );
	Handle<nblgc_dataset> dataset( raw );
	CHECK( nblgc_dataset_size( dataset.get() ) == 0 );
	CHECK( nblgc_dataset_warning_count( dataset.get() ) >= 1 );
	CHECK( nblgc_dataset_warning( dataset.get(), 99 ) == nullptr );
}
