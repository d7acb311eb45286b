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

#ifndef NBLGC_NBLGC_H
#define NBLGC_NBLGC_H

/*
 Non-binary local gradient contour (NBLGC) face/texture descriptor.

 C interface over the core library: opaque handles, status codes, and a
 thread-local error message. Every function returning nblgc_status leaves
 its output untouched on failure; call nblgc_last_error() for details.

 Typical use:

	nblgc_dataset* ds = NULL;
	nblgc_dataset_load( "orl", 63, 63, 0, 0, &ds );
	nblgc_features* fs = NULL;
	nblgc_features_extract( ds, NBLGC_VARIANT_G1, NBLGC_REF_AVERAGE, 0, &fs );
	nblgc_classifier_config cc;
	nblgc_classifier_config_init( &cc );
	nblgc_split_config sc;
	nblgc_split_config_init( &sc );
	nblgc_report* rep = NULL;
	nblgc_evaluate( fs, &sc, &cc, 0, &rep );
	printf( "%g\n", nblgc_report_accuracy( rep ) );
	nblgc_report_free( rep );
	nblgc_features_free( fs );
	nblgc_dataset_free( ds );
*/

#include <stddef.h>
#include <stdint.h>

#if defined( _WIN32 )
#	if defined( NBLGC_BUILDING )
#		define NBLGC_API __declspec( dllexport )
#	else
#		define NBLGC_API __declspec( dllimport )
#	endif
#else
#	define NBLGC_API __attribute__( ( visibility( "default" ) ) )
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nblgc_status {
	NBLGC_OK = 0,
	NBLGC_ERR_INVALID_ARGUMENT = 1,
	NBLGC_ERR_PARSE = 2,
	NBLGC_ERR_IO = 3,
	NBLGC_ERR_DATA = 4,
	NBLGC_ERR_INTERNAL = 5
} nblgc_status;

typedef enum nblgc_variant {
	NBLGC_VARIANT_G1 = 1,
	NBLGC_VARIANT_G2 = 2,
	NBLGC_VARIANT_G3 = 3
} nblgc_variant;

typedef enum nblgc_ref {
	NBLGC_REF_AVERAGE = 0,
	NBLGC_REF_MAXIMUM = 1,
	NBLGC_REF_MINIMUM = 2
} nblgc_ref;

typedef enum nblgc_classifier_kind {
	NBLGC_CLASSIFIER_KNN = 0,
	NBLGC_CLASSIFIER_SVM = 1
} nblgc_classifier_kind;

typedef enum nblgc_distance {
	NBLGC_DISTANCE_LOG = 0,
	NBLGC_DISTANCE_EUCLIDEAN = 1
} nblgc_distance;

typedef enum nblgc_split_mode {
	NBLGC_SPLIT_BY_INDEX = 0,
	NBLGC_SPLIT_SHUFFLE = 1
} nblgc_split_mode;

typedef struct nblgc_classifier_config {
	nblgc_classifier_kind kind;
	size_t neighbors_k;      /* KNN */
	nblgc_distance distance; /* KNN */
	int svm_degree;          /* 1 or 2 */
	double svm_c;
	double svm_offset;
	double svm_tol;
	size_t svm_max_passes;
	int zscore; /* nonzero: standardize features on the training set */
} nblgc_classifier_config;

typedef struct nblgc_split_config {
	size_t train_per_class;
	nblgc_split_mode mode;
	uint64_t seed;
} nblgc_split_config;

typedef struct nblgc_dataset nblgc_dataset;
typedef struct nblgc_features nblgc_features;
typedef struct nblgc_model nblgc_model;
typedef struct nblgc_report nblgc_report;

NBLGC_API const char* nblgc_version( void );
NBLGC_API const char* nblgc_status_string( nblgc_status status );
/* Message of the last failure on the calling thread; empty when none. */
NBLGC_API const char* nblgc_last_error( void );

/* Defaults: KNN, k = 1, log distance, degree 1, C = 1, offset 1, tol 1e-3, 100 passes, no z-score. */
NBLGC_API void nblgc_classifier_config_init( nblgc_classifier_config* config );
/* Defaults: 7 training images per class, by index, seed 0. */
NBLGC_API void nblgc_split_config_init( nblgc_split_config* config );

/* Dataset: root/<class>/<image>.pgm, unit-normalized and resized to width x height (multiples of 3).
   workers = 0 uses every core. With skip_errors set, unreadable images become warnings. */
NBLGC_API nblgc_status nblgc_dataset_load( const char* root, size_t width, size_t height, int skip_errors,
	unsigned workers, nblgc_dataset** out );
NBLGC_API void nblgc_dataset_free( nblgc_dataset* dataset );
NBLGC_API size_t nblgc_dataset_size( const nblgc_dataset* dataset );
NBLGC_API size_t nblgc_dataset_class_count( const nblgc_dataset* dataset );
NBLGC_API size_t nblgc_dataset_warning_count( const nblgc_dataset* dataset );
NBLGC_API const char* nblgc_dataset_warning( const nblgc_dataset* dataset, size_t index );

/* Single image: decode PGM bytes, normalize, resize, and write the block features to out
   (capacity out_len; *written receives the feature count). */
NBLGC_API nblgc_status nblgc_extract_pgm( const unsigned char* bytes, size_t length, size_t width, size_t height,
	nblgc_variant variant, nblgc_ref ref, double* out, size_t out_len, size_t* written );

NBLGC_API nblgc_status nblgc_features_extract( const nblgc_dataset* dataset, nblgc_variant variant, nblgc_ref ref,
	unsigned workers, nblgc_features** out );
NBLGC_API void nblgc_features_free( nblgc_features* features );
NBLGC_API size_t nblgc_features_rows( const nblgc_features* features );
NBLGC_API size_t nblgc_features_dims( const nblgc_features* features );
NBLGC_API const double* nblgc_features_row( const nblgc_features* features, size_t row );
NBLGC_API const char* nblgc_features_label( const nblgc_features* features, size_t row );
NBLGC_API nblgc_status nblgc_features_write_csv( const nblgc_features* features, const char* path );

NBLGC_API nblgc_status nblgc_evaluate( const nblgc_features* features, const nblgc_split_config* split,
	const nblgc_classifier_config* classifier, unsigned workers, nblgc_report** out );
/* Stratified k-fold; split->train_per_class is ignored, split->mode and seed order each class. */
NBLGC_API nblgc_status nblgc_kfold( const nblgc_features* features, size_t folds, const nblgc_split_config* split,
	const nblgc_classifier_config* classifier, unsigned workers, nblgc_report** out );
/* FAR/GAR sweep on the split's test set against its training set. */
NBLGC_API nblgc_status nblgc_roc( const nblgc_features* features, const nblgc_split_config* split,
	nblgc_distance distance, size_t sweep_points, unsigned workers, nblgc_report** out );

NBLGC_API void nblgc_report_free( nblgc_report* report );
NBLGC_API double nblgc_report_accuracy( const nblgc_report* report );
NBLGC_API size_t nblgc_report_fold_count( const nblgc_report* report );
NBLGC_API double nblgc_report_fold_accuracy( const nblgc_report* report, size_t fold );
NBLGC_API size_t nblgc_report_roc_count( const nblgc_report* report );
NBLGC_API nblgc_status nblgc_report_roc_point( const nblgc_report* report, size_t index, double* threshold,
	double* far, double* gar );
NBLGC_API nblgc_status nblgc_report_write_csv( const nblgc_report* report, const char* path );
NBLGC_API nblgc_status nblgc_report_write_folds_csv( const nblgc_report* report, const char* path );
NBLGC_API nblgc_status nblgc_report_write_roc_csv( const nblgc_report* report, const char* path );

/* Trains on every row of features. */
NBLGC_API nblgc_status nblgc_model_train( const nblgc_features* features, const nblgc_classifier_config* classifier,
	unsigned workers, nblgc_model** out );
NBLGC_API void nblgc_model_free( nblgc_model* model );
NBLGC_API size_t nblgc_model_dims( const nblgc_model* model );
/* Provenance recorded at training time ("variant", "ref", "width", "height"); NULL when absent. */
NBLGC_API const char* nblgc_model_metadata( const nblgc_model* model, const char* key );
NBLGC_API nblgc_status nblgc_model_save( const nblgc_model* model, const char* path );
NBLGC_API nblgc_status nblgc_model_load( const char* path, nblgc_model** out );
/* Writes the predicted label, NUL-terminated, into label (capacity label_cap). */
NBLGC_API nblgc_status nblgc_model_predict( const nblgc_model* model, const double* features, size_t length,
	char* label, size_t label_cap );

#ifdef __cplusplus
}
#endif

#endif
