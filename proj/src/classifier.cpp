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

#include "classifier.hpp"

#include "error.hpp"
#include "format.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace nblgc {

ZScore ZScore::fit( const std::vector<LabeledSample>& samples )
{
	require( !samples.empty(), ErrorCode::Data, "cannot fit z-score on an empty set" );
	const std::size_t dims = samples.front().features.size();
	ZScore scaler{ std::vector<double>( dims, 0.0 ), std::vector<double>( dims, 0.0 ) };
	for( const auto& sample : samples ) {
		for( std::size_t d = 0; d < dims; ++d ) {
			scaler.mean[d] += sample.features[d];
		}
	}
	const double count = static_cast<double>( samples.size() );
	for( auto& m : scaler.mean ) {
		m /= count;
	}
	for( const auto& sample : samples ) {
		for( std::size_t d = 0; d < dims; ++d ) {
			const double dev = sample.features[d] - scaler.mean[d];
			scaler.stddev[d] += dev * dev;
		}
	}
	for( auto& s : scaler.stddev ) {
		s = std::sqrt( s / count );
		if( !( s > 0.0 ) ) {
			s = 1.0;
		}
	}
	return scaler;
}

std::vector<double> ZScore::apply( std::span<const double> x ) const
{
	require( x.size() == mean.size(), ErrorCode::InvalidArgument, "z-score dimension mismatch" );
	std::vector<double> out( x.size() );
	for( std::size_t d = 0; d < x.size(); ++d ) {
		out[d] = ( x[d] - mean[d] ) / stddev[d];
	}
	return out;
}

std::size_t ClassifierModel::dims() const
{
	if( const auto* knn = std::get_if<KnnModel>( &model ) ) {
		return knn->training.empty() ? 0 : knn->training.front().features.size();
	}
	const auto& svm = std::get<SvmModel>( model );
	for( const auto& machine : svm.machines ) {
		if( !machine.supportVectors.empty() ) {
			return machine.supportVectors.front().size();
		}
	}
	return 0;
}

ClassifierModel train_classifier( const std::vector<LabeledSample>& train, const ClassifierConfig& config,
	unsigned workers )
{
	require( !train.empty(), ErrorCode::Data, "training set is empty" );
	ClassifierModel result;
	const std::vector<LabeledSample>* samples = &train;
	std::vector<LabeledSample> scaled;
	if( config.zscore ) {
		result.scaler = ZScore::fit( train );
		scaled.reserve( train.size() );
		for( const auto& sample : train ) {
			scaled.push_back( { result.scaler->apply( sample.features ), sample.label } );
		}
		samples = &scaled;
	}

	if( config.kind == ClassifierKind::Knn ) {
		require( config.neighborsK >= 1 && config.neighborsK <= samples->size(), ErrorCode::InvalidArgument,
			"neighbors k = " + std::to_string( config.neighborsK ) + " exceeds training size "
				+ std::to_string( samples->size() ) );
		result.model = KnnModel{ *samples, config.neighborsK, config.distance };
	} else {
		result.model = svm_train( *samples, config.svm, workers );
	}
	return result;
}

std::string predict( const ClassifierModel& model, std::span<const double> query )
{
	std::vector<double> scaled;
	if( model.scaler ) {
		scaled = model.scaler->apply( query );
		query = scaled;
	}
	if( const auto* knn = std::get_if<KnnModel>( &model.model ) ) {
		return knn_predict( *knn, query ).label;
	}
	return svm_predict( std::get<SvmModel>( model.model ), query ).label;
}

namespace {

constexpr const char* kMagic = "nblgc-model";
constexpr int kFormatVersion = 1;

void write_vector( std::ostream& out, std::span<const double> values )
{
	for( const double v : values ) {
		out << ' ' << format_real( v, 17 );
	}
}

class ModelReader {
public:
	explicit ModelReader( std::istream& input ) : in( input ) {}

	// Reads the next line and checks its leading keyword; the remainder is left in `rest`.
	std::istringstream expect( const std::string& keyword )
	{
		std::string line;
		if( !std::getline( in, line ) ) {
			fail( "unexpected end of model, expected '" + keyword + "'" );
		}
		++lineNumber;
		std::istringstream fields( line );
		std::string word;
		fields >> word;
		if( word != keyword ) {
			fail( "expected '" + keyword + "', found '" + word + "'" );
		}
		return fields;
	}

	template<typename T>
	T value( const std::string& keyword )
	{
		auto fields = expect( keyword );
		T result{};
		if( !( fields >> result ) ) {
			fail( "bad value for '" + keyword + "'" );
		}
		return result;
	}

	std::string text( const std::string& keyword )
	{
		auto fields = expect( keyword );
		std::string rest;
		std::getline( fields >> std::ws, rest );
		return rest;
	}

	std::vector<double> reals( std::istringstream& fields, std::size_t count )
	{
		std::vector<double> values( count );
		for( auto& v : values ) {
			std::string token;
			if( !( fields >> token ) ) {
				fail( "too few values" );
			}
			v = parse_real( token );
		}
		return values;
	}

	double parse_real( const std::string& token )
	{
		try {
			std::size_t used = 0;
			const double v = std::stod( token, &used );
			if( used != token.size() ) {
				fail( "bad number '" + token + "'" );
			}
			return v;
		} catch( const std::logic_error& ) {
			fail( "bad number '" + token + "'" );
		}
		return 0.0;
	}

	[[noreturn]] void fail( const std::string& message ) const
	{
		throw Error( ErrorCode::Parse, "model line " + std::to_string( lineNumber ) + ": " + message );
	}

private:
	std::istream& in;
	std::size_t lineNumber = 0;
};

} // namespace

void save_model( const ClassifierModel& model, std::ostream& out )
{
	out << kMagic << ' ' << kFormatVersion << '\n';
	const bool isKnn = std::holds_alternative<KnnModel>( model.model );
	out << "kind " << ( isKnn ? "knn" : "svm" ) << '\n';
	out << "metadata " << model.metadata.size() << '\n';
	for( const auto& [key, value] : model.metadata ) {
		out << "meta " << key << ' ' << value << '\n';
	}
	const std::size_t dims = model.dims();
	out << "dims " << dims << '\n';
	out << "zscore " << ( model.scaler ? 1 : 0 ) << '\n';
	if( model.scaler ) {
		out << "mean";
		write_vector( out, model.scaler->mean );
		out << "\nstddev";
		write_vector( out, model.scaler->stddev );
		out << '\n';
	}

	if( isKnn ) {
		const auto& knn = std::get<KnnModel>( model.model );
		const auto classes = class_order( knn.training );
		out << "k " << knn.neighborsK << '\n';
		out << "distance " << to_string( knn.distance ) << '\n';
		out << "classes " << classes.size() << '\n';
		for( const auto& label : classes ) {
			out << "class " << label << '\n';
		}
		out << "samples " << knn.training.size() << '\n';
		for( const auto& sample : knn.training ) {
			const auto pos = std::lower_bound( classes.begin(), classes.end(), sample.label ) - classes.begin();
			out << "sample " << pos;
			write_vector( out, sample.features );
			out << '\n';
		}
		return;
	}

	const auto& svm = std::get<SvmModel>( model.model );
	out << "degree " << svm.params.degree << '\n';
	out << "offset " << format_real( svm.params.offset, 17 ) << '\n';
	out << "C " << format_real( svm.params.c, 17 ) << '\n';
	out << "tol " << format_real( svm.params.tol, 17 ) << '\n';
	out << "max_passes " << svm.params.maxPasses << '\n';
	out << "classes " << svm.classes.size() << '\n';
	for( const auto& label : svm.classes ) {
		out << "class " << label << '\n';
	}
	out << "machines " << svm.machines.size() << '\n';
	for( const auto& machine : svm.machines ) {
		out << "machine " << machine.positiveClass << ' ' << machine.negativeClass << ' '
			<< format_real( machine.bias, 17 ) << ' ' << machine.supportVectors.size() << '\n';
		for( std::size_t s = 0; s < machine.supportVectors.size(); ++s ) {
			out << "sv " << format_real( machine.coefficients[s], 17 );
			write_vector( out, machine.supportVectors[s] );
			out << '\n';
		}
	}
}

ClassifierModel load_model( std::istream& in )
{
	ModelReader reader( in );
	{
		const auto version = reader.value<int>( kMagic );
		if( version != kFormatVersion ) {
			reader.fail( "unsupported model format version " + std::to_string( version ) );
		}
	}
	const auto kind = reader.text( "kind" );
	if( kind != "knn" && kind != "svm" ) {
		reader.fail( "unknown model kind '" + kind + "'" );
	}

	ClassifierModel model;
	const auto metaCount = reader.value<std::size_t>( "metadata" );
	for( std::size_t m = 0; m < metaCount; ++m ) {
		auto fields = reader.expect( "meta" );
		std::string key;
		std::string value;
		fields >> key;
		std::getline( fields >> std::ws, value );
		model.metadata[key] = value;
	}
	const auto dims = reader.value<std::size_t>( "dims" );
	if( reader.value<int>( "zscore" ) != 0 ) {
		ZScore scaler;
		auto meanFields = reader.expect( "mean" );
		scaler.mean = reader.reals( meanFields, dims );
		auto stdFields = reader.expect( "stddev" );
		scaler.stddev = reader.reals( stdFields, dims );
		model.scaler = std::move( scaler );
	}

	auto readClasses = [&] {
		const auto count = reader.value<std::size_t>( "classes" );
		std::vector<std::string> classes;
		for( std::size_t c = 0; c < count; ++c ) {
			classes.push_back( reader.text( "class" ) );
		}
		return classes;
	};

	if( kind == "knn" ) {
		KnnModel knn;
		knn.neighborsK = reader.value<std::size_t>( "k" );
		knn.distance = parse_distance( reader.text( "distance" ) );
		const auto classes = readClasses();
		const auto sampleCount = reader.value<std::size_t>( "samples" );
		for( std::size_t s = 0; s < sampleCount; ++s ) {
			auto fields = reader.expect( "sample" );
			std::size_t classIndex = 0;
			if( !( fields >> classIndex ) || classIndex >= classes.size() ) {
				reader.fail( "bad class index" );
			}
			knn.training.push_back( { reader.reals( fields, dims ), classes[classIndex] } );
		}
		model.model = std::move( knn );
		return model;
	}

	SvmModel svm;
	svm.params.degree = reader.value<int>( "degree" );
	svm.params.offset = reader.parse_real( reader.text( "offset" ) );
	svm.params.c = reader.parse_real( reader.text( "C" ) );
	svm.params.tol = reader.parse_real( reader.text( "tol" ) );
	svm.params.maxPasses = reader.value<std::size_t>( "max_passes" );
	svm.classes = readClasses();
	const auto machineCount = reader.value<std::size_t>( "machines" );
	for( std::size_t m = 0; m < machineCount; ++m ) {
		auto fields = reader.expect( "machine" );
		BinaryMachine machine;
		std::string bias;
		std::size_t svCount = 0;
		if( !( fields >> machine.positiveClass >> machine.negativeClass >> bias >> svCount )
			|| machine.positiveClass >= svm.classes.size() || machine.negativeClass >= svm.classes.size() )
		{
			reader.fail( "bad machine header" );
		}
		machine.bias = reader.parse_real( bias );
		for( std::size_t s = 0; s < svCount; ++s ) {
			auto svFields = reader.expect( "sv" );
			const auto coefficient = reader.reals( svFields, 1 );
			machine.coefficients.push_back( coefficient.front() );
			machine.supportVectors.push_back( reader.reals( svFields, dims ) );
		}
		svm.machines.push_back( std::move( machine ) );
	}
	model.model = std::move( svm );
	return model;
}

const char* to_string( ClassifierKind kind ) noexcept
{
	return kind == ClassifierKind::Svm ? "svm" : "knn";
}

ClassifierKind parse_classifier( const std::string& text )
{
	if( text == "knn" ) {
		return ClassifierKind::Knn;
	}
	if( text == "svm" ) {
		return ClassifierKind::Svm;
	}
	throw Error( ErrorCode::InvalidArgument, "unknown classifier '" + text + "' (expected knn or svm)" );
}

} // namespace nblgc
