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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nblgc {

enum class ErrorCode {
	InvalidArgument,
	Parse,
	Io,
	Data,
	Internal,
};

// Base exception of the core library. The C API maps `code()` onto nblgc_status.
class Error : public std::runtime_error {
public:
	Error( ErrorCode code, const std::string& message ) : std::runtime_error( message ), errorCode( code ) {}

	ErrorCode code() const noexcept { return errorCode; }

private:
	ErrorCode errorCode;
};

enum class ParseErrorKind {
	BadMagic,
	BadHeaderToken,
	BadHeaderValue,
	BadSample,
	Truncated,
	PixelOutOfRange,
};

const char* to_string( ParseErrorKind kind ) noexcept;

// PGM decoding failure; carries the byte offset at which decoding stopped.
class ParseError : public Error {
public:
	ParseError( ParseErrorKind kind, std::size_t offset, const std::string& detail );

	ParseErrorKind kind() const noexcept { return errorKind; }
	std::size_t offset() const noexcept { return byteOffset; }

private:
	ParseErrorKind errorKind;
	std::size_t byteOffset;
};

inline void require( bool condition, ErrorCode code, const std::string& message )
{
	if( !condition ) {
		throw Error( code, message );
	}
}

} // namespace nblgc
