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

#include "format.hpp"

#include <cstdio>

namespace nblgc {

std::string format_real( double value, int significantDigits )
{
	char buffer[64];
	const int written = std::snprintf( buffer, sizeof( buffer ), "%.*g", significantDigits, value );
	return std::string( buffer, written > 0 ? static_cast<std::size_t>( written ) : 0 );
}

} // namespace nblgc
