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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nblgc {

inline unsigned resolve_workers( unsigned requested )
{
	if( requested != 0 ) {
		return requested;
	}
	const unsigned hardware = std::thread::hardware_concurrency();
	return hardware == 0 ? 1 : hardware;
}

// Runs body(i) for i in [0, count). Callers write results by index, so output
// order never depends on scheduling. The first exception thrown is rethrown.
template<typename Body>
void parallel_for( std::size_t count, unsigned workers, Body&& body )
{
	const std::size_t threadCount = std::min<std::size_t>( resolve_workers( workers ), count );
	if( threadCount <= 1 ) {
		for( std::size_t i = 0; i < count; ++i ) {
			body( i );
		}
		return;
	}

	std::atomic<std::size_t> next{ 0 };
	std::exception_ptr failure;
	std::mutex failureMutex;
	auto run = [&] {
		for( std::size_t i = next++; i < count; i = next++ ) {
			try {
				body( i );
			} catch( ... ) {
				std::lock_guard lock( failureMutex );
				if( !failure ) {
					failure = std::current_exception();
				}
				next = count;
			}
		}
	};

	std::vector<std::thread> threads;
	threads.reserve( threadCount - 1 );
	for( std::size_t t = 1; t < threadCount; ++t ) {
		threads.emplace_back( run );
	}
	run();
	for( auto& thread : threads ) {
		thread.join();
	}
	if( failure ) {
		std::rethrow_exception( failure );
	}
}

} // namespace nblgc
