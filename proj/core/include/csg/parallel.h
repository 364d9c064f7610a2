// Copyright 2026 The csgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSG_PARALLEL_H_
#define CSG_PARALLEL_H_

namespace csg {

// Name of the environment variable consulted for the worker thread count.
inline constexpr const char* kThreadsEnvVar = "CSG_NUM_THREADS";

// Thread count used by row-parallel kernels. Defaults to $CSG_NUM_THREADS,
// falling back to the hardware concurrency.
int NumThreads();
void SetNumThreads(int threads);

// Strict mode pins dense linear algebra to one thread so that every result
// is bitwise reproducible. Sparse kernels accumulate each row in index order
// and are reproducible in either mode.
bool StrictDeterministic();
void SetStrictDeterministic(bool strict);

}  // namespace csg

#endif  // CSG_PARALLEL_H_
