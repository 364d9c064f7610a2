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

#include "csg/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include <Eigen/Core>

namespace csg {
namespace {

int ThreadsFromEnvironment() {
  if (const char* env = std::getenv(kThreadsEnvVar)) {
    try {
      int value = std::stoi(env);
      if (value > 0) return value;
    } catch (...) {
      // Fall through to the hardware default on garbage.
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<int>& ThreadSetting() {
  static std::atomic<int> threads{ThreadsFromEnvironment()};
  return threads;
}

std::atomic<bool> g_strict{false};

void SyncEigenThreads() {
  Eigen::setNbThreads(g_strict.load() ? 1 : ThreadSetting().load());
}

}  // namespace

int NumThreads() { return ThreadSetting().load(); }

void SetNumThreads(int threads) {
  ThreadSetting().store(std::max(1, threads));
  SyncEigenThreads();
}

bool StrictDeterministic() { return g_strict.load(); }

void SetStrictDeterministic(bool strict) {
  g_strict.store(strict);
  SyncEigenThreads();
}

}  // namespace csg
