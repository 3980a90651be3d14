// Copyright 2026 The CORD Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CORD_SEEDING_HPP_
#define CORD_SEEDING_HPP_

#include <cstdint>
#include <initializer_list>

namespace cord {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent stream seed for a labelled sub-task of a root seed.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> labels) {
  std::uint64_t s = mix64(root);
  for (std::uint64_t label : labels) s = mix64(s ^ mix64(label + 0x632BE59BD9B4E019ULL));
  return s;
}

}  // namespace cord

#endif  // CORD_SEEDING_HPP_
