// Copyright 2026 The Authors.
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

// Streaming maintenance of a joint k-representative set: on each arrival the
// current set plus the new element is reduced again by rep_set().

#ifndef REPKERNEL_STREAM_H_
#define REPKERNEL_STREAM_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "repkernel/matchoid.h"
#include "repkernel/repset.h"
#include "repkernel/types.h"

namespace repkernel {

class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An arrival: the element, its weight and the indices of the matroids whose
// ground contains it.
struct StreamElement {
  ElementId id;
  double weight = 0.0;
  std::vector<std::size_t> incidence;
};

// Builds the arrival record for e from the matchoid's incidence map.
StreamElement make_arrival(const Matchoid& mc, ElementId e, double weight);

struct StreamStep {
  std::size_t t = 0;  // arrivals so far, including this one
  ElementId element{};
  std::size_t rep_size = 0;
  std::uint64_t independence_queries = 0;
  std::size_t recursion_depth = 0;  // largest ||J|| reached
  std::uint64_t aux_bits = 0;       // implicit-J storage for this step
};

struct StreamMemoryReport {
  std::size_t arrivals = 0;
  std::size_t rep_size = 0;
  std::size_t peak_rep_size = 0;
  // Implicit encoding of the recursion path: one (element id, matroid index)
  // frame per level, at ceil(log2 n) + 2 ceil(log2 n) bits.
  std::uint64_t peak_aux_bits = 0;
  std::uint64_t aux_bits_bound = 0;  // (k-1) l frames at the final n
  std::uint64_t independence_queries = 0;
  std::uint64_t max_step_queries = 0;
};

class StreamingRepSet {
 public:
  // Throws std::invalid_argument for k < 1.
  StreamingRepSet(const Matchoid& mc, std::size_t k);

  // Throws StreamError for a repeated element or an incidence list that
  // disagrees with the matchoid.
  const StreamStep& push(const StreamElement& e);

  const ElementSet& current() const { return reps_; }
  ElementSet finish() const { return reps_; }
  std::size_t arrivals() const { return arrivals_; }
  std::size_t k() const { return k_; }
  const WeightFn& weights() const { return weights_; }
  StreamMemoryReport memory_report() const;

 private:
  const Matchoid* mc_;
  std::size_t k_;
  WeightFn weights_;
  ElementSet reps_;
  std::size_t arrivals_ = 0;
  std::size_t peak_rep_size_ = 0;
  std::size_t peak_depth_ = 0;
  std::uint64_t peak_aux_bits_ = 0;
  std::uint64_t queries_ = 0;
  std::uint64_t max_step_queries_ = 0;
  StreamStep last_;
};

// ceil(log2(max(n, 2))), the width of an element index among n arrivals.
std::uint64_t index_bits(std::size_t n);

}  // namespace repkernel

#endif  // REPKERNEL_STREAM_H_
