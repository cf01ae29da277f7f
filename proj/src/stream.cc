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

#include "repkernel/stream.h"

#include <algorithm>
#include <bit>
#include <string>

namespace repkernel {

StreamElement make_arrival(const Matchoid& mc, ElementId e, double weight) {
  auto inc = mc.incidence(e);
  return StreamElement{e, weight, std::vector<std::size_t>(inc.begin(), inc.end())};
}

std::uint64_t index_bits(std::size_t n) {
  return std::bit_width(std::max<std::size_t>(n, 2) - 1);
}

StreamingRepSet::StreamingRepSet(const Matchoid& mc, std::size_t k) : mc_(&mc), k_(k) {
  if (k < 1) throw std::invalid_argument("StreamingRepSet: k must be at least 1");
}

const StreamStep& StreamingRepSet::push(const StreamElement& e) {
  if (weights_.has(e.id)) {
    throw StreamError("element " + std::to_string(to_index(e.id)) + " arrived twice");
  }
  std::span<const std::size_t> expected;
  try {
    expected = mc_->incidence(e.id);
  } catch (const std::domain_error& err) {
    throw StreamError(err.what());
  }
  std::vector<std::size_t> given = e.incidence;
  std::sort(given.begin(), given.end());
  if (!std::equal(given.begin(), given.end(), expected.begin(), expected.end())) {
    throw StreamError("incidence list of element " + std::to_string(to_index(e.id)) +
                      " disagrees with the matchoid");
  }

  weights_.append(e.id, e.weight);
  ++arrivals_;
  RepSetResult next = rep_set(with_element(reps_, e.id), *mc_, weights_, k_);
  reps_ = std::move(next.reps);

  const std::uint64_t frame_bits = 3 * index_bits(arrivals_);
  last_ = StreamStep{arrivals_,
                     e.id,
                     reps_.size(),
                     next.stats.independence_queries,
                     next.stats.max_norm,
                     next.stats.max_norm * frame_bits};
  queries_ += last_.independence_queries;
  max_step_queries_ = std::max(max_step_queries_, last_.independence_queries);
  peak_rep_size_ = std::max(peak_rep_size_, reps_.size());
  peak_depth_ = std::max(peak_depth_, last_.recursion_depth);
  peak_aux_bits_ = std::max(peak_aux_bits_, last_.aux_bits);
  return last_;
}

StreamMemoryReport StreamingRepSet::memory_report() const {
  StreamMemoryReport r;
  r.arrivals = arrivals_;
  r.rep_size = reps_.size();
  r.peak_rep_size = peak_rep_size_;
  r.peak_aux_bits = peak_aux_bits_;
  r.aux_bits_bound = (k_ - 1) * mc_->ell() * 3 * index_bits(arrivals_);
  r.independence_queries = queries_;
  r.max_step_queries = max_step_queries_;
  return r;
}

}  // namespace repkernel
