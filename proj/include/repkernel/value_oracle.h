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

// Value-oracle access to a set function f : 2^X -> Z+. This header is all the
// streaming coverage algorithm may see of the objective.

#ifndef REPKERNEL_VALUE_ORACLE_H_
#define REPKERNEL_VALUE_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <span>

#include "repkernel/types.h"

namespace repkernel {

class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  // f(S). Each call counts as one query.
  std::int64_t value(std::span<const ElementId> s) const {
    queries_.fetch_add(1, std::memory_order_relaxed);
    return evaluate(s);
  }

  std::uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }

 protected:
  virtual std::int64_t evaluate(std::span<const ElementId> s) const = 0;

 private:
  mutable std::atomic<std::uint64_t> queries_{0};
};

}  // namespace repkernel

#endif  // REPKERNEL_VALUE_ORACLE_H_
