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

// Weighted maximum coverage under an l-matchoid via color coding: points are
// hashed to zbar colors, and one streaming joint z-representative set is kept
// for every non-empty color set C, weighting each element by the heaviest
// point it has of every color in C.

#ifndef REPKERNEL_COLORCODE_H_
#define REPKERNEL_COLORCODE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "repkernel/coverage.h"
#include "repkernel/matchoid.h"
#include "repkernel/stream.h"
#include "repkernel/types.h"

namespace repkernel {

using Color = std::uint32_t;

// Largest supported zbar; 2^zbar - 1 representative sets are kept.
inline constexpr std::uint32_t kMaxColors = 16;

class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}
  static ColorSet of(std::initializer_list<Color> colors);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Color c) const { return (bits_ >> c) & 1u; }
  constexpr bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(ColorSet other) const { return (bits_ & other.bits_) == 0; }
  constexpr ColorSet operator|(ColorSet other) const { return ColorSet(bits_ | other.bits_); }
  void add(Color c) { bits_ |= 1u << c; }
  std::size_t size() const;
  bool operator==(const ColorSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

// Smallest power of two that is at least z.
std::uint32_t zbar(std::uint32_t z);

// Reduction polynomial for GF(2^bits), 1 <= bits <= 16, with the leading
// term included.
std::uint32_t reduction_polynomial(unsigned bits);

// Carry-less product in GF(2^bits).
std::uint32_t field_multiply(std::uint32_t a, std::uint32_t b, unsigned bits);

// A member of the z-wise independent family: a random polynomial of degree
// z-1 over GF(2^b), b = log2 max(mbar, zbar), whose value's top log2(zbar)
// bits are the color.
class HashFunction {
 public:
  HashFunction(std::uint64_t seed, std::uint32_t z, std::uint64_t num_points);

  Color operator()(PointId p) const;

  std::uint64_t seed() const { return seed_; }
  std::uint32_t z() const { return z_; }
  std::uint32_t num_colors() const { return zbar_; }
  unsigned field_bits() const { return field_bits_; }
  const std::vector<std::uint32_t>& coefficients() const { return coefficients_; }
  // Size of the description: z coefficients of field_bits() bits each.
  std::uint64_t seed_bits() const { return std::uint64_t{z_} * field_bits_; }

 private:
  std::uint64_t seed_;
  std::uint32_t z_;
  std::uint32_t zbar_;
  unsigned field_bits_;
  unsigned color_bits_;
  std::vector<std::uint32_t> coefficients_;
};

// Throws std::invalid_argument for z == 0, zbar(z) > kMaxColors or more than
// 2^16 points.
HashFunction draw_hash(std::uint64_t seed, std::uint32_t z, std::uint64_t num_points);

using Coloring = std::function<Color(PointId)>;

struct ColoredPoint {
  PointId point;
  double weight;
  Color color;
};

// An element after coloring, keeping only its heaviest point of each color
// (ties to the smaller point id), ordered by color.
struct ColoredElement {
  ElementId id{};
  std::vector<ColoredPoint> best;
  ColorSet colors() const;
};

ColoredElement color_element(ElementId e, std::span<const PointId> points,
                             const std::function<double(PointId)>& weight,
                             const Coloring& h);

// Weight of e's heaviest point of every color in C. Throws std::domain_error
// unless C is a subset of e's colors.
double w_C(const ColoredElement& e, ColorSet c);

// Sum over c in C of the heaviest point of color c covered by s. Throws
// std::domain_error unless every color of C is covered.
double f_C(std::span<const ColoredElement> s, ColorSet c);

struct MaxCoverageStats {
  std::size_t arrivals = 0;
  std::size_t rep_set_pushes = 0;  // (element, C) pairs processed
  std::uint64_t independence_queries = 0;
  std::size_t max_rep_size = 0;    // largest |R_C|
  std::size_t max_points_kept = 0; // largest pruned point list
};

class StreamingMaxCoverage {
 public:
  StreamingMaxCoverage(const Matchoid& mc, std::size_t z, Coloring h,
                       std::function<double(PointId)> point_weight);

  void push(ElementId e, std::span<const PointId> points);

  // Union of R_C over every non-empty C.
  ElementSet kernel() const;
  std::size_t instance_count() const { return instances_.size(); }
  // R_C for a non-empty color set.
  const ElementSet& rep_set_for(ColorSet c) const;
  const MaxCoverageStats& stats() const { return stats_; }
  std::size_t z() const { return z_; }
  std::uint32_t num_colors() const { return zbar_; }
  // Pruned point lists of all arrived elements, by arrival.
  const std::vector<ColoredElement>& colored() const { return colored_; }

 private:
  const Matchoid* mc_;
  std::size_t z_;
  std::uint32_t zbar_;
  Coloring h_;
  std::function<double(PointId)> point_weight_;
  // instances_[bits - 1] serves C = ColorSet(bits).
  std::vector<std::unique_ptr<StreamingRepSet>> instances_;
  std::vector<ColoredElement> colored_;
  MaxCoverageStats stats_;
};

// ceil(e^z ln(1/eps)), at least 1. Throws std::invalid_argument unless
// 0 < eps < 1.
std::uint64_t repetitions(std::uint32_t z, double eps);

// Seed of the i-th repetition derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t i);

struct ColorCodingRun {
  ElementSet kernel;
  std::vector<std::uint64_t> seeds;
  std::size_t runs = 0;
  std::size_t max_run_kernel = 0;
  std::size_t max_rep_size = 0;
  std::size_t max_points_kept = 0;
  std::uint64_t independence_queries = 0;
};

// One pass of StreamingMaxCoverage per hash function over the elements in
// `order`; kernels are unioned. `parallel` > 1 runs passes on worker threads
// and merges in family order.
ColorCodingRun run_color_coding(const Matchoid& mc, const CoverageInstance& instance,
                                std::span<const ElementId> order, std::size_t z,
                                std::span<const HashFunction> family,
                                std::size_t parallel = 1);

// repetitions(z, eps) passes with independently seeded hash functions.
ColorCodingRun randomized_driver(const Matchoid& mc, const CoverageInstance& instance,
                                 std::span<const ElementId> order, std::size_t z,
                                 double eps, std::uint64_t seed,
                                 std::size_t parallel = 1);

class FamilyError : public std::runtime_error {
 public:
  FamilyError(const std::string& what, std::vector<PointId> uncovered)
      : std::runtime_error(what), uncovered_(std::move(uncovered)) {}
  const std::vector<PointId>& uncovered() const { return uncovered_; }

 private:
  std::vector<PointId> uncovered_;
};

// Hash functions such that every min(z, |points|)-subset of `points` is
// colored injectively by at least one member, built by accepting successive
// seeds that separate a not-yet-separated subset. Throws FamilyError when the
// seed cap max(16, ceil(10 e^z z ln|points|)) is exhausted. Requires
// |points| <= 30 and z <= 4.
std::vector<HashFunction> perfect_family(std::uint32_t z, std::span<const PointId> points,
                                         std::uint64_t num_points,
                                         std::uint64_t first_seed = 0);

struct WeightedSolution {
  ElementSet set;
  double value = 0.0;
};

// Feasible subset of r with at most z elements maximizing the weight of its z
// heaviest covered points (full point sets, not pruned ones).
WeightedSolution extract_weighted_solution(std::span<const ElementId> r,
                                           const Matchoid& mc, std::size_t z,
                                           const CoverageInstance& instance);

}  // namespace repkernel

#endif  // REPKERNEL_COLORCODE_H_
