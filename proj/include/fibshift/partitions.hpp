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

#ifndef FIBSHIFT_PARTITIONS_HPP
#define FIBSHIFT_PARTITIONS_HPP

#include <string>
#include <vector>

#include "fibshift/golden.hpp"

namespace fibshift {

/// Partition of the circle [0,1) into arcs whose endpoints are points
/// {m*phi}. Stored in circle order starting from the endpoint of smallest
/// fractional value; interval i runs from endpoint i to endpoint i+1 (the
/// last wraps). All intervals share one closed/open convention.
class GoldenPartition {
 public:
  /// Build from distinct endpoint integers (deduplicated, sorted by
  /// fractional value). Labels, when given, ride along per interval after
  /// the same sort.
  static GoldenPartition from_endpoints(std::vector<FracPoint> eps,
                                        bool left_closed, bool right_closed);

  size_t size() const { return endpoints_.size(); }
  const std::vector<FracPoint>& endpoints() const { return endpoints_; }
  CircInterval interval(size_t i) const;
  const std::vector<long long>& labels() const { return labels_; }
  void set_labels(std::vector<long long> labels);

  /// Index of the interval whose left endpoint is the circular predecessor
  /// (or equal) of x by fractional value.
  size_t locate_floor(FracPoint x) const;
  /// Interval containing a sample point {n*phi}; x must not be an endpoint.
  size_t locate(FracPoint x) const;

  bool has_endpoint(FracPoint x) const;
  QuadNum total_length() const;

  bool left_closed() const { return left_closed_; }
  bool right_closed() const { return right_closed_; }

  bool operator==(const GoldenPartition& o) const {
    return endpoints_ == o.endpoints_ && left_closed_ == o.left_closed_ &&
           right_closed_ == o.right_closed_;
  }

  std::string debug_dump() const;

 private:
  std::vector<FracPoint> endpoints_;  // sorted by fractional value
  std::vector<long long> labels_;     // optional, aligned with intervals
  bool left_closed_ = true;
  bool right_closed_ = false;
};

/// Interval I_d(m) of the lsd partition: the set of points {n*phi} for the
/// nonnegative n whose Zeckendorf digits at indices 2..d sum to m.
CircInterval lsd_interval(int d, long long m);  // d >= 2, 0 <= m < F(d+1)

/// The F(d+1) intervals I_d(m), labeled by m, tiling [0,1).
GoldenPartition lsd_partition(int d);

/// Label m of the interval of lsd_partition(d) containing {n*phi}, found by
/// membership search (independent of the digit-window computation).
long long locate_lsd(long long n, int d);  // n >= 0

/// Drop-bit chain r, r', r'', ..., -1 of a negative integer r <= -2.
std::vector<long long> msd_chain(long long r);

/// Partition whose endpoints are the chain points {r_k * phi}; intervals are
/// open on both sides (sample points never meet the negative endpoints).
GoldenPartition msd_partition(long long r);  // r <= -2

/// Refinement with the union of both endpoint sets.
GoldenPartition combine(const GoldenPartition& a, const GoldenPartition& b);

/// The unique interval of P that receives every resident of I after the
/// digit a is appended. I must be an interval of a partition that has both
/// {-phi} and {-2phi} among its endpoints; appending 1 to an interval whose
/// residents all end in 1 is rejected with InvalidAppend.
CircInterval successor_interval(const GoldenPartition& P, const CircInterval& I, int a);

}  // namespace fibshift

#endif  // FIBSHIFT_PARTITIONS_HPP
