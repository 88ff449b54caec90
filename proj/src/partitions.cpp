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

#include "fibshift/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "fibshift/zeckendorf.hpp"

namespace fibshift {

GoldenPartition GoldenPartition::from_endpoints(std::vector<FracPoint> eps,
                                                bool left_closed, bool right_closed) {
  if (eps.size() < 2) throw std::invalid_argument("GoldenPartition: need >= 2 endpoints");
  std::sort(eps.begin(), eps.end(),
            [](FracPoint a, FracPoint b) { return a.n < b.n; });
  eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
  std::sort(eps.begin(), eps.end(), frac_lt);
  for (size_t i = 0; i + 1 < eps.size(); ++i) {
    if (frac_cmp(eps[i], eps[i + 1]) == 0)
      throw std::logic_error("GoldenPartition: coinciding endpoints");
  }
  GoldenPartition p;
  p.endpoints_ = std::move(eps);
  p.left_closed_ = left_closed;
  p.right_closed_ = right_closed;
  return p;
}

CircInterval GoldenPartition::interval(size_t i) const {
  if (i >= endpoints_.size()) throw std::out_of_range("GoldenPartition::interval");
  size_t j = i + 1 == endpoints_.size() ? 0 : i + 1;
  return CircInterval{endpoints_[i], endpoints_[j], left_closed_, right_closed_};
}

void GoldenPartition::set_labels(std::vector<long long> labels) {
  if (labels.size() != endpoints_.size())
    throw std::invalid_argument("labels must align with intervals");
  labels_ = std::move(labels);
}

size_t GoldenPartition::locate_floor(FracPoint x) const {
  // Endpoints are sorted by fractional value; find the last one <= x,
  // wrapping to the largest when x precedes them all.
  auto it = std::upper_bound(endpoints_.begin(), endpoints_.end(), x,
                             [](FracPoint a, FracPoint b) { return frac_lt(a, b); });
  if (it == endpoints_.begin()) return endpoints_.size() - 1;
  return static_cast<size_t>(it - endpoints_.begin()) - 1;
}

size_t GoldenPartition::locate(FracPoint x) const {
  size_t i = locate_floor(x);
  if (frac_cmp(x, endpoints_[i]) == 0)
    throw std::invalid_argument("locate: point coincides with an endpoint");
  return i;
}

bool GoldenPartition::has_endpoint(FracPoint x) const {
  size_t i = locate_floor(x);
  return frac_cmp(x, endpoints_[i]) == 0;
}

QuadNum GoldenPartition::total_length() const {
  QuadNum sum = QuadNum::zero();
  for (size_t i = 0; i < size(); ++i) sum = sum + interval(i).length();
  return sum;
}

std::string GoldenPartition::debug_dump() const {
  std::ostringstream os;
  for (size_t i = 0; i < size(); ++i) {
    CircInterval iv = interval(i);
    os << (left_closed_ ? '[' : '(') << iv.left.n << "phi, " << iv.right.n << "phi"
       << (right_closed_ ? ']' : ')');
    if (!labels_.empty()) os << " " << labels_[i];
    char buf[64];
    std::snprintf(buf, sizeof buf, "  # %.5f -> %.5f", iv.left.value().approx(),
                  iv.right.value().approx());
    os << buf << "\n";
  }
  return os.str();
}

CircInterval lsd_interval(int d, long long m) {
  if (d < 2) throw std::invalid_argument("lsd_interval: d >= 2 required");
  if (m < 0 || m >= fib(d + 1)) throw std::invalid_argument("lsd_interval: m out of range");
  long long outer = -fib(d + 1) + m;
  long long inner = m < fib(d) ? -fib(d) + m : -fib(d + 2) + m;
  // The digit d+1 error-term analysis orients the arc by the parity of d.
  FracPoint left{d % 2 == 0 ? outer : inner};
  FracPoint right{d % 2 == 0 ? inner : outer};
  return CircInterval{left, right, true, false};
}

GoldenPartition lsd_partition(int d) {
  long long count = fib(d + 1);
  std::vector<FracPoint> lefts(count);
  std::vector<long long> labels(count);
  for (long long m = 0; m < count; ++m) lefts[m] = lsd_interval(d, m).left;
  std::vector<long long> order(count);
  for (long long m = 0; m < count; ++m) order[m] = m;
  std::sort(order.begin(), order.end(),
            [&](long long a, long long b) { return frac_lt(lefts[a], lefts[b]); });
  std::vector<FracPoint> eps(count);
  for (long long i = 0; i < count; ++i) {
    eps[i] = lefts[order[i]];
    labels[i] = order[i];
  }
  GoldenPartition p = GoldenPartition::from_endpoints(eps, true, false);
  // The sort must not have moved anything relative to from_endpoints.
  for (long long i = 0; i < count; ++i) {
    if (!(p.endpoints()[i] == eps[i])) throw std::logic_error("lsd_partition: order mismatch");
  }
  // Structural tiling check: each interval's right endpoint is the next left.
  for (long long i = 0; i < count; ++i) {
    CircInterval expect = lsd_interval(d, labels[i]);
    if (!(p.interval(i).left == expect.left) || !(p.interval(i).right == expect.right))
      throw std::logic_error("lsd_partition: intervals do not tile the circle");
  }
  p.set_labels(std::move(labels));
  return p;
}

long long locate_lsd(long long n, int d) {
  if (n < 0) throw std::invalid_argument("locate_lsd: n >= 0 required");
  GoldenPartition p = lsd_partition(d);
  return p.labels()[p.locate(FracPoint{n})];
}

std::vector<long long> msd_chain(long long r) {
  if (r > -2) throw std::invalid_argument("msd_chain: r <= -2 required");
  std::vector<long long> chain{r};
  while (chain.back() != -1) {
    long long next = drop_bit(chain.back());
    if (next <= chain.back() || next > -1)
      throw std::logic_error("msd_chain: magnitude must strictly decrease");
    chain.push_back(next);
  }
  return chain;
}

GoldenPartition msd_partition(long long r) {
  std::vector<long long> chain = msd_chain(r);
  std::vector<FracPoint> eps;
  eps.reserve(chain.size());
  for (long long v : chain) eps.push_back(FracPoint{v});
  GoldenPartition p = GoldenPartition::from_endpoints(std::move(eps), false, false);
  if (p.size() != chain.size()) throw std::logic_error("msd_partition: duplicate chain points");
  return p;
}

GoldenPartition combine(const GoldenPartition& a, const GoldenPartition& b) {
  if (a.left_closed() != b.left_closed() || a.right_closed() != b.right_closed())
    throw std::invalid_argument("combine: mixed interval conventions");
  std::vector<FracPoint> eps = a.endpoints();
  eps.insert(eps.end(), b.endpoints().begin(), b.endpoints().end());
  return GoldenPartition::from_endpoints(std::move(eps), a.left_closed(), b.right_closed());
}

namespace {

// Whole arc inside the ones region [-phi, -2phi)? Both boundary points must
// be endpoints of the ambient partition, so testing the left end suffices.
bool inside_ones_region(const CircInterval& I) {
  return fib_ones_interval(0).contains(I.left);
}

}  // namespace

CircInterval successor_interval(const GoldenPartition& P, const CircInterval& I, int a) {
  if (a != 0 && a != 1) throw std::invalid_argument("successor_interval: digit must be 0 or 1");
  long long x = I.left.n;
  long long y = I.right.n;
  if (x >= 0 || y >= 0)
    throw std::invalid_argument("successor_interval: endpoints must be negative");
  if (!P.has_endpoint(FracPoint{-1}) || !P.has_endpoint(FracPoint{-2}))
    throw std::invalid_argument("successor_interval: partition must split at -phi and -2phi");
  if (I.interior_contains(FracPoint{-1}) || I.interior_contains(FracPoint{-2}))
    throw std::invalid_argument("successor_interval: interval straddles -phi or -2phi");
  if (a == 1 && inside_ones_region(I))
    throw InvalidAppend("successor_interval: residents end in 1, cannot append 1");

  // Appending flips the interval: residents of (x phi, y phi) land in
  // (y^(a) phi, x^(a) phi). When the left end is -1 the raw image straddles
  // {-phi}; appended residents end in 0, which pins the right target to -1.
  long long u = append_bit(y, a);
  long long v = (x == -1 && a == 0) ? -1 : append_bit(x, a);
  if (u == v) throw std::logic_error("successor_interval: degenerate image");

  size_t idx = P.locate_floor(FracPoint{u});
  CircInterval J = P.interval(idx);
  // The image (u phi, v phi) must sit inside J: J's right end may not be
  // strictly inside the image.
  CircInterval image{FracPoint{u}, FracPoint{v}, false, false};
  if (!(J.right == image.right) && image.interior_contains(J.right))
    throw std::logic_error("successor_interval: image crosses a partition endpoint");
  return J;
}

}  // namespace fibshift
