// Copyright 2026 The schoolchoice Authors
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

// Reference computations written from the definitions, sharing no code with
// the library's evaluators. Tests compare the library against these.

#ifndef SCHOOLCHOICE_TESTS_SUPPORT_ORACLES_H_
#define SCHOOLCHOICE_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "schoolchoice/model.h"
#include "schoolchoice/rational.h"

namespace schoolchoice::testing {

// True when student s, holding weights w, is in no strict block of m.
bool StudentUnblocked(const Instance& inst, const Matching& m, int s,
                      const std::vector<Rational>& w);
bool StudentUnblocked(const Instance& inst, const Matching& m, int s,
                      const std::vector<double>& w);

// Stability probability by walking the joint support of all students'
// finite distributions (product space, no per-student factorization).
Rational JointSupportPros(const Instance& inst, const Matching& m);

// Two features: every uniform student's first weight replaced by the
// midpoints of `points` equal cells, stability checked per grid point.
double GridPros2F(const Instance& inst, const Matching& m, int points);

// Pr[u(ci) > u(cj)] (strict) or >= on a midpoint grid of the first weight.
double GridPrefers2F(const Instance& inst, int s, int ci, int cj, bool strict,
                     int points);
// Pr[c weakly beats every pool member] on the same grid.
double GridTop2F(const Instance& inst, int s, int c, const std::vector<int>& pool,
                 int points);

// Flat density on the 2-simplex: fraction of the centroids of a
// `divisions`^2 triangulation where `event(w)` holds.
double SimplexQuadrature3(const std::function<bool(const double*)>& event,
                          int divisions);

// Beta(a, b) cdf at x by composite Simpson on the density.
double BetaCdfQuadrature(double a, double b, double x, int panels = 20000);

// Sequential textbook student-proposing DA on explicit orders (best first).
Matching TextbookDa(const Instance& inst, const std::vector<std::vector<int>>& orders);

// Number of capacity-feasible matchings with unmatched allowed, by counting
// how many students each college takes (multinomial sum).
std::uint64_t CountMatchings(int n, const std::vector<int>& capacities);

// Weighted utility of college c for student s at weights w.
Rational Aggregate(const Instance& inst, int s, int c, const std::vector<Rational>& w);

// Strict order induced by a point mass, ties to the lower college index.
std::vector<int> InducedOrder(const Instance& inst, int s, const std::vector<Rational>& w);

}  // namespace schoolchoice::testing

#endif  // SCHOOLCHOICE_TESTS_SUPPORT_ORACLES_H_
