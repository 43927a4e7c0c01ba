// Copyright 2026 The QSS Authors
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

#ifndef QSS_GROVER_H_
#define QSS_GROVER_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "qss/rng.h"

namespace qss::net {

enum class PhaseMode { standard, phase_matched };

// Success probability of `iterations` generalized Grover iterations
// G = -I_s(phase) I_m(phase), simulated on the two-dimensional subspace
// spanned by the uniform marked and unmarked components. phase = pi is the
// textbook Grover operator.
double grover_rotation(std::uint64_t n, std::uint64_t marked,
                       std::uint64_t iterations, double phase);

// Fewest iterations for which a phase-matched run succeeds with certainty:
// the smallest k with sin(pi / (4k + 2)) <= sqrt(M / N).
std::uint64_t phase_matched_iterations(std::uint64_t n, std::uint64_t marked);

// Phase phi = 2 asin(sin(pi / (4k + 2)) / sqrt(M / N)) that makes k iterations
// land exactly on the marked subspace. Requires k >= phase_matched_iterations.
double phase_matched_angle(std::uint64_t n, std::uint64_t marked,
                           std::uint64_t iterations);

// standard: sin^2((2k+1) theta), theta = asin(sqrt(M/N)), by simulation.
// phase_matched: the run above with phase_matched_angle(N, M, k); throws
// PreconditionError if k is below phase_matched_iterations(N, M).
double grover_long(std::uint64_t n, std::uint64_t marked, std::uint64_t iterations,
                   PhaseMode mode);

enum class SearchMode { ideal, simulated };

struct SearchOutcome {
  std::size_t index = 0;
  std::uint64_t iterations_used = 0;  // Grover iterations, summed over the run
  std::uint64_t measurements = 0;
  SearchMode mode = SearchMode::ideal;
};

// Growth factor of the randomized iteration bound.
inline constexpr double kIterationGrowth = 6.0 / 5.0;
// Above this marked fraction the randomized schedule is used; below it a
// single phase-matched run.
inline constexpr double kDenseMarkedFraction = 1.0 / 9.0;

// Minimum search over `values`, ordered by (value, index) so ties resolve to
// the lowest index. ideal: exact argmin. simulated: threshold descent from a
// random starting element; each stage searches for an element below the
// current threshold and the run stops after ceil(log2 N) consecutive stages
// without improvement.
SearchOutcome oqmsa_min(std::span<const double> values, Rng& rng, SearchMode mode);

}  // namespace qss::net

#endif  // QSS_GROVER_H_
