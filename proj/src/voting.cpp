// Copyright 2026 The teamneg Authors
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

#include "teamneg/voting.hpp"

#include <algorithm>
#include <numeric>

#include "teamneg/error.hpp"

namespace teamneg {

bool majority_accepts(const std::vector<bool>& votes) {
  const auto yes = std::count(votes.begin(), votes.end(), true);
  return 2 * static_cast<std::size_t>(yes) > votes.size();
}

bool unanimity_accepts(const std::vector<bool>& votes) {
  return !votes.empty() && std::all_of(votes.begin(), votes.end(),
                                       [](bool v) { return v; });
}

std::vector<int> approval_marks(const UtilityMatrix& utilities,
                                std::span<const double> reference) {
  if (utilities.size() != reference.size()) {
    throw InvalidArgument("one reference utility per member is required");
  }
  const std::size_t proposals = utilities.empty() ? 0 : utilities.front().size();
  std::vector<int> marks(proposals, 0);
  for (std::size_t k = 0; k < utilities.size(); ++k) {
    if (utilities[k].size() != proposals) {
      throw InvalidArgument("ragged utility matrix");
    }
    for (std::size_t j = 0; j < proposals; ++j) {
      if (utilities[k][j] >= reference[k]) ++marks[j];
    }
  }
  return marks;
}

std::vector<int> borda_scores(std::span<const double> utilities) {
  const std::size_t n = utilities.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return utilities[a] > utilities[b];
  });
  std::vector<int> scores(n, 0);
  for (std::size_t rank = 0; rank < n; ++rank) {
    scores[order[rank]] = static_cast<int>(n - 1 - rank);
  }
  return scores;
}

std::vector<int> borda_totals(const UtilityMatrix& utilities) {
  const std::size_t proposals = utilities.empty() ? 0 : utilities.front().size();
  std::vector<int> totals(proposals, 0);
  for (const auto& row : utilities) {
    if (row.size() != proposals) throw InvalidArgument("ragged utility matrix");
    const auto scores = borda_scores(row);
    for (std::size_t j = 0; j < proposals; ++j) totals[j] += scores[j];
  }
  return totals;
}

std::size_t select_winner(std::span<const int> tallies) {
  if (tallies.empty()) throw InvalidArgument("no tallies to select from");
  return static_cast<std::size_t>(
      std::max_element(tallies.begin(), tallies.end()) - tallies.begin());
}

}  // namespace teamneg
