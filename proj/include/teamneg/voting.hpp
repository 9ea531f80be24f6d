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

#ifndef TEAMNEG_VOTING_HPP_
#define TEAMNEG_VOTING_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace teamneg {

// utilities[member][proposal]
using UtilityMatrix = std::vector<std::vector<double>>;

// Strict majority: more than half of the votes are Accept.
bool majority_accepts(const std::vector<bool>& votes);
bool unanimity_accepts(const std::vector<bool>& votes);

// Approval marks per proposal. Member k approves proposal j when its utility
// for j is at least `reference[k]` (the utility of its own proposal).
std::vector<int> approval_marks(const UtilityMatrix& utilities,
                                std::span<const double> reference);

// One member's Borda scores: proposals are ranked by utility, best first, with
// equal utilities ordered by proposal index; the proposal at rank position r
// scores (count - 1 - r).
std::vector<int> borda_scores(std::span<const double> utilities);

// Per-proposal sums of every member's Borda scores.
std::vector<int> borda_totals(const UtilityMatrix& utilities);

// Index of the largest tally, lowest index on ties.
std::size_t select_winner(std::span<const int> tallies);

}  // namespace teamneg

#endif  // TEAMNEG_VOTING_HPP_
