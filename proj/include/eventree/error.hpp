// Copyright 2026 The eventree Authors.
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

#ifndef EVENTREE_ERROR_HPP
#define EVENTREE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace eventree {

enum class Errc {
  LoopEdge,
  ParallelEdge,
  VertexOutOfRange,
  NotRegular,
  Bipartite,
  Disconnected,
  OddDegree,
  NotEvenRegular,
  NotOddRegular,
  BadFactor,
  VertexNotInComponent,
  NotOddCycle,
  LemmaViolation,
  SpliceInvariantViolation,
  NotEvenTree,
  NotATree,
  InfeasibleSpec,
  RejectionBudgetExhausted,
  UnknownFixture,
  BudgetExceeded,
  ParseError,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported through this one exception type; the
// code tells callers (and the CLI exit-code table) which class it belongs to.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eventree

#endif  // EVENTREE_ERROR_HPP
