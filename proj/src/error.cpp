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

#include "eventree/error.hpp"

namespace eventree {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::ParallelEdge: return "ParallelEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::NotRegular: return "NotRegular";
    case Errc::Bipartite: return "Bipartite";
    case Errc::Disconnected: return "Disconnected";
    case Errc::OddDegree: return "OddDegree";
    case Errc::NotEvenRegular: return "NotEvenRegular";
    case Errc::NotOddRegular: return "NotOddRegular";
    case Errc::BadFactor: return "BadFactor";
    case Errc::VertexNotInComponent: return "VertexNotInComponent";
    case Errc::NotOddCycle: return "NotOddCycle";
    case Errc::LemmaViolation: return "LemmaViolation";
    case Errc::SpliceInvariantViolation: return "SpliceInvariantViolation";
    case Errc::NotEvenTree: return "NotEvenTree";
    case Errc::NotATree: return "NotATree";
    case Errc::InfeasibleSpec: return "InfeasibleSpec";
    case Errc::RejectionBudgetExhausted: return "RejectionBudgetExhausted";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace eventree
