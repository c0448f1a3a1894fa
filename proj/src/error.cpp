// Copyright 2026 The rotsys Authors
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

#include "rotsys/error.hpp"

#include <algorithm>

namespace rotsys {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateNeighbor: return "DuplicateNeighbor";
    case Errc::Disconnected: return "Disconnected";
    case Errc::BadVertexId: return "BadVertexId";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::UnknownDart: return "UnknownDart";
    case Errc::DifferentTails: return "DifferentTails";
    case Errc::SharedDart: return "SharedDart";
    case Errc::SameFace: return "SameFace";
    case Errc::UnderlyingMismatch: return "UnderlyingMismatch";
    case Errc::LowDegree: return "LowDegree";
    case Errc::EquivalentInput: return "EquivalentInput";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotCubic: return "NotCubic";
    case Errc::NotPlanar: return "NotPlanar";
    case Errc::Not3Connected: return "Not3Connected";
    case Errc::Is3Connected: return "Is3Connected";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalError: return "InternalError";
  }
  return "Unknown";
}

std::string_view to_string(Precondition reason) {
  switch (reason) {
    case Precondition::NotPlane: return "NotPlane";
    case Precondition::NotPolyhedralRef: return "NotPolyhedralRef";
    case Precondition::Not3Connected: return "Not3Connected";
    case Precondition::UnderlyingMismatch: return "UnderlyingMismatch";
  }
  return "Unknown";
}

namespace {

std::string join_issues(const std::vector<Issue>& issues) {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += to_string(issue.code);
    out += ": ";
    out += issue.detail;
  }
  return out;
}

}  // namespace

EmbeddingError::EmbeddingError(std::vector<Issue> issues)
    : Error(issues.empty() ? Errc::InternalError : issues.front().code, join_issues(issues)),
      issues_(std::move(issues)) {}

bool EmbeddingError::has(Errc code) const noexcept {
  return std::any_of(issues_.begin(), issues_.end(),
                     [code](const Issue& i) { return i.code == code; });
}

PreconditionError::PreconditionError(Precondition reason)
    : Error(Errc::PreconditionFailed,
            "precondition failed: " + std::string(to_string(reason))),
      reason_(reason) {}

ParseError::ParseError(int line, const std::string& message)
    : Error(Errc::ParseError,
            line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

void internal_error(const std::string& what) {
  throw Error(Errc::InternalError, "internal invariant violated: " + what);
}

}  // namespace rotsys
