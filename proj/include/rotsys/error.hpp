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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rotsys {

/// Every failure raised by the library carries one of these codes.
enum class Errc {
  // Embedding construction.
  AsymmetricAdjacency,
  LoopEdge,
  DuplicateNeighbor,
  Disconnected,
  BadVertexId,
  EmptyGraph,
  // Dart and face queries.
  UnknownDart,
  DifferentTails,
  SharedDart,
  SameFace,
  // Comparison.
  UnderlyingMismatch,
  LowDegree,
  // Witness extraction.
  EquivalentInput,
  PreconditionFailed,
  // Enumeration and verifiers.
  TooLarge,
  NotCubic,
  NotPlanar,
  Not3Connected,
  Is3Connected,
  // Input files.
  ParseError,
  // A broken internal invariant. Never the result of valid input.
  InternalError,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// One problem found while validating a rotation system.
struct Issue {
  Errc code;
  std::string detail;
  int vertex = -1;  // vertex whose rotation exhibits the problem, if any
};

/// Raised by build_embedding. Validation does not stop at the first problem;
/// `issues()` lists all of them and `code()` is the first one's code.
class EmbeddingError : public Error {
 public:
  explicit EmbeddingError(std::vector<Issue> issues);

  const std::vector<Issue>& issues() const noexcept { return issues_; }
  bool has(Errc code) const noexcept;

 private:
  std::vector<Issue> issues_;
};

enum class Precondition { NotPlane, NotPolyhedralRef, Not3Connected, UnderlyingMismatch };

std::string_view to_string(Precondition reason);

class PreconditionError : public Error {
 public:
  explicit PreconditionError(Precondition reason);

  Precondition reason() const noexcept { return reason_; }

 private:
  Precondition reason_;
};

/// Malformed rotation file or graph6 input. `line()` is 1-based; 0 when the
/// input has no line structure (graph6 payload errors).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);

  int line() const noexcept { return line_; }

 private:
  int line_;
};

[[noreturn]] void internal_error(const std::string& what);

}  // namespace rotsys
