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

// Text formats: rotation files for embeddings and graph6 for plain graphs.
//
// Rotation file:
//
//   # comment lines start with '#'; blank lines are skipped
//   4 6
//   0: 1 3 2
//   1: 2 3 0
//   2: 0 3 1
//   3: 0 1 2
//
// The header gives vertex and edge counts. Each of the n vertex lines lists
// the clockwise neighbor order of its label vertex; every label 0..n-1
// appears exactly once.

#pragma once

#include <string>
#include <string_view>

#include "rotsys/embedding.hpp"
#include "rotsys/graph.hpp"

namespace rotsys {

/// Throws ParseError for malformed text, and EmbeddingError (issue details
/// prefixed with the file line) when the content is not a valid embedding.
EmbeddedGraph parse_rotation_file(std::string_view text);

std::string serialize_rotation_file(const EmbeddedGraph& g);

/// One graph6 record; an optional ">>graph6<<" prefix and trailing
/// whitespace are accepted.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// True when the first non-comment, non-blank line holds exactly two
/// integers, i.e. the text looks like a rotation file header.
bool looks_like_rotation_file(std::string_view text);

}  // namespace rotsys
