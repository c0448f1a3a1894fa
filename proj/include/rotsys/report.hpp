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

// JSON views of the library's results. Objects are ordered_json so key order
// is fixed by construction and output is byte-stable.

#pragma once

#include <string>

#include "json.hpp"
#include "rotsys/compare.hpp"
#include "rotsys/enumerate.hpp"
#include "rotsys/polyhedral.hpp"
#include "rotsys/witness.hpp"

namespace rotsys::report {

using Json = nlohmann::ordered_json;

Json dart(const Dart& d);
Json face(const FaceWalk& w);
Json rotations(const EmbeddedGraph& g);
Json intersection(const IntersectionKind& kind);
Json violation(const PolyhedralViolation& v);
Json dual(const DualGraph& d);
Json types(const TypeAssignment& t);
Json anchor(const ProofAnchor& a);
Json witness(const Witness& w);
Json census(const CensusReport& c);
Json verification(const VerificationResult& r);

/// Two-space indented, newline-terminated.
std::string dump(const Json& j);

}  // namespace rotsys::report
