# Copyright 2026 The rotsys Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Rotation systems, polyhedral embeddings and uniqueness certificates."""

from rotsys._core import (
    Embedding,
    Graph,
    RotsysError,
    classify_types,
    enumerate_rotations,
    equivalent,
    extract_witness,
    find_planar_embedding,
    genus_census,
    rotation_system_count,
    verify_cubic_corollary,
    verify_low_connectivity,
    verify_no_polyhedral_higher_genus,
    verify_whitney,
)

__all__ = [
    "Embedding",
    "Graph",
    "RotsysError",
    "classify_types",
    "enumerate_rotations",
    "equivalent",
    "extract_witness",
    "find_planar_embedding",
    "genus_census",
    "rotation_system_count",
    "verify_cubic_corollary",
    "verify_low_connectivity",
    "verify_no_polyhedral_higher_genus",
    "verify_whitney",
]
