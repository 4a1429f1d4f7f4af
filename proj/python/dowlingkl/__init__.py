# Copyright 2026 The Authors.
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

"""Exact Kazhdan-Lusztig / Z-polynomial engine for Dowling geometries.

All polynomial data crosses the boundary as nested lists of decimal
strings (ascending powers), so coefficients of any size survive the trip.
"""

from ._core import (
    CapExceededError,
    MismatchError,
    UsageError,
    kl_z,
    kl_z_for_group,
    labeling_class_count,
    lattice_census,
    scaled_table,
    series_counts,
    sturm_real_rooted,
    total_positivity_certificate,
    verify_theorem1,
    weighted_counts,
    whitney_row,
)

__all__ = [
    "CapExceededError",
    "MismatchError",
    "UsageError",
    "kl_z",
    "kl_z_for_group",
    "labeling_class_count",
    "lattice_census",
    "scaled_table",
    "series_counts",
    "sturm_real_rooted",
    "total_positivity_certificate",
    "verify_theorem1",
    "weighted_counts",
    "whitney_row",
]
