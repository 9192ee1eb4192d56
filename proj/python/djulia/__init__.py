# Copyright 2026 the djulia authors
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

"""Arithmetic dynamics of Drinfeld F_q[T]-modules over F_q(t)."""

from ._djulia import (
    elliptic_csv,
    family_csv,
    jinv,
    julia,
    local_invariants,
    mu,
    selftest,
    tate,
    torsion,
)

__all__ = [
    "elliptic_csv",
    "family_csv",
    "jinv",
    "julia",
    "local_invariants",
    "mu",
    "selftest",
    "tate",
    "torsion",
]

__version__ = "0.1.0"
