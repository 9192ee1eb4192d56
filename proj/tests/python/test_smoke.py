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

import pytest

import djulia

CARLITZ_F2 = "q = 2\nrank = 1\ncoeffs = [1]\n"


def test_jinv_carlitz():
    d = djulia.jinv(CARLITZ_F2)
    assert d["q"] == 2
    assert d["rank"] == 1
    assert d["h_j"] == "0"


def test_torsion_points():
    d = djulia.torsion(CARLITZ_F2)
    assert d["size_log_q"] == 2
    assert sorted(d["points"]) == ["0", "1", "t", "t+1"]
    assert d["annihilator"] == "T^2+T"


def test_mu_and_adelic():
    d = djulia.mu(CARLITZ_F2, N=0, ideal="T")
    assert d["mu"] == "1"
    assert d["adelic_holds"] is True


def test_local_and_julia():
    d = djulia.local_invariants(CARLITZ_F2, "t")
    assert d["good_reduction"] is True
    j = djulia.julia(CARLITZ_F2, "t", point="t")
    assert j["decided"] is True and j["contained"] is True


def test_elliptic_csv():
    csv = "label,p,ord_delta,ord_cond,ord_j,weight\n11a1,11,5,1,-5,1\n"
    out = djulia.elliptic_csv(csv, n=6)
    assert "11a1,5,1,true" in out


def test_errors_become_valueerror():
    with pytest.raises(ValueError, match="ParseError"):
        djulia.jinv("q = 6\nrank = 1\ncoeffs = [1]\n")
    with pytest.raises(ValueError):
        djulia.local_invariants(CARLITZ_F2, "t^2")  # not irreducible
