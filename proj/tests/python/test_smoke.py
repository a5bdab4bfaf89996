# Copyright 2026 The steerlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests of the Python bindings."""

import math

import pytest

import steerlab

ZX = {
    "alice_qubits": 1,
    "setting_1": {"type": "tensor_pauli", "axes": "z"},
    "setting_2": {"type": "tensor_pauli", "axes": "x"},
}


def theta_state(theta):
    return {
        "n_qubits": 2,
        "state": {"type": "ensemble", "terms": [{"weight": 1, "vector": [math.cos(theta), 0, 0, math.sin(theta)]}]},
    }


def test_demo_reports_paradox():
    report = steerlab.demo("two-qubit")
    assert report["verdict"] == "PARADOX"
    assert report["quantum_trace_sum"] == pytest.approx(2.0, abs=1e-9)
    assert report["lhs_trace_sum"] == pytest.approx(1.0, abs=1e-9)


def test_certify_with_lp():
    report = steerlab.certify(theta_state(math.pi / 8), ZX, lp=True)
    assert report["verdict"] == "PARADOX"
    assert report["lp_verdict"] == "infeasible"


def test_conditional_state_traces():
    theta = math.pi / 6
    z = steerlab.conditional_states(theta_state(theta), ZX, 1)
    assert [label for label, _, _ in z] == ["0", "1"]
    assert z[0][1] == pytest.approx(math.cos(theta) ** 2, abs=1e-12)
    assert z[1][1] == pytest.approx(math.sin(theta) ** 2, abs=1e-12)


def test_lhs_model_for_product_state():
    product = {"n_qubits": 2, "state": {"type": "ensemble", "terms": [{"weight": 1, "vector": [1, 0, 0, 0]}]}}
    out = steerlab.lhs(product, ZX)
    assert out["result"]["feasible"] is True


def test_sweep_and_family():
    assert steerlab.sweep(2, 1, 2, 20, seed=4)["counts"]["PARADOX"] == 0
    assert steerlab.sweep(2, 1, 1, 20, seed=4, axes=("z", "x"))["counts"]["PARADOX"] == 20
    family = steerlab.max_rank_family(3, 2, 5)
    protocol = {
        "alice_qubits": 2,
        "setting_1": {"type": "bell_like", "beta": 0.3},
        "setting_2": {"type": "bell_like", "beta": 1.1},
    }
    assert steerlab.certify(family, protocol)["verdict"] == "PARADOX"


def test_linear_algebra_helpers():
    v = steerlab.transformation_matrix(1, 0.0, math.pi / 4)
    assert abs(v[0][0] - math.cos(math.pi / 4)) < 1e-12
    bell = [[0.5, 0, 0, 0.5], [0, 0, 0, 0], [0, 0, 0, 0], [0.5, 0, 0, 0.5]]
    reduced = steerlab.partial_trace(bell, 2, [0])
    assert steerlab.purity(reduced) == pytest.approx(0.5)
    assert steerlab.hermitian_eigvals(bell) == pytest.approx([0, 0, 0, 1], abs=1e-12)


def test_errors_map_to_python_exceptions():
    with pytest.raises(steerlab.ParseError):
        steerlab.certify({"n_qubits": 2}, ZX)
    with pytest.raises(ValueError):
        steerlab.demo("nope")
    bad = {"alice_qubits": 1, "setting_1": {"type": "tensor_pauli", "axes": "z"}, "setting_2": {"type": "tensor_pauli", "axes": "z"}}
    with pytest.raises(steerlab.ValidationError):
        steerlab.certify(theta_state(0.3), bad)
