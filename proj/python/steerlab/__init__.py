# Copyright 2026 The steerlab Authors
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

"""Two-setting EPR steering paradox certifier.

States and protocols are plain dicts in the JSON schemas the ``steerlab`` CLI reads.
"""

import json

from . import _steerlab
from ._steerlab import (
    ArgumentError,
    DegenerateInputError,
    ParseError,
    PreconditionError,
    SizeError,
    SolverLimitError,
    UnsupportedSettingError,
    ValidationError,
    hermitian_eigvals,
    partial_trace,
    purity,
    transformation_matrix,
)

__all__ = [
    "ArgumentError",
    "DegenerateInputError",
    "ParseError",
    "PreconditionError",
    "SizeError",
    "SolverLimitError",
    "UnsupportedSettingError",
    "ValidationError",
    "certify",
    "conditional_states",
    "demo",
    "hermitian_eigvals",
    "lhs",
    "max_rank_family",
    "partial_trace",
    "purity",
    "sweep",
    "transformation_matrix",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def certify(state, protocol, lp=False, tolerance=None):
    """Report dict for a state/protocol pair."""
    return json.loads(_steerlab.certify_json(_text(state), _text(protocol), lp, tolerance))


def demo(name, theta=0.7853981633974483, lp=False):
    """Report dict for a built-in example: "two-qubit", "lc4" or "product"."""
    return json.loads(_steerlab.demo_json(name, theta, lp))


def conditional_states(state, protocol, which):
    """List of (outcome, probability, operator rows) for setting 1 or 2."""
    return _steerlab.conditional_state_list(_text(state), _text(protocol), which)


def lhs(state, protocol):
    """LP problem, Phase-I result and (when feasible) the LHS model."""
    return json.loads(_steerlab.lhs_json(_text(state), _text(protocol)))


def sweep(n_qubits, alice_qubits, rank, count, seed=0, axes=None):
    return json.loads(_steerlab.sweep_json(n_qubits, alice_qubits, rank, count, seed, axes))


def max_rank_family(n_qubits, alice_qubits, seed):
    return json.loads(_steerlab.max_rank_family_json(n_qubits, alice_qubits, seed))
