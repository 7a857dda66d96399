# Copyright 2026 The Bananaworld Authors
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

"""Correlation arrays, polytope membership, CHSH/Klyachko/PBR checks and
seeded banana simulators.

Correlation arrays are plain dicts in the library's JSON layout:
``{"scenario": "2x2x2x2", "representation": "rational" | "float",
"entries": [{"a", "b", "x", "y", "p"}, ...]}`` with rationals as
``"num/den"`` strings.
"""

import json
from fractions import Fraction

from . import _core

__version__ = _core.version()
Error = _core.Error

__all__ = [
    "Error",
    "chsh",
    "chsh_max",
    "dimension",
    "infer_peeling_from_clone",
    "klyachko_quantum_sum",
    "membership",
    "noncontextual_max",
    "pbr_probabilities",
    "run_cli",
    "sample_epr",
    "table",
    "tsirelson_chsh",
    "vertex_count",
]


def _scalar(value):
    if isinstance(value, str):
        return Fraction(value)
    return value


def table(k):
    return json.loads(_core.table(k))


def chsh(array, variant=0):
    """Returns a Fraction for rational arrays and a float otherwise."""
    return _scalar(json.loads(_core.chsh(json.dumps(array), variant)))


def chsh_max(array):
    out = json.loads(_core.chsh_max(json.dumps(array)))
    return _scalar(out["value"]), out["variant"]


def membership(array, polytope="local", tolerance=1e-9):
    return json.loads(_core.membership(json.dumps(array), polytope, tolerance))


def vertex_count(kind):
    return _core.vertex_count(kind)


def dimension(vertex_set):
    return _core.dimension(vertex_set)


def tsirelson_chsh():
    return _core.tsirelson_chsh()


def klyachko_quantum_sum():
    return _core.klyachko_quantum_sum()


def noncontextual_max():
    return _core.noncontextual_max()


def pbr_probabilities(first_plus, second_plus):
    probabilities, blocked = _core.pbr_probabilities(first_plus, second_plus)
    return list(probabilities), blocked


def sample_epr(trials, seed):
    return json.loads(_core.sample_epr(trials, seed))


def infer_peeling_from_clone(j, k):
    return _core.infer_peeling_from_clone(j, k)


def run_cli(*args):
    """Runs a CLI command; returns (exit_code, parsed_json_or_text, stderr)."""
    code, out, err = _core.run_cli([str(a) for a in args])
    try:
        return code, json.loads(out), err
    except ValueError:
        return code, out, err
