# Copyright 2026 The twograph Authors
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

"""Generalised two-graph stabilizer states."""

from ._twograph import (
    Graph,
    InvariantError,
    ParseError,
    PreconditionError,
    State,
    __version__,
    apply,
    apply_h,
    apply_lambda,
    apply_lambda_sq,
    apply_n,
    apply_n_inv,
    canon,
    classify,
    density_sweep,
    evaluate,
    from_graph_state,
    is_canonised,
    load_state,
    max_independent_set_over_orbit,
    oracle_check,
    parse_state,
    swp,
    sweep,
    table1,
    to_json,
    to_text,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
