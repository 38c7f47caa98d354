# Copyright 2026 The fdasim Authors
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


"""Python bindings for the fdasim C++ core."""

from ._fdasim import (
    AmsSketch,
    ConfigError,
    DimensionMismatch,
    DivergenceError,
    KindMismatch,
    SketchTransform,
    average,
    compute_xi,
    dot,
    h_linear,
    h_sketch,
    make_blobs,
    norm_sq,
    run,
    run_experiment,
    sketch_epsilon,
    theta_preset,
    variance_exact,
    variance_from_drifts,
)

__all__ = [
    "AmsSketch",
    "ConfigError",
    "DimensionMismatch",
    "DivergenceError",
    "KindMismatch",
    "SketchTransform",
    "average",
    "compute_xi",
    "dot",
    "h_linear",
    "h_sketch",
    "make_blobs",
    "norm_sq",
    "run",
    "run_experiment",
    "sketch_epsilon",
    "theta_preset",
    "variance_exact",
    "variance_from_drifts",
]
