# Copyright 2026 The miura-scatter authors
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
"""Direct and inverse scattering for ZS-AKNS systems and the Miura map.

Arrays are numpy vectors on uniform grids. Frequencies are centred:
s_k = (k - n/2) * 2*pi / (n*h).

    >>> import miura_scatter as ms
    >>> g = ms.Grid.window(-20, 20, 4096)
    >>> u = ms.Potential.example("box:alpha=0.4", g)
    >>> r = ms.reflection(ms.solve_scattering(u), ms.Side.RIGHT)
    >>> rec = ms.invert(r)
"""

from ._core import (
    BijectionReport,
    Grid,
    InvariantError,
    Kernel,
    MiuraError,
    MiuraPotential,
    Potential,
    PreconditionError,
    Reconstruction,
    Reflection,
    ScatteringData,
    SchrodingerScattering,
    Side,
    UsageError,
    a_from_modulus,
    cauchy_plus,
    example_names,
    invert,
    involute,
    marchenko_kernel,
    miura_map,
    reflection,
    schrodinger_reflection,
    solve_scattering,
    verify_bijection,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
