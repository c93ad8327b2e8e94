"""Target integrands, coordinate normalization and the reference quadrature oracle.

Three built-in benchmarks:

* ``cpf``  -- phase-modulated cosine ``cos(s + 0.5 sin 4s)`` on [-2pi, 2pi]
* ``step`` -- the sign-like step (-0.5 below 0, +0.5 at and above 0) on [-1, 1]
* ``bw``   -- relativistic Breit-Wigner line shape
             ``1 / ((s^2 - M_Z^2)^2 + M_Z^2 Gamma^2)`` on [60, 120] GeV

Reference integrals come from an adaptive Gauss-Kronrod (G7/K15) bisection
scheme, kept deliberately independent of the circuit models so it can serve as
the oracle for every derived value in the test suite.  The step benchmark is
integrated in closed form instead (its antiderivative is |s|/2).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import InvalidConfigError, QuadratureError

Z_BOSON_MASS_GEV = 91.1876
Z_BOSON_WIDTH_GEV = 2.4952
# Overall scale of the Breit-Wigner line shape.  Every metric in this package
# is invariant under a joint rescaling of target and reference, but the frozen
# reference integrals are not: this constant is what makes the resonance
# windows integrate to the tabulated values (see tests/test_benchmarks.py).
BW_NORMALIZATION = 1.0 + 3.0 * (Z_BOSON_WIDTH_GEV / Z_BOSON_MASS_GEV) ** 2


@dataclass(frozen=True)
class Benchmark:
    """A named integrand with its physical domain and reporting subintervals."""

    name: str
    domain: tuple[float, float]
    integrand: Callable[[float], float]
    named_subintervals: tuple[tuple[float, float], ...]
    constants: dict = field(default_factory=dict)
    exact_antiderivative: Callable[[float], float] | None = None

    def evaluate(self, s_phys: float) -> float:
        return self.integrand(s_phys)


def cpf_integrand(s: float) -> float:
    return math.cos(s + 0.5 * math.sin(4.0 * s))


def step_integrand(s: float) -> float:
    # The boundary point s = 0 belongs to the upper branch.
    return 0.5 if s >= 0 else -0.5


def bw_integrand(s: float) -> float:
    m2 = Z_BOSON_MASS_GEV**2
    return 1.0 / ((s * s - m2) ** 2 + m2 * Z_BOSON_WIDTH_GEV**2)


def _bw_window(k: float) -> tuple[float, float]:
    return (
        Z_BOSON_MASS_GEV - k * Z_BOSON_WIDTH_GEV,
        Z_BOSON_MASS_GEV + k * Z_BOSON_WIDTH_GEV,
    )


_BUILTINS = {
    "cpf": Benchmark(
        name="cpf",
        domain=(-2.0 * math.pi, 2.0 * math.pi),
        integrand=cpf_integrand,
        named_subintervals=(
            (0.0, math.pi / 2),
            (-math.pi / 2, math.pi / 2),
            (-math.pi, math.pi),
        ),
    ),
    "step": Benchmark(
        name="step",
        domain=(-1.0, 1.0),
        integrand=step_integrand,
        named_subintervals=((0.0, 0.5), (-0.5, 0.0), (-0.5, 0.5)),
        exact_antiderivative=lambda s: 0.5 * abs(s),
    ),
    "bw": Benchmark(
        name="bw",
        domain=(60.0, 120.0),
        integrand=bw_integrand,
        named_subintervals=(_bw_window(3), _bw_window(5), _bw_window(10)),
        constants={"M_Z": Z_BOSON_MASS_GEV, "Gamma": Z_BOSON_WIDTH_GEV},
    ),
}

_registry: dict[str, Benchmark] = dict(_BUILTINS)


def get_benchmark(name: str) -> Benchmark:
    try:
        return _registry[name.lower()]
    except KeyError:
        raise InvalidConfigError(
            f"unknown benchmark {name!r}; available: {sorted(_registry)}"
        ) from None


def register_benchmark(benchmark: Benchmark) -> None:
    """Plug-in interface: make a custom integrand addressable by name."""
    _registry[benchmark.name.lower()] = benchmark


def normalize(benchmark: Benchmark, s_phys: float) -> float:
    """Affine map of the physical coordinate onto [-1, 1]."""
    lo, hi = benchmark.domain
    return (2.0 * s_phys - (hi + lo)) / (hi - lo)


def denormalize(benchmark: Benchmark, x_norm: float) -> float:
    lo, hi = benchmark.domain
    return 0.5 * (x_norm * (hi - lo) + (hi + lo))


def normalized_integrand(benchmark: Benchmark) -> Callable[[float], float]:
    """The target as a function of the normalized coordinate (values stay physical)."""

    def f_norm(x: float) -> float:
        return benchmark.integrand(denormalize(benchmark, x))

    return f_norm


# --- Gauss-Kronrod 7/15 pair (standard QUADPACK abscissae and weights) ---

_KRONROD_NODES = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
)
_KRONROD_WEIGHTS = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
)
_GAUSS_WEIGHTS = {  # indices into _KRONROD_NODES that are also G7 nodes
    1: 0.129484966168870,
    3: 0.279705391489277,
    5: 0.381830050505119,
    7: 0.417959183673469,
}


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """One Kronrod-15 panel with the |K15 - G7| error estimate."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    kronrod = 0.0
    gauss = 0.0
    for i, node in enumerate(_KRONROD_NODES):
        if node == 0.0:
            fsum = f(center)
        else:
            fsum = f(center - half * node) + f(center + half * node)
        kronrod += _KRONROD_WEIGHTS[i] * fsum
        if i in _GAUSS_WEIGHTS:
            gauss += _GAUSS_WEIGHTS[i] * fsum
    kronrod *= half
    gauss *= half
    return kronrod, abs(kronrod - gauss)


def adaptive_quadrature(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = 1e-10,
    abs_floor: float = 1e-14,
    max_intervals: int = 4000,
) -> float:
    """Adaptive bisection quadrature to |error| <= max(rel_tol*|I|, abs_floor)."""
    if a == b:
        return 0.0
    sign = 1.0
    if b < a:
        a, b, sign = b, a, -1.0
    value, err = _gk15(f, a, b)
    # Max-heap on per-interval error via negated keys.
    heap = [(-err, a, b, value, err)]
    total = value
    total_err = err
    count = [1]  # heap pushes as a tiebreak for equal errors
    tiebreak = 0
    while total_err > max(rel_tol * abs(total), abs_floor):
        if len(heap) >= max_intervals:
            raise QuadratureError(
                f"quadrature on [{a}, {b}] stalled at error {total_err:.3e} "
                f"after {len(heap)} intervals"
            )
        _, lo, hi, val, e = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        left_val, left_err = _gk15(f, lo, mid)
        right_val, right_err = _gk15(f, mid, hi)
        total += left_val + right_val - val
        total_err += left_err + right_err - e
        tiebreak += 1
        heapq.heappush(heap, (-left_err, lo, mid, left_val, left_err))
        heapq.heappush(heap, (-right_err, mid, hi, right_val, right_err))
    return sign * total


def reference_integral(benchmark: Benchmark, a_phys: float, b_phys: float) -> float:
    """Oracle integral of the benchmark integrand over [a_phys, b_phys]."""
    lo, hi = benchmark.domain
    if not (min(lo, hi) - 1e-12 <= min(a_phys, b_phys) and max(a_phys, b_phys) <= max(lo, hi) + 1e-12):
        raise InvalidConfigError(
            f"[{a_phys}, {b_phys}] not inside the {benchmark.name} domain {benchmark.domain}"
        )
    if benchmark.exact_antiderivative is not None:
        return benchmark.exact_antiderivative(b_phys) - benchmark.exact_antiderivative(a_phys)
    return adaptive_quadrature(benchmark.integrand, a_phys, b_phys)
