"""Dense complex linear algebra for 1-3 qubit simulation.

Gate construction, pure-state and density-matrix evolution, Kraus channel
application and expectation values.  Everything is a plain ``complex128``
numpy array; states and matrices are value types and every operation returns
a new value.  Qubit 0 is the most significant bit of the computational-basis
label, so ``lift_operator(X, (0,), 2)`` is ``X (x) I``.

Rotation gates follow the convention ``R_sigma(theta) = exp(-i theta sigma / 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ChannelDefinitionError,
    InvalidInputError,
    NumericalConsistencyError,
    StateModeError,
)

UNITARY_ATOL = 1e-12
HERMITIAN_ATOL = 1e-12
NORM_ATOL = 1e-10
TRACE_ATOL = 1e-10
IMAG_ATOL = 1e-8

I2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
CZ = np.diag([1, 1, 1, -1]).astype(complex)

_ROTATION_GENERATORS = {"rx": PAULI_X, "ry": PAULI_Y, "rz": PAULI_Z}


def rotation_matrix(generator: np.ndarray, angle: float) -> np.ndarray:
    """exp(-i*angle/2 * generator) for an involutory generator (P^2 = I)."""
    dim = generator.shape[0]
    half = 0.5 * angle
    return np.cos(half) * np.eye(dim, dtype=complex) - 1j * np.sin(half) * generator


def gate_matrix(kind: str, angle: float | None = None) -> np.ndarray:
    """Return the unitary for a named gate.

    ``kind`` is one of ``RX``, ``RY``, ``RZ`` (need ``angle``), ``H`` or ``CZ``.
    Controlled versions of arbitrary unitaries come from :func:`controlled`.
    """
    key = kind.lower().replace("-", "_")
    if key in _ROTATION_GENERATORS:
        if angle is None or not np.isfinite(angle):
            raise InvalidInputError(f"{kind} requires a finite angle, got {angle!r}")
        return rotation_matrix(_ROTATION_GENERATORS[key], float(angle))
    if angle is not None:
        raise InvalidInputError(f"{kind} takes no angle")
    if key == "h":
        return HADAMARD.copy()
    if key == "cz":
        return CZ.copy()
    raise InvalidInputError(f"unknown gate kind {kind!r}")


def controlled(unitary: np.ndarray) -> np.ndarray:
    """|0><0| (x) I + |1><1| (x) U, control as the new most significant qubit."""
    dim = unitary.shape[0]
    out = np.eye(2 * dim, dtype=complex)
    out[dim:, dim:] = unitary
    return out


def is_unitary(matrix: np.ndarray, atol: float = UNITARY_ATOL) -> bool:
    dim = matrix.shape[0]
    return bool(np.allclose(matrix.conj().T @ matrix, np.eye(dim), atol=atol, rtol=0))


def is_hermitian(matrix: np.ndarray, atol: float = HERMITIAN_ATOL) -> bool:
    return bool(np.allclose(matrix, matrix.conj().T, atol=atol, rtol=0))


def lift_operator(op: np.ndarray, targets: tuple[int, ...], n_qubits: int) -> np.ndarray:
    """Embed ``op`` acting on ``targets`` into the full 2^n register.

    ``targets`` orders the operator's own qubits; they need not be adjacent.
    """
    k = len(targets)
    if op.shape != (2**k, 2**k):
        raise InvalidInputError(
            f"operator of shape {op.shape} does not act on {k} qubit(s)"
        )
    if len(set(targets)) != k or any(t < 0 or t >= n_qubits for t in targets):
        raise InvalidInputError(f"bad target qubits {targets} for n={n_qubits}")
    dim = 2**n_qubits
    # Bit of full index i belonging to qubit q (qubit 0 = MSB).
    shifts = [n_qubits - 1 - q for q in range(n_qubits)]
    idx = np.arange(dim)
    tbits = np.zeros(dim, dtype=np.int64)
    for pos, q in enumerate(targets):
        tbits = (tbits << 1) | ((idx >> shifts[q]) & 1)
    rest_mask = dim - 1
    for q in targets:
        rest_mask &= ~(1 << shifts[q])
    rbits = idx & rest_mask
    full = np.zeros((dim, dim), dtype=complex)
    same_rest = rbits[:, None] == rbits[None, :]
    full[same_rest] = op[tbits[:, None], tbits[None, :]][same_rest]
    return full


@dataclass
class QuantumState:
    """Either a statevector of length 2^n or a 2^n x 2^n density matrix."""

    mode: str  # "statevector" | "density"
    n_qubits: int
    data: np.ndarray

    def __post_init__(self):
        dim = 2**self.n_qubits
        self.data = np.asarray(self.data, dtype=complex)
        if self.mode == "statevector":
            if self.data.shape != (dim,):
                raise InvalidInputError(
                    f"statevector for {self.n_qubits} qubit(s) must have length {dim}"
                )
        elif self.mode == "density":
            if self.data.shape != (dim, dim):
                raise InvalidInputError(
                    f"density matrix for {self.n_qubits} qubit(s) must be {dim}x{dim}"
                )
        else:
            raise InvalidInputError(f"unknown state mode {self.mode!r}")

    @classmethod
    def zero_state(cls, n_qubits: int) -> "QuantumState":
        vec = np.zeros(2**n_qubits, dtype=complex)
        vec[0] = 1.0
        return cls("statevector", n_qubits, vec)

    @classmethod
    def plus_state(cls, n_qubits: int) -> "QuantumState":
        dim = 2**n_qubits
        return cls("statevector", n_qubits, np.full(dim, 1 / np.sqrt(dim), dtype=complex))

    @classmethod
    def from_density(cls, rho: np.ndarray) -> "QuantumState":
        n = int(round(np.log2(rho.shape[0])))
        return cls("density", n, rho)

    def to_density(self) -> "QuantumState":
        if self.mode == "density":
            return QuantumState("density", self.n_qubits, self.data.copy())
        return QuantumState("density", self.n_qubits, np.outer(self.data, self.data.conj()))

    def validate(self):
        """Check the mode's normalization/Hermiticity/positivity invariants."""
        if self.mode == "statevector":
            norm_sq = float(np.vdot(self.data, self.data).real)
            if abs(norm_sq - 1.0) > NORM_ATOL:
                raise NumericalConsistencyError(f"statevector norm^2 = {norm_sq}")
        else:
            if not is_hermitian(self.data):
                raise NumericalConsistencyError("density matrix not Hermitian")
            tr = float(np.trace(self.data).real)
            if abs(tr - 1.0) > TRACE_ATOL:
                raise NumericalConsistencyError(f"density trace = {tr}")
            min_eig = float(np.linalg.eigvalsh(self.data).min())
            if min_eig < -NORM_ATOL:
                raise NumericalConsistencyError(f"density min eigenvalue = {min_eig}")
        return self


def apply_gate(state: QuantumState, gate: np.ndarray, targets: tuple[int, ...]) -> QuantumState:
    """Apply a unitary to the targeted qubits; works in either mode."""
    full = lift_operator(gate, tuple(targets), state.n_qubits)
    if state.mode == "statevector":
        return QuantumState("statevector", state.n_qubits, full @ state.data)
    return QuantumState("density", state.n_qubits, full @ state.data @ full.conj().T)


def apply_kraus(
    state: QuantumState, ops: list[np.ndarray], targets: tuple[int, ...]
) -> QuantumState:
    """rho -> sum_i E_i rho E_i^dagger on the targeted qubits (density mode only)."""
    if state.mode != "density":
        raise StateModeError("Kraus channels act on density matrices only")
    dim_local = ops[0].shape[0]
    completeness = sum(e.conj().T @ e for e in ops)
    if not np.allclose(completeness, np.eye(dim_local), atol=TRACE_ATOL, rtol=0):
        raise ChannelDefinitionError("Kraus operators do not sum to identity")
    lifted = [lift_operator(e, tuple(targets), state.n_qubits) for e in ops]
    rho = sum(e @ state.data @ e.conj().T for e in lifted)
    return QuantumState("density", state.n_qubits, rho)


def expectation(state: QuantumState, observable: np.ndarray) -> float:
    """<psi|O|psi> or Tr(rho O); the imaginary residue must be negligible."""
    dim = 2**state.n_qubits
    if observable.shape != (dim, dim):
        raise InvalidInputError(
            f"observable shape {observable.shape} does not match {state.n_qubits} qubit(s)"
        )
    if state.mode == "statevector":
        value = complex(np.vdot(state.data, observable @ state.data))
    else:
        value = complex(np.trace(observable @ state.data))
    if abs(value.imag) > IMAG_ATOL:
        raise NumericalConsistencyError(f"expectation has imaginary part {value.imag}")
    return value.real
