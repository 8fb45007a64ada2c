"""Dense complex statevector core: named registers, single-qubit gates,
measurement probabilities, seeded shot sampling, and single-qubit reductions.

Conventions used throughout the package:
- qubit 0 is the most significant bit of the basis-state index;
- registers are listed most-significant first in a state's layout;
- all values are immutable after construction and every operation is pure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Construction renormalizes when the squared-norm deviation is at most
# NORM_REPAIR_LIMIT and rejects anything worse.
NORM_ATOL = 1e-12
NORM_REPAIR_LIMIT = 1e-9
UNITARY_ATOL = 1e-10

Layout = tuple[tuple[str, int], ...]

SQRT2_INV = 1.0 / math.sqrt(2.0)
HADAMARD = np.array([[SQRT2_INV, SQRT2_INV], [SQRT2_INV, -SQRT2_INV]], dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def rz(phi: float) -> np.ndarray:
    """R_z(phi) = diag(e^{-i phi/2}, e^{i phi/2})."""
    return np.array([[np.exp(-0.5j * phi), 0], [0, np.exp(0.5j * phi)]], dtype=complex)


def ry(theta: float) -> np.ndarray:
    """R_y(theta) = [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]."""
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=complex)


def _as_complex_vector(values) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d amplitude vector, got shape {arr.shape}")
    return arr


@dataclass(frozen=True)
class StateVector:
    """Unit-norm amplitudes over 2^n basis states with a named register layout."""

    amplitudes: np.ndarray
    layout: Layout = ()

    def __post_init__(self):
        amps = _as_complex_vector(self.amplitudes)
        dim = amps.shape[0]
        n = dim.bit_length() - 1
        if dim < 2 or (1 << n) != dim:
            raise ValueError(f"amplitude length {dim} is not a power of two >= 2")
        layout = tuple((str(name), int(k)) for name, k in self.layout) or (("q", n),)
        if sum(k for _, k in layout) != n:
            raise ValueError(f"layout {layout} does not describe {n} qubits")
        sq = float(np.sum(np.abs(amps) ** 2))
        if abs(sq - 1.0) > NORM_REPAIR_LIMIT:
            raise ValueError(f"state norm**2 = {sq!r} deviates beyond {NORM_REPAIR_LIMIT}")
        amps = amps / math.sqrt(sq)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "layout", layout)

    @property
    def n_qubits(self) -> int:
        return sum(k for _, k in self.layout)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def register_offset(self, name: str) -> int:
        """Index of the first (most significant) qubit of a named register."""
        offset = 0
        for reg, k in self.layout:
            if reg == name:
                return offset
            offset += k
        raise ValueError(f"no register named {name!r} in layout {self.layout}")

    def register_width(self, name: str) -> int:
        for reg, k in self.layout:
            if reg == name:
                return k
        raise ValueError(f"no register named {name!r} in layout {self.layout}")

    def with_layout(self, layout: Layout) -> "StateVector":
        return StateVector(self.amplitudes, layout)


@dataclass(frozen=True)
class DensityMatrix2x2:
    """Single-qubit density matrix: Hermitian, unit trace, eigenvalues in [0, 1]."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > NORM_ATOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > NORM_ATOL or abs(np.trace(m).imag) > NORM_ATOL:
            raise ValueError("density matrix trace differs from 1")
        eigs = np.linalg.eigvalsh(m)
        if eigs.min() < -NORM_ATOL or eigs.max() > 1.0 + NORM_ATOL:
            raise ValueError(f"eigenvalues {eigs} outside [0, 1]")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)


@dataclass(frozen=True)
class MeasurementRecord:
    """Outcome probabilities for one qubit, optionally with sampled shot counts."""

    qubit_index: int
    p0: float
    p1: float
    shots: int | None = None
    counts0: int | None = None
    counts1: int | None = None
    rng_seed: int | None = None

    def __post_init__(self):
        if abs(self.p0 + self.p1 - 1.0) > NORM_ATOL:
            raise ValueError(f"p0 + p1 = {self.p0 + self.p1!r} differs from 1")
        if self.shots is not None:
            if self.counts0 is None or self.counts1 is None:
                raise ValueError("shots given without counts")
            if self.counts0 + self.counts1 != self.shots:
                raise ValueError("counts do not add up to the number of shots")


def _amplitudes_of(state) -> np.ndarray:
    if isinstance(state, StateVector):
        return state.amplitudes
    return _as_complex_vector(state)


def inner_product(a, b) -> complex:
    """<a|b> = sum_i conj(a_i) * b_i for two amplitude vectors of equal length."""
    va, vb = _amplitudes_of(a), _amplitudes_of(b)
    if va.shape != vb.shape:
        raise ValueError(f"dimension mismatch: {va.shape[0]} vs {vb.shape[0]}")
    return complex(np.vdot(va, vb))


def _split_axis(state: StateVector, k: int) -> np.ndarray:
    """View amplitudes as (before, qubit k, after) with qubit 0 most significant."""
    n = state.n_qubits
    if not 0 <= k < n:
        raise ValueError(f"qubit index {k} out of range for {n} qubits")
    return state.amplitudes.reshape(1 << k, 2, -1)


def apply_single_qubit_gate(state: StateVector, k: int, gate: np.ndarray) -> StateVector:
    """Apply a 2x2 unitary to qubit k, returning a new state with the same layout."""
    g = np.asarray(gate, dtype=complex)
    if g.shape != (2, 2):
        raise ValueError(f"gate must be 2x2, got shape {g.shape}")
    if np.max(np.abs(g.conj().T @ g - np.eye(2))) > UNITARY_ATOL:
        raise ValueError("gate is not unitary")
    cube = _split_axis(state, k)
    out = np.einsum("ij,ajb->aib", g, cube).reshape(-1)
    return StateVector(out, state.layout)


def measure_qubit_probabilities(state: StateVector, k: int) -> MeasurementRecord:
    """Born-rule probabilities of observing qubit k in |0> / |1>."""
    cube = _split_axis(state, k)
    p = np.sum(np.abs(cube) ** 2, axis=(0, 2))
    return MeasurementRecord(qubit_index=k, p0=float(p[0]), p1=float(p[1]))


def sample_measurements(
    state: StateVector, k: int, shots: int, seed: int
) -> MeasurementRecord:
    """Draw binomial shot counts for qubit k from a deterministic seeded generator."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    exact = measure_qubit_probabilities(state, k)
    rng = np.random.default_rng(seed)
    c0 = int(rng.binomial(shots, min(max(exact.p0, 0.0), 1.0)))
    return MeasurementRecord(
        qubit_index=k,
        p0=exact.p0,
        p1=exact.p1,
        shots=shots,
        counts0=c0,
        counts1=shots - c0,
        rng_seed=seed,
    )


def partial_trace_single_qubit(state: StateVector, k: int) -> DensityMatrix2x2:
    """Reduced density matrix of qubit k: trace out every other qubit."""
    cube = _split_axis(state, k)
    rho = np.einsum("aib,ajb->ij", cube, cube.conj())
    return DensityMatrix2x2(rho)


def purity(rho: DensityMatrix2x2) -> float:
    """Tr(rho^2); lies in [1/2, 1] for a single qubit."""
    m = rho.entries
    return float(np.trace(m @ m).real)


def expectation_z(state: StateVector, k: int) -> float:
    """<sigma_z> on qubit k, i.e. p0 - p1."""
    rec = measure_qubit_probabilities(state, k)
    return rec.p0 - rec.p1
