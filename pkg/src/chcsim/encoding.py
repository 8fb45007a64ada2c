"""Classical-to-quantum feature maps.

Plain amplitude encoding stores one real vector per register; compact
amplitude encoding stores a (+1-class, -1-class) vector pair in a single
register, the first as the real part and the second as the imaginary part
of the amplitudes. Pairing of a labeled dataset into such registers is a
seeded, reproducible policy.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .statevector import NORM_ATOL, StateVector, inner_product

SQRT2_INV = 1.0 / math.sqrt(2.0)


def _as_real_vector(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.shape[0] < 1:
        raise ValueError(f"expected a non-empty 1-d real vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector has non-finite entries")
    return arr


def pad_to_power_of_two(x) -> np.ndarray:
    """Append zeros until the length is the next power of two."""
    arr = _as_real_vector(x)
    n = arr.shape[0]
    target = 1 << max(0, (n - 1).bit_length())
    if target == n:
        return arr.copy()
    return np.concatenate([arr, np.zeros(target - n)])


def unit_normalized(x) -> np.ndarray:
    """Scale a nonzero vector to unit Euclidean norm."""
    arr = _as_real_vector(x)
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return arr / norm


def amplitude_encode(x) -> StateVector:
    """Encode x as real amplitudes x_i / ||x|| over ceil(log2 N) qubits."""
    arr = pad_to_power_of_two(x)
    if arr.shape[0] < 2:
        arr = np.concatenate([arr, np.zeros(1)])
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("cannot amplitude-encode the zero vector")
    return StateVector(arr / norm)


def normalize_pair(
    plus: np.ndarray | None, minus: np.ndarray | None
) -> tuple[np.ndarray | None, np.ndarray | None]:
    """Rescale a class pair so the joint register is a valid quantum state.

    Both sides present: each is scaled to norm 1/sqrt(2) so the squared norms
    add to one. A lone side (imbalanced data) is scaled to norm 1; the weight
    mismatch this creates relative to full pairs can be compensated via the
    pairing weights (see build_pair_set) and the relative-phase angle.
    """
    if plus is None and minus is None:
        raise ValueError("a pair needs at least one vector")
    target = SQRT2_INV if (plus is not None and minus is not None) else 1.0

    def scale(v):
        if v is None:
            return None
        arr = _as_real_vector(v)
        norm = float(np.linalg.norm(arr))
        if norm == 0.0:
            raise ValueError("pair side is the zero vector")
        return arr * (target / norm)

    return scale(plus), scale(minus)


def compact_encode(plus: np.ndarray | None, minus: np.ndarray | None) -> StateVector:
    """Build the one-register state with amplitudes plus_j + i*minus_j.

    Inputs must already be scaled by normalize_pair; the combined squared
    norm has to be 1 within 1e-12.
    """
    if plus is None and minus is None:
        raise ValueError("a pair needs at least one vector")
    p = pad_to_power_of_two(plus) if plus is not None else None
    m = pad_to_power_of_two(minus) if minus is not None else None
    if p is not None and m is not None and p.shape != m.shape:
        raise ValueError(f"pair dimensions differ: {p.shape[0]} vs {m.shape[0]}")
    dim = (p if p is not None else m).shape[0]
    if dim < 2:
        dim = 2
    amps = np.zeros(dim, dtype=complex)
    if p is not None:
        amps[: p.shape[0]] += p
    if m is not None:
        amps[: m.shape[0]] += 1j * m
    sq = float(np.sum(np.abs(amps) ** 2))
    if abs(sq - 1.0) > NORM_ATOL:
        raise ValueError(f"pair is not normalized: squared norm {sq!r}")
    return StateVector(amps)


def cae_overlap(test, pair: tuple[np.ndarray | None, np.ndarray | None]) -> complex:
    """Overlap between an amplitude-encoded test vector and a compact register.

    For a full pair this equals (<test|plus_hat> + i <test|minus_hat>) / sqrt(2)
    with unit-normalized class vectors, and it always equals
    inner_product(amplitude_encode(test), compact_encode(*pair)).
    """
    plus, minus = pair
    t = amplitude_encode(test).amplitudes.real
    dim = t.shape[0]

    def overlap(v):
        if v is None:
            return 0.0
        arr = pad_to_power_of_two(v)
        if arr.shape[0] != dim:
            raise ValueError(f"dimension mismatch: test {dim} vs pair {arr.shape[0]}")
        return float(np.dot(t, arr))

    return complex(overlap(plus), overlap(minus))


@dataclass(frozen=True)
class EncodedPairSet:
    """Per-register class pairs (already scaled) with their mixing weights.

    pairs[j] holds (plus, minus); one side may be None for imbalanced data.
    Weights are positive and sum to one.
    """

    pairs: tuple[tuple[np.ndarray | None, np.ndarray | None], ...]
    weights: np.ndarray
    pairing_seed: int = 0

    def __post_init__(self):
        if len(self.pairs) == 0:
            raise ValueError("pair set is empty")
        dims = set()
        frozen = []
        for plus, minus in self.pairs:
            if plus is None and minus is None:
                raise ValueError("a pair needs at least one vector")
            sides = []
            for v in (plus, minus):
                if v is None:
                    sides.append(None)
                    continue
                arr = np.array(v, dtype=float)
                arr.setflags(write=False)
                dims.add(arr.shape[0])
                sides.append(arr)
            frozen.append(tuple(sides))
        if len(dims) != 1:
            raise ValueError(f"pair vectors disagree on dimension: {sorted(dims)}")
        w = np.array(self.weights, dtype=float)
        if w.shape != (len(self.pairs),):
            raise ValueError("one weight per pair required")
        if np.any(w <= 0) or abs(float(w.sum()) - 1.0) > NORM_ATOL:
            raise ValueError("weights must be positive and sum to 1")
        w.setflags(write=False)
        object.__setattr__(self, "pairs", tuple(frozen))
        object.__setattr__(self, "weights", w)

    @property
    def n_pairs(self) -> int:
        return len(self.pairs)

    @property
    def dim(self) -> int:
        for plus, minus in self.pairs:
            v = plus if plus is not None else minus
            return v.shape[0]
        raise AssertionError("unreachable")

    def register_state(self, j: int) -> StateVector:
        return compact_encode(*self.pairs[j])


def make_pair_set(
    raw_pairs,
    weights=None,
    pairing_seed: int = 0,
    weight_correction: bool = False,
) -> EncodedPairSet:
    """Normalize explicit (plus, minus) raw vectors into an EncodedPairSet.

    Each present side is unit-normalized, zero-padded to a power of two, and
    rescaled by normalize_pair. Weights default to uniform; with
    weight_correction, lone-sided pairs are down-weighted by 1/sqrt(2) before
    renormalization so every datum contributes comparably to the score.
    """
    normalized = []
    unpaired = []
    for plus, minus in raw_pairs:
        p = pad_to_power_of_two(unit_normalized(plus)) if plus is not None else None
        m = pad_to_power_of_two(unit_normalized(minus)) if minus is not None else None
        normalized.append(normalize_pair(p, m))
        unpaired.append(p is None or m is None)
    if weights is None:
        w = np.ones(len(normalized))
        if weight_correction:
            w[np.asarray(unpaired)] = SQRT2_INV
        w = w / w.sum()
    else:
        w = np.asarray(weights, dtype=float)
    return EncodedPairSet(pairs=tuple(normalized), weights=w, pairing_seed=pairing_seed)


def build_pair_set(
    features,
    labels,
    pairing_seed: int = 0,
    weight_correction: bool = False,
) -> EncodedPairSet:
    """Pair a labeled dataset into compact registers, seeded and reproducible.

    Each class is shuffled independently with the seed and zipped index-wise;
    leftover data of the larger class become lone-sided registers.
    """
    X = np.asarray(features, dtype=float)
    y = np.asarray(labels)
    if X.ndim != 2 or X.shape[0] != y.shape[0]:
        raise ValueError("features must be (M, N) with one label per row")
    if not set(np.unique(y)) <= {-1, 1}:
        raise ValueError("labels must be +1 or -1")
    rng = np.random.default_rng(pairing_seed)
    plus_rows = X[y == 1][rng.permutation(int(np.sum(y == 1)))]
    minus_rows = X[y == -1][rng.permutation(int(np.sum(y == -1)))]
    n_pairs = max(len(plus_rows), len(minus_rows))
    if n_pairs == 0:
        raise ValueError("dataset has no rows")
    raw = [
        (
            plus_rows[j] if j < len(plus_rows) else None,
            minus_rows[j] if j < len(minus_rows) else None,
        )
        for j in range(n_pairs)
    ]
    return make_pair_set(
        raw, pairing_seed=pairing_seed, weight_correction=weight_correction
    )
