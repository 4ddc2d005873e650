"""Logarithmic potentials, period matrices and the annulus squeezing bound.

The scope is deliberately narrow: discrete measures with nonnegative node
weights, the period matrix apparatus needed to recover conformal radii of
circularly slit disks, and the closed-form squeezing function of the annulus
together with the coarse bounds used by the shrinking-boundary argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularMatrixError
from .prime import AnnulusModulus
from .slitmap import MobiusReal, SlitMapParams, f_eval, mobius_apply

NODE_CLEARANCE = 1e-12
MATRIX_TOL = 1e-10


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finitely supported positive measure: complex nodes with weights >= 0."""

    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        nodes = np.asarray(self.nodes, dtype=complex).ravel()
        weights = np.asarray(self.weights, dtype=float).ravel()
        if nodes.size == 0:
            raise DomainError("measure needs at least one node")
        if nodes.shape != weights.shape:
            raise DomainError("nodes and weights must have matching length")
        if not (np.all(np.isfinite(nodes.view(float))) and np.all(np.isfinite(weights))):
            raise DomainError("nodes and weights must be finite")
        if np.any(weights < 0.0):
            raise DomainError("weights must be nonnegative")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @property
    def total_mass(self) -> float:
        return float(self.weights.sum())


def uniform_circle_measure(
    radius: float, mass: float = 1.0, n_nodes: int = 4096, center: complex = 0j
) -> DiscreteMeasure:
    """Equal weights on equally spaced nodes of a circle."""
    if not (math.isfinite(radius) and radius > 0.0):
        raise DomainError("radius must be positive")
    if mass < 0.0 or not math.isfinite(mass):
        raise DomainError("mass must be nonnegative")
    if n_nodes < 1:
        raise DomainError("need at least one node")
    theta = 2.0 * np.pi * np.arange(n_nodes) / n_nodes
    nodes = center + radius * np.exp(1j * theta)
    weights = np.full(n_nodes, mass / n_nodes)
    return DiscreteMeasure(nodes, weights)


def uniform_arc_measure(
    radius: float,
    theta_min: float,
    theta_max: float,
    mass: float = 1.0,
    n_nodes: int = 1024,
    center: complex = 0j,
) -> DiscreteMeasure:
    """Equal weights on equally spaced nodes of a circular arc."""
    if theta_max <= theta_min:
        raise DomainError("arc needs theta_min < theta_max")
    theta = np.linspace(theta_min, theta_max, n_nodes)
    nodes = center + radius * np.exp(1j * theta)
    weights = np.full(n_nodes, mass / n_nodes)
    return DiscreteMeasure(nodes, weights)


def log_potential(mu: DiscreteMeasure, w):
    """Logarithmic potential sum_k w_k log(1/|w - z_k|) at w (scalar or array).

    Behaves like |mu| log(1/|w|) + O(1/|w|) far from the support, which is the
    normalization the radii solver relies on.
    """
    w_arr = np.asarray(w, dtype=complex)
    d = np.abs(w_arr[..., None] - mu.nodes)
    if np.any(d < NODE_CLEARANCE):
        raise DomainError("potential evaluated on top of a node")
    vals = -(mu.weights * np.log(d)).sum(axis=-1)
    if np.isscalar(w) or w_arr.shape == ():
        return float(vals)
    return vals


def annulus_harmonic_measure_inner(z, r: float) -> float:
    """Harmonic measure of the inner circle |z| = r of the annulus at z.

    Equals log|z| / log r: it is 1 on the inner boundary, 0 on the unit
    circle, and harmonic in between.
    """
    if not 0.0 < r < 1.0:
        raise DomainError("r must lie in (0, 1)")
    mag = np.abs(z)
    if np.any(mag < r * (1.0 - 1e-12)) or np.any(mag > 1.0 + 1e-12):
        raise DomainError("point must lie in the closed annulus")
    return np.log(mag) / math.log(r)


def annulus_period(r: float) -> float:
    """Diagonal period entry of the annulus: 1 / log(1/r)."""
    if not 0.0 < r < 1.0:
        raise DomainError("r must lie in (0, 1)")
    return 1.0 / math.log(1.0 / r)


@dataclass(frozen=True)
class PeriodMatrix:
    """Symmetric period matrix with zero row sums, one row per boundary piece.

    For an (n+1)-connected domain the matrix is (n+1) x (n+1); deleting any
    single row and column must leave an invertible block, which is checked
    lazily by the solver rather than at construction.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 2:
            raise DomainError("period matrix must be square, at least 2 x 2")
        if not np.all(np.isfinite(a)):
            raise DomainError("period matrix entries must be finite")
        scale = max(1.0, float(np.abs(a).max()))
        if np.abs(a - a.T).max() > MATRIX_TOL * scale:
            raise DomainError("period matrix must be symmetric")
        if np.abs(a.sum(axis=1)).max() > MATRIX_TOL * scale:
            raise DomainError("period matrix rows must sum to zero")
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0] - 1


def annulus_period_matrix(r: float) -> PeriodMatrix:
    """Period matrix of the annulus r < |z| < 1 (boundary 0 is the unit circle)."""
    lam = annulus_period(r)
    return PeriodMatrix(np.array([[lam, -lam], [-lam, lam]]))


def radii_solve(periods: PeriodMatrix, m: int, omega_at_z0) -> np.ndarray:
    """Recover slit radii from boundary harmonic measures at the map's zero.

    Deleting row and column m from the period matrix leaves a linear system
    for y_k = log(1/r_k); the right-hand side collects the harmonic measures
    omega_j(z0) of the remaining boundary pieces.  Returns the radii r_k,
    k != m, in increasing index order.
    """
    n = periods.n
    if not 0 <= m <= n:
        raise DomainError(f"deleted index m must lie in [0, {n}]")
    rhs = np.asarray(omega_at_z0, dtype=float).ravel()
    if rhs.shape != (n,):
        raise DomainError(f"expected {n} harmonic measure values, got {rhs.shape}")
    keep = [j for j in range(n + 1) if j != m]
    block = periods.entries[np.ix_(keep, keep)]
    try:
        y = np.linalg.solve(block, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(
            "period matrix minor is singular; matrix violates its invariants"
        ) from exc
    if not np.all(np.isfinite(y)):
        raise SingularMatrixError("radii solve produced non-finite values")
    return np.exp(-y)


def squeezing_annulus(z, r: float) -> float:
    """Squeezing function of the annulus: max(|z|, r/|z|)."""
    if not 0.0 < r < 1.0:
        raise DomainError("r must lie in (0, 1)")
    mag = np.abs(z)
    if np.any(mag <= r) or np.any(mag >= 1.0):
        raise DomainError("point must lie strictly inside the annulus")
    return np.maximum(mag, r / mag)


def shrink_mass_bound(dist: float, diam: float) -> float:
    """Upper bound 1/log(dist/diam) for the equilibrium mass of a small set.

    Valid when the set has diameter diam and sits at distance dist > diam
    from the rest of the boundary; tends to 0 as the set shrinks.
    """
    if not (math.isfinite(dist) and math.isfinite(diam)):
        raise DomainError("dist and diam must be finite")
    if not 0.0 < diam < dist:
        raise DomainError("need 0 < diam < dist for the mass bound")
    return 1.0 / math.log(dist / diam)


def harmonic_measure_upper_bound(
    dist_z_pn: float, maxdist_z_p0: float, cn_bound: float
) -> float:
    """Bound on the harmonic measure of a small boundary piece seen from z.

    The potential of the piece's equilibrium mass c_n is at most
    c_n log(1/dist(z, P_n)), and the compensating potential of the outer
    boundary is at least -c_n log(max dist(z, P_0)); the difference, clamped
    at zero, bounds the harmonic measure.
    """
    for name, v in (
        ("dist_z_pn", dist_z_pn),
        ("maxdist_z_p0", maxdist_z_p0),
        ("cn_bound", cn_bound),
    ):
        if not (math.isfinite(v) and v > 0.0):
            raise DomainError(f"{name} must be positive and finite")
    return max(0.0, cn_bound * math.log(maxdist_z_p0 / dist_z_pn))


def competitor_boundary_dist(
    r: float,
    x: float,
    z0: float,
    trunc_tol: float = 1e-12,
    inverted: bool = False,
    n_samples: int = 4096,
) -> float:
    """Sampled dist(0, boundary image) for one normalized competitor map.

    The competitor is T(f_x(.)) recentered so z0 maps to 0, optionally
    precomposed with z -> r/z.  Both boundary circles of the annulus are
    sampled with n_samples points each and the minimum modulus of the image
    is returned.  No competitor can beat max(z0, r/z0); the canonical choices
    x = z0 and (inverted) x = r/z0 attain it.
    """
    m = AnnulusModulus(r, trunc_tol)
    if not r < z0 < 1.0:
        raise DomainError("z0 must lie in (r, 1)")
    p = SlitMapParams(m, x)
    base = r / z0 if inverted else z0
    c = float(np.real(f_eval(p, base)))
    t = MobiusReal(c)
    theta = 2.0 * np.pi * np.arange(n_samples) / n_samples
    ring = np.exp(1j * theta)
    best = math.inf
    for rad in (1.0, r):
        vals = mobius_apply(t, f_eval(p, rad * ring))
        best = min(best, float(np.abs(vals).min()))
    return best
