"""Construction, storage and evaluation of bivariate Chebyshev approximants.

A function f on a rectangle is represented as

    f(x, y) ~ sum_k sum_j coeffs[k, j] * T_k(u) * T_j(v)

where (u, v) is (x, y) mapped affinely onto the unit square [-1, 1]^2.
Coefficients come from function samples on the periodicized grid
cos(2 pi k / m) through the unscaled 2-D FFT: the transform output divided
by m^2 approximates the Fourier coefficients of f(cos t, cos s), and the
real parts scaled by 4 (halved along the first row and column, quartered at
the corner) are the trapezoid-rule estimates of the Chebyshev coefficients.
The adaptive builder doubles the degree bound until the trailing block of
coefficients is negligible, then trims and truncates.
"""

import json
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    DomainError,
    InvalidInputError,
    ConvergenceError,
    ParseError,
    SamplingError,
    ValidationError,
)
from .fft2d import fft2, is_power_of_two, next_power_of_two

# Tolerated relative overshoot of evaluation points beyond the unit square.
_OVERSHOOT = 1e-12


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class Domain2:
    """Axis-aligned rectangle [xlo, xhi] x [ylo, yhi]."""

    xlo: float = -1.0
    xhi: float = 1.0
    ylo: float = -1.0
    yhi: float = 1.0

    def __post_init__(self):
        bounds = (self.xlo, self.xhi, self.ylo, self.yhi)
        if not all(math.isfinite(b) for b in bounds):
            raise InvalidInputError("domain bounds must be finite")
        if not (self.xlo < self.xhi and self.ylo < self.yhi):
            raise InvalidInputError(
                "domain must satisfy xlo < xhi and ylo < yhi, got "
                f"[{self.xlo}, {self.xhi}] x [{self.ylo}, {self.yhi}]")

    def x_from_unit(self, u):
        return 0.5 * (self.xlo + self.xhi) + 0.5 * (self.xhi - self.xlo) * u

    def y_from_unit(self, v):
        return 0.5 * (self.ylo + self.yhi) + 0.5 * (self.yhi - self.ylo) * v

    def unit_from_x(self, x):
        return (2.0 * x - self.xlo - self.xhi) / (self.xhi - self.xlo)

    def unit_from_y(self, y):
        return (2.0 * y - self.ylo - self.yhi) / (self.yhi - self.ylo)

    def as_list(self):
        return [self.xlo, self.xhi, self.ylo, self.yhi]


UNIT_SQUARE = Domain2()


@dataclass(frozen=True)
class DecayBounds:
    """Sup-norm bounds on the second partial derivatives of f over the domain.

    dxx bounds |d2f/dx2|, dyy bounds |d2f/dy2| and dxy bounds the mixed
    partial; all must be nonnegative and finite.  Supplied by the caller,
    these drive the coefficient-decay property checks.
    """

    dxx: float
    dyy: float
    dxy: float

    def __post_init__(self):
        for name in ("dxx", "dyy", "dxy"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise InvalidInputError(f"{name} must be finite and >= 0")


@dataclass(frozen=True)
class SampleGrid:
    """Function samples on the m-point periodicized Chebyshev grid.

    values[k, j] = f(x(cos(2 pi k / m)), y(cos(2 pi j / m))) where x(), y()
    map the unit interval onto the domain edges.  The node vector is built
    by mirroring, so values inherit the grid's even symmetry bit-for-bit
    whenever f is deterministic.
    """

    size: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (self.size, self.size):
            raise InvalidInputError(
                f"values must have shape ({self.size}, {self.size})")
        if not np.all(np.isfinite(vals)):
            raise InvalidInputError("sample values must be finite")
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class Cheb2:
    """Dense bivariate Chebyshev approximant on a rectangle.

    coeffs has shape (degree_x + 1, degree_y + 1); tol records the trim
    threshold that produced it (entries below tol are stored as exact
    zeros).  Instances are immutable and safe to share across threads.
    """

    coeffs: np.ndarray
    domain: Domain2 = UNIT_SQUARE
    tol: float = 0.0

    def __post_init__(self):
        a = np.array(self.coeffs, dtype=float)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise InvalidInputError(
                f"coefficients must form a 2-D matrix, got shape {a.shape!r}")
        if not np.all(np.isfinite(a)):
            raise InvalidInputError("coefficients must be finite")
        if not (math.isfinite(self.tol) and self.tol >= 0):
            raise InvalidInputError("tol must be finite and >= 0")
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @property
    def degree_x(self):
        return self.coeffs.shape[0] - 1

    @property
    def degree_y(self):
        return self.coeffs.shape[1] - 1


@dataclass(frozen=True)
class SparseCoeffs:
    """Trimmed coefficients as sorted (row, col, value) triplets.

    This is the persistence form: no zero values, indices within the degree
    bounds, strictly increasing lexicographic order.
    """

    degree_x: int
    degree_y: int
    domain: Domain2
    tol: float
    entries: tuple

    def __post_init__(self):
        if self.degree_x < 0 or self.degree_y < 0:
            raise ValidationError("degrees must be nonnegative")
        if not (math.isfinite(self.tol) and self.tol >= 0):
            raise ValidationError("tol must be finite and >= 0")
        normalized = []
        previous = None
        for entry in self.entries:
            i, j, v = entry
            i, j, v = int(i), int(j), float(v)
            if not (0 <= i <= self.degree_x and 0 <= j <= self.degree_y):
                raise ValidationError(
                    f"entry index ({i}, {j}) outside degree bounds "
                    f"({self.degree_x}, {self.degree_y})")
            if v == 0.0 or not math.isfinite(v):
                raise ValidationError(
                    f"entry ({i}, {j}) has invalid value {v!r}")
            if previous is not None and (i, j) <= previous:
                raise ValidationError(
                    f"entries not strictly increasing at ({i}, {j})")
            previous = (i, j)
            normalized.append((i, j, v))
        object.__setattr__(self, "entries", tuple(normalized))


# ---------------------------------------------------------------------------
# Chebyshev polynomial evaluation


def cheb_t(k, x):
    """T_k(x) by the three-term recurrence T_{k+1} = 2 x T_k - T_{k-1}.

    x may overshoot [-1, 1] by up to 1e-12 and is clamped; anything further
    out raises DomainError.
    """
    if k < 0:
        raise InvalidInputError("degree must be >= 0")
    if abs(x) > 1.0 + _OVERSHOOT:
        raise DomainError(f"argument {x!r} lies outside [-1, 1]")
    x = min(1.0, max(-1.0, float(x)))
    if k == 0:
        return 1.0
    prev, cur = 1.0, x
    for _ in range(k - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def cheb_vector(n, x):
    """Vector (T_0(x), ..., T_n(x)) in a single recurrence pass."""
    if n < 0:
        raise InvalidInputError("degree must be >= 0")
    if abs(x) > 1.0 + _OVERSHOOT:
        raise DomainError(f"argument {x!r} lies outside [-1, 1]")
    x = min(1.0, max(-1.0, float(x)))
    out = np.ones(n + 1)
    if n >= 1:
        out[1] = x
    for k in range(2, n + 1):
        out[k] = 2.0 * x * out[k - 1] - out[k - 2]
    return out


def cheb_basis(n, t):
    """Matrix with entry [i, k] = T_k(t[i]) for k = 0..n (no clamping)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    basis = np.ones((t.size, n + 1))
    if n >= 1:
        basis[:, 1] = t
    for k in range(2, n + 1):
        basis[:, k] = 2.0 * t * basis[:, k - 1] - basis[:, k - 2]
    return basis


# ---------------------------------------------------------------------------
# sampling


def _periodic_nodes(m):
    """cos(2 pi k / m) for k = 0..m-1, mirrored so node[m-k] equals node[k]
    bit-for-bit (m is even)."""
    u = np.empty(m)
    half = m // 2
    u[: half + 1] = np.cos(2.0 * np.pi * np.arange(half + 1) / m)
    u[half + 1:] = u[1:half][::-1]
    return u


def _sample_on(f, xs, ys, vectorized=None):
    """Evaluate f on the tensor grid xs x ys as a (len(xs), len(ys)) array.

    A single broadcast call is attempted first; callables that only accept
    scalars fall back to a sequential per-node loop.  vectorized=True forces
    the broadcast path, vectorized=False forces the loop.  Non-finite
    samples raise SamplingError naming the node.
    """
    shape = (len(xs), len(ys))
    values = None
    if vectorized is None or vectorized:
        try:
            raw = np.asarray(f(xs[:, None], ys[None, :]), dtype=float)
            values = np.array(np.broadcast_to(raw, shape))
        except Exception:
            if vectorized:
                raise
    if values is None:
        values = np.empty(shape)
        for k in range(shape[0]):
            for j in range(shape[1]):
                values[k, j] = f(xs[k], ys[j])
    if not np.all(np.isfinite(values)):
        k, j = np.argwhere(~np.isfinite(values))[0]
        raise SamplingError(
            f"non-finite sample at node ({int(k)}, {int(j)}), "
            f"(x, y) = ({xs[int(k)]!r}, {ys[int(j)]!r})")
    return values


def sample_grid(f, m, domain=UNIT_SQUARE, vectorized=None):
    """Sample f on the m-point periodicized Chebyshev grid of the domain."""
    if not is_power_of_two(m) or m < 2:
        raise InvalidInputError(f"grid size must be a power of two >= 2, got {m}")
    u = _periodic_nodes(m)
    xs = domain.x_from_unit(u)
    ys = domain.y_from_unit(u)
    return SampleGrid(m, _sample_on(f, xs, ys, vectorized))


# ---------------------------------------------------------------------------
# coefficients


def coeffs_from_samples(grid, n):
    """Trapezoid-rule Chebyshev coefficients up to degree n in each variable.

    Parameters
    ----------
    grid : SampleGrid
        Samples on an m-point grid with m >= 2 (n + 1), so the retained
        degrees stay below the aliasing fold at m / 2.
    n : int
        Degree bound; the result has shape (n + 1, n + 1).

    The transform output g = fft2(values) / m^2 estimates the Fourier
    coefficients of f(cos t, cos s); the Chebyshev coefficients are 4 Re g
    with the first row and column halved and the corner quartered.
    """
    if n < 1:
        raise InvalidInputError("degree bound must be >= 1")
    m = grid.size
    if m < 2 * (n + 1):
        raise InvalidInputError(
            f"grid size {m} too small for degree {n}; need at least {2 * (n + 1)}")
    g = fft2(grid.values) / (m * m)
    coeffs = 4.0 * g.real[: n + 1, : n + 1]
    coeffs[0, 0] /= 4.0
    coeffs[0, 1:] /= 2.0
    coeffs[1:, 0] /= 2.0
    return coeffs


def build_adaptive(f, tol, n0=8, max_n=8192, domain=UNIT_SQUARE,
                   relative=False, vectorized=None):
    """Construct a Cheb2 for f, doubling the degree until the tail is negligible.

    Parameters
    ----------
    f : callable
        Function of two real arguments, total on the domain.  It may accept
        numpy arrays for fast sampling; scalar-only callables are sampled
        sequentially.
    tol : float
        Trim threshold, absolute by default.  With relative=True the
        threshold is tol times the largest sampled magnitude, which keeps
        machine-precision targets reachable for large-magnitude functions.
    n0, max_n : int
        Initial and maximal degree bound, both powers of two.
    domain : Domain2
        Rectangle on which f is approximated.

    Returns
    -------
    Cheb2
        Trimmed coefficients with trailing all-zero rows and columns
        removed; the zero function comes back as a single zero coefficient.

    Raises
    ------
    ConvergenceError
        If the degree bound would exceed max_n while the last two rows or
        the last two columns of the coefficient block still hold entries at
        or above the threshold.
    """
    if not (isinstance(tol, (int, float)) and math.isfinite(tol) and tol > 0):
        raise InvalidInputError("tol must be positive and finite")
    if not is_power_of_two(n0) or n0 < 2:
        raise InvalidInputError(f"n0 must be a power of two >= 2, got {n0}")
    if not is_power_of_two(max_n) or max_n < n0:
        raise InvalidInputError(f"max_n must be a power of two >= n0, got {max_n}")

    n = n0
    while True:
        m = next_power_of_two(2 * (n + 1))
        grid = sample_grid(f, m, domain, vectorized)
        coeffs = coeffs_from_samples(grid, n)
        threshold = tol * np.abs(grid.values).max() if relative else float(tol)
        tail = max(np.abs(coeffs[-2:, :]).max(), np.abs(coeffs[:, -2:]).max())
        if tail < threshold:
            break
        if 2 * n > max_n:
            raise ConvergenceError(
                f"coefficient tail {tail:.3e} still at or above {threshold:.3e} "
                f"at degree bound {n}", float(tail))
        n *= 2

    coeffs[np.abs(coeffs) < threshold] = 0.0
    rows, cols = np.nonzero(coeffs)
    if rows.size == 0:
        coeffs = np.zeros((1, 1))
    else:
        coeffs = coeffs[: rows.max() + 1, : cols.max() + 1]
    return Cheb2(coeffs, domain=domain, tol=float(threshold))


def trim(coeffs, tol, domain=UNIT_SQUARE):
    """Sparse form of a coefficient matrix: drop |value| < tol and zeros,
    shrink the degrees to the largest retained row and column index."""
    if not (math.isfinite(tol) and tol >= 0):
        raise InvalidInputError("tol must be finite and >= 0")
    a = np.asarray(coeffs, dtype=float)
    if a.ndim != 2:
        raise InvalidInputError("coefficients must form a 2-D matrix")
    if not np.all(np.isfinite(a)):
        raise InvalidInputError("coefficients must be finite")
    keep = (np.abs(a) >= tol) & (a != 0.0)
    rows, cols = np.nonzero(keep)
    if rows.size == 0:
        return SparseCoeffs(0, 0, domain, float(tol), ())
    entries = tuple(
        (int(i), int(j), float(a[i, j])) for i, j in zip(rows, cols))
    return SparseCoeffs(int(rows.max()), int(cols.max()), domain,
                        float(tol), entries)


def to_sparse(c):
    """SparseCoeffs carrying every stored nonzero of a Cheb2."""
    return replace(trim(c.coeffs, 0.0, c.domain), tol=float(c.tol))


def to_cheb2(sparse):
    """Dense Cheb2 from a sparse coefficient document."""
    coeffs = np.zeros((sparse.degree_x + 1, sparse.degree_y + 1))
    for i, j, v in sparse.entries:
        coeffs[i, j] = v
    return Cheb2(coeffs, sparse.domain, sparse.tol)


def truncate(c, degree_x, degree_y):
    """Corner block of a Cheb2 up to the requested degrees (clipped to c's)."""
    if degree_x < 0 or degree_y < 0:
        raise InvalidInputError("truncation degrees must be >= 0")
    nx = min(degree_x, c.degree_x)
    ny = min(degree_y, c.degree_y)
    return Cheb2(c.coeffs[: nx + 1, : ny + 1], c.domain, c.tol)


# ---------------------------------------------------------------------------
# evaluation


def _unit_point(c, x, y):
    u = c.domain.unit_from_x(x)
    v = c.domain.unit_from_y(y)
    if abs(u) > 1.0 + _OVERSHOOT or abs(v) > 1.0 + _OVERSHOOT:
        raise DomainError(
            f"point ({x!r}, {y!r}) lies outside the domain rectangle "
            f"[{c.domain.xlo}, {c.domain.xhi}] x [{c.domain.ylo}, {c.domain.yhi}]")
    return min(1.0, max(-1.0, u)), min(1.0, max(-1.0, v))


def evaluate_matrix(c, x, y):
    """Value at (x, y) as the bilinear form V'(u) coeffs V(v)."""
    u, v = _unit_point(c, x, y)
    return float(cheb_vector(c.degree_x, u) @ c.coeffs @ cheb_vector(c.degree_y, v))


def evaluate_clenshaw(c, x, y):
    """Same polynomial as evaluate_matrix, via backward recurrences.

    Each row of the coefficient matrix is collapsed with a Clenshaw pass in
    the second variable, then one more pass runs across the rows.
    """
    u, v = _unit_point(c, x, y)
    a = c.coeffs
    b1 = np.zeros(a.shape[0])
    b2 = np.zeros(a.shape[0])
    for j in range(a.shape[1] - 1, 0, -1):
        b1, b2 = a[:, j] + 2.0 * v * b1 - b2, b1
    row_sums = a[:, 0] + v * b1 - b2
    c1 = 0.0
    c2 = 0.0
    for k in range(len(row_sums) - 1, 0, -1):
        c1, c2 = row_sums[k] + 2.0 * u * c1 - c2, c1
    return float(row_sums[0] + u * c1 - c2)


def evaluate_grid(c, xs, ys):
    """Values on the tensor grid xs x ys as a (len(xs), len(ys)) matrix."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    u = c.domain.unit_from_x(xs)
    v = c.domain.unit_from_y(ys)
    for mapped, original, axis in ((u, xs, "x"), (v, ys, "y")):
        bad = np.abs(mapped) > 1.0 + _OVERSHOOT
        if np.any(bad):
            raise DomainError(
                f"{axis} = {original[bad][0]!r} lies outside the domain rectangle")
    np.clip(u, -1.0, 1.0, out=u)
    np.clip(v, -1.0, 1.0, out=v)
    return cheb_basis(c.degree_x, u) @ c.coeffs @ cheb_basis(c.degree_y, v).T


# ---------------------------------------------------------------------------
# quality measures


def parseval_indicator(c, f, vectorized=None):
    """Weighted L2 mass of f minus the mass captured by the stored coefficients.

    The weighted integral of f^2 is estimated as the plain mean of f^2 over
    a periodicized Chebyshev grid at twice the resolution the stored degrees
    require (the DC trapezoid coefficient of the squared samples).  Rounding
    can make the result slightly negative; it is returned unmodified.
    """
    a = c.coeffs
    mass = a[0, 0] ** 2
    mass += 0.5 * np.sum(a[1:, 0] ** 2) + 0.5 * np.sum(a[0, 1:] ** 2)
    mass += 0.25 * np.sum(a[1:, 1:] ** 2)
    m = 2 * next_power_of_two(2 * (max(c.degree_x, c.degree_y) + 1))
    grid = sample_grid(f, m, c.domain, vectorized)
    return float(np.mean(grid.values ** 2) - mass)


def coeffs_by_quadrature(f, k, j, nodes, vectorized=None):
    """Single coefficient by midpoint quadrature of the weighted inner product.

    Integrates f(cos t, cos s) cos(k t) cos(j s) over [0, pi]^2 on an
    N-by-N midpoint grid and applies the 4/pi^2 scaling with the usual
    halvings for k = 0 or j = 0.  Entirely independent of the transform
    path, which it cross-checks.
    """
    if k < 0 or j < 0:
        raise InvalidInputError("coefficient indices must be >= 0")
    if nodes < 4 * max(k, j) + 16:
        raise InvalidInputError(
            f"need at least {4 * max(k, j) + 16} quadrature nodes for index "
            f"({k}, {j}), got {nodes}")
    t = (np.arange(nodes) + 0.5) * (np.pi / nodes)
    xs = np.cos(t)
    values = _sample_on(f, xs, xs, vectorized)
    weights = np.cos(k * t)[:, None] * np.cos(j * t)[None, :]
    estimate = 4.0 / nodes ** 2 * float(np.sum(values * weights))
    if k == 0:
        estimate /= 2.0
    if j == 0:
        estimate /= 2.0
    return estimate


def decay_bound_excess(c, bounds):
    """Largest violation of the second-derivative decay bounds; <= 0 if all hold.

    Checks |coeffs[k, 0]| <= 2 dxx / (k - 1)^2 and
    |coeffs[k, 1]| <= 8 dxx / (pi (k - 1)^2) for every stored k > 1, plus
    the mirrored column bounds with dyy.
    """
    a = c.coeffs
    excesses = []
    for k in range(2, c.degree_x + 1):
        denom = float(k - 1) ** 2
        excesses.append(abs(a[k, 0]) - 2.0 * bounds.dxx / denom)
        if c.degree_y >= 1:
            excesses.append(abs(a[k, 1]) - 8.0 * bounds.dxx / (math.pi * denom))
    for j in range(2, c.degree_y + 1):
        denom = float(j - 1) ** 2
        excesses.append(abs(a[0, j]) - 2.0 * bounds.dyy / denom)
        if c.degree_x >= 1:
            excesses.append(abs(a[1, j]) - 8.0 * bounds.dyy / (math.pi * denom))
    return max(excesses, default=float("-inf"))


# ---------------------------------------------------------------------------
# persistence

_DOC_KEYS = ("degree_x", "degree_y", "domain", "tol", "entries")


def _format_real(v):
    # 17 significant digits round-trip any double exactly
    return format(float(v), ".17g")


def document_text(sparse):
    """JSON text of a sparse coefficient document, one entry per line.

    Reals are written with 17 significant digits so that save/load is an
    exact round trip and repeated saves are byte-identical.
    """
    d = sparse.domain
    lines = [
        "{",
        f'  "degree_x": {sparse.degree_x},',
        f'  "degree_y": {sparse.degree_y},',
        f'  "domain": [{_format_real(d.xlo)}, {_format_real(d.xhi)}, '
        f'{_format_real(d.ylo)}, {_format_real(d.yhi)}],',
        f'  "tol": {_format_real(sparse.tol)},',
    ]
    if sparse.entries:
        lines.append('  "entries": [')
        body = ",\n".join(
            f"    [{i}, {j}, {_format_real(v)}]" for i, j, v in sparse.entries)
        lines.append(body)
        lines.append("  ]")
    else:
        lines.append('  "entries": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def save(sparse, sink):
    """Write a SparseCoeffs document to a path or text file object."""
    text = document_text(sparse)
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        with open(sink, "w", encoding="ascii") as handle:
            handle.write(text)


def _require_int(doc, key):
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ValidationError(f'"{key}" must be an integer')
    return v


def _require_real(v, what):
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise ValidationError(f"{what} must be a number")
    return float(v)


def load(source):
    """Read a SparseCoeffs document from a path or text file object.

    Malformed JSON raises ParseError with the offending location; a
    well-formed document that violates the coefficient invariants raises
    ValidationError.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="ascii") as handle:
            text = handle.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed coefficient document: {exc.msg} "
            f"at line {exc.lineno} column {exc.colno}", exc.pos) from None
    if not isinstance(doc, dict):
        raise ValidationError("document root must be an object")
    missing = [k for k in _DOC_KEYS if k not in doc]
    if missing:
        raise ValidationError(f"document is missing keys: {missing}")
    degree_x = _require_int(doc, "degree_x")
    degree_y = _require_int(doc, "degree_y")
    raw_domain = doc["domain"]
    if not (isinstance(raw_domain, list) and len(raw_domain) == 4):
        raise ValidationError('"domain" must be a list of four numbers')
    try:
        domain = Domain2(*(_require_real(b, "domain bound") for b in raw_domain))
    except InvalidInputError as exc:
        raise ValidationError(str(exc)) from None
    tol = _require_real(doc["tol"], '"tol"')
    raw_entries = doc["entries"]
    if not isinstance(raw_entries, list):
        raise ValidationError('"entries" must be a list')
    entries = []
    for entry in raw_entries:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise ValidationError(
                f"each entry must be [row, col, value], got {entry!r}")
        i, j, v = entry
        if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
            raise ValidationError(f"entry indices must be integers, got {entry!r}")
        entries.append((i, j, _require_real(v, "entry value")))
    return SparseCoeffs(degree_x, degree_y, domain, tol, tuple(entries))
