"""Region scans of state space in canonical coordinates.

Two diagram types hold six of the nine canonical coordinates fixed and sweep
the remaining three on a grid:

* ``SingularValue``: ``g`` and ``h`` fixed, sweep ``x = (x1, x2, x3)``;
* ``RelativeBloch``: ``x`` and ``h`` fixed, sweep ``g``.

Each grid point is tested at both orientations. Physical at both means
separable, at exactly one means entangled (labelled by that orientation).
No density matrices are built; only the reduced inequalities are evaluated.
"""

import csv
import json
import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .canonical import reduced_lhs
from .positivity import POSITIVITY_TOL

log = logging.getLogger(__name__)

DEFAULT_RESOLUTION = 41
RANGE_MARGIN = 0.1


class ScanMode(Enum):
    SINGULAR_VALUE = "SingularValue"
    RELATIVE_BLOCH = "RelativeBloch"


class RegionClass(Enum):
    UNPHYSICAL = "Unphysical"
    SEPARABLE_BOTH = "SeparableBoth"
    ENTANGLED_DMINUS = "EntangledDminus"
    ENTANGLED_DPLUS = "EntangledDplus"


_CLASS_BY_CODE = (
    RegionClass.UNPHYSICAL,
    RegionClass.ENTANGLED_DPLUS,
    RegionClass.ENTANGLED_DMINUS,
    RegionClass.SEPARABLE_BOTH,
)


class ScanSpecError(ValueError):
    pass


@dataclass(frozen=True)
class ScanSpec:
    """Grid description. ``fixed`` maps ``g``/``h`` (singular-value mode) or ``x``/``h``."""

    mode: ScanMode
    fixed: dict
    ranges: tuple = None
    resolution: tuple = (DEFAULT_RESOLUTION,) * 3
    orientations: tuple = (1, -1)
    tol: float = POSITIVITY_TOL

    def __post_init__(self):
        mode = ScanMode(self.mode)
        object.__setattr__(self, "mode", mode)
        need = ("g", "h") if mode is ScanMode.SINGULAR_VALUE else ("x", "h")
        fixed = {}
        for key in need:
            if key not in self.fixed:
                raise ScanSpecError(f"{mode.value} scan needs fixed '{key}'")
            vec = np.asarray(self.fixed[key], dtype=float)
            if vec.shape != (3,) or not np.all(np.isfinite(vec)):
                raise ScanSpecError(f"fixed '{key}' must be a list of 3 numbers")
            fixed[key] = tuple(float(t) for t in vec)
        extra = set(self.fixed) - set(need)
        if extra:
            raise ScanSpecError(f"unexpected fixed entries for {mode.value} scan: {sorted(extra)}")
        object.__setattr__(self, "fixed", fixed)

        if mode is ScanMode.SINGULAR_VALUE:
            lo_bound, hi_bound, default = 0.0, 1.0 + RANGE_MARGIN, (0.0, 1.0)
        else:
            lo_bound, hi_bound, default = -1.0 - RANGE_MARGIN, 1.0 + RANGE_MARGIN, (-1.0, 1.0)
        ranges = self.ranges if self.ranges is not None else (default,) * 3
        try:
            ranges = tuple((float(lo), float(hi)) for lo, hi in ranges)
        except (TypeError, ValueError) as exc:
            raise ScanSpecError(f"ranges must be three [lo, hi] pairs: {exc}") from None
        if len(ranges) != 3:
            raise ScanSpecError("ranges must have one [lo, hi] pair per axis")
        for lo, hi in ranges:
            if not lo_bound <= lo < hi <= hi_bound:
                raise ScanSpecError(
                    f"range [{lo}, {hi}] must satisfy {lo_bound} <= lo < hi <= {hi_bound} for {mode.value}"
                )
        object.__setattr__(self, "ranges", ranges)

        res = self.resolution
        res = (res,) * 3 if isinstance(res, (int, np.integer)) else tuple(res)
        if len(res) != 3 or any(not isinstance(n, (int, np.integer)) or n < 2 for n in res):
            raise ScanSpecError("resolution must be an integer >= 2 (or three of them)")
        object.__setattr__(self, "resolution", tuple(int(n) for n in res))

        orient = tuple(int(d) for d in self.orientations)
        if not orient or any(d not in (1, -1) for d in orient) or len(set(orient)) != len(orient):
            raise ScanSpecError("orientations must be a nonempty subset of {1, -1}")
        object.__setattr__(self, "orientations", orient)

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ScanSpecError("scan config must be a JSON object")
        unknown = set(data) - {"mode", "fixed", "ranges", "resolution", "orientations"}
        if unknown:
            raise ScanSpecError(f"unknown scan config keys: {sorted(unknown)}")
        if "mode" not in data or "fixed" not in data:
            raise ScanSpecError("scan config needs 'mode' and 'fixed'")
        try:
            mode = ScanMode(data["mode"])
        except ValueError:
            raise ScanSpecError(f"unknown scan mode {data['mode']!r}") from None
        if not isinstance(data["fixed"], dict):
            raise ScanSpecError("'fixed' must be an object")
        return cls(
            mode=mode,
            fixed=data["fixed"],
            ranges=data.get("ranges"),
            resolution=data.get("resolution", DEFAULT_RESOLUTION),
            orientations=data.get("orientations", (1, -1)),
        )

    def to_dict(self):
        return {
            "mode": self.mode.value,
            "fixed": {k: list(v) for k, v in self.fixed.items()},
            "ranges": [list(r) for r in self.ranges],
            "resolution": list(self.resolution),
            "orientations": list(self.orientations),
        }

    def axes(self):
        return [np.linspace(lo, hi, n) for (lo, hi), n in zip(self.ranges, self.resolution)]

    def grid(self):
        """Grid points in iteration order: first axis slowest, last axis fastest."""
        mesh = np.meshgrid(*self.axes(), indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)


def load_scan_spec(path):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ScanSpecError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return ScanSpec.from_dict(data)


@dataclass(frozen=True, eq=False)
class RegionPoint:
    coords: np.ndarray
    region: RegionClass

    def to_dict(self):
        return {"x": [float(t) for t in self.coords], "class": self.region.value}


@dataclass
class ScanResult:
    """Dense scan output: coordinates, class codes and per-orientation physicality."""

    spec: ScanSpec
    coords: np.ndarray
    physical: dict = field(default_factory=dict)  # d -> bool array
    witnesses: int = 0

    @property
    def codes(self):
        # bit 0: physical at +1, bit 1: physical at -1
        return self.physical[1].astype(int) + 2 * self.physical[-1].astype(int)

    def classes(self):
        return [_CLASS_BY_CODE[k] for k in self.codes]

    def counts(self):
        codes = self.codes
        return {cls.value: int(np.count_nonzero(codes == k)) for k, cls in enumerate(_CLASS_BY_CODE)}

    def points(self):
        for coord, k in zip(self.coords, self.codes):
            yield RegionPoint(coord, _CLASS_BY_CODE[k])


def _lhs_at(spec, coords, d):
    n = len(coords)
    if spec.mode is ScanMode.SINGULAR_VALUE:
        x = coords
        g = np.broadcast_to(spec.fixed["g"], (n, 3))
    else:
        g = coords
        x = np.broadcast_to(spec.fixed["x"], (n, 3))
    h = np.broadcast_to(spec.fixed["h"], (n, 3))
    return np.stack(reduced_lhs(x, g, h, d), axis=-1)


def run_scan(spec):
    """Evaluate the whole grid at both orientations."""
    coords = spec.grid()
    result = ScanResult(spec=spec, coords=coords)
    for d in (1, -1):
        lhs = _lhs_at(spec, coords, d)
        ok = lhs >= -spec.tol
        result.physical[d] = ok.all(axis=-1)
        # points failing exactly one inequality show no two imply the third
        single = np.count_nonzero(~ok, axis=-1) == 1
        result.witnesses += int(np.count_nonzero(single))
    if result.witnesses:
        log.info("scan: %d point/orientation pairs violate exactly one inequality", result.witnesses)
    return result


def scan(spec):
    """Stream of classified grid points in fixed grid order."""
    return run_scan(spec).points()


def lmm_factored_lhs(x, d):
    """Four-plane product bounding the tetrahedron of locally maximally mixed states."""
    x = np.asarray(x, dtype=float)
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
    return (d - x1 + x2 + x3) * (d + x1 - x2 + x3) * (d + x1 + x2 - x3) * (d - x1 - x2 - x3)


def lmm_volume_ratio(samples, seed, tol=POSITIVITY_TOL, chunk=1_000_000):
    """Monte-Carlo ratio of entangled to separable volume of LMM states in the unit cube of ``x``."""
    if samples < 10_000:
        raise ValueError(f"need at least 10^4 samples, got {samples}")
    rng = np.random.Generator(np.random.PCG64(seed))
    entangled = separable = 0
    zeros = np.zeros(3)
    remaining = samples
    while remaining:
        n = min(chunk, remaining)
        x = rng.random((n, 3))
        plus = np.all(np.stack(reduced_lhs(x, zeros, zeros, 1)) >= -tol, axis=0)
        minus = np.all(np.stack(reduced_lhs(x, zeros, zeros, -1)) >= -tol, axis=0)
        separable += int(np.count_nonzero(plus & minus))
        entangled += int(np.count_nonzero(plus ^ minus))
        remaining -= n
    if separable == 0:
        raise ArithmeticError("no separable samples drawn")
    return entangled / separable


CSV_HEADER = ("x1", "x2", "x3", "class")


def _fmt(t):
    return repr(float(t))


def export_scan(points, path, fmt="jsonl"):
    """Write classified points as JSONL (``{"x": [...], "class": ...}``) or CSV.

    Returns the number of records written.
    """
    fmt = fmt.lower()
    if fmt not in ("jsonl", "csv"):
        raise ValueError(f"unsupported scan export format {fmt!r}")
    n = 0
    try:
        with open(path, "w", newline="") as fh:
            if fmt == "csv":
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(CSV_HEADER)
                for p in points:
                    writer.writerow([*(_fmt(t) for t in p.coords), p.region.value])
                    n += 1
            else:
                for p in points:
                    fh.write(json.dumps(p.to_dict()) + "\n")
                    n += 1
    except OSError as exc:
        raise OSError(f"cannot write scan output to {path}: {exc.strerror or exc}") from exc
    return n
