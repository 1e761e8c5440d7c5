"""Bounded Lipschitz Hamiltonians and the constants derived from them.

A Hamiltonian here is a bounded function H with a finite Lipschitz bound.
Everything the solver needs from H is range information:

* ``rate_max`` / ``rate_min`` -- sup and inf of ``-H`` over the whole line,
  the extreme speeds at which solution values can move;
* ``tail_osc_plus`` / ``tail_osc_minus`` -- the oscillation
  ``limsup H - liminf H`` in each tail, the guaranteed decay rate of
  up/down jumps;
* one-sided extremizations ``sup/inf { H(xi) : xi >= p }`` (and ``<=``),
  which act as effective boundary Hamiltonians at singular Neumann ends.

Builtins (``sin``, ``tanh``, ``clamp``, ``constant``) carry closed-form
answers; tabulated Hamiltonians are piecewise linear on a uniform sample
window with user-declared tail descriptors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ConfigError",
    "HamiltonianBounds",
    "HamiltonianSpec",
    "TailDescriptors",
    "boundary_hamiltonian",
]


class ConfigError(ValueError):
    """A scenario or numeric parameter violates its contract."""


@dataclass(frozen=True)
class TailDescriptors:
    """Declared limsup/liminf of H at +/- infinity.

    For tabulated Hamiltonians the solver never extrapolates beyond the
    sample window; these four numbers are the only information used about
    the tails.  They are a config obligation: the artifact cannot infer
    them from samples.
    """

    limsup_plus: float
    liminf_plus: float
    limsup_minus: float
    liminf_minus: float

    def validate(self) -> None:
        vals = (self.limsup_plus, self.liminf_plus, self.limsup_minus, self.liminf_minus)
        if not all(np.isfinite(v) for v in vals):
            raise ConfigError("tail descriptors must be finite")
        if self.liminf_plus > self.limsup_plus:
            raise ConfigError("liminf_plus exceeds limsup_plus")
        if self.liminf_minus > self.limsup_minus:
            raise ConfigError("liminf_minus exceeds limsup_minus")


@dataclass(frozen=True)
class HamiltonianBounds:
    """Range constants of a Hamiltonian.

    ``rate_max = sup(-H)`` and ``rate_min = inf(-H)`` bound the speed of
    every solution value from above and below; ``tail_osc_plus/minus`` are
    the tail oscillations driving jump decay; ``lip`` is the Lipschitz
    bound of H (also the maximal propagation speed).
    """

    rate_max: float
    rate_min: float
    tail_osc_plus: float
    tail_osc_minus: float
    lip: float

    @property
    def rate_spread(self) -> float:
        return self.rate_max - self.rate_min


_BUILTIN_KINDS = ("sin", "tanh", "clamp", "constant")


@dataclass(frozen=True, eq=False)
class HamiltonianSpec:
    """A concrete Hamiltonian: builtin closed form or sampled table."""

    kind: str
    value_param: float = 0.0
    xs: np.ndarray | None = field(default=None, repr=False)
    ys: np.ndarray | None = field(default=None, repr=False)
    tails: TailDescriptors | None = None
    lip_bound: float | None = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def sine() -> "HamiltonianSpec":
        return HamiltonianSpec(kind="sin")

    @staticmethod
    def tanh() -> "HamiltonianSpec":
        return HamiltonianSpec(kind="tanh")

    @staticmethod
    def clamp() -> "HamiltonianSpec":
        """H(p) = max(-1, min(1, p))."""
        return HamiltonianSpec(kind="clamp")

    @staticmethod
    def constant(c: float) -> "HamiltonianSpec":
        if not np.isfinite(c):
            raise ConfigError("constant Hamiltonian value must be finite")
        return HamiltonianSpec(kind="constant", value_param=float(c))

    @staticmethod
    def table(xs, ys, tails: TailDescriptors, lip: float) -> "HamiltonianSpec":
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        if xs.ndim != 1 or xs.size < 2 or ys.shape != xs.shape:
            raise ConfigError("table needs >=2 samples with matching shapes")
        if not (np.isfinite(xs).all() and np.isfinite(ys).all()):
            raise ConfigError("table samples must be finite")
        steps = np.diff(xs)
        if steps.min() <= 0:
            raise ConfigError("table sample points must be strictly increasing")
        if steps.max() - steps.min() > 1e-9 * max(steps.max(), 1.0):
            raise ConfigError("table sample points must be uniformly spaced")
        if lip is None or not np.isfinite(lip) or lip < 0:
            raise ConfigError("table Hamiltonian requires a finite lip bound >= 0")
        slopes = np.abs(np.diff(ys) / steps)
        if slopes.size and slopes.max() > lip * (1 + 1e-9) + 1e-12:
            raise ConfigError(
                f"samples violate the declared Lipschitz bound: "
                f"observed {slopes.max():.6g} > lip={lip:.6g}"
            )
        tails.validate()
        # Tails may not wander arbitrarily far from the sampled range.
        delta = float(steps.mean())
        lo = ys.min() - lip * delta
        hi = ys.max() + lip * delta
        for name in ("limsup_plus", "liminf_plus", "limsup_minus", "liminf_minus"):
            v = getattr(tails, name)
            if not (lo - 1e-12 <= v <= hi + 1e-12):
                raise ConfigError(
                    f"tail descriptor {name}={v:.6g} outside sanity range "
                    f"[{lo:.6g}, {hi:.6g}]"
                )
        return HamiltonianSpec(kind="table", xs=xs, ys=ys, tails=tails, lip=lip)

    def __init__(self, kind, value_param=0.0, xs=None, ys=None, tails=None, lip=None):
        if kind not in _BUILTIN_KINDS and kind != "table":
            raise ConfigError(f"unknown Hamiltonian kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "value_param", float(value_param))
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "tails", tails)
        object.__setattr__(self, "lip_bound", lip)

    # -- evaluation ----------------------------------------------------

    def value(self, p):
        """Evaluate H(p); accepts scalars or arrays.

        Table Hamiltonians clamp to the endpoint sample outside the window.
        """
        arr = np.asarray(p, dtype=float)
        if not np.isfinite(arr).all():
            raise ValueError("Hamiltonian argument must be finite")
        if self.kind == "sin":
            out = np.sin(arr)
        elif self.kind == "tanh":
            out = np.tanh(arr)
        elif self.kind == "clamp":
            out = np.clip(arr, -1.0, 1.0)
        elif self.kind == "constant":
            out = np.full_like(arr, self.value_param)
        else:
            out = np.interp(arr, self.xs, self.ys)
        if np.isscalar(p) or arr.ndim == 0:
            return float(out)
        return out

    @property
    def lip(self) -> float:
        if self.kind in ("sin", "tanh", "clamp"):
            return 1.0
        if self.kind == "constant":
            return 0.0
        return float(self.lip_bound)

    # -- range constants -----------------------------------------------

    def bounds(self) -> HamiltonianBounds:
        """All range constants: exact for builtins, sample-based for tables."""
        if self.kind == "sin":
            return HamiltonianBounds(1.0, -1.0, 2.0, 2.0, 1.0)
        if self.kind == "tanh":
            return HamiltonianBounds(1.0, -1.0, 0.0, 0.0, 1.0)
        if self.kind == "clamp":
            return HamiltonianBounds(1.0, -1.0, 0.0, 0.0, 1.0)
        if self.kind == "constant":
            c = self.value_param
            return HamiltonianBounds(-c, -c, 0.0, 0.0, 0.0)
        t = self.tails
        sup_h = max(float(self.ys.max()), t.limsup_plus, t.limsup_minus)
        inf_h = min(float(self.ys.min()), t.liminf_plus, t.liminf_minus)
        return HamiltonianBounds(
            rate_max=-inf_h,
            rate_min=-sup_h,
            tail_osc_plus=t.limsup_plus - t.liminf_plus,
            tail_osc_minus=t.limsup_minus - t.liminf_minus,
            lip=self.lip,
        )

    def extremal(self, kind: str, side: str, p: float) -> float:
        """sup or inf of H over the half line {xi >= p} or {xi <= p}.

        The half line is unbounded, so the matching tail descriptors always
        participate as candidates.
        """
        if kind not in ("sup", "inf"):
            raise ValueError(f"kind must be 'sup' or 'inf', got {kind!r}")
        if side not in ("geq", "leq"):
            raise ValueError(f"side must be 'geq' or 'leq', got {side!r}")
        p = float(p)
        if not np.isfinite(p):
            raise ValueError("extremal argument must be finite")

        if self.kind == "sin":
            # Every half line contains full periods.
            return 1.0 if kind == "sup" else -1.0
        if self.kind in ("tanh", "clamp"):
            # Nondecreasing: extremum is at p or at the tail limit.
            v = self.value(p)
            if side == "geq":
                return 1.0 if kind == "sup" else v
            return v if kind == "sup" else -1.0
        if self.kind == "constant":
            return self.value_param

        t = self.tails
        if side == "geq":
            cands = [t.limsup_plus if kind == "sup" else t.liminf_plus]
            sel = self.xs >= p
        else:
            cands = [t.limsup_minus if kind == "sup" else t.liminf_minus]
            sel = self.xs <= p
        # The clamped evaluation at p itself is attained, so it is always a
        # candidate; between samples the table is piecewise linear, so the
        # extremum over the in-window part is at p or at a sample point.
        cands.append(self.value(p))
        if sel.any():
            part = self.ys[sel]
            cands.append(float(part.max() if kind == "sup" else part.min()))
        return max(cands) if kind == "sup" else min(cands)


def boundary_hamiltonian(endpoint: str, sign: str, p: float, H: HamiltonianSpec) -> float:
    """Effective Hamiltonian B(p) at a singular Neumann end.

    ``endpoint`` is the side of the subinterval carrying the singular
    condition, ``sign`` the sign of the infinite slope, ``p`` the one-sided
    interior slope there.  The boundary node then evolves by du/dt = -B(p).
    """
    if endpoint == "left":
        if sign == "plus":
            return H.extremal("sup", "geq", p)
        if sign == "minus":
            return H.extremal("inf", "leq", p)
    elif endpoint == "right":
        if sign == "plus":
            return H.extremal("inf", "geq", p)
        if sign == "minus":
            return H.extremal("sup", "leq", p)
    raise ValueError(f"bad endpoint/sign combination: {endpoint!r}, {sign!r}")
