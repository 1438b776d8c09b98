"""Sparse truncated multivariate series over big integers or cyclotomic integers.

A :class:`TruncatedSeries` stores a sparse map from exponent vectors to
coefficients, together with per-variable caps (exponents beyond a cap are
silently discarded) and a validity region: within the region the stored
coefficients are guaranteed to equal those of the underlying formal series.

Region bookkeeping is deliberately conservative.  Every series carries an
``exact`` flag meaning "no term has ever been discarded, the stored support
is the whole support".  Exact operands behave as if their region were
unbounded; for truncated operands the region of a sum or product is the
componentwise minimum of the operand regions.  This rule is sound for
series in nonnegative exponents: every product contribution to an exponent
inside the minimum lies inside both operand regions.

Coefficients may be Python integers or :class:`~projstat.cyclotomic.CycInt`
values (which combine freely with integers but not across conductors).
"""

from __future__ import annotations

from typing import Mapping

_INF = None  # region entry standing for "unbounded" (exact operand)


class NonMonomialBaseError(ValueError):
    """The operation needs a single-term (scaled monomial) series."""


class ConstantTermError(ValueError):
    """Geometric inversion needs a monomial without constant term."""


class RegionError(ValueError):
    """A comparison region exceeds the valid region of an operand."""


class TruncatedSeries:
    __slots__ = ("vars", "caps", "terms", "region", "exact")

    def __init__(self, vars: tuple[str, ...], caps, terms=None, region=None, exact=True):
        self.vars = tuple(vars)
        self.caps = self._cap_tuple(caps)
        self.terms = {}
        self.region = self.caps if region is None else tuple(region)
        self.exact = exact
        if terms:
            dropped = False
            for exps, coeff in terms.items():
                dropped |= self._accumulate(exps, coeff)
            if dropped:
                self.exact = False
        self._prune()

    def _cap_tuple(self, caps) -> tuple[int, ...]:
        if isinstance(caps, Mapping):
            missing = [v for v in self.vars if v not in caps]
            if missing:
                raise ValueError(f"missing caps for variables {missing}")
            return tuple(caps[v] for v in self.vars)
        return tuple(caps)

    def _accumulate(self, exps: tuple[int, ...], coeff) -> bool:
        """Add coeff at exps, honoring caps; returns True when dropped."""
        if any(e > c for e, c in zip(exps, self.caps)):
            return True
        if exps in self.terms:
            self.terms[exps] = self.terms[exps] + coeff
        else:
            self.terms[exps] = coeff
        return False

    def _prune(self):
        for exps in [e for e, c in self.terms.items() if not c]:
            del self.terms[exps]

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars, caps) -> "TruncatedSeries":
        return cls(vars, caps)

    @classmethod
    def one(cls, vars, caps) -> "TruncatedSeries":
        return cls.monomial(vars, caps, {})

    @classmethod
    def monomial(cls, vars, caps, exps: Mapping[str, int], coeff=1) -> "TruncatedSeries":
        out = cls(vars, caps)
        vec = out.exp_vector(exps)
        if coeff:
            if out._accumulate(vec, coeff):
                raise ValueError(f"monomial {exps} exceeds caps {caps}")
        return out

    def exp_vector(self, exps: Mapping[str, int]) -> tuple[int, ...]:
        unknown = [v for v in exps if v not in self.vars]
        if unknown:
            raise ValueError(f"unknown variables {unknown}; have {self.vars}")
        return tuple(exps.get(v, 0) for v in self.vars)

    # -- region bookkeeping ------------------------------------------------

    def _effective_region(self) -> tuple:
        return tuple(_INF for _ in self.vars) if self.exact else self.region

    @staticmethod
    def _min_entry(a, b):
        if a is _INF:
            return b
        if b is _INF:
            return a
        return min(a, b)

    def _combine(self, other) -> tuple[tuple[int, ...], tuple]:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
        caps = tuple(min(a, b) for a, b in zip(self.caps, other.caps))
        region = tuple(
            self._min_entry(a, b)
            for a, b in zip(self._effective_region(), other._effective_region())
        )
        return caps, region

    def _finish_region(self, caps, region) -> tuple[int, ...]:
        return tuple(c if e is _INF else min(e, c) for e, c in zip(region, caps))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        caps, region = self._combine(other)
        out = TruncatedSeries(self.vars, caps, region=(0,) * len(caps), exact=False)
        dropped = False
        for exps, coeff in self.terms.items():
            dropped |= out._accumulate(exps, coeff)
        for exps, coeff in other.terms.items():
            dropped |= out._accumulate(exps, coeff)
        out._prune()
        out.exact = self.exact and other.exact and not dropped
        out.region = out._finish_region(caps, region)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        caps, region = self._combine(other)
        out = TruncatedSeries(self.vars, caps, region=(0,) * len(caps), exact=False)
        small, large = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        dropped = False
        acc = out.terms
        for e1, c1 in small.terms.items():
            for e2, c2 in large.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if any(e > c for e, c in zip(exps, caps)):
                    dropped = True
                    continue
                if exps in acc:
                    acc[exps] = acc[exps] + c1 * c2
                else:
                    acc[exps] = c1 * c2
        out._prune()
        out.exact = self.exact and other.exact and not dropped
        out.region = out._finish_region(caps, region)
        return out

    def scale(self, scalar) -> "TruncatedSeries":
        out = TruncatedSeries(self.vars, self.caps, region=self.region, exact=self.exact)
        if scalar:
            out.terms = {e: scalar * c for e, c in self.terms.items()}
            out._prune()
        return out

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = TruncatedSeries.one(self.vars, self.caps)
        for _ in range(e):
            out = out * self
        return out

    def coefficient(self, exps: Mapping[str, int]):
        return self.terms.get(self.exp_vector(exps), 0)

    def collapse_var(self, var: str) -> "TruncatedSeries":
        """Set one variable to 1, summing coefficients over its exponent.

        Only sound when no term was ever discarded for an exponent of ``var``
        inside the remaining region; the caller is responsible for that (in
        every use here the collapsed variable's degree is dominated by
        another variable's).
        """
        idx = self.vars.index(var)
        new_vars = self.vars[:idx] + self.vars[idx + 1 :]
        drop = lambda t: t[:idx] + t[idx + 1 :]
        out = TruncatedSeries(
            new_vars,
            drop(self.caps),
            region=drop(self.region),
            exact=self.exact,
        )
        for exps, coeff in self.terms.items():
            out._accumulate(drop(exps), coeff)
        out._prune()
        return out

    # -- component extraction and closed forms ------------------------------

    def extract_multiples(self, divisors: Mapping[str, int]) -> "TruncatedSeries":
        """Keep only terms whose exponent in each listed variable is divisible
        by the given modulus (the component extraction {F}_M)."""
        idx = [(self.vars.index(v), d) for v, d in divisors.items() if d > 1]
        out = TruncatedSeries(self.vars, self.caps, region=self.region, exact=self.exact)
        out.terms = {
            exps: coeff
            for exps, coeff in self.terms.items()
            if all(exps[i] % d == 0 for i, d in idx)
        }
        return out

    def _single_term(self) -> tuple[tuple[int, ...], object]:
        if len(self.terms) != 1:
            raise NonMonomialBaseError(
                f"expected a single-term series, found {len(self.terms)} terms"
            )
        return next(iter(self.terms.items()))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    # -- presentation --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in graded-lexicographic order (total degree, then exponents)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __str__(self):
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [
                f"{v}^{e}" if e > 1 else v for v, e in zip(self.vars, exps) if e
            ]
            coeff_str = str(coeff) if isinstance(coeff, int) else f"({coeff})"
            parts.append("*".join([coeff_str] + factors))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TruncatedSeries({self.vars}, caps={self.caps}, {self})"

    def to_json(self) -> list[dict]:
        return [
            {
                "exps": {v: e for v, e in zip(self.vars, exps) if e},
                "coef": coeff if isinstance(coeff, int) else str(coeff),
            }
            for exps, coeff in self.sorted_terms()
        ]


def q_bracket(n: int, base: TruncatedSeries) -> TruncatedSeries:
    """The bracket 1 + base + ... + base^(n-1) for a scaled monomial base."""
    if n < 0:
        raise ValueError(f"bracket length must be >= 0, got {n}")
    exps, coeff = base._single_term()
    out = TruncatedSeries(base.vars, base.caps)
    cur_exp = (0,) * len(base.vars)
    cur_coeff = 1
    dropped = False
    for _ in range(n):
        dropped |= out._accumulate(cur_exp, cur_coeff)
        cur_exp = tuple(a + b for a, b in zip(cur_exp, exps))
        cur_coeff = cur_coeff * coeff
    out._prune()
    out.exact = not dropped
    return out


def geom_inverse(monomial: TruncatedSeries) -> TruncatedSeries:
    """The truncated expansion of 1/(1 - M) for a scaled monomial M.

    Exact within the caps region: (1 - M) * geom_inverse(M) == 1 there.
    """
    exps, coeff = monomial._single_term()
    if not any(exps):
        raise ConstantTermError("cannot invert 1 - M when M has a constant term")
    out = TruncatedSeries(monomial.vars, monomial.caps, exact=False)
    cur_exp = (0,) * len(monomial.vars)
    cur_coeff = 1
    while not any(e > c for e, c in zip(cur_exp, out.caps)):
        out._accumulate(cur_exp, cur_coeff)
        cur_exp = tuple(a + b for a, b in zip(cur_exp, exps))
        cur_coeff = cur_coeff * coeff
    out._prune()
    return out


def equal_on(
    lhs: TruncatedSeries,
    rhs: TruncatedSeries,
    region: Mapping[str, int] | None = None,
) -> tuple[bool, tuple[dict, object, object] | None]:
    """Compare coefficients on a region; (ok, first mismatch in graded-lex order).

    The default region is the componentwise minimum of both valid regions.
    An explicit region beyond what either side guarantees raises RegionError.
    """
    if lhs.vars != rhs.vars:
        raise ValueError(f"variable mismatch: {lhs.vars} vs {rhs.vars}")
    caps = tuple(min(a, b) for a, b in zip(lhs.caps, rhs.caps))
    shared = tuple(
        min(c, *(x for x in (a, b) if x is not _INF))
        if (a is not _INF or b is not _INF)
        else c
        for a, b, c in zip(lhs._effective_region(), rhs._effective_region(), caps)
    )
    if region is None:
        bounds = shared
    else:
        bounds = tuple(region.get(v, s) for v, s in zip(lhs.vars, shared))
        for v, want, have in zip(lhs.vars, bounds, shared):
            if want > have:
                raise RegionError(
                    f"requested region {v} <= {want} exceeds valid region {v} <= {have}"
                )
    keys = set()
    for series in (lhs, rhs):
        keys.update(
            e for e in series.terms if all(x <= b for x, b in zip(e, bounds))
        )
    for exps in sorted(keys, key=lambda e: (sum(e), e)):
        a = lhs.terms.get(exps, 0)
        b = rhs.terms.get(exps, 0)
        if a != b:
            mono = {v: e for v, e in zip(lhs.vars, exps) if e}
            return False, (mono, a, b)
    return True, None
