"""Descent-type statistics on elements of G(r,p,s,n).

Colored values are ordered by the color order

    1^(r-1) < ... < n^(r-1) < ... < 1^1 < ... < n^1 < 0 < 1 < ... < n

(colored entries grouped by color descending, values ascending inside a
group, all below the uncolored values), or by the alternative order

    n^(r-1) <' ... <' n^1 <' ... <' 1^(r-1) <' ... <' 1^1 <' 0 <' 1 <' ... <' n

which groups colored entries by absolute value descending and colors
descending within a value.

All statistics of a class are computed from its canonical lift; they do
not depend on the lift chosen.  The partition lambda(g) is assembled from
the homogeneous descent counts h_i and the minimal color-compatible
partition k_i:

    k_n = R_{r/s}(c_n),   k_i = k_{i+1} + R_r(c_i - c_{i+1}),
    lambda_i = r*h_i + k_i,

and then fmaj = |lambda|, fdes = lambda_1, des = floor((s*lambda_1+r-s)/r),
col = sum of R_{r/s}(c_i).
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import ProjectiveElement, residue

COLOR = "COLOR"
PRIME = "PRIME"


class OrderScopeError(ValueError):
    """The <' statistics are only defined on the wreath products (p=s=1)."""


class ScopeError(ValueError):
    """The operation is restricted to a smaller family of groups."""


def _key_color(value: int, color: int) -> tuple[int, int, int]:
    if color == 0:
        return (1, 0, value)
    return (0, -color, value)


def _key_prime(value: int, color: int) -> tuple[int, int, int]:
    if color == 0:
        return (1, 0, value)
    return (0, -value, -color)


_KEYS = {COLOR: _key_color, PRIME: _key_prime}


def order_key(order: str, value: int, color: int) -> tuple[int, int, int]:
    """Sort key realizing the chosen total order on colored values."""
    return _KEYS[order](value, color)


def compare(order: str, a: tuple[int, int], b: tuple[int, int]) -> int:
    """Compare two colored values (value, color); negative/zero/positive.

    Value 0 only carries color 0.
    """
    key = _KEYS[order]
    for value, color in (a, b):
        if value == 0 and color != 0:
            raise ValueError("value 0 only occurs with color 0")
    ka, kb = key(*a), key(*b)
    return (ka > kb) - (ka < kb)


def des_set(g: ProjectiveElement, order: str = COLOR) -> set[int]:
    """Descent positions {i in [0,n-1] : g(i) > g(i+1)}, with g(0) = 0.

    Position 0 is a descent exactly when g(1) is colored.
    """
    if order == PRIME and (g.group.p != 1 or g.group.s != 1):
        raise OrderScopeError(
            f"order <' statistics are defined on G(r,n) only, not {g.group}"
        )
    key = _KEYS[order]
    prev = key(0, 0)
    out = set()
    for i, (v, c) in enumerate(zip(g.sigma, g.colors)):
        cur = key(v, c)
        if prev > cur:
            out.add(i)
        prev = cur
    return out


@dataclass(frozen=True)
class StatRecord:
    """Every statistic of one element, as computed from its canonical lift."""

    desG: int
    desA: int
    maj: int
    fmaj: int
    fdes: int
    des: int
    col: int
    invAbs: int
    signAbs: int
    hdes: frozenset[int]
    hvec: tuple[int, ...]
    kvec: tuple[int, ...]
    lam: tuple[int, ...]
    colorClass: int

    def to_json(self) -> dict:
        return {
            "desG": self.desG,
            "desA": self.desA,
            "maj": self.maj,
            "fmaj": self.fmaj,
            "fdes": self.fdes,
            "des": self.des,
            "col": self.col,
            "invAbs": self.invAbs,
            "signAbs": self.signAbs,
            "hdes": sorted(self.hdes),
            "hvec": list(self.hvec),
            "kvec": list(self.kvec),
            "lambda": list(self.lam),
        }


def inversions(sigma: tuple[int, ...]) -> int:
    n = len(sigma)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]
    )


def stat_record(g: ProjectiveElement) -> StatRecord:
    group = g.group
    r, s, n = group.r, group.s, group.n
    rs = r // s
    sigma, colors = g.sigma, g.colors

    hdes = frozenset(
        i + 1
        for i in range(n - 1)
        if colors[i] == colors[i + 1] and sigma[i] > sigma[i + 1]
    )
    hvec = [0] * n
    running = 0
    for i in range(n - 1, -1, -1):
        if i + 1 in hdes:
            running += 1
        hvec[i] = running

    kvec = [0] * n
    kvec[n - 1] = residue(colors[n - 1], rs)
    for i in range(n - 2, -1, -1):
        kvec[i] = kvec[i + 1] + residue(colors[i] - colors[i + 1], r)

    lam = tuple(r * h + k for h, k in zip(hvec, kvec))
    fmaj = sum(lam)
    fdes = lam[0]
    des = (s * lam[0] + r - s) // r
    col = sum(residue(c, rs) for c in colors)

    descents = des_set(g, COLOR)
    des_g = len(descents)
    des_a = len(descents - {0})
    maj = sum(descents - {0})

    inv = inversions(sigma)
    return StatRecord(
        desG=des_g,
        desA=des_a,
        maj=maj,
        fmaj=fmaj,
        fdes=fdes,
        des=des,
        col=col,
        invAbs=inv,
        signAbs=-1 if inv % 2 else 1,
        hdes=hdes,
        hvec=tuple(hvec),
        kvec=tuple(kvec),
        lam=lam,
        colorClass=residue(sum(colors), r),
    )


def fmaj_prime(g: ProjectiveElement) -> int:
    """The <'-flag major index r * sum(Des'_G(g)) + col(g), on G(r,n)."""
    prime_descents = des_set(g, PRIME)
    rec = stat_record(g)
    return g.group.r * sum(prime_descents) + rec.col


@dataclass(frozen=True)
class BnDescentSplit:
    """The four-part splitting of Des_G(g) for g in B_n, plus Neg and NN.

    Des_G(g)  = hdes0 | hdes1 | des_pm | ({0} iff d0)
    Des'_G(g) = hdes0 | (nn - hdes1) | des_pm | ({0} iff d0)
    """

    hdes0: frozenset[int]
    hdes1: frozenset[int]
    des_pm: frozenset[int]
    d0: bool
    nn: frozenset[int]
    neg: frozenset[int]

    def to_json(self) -> dict:
        return {
            "hdes0": sorted(self.hdes0),
            "hdes1": sorted(self.hdes1),
            "desPM": sorted(self.des_pm),
            "d0": self.d0,
            "nn": sorted(self.nn),
            "neg": sorted(self.neg),
        }


def bn_descent_split(g: ProjectiveElement) -> BnDescentSplit:
    group = g.group
    if group.r != 2 or group.p != 1 or group.s != 1:
        raise ScopeError(f"descent splitting is defined on B_n only, not {group}")
    sigma, colors = g.sigma, g.colors
    n = group.n
    hdes0, hdes1, des_pm, nn = set(), set(), set(), set()
    for i in range(n - 1):
        ci, cj = colors[i], colors[i + 1]
        if ci == 1 and cj == 1:
            nn.add(i + 1)
        if sigma[i] > sigma[i + 1]:
            if ci == 0 and cj == 0:
                hdes0.add(i + 1)
            elif ci == 1 and cj == 1:
                hdes1.add(i + 1)
        if ci == 0 and cj == 1:
            des_pm.add(i + 1)
    neg = frozenset(i + 1 for i in range(n) if colors[i] == 1)
    return BnDescentSplit(
        hdes0=frozenset(hdes0),
        hdes1=frozenset(hdes1),
        des_pm=frozenset(des_pm),
        d0=colors[0] == 1,
        nn=frozenset(nn),
        neg=neg,
    )


def col_residues(f, k: int) -> int:
    """Sum of the residues modulo k of the entries of an integer vector."""
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    return sum(residue(x, k) for x in f)
