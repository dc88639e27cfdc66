"""Differential spectra, APN predicates, named exponent families, points.

A function f on GF(2^n) is APN exactly when f(x+a) + f(x) = b has at most two
solutions x for every nonzero a and every b.  Solutions pair up as {x, x+a},
so every solution count is even; diff_spectrum asserts that invariant on
everything it produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import FieldCtx, create_field
from .poly import ConstraintViolated, TriPoly, UniPoly

SPECTRUM_MAX_N = 20
PROP1_MAX_N = 7
POINTS_MAX_N = 8


def _f_table(f: UniPoly) -> list[int]:
    return [f.evaluate(x) for x in range(f.ctx.order)]


@dataclass
class DiffSpectrum:
    """Solution-count statistics of f(x+a) + f(x) = b over all a != 0, b."""

    ctx: FieldCtx
    poly: UniPoly
    counts: dict[int, dict[int, int]]  # a -> {solution count -> #b with it}
    table: dict[int, dict[int, int]] | None = None  # a -> {b -> count}, --full

    def __post_init__(self):
        q = self.ctx.order
        for a, hist in self.counts.items():
            if not 0 < a < q:
                raise AssertionError("difference values must be nonzero elements")
            if any(c % 2 for c in hist):
                raise AssertionError("odd solution count: pairing invariant broken")
            if sum(c * m for c, m in hist.items()) != q:
                raise AssertionError("per-difference counts must sum to the field size")

    @property
    def uniformity(self) -> int:
        return max(max(h) for h in self.counts.values())

    def is_apn(self) -> bool:
        return self.uniformity == 2

    def histogram(self) -> list[tuple[int, int]]:
        """Aggregated (count, frequency) pairs over all (a, b), ascending."""
        agg: dict[int, int] = {}
        for hist in self.counts.values():
            for c, m in hist.items():
                agg[c] = agg.get(c, 0) + m
        return sorted(agg.items())

    def to_json(self) -> dict:
        return {
            "n": self.ctx.n,
            "modulus": f"0x{self.ctx.modulus:x}",
            "poly": self.poly.render(),
            "uniformity": self.uniformity,
            "histogram": [
                {"count": c, "frequency": m} for c, m in self.histogram()
            ],
            "apn": self.is_apn(),
        }


def _spectrum_rows(args):
    n, modulus, terms, a_list, full = args
    ctx = create_field(n, modulus)
    fv = _f_table(UniPoly(ctx, terms))
    q = ctx.order
    counts: dict[int, dict[int, int]] = {}
    table: dict[int, dict[int, int]] = {}
    for a in a_list:
        per_b: dict[int, int] = {}
        for x in range(q):
            b = fv[x ^ a] ^ fv[x]
            per_b[b] = per_b.get(b, 0) + 1
        hist: dict[int, int] = {}
        for c in per_b.values():
            hist[c] = hist.get(c, 0) + 1
        missed = q - len(per_b)
        if missed:
            hist[0] = missed
        counts[a] = hist
        if full:
            table[a] = per_b
    return counts, table


def diff_spectrum(f: UniPoly, full: bool = False, jobs: int = 1) -> DiffSpectrum:
    """Exhaustive differential spectrum of f; full also keeps the (a, b) table.

    jobs > 1 splits the nonzero differences across processes; rows are keyed
    by the difference value, so the merge cannot depend on worker order.
    """
    ctx = f.ctx
    if ctx.n > SPECTRUM_MAX_N:
        raise ConstraintViolated(
            f"spectrum enumeration is capped at n <= {SPECTRUM_MAX_N}, got {ctx.n}"
        )
    q = ctx.order
    all_a = list(range(1, q))
    if jobs <= 1 or q < 64:
        counts, table = _spectrum_rows((ctx.n, ctx.modulus, f.terms, all_a, full))
    else:
        import multiprocessing

        chunks = [
            (ctx.n, ctx.modulus, f.terms, all_a[i::jobs], full) for i in range(jobs)
        ]
        counts, table = {}, {}
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            for part_counts, part_table in pool.map(_spectrum_rows, chunks):
                counts.update(part_counts)
                table.update(part_table)
    return DiffSpectrum(ctx=ctx, poly=f, counts=counts, table=table if full else None)


def is_apn(f: UniPoly) -> bool:
    """Early-exit APN test; agrees with diff_spectrum(f).uniformity == 2."""
    ctx = f.ctx
    if ctx.n > SPECTRUM_MAX_N:
        raise ConstraintViolated(
            f"spectrum enumeration is capped at n <= {SPECTRUM_MAX_N}, got {ctx.n}"
        )
    q = ctx.order
    fv = _f_table(f)
    for a in range(1, q):
        per_b: dict[int, int] = {}
        for x in range(q):
            b = fv[x ^ a] ^ fv[x]
            c = per_b.get(b, 0) + 1
            if c > 2:
                return False
            per_b[b] = c
    return True


def prop1_check(f: UniPoly) -> tuple[bool, tuple[int, int, int] | None]:
    """Surface criterion: every zero of N_f lies on the plane union D = 0.

    Scans all of GF(2^n)^3 (hence the n cap) and returns (holds, witness) with
    the lexicographically first violating triple if any.  The outcome is
    asserted against the differential APN test, the two being equivalent.
    """
    ctx = f.ctx
    if ctx.n > PROP1_MAX_N:
        raise ConstraintViolated(
            f"surface scan is capped at n <= {PROP1_MAX_N}, got {ctx.n}"
        )
    q = ctx.order
    fv = _f_table(f)

    def scan():
        for x in range(q):
            fx = fv[x]
            for y in range(q):
                fxy = fx ^ fv[y]
                s = x ^ y
                for z in range(q):
                    if fxy ^ fv[z] ^ fv[s ^ z] == 0:
                        if x != y and x != z and y != z:
                            return (x, y, z)
        return None

    witness = scan()
    holds = witness is None
    if holds != is_apn(f):
        raise AssertionError(
            "surface criterion disagrees with the differential test: internal bug"
        )
    return holds, witness


def corollary_bound(d: int, q: int) -> int:
    """Projective rational-point budget 4((d-3)q + 1) for an APN f of degree d."""
    return 4 * ((d - 3) * q + 1)


def _plane_zero_count(p: TriPoly) -> int:
    """Zeros of p(t, t, z) over all (t, z); p must be symmetric in x, y, z."""
    ctx = p.ctx
    q = ctx.order
    biv: dict[tuple[int, int], int] = {}
    for (i, j, k), c in p.terms.items():
        key = (i + j, k)
        r = biv.get(key, 0) ^ c
        if r:
            biv[key] = r
        else:
            del biv[key]
    if not biv:
        return q * q
    count = 0
    for t in range(q):
        uni: dict[int, int] = {}
        for (e, k), c in biv.items():
            v = ctx.mul(c, ctx.pow(t, e))
            if v:
                r = uni.get(k, 0) ^ v
                if r:
                    uni[k] = r
                else:
                    del uni[k]
        if not uni:
            count += q
            continue
        items = list(uni.items())
        for z in range(q):
            acc = 0
            for k, c in items:
                acc ^= ctx.mul(c, ctx.pow(z, k))
            if acc == 0:
                count += 1
    return count


def _line_zero_count(p: TriPoly) -> int:
    """Zeros of p(t, t, t) over all t."""
    ctx = p.ctx
    uni: dict[int, int] = {}
    for (i, j, k), c in p.terms.items():
        e = i + j + k
        r = uni.get(e, 0) ^ c
        if r:
            uni[e] = r
        else:
            del uni[e]
    count = 0
    for t in range(ctx.order):
        acc = 0
        for e, c in uni.items():
            acc ^= ctx.mul(c, ctx.pow(t, e))
        if acc == 0:
            count += 1
    return count


def projective_point_count(f: UniPoly) -> int:
    """Rational points of the projective closure of phi_f = 0.

    Affine points split by D: where D != 0 the identity N_f = phi_f * D lets
    the scan test N_f via a value table of f; where D = 0 (the three planes,
    which meet in the diagonal line) phi_f is evaluated through its plane
    restrictions, using the symmetry of phi_f.  Points at infinity come from
    the top homogeneous part over the 2^(2n) + 2^n + 1 representatives of the
    projective plane.
    """
    from .phi import build_phi

    ctx = f.ctx
    if ctx.n > POINTS_MAX_N:
        raise ConstraintViolated(
            f"point counting is capped at n <= {POINTS_MAX_N}, got {ctx.n}"
        )
    q = ctx.order
    phi = build_phi(f)
    if phi.is_zero():
        # the whole space plus the projective plane at infinity
        return q**3 + q * q + q + 1

    fv = _f_table(f)
    off_planes = 0
    for x in range(q):
        fx = fv[x]
        for y in range(q):
            if y == x:
                continue
            fxy = fx ^ fv[y]
            s = x ^ y
            for z in range(q):
                if z == x or z == y:
                    continue
                if fxy ^ fv[z] ^ fv[s ^ z] == 0:
                    off_planes += 1

    plane = _plane_zero_count(phi)
    line = _line_zero_count(phi)
    affine = off_planes + 3 * plane - 2 * line

    top_deg = phi.total_degree()
    top = phi.homogeneous_parts()[top_deg]
    infinity = 0
    for y in range(q):
        for z in range(q):
            if top.eval(1, y, z) == 0:
                infinity += 1
    for z in range(q):
        if top.eval(0, 1, z) == 0:
            infinity += 1
    if top.eval(0, 0, 1) == 0:
        infinity += 1
    return affine + infinity


@dataclass(frozen=True)
class FamilySpec:
    """A named APN family instance: tag, field degree n, parameters r, s."""

    family: str
    n: int
    r: int = 0
    s: int = 0


FAMILY_TAGS = (
    "gold",
    "kasami-welch",
    "welch",
    "niho",
    "inverse",
    "dobbertin",
    "ekp",
    "bcl",
)


def _require(cond: bool, msg: str):
    if not cond:
        raise ConstraintViolated(msg)


def ekp_admissible_u(ctx: FieldCtx) -> list[int]:
    """The coefficient set w*GF(2^5)* union w^2*GF(2^5)*, w of order 3."""
    _require(ctx.n == 10, "the degree-36 binomial family lives in GF(2^10)")
    w = next(a for a in range(2, ctx.order) if ctx.pow(a, 3) == 1 and a != 1)
    w2 = ctx.sqr(w)
    sub = [v for v in ctx.subfield_elements(5) if v]
    us = {ctx.mul(w, v) for v in sub} | {ctx.mul(w2, v) for v in sub}
    return sorted(us)


def family_exponent(spec: FamilySpec) -> int | UniPoly:
    """Exponent of a monomial family, or the binomial itself for ekp / bcl.

    Constraints are enforced, so every value this returns is an APN instance
    on its declared field.  Binomials are built over the default modulus.
    """
    tag = spec.family.lower()
    n, r, s = spec.n, spec.r, spec.s
    _require(tag in FAMILY_TAGS, f"unknown family {spec.family!r}; known: {', '.join(FAMILY_TAGS)}")
    _require(n >= 1, "field degree n must be positive")
    if tag == "gold":
        _require(r >= 1, "gold needs r >= 1")
        _require(math.gcd(r, n) == 1, f"gold needs gcd(r, n) = 1, got gcd({r}, {n}) = {math.gcd(r, n)}")
        return 2**r + 1
    if tag == "kasami-welch":
        _require(r >= 1, "kasami-welch needs r >= 1")
        _require(math.gcd(r, n) == 1, f"kasami-welch needs gcd(r, n) = 1, got gcd({r}, {n}) = {math.gcd(r, n)}")
        _require(n % 2 == 1, "kasami-welch needs odd n")
        return 2 ** (2 * r) - 2**r + 1
    if tag == "welch":
        _require(r >= 1 and n == 2 * r + 1, f"welch needs n = 2r + 1, got n={n}, r={r}")
        return 2**r + 3
    if tag == "niho":
        _require(r >= 1 and n == 2 * r + 1, f"niho needs n = 2r + 1, got n={n}, r={r}")
        if r % 2 == 0:
            return 2**r + 2 ** (r // 2) - 1
        return 2**r + 2 ** ((3 * r + 1) // 2) - 1
    if tag == "inverse":
        _require(r >= 1 and n == 2 * r + 1, f"inverse needs n = 2r + 1, got n={n}, r={r}")
        return 2 ** (2 * r) - 1
    if tag == "dobbertin":
        _require(r >= 1 and n == 5 * r, f"dobbertin needs n = 5r, got n={n}, r={r}")
        return 2 ** (4 * r) + 2 ** (3 * r) + 2 ** (2 * r) + 2**r - 1
    if tag == "ekp":
        _require(n == 10, "the degree-36 binomial family lives in GF(2^10)")
        ctx = create_field(10)
        u = ekp_admissible_u(ctx)[0]
        return UniPoly(ctx, {3: 1, 36: u})
    # bcl
    _require(n % 3 == 0 and n // 3 >= 4, f"bcl needs n = 3k with k >= 4, got n={n}")
    k = n // 3
    _require(math.gcd(k, 3) == 1, f"bcl needs gcd(k, 3) = 1, got k={k}")
    _require(s >= 1 and math.gcd(s, 3 * k) == 1, f"bcl needs gcd(s, 3k) = 1, got s={s}, k={k}")
    i = (s * k) % 3
    m = 3 - i
    ctx = create_field(n)
    t = 2 ** (2 * k) + 2**k + 1
    w = next(a for a in range(1, ctx.order) if ctx.element_order(a) == t)
    return UniPoly(ctx, {2**s + 1: 1, 2 ** (i * k) + 2 ** (m * k + s): w})


def family_poly(spec: FamilySpec) -> UniPoly:
    """The family instance as a polynomial over the default GF(2^n)."""
    exp = family_exponent(spec)
    if isinstance(exp, UniPoly):
        return exp
    return UniPoly(create_field(spec.n), {exp: 1})
