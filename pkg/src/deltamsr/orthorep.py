"""Exact orthogonal representations for certified delta-graphs.

Given a delta-graph certificate for G, build one rational vector per vertex
in dimension d = max_degree(complement(G)) + 1 such that inner products are
nonzero exactly on edges.  The span of the vectors then witnesses
msr(G) <= d = |G| - min_degree(G).

Each vertex is adjoined by solving a homogeneous linear system over the
columns [coordinates | neighbour inner products]: orthogonality rows for
prior non-neighbours, and rows tying each prior neighbour's inner product
to an extra unknown that must come out nonzero.  Free variables are drawn
from a seeded sampler; every required nonzero condition (coordinates,
neighbour inner products, pairwise independence) is verified in exact
arithmetic and the offending free variables are resampled on failure.
Random nonzero rationals from a widening window make each condition fail
with vanishing probability, so the bounded retry loop replaces the nested
field extensions a by-hand construction would track.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .graphs import Graph, complement, max_degree, min_degree
from .linalg import (
    dot,
    nullspace_basis,
    primitive_int_vector,
    rank_bareiss,
    size_reduce_basis,
)
from .recognition import DELTA_BASE_KINDS, DeltaCertificate, check_certificate

__all__ = [
    "MAX_RESAMPLES",
    "WIDEN_EVERY",
    "RetryBudgetExceeded",
    "GenericSampler",
    "RationalVector",
    "OrthoRep",
    "GramMatrix",
    "RepReport",
    "seed_triple",
    "extend",
    "construct",
    "gram",
    "rank",
    "verify_rep",
    "fraction_to_str",
    "rep_to_json_dict",
    "rep_from_json_dict",
    "gram_to_json_dict",
    "gram_to_decimal_text",
]

# per-step retry budget; exceeding it signals a bug, not expected behaviour
MAX_RESAMPLES = 32
WIDEN_EVERY = 8

RationalVector = tuple[Fraction, ...]


class RetryBudgetExceeded(RuntimeError):
    """Raised when a solve step keeps hitting nonzero-condition failures."""


@dataclass
class GenericSampler:
    """Seeded source of nonzero rationals from a growing magnitude window."""

    seed: int = 0
    magnitude: int = 10_000
    _rng: random.Random = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._rng = random.Random(self.seed)

    def nonzero(self) -> Fraction:
        value = self._rng.randint(1, self.magnitude)
        if self._rng.random() < 0.5:
            value = -value
        return Fraction(value)

    def widen(self) -> None:
        self.magnitude *= 2


@dataclass(frozen=True)
class OrthoRep:
    """One rational vector per vertex, all in dimension ``dim``."""

    dim: int
    vectors: tuple[RationalVector, ...]


@dataclass(frozen=True)
class GramMatrix:
    """Exact symmetric matrix of pairwise inner products."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class RepReport:
    """Verification outcome; bound is |G| - min_degree(G) when all checks pass."""

    pattern_ok: bool
    nonzero_ok: bool
    independent_ok: bool
    dimension_ok: bool
    bound: int | None

    @property
    def all_ok(self) -> bool:
        return (
            self.pattern_ok
            and self.nonzero_ok
            and self.independent_ok
            and self.dimension_ok
        )


def _is_multiple(u: RationalVector, v: RationalVector) -> bool:
    """True when v = lambda * u for some rational lambda (u nonzero)."""
    i = next(k for k, x in enumerate(u) if x != 0)
    lam = v[i] / u[i]
    return all(x * lam == y for x, y in zip(u, v))


def _sample_free(d: int, sampler: GenericSampler) -> RationalVector:
    return tuple(sampler.nonzero() for _ in range(d))


def _solve_vector(
    priors: list[tuple[RationalVector, bool]],
    d: int,
    sampler: GenericSampler,
) -> RationalVector:
    """Vector with prescribed zero/nonzero inner products against the priors.

    priors pairs each earlier vector with True (inner product must be
    nonzero) or False (must be zero).  Requires fewer than d zero
    constraints, which any valid certificate guarantees.
    """
    t = sum(1 for _, adjacent in priors if not adjacent)
    if t >= d:
        raise ValueError(
            f"{t} orthogonality constraints in dimension {d} can force the "
            "zero vector; the certificate bound is violated"
        )
    neighbor_ids = [i for i, (_, adjacent) in enumerate(priors) if adjacent]
    a = len(neighbor_ids)
    rows: list[list[Fraction]] = []
    for i, (vec, adjacent) in enumerate(priors):
        row = list(vec) + [Fraction(0)] * a
        if adjacent:
            row[d + neighbor_ids.index(i)] = Fraction(-1)
        rows.append(row)
    basis = nullspace_basis(rows, d + a)
    # integer lattice basis of the solution space, kept small so coordinate
    # growth across construction steps stays polynomial instead of stacking
    lattice = size_reduce_basis([primitive_int_vector(b) for b in basis], d)

    for attempt in range(MAX_RESAMPLES):
        if attempt and attempt % WIDEN_EVERY == 0:
            sampler.widen()
        coeffs = [int(sampler.nonzero()) for _ in lattice]
        z = [sum(c * b[j] for c, b in zip(coeffs, lattice)) for j in range(d + a)]
        x = z[:d]
        inner = z[d:]
        if any(c == 0 for c in x):
            continue
        if any(gv == 0 for gv in inner):
            continue
        xt = tuple(Fraction(c) for c in x)
        if any(_is_multiple(vec, xt) for vec, _ in priors):
            continue
        return tuple(Fraction(c) for c in primitive_int_vector(x))
    raise RetryBudgetExceeded(
        f"no admissible vector after {MAX_RESAMPLES} resamples "
        f"(dimension {d}, {len(priors)} priors, {t} orthogonality constraints)"
    )


def seed_triple(
    base_kind: str, d: int, sampler: GenericSampler
) -> tuple[RationalVector, RationalVector, RationalVector]:
    """Vectors for the three base vertices (3K1, or K2+K1 with v1 ~ v3).

    All coordinates are nonzero and the vectors are pairwise independent;
    inner products vanish exactly on the non-edges of the base pattern.
    """
    if d < 3:
        raise ValueError("representation dimension must be at least 3")
    if base_kind not in DELTA_BASE_KINDS:
        raise ValueError(f"base kind {base_kind!r} is not a delta-form base")
    v1 = _sample_free(d, sampler)
    v2 = _solve_vector([(v1, False)], d, sampler)
    third_sees_first = base_kind == "K2+K1"
    v3 = _solve_vector([(v1, third_sees_first), (v2, False)], d, sampler)
    return v1, v2, v3


def extend(rep: OrthoRep, adjacency_row, sampler: GenericSampler) -> RationalVector:
    """Vector for one more vertex; adjacency_row[i] pairs it with rep.vectors[i]."""
    row = [bool(b) for b in adjacency_row]
    if len(row) != len(rep.vectors):
        raise ValueError("adjacency row length does not match the representation")
    return _solve_vector(list(zip(rep.vectors, row)), rep.dim, sampler)


def construct(
    g: Graph, cert: DeltaCertificate, sampler: GenericSampler | None = None
) -> OrthoRep:
    """Representation of g in dimension max_degree(complement(g)) + 1.

    Walks the certificate ordering: the base triple first, then one solve
    per later vertex.  Vectors in the result are indexed by vertex id.
    """
    if cert.is_complement_form:
        raise ValueError("construction needs the delta-form certificate")
    chk = check_certificate(g, cert)
    if not chk.ok:
        raise ValueError(f"invalid certificate: {chk.reason}")
    if sampler is None:
        sampler = GenericSampler()
    d = max_degree(complement(g)) + 1
    order = cert.ordering
    built: list[RationalVector] = [_sample_free(d, sampler)]
    for i in range(1, g.n):
        v = order[i]
        priors = [(built[j], g.has_edge(order[j], v)) for j in range(i)]
        built.append(_solve_vector(priors, d, sampler))
    by_vertex: list[RationalVector | None] = [None] * g.n
    for i, v in enumerate(order):
        by_vertex[v] = built[i]
    return OrthoRep(dim=d, vectors=tuple(by_vertex))  # type: ignore[arg-type]


def gram(rep: OrthoRep) -> GramMatrix:
    return GramMatrix(
        tuple(tuple(dot(u, v) for v in rep.vectors) for u in rep.vectors)
    )


def rank(m: GramMatrix) -> int:
    return rank_bareiss(m.entries)


def verify_rep(g: Graph, rep: OrthoRep) -> RepReport:
    """Re-check every contract of a representation against its graph."""
    if len(rep.vectors) != g.n:
        raise ValueError("representation size does not match the graph")
    dimension_ok = rep.dim == max_degree(complement(g)) + 1 and all(
        len(v) == rep.dim for v in rep.vectors
    )
    nonzero_ok = all(all(c != 0 for c in vec) for vec in rep.vectors)
    # ragged vectors make inner products meaningless; report the dimension
    # failure instead of comparing patterns
    comparable = len({len(v) for v in rep.vectors}) == 1
    pattern_ok = comparable
    independent_ok = comparable
    if comparable:
        for i in range(g.n):
            for j in range(i + 1, g.n):
                if (dot(rep.vectors[i], rep.vectors[j]) != 0) != g.has_edge(i, j):
                    pattern_ok = False
                if any(c != 0 for c in rep.vectors[i]) and _is_multiple(
                    rep.vectors[i], rep.vectors[j]
                ):
                    independent_ok = False
    all_ok = pattern_ok and nonzero_ok and independent_ok and dimension_ok
    bound = g.n - min_degree(g) if all_ok else None
    return RepReport(pattern_ok, nonzero_ok, independent_ok, dimension_ok, bound)


# --- serialization ----------------------------------------------------------


def fraction_to_str(x: Fraction) -> str:
    # forced construction steps can exceed the interpreter's int-to-str cap
    needed = max(x.numerator.bit_length(), x.denominator.bit_length()) // 3 + 16
    if hasattr(sys, "get_int_max_str_digits") and needed > sys.get_int_max_str_digits():
        sys.set_int_max_str_digits(needed)
    return f"{x.numerator}/{x.denominator}"


def rep_to_json_dict(rep: OrthoRep) -> dict:
    return {
        "dim": rep.dim,
        "vectors": [[fraction_to_str(c) for c in vec] for vec in rep.vectors],
    }


def rep_from_json_dict(d: dict) -> OrthoRep:
    return OrthoRep(
        dim=int(d["dim"]),
        vectors=tuple(tuple(Fraction(s) for s in vec) for vec in d["vectors"]),
    )


def gram_to_json_dict(m: GramMatrix) -> dict:
    return {
        "n": m.n,
        "entries": [[fraction_to_str(x) for x in row] for row in m.entries],
    }


def gram_to_decimal_text(m: GramMatrix, digits: int = 12) -> str:
    """Decimal rendering for interop; unlike the JSON form this is lossy."""
    with localcontext() as ctx:
        ctx.prec = digits
        lines = []
        for row in m.entries:
            lines.append(
                " ".join(
                    str(Decimal(x.numerator) / Decimal(x.denominator)) for x in row
                )
            )
    return "\n".join(lines) + "\n"
