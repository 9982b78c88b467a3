"""Exhaustive and random searches over small ambient modules.

Exhaustive enumeration walks distinct codes rather than generator
tuples: starting from the zero code, each level extends every known
code C by one more generator w.  Extending by any w' in (C + w) or
(C + w + u*w) provably closes to the same code, so those cosets are
skipped on the fly; together with a fingerprint on the sorted codeword
set this visits each code generated by up to g rows exactly once while
touching far fewer candidates than the (2^(alpha+2*beta))^g generator
tuples the space nominally contains.  That nominal count is still the
budget guard: exhaustive mode refuses spaces beyond 2^26 tuples.

Searches with a target prune candidates with cheap necessary
conditions before any dual work:

  one_weight       (|C|-1) divides alpha + 2*beta, then the single
                   weight must satisfy both one-weight relations (this
                   makes "one-weight" mean one-weight without zero
                   columns; the relations fail otherwise)
  two_weight_projective
                   exactly two weights and the exact quadratic in
                   (N, |C|, m1, m2) vanishes
  fsd_one_weight   the one_weight conditions plus |C|^2 = 2^N

Pruned and unpruned runs return identical hit lists by construction;
the test suite asserts it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain
from typing import Iterable, Iterator, Sequence

from .classify import (
    ClassificationReport,
    classify,
    dual_summary,
    is_formally_self_dual,
    weight_profile,
)
from .core import (
    AdditiveCode,
    AmbientShape,
    MixedVector,
    _extract_generators,
    _u_mul_packed,
    gray_parameters,
    span,
)
from .errors import ClassificationViolation, SpaceTooLarge
from .weights import lee_enumerator

__all__ = [
    "TARGETS",
    "SearchSpace",
    "SearchHit",
    "enumerate_candidates",
    "search_with_pruning",
    "FsdSurveyReport",
    "verify_fsd_classification",
    "OPTIMALITY_TABLE",
    "optimality_check",
]

TARGETS = ("one_weight", "two_weight_projective", "fsd_one_weight")

# Exhaustive mode refuses spaces whose nominal generator-tuple count
# exceeds this.
MAX_EXHAUSTIVE_TUPLES = 1 << 26


@dataclass(frozen=True)
class SearchSpace:
    """Shape ranges (inclusive), generator budget and mode.

    ``alpha``/``beta`` are (lo, hi) pairs; a bare int means a single
    value.  ``budget`` is the number of generator tuples drawn in
    random mode.
    """

    alpha: tuple[int, int]
    beta: tuple[int, int]
    max_rows: int = 3
    mode: str = "exhaustive"
    budget: int | None = None
    seed: int | None = None
    target: str | None = None

    def __post_init__(self):
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if isinstance(value, int):
                object.__setattr__(self, name, (value, value))
        for name in ("alpha", "beta"):
            lo, hi = getattr(self, name)
            if lo < 0 or hi < lo:
                raise ValueError(f"bad {name} range {getattr(self, name)}")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.max_rows < 1:
            raise ValueError("max_rows must be positive")
        if self.target is not None and self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}")
        if self.mode == "random" and not self.budget:
            raise ValueError("random mode needs a budget")

    def shapes(self) -> list[AmbientShape]:
        # a range may be empty (alpha = beta = 0): searches over it just
        # yield nothing
        out = []
        for a in range(self.alpha[0], self.alpha[1] + 1):
            for b in range(self.beta[0], self.beta[1] + 1):
                if a + b >= 1:
                    out.append(AmbientShape(a, b))
        return out

    def tuple_count(self) -> int:
        """Nominal candidate count: generator tuples across all shapes."""
        return sum(s.ambient_size ** self.max_rows for s in self.shapes())


def _codes_by_closure(
    shape: AmbientShape, max_rows: int
) -> Iterator[AdditiveCode]:
    """All distinct codes generated by up to max_rows rows, zero code first."""
    zero = frozenset({0})
    seen: set[frozenset[int]] = {zero}
    frontier: list[frozenset[int]] = [zero]
    yield AdditiveCode(shape, (), (0,))
    for _ in range(max_rows):
        new_frontier: list[frozenset[int]] = []
        for base in frontier:
            marked = set(base)
            for w in range(shape.ambient_size):
                if w in marked:
                    continue
                uw = _u_mul_packed(shape, w)
                grown = set(base)
                for h in (w, uw):
                    if h not in grown:
                        grown |= {h ^ x for x in grown}
                # every word of base+w and base+w+uw closes to the same code
                for x in base:
                    marked.add(x ^ w)
                    marked.add(x ^ w ^ uw)
                frozen = frozenset(grown)
                if frozen not in seen:
                    seen.add(frozen)
                    new_frontier.append(frozen)
                    words = tuple(sorted(frozen))
                    yield AdditiveCode(
                        shape, _extract_generators(shape, words), words
                    )
        frontier = new_frontier


def enumerate_candidates(space: SearchSpace) -> Iterator[AdditiveCode]:
    """Deduplicated candidate codes of the space, deterministic order."""
    shapes = space.shapes()
    if not shapes:
        return
    if space.mode == "exhaustive":
        for shape in shapes:
            if shape.ambient_size ** space.max_rows > MAX_EXHAUSTIVE_TUPLES:
                raise SpaceTooLarge(
                    f"space holds {space.tuple_count()} generator tuples; "
                    f"the exhaustive cap is {MAX_EXHAUSTIVE_TUPLES}"
                )
        for shape in shapes:
            yield from _codes_by_closure(shape, space.max_rows)
        return
    rng = random.Random(space.seed)
    # Word-set fingerprints, not the word sets themselves: a long random
    # run would otherwise pin every distinct code it ever drew.
    seen: set[tuple[int, int, int]] = set()
    assert space.budget is not None
    for _ in range(space.budget):
        shape = shapes[rng.randrange(len(shapes))]
        rows = [
            MixedVector(
                shape,
                rng.randrange(1 << shape.alpha),
                rng.randrange(1 << (2 * shape.beta)),
            )
            for _ in range(space.max_rows)
        ]
        code = span(shape, rows)
        key = (shape.alpha, shape.beta, hash(code.words))
        if key not in seen:
            seen.add(key)
            yield code


@dataclass(frozen=True)
class SearchHit:
    code: AdditiveCode
    report: ClassificationReport
    gray: tuple[int, int, int | None]
    optimality: str


def _two_weight_quadratic(n: int, size: int, m1: int, m2: int) -> Fraction:
    return (
        Fraction(n * n)
        - n * (2 * m1 + 2 * m2 - 1)
        + m1 * m2 * (4 - Fraction(4, size))
    )


def search_with_pruning(
    space: SearchSpace,
    include: Iterable[Sequence[MixedVector]] = (),
    use_pruners: bool = True,
) -> list[SearchHit]:
    """Stream the space, keep codes matching the target, classify them.

    ``include`` rows are spanned and examined ahead of the space's own
    candidate stream (useful for confirming a known matrix under the
    same filters).  Pruners only ever skip codes the target predicate
    would reject, so ``use_pruners`` does not change the result.
    """
    if space.target is None:
        raise ValueError("search_with_pruning needs a target")
    target = space.target
    hits: list[SearchHit] = []
    # same fingerprint scheme as enumerate_candidates: keeps a long
    # random run from pinning every word set it ever saw
    seen: set[tuple[int, int, int]] = set()
    included = (span(rows[0].shape, tuple(rows)) for rows in include)
    for code in chain(included, enumerate_candidates(space)):
        key = (code.shape.alpha, code.shape.beta, hash(code.words))
        if key in seen:
            continue
        seen.add(key)
        size = code.cardinality
        if size < 2:
            continue
        n = code.shape.big_n
        if use_pruners and target in ("one_weight", "fsd_one_weight"):
            if n % (size - 1):
                continue
            if target == "fsd_one_weight" and size * size != code.shape.ambient_size:
                continue
        enum = lee_enumerator(code)
        weights = enum.nonzero_weights()
        if target in ("one_weight", "fsd_one_weight"):
            if len(weights) != 1:
                continue
            if weight_profile(code, enum).lambda_ is None:
                continue
            dual = dual_summary(code, enum)
            if target == "fsd_one_weight" and not is_formally_self_dual(code, dual):
                continue
        else:  # two_weight_projective
            if len(weights) != 2:
                continue
            if use_pruners and _two_weight_quadratic(
                n, size, weights[0], weights[1]
            ):
                continue
            dual = dual_summary(code, enum)
            if dual.b1 or dual.b2:
                continue
        report = classify(code, dual)
        gray = gray_parameters(code)
        assert gray[2] is not None
        hits.append(
            SearchHit(code, report, gray, optimality_check(gray[0], gray[1], gray[2]))
        )
    hits.sort(key=lambda h: (h.code.shape.alpha, h.code.shape.beta, h.code.words))
    return hits


# The four two-word codes that survive the one-weight formally-self-dual
# screen: (shape, codeword set) pairs.
_EXPECTED_FSD_SURVIVORS: tuple[tuple[AmbientShape, frozenset[int]], ...] = (
    (AmbientShape(2, 0), frozenset({0, 0b11})),  # (1,1|), weight 2
    (AmbientShape(0, 1), frozenset({0, 2})),  # (|u), weight 2
    (AmbientShape(2, 0), frozenset({0, 0b01})),  # (0,1|), weight 1
    (AmbientShape(2, 0), frozenset({0, 0b10})),  # (1,0|), weight 1
)


@dataclass(frozen=True)
class FsdSurveyReport:
    """Outcome of the exhaustive one-weight formally-self-dual screen."""

    max_alpha: int
    max_beta: int
    max_rows: int
    codes_examined: int
    survivors: tuple[AdditiveCode, ...]
    expected: tuple[AdditiveCode, ...]

    @property
    def matches(self) -> bool:
        return set(self.survivors) == set(self.expected)


def verify_fsd_classification(
    max_alpha: int, max_beta: int, max_rows: int = 3
) -> FsdSurveyReport:
    """Exhaustively confirm which codes are one-weight and formally self-dual.

    Scans every code with alpha <= max_alpha, beta <= max_beta and up to
    ``max_rows`` generators.  The survivor list must be exactly the four
    known two-word codes (those with shapes inside the range); anything
    else raises ClassificationViolation.
    """
    if max_alpha > 6 or max_beta > 3:
        raise ValueError("screen is capped at max_alpha = 6, max_beta = 3")
    if max_alpha < 0 or max_beta < 0 or max_alpha + max_beta < 1:
        raise ValueError("empty shape range")
    survivors: list[AdditiveCode] = []
    examined = 0
    for alpha in range(max_alpha + 1):
        for beta in range(max_beta + 1):
            if alpha + beta < 1:
                continue
            shape = AmbientShape(alpha, beta)
            for code in _codes_by_closure(shape, max_rows):
                examined += 1
                size = code.cardinality
                if size < 2 or size * size != shape.ambient_size:
                    continue
                enum = lee_enumerator(code)
                if len(enum.nonzero_weights()) != 1:
                    continue
                if is_formally_self_dual(code, dual_summary(code, enum)):
                    survivors.append(code)
    survivors.sort(key=lambda c: (c.shape.alpha, c.shape.beta, c.words))
    expected = [
        AdditiveCode(shape, _extract_generators(shape, tuple(sorted(words))),
                     tuple(sorted(words)))
        for shape, words in _EXPECTED_FSD_SURVIVORS
        if shape.alpha <= max_alpha and shape.beta <= max_beta
    ]
    expected.sort(key=lambda c: (c.shape.alpha, c.shape.beta, c.words))
    report = FsdSurveyReport(
        max_alpha,
        max_beta,
        max_rows,
        examined,
        tuple(survivors),
        tuple(expected),
    )
    if not report.matches:
        unexpected = [c for c in survivors if c not in set(expected)]
        missing = [c for c in expected if c not in set(survivors)]
        raise ClassificationViolation(
            f"unexpected survivors {unexpected}, missing {missing}"
        )
    return report


# Best known minimum distances for the binary [n, k] parameters the
# bundled reference codes claim to meet.
OPTIMALITY_TABLE: dict[tuple[int, int], int] = {
    (9, 2): 6,
    (14, 3): 8,
    (16, 4): 8,
    (14, 4): 7,
    (14, 10): 3,
    (24, 5): 12,
    (24, 19): 3,
    (16, 5): 8,
    (16, 11): 4,
}


def optimality_check(n: int, k: int, d: int) -> str:
    """'optimal', 'suboptimal' or 'unknown' against the embedded table."""
    best = OPTIMALITY_TABLE.get((n, k))
    if best is None:
        return "unknown"
    return "optimal" if d >= best else "suboptimal"
