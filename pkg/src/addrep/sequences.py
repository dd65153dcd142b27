"""Declaring, materializing, validating, and perturbing integer sequences.

A sequence prefix is a plain ``list[int]``, strictly increasing and
nonnegative, holding the first k terms of an infinite sequence
(``terms[i-1]`` is the i-th term, counting from 1).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction

MAX_SUM = 1 << 64  # doubled largest term must stay below this

_MASK64 = (1 << 64) - 1


class SequenceError(ValueError):
    """Base class for sequence construction and validation failures."""


class NotStrictlyIncreasing(SequenceError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"term at position {index} does not exceed its predecessor")


class NegativeTerm(SequenceError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"term at position {index} is negative")


class NonIncreasingPolynomial(SequenceError):
    pass


class MalformedFile(SequenceError):
    pass


class FileTooShort(SequenceError):
    def __init__(self, path: str, have: int, want: int):
        self.have = have
        self.want = want
        super().__init__(f"{path}: has {have} terms, need {want}")


class TermOverflow(SequenceError):
    pass


class SpecParseError(SequenceError):
    pass


@dataclass(frozen=True)
class GrowthSpec:
    """Bound-shaping function g(k) > 0 used by the perturbation generator.

    Forms: ``const`` is g(k) = c; ``pow`` is g(k) = c * k**(-alpha);
    ``invlog`` is g(k) = c / ln(k + 1).  With alpha > 0, ``pow`` and
    ``invlog`` vanish as k grows.  c = 0 is accepted and yields the
    unperturbed sequence.
    """

    form: str
    c: Fraction
    alpha: Fraction = Fraction(0)

    def __post_init__(self):
        if self.form not in ("const", "pow", "invlog"):
            raise SpecParseError(f"unknown growth form {self.form!r}")
        if self.c < 0:
            raise SpecParseError("growth constant must be >= 0")
        if self.alpha < 0:
            raise SpecParseError("growth exponent must be >= 0")

    def value(self, k: int) -> float:
        """g(k) evaluated in float64; only ever used to shape noise bounds."""
        if self.form == "const":
            return float(self.c)
        if self.form == "pow":
            return float(self.c) * float(k) ** (-float(self.alpha))
        return float(self.c) / math.log(k + 1)


@dataclass(frozen=True)
class SequenceSpec:
    """Pure-data description of an infinite strictly increasing sequence.

    Materializing the same spec twice yields identical prefixes, and
    materialize(spec, k) is always a prefix of materialize(spec, k + 1).
    """

    kind: str  # 'squares' | 'poly' | 'file' | 'perturb'
    coeffs: tuple[int, int, int] | None = None
    path: str | None = None
    growth: GrowthSpec | None = None
    seed: int | None = None

    @classmethod
    def squares(cls) -> SequenceSpec:
        return cls(kind="squares")

    @classmethod
    def polynomial(cls, c2: int, c1: int, c0: int) -> SequenceSpec:
        return cls(kind="poly", coeffs=(c2, c1, c0))

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> SequenceSpec:
        return cls(kind="file", path=os.fspath(path))

    @classmethod
    def perturbed_squares(cls, growth: GrowthSpec, seed: int) -> SequenceSpec:
        return cls(kind="perturb", growth=growth, seed=seed & _MASK64)


@dataclass
class PerturbationReport:
    """What the perturbation generator actually did.

    ``requested_bounds[n-1]`` is the bound f(n) the n-th noise term was
    drawn under; ``clamp_count`` is how many terms were moved to restore
    strict monotonicity; ``bound_violations`` lists (1-indexed) positions
    where clamping pushed the final term outside its bound.
    """

    requested_bounds: list[float] = field(default_factory=list)
    clamp_count: int = 0
    bound_violations: list[int] = field(default_factory=list)


class SplitMix64:
    """splitmix64 stream; fixed constants, reproducible across languages."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, width: int) -> int:
        """Uniform draw in [0, width): modulo reduction, bias region rejected."""
        limit = MAX_SUM - (MAX_SUM % width)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % width


def validate(terms: list[int]) -> None:
    """Raise unless terms are nonnegative and strictly increasing.

    The empty prefix is vacuously valid.
    """
    prev = -1
    for i, t in enumerate(terms, start=1):
        if t < 0:
            raise NegativeTerm(i)
        if t <= prev:
            raise NotStrictlyIncreasing(i)
        prev = t


def _materialize_polynomial(coeffs: tuple[int, int, int], k: int) -> list[int]:
    c2, c1, c0 = coeffs
    # shape check: strictly increasing from n = 1 onward
    if c2 > 0:
        ok = 3 * c2 + c1 > 0  # smallest forward difference, at n = 1
    elif c2 == 0:
        ok = c1 > 0 and c0 >= -c1
    else:
        ok = False
    if not ok:
        raise NonIncreasingPolynomial(f"{c2}*n^2 + {c1}*n + {c0} is not strictly increasing on n >= 1")
    terms = [c2 * n * n + c1 * n + c0 for n in range(1, k + 1)]
    if terms[0] < 0:
        raise NegativeTerm(1)
    return terms


def _load_file(path: str, k: int) -> list[int]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise MalformedFile(f"{path}: {exc}") from exc
    terms: list[int] = []
    prev = -1
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            value = int(line, 10)
        except ValueError:
            raise MalformedFile(f"{path}:{lineno}: not an integer: {line!r}") from None
        if value < 0:
            raise MalformedFile(f"{path}:{lineno}: negative value {value}")
        if value <= prev:
            raise MalformedFile(f"{path}:{lineno}: not strictly increasing at {value}")
        terms.append(value)
        prev = value
    if len(terms) < k:
        raise FileTooShort(path, len(terms), k)
    return terms[:k]


def perturb_squares(
    growth: GrowthSpec,
    seed: int,
    k: int,
    u_of_squares: list[int],
) -> tuple[list[int], PerturbationReport]:
    """Build b_n = n^2 + e_n with |e_n| <= floor(f(n)), f(n) = u(n) * g(n).

    ``u_of_squares`` must hold the running representation maxima of the
    squares sequence for at least k horizons (``u_of_squares[n-1]`` = u(n)).
    One splitmix64 draw per term (more only when the bias region is
    rejected); monotonicity is then restored by clamping upward, and every
    adjustment is recorded in the report.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(u_of_squares) < k:
        raise ValueError(f"need at least {k} u-values, got {len(u_of_squares)}")
    rng = SplitMix64(seed)
    report = PerturbationReport()
    terms: list[int] = []
    prev = None
    for n in range(1, k + 1):
        f = u_of_squares[n - 1] * growth.value(n)
        report.requested_bounds.append(f)
        half = int(math.floor(f))
        e = rng.below(2 * half + 1) - half
        b = n * n + e
        clamped = max(b, 0) if prev is None else max(b, prev + 1)
        if clamped != b:
            report.clamp_count += 1
            if abs(clamped - n * n) > f:
                report.bound_violations.append(n)
        terms.append(clamped)
        prev = clamped
    return terms, report


_squares_u_cache: list[int] = []


def _squares_u(k: int) -> list[int]:
    # running maxima are prefix-coherent, so one growing cache suffices
    if len(_squares_u_cache) < k:
        from addrep.repfunc import u_trace

        _squares_u_cache[:] = u_trace(SequenceSpec.squares(), k)
    return _squares_u_cache[:k]


def materialize(spec: SequenceSpec, k: int) -> list[int]:
    """First k terms of the sequence described by spec.

    Deterministic, including the perturbed kind for equal seeds, and
    prefix-coherent in k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if spec.kind == "squares":
        terms = [n * n for n in range(1, k + 1)]
    elif spec.kind == "poly":
        terms = _materialize_polynomial(spec.coeffs, k)
    elif spec.kind == "file":
        terms = _load_file(spec.path, k)
    elif spec.kind == "perturb":
        terms, _ = perturb_squares(spec.growth, spec.seed, k, _squares_u(k))
    else:
        raise SpecParseError(f"unknown sequence kind {spec.kind!r}")
    validate(terms)
    if 2 * terms[-1] >= MAX_SUM:
        raise TermOverflow(f"doubled maximum term {terms[-1]} exceeds 64 bits")
    return terms


def parse_growth_spec(text: str) -> GrowthSpec:
    """Parse ``const:C``, ``pow:C,ALPHA``, or ``invlog:C`` (C, ALPHA decimal)."""
    form, _, rest = text.partition(":")
    try:
        if form == "const":
            return GrowthSpec("const", Fraction(rest))
        if form == "pow":
            c_text, _, alpha_text = rest.partition(",")
            if not alpha_text:
                raise SpecParseError(f"pow needs two parameters: {text!r}")
            return GrowthSpec("pow", Fraction(c_text), Fraction(alpha_text))
        if form == "invlog":
            return GrowthSpec("invlog", Fraction(rest))
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecParseError(f"bad growth parameter in {text!r}: {exc}") from None
    raise SpecParseError(f"unknown growth spec {text!r}")


def parse_sequence_spec(text: str) -> SequenceSpec:
    """Parse the CLI grammar: ``squares``, ``poly:C2,C1,C0``, ``file:PATH``,
    ``perturb:g=<growth>:seed=N``."""
    if text == "squares":
        return SequenceSpec.squares()
    if text.startswith("poly:"):
        parts = text[len("poly:"):].split(",")
        if len(parts) != 3:
            raise SpecParseError(f"poly needs three coefficients: {text!r}")
        try:
            c2, c1, c0 = (int(p, 10) for p in parts)
        except ValueError:
            raise SpecParseError(f"non-integer coefficient in {text!r}") from None
        return SequenceSpec.polynomial(c2, c1, c0)
    if text.startswith("file:"):
        return SequenceSpec.from_file(text[len("file:"):])
    if text.startswith("perturb:"):
        body = text[len("perturb:"):]
        if not body.startswith("g="):
            raise SpecParseError(f"perturb spec must start with g=: {text!r}")
        g_text, sep, seed_text = body[len("g="):].rpartition(":seed=")
        if not sep:
            raise SpecParseError(f"perturb spec needs :seed=N: {text!r}")
        try:
            seed = int(seed_text, 10)
        except ValueError:
            raise SpecParseError(f"bad seed in {text!r}") from None
        return SequenceSpec.perturbed_squares(parse_growth_spec(g_text), seed)
    raise SpecParseError(f"unknown sequence spec {text!r}")
