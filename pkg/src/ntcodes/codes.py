"""Codeword statistics, congruence code specifications, and code families.

A word is a plain tuple of symbols drawn from [0, r).  A CodeSpec pins the
length n, the alphabet size r, and a list of constraints, each asking a
statistic of the word to fall in a fixed residue class.  Membership testing
and exhaustive (budgeted) codeword generation live here, together with
constructors for the classic congruence-defined code families.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

Word = tuple

DEFAULT_BUDGET = 10_000_000

STAT_KINDS = (
    "omega",
    "sigma",
    "gamma_gt",
    "gamma_ge",
    "lambda_lt",
    "lambda_le",
    "delta",
    "linear",
    "custom",
)

#: gamma-variant statistic kind keyed by the comparison it counts
VARIANT_STATS = {
    ">": "gamma_gt",
    ">=": "gamma_ge",
    "<": "lambda_lt",
    "<=": "lambda_le",
}


class BudgetExceededError(Exception):
    """Exhaustive enumeration would visit more words than the budget allows."""


@dataclass(frozen=True)
class Statistic:
    """A named codeword statistic; `linear` carries its weight vector and
    `custom` an arbitrary callable (brute-force paths only)."""

    kind: str
    h: Optional[tuple] = None
    fn: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in STAT_KINDS:
            raise ValueError(f"unknown statistic kind {self.kind!r}")
        if self.kind == "linear":
            if self.h is None:
                raise ValueError("linear statistic needs a weight vector")
            object.__setattr__(self, "h", tuple(int(x) for x in self.h))
        elif self.h is not None:
            raise ValueError(f"{self.kind} statistic takes no weight vector")
        if self.kind == "custom" and self.fn is None:
            raise ValueError("custom statistic needs a callable")


OMEGA = Statistic("omega")
SIGMA = Statistic("sigma")
GAMMA_GT = Statistic("gamma_gt")
GAMMA_GE = Statistic("gamma_ge")
LAMBDA_LT = Statistic("lambda_lt")
LAMBDA_LE = Statistic("lambda_le")
DELTA = Statistic("delta")


def linear(h) -> Statistic:
    return Statistic("linear", h=tuple(h))


def custom(fn) -> Statistic:
    return Statistic("custom", fn=fn)


def evaluate_statistic(stat: Statistic, word) -> int:
    """Exact value of a statistic on a word; the empty word gives 0."""
    kind = stat.kind
    n = len(word)
    if kind == "omega":
        return sum(i * x for i, x in enumerate(word, start=1))
    if kind == "sigma":
        return sum(word)
    if kind == "gamma_gt":
        return sum(i for i in range(1, n) if word[i - 1] > word[i])
    if kind == "gamma_ge":
        return sum(i for i in range(1, n) if word[i - 1] >= word[i])
    if kind == "lambda_lt":
        return sum(i for i in range(1, n) if word[i - 1] < word[i])
    if kind == "lambda_le":
        return sum(i for i in range(1, n) if word[i - 1] <= word[i])
    if kind == "delta":
        return sum(1 for i in range(1, n) if word[i - 1] > word[i])
    if kind == "linear":
        if len(stat.h) != n:
            raise ValueError(f"weight vector of length {len(stat.h)} on a word of length {n}")
        return sum(h * x for h, x in zip(stat.h, word))
    return stat.fn(word)


def linear_weights(stat: Statistic, n: int):
    """Weight vector when the statistic is a linear form on words of
    length n, else None."""
    if stat.kind == "omega":
        return tuple(range(1, n + 1))
    if stat.kind == "sigma":
        return (1,) * n
    if stat.kind == "linear":
        if len(stat.h) != n:
            raise ValueError(f"weight vector of length {len(stat.h)} for length-{n} words")
        return stat.h
    return None


def type_vector(word, r: int) -> tuple[int, ...]:
    """Symbol counts tau_j(word) for j in [0, r)."""
    tau = [0] * r
    for x in word:
        tau[x] += 1
    return tuple(tau)


@dataclass(frozen=True)
class Constraint:
    stat: Statistic
    m: int
    a: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"modulus must be positive, got {self.m}")
        object.__setattr__(self, "a", self.a % self.m)


@dataclass(frozen=True)
class CodeSpec:
    """A simultaneous-congruence code over [0, r)^n."""

    n: int
    r: int
    constraints: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"length must be non-negative, got {self.n}")
        if self.r < 1:
            raise ValueError(f"alphabet size must be positive, got {self.r}")
        cons = tuple(
            c if isinstance(c, Constraint) else Constraint(*c) for c in self.constraints
        )
        if not cons:
            raise ValueError("a code spec needs at least one constraint")
        object.__setattr__(self, "constraints", cons)

    @property
    def s(self) -> int:
        return len(self.constraints)


def _satisfies(spec: CodeSpec, word) -> bool:
    return all(
        (evaluate_statistic(c.stat, word) - c.a) % c.m == 0 for c in spec.constraints
    )


def is_member(spec: CodeSpec, word) -> bool:
    """Whether the word satisfies every congruence of the spec."""
    if len(word) != spec.n:
        raise ValueError(f"word of length {len(word)} against a length-{spec.n} spec")
    if any(not 0 <= x < spec.r for x in word):
        raise ValueError(f"word {word} leaves the alphabet [0, {spec.r})")
    return _satisfies(spec, word)


def enumerate_codewords(spec: CodeSpec, budget: int | None = None):
    """Generate the codewords of the spec in lexicographic order.

    Refuses to scan more than `budget` words (default 10**7).
    """
    limit = DEFAULT_BUDGET if budget is None else budget
    total = spec.r**spec.n
    if total > limit:
        raise BudgetExceededError(
            f"enumerating {spec.r}^{spec.n} = {total} words exceeds the budget {limit}"
        )

    def generate():
        for word in itertools.product(range(spec.r), repeat=spec.n):
            if _satisfies(spec, word):
                yield word

    return generate()


def weight_sequence(t: int, r: int, length: int) -> list[int]:
    """Recursive weight sequence g_i = 1 + (r-1) * (sum of the previous t
    terms), used by the bounded-run congruence code families."""
    if t < 1 or r < 1 or length < 1:
        raise ValueError("t, r, and length must all be positive")
    g: list[int] = []
    for i in range(length):
        g.append(1 + (r - 1) * sum(g[max(i - t, 0) : i]))
    return g


# ---------------------------------------------------------------------------
# code families


def _check_range(value, bound, name):
    if not 0 <= value < bound:
        raise ValueError(f"{name} must lie in [0, {bound}), got {value}")


def binary_vt(n: int, a: int = 0) -> CodeSpec:
    """Binary single insertion/deletion correcting code: omega mod n+1."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_range(a, n + 1, "a")
    return CodeSpec(n, 2, ((OMEGA, n + 1, a),))


def levenshtein(n: int, m: int, a: int = 0) -> CodeSpec:
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    _check_range(a, m, "a")
    return CodeSpec(n, 2, ((OMEGA, m, a),))


def tenengolts(n: int, r: int, a1: int, a2: int, variant: str = ">") -> CodeSpec:
    """r-ary single insertion/deletion correcting code: the descent
    statistic mod n and the symbol sum mod r.

    `variant` picks the comparison in the descent statistic; the plain code
    uses ">".
    """
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    _check_range(a1, n, "a1")
    _check_range(a2, r, "a2")
    if variant not in VARIANT_STATS:
        raise ValueError(f"variant must be one of {sorted(VARIANT_STATS)}, got {variant!r}")
    stat = Statistic(VARIANT_STATS[variant])
    return CodeSpec(n, r, ((stat, n, a1), (SIGMA, r, a2)))


def shifted_vt(n: int, m: int, a: int, parity: int) -> CodeSpec:
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    _check_range(a, m, "a")
    _check_range(parity, 2, "parity")
    return CodeSpec(n, 2, ((OMEGA, m, a), (SIGMA, 2, parity)))


def han_vinck_morita(n: int, a: int, b: int) -> CodeSpec:
    if n < 1:
        raise ValueError("n must be positive")
    _check_range(a, n + 1, "a")
    _check_range(b, 3, "b")
    return CodeSpec(n, 2, ((OMEGA, n + 1, a), (SIGMA, 3, b)))


def nonbinary_svt(n: int, r: int, m: int, a: int, b: int, c: int) -> CodeSpec:
    if n < 1 or r < 1 or m < 1:
        raise ValueError("n, r, and m must be positive")
    _check_range(a, m, "a")
    _check_range(b, 2, "b")
    _check_range(c, r, "c")
    return CodeSpec(n, r, ((GAMMA_GT, m, a), (DELTA, 2, b), (SIGMA, r, c)))


def helberg(n: int, t: int, a: int) -> CodeSpec:
    """Binary t-insertion/deletion code with recursively defined weights."""
    return le_nguyen(n, 2, t, a)


def le_nguyen(n: int, r: int, t: int, a: int) -> CodeSpec:
    if n < 1 or r < 1 or t < 1:
        raise ValueError("n, r, and t must be positive")
    g = weight_sequence(t, r, n + 1)
    m = g[n]
    _check_range(a, m, "a")
    return CodeSpec(n, r, ((linear(g[:n]), m, a),))


def ternary_integer(n: int, a: int) -> CodeSpec:
    """Ternary code with weights 2^i - 1 modulo 2^(n+1) + 1."""
    if n < 1:
        raise ValueError("n must be positive")
    m = 2 ** (n + 1) + 1
    _check_range(a, m, "a")
    return CodeSpec(n, 3, ((linear(tuple(2**i - 1 for i in range(1, n + 1))), m, a),))


def odd_coefficient(n: int, m: int, a: int) -> CodeSpec:
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    _check_range(a, 2 * m, "a")
    return CodeSpec(n, 2, ((linear(tuple(2 * i - 1 for i in range(1, n + 1))), 2 * m, a),))


def an_code(p: int, a: int) -> CodeSpec:
    """Binary code of length 2^(p-2) with consecutive weights modulo a prime p."""
    if p < 3:
        raise ValueError("p must be a prime of at least 3")
    if any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p must be prime, got {p}")
    n = 2 ** (p - 2)
    _check_range(a, p, "a")
    return CodeSpec(n, 2, ((linear(tuple(range(1, n + 1))), p, a),))


def exponential_coefficient(n: int, m: int, a: int) -> CodeSpec:
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    modulus = 2**m + 1
    _check_range(a, modulus, "a")
    return CodeSpec(n, 2, ((linear(tuple(2**i for i in range(n))), modulus, a),))


def lc(n: int, m: int, r: int, h, a: int) -> CodeSpec:
    """r-ary single linear congruence code with free weight vector."""
    if n < 1 or m < 1 or r < 1:
        raise ValueError("n, m, and r must be positive")
    h = tuple(int(x) for x in h)
    if len(h) != n:
        raise ValueError(f"weight vector of length {len(h)} for n={n}")
    _check_range(a, m, "a")
    return CodeSpec(n, r, ((linear(h), m, a),))


def blc(n: int, m: int, h, a: int) -> CodeSpec:
    return lc(n, m, 2, h, a)


def linear_code(r: int, rows) -> CodeSpec:
    """The code over Z_r with parity-check matrix `rows`: one congruence
    ``row . x = 0 (mod r)`` per row, entries reduced mod r."""
    if r < 1:
        raise ValueError("r must be positive")
    rows = [tuple(int(x) % r for x in row) for row in rows]
    if not rows:
        raise ValueError("the parity-check matrix needs at least one row")
    n = len(rows[0])
    if any(len(row) != n for row in rows):
        raise ValueError("parity-check rows have inconsistent lengths")
    return CodeSpec(n, r, tuple((linear(row), r, 0) for row in rows))


FAMILIES = {
    "binary_vt": binary_vt,
    "levenshtein": levenshtein,
    "tenengolts": tenengolts,
    "shifted_vt": shifted_vt,
    "han_vinck_morita": han_vinck_morita,
    "nonbinary_svt": nonbinary_svt,
    "helberg": helberg,
    "le_nguyen": le_nguyen,
    "ternary_integer": ternary_integer,
    "odd_coefficient": odd_coefficient,
    "an_code": an_code,
    "exponential_coefficient": exponential_coefficient,
    "lc": lc,
    "blc": blc,
    "linear_code": linear_code,
}


def make_family(name: str, **params) -> CodeSpec:
    """Construct a named code family; see FAMILIES for the catalogue."""
    try:
        builder = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown code family {name!r}") from None
    return builder(**params)


# ---------------------------------------------------------------------------
# JSON wire format


def _stat_to_json(stat: Statistic):
    if stat.kind == "linear":
        return {"linear": list(stat.h)}
    if stat.kind == "custom":
        raise ValueError("custom statistics have no JSON form")
    return stat.kind


def _stat_from_json(obj) -> Statistic:
    if isinstance(obj, str):
        return Statistic(obj)
    if isinstance(obj, dict) and set(obj) == {"linear"}:
        return linear(obj["linear"])
    raise ValueError(f"cannot decode statistic {obj!r}")


def spec_to_dict(spec: CodeSpec) -> dict:
    return {
        "n": spec.n,
        "r": spec.r,
        "constraints": [
            {"stat": _stat_to_json(c.stat), "m": c.m, "a": c.a} for c in spec.constraints
        ],
    }


def spec_from_dict(data: dict) -> CodeSpec:
    constraints = tuple(
        Constraint(_stat_from_json(c["stat"]), int(c["m"]), int(c["a"]))
        for c in data["constraints"]
    )
    return CodeSpec(int(data["n"]), int(data["r"]), constraints)
