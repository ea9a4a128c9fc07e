"""Exact algebra substrate.

Two value types carry every computation in this package:

* ``CycElement`` - an integer combination of the L-th roots of unity, stored
  in the group ring Z[x]/(x^L - 1) as a length-L coefficient vector.
  Elements stay in that basis during arithmetic and are reduced modulo the
  L-th cyclotomic polynomial only for equality tests and integer extraction.
* ``MultiPoly`` - a sparse multivariate polynomial with integer (or
  CycElement) coefficients, keyed by exponent vectors.

There is no floating point anywhere; character sums, enumerators, and
cardinalities are all exact.
"""

from __future__ import annotations

import functools
import re
from math import lcm

from .numtheory import divisors


class IntegralityError(Exception):
    """A quantity that must be integral by construction is not.

    These are bug sentinels (or, for MacWilliams verification, the symptom
    of a rank-deficient parity-check matrix), never ordinary data errors.
    """


class NotAnIntegerError(IntegralityError):
    """A cyclotomic element expected to be a rational integer is not one."""


class NonDivisibleError(IntegralityError):
    """Exact division was requested by a non-dividing integer."""


# ---------------------------------------------------------------------------
# dense univariate helpers (coefficient tuples, constant term first)


def _upoly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return tuple(out)


def _upoly_divmod(num, den):
    """Quotient and remainder by a monic divisor, over the integers."""
    deg_den = len(den) - 1
    quo = [0] * max(len(num) - deg_den, 1)
    rem = list(num)
    for i in range(len(rem) - 1, deg_den - 1, -1):
        c = rem[i]
        if c:
            quo[i - deg_den] = c
            rem[i] = 0
            for k in range(deg_den):
                if den[k]:
                    rem[i - deg_den + k] -= c * den[k]
    return tuple(quo), tuple(rem[:deg_den])


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Coefficients of the cyclotomic polynomial Phi_order, constant first.

    Computed by exactly dividing x^order - 1 by the product of Phi_d over
    the proper divisors d.  Memoized; the fill is idempotent, so concurrent
    readers are safe.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if order == 1:
        return (-1, 1)
    num = (-1,) + (0,) * (order - 1) + (1,)
    den = (1,)
    for d in divisors(order):
        if d < order:
            den = _upoly_mul(den, cyclotomic_polynomial(d))
    quo, rem = _upoly_divmod(num, den)
    if any(rem):
        raise ArithmeticError(f"x^{order} - 1 not divisible by its cyclotomic factors")
    return quo


class CycElement:
    """An integer combination of the order-th roots of unity.

    ``coeffs[j]`` is the coefficient of zeta^j, where zeta = e(1/order).
    Mixed-order arithmetic embeds both operands into their lcm order, so
    callers never manage embeddings by hand.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        coeffs = tuple(coeffs)
        if len(coeffs) != order:
            raise ValueError(f"need {order} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    # -- construction helpers

    @staticmethod
    def integer(value: int, order: int = 1) -> "CycElement":
        return CycElement(order, (value,) + (0,) * (order - 1))

    def embed(self, order: int) -> "CycElement":
        """The same cyclotomic integer represented at a multiple order."""
        if order % self.order:
            raise ValueError(f"{order} is not a multiple of order {self.order}")
        if order == self.order:
            return self
        stride = order // self.order
        out = [0] * order
        for j, c in enumerate(self.coeffs):
            if c:
                out[j * stride] = c
        return CycElement(order, out)

    def _pair(self, other):
        if isinstance(other, int):
            other = CycElement.integer(other)
        elif not isinstance(other, CycElement):
            return None
        common = lcm(self.order, other.order)
        return self.embed(common), other.embed(common)

    # -- ring operations

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycElement(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycElement(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycElement(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 1:
                return self
            return CycElement(self.order, tuple(other * c for c in self.coeffs))
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = a.order
        out = [0] * n
        bn = [(j, c) for j, c in enumerate(b.coeffs) if c]
        for i, ca in enumerate(a.coeffs):
            if ca:
                for j, cb in bn:
                    out[(i + j) % n] += ca * cb
        return CycElement(n, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not defined in the group ring")
        result = CycElement.integer(1, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- reduction and predicates

    def _reduced(self) -> tuple[int, ...]:
        """Coordinates in the power basis of Z[zeta], i.e. the remainder of
        the representative modulo Phi_order."""
        phi = cyclotomic_polynomial(self.order)
        deg = len(phi) - 1
        rem = list(self.coeffs)
        for i in range(len(rem) - 1, deg - 1, -1):
            c = rem[i]
            if c:
                rem[i] = 0
                for k in range(deg):
                    if phi[k]:
                        rem[i - deg + k] -= c * phi[k]
        return tuple(rem[:deg])

    def is_zero(self) -> bool:
        c = self.coeffs
        if not any(c):
            return True
        # all-equal vectors are multiples of the full root sum, which vanishes
        if self.order > 1 and all(v == c[0] for v in c):
            return True
        return not any(self._reduced())

    def is_integer(self) -> bool:
        return not any(self._reduced()[1:])

    def to_integer(self) -> int:
        """The rational-integer value of this element.

        Raises NotAnIntegerError when the reduced form has a nonzero
        non-constant coordinate; by the theorems backing every caller this
        indicates an implementation bug, not bad data.
        """
        rem = self._reduced()
        if any(rem[1:]):
            raise NotAnIntegerError(
                f"element of order {self.order} is not a rational integer: {self!r}"
            )
        return rem[0] if rem else 0

    def __eq__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycElement(
            a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs))
        ).is_zero()

    def __repr__(self):
        nz = [(j, c) for j, c in enumerate(self.coeffs) if c]
        if not nz:
            return f"CycElement({self.order}, 0)"
        body = " + ".join(f"{c}*z^{j}" if j else str(c) for j, c in nz)
        return f"CycElement({self.order}, {body})"


def cyc_root(order: int, numerator: int = 1) -> CycElement:
    """The root of unity e(numerator / order) as a CycElement."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    idx = numerator % order
    return CycElement(order, tuple(1 if j == idx else 0 for j in range(order)))


def _coeff_is_zero(coeff) -> bool:
    if isinstance(coeff, CycElement):
        return coeff.is_zero()
    return coeff == 0


def _term_sort_key(exps):
    # canonical order: ascending total degree, ties by descending lex
    return (sum(exps), tuple(-e for e in exps))


_FACTOR_RE = re.compile(r"([A-Za-z]\w*)(?:\^(\d+))?\Z")
_COEFF_RE = re.compile(r"-?\d+\Z")


class MultiPoly:
    """Sparse multivariate polynomial with exact coefficients.

    Terms map exponent tuples (one non-negative entry per declared
    variable) to nonzero integer or CycElement coefficients.  Instances are
    treated as immutable; every operation returns a fresh polynomial.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None) -> None:
        variables = tuple(variables)
        width = len(variables)
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != width:
                    raise ValueError(
                        f"exponent vector {exps} does not match {width} variables"
                    )
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if not _coeff_is_zero(coeff):
                    clean[exps] = coeff
        self.variables = variables
        self.terms = clean

    # -- constructors

    @classmethod
    def zero(cls, variables) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables, value) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def monomial(cls, variables, exps, coeff=1) -> "MultiPoly":
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def variable(cls, variables, name) -> "MultiPoly":
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise ValueError(f"{name!r} is not among {variables}")
        return cls(variables, {exps: 1})

    # -- alignment over variable unions

    def _expand_to(self, variables) -> dict:
        if variables == self.variables:
            return self.terms
        pos = []
        for v in self.variables:
            pos.append(variables.index(v))
        width = len(variables)
        out = {}
        for exps, coeff in self.terms.items():
            key = [0] * width
            for p, e in zip(pos, exps):
                key[p] = e
            out[tuple(key)] = coeff
        return out

    @staticmethod
    def _union_vars(a, b):
        if a.variables == b.variables:
            return a.variables
        merged = list(a.variables)
        for v in b.variables:
            if v not in merged:
                merged.append(v)
        return tuple(merged)

    # -- ring operations

    def __add__(self, other):
        if isinstance(other, (int, CycElement)):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        variables = self._union_vars(self, other)
        terms = dict(self._expand_to(variables))
        for exps, coeff in other._expand_to(variables).items():
            cur = terms.get(exps)
            terms[exps] = coeff if cur is None else cur + coeff
        return MultiPoly(variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, CycElement)):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, CycElement)):
            if _coeff_is_zero(other):
                return MultiPoly.zero(self.variables)
            return MultiPoly(
                self.variables, {e: c * other for e, c in self.terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        variables = self._union_vars(self, other)
        left = self._expand_to(variables)
        right = other._expand_to(variables)
        terms: dict = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                cur = terms.get(key)
                terms[key] = prod if cur is None else cur + prod
        return MultiPoly(variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative polynomial powers are not supported")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def divide_exact(self, k: int) -> "MultiPoly":
        """Coefficient-wise division by k, which must divide exactly.

        CycElement coefficients are divided in the power basis of Z[zeta]
        (an integral basis, so exactness there is exactness in the ring).
        """
        if k == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        out = {}
        for exps, coeff in self.terms.items():
            if isinstance(coeff, CycElement):
                rem = coeff._reduced()
                if any(c % k for c in rem):
                    raise NonDivisibleError(
                        f"coefficient {coeff!r} of {exps} not divisible by {k}"
                    )
                reduced = tuple(c // k for c in rem)
                out[exps] = CycElement(
                    coeff.order, reduced + (0,) * (coeff.order - len(reduced))
                )
            else:
                q, r = divmod(coeff, k)
                if r:
                    raise NonDivisibleError(
                        f"coefficient {coeff} of {exps} not divisible by {k}"
                    )
                out[exps] = q
        return MultiPoly(self.variables, out)

    # -- substitution and evaluation

    def substitute(self, mapping: dict, variables=None) -> "MultiPoly":
        """Replace variables by integers, CycElements, or other polynomials.

        The result's variable list defaults to the unmapped variables
        followed by any new variables brought in by polynomial values.
        """
        unknown = set(mapping) - set(self.variables)
        if unknown:
            raise ValueError(f"substituting unknown variables: {sorted(unknown)}")
        if variables is None:
            merged = [v for v in self.variables if v not in mapping]
            for v in self.variables:
                value = mapping.get(v)
                if isinstance(value, MultiPoly):
                    for w in value.variables:
                        if w not in merged:
                            merged.append(w)
            variables = tuple(merged)
        else:
            variables = tuple(variables)
        pos = {v: i for i, v in enumerate(variables)}
        width = len(variables)
        power_memo: dict = {}
        acc: dict = {}
        for exps, coeff in self.terms.items():
            kept = [0] * width
            scalar = coeff
            poly_factor = None
            for var, e in zip(self.variables, exps):
                if not e:
                    continue
                if var in mapping:
                    value = mapping[var]
                    if isinstance(value, MultiPoly):
                        key = (var, e)
                        power = power_memo.get(key)
                        if power is None:
                            power = MultiPoly(variables, value._expand_to(variables)) ** e
                            power_memo[key] = power
                        poly_factor = power if poly_factor is None else poly_factor * power
                    else:
                        scalar = scalar * value**e
                else:
                    kept[pos[var]] = e
            piece = MultiPoly(variables, {tuple(kept): scalar})
            if poly_factor is not None:
                piece = piece * poly_factor
            for key, c in piece.terms.items():
                cur = acc.get(key)
                acc[key] = c if cur is None else cur + c
        return MultiPoly(variables, acc)

    def evaluate(self, values: dict):
        """Fully evaluate; every variable must be bound to an int or CycElement."""
        missing = set(self.variables) - set(values)
        if missing:
            raise ValueError(f"unbound variables: {sorted(missing)}")
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for var, e in zip(self.variables, exps):
                if e:
                    term = term * values[var] ** e
            total = total + term
        return total

    def map_coefficients(self, fn) -> "MultiPoly":
        return MultiPoly(self.variables, {e: fn(c) for e, c in self.terms.items()})

    # -- canonical form

    def sorted_terms(self) -> list:
        """Terms in canonical order: ascending total degree, then descending
        lexicographic exponent (the order used by the text format)."""
        return [(e, self.terms[e]) for e in sorted(self.terms, key=_term_sort_key)]

    def __eq__(self, other):
        if isinstance(other, (int, CycElement)):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        variables = self._union_vars(self, other)
        return self._expand_to(variables) == other._expand_to(variables)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for var, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(var)
                elif e:
                    factors.append(f"{var}^{e}")
            if isinstance(coeff, CycElement):
                head = f"({coeff!r})"
            elif coeff == 1 and factors:
                head = None
            else:
                head = str(coeff)
            parts.append("*".join(([head] if head else []) + factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, '{self}')"

    @classmethod
    def parse(cls, text: str, variables) -> "MultiPoly":
        """Inverse of str() for integer-coefficient polynomials."""
        variables = tuple(variables)
        pos = {v: i for i, v in enumerate(variables)}
        text = text.strip()
        if text == "0":
            return cls.zero(variables)
        terms: dict = {}
        for chunk in text.split(" + "):
            coeff = 1
            exps = [0] * len(variables)
            for factor in chunk.strip().split("*"):
                factor = factor.strip()
                if _COEFF_RE.match(factor):
                    coeff *= int(factor)
                    continue
                m = _FACTOR_RE.match(factor)
                if not m or m.group(1) not in pos:
                    raise ValueError(f"cannot parse polynomial factor {factor!r}")
                exps[pos[m.group(1)]] += int(m.group(2) or 1)
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coeff
        return cls(variables, terms)
