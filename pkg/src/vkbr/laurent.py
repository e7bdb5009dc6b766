"""Exact sparse Laurent polynomials over a fixed variable tuple.

Coefficients are Python integers, so arithmetic never loses precision.
Exponents live on the quarter-integer lattice: internally each exponent is
an integer count of quarter-units.  One lattice is enough for every ring
used here, namely integer exponents for the bracket variables (A, B, d) and
the rank polynomials (x, y, z), half-integers for the signed rank
polynomial, and quarter-integers for the Jones variable t.

A polynomial is immutable once built.  Binary operations require both
operands to carry the same variable tuple; there is no implicit variable
extension.  The canonical string form sorts terms lexicographically by
exponent vector, descending, prints exponent 1 bare and fractional
exponents as reduced ``^(p/q)``, e.g. ``A^3 + 3*A^2*B*d`` or
``-t^(-3/4)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping


class PolyError(ValueError):
    """Malformed polynomial construction, parse, or substitution."""


def _quarter(value: int | Fraction, what: str = "exponent") -> int:
    """Convert an exponent to quarter-units, rejecting off-lattice values."""
    q = Fraction(value) * 4
    if q.denominator != 1:
        raise PolyError(f"{what} {value} is not a multiple of 1/4")
    return int(q)


class LaurentPoly:
    """A Laurent polynomial with integer coefficients.

    Do not mutate instances; every operation returns a new polynomial.
    """

    __slots__ = ("variables", "_terms")

    def __init__(self, variables, terms=None):
        """Build a polynomial from quarter-unit exponent tuples.

        INPUT:
        variables -- tuple of variable names, fixing order and arity
        terms -- mapping {exponent tuple in quarter-units: coefficient};
                 zero coefficients are dropped

        Prefer the classmethod constructors; this raw form exists for the
        module internals.
        """
        self.variables = tuple(variables)
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            width = len(self.variables)
            for exps, coeff in terms.items():
                if len(exps) != width:
                    raise PolyError(
                        f"exponent tuple {exps} does not match {width} variables"
                    )
                if coeff:
                    key = tuple(int(q) for q in exps)
                    clean[key] = clean.get(key, 0) + int(coeff)
                    if not clean[key]:
                        del clean[key]
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "LaurentPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables, coeff: int) -> "LaurentPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): int(coeff)})

    @classmethod
    def one(cls, variables) -> "LaurentPoly":
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables, name: str) -> "LaurentPoly":
        """The polynomial consisting of the single variable `name`."""
        return cls.monomial(variables, 1, {name: 1})

    @classmethod
    def monomial(
        cls,
        variables,
        coeff: int = 1,
        exponents: Mapping[str, int | Fraction] | None = None,
        **named: int | Fraction,
    ) -> "LaurentPoly":
        """A single term, exponents given per variable name.

        Exponents may be ints or Fractions on the quarter lattice and may
        be negative.  Example::

            LaurentPoly.monomial(("A", "B", "d"), 3, A=2, B=1, d=1)
        """
        variables = tuple(variables)
        merged: dict[str, int | Fraction] = dict(exponents or {})
        merged.update(named)
        exps = [0] * len(variables)
        for name, value in merged.items():
            if name not in variables:
                raise PolyError(f"unknown variable {name!r}; have {variables}")
            exps[variables.index(name)] = _quarter(value)
        return cls(variables, {tuple(exps): int(coeff)})

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> list[tuple[tuple[Fraction, ...], int]]:
        """All (exponent vector, coefficient) pairs in canonical order."""
        return [
            (tuple(Fraction(q, 4) for q in exps), self._terms[exps])
            for exps in sorted(self._terms, reverse=True)
        ]

    def coefficient(self, **exponents: int | Fraction) -> int:
        """Coefficient of the monomial with the given exponents (0 elsewhere)."""
        exps = [0] * len(self.variables)
        for name, value in exponents.items():
            if name not in self.variables:
                raise PolyError(f"unknown variable {name!r}; have {self.variables}")
            exps[self.variables.index(name)] = _quarter(value)
        return self._terms.get(tuple(exps), 0)

    def max_exponent(self, name: str) -> Fraction:
        """Largest exponent of `name` over all terms; 0 for the zero polynomial."""
        if name not in self.variables:
            raise PolyError(f"unknown variable {name!r}; have {self.variables}")
        i = self.variables.index(name)
        if not self._terms:
            return Fraction(0)
        return Fraction(max(exps[i] for exps in self._terms), 4)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.variables, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise PolyError(
                    f"variable mismatch: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.variables, other)
        raise PolyError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return LaurentPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(
            self.variables, {exps: -c for exps, c in self._terms.items()}
        )

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return LaurentPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if not isinstance(power, int):
            raise PolyError("use substitute() for fractional powers")
        if power < 0:
            return self._fractional_power(Fraction(power))
        result = LaurentPoly.one(self.variables)
        base = self
        k = power
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _fractional_power(self, power: Fraction) -> "LaurentPoly":
        """self**power for a single-term self; power may be any quarter rational.

        Negative and fractional powers only make sense for monomials whose
        coefficient power stays an integer, e.g. coefficient 1 with any
        power, or -1 with an integer power.
        """
        if power.denominator == 1 and power >= 0:
            return self ** int(power)
        if len(self._terms) != 1:
            raise PolyError(
                f"power {power} of a {len(self._terms)}-term polynomial is not "
                "a Laurent polynomial"
            )
        (exps, coeff), = self._terms.items()
        if coeff == 1:
            new_coeff = 1
        elif coeff == -1 and power.denominator == 1:
            new_coeff = -1 if int(power) % 2 else 1
        else:
            raise PolyError(f"coefficient {coeff} has no integer power {power}")
        new_exps = []
        for q in exps:
            scaled = power * q
            if scaled.denominator != 1:
                raise PolyError(
                    f"power {power} leaves the quarter-integer exponent lattice"
                )
            new_exps.append(int(scaled))
        return LaurentPoly(self.variables, {tuple(new_exps): new_coeff})

    # -- substitution -------------------------------------------------

    def substitute(
        self,
        assignments: Mapping[str, "LaurentPoly"],
        variables,
    ) -> "LaurentPoly":
        """Evaluate with every variable replaced by a polynomial.

        INPUT:
        assignments -- {variable name: replacement polynomial}; every
                       variable of self must be assigned, and every
                       replacement must be over `variables`
        variables -- variable tuple of the result

        Replacements that are single terms may be raised to negative and
        fractional powers (when exact); multi-term replacements require
        nonnegative integer exponents.
        """
        variables = tuple(variables)
        for name in self.variables:
            if name not in assignments:
                raise PolyError(f"no assignment for variable {name!r}")
        values = {}
        for name, value in assignments.items():
            if value.variables != variables:
                raise PolyError(
                    f"assignment for {name!r} is over {value.variables}, "
                    f"expected {variables}"
                )
            values[name] = value
        result = LaurentPoly.zero(variables)
        for exps, coeff in self._terms.items():
            term = LaurentPoly.constant(variables, coeff)
            for name, q in zip(self.variables, exps):
                if not q:
                    continue
                term = term * values[name]._fractional_power(Fraction(q, 4))
            result = result + term
        return result

    # -- canonical text form ------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps in sorted(self._terms, reverse=True):
            coeff = self._terms[exps]
            factors = []
            for name, q in zip(self.variables, exps):
                if q:
                    factors.append(name + _format_exponent(q))
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({'*'.join(self.variables)}: {self})"

    @classmethod
    def parse(cls, text: str, variables) -> "LaurentPoly":
        """Parse the canonical text form back into a polynomial."""
        return _Parser(text, tuple(variables)).parse()


def _format_exponent(q: int) -> str:
    """Render a quarter-unit exponent; empty string for exponent 1."""
    f = Fraction(q, 4)
    if f == 1:
        return ""
    if f.denominator == 1:
        return f"^{f.numerator}"
    return f"^({f.numerator}/{f.denominator})"


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()/]))")


class _Parser:
    """Recursive-descent parser for the canonical polynomial syntax."""

    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.variables = variables
        self.tokens: list[tuple[str, str]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise PolyError(
                        f"unexpected character {text[pos:].strip()[0]!r} in polynomial"
                    )
                break
            pos = m.end()
            for kind in ("int", "name", "op"):
                if m.group(kind) is not None:
                    self.tokens.append((kind, m.group(kind)))
                    break
        self.pos = 0

    def _peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> tuple[str, str]:
        tok = self._peek()
        if tok is None:
            raise PolyError("unexpected end of polynomial")
        self.pos += 1
        return tok

    def parse(self) -> LaurentPoly:
        result = LaurentPoly.zero(self.variables)
        sign = 1
        tok = self._peek()
        if tok == ("op", "-"):
            self._next()
            sign = -1
        result = result + self._term(sign)
        while (tok := self._peek()) is not None:
            if tok == ("op", "+"):
                sign = 1
            elif tok == ("op", "-"):
                sign = -1
            else:
                raise PolyError(f"expected + or - before {tok[1]!r}")
            self._next()
            result = result + self._term(sign)
        return result

    def _term(self, sign: int) -> LaurentPoly:
        coeff = sign
        exps = [0] * len(self.variables)
        first = True
        while True:
            kind, value = self._next()
            if kind == "int":
                coeff *= int(value)
            elif kind == "name":
                if value not in self.variables:
                    raise PolyError(
                        f"unknown variable {value!r}; have {self.variables}"
                    )
                q = 4
                if self._peek() == ("op", "^"):
                    self._next()
                    q = self._exponent()
                exps[self.variables.index(value)] += q
            else:
                raise PolyError(f"unexpected {value!r} in term")
            if first:
                first = False
            if self._peek() == ("op", "*"):
                self._next()
                continue
            break
        return LaurentPoly(self.variables, {tuple(exps): coeff})

    def _exponent(self) -> int:
        """Parse an exponent, returning quarter-units."""
        tok = self._next()
        if tok == ("op", "("):
            value = self._signed_rational()
            if self._next() != ("op", ")"):
                raise PolyError("missing ) in exponent")
            return _quarter(value)
        if tok == ("op", "-"):
            kind, digits = self._next()
            if kind != "int":
                raise PolyError("expected digits after ^-")
            return _quarter(-int(digits))
        if tok[0] == "int":
            return _quarter(int(tok[1]))
        raise PolyError(f"bad exponent near {tok[1]!r}")

    def _signed_rational(self) -> Fraction:
        sign = 1
        tok = self._next()
        if tok == ("op", "-"):
            sign = -1
            tok = self._next()
        if tok[0] != "int":
            raise PolyError("expected digits in exponent")
        numerator = sign * int(tok[1])
        if self._peek() == ("op", "/"):
            self._next()
            kind, digits = self._next()
            if kind != "int":
                raise PolyError("expected digits after / in exponent")
            return Fraction(numerator, int(digits))
        return Fraction(numerator)


def parse_poly(text: str, variables) -> LaurentPoly:
    """Module-level convenience alias for LaurentPoly.parse."""
    return LaurentPoly.parse(text, variables)
