"""
Exact polynomial arithmetic for E_n(x, q) and its one-variable shadows.

`BivariatePolynomial` is a sparse map (x-exponent, q-exponent) -> int with
zero coefficients pruned; `UnivariatePolynomial` is a dense coefficient tuple
with trailing zeros trimmed. Both are immutable and hashable. Coefficients are
Python ints, so there is no overflow at any n.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from core.errors import QEulerError

Exponents = Tuple[int, int]


class PolynomialParseError(QEulerError):
    """Text could not be read as a polynomial in x and q."""


class UnivariatePolynomial:
    """Dense coefficients, index = exponent."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: Tuple[int, ...] = tuple(coeffs)

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self._coeffs):
            return self._coeffs[exponent]
        return 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UnivariatePolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == UnivariatePolynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: 'UnivariatePolynomial') -> 'UnivariatePolynomial':
        size = max(len(self._coeffs), len(other._coeffs))
        return UnivariatePolynomial(self[i] + other[i] for i in range(size))

    def __mul__(self, other) -> 'UnivariatePolynomial':
        if isinstance(other, int):
            return UnivariatePolynomial(c * other for c in self._coeffs)
        if not self._coeffs or not other._coeffs:
            return UnivariatePolynomial()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> 'UnivariatePolynomial':
        """Multiplication by var^k."""
        if not self._coeffs:
            return self
        return UnivariatePolynomial([0] * k + list(self._coeffs))

    def __call__(self, value: int) -> int:
        total = 0
        for c in reversed(self._coeffs):
            total = total * value + c
        return total

    def render(self, var: str = "x", descending: bool = False, spaced: bool = False) -> str:
        terms = [(e, c) for e, c in enumerate(self._coeffs) if c]
        if not terms:
            return "0"
        if descending:
            terms.reverse()
        parts = [_monomial_text(c, ((var, e),)) for e, c in terms]
        return _join(parts, spaced)

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({list(self._coeffs)})"


class BivariatePolynomial:
    """Sparse polynomial in x and q: (d, m) -> coefficient of x^d q^m."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Exponents, int]] = None):
        pruned: Dict[Exponents, int] = {}
        for (d, m), c in (terms or {}).items():
            if d < 0 or m < 0:
                raise ValueError(f"negative exponent in term x^{d} q^{m}")
            if c:
                pruned[(int(d), int(m))] = c
        self._terms = MappingProxyType(dict(sorted(pruned.items())))

    @classmethod
    def constant(cls, c: int) -> 'BivariatePolynomial':
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, d: int, m: int, c: int = 1) -> 'BivariatePolynomial':
        return cls({(d, m): c})

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return self._terms

    def items(self) -> Iterable[Tuple[Exponents, int]]:
        return self._terms.items()

    @property
    def x_degree(self) -> int:
        return max((d for d, _ in self._terms), default=-1)

    @property
    def mass(self) -> int:
        """Sum of all coefficients (the value at x = q = 1)."""
        return sum(self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BivariatePolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self == BivariatePolynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other) -> 'BivariatePolynomial':
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        return add(self, other)

    __radd__ = __add__

    def __mul__(self, other) -> 'BivariatePolynomial':
        if isinstance(other, int):
            return BivariatePolynomial({k: c * other for k, c in self._terms.items()})
        return mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"BivariatePolynomial({render(self)!r})"


# --- Operations ---

def add(a: BivariatePolynomial, b: BivariatePolynomial) -> BivariatePolynomial:
    terms = dict(a.terms)
    for key, c in b.terms.items():
        terms[key] = terms.get(key, 0) + c
    return BivariatePolynomial(terms)


def mul(a: BivariatePolynomial, b: BivariatePolynomial) -> BivariatePolynomial:
    terms: Dict[Exponents, int] = {}
    for (d1, m1), c1 in a.terms.items():
        for (d2, m2), c2 in b.terms.items():
            key = (d1 + d2, m1 + m2)
            terms[key] = terms.get(key, 0) + c1 * c2
    return BivariatePolynomial(terms)


def shift_x(a: BivariatePolynomial, k: int = 1) -> BivariatePolynomial:
    """Multiplication by x^k."""
    return BivariatePolynomial({(d + k, m): c for (d, m), c in a.terms.items()})


def substitute_x_qx(a: BivariatePolynomial) -> BivariatePolynomial:
    """a(qx, q): every term x^d q^m becomes x^d q^(m+d)."""
    return BivariatePolynomial({(d, m + d): c for (d, m), c in a.terms.items()})


def coeff_x(a: BivariatePolynomial, d: int) -> UnivariatePolynomial:
    """The q-polynomial multiplying x^d."""
    row = {m: c for (dd, m), c in a.terms.items() if dd == d}
    if not row:
        return UnivariatePolynomial()
    return UnivariatePolynomial(row.get(m, 0) for m in range(max(row) + 1))


def coeff_xq(a: BivariatePolynomial, d: int, m: int) -> int:
    return a.terms.get((d, m), 0)


def eval_q1(a: BivariatePolynomial) -> UnivariatePolynomial:
    """Collapse q to 1: the x-polynomial of per-x^d coefficient sums."""
    sums: Dict[int, int] = {}
    for (d, _), c in a.terms.items():
        sums[d] = sums.get(d, 0) + c
    if not sums:
        return UnivariatePolynomial()
    return UnivariatePolynomial(sums.get(d, 0) for d in range(max(sums) + 1))


def from_x_rows(rows: Mapping[int, UnivariatePolynomial]) -> BivariatePolynomial:
    """Inverse of coeff_x: assemble a polynomial from its x^d rows."""
    return BivariatePolynomial({(d, m): c for d, row in rows.items() for m, c in enumerate(row.coeffs)})


# --- Text forms ---

def _power_text(var: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    return var if exponent == 1 else f"{var}^{exponent}"


def _monomial_text(c: int, powers: Sequence[Tuple[str, int]]) -> str:
    body = "".join(_power_text(var, e) for var, e in powers)
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}{body}"


def _join(parts: List[str], spaced: bool = False) -> str:
    plus, minus = (" + ", " - ") if spaced else ("+", "-")
    text = parts[0]
    for part in parts[1:]:
        text += minus + part[1:] if part.startswith("-") else plus + part
    return text


def render(a: BivariatePolynomial) -> str:
    """
    Canonical text in the style "1+x(q+3)+x^2".

    Groups ascend in x; inside a parenthesised group q descends. A group
    with a single q-term is written as one monomial, e.g. "q^2x^2".
    """
    if not a:
        return "0"
    parts: List[str] = []
    for d in sorted({d for d, _ in a.terms}):
        row = coeff_x(a, d)
        nonzero = [(m, c) for m, c in enumerate(row.coeffs) if c]
        if len(nonzero) == 1:
            m, c = nonzero[0]
            parts.append(_monomial_text(c, (("q", m), ("x", d))))
        else:
            parts.append(f"{_power_text('x', d)}({row.render('q', descending=True)})")
    return _join(parts)


class _Parser:
    """Recursive-descent reader for rendered polynomials and printed transcriptions."""

    def __init__(self, text: str, strict: bool):
        self.text = "".join(text.split()).replace("{", "").replace("}", "")
        self.pos = 0
        self.strict = strict
        self.notes: List[str] = []
        self.terms: Dict[Exponents, int] = {}

    def error(self, message: str):
        raise PolynomialParseError(f"{message} at position {self.pos} in {self.text!r}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def number(self) -> Optional[int]:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        return int(self.text[start:self.pos]) if self.pos > start else None

    def power(self, var: str) -> Optional[int]:
        if self.peek() != var:
            return None
        self.pos += 1
        if self.peek() == "^":
            self.pos += 1
            exponent = self.number()
            if exponent is None:
                self.error(f"missing exponent after {var}^")
            return exponent
        return 1

    def sign(self) -> Optional[int]:
        ch = self.peek()
        if ch in "+-":
            self.pos += 1
            return 1 if ch == "+" else -1
        return None

    def add_term(self, d: int, m: int, c: int):
        if (d, m) in self.terms:
            if self.strict:
                self.error(f"repeated term x^{d}q^{m}")
            self.notes.append(f"repeated term x^{d}q^{m} summed")
        self.terms[(d, m)] = self.terms.get((d, m), 0) + c

    def monomial(self, allow_x: bool) -> Optional[Tuple[int, int, int]]:
        start = self.pos
        coef = self.number()
        qexp = self.power("q")
        xexp = self.power("x") if allow_x else None
        if allow_x and qexp is None and xexp is not None:
            qexp = self.power("q")
        if self.pos == start:
            return None
        return (1 if coef is None else coef, qexp or 0, xexp or 0)

    def q_row(self) -> List[Tuple[int, int]]:
        row: List[Tuple[int, int]] = []
        sign = self.sign() or 1
        while True:
            mono = self.monomial(allow_x=False)
            if mono is None:
                self.error("expected a q-term")
            c, m, _ = mono
            row.append((sign * c, m))
            if self.peek() == ")":
                return row
            sign = self.sign()
            if sign is None:
                self.error("expected '+' or ')'")

    def parse(self) -> BivariatePolynomial:
        if self.text == "0":
            return BivariatePolynomial()
        sign = self.sign() or 1
        while True:
            mono = self.monomial(allow_x=True)
            c, a, d = mono if mono is not None else (1, 0, 0)
            if self.peek() == "(":
                self.pos += 1
                for cq, m in self.q_row():
                    self.add_term(d, m + a, sign * c * cq)
                self.pos += 1
            elif mono is None:
                self.error("expected a term")
            else:
                self.add_term(d, a, sign * c)
            if self.pos >= len(self.text):
                break
            sign = self.sign()
            if sign is None:
                if self.strict:
                    self.error("expected '+' between terms")
                self.notes.append(f"missing '+' before {self.text[self.pos:self.pos + 8]!r}")
                sign = 1
        return BivariatePolynomial(self.terms)


def parse(text: str) -> BivariatePolynomial:
    """Strict inverse of `render`; also accepts spaces and TeX braces in exponents."""
    return _Parser(text, strict=True).parse()


def parse_with_notes(text: str) -> Tuple[BivariatePolynomial, List[str]]:
    """Lenient reading for hand transcriptions: juxtaposed groups and repeated terms are noted, not rejected."""
    parser = _Parser(text, strict=False)
    return parser.parse(), parser.notes


def to_lines(a: BivariatePolynomial) -> str:
    """Exchange form: one "d m coefficient" line per term, sorted by d then m."""
    return "".join(f"{d} {m} {c}\n" for (d, m), c in a.terms.items())


def from_lines(text: str) -> BivariatePolynomial:
    terms: Dict[Exponents, int] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 3:
            raise PolynomialParseError(f"line {number}: expected 'd m coefficient', got {line!r}")
        d, m, c = (int(f) for f in fields)
        terms[(d, m)] = terms.get((d, m), 0) + c
    return BivariatePolynomial(terms)
