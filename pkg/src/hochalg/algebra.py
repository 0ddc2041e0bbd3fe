"""Linear combinations of forests and the free Hoch-algebra operations.

The two operations on the span of forests are the associative
concatenation ``star`` and the magmatic product ``succ``.  On words of
trees t1...tp and s1...sq the magmatic product is the double sum

    sum_{k=1..q} sum_{i=0..p-1}
        t1 ... t_{p-(i+1)} [t_{p-i}, ..., tp, s1, ..., sk] s_{k+1} ... sq,

which together with concatenation satisfies the Hochschild two-cocycle
relation

    (x succ y) * z + (x * y) succ z  =  x succ (y * z) + x * (y succ z).

Coefficients are exact rationals throughout; no floating point is used
anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .trees import Forest, PlanarTree, _Cursor, _parse_forest, _starts_tree, format_forest, leaf


class Element:
    """A finite formal linear combination of forests over exact rationals.

    Stored sparsely as a map Forest -> nonzero Fraction; the empty map is
    the zero element.  Instances behave as immutable values: +, -, scalar
    multiplication, and ``x * y`` for the concatenation product.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Forest, Rational] | Iterable[tuple[Forest, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Forest, Fraction] = {}
        for f, c in items:
            c = Fraction(c)
            if c:
                new = clean.get(f, Fraction(0)) + c
                if new:
                    clean[f] = new
                else:
                    del clean[f]
        self._terms = clean

    @staticmethod
    def zero() -> Element:
        return Element()

    @staticmethod
    def from_forest(f: Forest, coeff: Rational = 1) -> Element:
        return Element([(f, coeff)])

    @staticmethod
    def from_tree(t: PlanarTree, coeff: Rational = 1) -> Element:
        return Element([(Forest((t,)), coeff)])

    def terms(self) -> dict[Forest, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Forest, Fraction]]:
        """Terms in canonical forest order; the deterministic iteration used
        for all printed output."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, f: Forest) -> Fraction:
        return self._terms.get(f, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> set[Forest]:
        return set(self._terms)

    def degrees(self) -> set[int]:
        return {f.degree for f in self._terms}

    def max_degree(self) -> int:
        """0 for the zero element."""
        return max((f.degree for f in self._terms), default=0)

    def homogeneous_component(self, n: int) -> Element:
        return Element([(f, c) for f, c in self._terms.items() if f.degree == n])

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for f, c in other._terms.items():
            new = out.get(f, Fraction(0)) + c
            if new:
                out[f] = new
            else:
                out.pop(f, None)
        res = Element()
        res._terms = out
        return res

    def __neg__(self) -> Element:
        res = Element()
        res._terms = {f: -c for f, c in self._terms.items()}
        return res

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            return star(self, other)
        if isinstance(other, Rational):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return scale(other, self)
        return NotImplemented

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"


def generator(label: int = 0) -> Element:
    """The generator embedding: one leaf as a one-term element."""
    return Element.from_tree(leaf(label))


def add(x: Element, y: Element) -> Element:
    return x + y


def scale(c: Rational, x: Element) -> Element:
    c = Fraction(c)
    if not c:
        return Element.zero()
    res = Element()
    res._terms = {f: c * v for f, v in x._terms.items()}
    return res


def star_basis(f: Forest, g: Forest) -> Forest:
    """Concatenation of two basis forests."""
    return f.concat(g)


def star(x: Element, y: Element) -> Element:
    """The associative product: bilinear extension of concatenation."""
    out: dict[Forest, Fraction] = {}
    for f, c in x._terms.items():
        for g, d in y._terms.items():
            key = f.concat(g)
            new = out.get(key, Fraction(0)) + c * d
            if new:
                out[key] = new
            else:
                del out[key]
    res = Element()
    res._terms = out
    return res


def succ_basis(f: Forest, g: Forest) -> Element:
    """The magmatic product of two basis forests.

    Yields exactly len(f) * len(g) forests, each with coefficient 1: every
    way of bracketing a nonempty suffix of f with a nonempty prefix of g
    under a new root, keeping the leftover trees on either side.
    """
    ts, ss = f.trees, g.trees
    p, q = len(ts), len(ss)
    out: dict[Forest, Fraction] = {}
    for k in range(1, q + 1):
        for i in range(p):
            node = PlanarTree(children=ts[p - (i + 1):] + ss[:k])
            key = Forest(ts[: p - (i + 1)] + (node,) + ss[k:])
            out[key] = out.get(key, Fraction(0)) + 1
    res = Element()
    res._terms = out
    return res


def succ(x: Element, y: Element) -> Element:
    """Bilinear extension of succ_basis."""
    acc: dict[Forest, Fraction] = {}
    for f, c in x._terms.items():
        for g, d in y._terms.items():
            cd = c * d
            for key, v in succ_basis(f, g)._terms.items():
                new = acc.get(key, Fraction(0)) + cd * v
                if new:
                    acc[key] = new
                else:
                    del acc[key]
    res = Element()
    res._terms = acc
    return res


def star_all(factors: Sequence[Element]) -> Element:
    """Product x1 * x2 * ... * xk (k >= 1)."""
    acc = factors[0]
    for x in factors[1:]:
        acc = star(acc, x)
    return acc


def nary_bracket(args: Sequence[Element]) -> Element:
    """The n-ary bracket [x1, ..., xn] built from the two products.

    For n >= 3:  (x1 * ... * x_{n-1}) succ xn - x1 * ((x2 * ... * x_{n-1}) succ xn).
    For n = 2:   x1 succ x2 - x1 * x2  (the inner product is empty and is
    read as the unit of the unital extension).

    Applied to primitive arguments the result is again primitive.
    """
    n = len(args)
    if n < 2:
        raise ValueError(f"bracket needs at least 2 arguments, got {n}")
    if n == 2:
        x1, x2 = args
        return succ(x1, x2) - star(x1, x2)
    head = star_all(args[:-1])
    inner = star_all(args[1:-1])
    xn = args[-1]
    return succ(head, xn) - star(args[0], succ(inner, xn))


_PRIMITIVE_MEMO: dict[PlanarTree, Element] = {}


def tree_to_primitive(t: PlanarTree) -> Element:
    """The primitive element attached to a tree.

    A leaf maps to itself; a node [t1, ..., tn] maps to the n-ary bracket
    of its children's primitives.  The result is homogeneous of the tree's
    leaf count and equals t plus strictly earlier forests in the canonical
    order (mostly words with more trees, but e.g. the corolla [|,|,|]
    shows up in the primitive of [|,[|,|]]).
    """
    cached = _PRIMITIVE_MEMO.get(t)
    if cached is not None:
        return cached
    if t.is_leaf:
        result = Element.from_tree(t)
    else:
        result = nary_bracket([tree_to_primitive(c) for c in t.children])
    _PRIMITIVE_MEMO[t] = result
    return result


def pbw_basis_element(f: Forest) -> Element:
    """Product of the tree primitives of f: the triangular basis element
    equal to f plus strictly earlier forests in the canonical order."""
    return star_all([tree_to_primitive(t) for t in f.trees])


# --- element text form --------------------------------------------------
#
#   element  := ['+'|'-'] term (('+'|'-') term)*   |   '0'
#   term     := [rational '*'] forest
#   rational := integer | integer '/' positive-integer
#
# Output is canonical: terms sorted by the forest order, no zero terms,
# coefficients of absolute value 1 left implicit.


def _format_terms(pairs: list[tuple[str, Fraction]]) -> str:
    if not pairs:
        return "0"
    chunks: list[str] = []
    for idx, (basis_text, c) in enumerate(pairs):
        mag = abs(c)
        body = basis_text if mag == 1 else f"{mag}*{basis_text}"
        if idx == 0:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def format_element(x: Element) -> str:
    """Canonical text of an element; '0' for the zero element."""
    pairs = [(format_forest(f), c) for f, c in x.sorted_terms()]
    return _format_terms(pairs)


def _parse_rational(cur: _Cursor) -> Fraction:
    digits = ""
    while cur.peek().isdigit():
        digits += cur.advance()
    num = int(digits)
    if cur.peek() == "/":
        cur.advance()
        dend = ""
        while cur.peek().isdigit():
            dend += cur.advance()
        if not dend:
            raise cur.fail("expected digits after '/'")
        den = int(dend)
        if den == 0:
            raise cur.fail("zero denominator")
        return Fraction(num, den)
    return Fraction(num)


def _parse_term(cur: _Cursor, alphabet_size: int | None, unital: bool):
    """One term: (coefficient, basis) where basis is a Forest or None for
    the unit (unital mode), or (coefficient, 'zero') for a bare 0."""
    coeff = Fraction(1)
    if cur.peek().isdigit():
        value = _parse_rational(cur)
        mark = cur.pos
        cur.skip_ws()
        if cur.peek() == "*":
            cur.advance()
            cur.skip_ws()
            coeff = value
        else:
            cur.pos = mark
            if value == 0:
                return Fraction(0), "zero"
            if unital and value == 1:
                return coeff, None
            raise cur.fail("expected '*' and a forest after a coefficient")
    if unital and cur.peek() == "1":
        cur.advance()
        return coeff, None
    if not _starts_tree(cur.peek()):
        raise cur.fail("expected a forest" + (" or '1'" if unital else ""))
    return coeff, _parse_forest(cur, alphabet_size)


def _parse_element_into(cur: _Cursor, alphabet_size: int | None, unital: bool):
    """Shared element parser; returns (unit_coefficient, Element)."""
    unit_coeff = Fraction(0)
    terms: list[tuple[Forest, Fraction]] = []
    cur.skip_ws()
    sign = Fraction(1)
    if cur.peek() in ("+", "-"):
        if cur.advance() == "-":
            sign = Fraction(-1)
        cur.skip_ws()
    while True:
        coeff, basis = _parse_term(cur, alphabet_size, unital)
        if basis is None:
            unit_coeff += sign * coeff
        elif basis != "zero":
            terms.append((basis, sign * coeff))
        cur.skip_ws()
        if cur.at_end():
            return unit_coeff, Element(terms)
        op = cur.peek()
        if op not in ("+", "-"):
            raise cur.fail(f"expected '+' or '-', got {op!r}")
        cur.advance()
        cur.skip_ws()
        sign = Fraction(1) if op == "+" else Fraction(-1)


def parse_element(text: str, alphabet_size: int | None = None) -> Element:
    """Parse the element grammar, e.g. '3/2*[|,|] - | |'.

    parse_element(format_element(x)) == x for every element x.
    """
    cur = _Cursor(text)
    unit_coeff, elem = _parse_element_into(cur, alphabet_size, unital=False)
    assert unit_coeff == 0
    return elem
