"""The infinitesimal coproduct on the span of forests.

The coproduct is defined by a well-founded recursion: generators (single
leaves) are sent to zero, and products are unfolded through the two
compatibility rules

    D(x * y) = x_(1) (x) (x_(2) * y) + (x * y_(1)) (x) y_(2) + x (x) y
    D(x succ y) = x_(1) (x) (x_(2) succ y) + (x succ y_(1)) (x) y_(2) + x (x) y

(Sweedler sums implied).  A forest of several trees splits as first tree
* rest; a single node [t1, ..., tm] with m >= 3 is rewritten as

    (t1 * (t2 ... t_{m-1})) succ tm  -  t1 * ((t2 ... t_{m-1}) succ tm)

and a node with two children as t1 succ t2, so every recursive call
strictly decreases the total leaf count (asserted below).

Primitives are the kernel of the coproduct; their dimension in each
degree is a little Schroeder number, the computational witness that
forests are cofree over the span of trees.  The unital extension adjoins
a unit 1 with 1 * x = x = x * 1 and 1 succ x = x = x succ 1 and the
coproduct d(x) = 1 (x) x + x (x) 1 + D(x), which satisfies the same
compatibility rules with the cross term x (x) y subtracted instead of
added.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping

from . import linalg
from .algebra import (
    Element,
    _Cursor,
    _format_terms,
    _parse_element_into,
    scale,
    star,
    succ,
)
from .trees import Forest, enumerate_forests, format_forest

# A tensor slot is a basis forest, or None for the unit 1 of the unital
# extension (nonunital operations never produce None slots).
Slot = Forest | None

_UNIT_SLOT_KEY = (0, 0, ())


def _slot_key(s: Slot):
    return _UNIT_SLOT_KEY if s is None else s.sort_key()


class TensorElement:
    """A linear combination of k-fold tensors of basis forests.

    Keys are k-tuples of slots with a fixed arity k >= 1; coefficients are
    nonzero exact rationals.  The zero tensor of each arity is the empty
    map.
    """

    __slots__ = ("arity", "_terms")

    def __init__(
        self,
        arity: int,
        terms: Mapping[tuple[Slot, ...], Rational] | Iterable[tuple[tuple[Slot, ...], Rational]] = (),
    ):
        if arity < 1:
            raise ValueError(f"tensor arity must be positive, got {arity}")
        self.arity = arity
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[Slot, ...], Fraction] = {}
        for key, c in items:
            key = tuple(key)
            if len(key) != arity:
                raise ValueError(f"tensor key {key} does not have arity {arity}")
            c = Fraction(c)
            if c:
                new = clean.get(key, Fraction(0)) + c
                if new:
                    clean[key] = new
                else:
                    del clean[key]
        self._terms = clean

    @staticmethod
    def zero(arity: int) -> TensorElement:
        return TensorElement(arity)

    def terms(self) -> dict[tuple[Slot, ...], Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[tuple[Slot, ...], Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: tuple(_slot_key(s) for s in kv[0]))

    def coefficient(self, key: tuple[Slot, ...]) -> Fraction:
        return self._terms.get(tuple(key), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self._terms.items())))

    def __add__(self, other: TensorElement) -> TensorElement:
        if self.arity != other.arity:
            raise ValueError("tensor arities differ")
        out = dict(self._terms)
        for key, c in other._terms.items():
            new = out.get(key, Fraction(0)) + c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        res = TensorElement(self.arity)
        res._terms = out
        return res

    def __neg__(self) -> TensorElement:
        res = TensorElement(self.arity)
        res._terms = {k: -c for k, c in self._terms.items()}
        return res

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def scaled(self, c: Rational) -> TensorElement:
        c = Fraction(c)
        if not c:
            return TensorElement(self.arity)
        res = TensorElement(self.arity)
        res._terms = {k: c * v for k, v in self._terms.items()}
        return res

    def map_slot(
        self, index: int, fn: Callable[[Slot], Iterable[tuple[Slot, Fraction]]]
    ) -> TensorElement:
        """Substitute a linear combination of slots for slot ``index``."""
        out: dict[tuple[Slot, ...], Fraction] = {}
        for key, c in self._terms.items():
            for slot, d in fn(key[index]):
                new_key = key[:index] + (slot,) + key[index + 1:]
                new = out.get(new_key, Fraction(0)) + c * d
                if new:
                    out[new_key] = new
                else:
                    del out[new_key]
        res = TensorElement(self.arity)
        res._terms = out
        return res

    def __str__(self) -> str:
        return format_tensor(self)

    def __repr__(self) -> str:
        return f"TensorElement({self.arity}, {format_tensor(self)!r})"


def tensor_of_elements(*factors: Element) -> TensorElement:
    """The tensor x1 (x) ... (x) xk of elements, expanded bilinearly."""
    arity = len(factors)
    terms: dict[tuple[Slot, ...], Fraction] = {}
    keys_coeffs = [[((f,), c) for f, c in x._terms.items()] for x in factors]
    if any(not kc for kc in keys_coeffs):
        return TensorElement(arity)
    acc: list[tuple[tuple[Slot, ...], Fraction]] = [((), Fraction(1))]
    for kc in keys_coeffs:
        acc = [(key + k2, c * c2) for key, c in acc for k2, c2 in kc]
    for key, c in acc:
        terms[key] = terms.get(key, Fraction(0)) + c
    return TensorElement(arity, terms)


def _element_slots(x: Element) -> list[tuple[Slot, Fraction]]:
    return [(f, c) for f, c in x._terms.items()]


class CoproductEngine:
    """Evaluates the coproduct recursion on basis forests.

    ``cross_sign`` is the coefficient of the x (x) y cross term in both
    compatibility rules: +1 is the real coproduct; -1 is a deliberately
    broken variant kept for negative-control verification.  ``memoize``
    caches per-forest results; disabling it must not change any value.
    """

    def __init__(self, cross_sign: int = 1, memoize: bool = True):
        if cross_sign not in (1, -1):
            raise ValueError("cross_sign must be +1 or -1")
        self.cross_sign = cross_sign
        self.memoize = memoize
        self._memo: dict[Forest, TensorElement] = {}

    def _rule(self, x: Element, y: Element, op, bound: int) -> TensorElement:
        # Termination measure: both arguments are strictly below the leaf
        # count of the forest being expanded.
        assert x.max_degree() < bound and y.max_degree() < bound
        dx = self.coproduct(x)
        dy = self.coproduct(y)
        left = dx.map_slot(1, lambda b: _element_slots(op(Element.from_forest(b), y)))
        right = dy.map_slot(0, lambda a: _element_slots(op(x, Element.from_forest(a))))
        return left + right + tensor_of_elements(x, y).scaled(self.cross_sign)

    def coproduct_basis(self, f: Forest) -> TensorElement:
        """The coproduct of a basis forest (arity-2 tensor)."""
        if self.memoize:
            cached = self._memo.get(f)
            if cached is not None:
                return cached
        ts = f.trees
        if len(ts) > 1:
            head = Element.from_tree(ts[0])
            rest = Element.from_forest(Forest(ts[1:]))
            result = self._rule(head, rest, star, f.degree)
        else:
            t = ts[0]
            if t.is_leaf:
                result = TensorElement.zero(2)
            elif len(t.children) == 2:
                left = Element.from_tree(t.children[0])
                right = Element.from_tree(t.children[1])
                result = self._rule(left, right, succ, f.degree)
            else:
                cs = t.children
                head = Element.from_forest(Forest(cs[:-1]))
                last = Element.from_tree(cs[-1])
                first = Element.from_tree(cs[0])
                inner = succ(Element.from_forest(Forest(cs[1:-1])), last)
                result = self._rule(head, last, succ, f.degree) - self._rule(
                    first, inner, star, f.degree
                )
        if self.memoize:
            self._memo[f] = result
        return result

    def coproduct(self, x: Element) -> TensorElement:
        """Linear extension of coproduct_basis."""
        acc = TensorElement.zero(2)
        for f, c in x._terms.items():
            acc = acc + self.coproduct_basis(f).scaled(c)
        return acc


_DEFAULT_ENGINE = CoproductEngine()


def coproduct_basis(f: Forest) -> TensorElement:
    return _DEFAULT_ENGINE.coproduct_basis(f)


def coproduct(x: Element) -> TensorElement:
    return _DEFAULT_ENGINE.coproduct(x)


def apply_coproduct_at(
    t: TensorElement, index: int, engine: CoproductEngine | None = None
) -> TensorElement:
    """Apply the coproduct to one tensor slot, raising the arity by one."""
    engine = engine or _DEFAULT_ENGINE
    out: dict[tuple[Slot, ...], Fraction] = {}
    for key, c in t._terms.items():
        slot = key[index]
        if slot is None:
            raise ValueError("cannot apply the nonunital coproduct to a unit slot")
        for inner_key, d in engine.coproduct_basis(slot)._terms.items():
            new_key = key[:index] + inner_key + key[index + 1:]
            new = out.get(new_key, Fraction(0)) + c * d
            if new:
                out[new_key] = new
            else:
                del out[new_key]
    res = TensorElement(t.arity + 1)
    res._terms = out
    return res


def iterated_coproduct(x: Element, r: int, engine: CoproductEngine | None = None) -> TensorElement:
    """The r-fold coproduct: D applied to the first slot r-1 more times.

    Returns an arity r+1 tensor; r must be positive.
    """
    if r < 1:
        raise ValueError(f"iteration count must be positive, got {r}")
    engine = engine or _DEFAULT_ENGINE
    acc = engine.coproduct(x)
    for _ in range(r - 1):
        acc = apply_coproduct_at(acc, 0, engine)
    return acc


def is_primitive(x: Element, engine: CoproductEngine | None = None) -> bool:
    """True iff the coproduct of x vanishes."""
    engine = engine or _DEFAULT_ENGINE
    return engine.coproduct(x).is_zero


def filtration_level(x: Element, engine: CoproductEngine | None = None) -> int:
    """The least r with the r-fold coproduct of x equal to zero.

    Connectedness guarantees r <= max degree of x.  Returns 0 as the
    marker for the zero element, which lies in every filtration stage.
    """
    if x.is_zero:
        return 0
    engine = engine or _DEFAULT_ENGINE
    bound = x.max_degree()
    level = 1
    acc = engine.coproduct(x)
    while not acc.is_zero:
        level += 1
        if level > bound:
            raise AssertionError("filtration level exceeded the degree bound")
        acc = apply_coproduct_at(acc, 0, engine)
    return level


def coproduct_matrix(
    n: int, alphabet_size: int = 1, engine: CoproductEngine | None = None
) -> tuple[linalg.RatMatrix, list[Forest], list[tuple[Slot, ...]]]:
    """The matrix of the coproduct on the degree-n component.

    Columns are the canonical forest basis, rows the tensor keys that
    occur, both canonically ordered.
    """
    engine = engine or _DEFAULT_ENGINE
    forests = enumerate_forests(n, alphabet_size)
    images = [engine.coproduct_basis(f) for f in forests]
    keys = sorted(
        {key for img in images for key in img._terms},
        key=lambda key: tuple(_slot_key(s) for s in key),
    )
    row_of = {key: i for i, key in enumerate(keys)}
    entries = {}
    for col, img in enumerate(images):
        for key, c in img._terms.items():
            entries[(row_of[key], col)] = c
    return linalg.RatMatrix(len(keys), len(forests), entries), forests, keys


def primitive_basis(
    n: int, alphabet_size: int = 1, engine: CoproductEngine | None = None
) -> list[Element]:
    """An exact basis of the primitives in degree n.

    Kernel vectors of the coproduct matrix, reduced row-echelon normalized
    over the canonical forest order with pivot coefficient 1.  For
    alphabet_size 1 the count is the n-th little Schroeder number.
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    matrix, forests, _ = coproduct_matrix(n, alphabet_size, engine)
    vectors = linalg.kernel_basis(matrix)
    return [Element(zip(forests, vec)) for vec in vectors]


def _resolve_op(which: str):
    if which in ("*", "star"):
        return star
    if which in (">", "succ", "≻"):
        return succ
    raise ValueError(f"operation must be 'star'/'*' or 'succ'/'>', got {which!r}")


def check_compatibility(
    x: Element, y: Element, which: str, engine: CoproductEngine | None = None
) -> bool:
    """Exact equality of both sides of a compatibility rule.

    The left side expands the product to basis forests and applies the
    coproduct recursion; the right side is assembled from the coproducts
    of x and y by the displayed formula with the + cross term.  The two
    evaluations are independent, so this witnesses well-definedness.
    """
    engine = engine or _DEFAULT_ENGINE
    op = _resolve_op(which)
    lhs = engine.coproduct(op(x, y))
    dx = engine.coproduct(x)
    dy = engine.coproduct(y)
    rhs = (
        dx.map_slot(1, lambda b: _element_slots(op(Element.from_forest(b), y)))
        + dy.map_slot(0, lambda a: _element_slots(op(x, Element.from_forest(a))))
        + tensor_of_elements(x, y)
    )
    return lhs == rhs


# --- unital extension ---------------------------------------------------


@dataclass(frozen=True)
class UnitalElement:
    """An element of the unital extension: a multiple of 1 plus a body in
    the augmentation ideal (which never contains a unit term)."""

    unit: Fraction
    body: Element

    def __post_init__(self) -> None:
        object.__setattr__(self, "unit", Fraction(self.unit))

    @staticmethod
    def one(coeff: Rational = 1) -> UnitalElement:
        return UnitalElement(Fraction(coeff), Element.zero())

    @staticmethod
    def from_element(x: Element) -> UnitalElement:
        return UnitalElement(Fraction(0), x)

    @property
    def is_zero(self) -> bool:
        return not self.unit and self.body.is_zero

    def __add__(self, other: UnitalElement) -> UnitalElement:
        return UnitalElement(self.unit + other.unit, self.body + other.body)

    def __neg__(self) -> UnitalElement:
        return UnitalElement(-self.unit, -self.body)

    def __sub__(self, other: UnitalElement) -> UnitalElement:
        return self + (-other)

    def scaled(self, c: Rational) -> UnitalElement:
        c = Fraction(c)
        return UnitalElement(c * self.unit, scale(c, self.body))

    def __str__(self) -> str:
        return format_unital_element(self)

    def __repr__(self) -> str:
        return f"UnitalElement({format_unital_element(self)!r})"


ONE = UnitalElement.one()


def unital_star(x: UnitalElement, y: UnitalElement) -> UnitalElement:
    """Concatenation with 1 as two-sided unit."""
    return UnitalElement(
        x.unit * y.unit,
        scale(x.unit, y.body) + scale(y.unit, x.body) + star(x.body, y.body),
    )


def unital_succ(x: UnitalElement, y: UnitalElement) -> UnitalElement:
    """The magmatic product with 1 as two-sided unit."""
    return UnitalElement(
        x.unit * y.unit,
        scale(x.unit, y.body) + scale(y.unit, x.body) + succ(x.body, y.body),
    )


def unital_ops(x: UnitalElement, y: UnitalElement, which: str) -> UnitalElement:
    op = _resolve_op(which)
    return unital_star(x, y) if op is star else unital_succ(x, y)


def _unital_slots(x: UnitalElement) -> list[tuple[Slot, Fraction]]:
    out: list[tuple[Slot, Fraction]] = []
    if x.unit:
        out.append((None, x.unit))
    out.extend(x.body._terms.items())
    return out


def _slot_to_unital(s: Slot) -> UnitalElement:
    if s is None:
        return ONE
    return UnitalElement.from_element(Element.from_forest(s))


def unital_coproduct(x: UnitalElement, engine: CoproductEngine | None = None) -> TensorElement:
    """The unital coproduct d(x) = 1 (x) x + x (x) 1 + D(x) on the body,
    with d(1) = 1 (x) 1."""
    engine = engine or _DEFAULT_ENGINE
    terms: dict[tuple[Slot, ...], Fraction] = {}
    if x.unit:
        terms[(None, None)] = x.unit
    for f, c in x.body._terms.items():
        for key in ((None, f), (f, None)):
            terms[key] = terms.get(key, Fraction(0)) + c
    acc = TensorElement(2, terms)
    return acc + engine.coproduct(x.body)


def check_unital_compatibility(
    x: UnitalElement, y: UnitalElement, which: str, engine: CoproductEngine | None = None
) -> bool:
    """The unital compatibility rules carry a minus sign on the cross term:

        d(x op y) = x_(1) (x) (x_(2) op y) + (x op y_(1)) (x) y_(2) - x (x) y

    with Sweedler components taken for d.  Both sides are evaluated
    independently and compared exactly.
    """
    engine = engine or _DEFAULT_ENGINE
    lhs = unital_coproduct(unital_ops(x, y, which), engine)
    dx = unital_coproduct(x, engine)
    dy = unital_coproduct(y, engine)
    left = dx.map_slot(1, lambda b: _unital_slots(unital_ops(_slot_to_unital(b), y, which)))
    right = dy.map_slot(0, lambda a: _unital_slots(unital_ops(x, _slot_to_unital(a), which)))
    cross_terms: list[tuple[tuple[Slot, ...], Fraction]] = [
        ((a, b), ca * cb) for a, ca in _unital_slots(x) for b, cb in _unital_slots(y)
    ]
    rhs = left + right - TensorElement(2, cross_terms)
    return lhs == rhs


# --- text form ----------------------------------------------------------


def format_tensor(t: TensorElement) -> str:
    """Canonical text of a tensor: factors joined by ' (x) ', unit slots
    printed as '1'; '0' for the zero tensor."""
    pairs = []
    for key, c in t.sorted_terms():
        text = " (x) ".join("1" if s is None else format_forest(s) for s in key)
        pairs.append((text, c))
    return _format_terms(pairs)


def format_unital_element(x: UnitalElement) -> str:
    pairs: list[tuple[str, Fraction]] = []
    if x.unit:
        pairs.append(("1", x.unit))
    pairs.extend((format_forest(f), c) for f, c in x.body.sorted_terms())
    return _format_terms(pairs)


def parse_unital_element(text: str, alphabet_size: int | None = None) -> UnitalElement:
    """Parse the element grammar extended with '1' as the unit factor."""
    cur = _Cursor(text)
    unit_coeff, elem = _parse_element_into(cur, alphabet_size, unital=True)
    return UnitalElement(unit_coeff, elem)
