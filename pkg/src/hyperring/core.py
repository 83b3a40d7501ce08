"""Finite multiplicative hyperrings backed by dense operation tables.

A hyperring here is an abelian group (carrier {0..order-1}, +) together
with a total hyperoperation x o y returning a nonempty subset of the
carrier, associative and distributive over + as a set inclusion.  The
hyperoperation is usually commutative; non-commutative tables (matrix
rings) are accepted and flagged, and every predicate that exploits
commutativity checks the flag first.

Validation is exhaustive, O(order^3); no axiom is sampled.
"""

from __future__ import annotations

import itertools

from .errors import (
    EmptyHyperproduct,
    EmptyOperand,
    NonAssociative,
    NonDistributive,
    NotAGroup,
    SignRuleViolation,
)
from .sets import elements, is_subset, iter_bits, mask_of, set_str


class HyperStructure:
    """Shared subset/product algebra for table-backed and lazy rings.

    Subclasses provide: order, zero, add_of, neg_of, hyp_mask, one,
    units_mask, hyperop_commutative.
    """

    order: int
    zero: int
    one: int | None
    units_mask: int
    hyperop_commutative: bool
    name: str

    def add_of(self, x: int, y: int) -> int:
        raise NotImplementedError

    def neg_of(self, x: int) -> int:
        raise NotImplementedError

    def hyp_mask(self, x: int, y: int) -> int:
        raise NotImplementedError

    # -- derived set algebra -------------------------------------------------

    def carrier_mask(self) -> int:
        return (1 << self.order) - 1

    def carrier(self) -> range:
        return range(self.order)

    def neg_mask(self, mask: int) -> int:
        return mask_of(self.neg_of(x) for x in iter_bits(mask))

    def sumset(self, a: int, b: int) -> int:
        """Elementwise sum-set {x+y : x in a, y in b}."""
        out = 0
        for x in iter_bits(a):
            for y in iter_bits(b):
                out |= 1 << self.add_of(x, y)
        return out

    def subset_product(self, a: int, b: int) -> int:
        """Hyperproduct extended to subsets: union of x o y over members."""
        if a == 0 or b == 0:
            raise EmptyOperand("subset hyperproduct of an empty set")
        out = 0
        for x in iter_bits(a):
            for y in iter_bits(b):
                out |= self.hyp_mask(x, y)
        return out

    def product_of(self, seq) -> int:
        """Left fold of the extended hyperoperation over an element sequence."""
        seq = tuple(seq)
        if not seq:
            raise EmptyOperand("hyperproduct of an empty sequence")
        acc = 1 << seq[0]
        for x in seq[1:]:
            acc = self.subset_product(acc, 1 << x)
        return acc

    def product_of_masks(self, masks) -> int:
        masks = tuple(masks)
        if not masks:
            raise EmptyOperand("hyperproduct of an empty sequence")
        acc = masks[0]
        for m in masks[1:]:
            acc = self.subset_product(acc, m)
        return acc

    def power_mask(self, x: int, k: int) -> int:
        """The k-fold hyperproduct x o x o ... o x as a set."""
        return self.product_of([x] * k)

    def power_sequence(self, x: int) -> list[int]:
        """Distinct power sets x^1, x^2, ... up to the first repetition."""
        seen: dict[int, int] = {}
        seq = []
        acc = 1 << x
        while acc not in seen:
            seen[acc] = len(seq)
            seq.append(acc)
            acc = self.subset_product(acc, 1 << x)
        return seq

    def nonunits_mask(self) -> int:
        return self.carrier_mask() & ~self.units_mask

    def zero_annihilates(self) -> bool:
        """True when 0 o x = {0} for every x (holds in every Z_{m,T})."""
        z = 1 << self.zero
        return all(self.hyp_mask(self.zero, x) == z for x in self.carrier())

    def set_repr(self, mask: int) -> str:
        return set_str(mask)


class Hyperring(HyperStructure):
    """A validated finite multiplicative hyperring with dense tables.

    Instances are immutable after construction; build them through
    :func:`validate_hyperring` or :func:`build_zmt`.
    """

    def __init__(self, add, hyp, *, zero, neg, identities_mask, one,
                 units_mask, hyperop_commutative, strongly_distributive,
                 name=""):
        self.order = len(add)
        self.add = add                      # tuple of tuples of elements
        self.hyp = hyp                      # tuple of tuples of masks
        self.zero = zero
        self.neg = neg                      # tuple: additive inverse
        self.identities_mask = identities_mask
        self.one = one                      # designated identity or None
        self.units_mask = units_mask
        self.commutative_add = True
        self.hyperop_commutative = hyperop_commutative
        self.strongly_distributive = strongly_distributive
        self.name = name or f"ring{self.order}"
        self._memo: dict = {}               # per-ring caches (pure results)

    def __repr__(self):
        return f"<Hyperring {self.name} order={self.order}>"

    def add_of(self, x, y):
        return self.add[x][y]

    def neg_of(self, x):
        return self.neg[x]

    def hyp_mask(self, x, y):
        return self.hyp[x][y]

    def sumset(self, a, b):
        out = 0
        add = self.add
        for x in iter_bits(a):
            row = add[x]
            for y in iter_bits(b):
                out |= 1 << row[y]
        return out

    def subset_product(self, a, b):
        if a == 0 or b == 0:
            raise EmptyOperand("subset hyperproduct of an empty set")
        out = 0
        hyp = self.hyp
        for x in iter_bits(a):
            row = hyp[x]
            for y in iter_bits(b):
                out |= row[y]
        return out

    def sorted_product(self, elems: tuple[int, ...]) -> int:
        """Memoized hyperproduct of a sorted element tuple.

        Only valid for commutative hyperoperations; the scanners that
        enumerate multisets use this as their product cache.
        """
        memo = self._memo.setdefault("sorted_products", {})
        m = memo.get(elems)
        if m is None:
            if len(elems) == 1:
                m = 1 << elems[0]
            else:
                m = self.subset_product(self.sorted_product(elems[:-1]),
                                        1 << elems[-1])
            memo[elems] = m
        return m


def _as_tuple_table(table, order, what):
    rows = []
    if len(table) != order:
        raise ValueError(f"{what} table must be {order}x{order}")
    for row in table:
        row = tuple(row)
        if len(row) != order:
            raise ValueError(f"{what} table must be {order}x{order}")
        rows.append(row)
    return tuple(rows)


def validate_hyperring(add, hyp, *, name="", designate_one=None) -> Hyperring:
    """Validate tables exhaustively and return the Hyperring.

    ``add`` is an order x order element table, ``hyp`` an order x order
    table of element collections.  Checks run in a fixed order -- abelian
    group, nonempty cells, hyperoperation associativity, sign rule,
    distributivity -- and the first violated axiom raises with a witness.
    The commutativity of the hyperoperation and strong distributivity are
    computed flags, not axioms.
    """
    order = len(add)
    if order == 0:
        raise ValueError("empty carrier")
    add = _as_tuple_table(add, order, "add")
    for x in range(order):
        for y in range(order):
            v = add[x][y]
            if not isinstance(v, int) or not 0 <= v < order:
                raise ValueError(f"add[{x}][{y}] out of carrier range")

    # abelian group
    for x in range(order):
        for y in range(order):
            if add[x][y] != add[y][x]:
                raise NotAGroup(f"addition not commutative at ({x},{y})",
                                (x, y))
    for x in range(order):
        for y in range(order):
            for z in range(order):
                if add[add[x][y]][z] != add[x][add[y][z]]:
                    raise NotAGroup(
                        f"addition not associative at ({x},{y},{z})",
                        (x, y, z))
    zero = None
    for e in range(order):
        if all(add[e][x] == x for x in range(order)):
            zero = e
            break
    if zero is None:
        raise NotAGroup("no additive identity", ())
    neg = [None] * order
    for x in range(order):
        for y in range(order):
            if add[x][y] == zero:
                neg[x] = y
                break
        if neg[x] is None:
            raise NotAGroup(f"element {x} has no additive inverse", (x,))
    neg = tuple(neg)

    # hyperoperation cells
    if len(hyp) != order:
        raise ValueError(f"hyp table must be {order}x{order}")
    masks = []
    for x in range(order):
        if len(hyp[x]) != order:
            raise ValueError(f"hyp table must be {order}x{order}")
        row = []
        for y in range(order):
            cell = mask_of(hyp[x][y])
            if cell == 0:
                raise EmptyHyperproduct(f"hyp({x},{y}) is empty", (x, y))
            if cell >> order:
                raise ValueError(f"hyp[{x}][{y}] out of carrier range")
            row.append(cell)
        masks.append(tuple(row))
    hmask = tuple(masks)

    commutative = all(hmask[x][y] == hmask[y][x]
                      for x in range(order) for y in range(order))

    # associativity: U_{a in y o z} x o a == U_{b in x o y} b o z
    for x in range(order):
        for y in range(order):
            for z in range(order):
                left = 0
                for a in iter_bits(hmask[y][z]):
                    left |= hmask[x][a]
                right = 0
                for b in iter_bits(hmask[x][y]):
                    right |= hmask[b][z]
                if left != right:
                    raise NonAssociative(
                        f"hyperoperation not associative at ({x},{y},{z})",
                        (x, y, z))

    # sign rule: x o (-y) = (-x) o y = -(x o y)
    def _neg_mask(m):
        return mask_of(neg[t] for t in iter_bits(m))

    for x in range(order):
        for y in range(order):
            nm = _neg_mask(hmask[x][y])
            if hmask[x][neg[y]] != nm:
                raise SignRuleViolation(
                    f"x o (-y) != -(x o y) at ({x},{y})", (x, y))
            if not commutative and hmask[neg[x]][y] != nm:
                raise SignRuleViolation(
                    f"(-x) o y != -(x o y) at ({x},{y})", (x, y))

    # distributivity: x o (y+z) subset of x o y + x o z
    strongly = True
    for x in range(order):
        for y in range(order):
            for z in range(order):
                left = hmask[x][add[y][z]]
                right = 0
                for a in iter_bits(hmask[x][y]):
                    row = add[a]
                    for b in iter_bits(hmask[x][z]):
                        right |= 1 << row[b]
                if not is_subset(left, right):
                    raise NonDistributive(
                        f"x o (y+z) exceeds x o y + x o z at ({x},{y},{z})",
                        (x, y, z))
                if left != right:
                    strongly = False
                if not commutative:
                    left2 = hmask[add[y][z]][x]
                    right2 = 0
                    for a in iter_bits(hmask[y][x]):
                        row = add[a]
                        for b in iter_bits(hmask[z][x]):
                            right2 |= 1 << row[b]
                    if not is_subset(left2, right2):
                        raise NonDistributive(
                            f"(y+z) o x exceeds y o x + z o x at ({x},{y},{z})",
                            (x, y, z))
                    if left2 != right2:
                        strongly = False

    # identities: e with a in a o e for every a (both sides if needed)
    idmask = 0
    for e in range(order):
        if all(hmask[a][e] >> a & 1 for a in range(order)) and \
           (commutative or all(hmask[e][a] >> a & 1 for a in range(order))):
            idmask |= 1 << e
    if designate_one is not None:
        if not (idmask >> designate_one) & 1:
            raise ValueError(f"element {designate_one} is not an identity")
        one = designate_one
    else:
        one = elements(idmask)[0] if idmask else None

    units = 0
    if one is not None:
        for x in range(order):
            if any((hmask[x][y] >> one) & 1 for y in range(order)):
                units |= 1 << x

    return Hyperring(add, hmask, zero=zero, neg=neg, identities_mask=idmask,
                     one=one, units_mask=units, hyperop_commutative=commutative,
                     strongly_distributive=strongly, name=name)


def build_zmt(m: int, T, *, name=None, designate_one=None) -> Hyperring:
    """The hyperring on Z_m with a o b = {a*t*b mod m : t in T}.

    Associativity and distributivity hold for the whole family, but the
    tables are still validated rather than assumed.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    T = sorted({t % m for t in T})
    if not T:
        raise ValueError("T must be nonempty")
    add = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
    hyp = tuple(tuple(sorted({(i * t * j) % m for t in T}) for j in range(m))
                for i in range(m))
    if name is None:
        name = f"Z{m}T{{{','.join(map(str, T))}}}"
    return validate_hyperring(add, hyp, name=name, designate_one=designate_one)


def identity_elements(ring: HyperStructure) -> int:
    """Mask of all e with a in a o e for every a."""
    if isinstance(ring, Hyperring):
        return ring.identities_mask
    out = 0
    for e in ring.carrier():
        if all((ring.hyp_mask(a, e) >> a) & 1 for a in ring.carrier()):
            out |= 1 << e
    return out


def units(ring: HyperStructure) -> int:
    """Mask of unit elements; empty (and flagged via ring.one) without identity."""
    return ring.units_mask


def all_parenthesizations(ring: HyperStructure, seq: tuple[int, ...]) -> set[int]:
    """Every way to parenthesize the hyperproduct of ``seq`` (test oracle)."""
    if len(seq) == 1:
        return {1 << seq[0]}
    out = set()
    for cut in range(1, len(seq)):
        for left in all_parenthesizations(ring, seq[:cut]):
            for right in all_parenthesizations(ring, seq[cut:]):
                out.add(ring.subset_product(left, right))
    return out
