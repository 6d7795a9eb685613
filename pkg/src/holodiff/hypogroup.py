"""p-hypo-elementary groups, their uniserial modules and Brauer characters.

A group H = P x|_chi C has elements (i mod p^n, j mod c) multiplied by
(i, j)(i', j') = (i + u^j i', j + j'). Its indecomposable modules over an
algebraically closed field are the uniserials U_{a,b}: socle S_a, length b,
ascending factors S_a, S_{a - a_chi}, S_{a - 2 a_chi}, ...
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Hashable, NamedTuple

from sympy import isprime, n_order, primitive_root

from holodiff.errors import GroupError, IntegralityError, VerificationError
from holodiff.exactnum import CycloNumber, Scalar

logger = logging.getLogger(__name__)

Element = tuple[int, int]


@dataclass(frozen=True)
class ClassTable:
    """Class structure on which Brauer characters are evaluated.

    ``families`` partitions the class indices into Galois-stable groups; the
    contribution of each family to an inner product is rational on its own.
    """

    name: str
    order: int
    classes: tuple[Hashable, ...]
    names: tuple[str, ...]
    sizes: tuple[int, ...]
    inverse: tuple[int, ...]
    families: tuple[tuple[int, ...], ...]
    identity: int = 0

    def index(self, label: Hashable) -> int:
        """Return the position of a class label."""
        return self.classes.index(label)

    @property
    def regular_count(self) -> int:
        """Number of p-regular elements."""
        return sum(self.sizes)


class IndecLabel(NamedTuple):
    """The uniserial module with socle S_socle and the given length."""

    socle: int
    length: int


def standard_action_unit(p: int, n: int, order: int) -> int:
    """Return a unit of multiplicative order ``order`` modulo p^n (``order`` | p-1)."""
    if n == 0:
        return 1
    if (p - 1) % order:
        raise GroupError(f"order {order} does not divide p-1 = {p - 1}")
    modulus = p**n
    g = primitive_root(modulus)
    return pow(g, (p - 1) * p ** (n - 1) // order, modulus)


@dataclass(frozen=True)
class HypoGroup:
    """The group P x|_chi C with #P = p^n, #C = c and chi(rho) = zeta_c^chi_index."""

    p: int
    n: int
    c: int
    chi_index: int = 0
    action_unit: int = 1

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise GroupError(f"p = {self.p} is not prime")
        if self.n < 0:
            raise GroupError(f"n = {self.n} must be non-negative")
        if self.c < 1:
            raise GroupError(f"c = {self.c} must be positive")
        if gcd(self.c, self.p) != 1:
            raise GroupError(f"c = {self.c} is not coprime to p = {self.p}")
        object.__setattr__(self, "chi_index", self.chi_index % self.c)
        if (self.p - 1) % self.chi_order:
            raise GroupError(f"chi has order {self.chi_order}, which does not divide p-1 = {self.p - 1}")
        if self.n == 0:
            object.__setattr__(self, "action_unit", 1)
            return
        u = self.action_unit % self.p_order
        object.__setattr__(self, "action_unit", u)
        if gcd(u, self.p) != 1:
            raise GroupError(f"action unit {u} is not a unit modulo {self.p_order}")
        if n_order(u, self.p_order) != self.chi_order:
            raise GroupError(
                f"action unit {u} has order {n_order(u, self.p_order)} modulo {self.p_order}, expected {self.chi_order}"
            )

    @classmethod
    def standard(cls, p: int, n: int, c: int, chi_index: int = 0) -> HypoGroup:
        """Build the group with a canonical choice of action unit."""
        chi_order = c // gcd(chi_index % c, c)
        if (p - 1) % chi_order:
            raise GroupError(f"chi has order {chi_order}, which does not divide p-1 = {p - 1}")
        return cls(p, n, c, chi_index, standard_action_unit(p, n, chi_order))

    @property
    def p_order(self) -> int:
        """Order of P."""
        return self.p**self.n

    @property
    def order(self) -> int:
        """Order of H."""
        return self.p_order * self.c

    @property
    def chi_order(self) -> int:
        """Order of chi."""
        return self.c // gcd(self.chi_index, self.c)

    @cached_property
    def _unit_powers(self) -> tuple[int, ...]:
        return tuple(pow(self.action_unit, j, self.p_order) for j in range(self.c))

    def elements(self) -> Iterator[Element]:
        """Iterate over all (i, j)."""
        for i in range(self.p_order):
            for j in range(self.c):
                yield (i, j)

    def multiply(self, x: Element, y: Element) -> Element:
        """Return the product x*y."""
        return ((x[0] + self._unit_powers[x[1]] * y[0]) % self.p_order, (x[1] + y[1]) % self.c)

    def inverse(self, x: Element) -> Element:
        """Return the inverse of x."""
        j = (-x[1]) % self.c
        return ((-self._unit_powers[j] * x[0]) % self.p_order, j)

    def conjugate(self, x: Element, g: Element) -> Element:
        """Return x g x^-1."""
        return self.multiply(self.multiply(x, g), self.inverse(x))

    def element_order(self, x: Element) -> int:
        """Return the order of x."""
        i, j = x
        k = self.c // gcd(j, self.c)
        step = self._unit_powers[j]
        s = sum(pow(step, t, self.p_order) for t in range(k)) % self.p_order
        y = (i * s) % self.p_order
        return k * (self.p_order // gcd(y, self.p_order))

    def is_p_regular(self, x: Element) -> bool:
        """Return whether the order of x is prime to p."""
        return self.element_order(x) % self.p != 0

    def class_of(self, j: int) -> frozenset[Element]:
        """Return the conjugacy class of the p-regular element (0, j)."""
        return frozenset(self.conjugate((i, 0), (0, j % self.c)) for i in range(self.p_order))

    @cached_property
    def class_table(self) -> ClassTable:
        """Class data of the p-regular classes, represented by (0, j).

        Raises ``VerificationError`` if these classes miss a p-regular element.
        """
        reps = tuple((0, j) for j in range(self.c) if self.is_p_regular((0, j)))
        sizes = tuple(len(self.class_of(j)) for _, j in reps)
        regular = sum(1 for x in self.elements() if self.is_p_regular(x))
        if len(reps) != self.c or sum(sizes) != regular:
            raise VerificationError(f"classes of rho^j hold {sum(sizes)} of the {regular} p-regular elements")
        return ClassTable(
            name=f"H({self.p}^{self.n}:{self.c},{self.chi_index})",
            order=self.order,
            classes=reps,
            names=tuple(f"rho^{j}" for j in range(self.c)),
            sizes=sizes,
            inverse=tuple((-j) % self.c for j in range(self.c)),
            families=(tuple(range(self.c)),),
        )

    def p_regular_classes(self) -> list[frozenset[Element]]:
        """Return the p-regular classes, ordered by j."""
        return [self.class_of(j) for j in range(self.c)]

    def chi_shift(self, a: int, i: int = 1) -> int:
        """Return chi^{-i}(a) = a - i*a_chi mod c."""
        return (a - i * self.chi_index) % self.c

    def labels(self) -> list[IndecLabel]:
        """Return the #H labels of indecomposable modules."""
        return [IndecLabel(a, b) for a in range(self.c) for b in range(1, self.p_order + 1)]

    def quotient(self, n_I: int) -> HypoGroup:
        """Return H/I for the subgroup I of P of order p^n_I."""
        if not 0 <= n_I <= self.n:
            raise GroupError(f"n_I = {n_I} outside [0, {self.n}]")
        k = self.n - n_I
        return HypoGroup(self.p, k, self.c, self.chi_index, self.action_unit % self.p**k if k else 1)

    def tame_subgroup(self, e: int) -> tuple[Element, ...]:
        """Return the subgroup of C of order e."""
        if e < 1 or self.c % e:
            raise GroupError(f"{e} does not divide c = {self.c}")
        step = self.c // e
        return tuple((0, step * k) for k in range(e))


@dataclass(frozen=True, eq=False)
class BrauerChar:
    """A class function on the p-regular classes of a ``ClassTable``."""

    table: ClassTable
    values: tuple[CycloNumber, ...]

    __hash__ = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.table.classes):
            raise ValueError(f"expected {len(self.table.classes)} values, got {len(self.values)}")

    @classmethod
    def zero(cls, table: ClassTable) -> BrauerChar:
        """Return the zero class function."""
        return cls(table, tuple(CycloNumber.rational(0) for _ in table.classes))

    @classmethod
    def constant(cls, table: ClassTable, value: Scalar) -> BrauerChar:
        """Return the class function with one rational value everywhere."""
        return cls(table, tuple(CycloNumber.rational(value) for _ in table.classes))

    @classmethod
    def from_elements(cls, group: HypoGroup, func: Callable[[Element], CycloNumber]) -> BrauerChar:
        """Evaluate ``func`` on every p-regular element and check it is a class function."""
        values = []
        for cls_members in group.p_regular_classes():
            members = sorted(cls_members)
            first = func(members[0])
            for g in members[1:]:
                if func(g) != first:
                    raise ValueError(f"function is not constant on the class of {members[0]}")
            values.append(first)
        return cls(group.class_table, tuple(values))

    @classmethod
    def combine(cls, table: ClassTable, terms: Iterable[tuple[Scalar, BrauerChar]]) -> BrauerChar:
        """Return sum(coeff * char) with one reduction per class."""
        terms = list(terms)
        for _, char in terms:
            if char.table != table:
                raise ValueError("characters live on different class tables")
        values = tuple(
            CycloNumber.sum(char.values[k].scale(coeff) for coeff, char in terms if coeff)
            for k in range(len(table.classes))
        )
        return cls(table, values)

    def _check(self, other: BrauerChar) -> None:
        if self.table != other.table:
            raise ValueError(f"characters of {self.table.name} and {other.table.name} cannot be mixed")

    def __add__(self, other: object) -> BrauerChar:
        if not isinstance(other, BrauerChar):
            return NotImplemented
        self._check(other)
        return BrauerChar(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: object) -> BrauerChar:
        if not isinstance(other, BrauerChar):
            return NotImplemented
        self._check(other)
        return BrauerChar(self.table, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> BrauerChar:
        return BrauerChar(self.table, tuple(-a for a in self.values))

    def __mul__(self, other: object) -> BrauerChar:
        if isinstance(other, (int, Fraction)):
            return BrauerChar(self.table, tuple(a.scale(other) for a in self.values))
        if isinstance(other, BrauerChar):
            self._check(other)
            return BrauerChar(self.table, tuple(a * b for a, b in zip(self.values, other.values)))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BrauerChar):
            return NotImplemented
        return self.table == other.table and all(a == b for a, b in zip(self.values, other.values))

    def __getitem__(self, label: Hashable) -> CycloNumber:
        return self.values[self.table.index(label)]

    def dual(self) -> BrauerChar:
        """Return the character of the dual module, the value at the inverse class."""
        return BrauerChar(self.table, tuple(self.values[k] for k in self.table.inverse))

    def degree(self) -> Fraction:
        """Return the value at the identity."""
        return self.values[self.table.identity].to_rational()

    def to_json(self) -> dict:
        """Return class name -> value."""
        return {name: value.to_json() for name, value in zip(self.table.names, self.values)}


def inner_product(x: BrauerChar, y: BrauerChar) -> Fraction:
    """Return (1/#G) sum over p-regular g of x(g^-1) y(g)."""
    if x.table != y.table:
        raise ValueError(f"characters of {x.table.name} and {y.table.name} cannot be paired")
    table = x.table
    total = Fraction(0)
    for family in table.families:
        part = CycloNumber.dot((x.values[table.inverse[k]], y.values[k], table.sizes[k]) for k in family)
        total += part.to_rational()
    return total / table.order


@lru_cache(maxsize=4096)
def simple_char(group: HypoGroup, a: int) -> BrauerChar:
    """Return the character of S_a: zeta_c^{a j} at every p-regular element (i, j)."""
    return BrauerChar.from_elements(group, lambda x: CycloNumber.zeta(group.c, a * x[1]))


def _factor_sum(group: HypoGroup, socle: int, length: int) -> BrauerChar:
    counts = Counter(group.chi_shift(socle, i) for i in range(length))
    return BrauerChar.combine(group.class_table, ((m, simple_char(group, a)) for a, m in counts.items()))


@lru_cache(maxsize=4096)
def uniserial_char(group: HypoGroup, label: IndecLabel) -> BrauerChar:
    """Return the character of U_{a,b}: the sum of its b composition factors."""
    a, b = label
    if not 1 <= b <= group.p_order:
        raise ValueError(f"length {b} outside [1, {group.p_order}]")
    return _factor_sum(group, a, b)


def projective_char(group: HypoGroup, a: int) -> BrauerChar:
    """Return the character of the projective cover of S_a."""
    return uniserial_char(group, IndecLabel(a % group.c, group.p_order))


def regular_char(group: HypoGroup) -> BrauerChar:
    """Return the character of k[H]."""
    table = group.class_table
    values = [CycloNumber.rational(0)] * len(table.classes)
    values[table.identity] = CycloNumber.rational(group.order)
    return BrauerChar(table, tuple(values))


@lru_cache(maxsize=4096)
def induced_char(group: HypoGroup, e: int, f: int) -> BrauerChar:
    """Induce from the order-e subgroup of C the character rho^{c/e} -> zeta_e^f.

    The value at each class is summed over all group elements x, testing
    whether x g x^-1 lies in the subgroup.
    """
    step = group.c // e if e >= 1 and group.c % e == 0 else None
    if step is None:
        raise GroupError(f"{e} does not divide c = {group.c}")
    values = []
    for g in group.class_table.classes:
        counts: Counter[int] = Counter()
        for x in group.elements():
            i, j = group.conjugate(x, g)
            if i == 0 and j % step == 0:
                counts[(f * (j // step)) % e] += 1
        values.append(
            CycloNumber.sum(CycloNumber.zeta(e, k).scale(Fraction(m, e)) for k, m in counts.items())
        )
    return BrauerChar(group.class_table, tuple(values))


@dataclass(frozen=True)
class Decomp:
    """Multiplicities of indecomposable modules U_{a,b}."""

    counts: Mapping[IndecLabel, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        normal: dict[IndecLabel, int] = {}
        for label, mult in sorted(self.counts.items()):
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {tuple(label)}")
            if mult:
                normal[IndecLabel(*label)] = int(mult)
        object.__setattr__(self, "counts", normal)

    def __add__(self, other: Decomp) -> Decomp:
        merged = Counter(self.counts)
        merged.update(other.counts)
        return Decomp(dict(merged))

    def get(self, socle: int, length: int) -> int:
        """Return the multiplicity of U_{socle,length}."""
        return self.counts.get(IndecLabel(socle, length), 0)

    def dimension(self) -> int:
        """Return the total dimension."""
        return sum(label.length * mult for label, mult in self.counts.items())

    def is_projective_only(self, group: HypoGroup) -> bool:
        """Return whether every summand is projective over ``group``."""
        return all(label.length == group.p_order for label in self.counts)

    def rows(self) -> list[dict[str, int]]:
        """Return report rows sorted by (socle, length)."""
        return [
            {"socle": label.socle, "length": label.length, "mult": mult, "dim": mult * label.length}
            for label, mult in self.counts.items()
        ]


def decomp_char(group: HypoGroup, decomp: Decomp) -> BrauerChar:
    """Return the Brauer character of a direct sum of uniserials."""
    return BrauerChar.combine(
        group.class_table, ((mult, uniserial_char(group, label)) for label, mult in decomp.counts.items())
    )


def decompose_projective(char: BrauerChar, group: HypoGroup) -> Decomp:
    """Write the character of a projective module as a sum of projective covers."""
    counts = {}
    for a in range(group.c):
        mult = inner_product(char, simple_char(group, a))
        if mult.denominator != 1 or mult < 0:
            raise IntegralityError(f"projective cover of S_{a} occurs {mult} times in {group.class_table.name}")
        counts[IndecLabel(a, group.p_order)] = int(mult)
    decomp = Decomp(counts)
    if decomp_char(group, decomp) != char:
        raise VerificationError(f"character is not a sum of projective characters of {group.class_table.name}")
    return decomp
