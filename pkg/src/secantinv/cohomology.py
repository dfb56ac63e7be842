"""Cohomology dimension calculus on symmetric products of curves.

Line bundles enter only through their cohomological data (genus, degree,
h0, h1), captured by :class:`LineBundleClass`.  The operations compute
dimensions of cohomology groups of:

* the determinant line bundle of the rank-m tautological (secant) sheaf on
  the m-th symmetric product ("N" family) and the invariant descent of the
  m-fold box power ("T" family), both given by exterior/symmetric powers of
  h0 and h1 of the input bundle;
* symmetric powers of the secant sheaf, whose positive-twist cohomology is
  C(g,i) copies of the Hilbert function of a lower-order secant variety;
* exterior powers of the secant sheaf twisted by a second bundle, a Kunneth
  convolution over two bundle classes;
* the canonical-twisted family, whose dimensions are -chi at negative twists.

All dimensions are exact nonnegative integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import AmbiguousBundle, DomainError, InternalMismatch
from .exactmath import binomial
from .secant_core import SecantInstance, hilbert_function, hilbert_polynomial

__all__ = [
    "LineBundleClass",
    "CohomologyTable",
    "TableEntry",
    "sym_dim",
    "wedge_dim",
    "coh_determinant_line",
    "coh_descent_line",
    "coh_sym_secant_sheaf",
    "higher_direct_image_ranks",
    "coh_wedge_secant_sheaf",
    "coh_canonical_twist",
    "line_bundle_table",
    "sym_secant_table",
    "wedge_secant_table",
    "canonical_twist_table",
]


@dataclass(frozen=True)
class LineBundleClass:
    """Cohomological class (genus, degree, h0, h1) of a line bundle on a curve.

    Riemann-Roch ties the fields together: h0 - h1 = degree - genus + 1.
    Negative degree forces h0 = 0; degree > 2g-2 forces h1 = 0.  In the
    special range 0 <= degree <= 2g-2 the degree does not determine h0/h1,
    so they must be supplied.
    """

    genus: int
    degree: int
    h0: int
    h1: int

    def __post_init__(self) -> None:
        g = self.genus
        if g < 0:
            raise DomainError(f"genus {g} must be nonnegative")
        if self.h0 < 0 or self.h1 < 0:
            raise DomainError(f"h0 = {self.h0}, h1 = {self.h1} must be nonnegative")
        if self.h0 - self.h1 != self.degree - g + 1:
            raise DomainError(
                f"h0 - h1 = {self.h0 - self.h1} violates Riemann-Roch "
                f"value {self.degree - g + 1}"
            )
        if self.degree < 0 and self.h0 != 0:
            raise DomainError(f"degree {self.degree} < 0 forces h0 = 0, got {self.h0}")
        if self.degree > 2 * g - 2 and self.h1 != 0:
            raise DomainError(
                f"degree {self.degree} > 2g-2 = {2 * g - 2} forces h1 = 0, got {self.h1}"
            )

    @classmethod
    def nonspecial(cls, genus: int, degree: int) -> "LineBundleClass":
        """The class of any bundle with degree > 2g-2 (h1 = 0 is forced)."""
        if degree <= 2 * genus - 2:
            raise DomainError(
                f"degree {degree} is not forced nonspecial for genus {genus}"
            )
        return cls(genus, degree, degree - genus + 1, 0)

    @classmethod
    def trivial(cls, genus: int) -> "LineBundleClass":
        return cls(genus, 0, 1, genus)

    @classmethod
    def canonical(cls, genus: int) -> "LineBundleClass":
        return cls(genus, 2 * genus - 2, genus, 1)

    @classmethod
    def from_degree(
        cls, genus: int, degree: int, h1: Optional[int] = None
    ) -> "LineBundleClass":
        """Build a class from its degree, requiring h1 only when the degree
        does not force it (the special range 0 <= degree <= 2g-2)."""
        if degree > 2 * genus - 2:
            if h1 not in (None, 0):
                raise DomainError(f"degree {degree} > 2g-2 forces h1 = 0, got {h1}")
            return cls.nonspecial(genus, degree)
        if degree < 0:
            forced = genus - 1 - degree
            if h1 not in (None, forced):
                raise DomainError(f"degree {degree} < 0 forces h1 = {forced}, got {h1}")
            return cls(genus, degree, 0, forced)
        if h1 is None:
            raise AmbiguousBundle(
                f"degree {degree} lies in the special range 0..{2 * genus - 2} "
                f"for genus {genus}; supply h1 explicitly"
            )
        return cls(genus, degree, degree - genus + 1 + h1, h1)


def sym_dim(n: int, j: int) -> int:
    """Dimension C(n+j-1, j) of the j-th symmetric power of an n-space
    (0 for j < 0, and 1 for j = 0 even when n = 0)."""
    if n < 0:
        raise ValueError("space dimension must be nonnegative")
    if j < 0:
        return 0
    return binomial(n + j - 1, j)


def wedge_dim(n: int, j: int) -> int:
    """Dimension C(n, j) of the j-th exterior power of an n-space."""
    if n < 0:
        raise ValueError("space dimension must be nonnegative")
    if j < 0:
        return 0
    return binomial(n, j)


def coh_determinant_line(points: int, bundle: LineBundleClass, i: int) -> int:
    """h^i on the ``points``-th symmetric product of the determinant of the
    tautological sheaf of ``bundle``: wedge^{m-i} h0 times sym^i h1."""
    if points < 1:
        raise DomainError(f"points {points} must be positive")
    return wedge_dim(bundle.h0, points - i) * sym_dim(bundle.h1, i)


def coh_descent_line(points: int, bundle: LineBundleClass, i: int) -> int:
    """h^i on the ``points``-th symmetric product of the invariant descent of
    the box power of ``bundle``: sym^{m-i} h0 times wedge^i h1."""
    if points < 1:
        raise DomainError(f"points {points} must be positive")
    return sym_dim(bundle.h0, points - i) * wedge_dim(bundle.h1, i)


def coh_sym_secant_sheaf(inst: SecantInstance, twist: int, i: int) -> int:
    """h^i of the twist-th symmetric power of the secant sheaf on C_{k+1}.

    For twist > 0 this is C(g, i) copies of the Hilbert function of the
    order-(k-i) secant variety for 0 <= i <= k, and 0 for i = k+1; at
    twist 0 it is C(g, i) for 0 <= i <= k+1 (cohomology of the structure
    sheaf of the symmetric product).
    """
    if twist < 0:
        raise DomainError(f"coh_sym_secant_sheaf needs twist >= 0, got {twist}")
    g, d, k = inst.genus, inst.degree, inst.order
    if twist == 0:
        return binomial(g, i) if 0 <= i <= k + 1 else 0
    if not 0 <= i <= k:
        return 0
    factor = binomial(g, i)
    if factor == 0:
        return 0
    return factor * hilbert_function(SecantInstance(g, d, k - i), twist)


def higher_direct_image_ranks(inst: SecantInstance) -> list[tuple[int, int, int]]:
    """Nonzero higher direct images of the structure sheaf under the secant
    bundle's resolution map, as (i, multiplicity, support_order) triples:
    multiplicity C(g, i) copies supported on the order-(k-i) secant variety.
    Entries with multiplicity 0 are omitted; everything vanishes for i > k.
    """
    g, k = inst.genus, inst.order
    out = []
    for i in range(k + 1):
        mult = binomial(g, i)
        if mult > 0:
            out.append((i, mult, k - i))
    return out


def _product_class(
    left: LineBundleClass,
    right: LineBundleClass,
    supplied: Optional[LineBundleClass],
) -> LineBundleClass:
    """Class of the tensor product, derived when the degree forces it."""
    if left.genus != right.genus:
        raise DomainError(
            f"bundles have different genera {left.genus} and {right.genus}"
        )
    g = left.genus
    total = left.degree + right.degree
    if supplied is not None:
        if supplied.genus != g or supplied.degree != total:
            raise DomainError(
                f"supplied product class has (genus, degree) = "
                f"({supplied.genus}, {supplied.degree}), expected ({g}, {total})"
            )
        return supplied
    if total > 2 * g - 2 or total < 0:
        return LineBundleClass.from_degree(g, total)
    raise AmbiguousBundle(
        f"tensor-product degree {total} lies in the special range "
        f"0..{2 * g - 2}; supply its class explicitly"
    )


def coh_wedge_secant_sheaf(
    points: int,
    twist: int,
    bundle: LineBundleClass,
    twisting: LineBundleClass,
    i: int,
    product: Optional[LineBundleClass] = None,
) -> int:
    """h^i on C_points of the twist-th exterior power of the secant sheaf of
    ``bundle``, tensored with the descent line bundle of ``twisting``.

    The dimension is the Kunneth convolution over p + q = i of
    sym^{points-twist-p} h0(twisting) * sym^q h1(product) *
    wedge^p h1(twisting) * wedge^{twist-q} h0(product), where ``product`` is
    the class of the tensor product of the two bundles.  That class is
    derived when its degree forces it and must be supplied otherwise.
    No positivity is required of either input bundle.
    """
    if points < 1:
        raise DomainError(f"points {points} must be positive")
    if not 1 <= twist <= points:
        raise DomainError(f"twist {twist} must lie in 1..{points}")
    if not 0 <= i <= points:
        raise DomainError(f"cohomological index {i} must lie in 0..{points}")
    prod = _product_class(bundle, twisting, product)
    total = 0
    for p in range(i + 1):
        q = i - p
        total += (
            sym_dim(twisting.h0, points - twist - p)
            * sym_dim(prod.h1, q)
            * wedge_dim(twisting.h1, p)
            * wedge_dim(prod.h0, twist - q)
        )
    return total


def coh_canonical_twist(inst: SecantInstance, twist: int, i: int) -> int:
    """h^i of the canonical-twisted symmetric powers for twist > 0: -chi at
    twist -twist for i = 0, the same for the next lower order at i = 1
    (zero when k = 0), and 0 for i >= 2."""
    if twist <= 0:
        raise DomainError(f"coh_canonical_twist needs twist > 0, got {twist}")
    g, d, k = inst.genus, inst.degree, inst.order
    if i == 0:
        value = -hilbert_polynomial(inst)(-twist)
    elif i == 1:
        if k == 0:
            return 0
        value = -hilbert_polynomial(SecantInstance(g, d, k - 1))(-twist)
    else:
        return 0
    if value.denominator != 1 or value < 0:
        raise InternalMismatch(
            f"-chi(-{twist}) = {value} is not a nonnegative integer "
            f"for (g, d, k) = ({g}, {d}, {k})"
        )
    return int(value)


@dataclass(frozen=True)
class TableEntry:
    """One table cell: cohomological index i, twist (None when the family
    has no twist parameter), and the dimension."""

    i: int
    twist: Optional[int]
    dim: int


@dataclass(frozen=True)
class CohomologyTable:
    """A family tag, the parameters as supplied, and the dimension entries.

    Entries cover the full cohomological range of the family with explicit
    zeros, so consumers never guess the support.
    """

    family: str
    params: tuple[tuple[str, str], ...]
    entries: tuple[TableEntry, ...]

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "params": {key: value for key, value in self.params},
            "entries": [
                {"i": e.i, "l": e.twist, "dim": str(e.dim)} for e in self.entries
            ],
        }

    def csv_rows(self) -> list[tuple[str, str, str]]:
        return [
            (str(e.i), "" if e.twist is None else str(e.twist), str(e.dim))
            for e in self.entries
        ]


def _params(items: Iterable[tuple[str, object]]) -> tuple[tuple[str, str], ...]:
    return tuple((key, str(value)) for key, value in items)


def line_bundle_table(
    family: str, points: int, bundle: LineBundleClass
) -> CohomologyTable:
    """Table of h^i, i = 0..points, for the "N" (determinant) or "T"
    (descent) line-bundle family on the points-th symmetric product."""
    if family == "N":
        op = coh_determinant_line
    elif family == "T":
        op = coh_descent_line
    else:
        raise DomainError(f"unknown line-bundle family {family!r}, expected N or T")
    entries = tuple(
        TableEntry(i, None, op(points, bundle, i)) for i in range(points + 1)
    )
    return CohomologyTable(
        family,
        _params(
            [
                ("points", points),
                ("genus", bundle.genus),
                ("bundle_degree", bundle.degree),
                ("h0", bundle.h0),
                ("h1", bundle.h1),
            ]
        ),
        entries,
    )


def sym_secant_table(inst: SecantInstance, twist: int) -> CohomologyTable:
    entries = tuple(
        TableEntry(i, twist, coh_sym_secant_sheaf(inst, twist, i))
        for i in range(inst.order + 2)
    )
    return CohomologyTable(
        "SymE",
        _params(
            [
                ("genus", inst.genus),
                ("degree", inst.degree),
                ("order", inst.order),
                ("twist", twist),
            ]
        ),
        entries,
    )


def wedge_secant_table(
    points: int,
    twist: int,
    bundle: LineBundleClass,
    twisting: LineBundleClass,
    product: Optional[LineBundleClass] = None,
) -> CohomologyTable:
    entries = tuple(
        TableEntry(
            i, twist, coh_wedge_secant_sheaf(points, twist, bundle, twisting, i, product)
        )
        for i in range(points + 1)
    )
    return CohomologyTable(
        "WedgeE",
        _params(
            [
                ("points", points),
                ("twist", twist),
                ("genus", bundle.genus),
                ("bundle_degree", bundle.degree),
                ("bundle_h1", bundle.h1),
                ("twisting_degree", twisting.degree),
                ("twisting_h1", twisting.h1),
            ]
        ),
        entries,
    )


def canonical_twist_table(inst: SecantInstance, twist: int) -> CohomologyTable:
    entries = tuple(
        TableEntry(i, twist, coh_canonical_twist(inst, twist, i))
        for i in range(inst.order + 2)
    )
    return CohomologyTable(
        "CanonicalSymE",
        _params(
            [
                ("genus", inst.genus),
                ("degree", inst.degree),
                ("order", inst.order),
                ("twist", twist),
            ]
        ),
        entries,
    )
