"""Almost simple groups with socle PSL(2,q) and their exact degree sets.

A group S <= H <= Aut(S) for S = PSL(2, p^f) is identified by the subgroup
of Out(S) it projects onto.  Out(S) is generated by the field automorphism
phi of order f, together with the diagonal automorphism delta of order 2
when p is odd, so Out(S) is C_f for p = 2 and C2 x C_f for p odd.  Every
subgroup of C2 x C_f is exactly one of

  * <phi^(f/d)>                  UNTWISTED, one per divisor d of f;
  * <delta> x <phi^(f/d)>        WITH_DIAGONAL, one per divisor d of f;
  * <delta * phi^(f/d)>, d even  TWISTED (for odd d this collapses into
                                 the WITH_DIAGONAL subgroup of the same d).

Character degrees are computed by the closed form for cd(H): with
Gamma = PGL(2,q) when delta itself lies in H and Gamma = S otherwise, and
d = |H : Gamma| = 2^a * m with m odd,

    cd(H) = {1, q, (q+eps)/2} u {(q-1)*2^a*i : i | m} u {(q+1)*j : j | d},

subject to five exceptional removals at small characteristic (see
``character_degrees``).  Note the membership convention: a TWISTED
subgroup never contains delta itself (an even power of delta*phi^(f/d) is
a pure field automorphism, an odd power keeps the delta component tied to
a nontrivial field part), so it gets Gamma = S and no (q+eps)/2 degree.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .arithmetic import MAX_VALUE, divisors, is_prime, prime_power_decompose


class OuterKind(enum.Enum):
    UNTWISTED = "untwisted"
    WITH_DIAGONAL = "with_diagonal"
    TWISTED = "twisted"


_KIND_ORDER = {kind: i for i, kind in enumerate(OuterKind)}


@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p**f with q >= 4."""

    p: int
    f: int
    q: int = 0

    def __post_init__(self) -> None:
        if self.f < 1:
            raise ValueError(f"exponent must be positive, got {self.f}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        q = self.p**self.f
        if self.q == 0:
            object.__setattr__(self, "q", q)
        elif self.q != q:
            raise ValueError(f"inconsistent prime power: {self.p}**{self.f} != {self.q}")
        if self.q < 4:
            raise ValueError(f"q = {self.q} < 4 admits no almost simple group here")
        if self.q >= MAX_VALUE:
            raise OverflowError(f"q = {self.q} is out of range: must be below 2**63")

    @classmethod
    def from_value(cls, q: int) -> "PrimePower":
        decomp = prime_power_decompose(q)
        if decomp is None:
            raise ValueError(f"{q} is not a prime power")
        return cls(*decomp)


@dataclass(frozen=True)
class OuterSubgroup:
    """A subgroup of Out(PSL(2,q)), in canonical (kind, d) form."""

    kind: OuterKind
    d: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")
        if self.kind is OuterKind.TWISTED and self.d % 2:
            raise ValueError("a twisted subgroup needs even d; odd d contains delta")

    @property
    def is_trivial(self) -> bool:
        return self.kind is OuterKind.UNTWISTED and self.d == 1


@dataclass(frozen=True)
class GroupDescriptor:
    """One group H with S <= H <= Aut(S), S = PSL(2,q)."""

    q: PrimePower
    outer: OuterSubgroup

    def __post_init__(self) -> None:
        if self.q.f % self.outer.d:
            raise ValueError(f"d = {self.outer.d} does not divide f = {self.q.f}")
        if self.q.p == 2 and self.outer.kind is not OuterKind.UNTWISTED:
            raise ValueError("no diagonal automorphism in characteristic 2")

    @property
    def is_trivial(self) -> bool:
        return self.outer.is_trivial

    def sort_key(self) -> tuple[int, int, int]:
        return (self.q.q, _KIND_ORDER[self.outer.kind], self.outer.d)


@dataclass(frozen=True)
class WhiteParameters:
    """Index data d = |H : Gamma| = 2**a * m driving the degree formula."""

    gamma_is_pgl: bool
    d: int
    a: int
    m: int


def epsilon(q: PrimePower) -> int:
    """(-1)**((q-1)/2): +1 when q = 1 (mod 4), -1 when q = 3 (mod 4).

    Defined only in odd characteristic.
    """
    if q.p == 2:
        raise ValueError("epsilon is undefined in characteristic 2")
    return 1 if q.q % 4 == 1 else -1


def enumerate_outer_subgroups(q: PrimePower, include_trivial: bool) -> list[OuterSubgroup]:
    """The full subgroup lattice of Out(PSL(2,q)), canonically and without
    duplicates; ``include_trivial=False`` drops only the trivial subgroup.

    Order: untwisted by ascending d, then with-diagonal, then twisted.
    """
    divs = divisors(q.f)
    subs = [OuterSubgroup(OuterKind.UNTWISTED, d) for d in divs if include_trivial or d > 1]
    if q.p != 2:
        subs.extend(OuterSubgroup(OuterKind.WITH_DIAGONAL, d) for d in divs)
        subs.extend(OuterSubgroup(OuterKind.TWISTED, d) for d in divs if d % 2 == 0)
    return subs


def white_parameters(g: GroupDescriptor) -> WhiteParameters:
    """Gamma and d = |H : Gamma| = 2**a * m for the degree formula.

    Gamma = PGL(2,q) exactly when delta lies in H, i.e. for WITH_DIAGONAL
    subgroups; both UNTWISTED and TWISTED subgroups give Gamma = S.  In all
    three cases |H : Gamma| equals the descriptor's d.
    """
    d = g.outer.d
    a = (d & -d).bit_length() - 1
    return WhiteParameters(g.outer.kind is OuterKind.WITH_DIAGONAL, d, a, d >> a)


def degree_families(g: GroupDescriptor) -> tuple[list[int], list[int], list[int]]:
    """The three generating families of cd(H), after exceptional removals.

    Returns (core, minus, plus) where core is {1, q} plus (q+eps)/2 when it
    survives, minus is the (q-1)*2^a*i family, and plus is the (q+1)*j
    family.  cd(H) is their union; keeping the families apart exposes the
    divisibility structure the classification arguments rely on.
    """
    pp = g.q
    q, p, f = pp.q, pp.p, pp.f
    params = white_parameters(g)
    kind = g.outer.kind
    d, a, m = params.d, params.a, params.m

    core = [1, q]
    if p != 2 and kind is OuterKind.UNTWISTED:
        core.append((q + epsilon(pp)) // 2)  # removed for every H outside S<phi>

    # The named degenerations the exceptional removals speak about.  S<phi>
    # only counts as such for f > 1 (otherwise it is S itself), and the full
    # automorphism group in odd characteristic is PGL(2,q).<phi>.
    is_field_ext = kind is OuterKind.UNTWISTED and d == f and f > 1
    is_full_aut = kind is OuterKind.WITH_DIAGONAL and d == f
    is_full_twist = kind is OuterKind.TWISTED and d == f

    i_values = set(divisors(m))
    j_values = set(divisors(d))
    if f % 2 and p == 3 and is_field_ext:
        i_values.discard(1)
    if f % 2 and p == 3 and is_full_aut:
        j_values.discard(1)
    if f % 2 and p in (2, 3, 5) and is_field_ext:
        j_values.discard(1)
    if f % 4 == 2 and p in (2, 3) and (is_field_ext or is_full_twist):
        j_values.discard(2)

    shift = 1 << a
    minus = [(q - 1) * shift * i for i in sorted(i_values)]
    plus = [(q + 1) * j for j in sorted(j_values)]
    return core, minus, plus


def character_degrees(g: GroupDescriptor) -> list[int]:
    """The irreducible character degrees of H, as a sorted deduplicated list.

    Removals act on individual (i, j) indices, not on values: a degree
    survives when another family independently produces the same number.
    Raises OverflowError if any degree would reach 2**63.
    """
    core, minus, plus = degree_families(g)
    degrees = sorted({*core, *minus, *plus})
    if degrees[-1] >= MAX_VALUE:
        raise OverflowError(f"degree {degrees[-1]} is out of range for q = {g.q.q}")
    return degrees


def pgl_descriptor(q: PrimePower) -> GroupDescriptor:
    """Descriptor for PGL(2,q); in characteristic 2 this is PSL(2,q) itself."""
    kind = OuterKind.UNTWISTED if q.p == 2 else OuterKind.WITH_DIAGONAL
    return GroupDescriptor(q, OuterSubgroup(kind, 1))


def group_name(g: GroupDescriptor) -> str:
    """Structure name such as PGL(2,9) or PSL(2,9).<delta*phi^1>."""
    q, f, d = g.q.q, g.q.f, g.outer.d
    if g.outer.kind is OuterKind.UNTWISTED:
        return f"PSL(2,{q})" if d == 1 else f"PSL(2,{q}).<phi^{f // d}>"
    if g.outer.kind is OuterKind.WITH_DIAGONAL:
        return f"PGL(2,{q})" if d == 1 else f"PGL(2,{q}).<phi^{f // d}>"
    return f"PSL(2,{q}).<delta*phi^{f // d}>"


class OuterExpressionError(ValueError):
    """Invalid generator expression; carries the 0-based character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(r"delta(?:\*phi\^(\d+))?|phi\^(\d+)")


def parse_outer(expression: str, q: PrimePower) -> OuterSubgroup:
    """Parse a comma-separated generator list into a canonical subgroup.

    Grammar: tokens ``delta``, ``phi^K`` and ``delta*phi^K`` with
    1 <= K <= f.  The generated subgroup of C2 x C_f is computed by closure
    and reduced to its canonical (kind, d); an empty list yields the
    trivial subgroup (H = S).
    """
    f = q.f
    generators: list[tuple[int, int]] = []
    offset = 0
    pieces = expression.split(",")
    for piece in pieces:
        token = piece.strip()
        position = offset + len(piece) - len(piece.lstrip())
        if token:
            generators.append(_parse_token(token, position, q))
        elif expression.strip():
            raise OuterExpressionError("empty generator", position)
        offset += len(piece) + 1

    elements = {(0, 0)}
    changed = True
    while changed:
        changed = False
        for e, k in list(elements):
            for ge, gk in generators:
                candidate = ((e + ge) % 2, (k + gk) % f)
                if candidate not in elements:
                    elements.add(candidate)
                    changed = True

    field_part = sum(1 for e, _ in elements if e == 0)
    if field_part == len(elements):
        return OuterSubgroup(OuterKind.UNTWISTED, field_part)
    if (1, 0) in elements:
        return OuterSubgroup(OuterKind.WITH_DIAGONAL, field_part)
    return OuterSubgroup(OuterKind.TWISTED, 2 * field_part)


def _parse_token(token: str, position: int, q: PrimePower) -> tuple[int, int]:
    match = _TOKEN_RE.fullmatch(token)
    if not match:
        raise OuterExpressionError(f"unrecognized generator {token!r}", position)
    has_delta = token.startswith("delta")
    if has_delta and q.p == 2:
        raise OuterExpressionError("delta requires odd characteristic", position)
    exponent_text = match.group(1) or match.group(2)
    if exponent_text is None:
        return (1, 0)
    k = int(exponent_text)
    if not 1 <= k <= q.f:
        raise OuterExpressionError(f"exponent {k} out of range 1..{q.f}", position)
    return (1 if has_delta else 0, k % q.f)
