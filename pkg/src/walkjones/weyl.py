"""Normal-form monomials of crossing weights and their evaluation.

Every crossing j of a braid carries three letters a_j, b_j, c_j subject to
q-commutation rules that depend on the crossing sign; letters at distinct
crossings commute. Each monomial is kept permanently in normal form: an
exponent key recording, per crossing, the letter multiplicities
(s, r, d) = (#b, #c, #a) in the order b^s c^r a^d, plus a Laurent
coefficient that absorbs every q-power produced by reordering.

Keys are flat tuples (s_1, r_1, d_1, ..., s_k, r_k, d_k). A WalkSum is a
canonical map key -> coefficient; merging like keys is exact because the
color evaluation of a monomial is its coefficient times a function of the
key alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import kernels
from .laurent import LaurentPolynomial

_LETTER_SLOT = {"b": 0, "c": 1, "a": 2}


def zero_key(crossings: int) -> tuple[int, ...]:
    """The key of the empty word on a braid with the given crossing count."""
    return (0,) * (3 * crossings)


def letter_key(crossings: int, crossing: int, kind: str) -> tuple[int, ...]:
    """The key of a single letter ('a', 'b' or 'c') at a 1-based crossing."""
    if not 1 <= crossing <= crossings:
        raise ValueError(f"crossing {crossing} out of range 1..{crossings}")
    key = [0] * (3 * crossings)
    key[3 * (crossing - 1) + _LETTER_SLOT[kind]] = 1
    return tuple(key)


def key_counts(key: tuple[int, ...], crossing: int) -> tuple[int, int, int]:
    """The (s, r, d) multiplicities at a 1-based crossing."""
    b = 3 * (crossing - 1)
    return key[b], key[b + 1], key[b + 2]


@dataclass(frozen=True)
class KeyedMonomial:
    """A normal-form monomial: coefficient times the word encoded by key."""

    key: tuple[int, ...]
    coeff: LaurentPolynomial


class WalkSum:
    """Canonical key -> coefficient map; zero coefficients are never stored."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[tuple[int, ...], LaurentPolynomial] | None = None):
        self.entries: dict[tuple[int, ...], LaurentPolynomial] = {}
        if entries:
            for key, coeff in entries.items():
                if coeff:
                    self.entries[key] = coeff

    @classmethod
    def _raw(cls, entries: dict) -> "WalkSum":
        ws = cls.__new__(cls)
        ws.entries = entries
        return ws

    @classmethod
    def zero(cls) -> "WalkSum":
        return cls._raw({})

    @classmethod
    def single(cls, key: tuple[int, ...], coeff: LaurentPolynomial) -> "WalkSum":
        return cls._raw({key: coeff} if coeff else {})

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WalkSum):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {c}" for k, c in sorted(self.entries.items()))
        return f"WalkSum({{{inner}}})"

    def monomials(self) -> list[KeyedMonomial]:
        return [KeyedMonomial(k, c) for k, c in self.entries.items()]

    def add_into(self, key: tuple[int, ...], coeff: LaurentPolynomial) -> None:
        """Accumulate one monomial (mutating; used while building sums)."""
        cur = self.entries.get(key)
        if cur is None:
            if coeff:
                self.entries[key] = coeff
            return
        total = cur + coeff
        if total:
            self.entries[key] = total
        else:
            del self.entries[key]

    def merged_with(self, other: "WalkSum") -> "WalkSum":
        out = dict(self.entries)
        result = WalkSum._raw(out)
        for key, coeff in other.entries.items():
            result.add_into(key, coeff)
        return result

    def scaled(self, factor: LaurentPolynomial) -> "WalkSum":
        if not factor:
            return WalkSum.zero()
        return WalkSum._raw({k: c * factor for k, c in self.entries.items()})

    def filtered(self, n: int) -> "WalkSum":
        """Entries whose keys survive drl_keep(key, n)."""
        keep = kernels.active().drl_keep
        return WalkSum._raw({k: c for k, c in self.entries.items() if keep(k, n)})

    def _items(self) -> list:
        # Raw (key, coefficient dict) view for the kernels.
        return [(k, c.terms) for k, c in self.entries.items()]


def mono_mul(left: KeyedMonomial, right: KeyedMonomial, signs: tuple[int, ...]) -> KeyedMonomial:
    """Product of two normal-form monomials over the same braid."""
    key, delta = kernels.active().key_product(left.key, right.key, signs)
    coeff = (left.coeff * right.coeff).shift(delta)
    return KeyedMonomial(key, coeff)


def drl_keep(key: tuple[int, ...], n: int) -> bool:
    """Duplicate-reduction filter: discard keys with (#a + max(#b, #c)) >= n
    at any crossing. At n = 2 the survivors are exactly the simple walks."""
    if n < 1:
        raise ValueError(f"color must be >= 1, got {n}")
    return kernels.active().drl_keep(key, n)


def evaluate_monomial(mono: KeyedMonomial, signs: tuple[int, ...], n: int) -> LaurentPolynomial:
    """Color-n evaluation of one normal-form monomial.

    Per positive crossing with counts (s, r, d) the word contributes
    q^(r(n-1-d)) * prod_{h<d} (1 - q^(n-1-r-h)); per negative crossing
    q^(-r(n-1)) * prod_{l<d} (1 - q^(r+l+1-n)). The s counts contribute
    nothing. The result is coeff times the product over crossings.
    """
    if n < 1:
        raise ValueError(f"color must be >= 1, got {n}")
    key = mono.key
    if len(key) != 3 * len(signs):
        raise ValueError(f"key length {len(key)} does not match {len(signs)} crossings")
    shift = 0
    factor_exps: list[int] = []
    for j, sign in enumerate(signs):
        b = 3 * j
        r = key[b + 1]
        d = key[b + 2]
        if d and r < n <= r + d:
            return LaurentPolynomial.zero()  # a factor (1 - q^0) appears
        if sign > 0:
            shift += r * (n - 1 - d)
            factor_exps.extend(n - 1 - r - h for h in range(d))
        else:
            shift -= r * (n - 1)
            factor_exps.extend(r + l + 1 - n for l in range(d))
    out = mono.coeff.terms
    for e in factor_exps:
        # multiply by (1 - q^e)
        nxt: dict[int, int] = {}
        for ea, ca in out.items():
            v = nxt.get(ea, 0) + ca
            if v:
                nxt[ea] = v
            elif ea in nxt:
                del nxt[ea]
            eb = ea + e
            v = nxt.get(eb, 0) - ca
            if v:
                nxt[eb] = v
            elif eb in nxt:
                del nxt[eb]
        out = nxt
    if shift:
        out = {e + shift: c for e, c in out.items()}
    elif out is mono.coeff.terms:
        out = dict(out)
    return LaurentPolynomial._raw(out)


def evaluate_walk_sum(ws: WalkSum, signs: tuple[int, ...], n: int) -> LaurentPolynomial:
    """Color-n evaluation of a walk sum (additive over monomials)."""
    total: dict[int, int] = {}
    for key, coeff in ws.entries.items():
        part = evaluate_monomial(KeyedMonomial(key, coeff), signs, n)
        for e, c in part.terms.items():
            v = total.get(e, 0) + c
            if v:
                total[e] = v
            elif e in total:
                del total[e]
    return LaurentPolynomial._raw(total)


def multiply_walk_sums(
    a: WalkSum,
    b: WalkSum,
    signs: tuple[int, ...],
    n: int = 0,
    prune: bool = False,
) -> WalkSum:
    """Pairwise product of two walk sums, accumulated into canonical form.

    With prune set, any product whose key fails drl_keep(key, n) is
    discarded before accumulation (sound because the filter is monotone
    under adding letters).
    """
    if not a.entries or not b.entries:
        return WalkSum.zero()
    n_limit = n if prune else 0
    raw = kernels.active().walk_products(a._items(), b._items(), signs, n_limit)
    return WalkSum._raw({k: LaurentPolynomial._raw(c) for k, c in raw.items()})


def walk_sum_from_monomials(monomials: Iterable[KeyedMonomial]) -> WalkSum:
    ws = WalkSum.zero()
    for mono in monomials:
        ws.add_into(mono.key, mono.coeff)
    return ws
