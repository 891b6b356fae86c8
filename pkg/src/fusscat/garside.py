"""Positive Artin monoid B+(W) in Garside normal form.

A braid is stored as its left-greedy Garside factorization: a tuple of
W-elements v_1 ... v_k with des_R(v_i) containing des_L(v_{i+1}).  Equality,
divisibility, and lattice operations all run on normal forms.  The join is
computed by Dehornoy word reversing over the atom complement table
s\\t = tst... (m(s,t)-1 letters).
"""

from __future__ import annotations

from functools import lru_cache

from .coxeter import (
    ColoredRoot,
    CoxeterSystem,
    GroupElement,
    SystemMismatch,
    colored_inversion_sequence,
)
from .posets import Poset


class NotDivisible(ValueError):
    pass


class NotInInterval(ValueError):
    pass


class TooLarge(RuntimeError):
    pass


def _meet_w(u: GroupElement, v: GroupElement) -> GroupElement:
    """Meet in right weak (prefix) order on W via greedy atom stripping."""
    sys = u.system
    out = sys.identity
    while True:
        du = set(u.left_descents())
        common = [s for s in v.left_descents() if s in du]
        if not common:
            return out
        s = sys.generator(min(common))
        out = out * s
        u = s * u
        v = s * v


def _normalize_pair(a: GroupElement, b: GroupElement):
    """Left-weight two simples: move the largest head of b into a."""
    sys = a.system
    w_o = sys.longest_element()
    t = _meet_w(b, a.inverse() * w_o)
    if t.is_identity():
        return a, b
    return a * t, t.inverse() * b


class Braid:
    """An element of B+(W), stored in left-greedy Garside normal form."""

    __slots__ = ("system", "factors", "_len", "_rev")

    def __init__(self, system: CoxeterSystem, factors: tuple[GroupElement, ...]):
        self.system = system
        self.factors = factors
        self._len = None
        self._rev = None

    @staticmethod
    def from_factors(system: CoxeterSystem, factors) -> "Braid":
        """Normalize an arbitrary list of W-elements into a braid."""
        fs = [f for f in factors if not f.is_identity()]
        for f in fs:
            if f.system is not system:
                raise SystemMismatch("factor from a different system")
        changed = True
        while changed:
            changed = False
            i = 0
            while i < len(fs) - 1:
                a, b = _normalize_pair(fs[i], fs[i + 1])
                if a != fs[i]:
                    changed = True
                    fs[i] = a
                    if b.is_identity():
                        del fs[i + 1]
                    else:
                        fs[i + 1] = b
                i += 1
        return Braid(system, tuple(fs))

    @staticmethod
    def from_word(system: CoxeterSystem, word) -> "Braid":
        return Braid.from_factors(
            system, [system.generator(system.generator_index(s)) for s in word]
        )

    @staticmethod
    def identity(system: CoxeterSystem) -> "Braid":
        return Braid(system, ())

    @staticmethod
    def from_w(w: GroupElement) -> "Braid":
        """The canonical lift of a W-element (a single Garside factor)."""
        if w.is_identity():
            return Braid(w.system, ())
        return Braid(w.system, (w,))

    def __eq__(self, other):
        return (
            isinstance(other, Braid)
            and self.system is other.system
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash(tuple(f.perm for f in self.factors))

    def __repr__(self):
        if not self.factors:
            return "e"
        return ".".join(repr(f) for f in self.factors)

    def __mul__(self, other: "Braid") -> "Braid":
        if isinstance(other, GroupElement):
            other = Braid.from_w(other)
        if self.system is not other.system:
            raise SystemMismatch("braids from different systems")
        return Braid.from_factors(self.system, list(self.factors) + list(other.factors))

    def length(self) -> int:
        if self._len is None:
            self._len = sum(f.length() for f in self.factors)
        return self._len

    def degree(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return not self.factors

    def word(self) -> tuple[int, ...]:
        out = []
        for f in self.factors:
            out.extend(f.reduced_word())
        return tuple(out)

    def projection(self) -> GroupElement:
        """Image in W."""
        w = self.system.identity
        for f in self.factors:
            w = w * f
        return w

    def support(self) -> frozenset[int]:
        out = set()
        for f in self.factors:
            out |= f.support()
        return frozenset(out)

    def reversed_braid(self) -> "Braid":
        """rev(w): the image under the reversal anti-automorphism (cached)."""
        if self._rev is None:
            r = Braid.from_word(self.system, tuple(reversed(self.word())))
            self._rev = r
            r._rev = self
        return self._rev

    def left_descents(self) -> tuple[int, ...]:
        """Atoms left-dividing the braid: left descents of the first factor."""
        return self.factors[0].left_descents() if self.factors else ()

    def right_descents(self) -> tuple[int, ...]:
        """Atoms right-dividing the braid.

        With the left-greedy normal form these are NOT simply the right
        descents of the last factor, so go through the reversal map.
        """
        return self.reversed_braid().left_descents()

    def strip_left(self, s: int) -> "Braid":
        """s^-1 * self, requiring s to left-divide."""
        if s not in self.left_descents():
            raise NotDivisible(f"generator {s} does not left-divide")
        g = self.system.generator(s)
        first = g * self.factors[0]
        rest = list(self.factors[1:])
        if first.is_identity():
            return Braid.from_factors(self.system, rest)
        return Braid.from_factors(self.system, [first] + rest)

    def strip_right(self, s: int) -> "Braid":
        if s not in self.right_descents():
            raise NotDivisible(f"generator {s} does not right-divide")
        return self.reversed_braid().strip_left(s).reversed_braid()

    def append_atom(self, s: int) -> "Braid":
        """self * s, renormalizing cheaply."""
        return Braid.from_factors(
            self.system, list(self.factors) + [self.system.generator(s)]
        )

    def colored_inversions(self) -> frozenset:
        """Colored inversion set (braid-move invariant)."""
        return frozenset(
            c.key() for c in colored_inversion_sequence(self.system, self.word())
        )

    def sorting_word(self, c_word) -> tuple[tuple[int, int], ...]:
        """Greedy leftmost reduced subword of c^infty, as (copy, gen) pairs."""
        sys = self.system
        c_idx = [sys.generator_index(s) for s in c_word]
        n = len(c_idx)
        out = []
        w = self
        pos = 0
        while not w.is_identity():
            s = c_idx[pos % n]
            if s in w.left_descents():
                out.append((pos // n, s))
                w = w.strip_left(s)
            pos += 1
        return tuple(out)


# -- divisibility -------------------------------------------------------------


def left_divides(u: Braid, w: Braid) -> bool:
    return quotient_left(u, w, strict=False) is not None


def quotient_left(u: Braid, w: Braid, strict: bool = True):
    """v with u * v == w, or None (or NotDivisible when strict)."""
    for s in u.word():
        if s in w.left_descents():
            w = w.strip_left(s)
        else:
            if strict:
                raise NotDivisible("left quotient does not exist")
            return None
    return w


def right_divides(u: Braid, w: Braid) -> bool:
    return quotient_right(u, w, strict=False) is not None


def quotient_right(u: Braid, w: Braid, strict: bool = True):
    """v with v * u == w, via the reversal anti-automorphism."""
    r = quotient_left(u.reversed_braid(), w.reversed_braid(), strict=strict)
    return None if r is None else r.reversed_braid()


def gcd(u: Braid, v: Braid) -> Braid:
    """Meet in left divisibility, by greedy common-atom stripping."""
    if u.system is not v.system:
        raise SystemMismatch("braids from different systems")
    word = []
    while True:
        du = set(u.left_descents())
        common = [s for s in v.left_descents() if s in du]
        if not common:
            return Braid.from_word(u.system, word)
        s = min(common)
        word.append(s)
        u = u.strip_left(s)
        v = v.strip_left(s)


def _complement(system: CoxeterSystem, a: int, b: int) -> tuple[int, ...]:
    """a\\b: the word with a * (a\\b) = lcm(a, b); alternating, starts at b."""
    if a == b:
        return ()
    m = system.coxeter_matrix[a][b]
    out = []
    cur = b
    for _ in range(m - 1):
        out.append(cur)
        cur = a if cur == b else b
    return tuple(out)


def _reverse_word(system: CoxeterSystem, neg: list[int], pos: list[int]):
    """Reverse u^-1 v to (u\\v)(v\\u)^-1; returns (u\\v, v\\u) as words."""
    word = [(-1, s) for s in reversed(neg)] + [(1, s) for s in pos]
    i = 0
    guard = 0
    while True:
        guard += 1
        if guard > 2_000_000:
            raise TooLarge("word reversing did not terminate in bound")
        # find a -+ pattern
        idx = None
        for k in range(len(word) - 1):
            if word[k][0] == -1 and word[k + 1][0] == 1:
                idx = k
                break
        if idx is None:
            break
        a, b = word[idx][1], word[idx + 1][1]
        if a == b:
            del word[idx : idx + 2]
            continue
        ab = _complement(system, a, b)
        ba = _complement(system, b, a)
        repl = [(1, s) for s in ab] + [(-1, s) for s in reversed(ba)]
        word[idx : idx + 2] = repl
    posi = [s for sign, s in word if sign == 1]
    negi = [s for sign, s in word if sign == -1]
    return posi, list(reversed(negi))


def lcm(u: Braid, v: Braid) -> Braid:
    """Join in left divisibility, via word reversing."""
    if u.system is not v.system:
        raise SystemMismatch("braids from different systems")
    u_over_v, _ = _reverse_word(u.system, list(u.word()), list(v.word()))
    return u * Braid.from_word(u.system, u_over_v)


def lcm_many(braids) -> Braid:
    it = iter(braids)
    out = next(it)
    for b in it:
        out = lcm(out, b)
    return out


# -- fundamental elements and the m-weak order --------------------------------


def w_o_braid(system: CoxeterSystem, m: int = 1, J=None) -> Braid:
    """w_o^m, optionally of a standard parabolic (as a braid of the parent)."""
    if J is None:
        w = system.longest_element()
    else:
        par = system.parabolic(J)
        w = par.to_parent(par.subsystem.longest_element())
    return Braid(system, (w,) * m) if not w.is_identity() else Braid.identity(system)


def degree(w: Braid) -> int:
    return w.degree()


def in_m_weak(w: Braid, m: int) -> bool:
    return w.degree() <= m


def rev(w: Braid) -> Braid:
    """Reverse any word for w."""
    return Braid.from_word(w.system, tuple(reversed(w.word())))


def phi(w: Braid, m: int) -> Braid:
    """w_o^m * w^-1, computed inside B+ by right quotient."""
    if w.degree() > m:
        raise NotInInterval("element has degree larger than m")
    return quotient_right(w, w_o_braid(w.system, m))


def parabolic_factor(w: Braid, J, m: int) -> tuple[Braid, Braid]:
    """w = w_J * w^J with w_J = w meet w_o(J)^m."""
    if w.degree() > m:
        raise NotInInterval("element has degree larger than m")
    w_j = gcd(w, w_o_braid(w.system, m, J=J))
    w_up = quotient_left(w_j, w)
    return w_j, w_up


class MWeakInterval:
    """The interval [e, w_o^m] in the weak order of B+, with Hasse diagram."""

    def __init__(self, system: CoxeterSystem, m: int, cap: int = 10**6):
        if m < 0:
            raise ValueError("m must be nonnegative")
        self.system = system
        self.m = m
        elements = [Braid.identity(system)]
        seen = {elements[0]}
        covers = []
        frontier = [elements[0]]
        while frontier:
            nxt = []
            for w in frontier:
                for s in range(system.rank):
                    u = w.append_atom(s)
                    if u.degree() > m:
                        continue
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
                        elements.append(u)
                        if len(elements) > cap:
                            raise TooLarge(f"interval exceeds cap {cap}")
            frontier = nxt
        self.elements = sorted(seen, key=lambda b: (b.length(), b.word()))
        index = {b: i for i, b in enumerate(self.elements)}
        for w in self.elements:
            for s in range(system.rank):
                u = w.append_atom(s)
                if u in index:
                    covers.append((index[w], index[u]))
        self.poset = Poset(self.elements, covers)

    def __len__(self):
        return len(self.elements)

    def rank_vector(self) -> tuple[int, ...]:
        return self.poset.rank_vector(rank_of=lambda b: b.length())

    def contains(self, w: Braid) -> bool:
        return w.degree() <= self.m


def garside_factorization_valid(factors) -> bool:
    """Check des_R(v_i) contains des_L(v_{i+1}) for consecutive factors."""
    for a, b in zip(factors, factors[1:]):
        if a.is_identity() or b.is_identity():
            return False
        if not set(b.left_descents()) <= set(a.right_descents()):
            return False
    return True
