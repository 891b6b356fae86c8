"""Finite Coxeter systems with exact root systems.

A system is built from a Coxeter matrix (or a named type such as "A3" or
"I2(5)").  The full root system is enumerated once with exact arithmetic;
afterwards every group element is a permutation of root indices, so all
group arithmetic is integer permutation composition.

Root indices 0..N-1 are the positive roots (simple roots first), and index
N+i is the negative of root i.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .field import FieldElement, RealCyclotomicField


class BadMatrix(ValueError):
    """Malformed Coxeter or Cartan matrix."""


class InfiniteGroup(ValueError):
    """The bilinear form is not positive definite."""


class SystemMismatch(ValueError):
    """Operands belong to different Coxeter systems."""


def _parse_single(spec: str):
    m = re.fullmatch(r"\s*([ABCDEFHI])\s*(\d+)?\s*(?:\(\s*(\d+)\s*\))?\s*", spec)
    if not m:
        raise BadMatrix(f"cannot parse type {spec!r}")
    letter, rank, arg = m.group(1), m.group(2), m.group(3)
    if letter == "I":
        if arg is None:
            raise BadMatrix("type I needs an edge label, e.g. I2(5)")
        if rank is not None and int(rank) != 2:
            raise BadMatrix("type I systems have rank 2")
        mm = int(arg)
        if mm < 3:
            raise BadMatrix("I2(m) needs m >= 3")
        return [[1, mm], [mm, 1]]
    if rank is None:
        raise BadMatrix(f"type {letter} needs a rank")
    n = int(rank)
    if n < 1:
        raise BadMatrix("rank must be positive")
    mat = [[2] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = 1

    def edge(i, j, m_ij=3):
        mat[i][j] = mat[j][i] = m_ij

    if letter == "A":
        for i in range(n - 1):
            edge(i, i + 1)
    elif letter in "BC":
        if n < 2:
            raise BadMatrix("types B/C need rank >= 2")
        for i in range(n - 1):
            edge(i, i + 1)
        edge(n - 2, n - 1, 4)
    elif letter == "D":
        if n < 3:
            raise BadMatrix("type D needs rank >= 3")
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif letter == "E":
        if n not in (6, 7, 8):
            raise BadMatrix("type E needs rank 6, 7 or 8")
        # Bourbaki numbering: chain 1-3-4-5-...-n with 2 attached to 4.
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
    elif letter == "F":
        if n != 4:
            raise BadMatrix("type F needs rank 4")
        edge(0, 1)
        edge(1, 2, 4)
        edge(2, 3)
    elif letter == "H":
        if n not in (2, 3, 4):
            raise BadMatrix("type H needs rank 2, 3 or 4")
        edge(0, 1, 5)
        for i in range(1, n - 1):
            edge(i, i + 1)
    return mat


def parse_type(spec: str) -> list[list[int]]:
    """Coxeter matrix from a name like "A3", "B2", "I2(5)" or "A1xA1"."""
    blocks = [_parse_single(part) for part in re.split(r"[x*]", spec)]
    n = sum(len(b) for b in blocks)
    mat = [[2] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                mat[off + i][off + j] = b[i][j]
        off += k
    for i in range(n):
        mat[i][i] = 1
    return mat


def _default_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return tuple("stu"[:n])
    return tuple(f"s{i + 1}" for i in range(n))


class CoxeterSystem:
    def __init__(self, coxeter_matrix, names=None, cartan=None, field=None):
        mat = [list(map(int, row)) for row in coxeter_matrix]
        n = len(mat)
        if any(len(row) != n for row in mat):
            raise BadMatrix("Coxeter matrix must be square")
        for i in range(n):
            if mat[i][i] != 1:
                raise BadMatrix("diagonal entries must be 1")
            for j in range(n):
                if mat[i][j] != mat[j][i]:
                    raise BadMatrix("Coxeter matrix must be symmetric")
                if i != j and mat[i][j] < 2:
                    raise BadMatrix("off-diagonal entries must be >= 2")
        self.rank = n
        self.coxeter_matrix = tuple(tuple(row) for row in mat)
        self.names = tuple(names) if names else _default_names(n)
        if len(self.names) != n or len(set(self.names)) != n:
            raise BadMatrix("need one distinct name per generator")

        labels = {mat[i][j] for i in range(n) for j in range(i + 1, n)}
        self.field = field if field is not None else RealCyclotomicField.for_labels(labels)
        self._check_positive_definite()

        if cartan is None:
            F = self.field
            self.cartan = tuple(
                tuple(
                    F.rational(2) if i == j else -F.two_cos_pi_over(mat[i][j])
                    for j in range(n)
                )
                for i in range(n)
            )
        else:
            self.cartan = self._validate_cartan(cartan)

        self._enumerate_roots()
        self._simple_perms = tuple(self._reflection_perm(i) for i in range(n))
        self._elements: dict[tuple[int, ...], GroupElement] = {}
        self.identity = self.element_from_perm(tuple(range(2 * self.num_positive_roots)))
        self._cache: dict = {}

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_spec(spec: str, names=None) -> "CoxeterSystem":
        return CoxeterSystem(parse_type(spec), names=names)

    def _check_positive_definite(self):
        """Leading principal minors of the Gram matrix (-cos(pi/m_st))."""
        F = self.field
        n = self.rank
        half = Fraction(1, 2)
        gram = [
            [
                F.one if i == j else -(F.two_cos_pi_over(self.coxeter_matrix[i][j]) * F.rational(half))
                for j in range(n)
            ]
            for i in range(n)
        ]
        # fraction-free-ish Gaussian elimination with exact division
        m = [row[:] for row in gram]
        for k in range(n):
            piv = m[k][k]
            if piv.sign() <= 0:
                raise InfiniteGroup("bilinear form is not positive definite")
            for i in range(k + 1, n):
                f = m[i][k] / piv
                if not f.is_zero():
                    for j in range(k, n):
                        m[i][j] = m[i][j] - f * m[k][j]

    def _validate_cartan(self, cartan):
        F = self.field
        n = self.rank
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                a = cartan[i][j]
                if not isinstance(a, FieldElement):
                    a = F.rational(a)
                row.append(a)
            rows.append(row)
        for i in range(n):
            if rows[i][i] != F.rational(2):
                raise BadMatrix("Cartan diagonal must be 2")
            for j in range(n):
                if i == j:
                    continue
                if rows[i][j].sign() > 0:
                    raise BadMatrix("off-diagonal Cartan entries must be <= 0")
                if rows[i][j].is_zero() != rows[j][i].is_zero():
                    raise BadMatrix("Cartan zeros must be symmetric")
                c = F.two_cos_pi_over(self.coxeter_matrix[i][j])
                if rows[i][j] * rows[j][i] != c * c:
                    raise BadMatrix("Cartan entries incompatible with Coxeter matrix")
        return tuple(tuple(r) for r in rows)

    def _enumerate_roots(self):
        F = self.field
        n = self.rank
        simples = []
        for i in range(n):
            v = [F.zero] * n
            v[i] = F.one
            simples.append(tuple(v))

        def apply_simple(i, coords):
            t = F.zero
            for j in range(n):
                if not coords[j].is_zero():
                    t = t + self.cartan[i][j] * coords[j]
            out = list(coords)
            out[i] = out[i] - t
            return tuple(out)

        seen = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(n):
                    w = apply_simple(i, v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt

        def is_positive(v):
            sgn = 0
            for c in v:
                s = c.sign()
                if s:
                    if sgn and s != sgn:
                        raise AssertionError("root with mixed-sign coordinates")
                    sgn = s
            return sgn > 0

        positives = [v for v in seen if is_positive(v)]
        rest = sorted(
            (v for v in positives if v not in simples),
            key=lambda v: (
                sum(float(c) for c in v),
                tuple(tuple(q for q in c.coeffs) for c in v),
            ),
        )
        ordered = simples + rest
        self.roots = tuple(ordered + [tuple(-c for c in v) for v in ordered])
        self.num_positive_roots = len(ordered)
        self._root_index = {v: i for i, v in enumerate(self.roots)}
        if len(self.roots) != 2 * self.num_positive_roots:
            raise AssertionError("root system is not symmetric")
        self._apply_simple = apply_simple

    def _reflection_perm(self, i):
        return tuple(self._root_index[self._apply_simple(i, v)] for v in self.roots)

    # -- basic data --------------------------------------------------------

    def element_from_perm(self, perm: tuple[int, ...]) -> "GroupElement":
        el = self._elements.get(perm)
        if el is None:
            el = GroupElement(self, perm)
            self._elements[perm] = el
        return el

    def generator(self, i: int) -> "GroupElement":
        return self.element_from_perm(self._simple_perms[i])

    @property
    def generators(self) -> tuple["GroupElement", ...]:
        return tuple(self.generator(i) for i in range(self.rank))

    def generator_index(self, name_or_index) -> int:
        if isinstance(name_or_index, int):
            return name_or_index
        return self.names.index(name_or_index)

    def word_to_element(self, word) -> "GroupElement":
        w = self.identity
        for s in word:
            w = w * self.generator(self.generator_index(s))
        return w

    def neg(self, root_index: int) -> int:
        N = self.num_positive_roots
        return root_index + N if root_index < N else root_index - N

    def is_positive_root(self, root_index: int) -> bool:
        return root_index < self.num_positive_roots

    def root_coords(self, root_index: int):
        return self.roots[root_index]

    def __repr__(self):
        return f"CoxeterSystem(rank={self.rank}, N={self.num_positive_roots})"

    # -- group-level data (desk scale; cached) ------------------------------

    def all_elements(self) -> tuple["GroupElement", ...]:
        if "all_elements" not in self._cache:
            frontier = [self.identity]
            seen = {self.identity}
            while frontier:
                nxt = []
                for w in frontier:
                    for i in range(self.rank):
                        u = w * self.generator(i)
                        if u not in seen:
                            seen.add(u)
                            nxt.append(u)
                frontier = nxt
            self._cache["all_elements"] = tuple(
                sorted(seen, key=lambda w: (w.length(), w.perm))
            )
        return self._cache["all_elements"]

    def order(self) -> int:
        return len(self.all_elements())

    def poincare_polynomial(self) -> tuple[int, ...]:
        if "poincare" not in self._cache:
            coeffs = [0] * (self.num_positive_roots + 1)
            for w in self.all_elements():
                coeffs[w.length()] += 1
            self._cache["poincare"] = tuple(coeffs)
        return self._cache["poincare"]

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degrees d_1 <= ... <= d_n, from factoring the Poincare polynomial."""
        if "degrees" not in self._cache:
            self._cache["degrees"] = _degrees_from_poincare(
                self.poincare_polynomial(), self.rank
            )
        return self._cache["degrees"]

    @property
    def coxeter_number(self) -> int:
        return self.degrees[-1]

    @property
    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """2-coloring of the Coxeter diagram; lowest generator of each
        connected component sits on the left side."""
        if "bipartition" not in self._cache:
            n = self.rank
            color = [None] * n
            for start in range(n):
                if color[start] is not None:
                    continue
                color[start] = 0
                stack = [start]
                while stack:
                    i = stack.pop()
                    for j in range(n):
                        if j != i and self.coxeter_matrix[i][j] >= 3:
                            if color[j] is None:
                                color[j] = 1 - color[i]
                                stack.append(j)
                            elif color[j] == color[i]:
                                raise AssertionError("Coxeter diagram not bipartite")
                left = tuple(i for i in range(n) if color[i] == 0)
                right = tuple(i for i in range(n) if color[i] == 1)
            self._cache["bipartition"] = (left, right)
        return self._cache["bipartition"]

    def bipartite_coxeter_word(self) -> tuple[int, ...]:
        left, right = self.bipartition
        return left + right

    def reflections(self) -> tuple["GroupElement", ...]:
        """All reflections, indexed by their positive root."""
        if "reflections" not in self._cache:
            by_root: dict[int, GroupElement] = {}
            frontier = list(self.generators)
            seen = set(frontier)
            while frontier:
                nxt = []
                for t in frontier:
                    for s in self.generators:
                        u = s * t * s
                        if u not in seen:
                            seen.add(u)
                            nxt.append(u)
                frontier = nxt
            for t in seen:
                by_root[t.reflection_root()] = t
            if len(by_root) != self.num_positive_roots:
                raise AssertionError("wrong number of reflections")
            self._cache["reflections"] = tuple(
                by_root[i] for i in range(self.num_positive_roots)
            )
        return self._cache["reflections"]

    def reflection_for_root(self, root_index: int) -> "GroupElement":
        return self.reflections()[root_index % self.num_positive_roots]

    def reflection_length_table(self) -> dict["GroupElement", int]:
        if "reflength" not in self._cache:
            table = {self.identity: 0}
            frontier = [self.identity]
            dist = 0
            refl = self.reflections()
            while frontier:
                dist += 1
                nxt = []
                for w in frontier:
                    for t in refl:
                        u = w * t
                        if u not in table:
                            table[u] = dist
                            nxt.append(u)
                frontier = nxt
            self._cache["reflength"] = table
        return self._cache["reflength"]

    def longest_element(self) -> "GroupElement":
        if "w_o" not in self._cache:
            w = self.identity
            changed = True
            while changed:
                changed = False
                for i in range(self.rank):
                    u = w * self.generator(i)
                    if u.length() > w.length():
                        w = u
                        changed = True
            if w.length() != self.num_positive_roots:
                raise AssertionError("longest element has wrong length")
            self._cache["w_o"] = w
        return self._cache["w_o"]

    def psi(self, i: int) -> int:
        """The diagram involution s -> w_o s w_o, on generator indices."""
        if "psi" not in self._cache:
            w_o = self.longest_element()
            out = []
            for j in range(self.rank):
                c = w_o * self.generator(j) * w_o
                out.append(self.generators.index(c))
            self._cache["psi"] = tuple(out)
        return self._cache["psi"][i]

    def parabolic(self, J) -> "ParabolicData":
        J = tuple(sorted(self.generator_index(j) for j in J))
        key = ("parabolic", J)
        if key not in self._cache:
            self._cache[key] = ParabolicData(self, J)
        return self._cache[key]

    def rank2_subsystems(self) -> tuple[tuple[int, ...], ...]:
        """Positive-root index sets of all rank-2 root subsystems."""
        if "rank2" not in self._cache:
            N = self.num_positive_roots
            out = set()
            for a in range(N):
                for b in range(a + 1, N):
                    # roots in the plane spanned by roots a and b
                    members = [a, b]
                    va, vb = self.roots[a], self.roots[b]
                    for c in range(N):
                        if c in (a, b):
                            continue
                        if _in_span2(self.field, va, vb, self.roots[c]):
                            members.append(c)
                    out.add(tuple(sorted(members)))
            maximal = [
                s
                for s in out
                if not any(set(s) < set(t) for t in out if t != s)
            ]
            self._cache["rank2"] = tuple(sorted(maximal))
        return self._cache["rank2"]


class ParabolicData:
    """A standard parabolic subsystem W_J with index maps to the parent.

    The subsystem reuses the parent's field, so root coordinates restrict
    literally.
    """

    def __init__(self, parent: CoxeterSystem, J: tuple[int, ...]):
        self.parent = parent
        self.J = J
        k = len(J)
        mat = [[parent.coxeter_matrix[a][b] for b in J] for a in J]
        cartan = [[parent.cartan[a][b] for b in J] for a in J]
        self.subsystem = CoxeterSystem(
            mat,
            names=tuple(parent.names[a] for a in J),
            cartan=cartan,
            field=parent.field,
        )
        # match sub roots to parent roots by coordinates
        self.root_to_parent = []
        self.root_from_parent = {}
        for i in range(self.subsystem.num_positive_roots):
            coords = self.subsystem.root_coords(i)
            full = [parent.field.zero] * parent.rank
            for pos, a in enumerate(J):
                full[a] = coords[pos]
            j = parent._root_index[tuple(full)]
            self.root_to_parent.append(j)
            self.root_from_parent[j] = i
        self.root_to_parent = tuple(self.root_to_parent)

    def gen_to_parent(self, i: int) -> int:
        return self.J[i]

    def gen_from_parent(self, a: int) -> int:
        return self.J.index(a)

    def to_parent(self, w: GroupElement) -> GroupElement:
        if w.system is not self.subsystem:
            raise SystemMismatch("element is not in the subsystem")
        return self.parent.word_to_element([self.J[s] for s in w.reduced_word()])

    def to_sub(self, w: GroupElement) -> GroupElement:
        if w.system is not self.parent:
            raise SystemMismatch("element is not in the parent system")
        word = w.reduced_word()
        if not set(word) <= set(self.J):
            raise ValueError("element does not lie in the parabolic subgroup")
        return self.subsystem.word_to_element([self.J.index(s) for s in word])


def _in_span2(field, va, vb, vc) -> bool:
    """Whether vc lies in the span of va and vb (exact, any rank)."""
    rows = [list(va), list(vb), list(vc)]
    # rank of the 3 x n matrix must be 2
    mat = [row[:] for row in rows]
    r = 0
    ncols = len(va)
    for col in range(ncols):
        piv = None
        for i in range(r, 3):
            if not mat[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(3):
            if i != r and not mat[i][col].is_zero():
                f = mat[i][col] / mat[r][col]
                for j in range(col, ncols):
                    mat[i][j] = mat[i][j] - f * mat[r][j]
        r += 1
        if r == 3:
            break
    return r == 2


def _poly_divide_exact(a: list[int], b: list[int]):
    """Divide integer polynomials exactly, or return None."""
    a = a[:]
    out = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        if a[-1] % b[-1]:
            return None
        c = a[-1] // b[-1]
        k = len(a) - len(b)
        out[k] = c
        for j, bj in enumerate(b):
            a[k + j] -= c * bj
    if any(a):
        return None
    return out


@lru_cache(maxsize=None)
def _int_cyclotomic(k: int) -> tuple[int, ...]:
    from .field import cyclotomic

    return cyclotomic(k)


def _degrees_from_poincare(coeffs: tuple[int, ...], rank: int) -> tuple[int, ...]:
    # multiplicity of each cyclotomic factor determines the degree multiset
    p = list(coeffs)
    mult: dict[int, int] = {}
    k = 2
    while sum(d - 1 for d in _expand(mult)) < len(coeffs) - 1 or any(c for c in p[1:]):
        q = _poly_divide_exact(p, list(_int_cyclotomic(k)))
        if q is not None:
            mult[k] = mult.get(k, 0) + 1
            p = q
        else:
            k += 1
            if k > len(coeffs) + 1:
                break
    degrees: list[int] = []
    while mult:
        top = max(k for k, v in mult.items() if v > 0)
        count = mult[top]
        degrees.extend([top] * count)
        for j in list(mult):
            if top % j == 0:
                mult[j] -= count
                if mult[j] == 0:
                    del mult[j]
    degrees += [1] * 0
    # rank-1 factors (A1 components) contribute degree 2 already via Phi_2;
    # components of degree 1 never occur, but pad for trivial systems
    while len(degrees) < rank:
        degrees.append(2)
    return tuple(sorted(degrees))


def _expand(mult: dict[int, int]) -> list[int]:
    out = []
    for k, v in mult.items():
        out.extend([k] * v)
    return out


class GroupElement:
    __slots__ = ("system", "perm", "_inv", "_len")

    def __init__(self, system: CoxeterSystem, perm: tuple[int, ...]):
        self.system = system
        self.perm = perm
        self._inv = None
        self._len = None

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.system is other.system
            and self.perm == other.perm
        )

    def __hash__(self):
        return hash(self.perm)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.system is not other.system:
            raise SystemMismatch("elements from different systems")
        p, q = self.perm, other.perm
        return self.system.element_from_perm(tuple(p[q[i]] for i in range(len(p))))

    def inverse(self) -> "GroupElement":
        if self._inv is None:
            out = [0] * len(self.perm)
            for i, v in enumerate(self.perm):
                out[v] = i
            self._inv = self.system.element_from_perm(tuple(out))
            self._inv._inv = self
        return self._inv

    def conjugate_by(self, w: "GroupElement") -> "GroupElement":
        """w * self * w^-1."""
        return w * self * w.inverse()

    def act(self, root_index: int) -> int:
        return self.perm[root_index]

    def act_colored(self, colored: "ColoredRoot") -> "ColoredRoot":
        """Direct two-case colored action of a group element."""
        if colored.system is not self.system:
            raise SystemMismatch("colored root from a different system")
        img = self.perm[colored.root]
        N = self.system.num_positive_roots
        if img < N:
            return ColoredRoot(self.system, img, colored.color)
        return ColoredRoot(self.system, img - N, colored.color + 1)

    def length(self) -> int:
        if self._len is None:
            N = self.system.num_positive_roots
            inv = self.inverse().perm
            self._len = sum(1 for i in range(N) if inv[i] >= N)
        return self._len

    def is_identity(self) -> bool:
        return self is self.system.identity or self.length() == 0

    def inversion_set(self) -> frozenset[int]:
        """inv(w) = positive roots sent negative by w^-1, as root indices."""
        N = self.system.num_positive_roots
        inv = self.inverse().perm
        return frozenset(i for i in range(N) if inv[i] >= N)

    def reflection_inversions(self) -> frozenset["GroupElement"]:
        return frozenset(
            self.system.reflection_for_root(i) for i in self.inversion_set()
        )

    def left_descents(self) -> tuple[int, ...]:
        N = self.system.num_positive_roots
        inv = self.inverse().perm
        return tuple(i for i in range(self.system.rank) if inv[i] >= N)

    def right_descents(self) -> tuple[int, ...]:
        N = self.system.num_positive_roots
        return tuple(i for i in range(self.system.rank) if self.perm[i] >= N)

    def left_ascents(self) -> tuple[int, ...]:
        des = set(self.left_descents())
        return tuple(i for i in range(self.system.rank) if i not in des)

    def right_ascents(self) -> tuple[int, ...]:
        des = set(self.right_descents())
        return tuple(i for i in range(self.system.rank) if i not in des)

    def covered_reflections(self) -> frozenset["GroupElement"]:
        return frozenset(
            self.system.generator(i).conjugate_by(self) for i in self.right_descents()
        )

    def covering_reflections(self) -> frozenset["GroupElement"]:
        return frozenset(
            self.system.generator(i).conjugate_by(self) for i in self.right_ascents()
        )

    def reflection_length(self) -> int:
        return self.system.reflection_length_table()[self]

    def absolute_leq(self, other: "GroupElement") -> bool:
        """self <=_R other in absolute order."""
        table = self.system.reflection_length_table()
        return table[other] == table[self] + table[self.inverse() * other]

    def is_reflection(self) -> bool:
        return self.reflection_length() == 1 if self.length() % 2 else False

    def reflection_root(self) -> int:
        """The positive root negated by this reflection."""
        N = self.system.num_positive_roots
        flipped = [i for i in range(N) if self.perm[i] == i + N]
        if len(flipped) != 1 or (self * self) is not self.system.identity:
            raise ValueError("element is not a reflection")
        return flipped[0]

    def reduced_word(self) -> tuple[int, ...]:
        """Canonical reduced word: repeatedly take the smallest left descent."""
        word = []
        w = self
        while not w.is_identity():
            s = min(w.left_descents())
            word.append(s)
            w = self.system.generator(s) * w
        return tuple(word)

    def support(self) -> frozenset[int]:
        return frozenset(self.reduced_word())

    def weak_leq(self, other: "GroupElement") -> bool:
        """Prefix (right weak) order via inversion-set containment."""
        return self.inversion_set() <= other.inversion_set()

    def sorting_word(self, c_word) -> tuple[tuple[int, int], ...]:
        """The c-sorting word, as (copy, generator) pairs in c^infty."""
        sys = self.system
        c_idx = [sys.generator_index(s) for s in c_word]
        out = []
        w = self
        pos = 0
        n = len(c_idx)
        while not w.is_identity():
            s = c_idx[pos % n]
            if s in w.left_descents():
                out.append((pos // n, s))
                w = sys.generator(s) * w
            pos += 1
        return tuple(out)

    def __repr__(self):
        word = self.reduced_word()
        if not word:
            return "e"
        return "".join(self.system.names[i] for i in word)


class ColoredRoot:
    """A positive root together with a nonnegative color."""

    __slots__ = ("system", "root", "color")

    def __init__(self, system: CoxeterSystem, root: int, color: int):
        if not system.is_positive_root(root):
            raise ValueError("colored roots sit on positive roots")
        if color < 0:
            raise ValueError("color must be nonnegative")
        self.system = system
        self.root = root
        self.color = color

    def key(self):
        return (self.root, self.color)

    def __eq__(self, other):
        return (
            isinstance(other, ColoredRoot)
            and self.system is other.system
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"{root_name(self.system, self.root)}^({self.color})"


def root_name(system: CoxeterSystem, root_index: int) -> str:
    """greek-ish display names for small ranks, coordinates otherwise."""
    N = system.num_positive_roots
    sign = ""
    if root_index >= N:
        sign = "-"
        root_index -= N
    if system.rank <= 2 and N <= 3:
        greek = {0: "a", 1: "b", 2: "c"}
        if root_index in greek:
            return sign + greek[root_index]
    coords = system.root_coords(root_index)
    return sign + "+".join(
        f"{'' if c == system.field.one else repr(c) + '*'}{system.names[i]}"
        for i, c in enumerate(coords)
        if not c.is_zero()
    )


def word_act_colored(system: CoxeterSystem, word, colored: ColoredRoot) -> ColoredRoot:
    """Letter-by-letter colored action of a word, rightmost letter first."""
    root, color = colored.root, colored.color
    N = system.num_positive_roots
    for s in reversed([system.generator_index(x) for x in word]):
        img = system._simple_perms[s][root]
        if img >= N:
            root, color = img - N, color + 1
        else:
            root = img
    return ColoredRoot(system, root, color)


class ColoredMap:
    """Composable letter-by-letter colored action of a growing word.

    Tracks, for each positive root, its image and accumulated color
    increment; appending a letter post-composes the simple reflection.
    """

    def __init__(self, system: CoxeterSystem):
        self.system = system
        N = system.num_positive_roots
        self.image = list(range(N))
        self.bump = [0] * N

    def copy(self) -> "ColoredMap":
        out = ColoredMap.__new__(ColoredMap)
        out.system = self.system
        out.image = self.image[:]
        out.bump = self.bump[:]
        return out

    def append_letter(self, gen_index: int):
        # the word grows on the right, and the rightmost letter acts first:
        # new = old o s, so s is applied before the existing map
        perm = self.system._simple_perms[gen_index]
        N = self.system.num_positive_roots
        image, bump = self.image, self.bump
        new_image, new_bump = [], []
        for r in range(N):
            img = perm[r]
            b = 0
            if img >= N:
                img -= N
                b = 1
            new_image.append(image[img])
            new_bump.append(b + bump[img])
        self.image, self.bump = new_image, new_bump

    def apply(self, colored: ColoredRoot) -> ColoredRoot:
        return ColoredRoot(
            self.system,
            self.image[colored.root],
            colored.color + self.bump[colored.root],
        )


def colored_inversion_sequence(system: CoxeterSystem, word) -> tuple[ColoredRoot, ...]:
    """invs(Q): i-th entry is the first i-1 letters acting on the i-th
    simple root at color 0, letters applied one at a time."""
    idx = [system.generator_index(s) for s in word]
    out = []
    cmap = ColoredMap(system)
    for s in idx:
        out.append(cmap.apply(ColoredRoot(system, s, 0)))
        cmap.append_letter(s)
    return tuple(out)


def reflection_sequence(system: CoxeterSystem, word) -> tuple[GroupElement, ...]:
    """invs_R(Q) = (s1, s2^{s1}, ...)."""
    idx = [system.generator_index(s) for s in word]
    out = []
    prefix = system.identity
    for s in idx:
        g = system.generator(s)
        out.append(g.conjugate_by(prefix))
        prefix = prefix * g
    return tuple(out)


def inversion_sequence(system: CoxeterSystem, word) -> tuple[int, ...]:
    """Root indices (possibly negative side) of the plain inversion sequence."""
    idx = [system.generator_index(s) for s in word]
    out = []
    prefix = system.identity
    for s in idx:
        out.append(prefix.act(s))
        prefix = prefix * system.generator(s)
    return tuple(out)


def commutation_canonical(system: CoxeterSystem, word) -> tuple[int, ...]:
    """Canonical representative of the commutation class of a word.

    Greedy lexicographically-smallest linearization of the heap: letters are
    dependent when equal or non-commuting.
    """
    idx = [system.generator_index(s) for s in word]
    p = len(idx)
    mat = system.coxeter_matrix
    preds = [0] * p
    succs: list[list[int]] = [[] for _ in range(p)]
    for i in range(p):
        for j in range(i + 1, p):
            if idx[i] == idx[j] or mat[idx[i]][idx[j]] >= 3:
                preds[j] += 1
                succs[i].append(j)
    import heapq

    ready = [(idx[i], i) for i in range(p) if preds[i] == 0]
    heapq.heapify(ready)
    out = []
    while ready:
        _, i = heapq.heappop(ready)
        out.append(idx[i])
        for j in succs[i]:
            preds[j] -= 1
            if preds[j] == 0:
                heapq.heappush(ready, (idx[j], j))
    return tuple(out)


def commutation_equivalent(system: CoxeterSystem, word1, word2) -> bool:
    return commutation_canonical(system, word1) == commutation_canonical(system, word2)


def sorting_word_flat(element_or_pairs, c_word=None) -> tuple[int, ...]:
    """Flatten (copy, generator) sorting-word pairs to generator indices."""
    pairs = (
        element_or_pairs
        if c_word is None
        else element_or_pairs.sorting_word(c_word)
    )
    return tuple(s for _, s in pairs)
