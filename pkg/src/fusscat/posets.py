"""Finite posets with explicit cover relations.

Order relations are stored as per-element bitmasks, which keeps closure,
reduction, lattice tests, and isomorphism checks fast at the few-hundred
element scale this library works at.
"""

from __future__ import annotations

from collections import Counter, deque


class Poset:
    def __init__(self, elements, covers, edge_labels=None):
        """elements: list of hashable labels; covers: (i, j) pairs, i covered by j."""
        self.elements = list(elements)
        self.n = len(self.elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != self.n:
            raise ValueError("poset elements must be distinct")
        self.covers = sorted(set(covers))
        for i, j in self.covers:
            if not (0 <= i < self.n and 0 <= j < self.n) or i == j:
                raise ValueError("bad cover pair")
        self._up = None
        self._down = None
        self.edge_labels = dict(edge_labels or {})

    @staticmethod
    def from_relation(elements, leq) -> "Poset":
        """Build from a comparison callable by transitive reduction."""
        elements = list(elements)
        n = len(elements)
        rel = [[False] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and leq(elements[i], elements[j]):
                    rel[i][j] = True
        covers = []
        for i in range(n):
            for j in range(n):
                if rel[i][j] and not any(rel[i][k] and rel[k][j] for k in range(n)):
                    covers.append((i, j))
        return Poset(elements, covers)

    @staticmethod
    def from_edges(elements, edges, edge_labels=None) -> "Poset":
        """Build from arbitrary order-generating edges (transitively closed,
        then reduced to covers)."""
        p = Poset(elements, [])
        n = p.n
        adj = [0] * n
        for i, j in edges:
            adj[i] |= 1 << j
        up = _reachability(adj, n)
        covers = []
        for i in range(n):
            above = up[i] & ~(1 << i)
            for j in _bits(above):
                # j covers i iff nothing sits strictly between them
                if not any(k != j and (up[k] >> j) & 1 for k in _bits(above)):
                    covers.append((i, j))
        labels = {}
        if edge_labels:
            cov = set(covers)
            labels = {e: l for e, l in edge_labels.items() if e in cov}
        return Poset(elements, covers, labels)

    # -- relation bitmasks ---------------------------------------------------

    def _compute(self):
        if self._up is not None:
            return
        n = self.n
        adj = [0] * n
        radj = [0] * n
        for i, j in self.covers:
            adj[i] |= 1 << j
            radj[j] |= 1 << i
        self._up = _reachability(adj, n)
        self._down = _reachability(radj, n)

    def up_mask(self, i) -> int:
        self._compute()
        return self._up[i]

    def down_mask(self, i) -> int:
        self._compute()
        return self._down[i]

    def leq(self, a, b) -> bool:
        """a <= b by element label."""
        i, j = self.index[a], self.index[b]
        return bool((self.up_mask(i) >> j) & 1)

    def upper_covers(self, i) -> list[int]:
        return sorted(j for a, j in self.covers if a == i)

    def lower_covers(self, j) -> list[int]:
        return sorted(i for i, b in self.covers if b == j)

    def minimal_elements(self) -> list[int]:
        has_lower = {j for _, j in self.covers}
        return [i for i in range(self.n) if i not in has_lower]

    def maximal_elements(self) -> list[int]:
        has_upper = {i for i, _ in self.covers}
        return [i for i in range(self.n) if i not in has_upper]

    # -- lattice structure ----------------------------------------------------

    def meet_index(self, i: int, j: int):
        common = self.down_mask(i) & self.down_mask(j)
        # maxima of the common lower set
        maxima = [k for k in _bits(common) if self.up_mask(k) & common == (1 << k)]
        if len(maxima) == 1:
            return maxima[0]
        return None

    def join_index(self, i: int, j: int):
        common = self.up_mask(i) & self.up_mask(j)
        minima = [k for k in _bits(common) if self.down_mask(k) & common == (1 << k)]
        if len(minima) == 1:
            return minima[0]
        return None

    def is_lattice(self) -> bool:
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.meet_index(i, j) is None or self.join_index(i, j) is None:
                    return False
        return True

    # -- shape ------------------------------------------------------------------

    def rank_vector(self, rank_of=None) -> tuple[int, ...]:
        """Counts by rank; default rank is longest-path height from minima."""
        if rank_of is None:
            height = [0] * self.n
            for i in self._linear_extension():
                for j in self.upper_covers(i):
                    height[j] = max(height[j], height[i] + 1)
            ranks = height
        else:
            ranks = [rank_of(e) for e in self.elements]
        counts = Counter(ranks)
        return tuple(counts[r] for r in range(max(counts) + 1)) if counts else ()

    def is_rank_symmetric(self, rank_of=None) -> bool:
        v = self.rank_vector(rank_of)
        return v == v[::-1]

    def is_graded_by(self, rank_of) -> bool:
        ranks = [rank_of(e) for e in self.elements]
        return all(ranks[j] == ranks[i] + 1 for i, j in self.covers)

    def _linear_extension(self) -> list[int]:
        indeg = Counter(j for _, j in self.covers)
        order = deque(i for i in range(self.n) if indeg[i] == 0)
        out = []
        succ = [[] for _ in range(self.n)]
        for i, j in self.covers:
            succ[i].append(j)
        while order:
            i = order.popleft()
            out.append(i)
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    order.append(j)
        if len(out) != self.n:
            raise ValueError("cover relation has a cycle")
        return out

    def dual(self) -> "Poset":
        return Poset(
            self.elements,
            [(j, i) for i, j in self.covers],
            {(j, i): l for (i, j), l in self.edge_labels.items()},
        )

    # -- isomorphism --------------------------------------------------------------

    def _refine_colors(self) -> list:
        up_cov = [[] for _ in range(self.n)]
        down_cov = [[] for _ in range(self.n)]
        for i, j in self.covers:
            up_cov[i].append(j)
            down_cov[j].append(i)
        colors = [
            (len(up_cov[i]), len(down_cov[i]), bin(self.up_mask(i)).count("1"),
             bin(self.down_mask(i)).count("1"))
            for i in range(self.n)
        ]
        while True:
            sigs = [
                (
                    colors[i],
                    tuple(sorted(colors[j] for j in up_cov[i])),
                    tuple(sorted(colors[j] for j in down_cov[i])),
                )
                for i in range(self.n)
            ]
            # ids assigned by sorted signature, so they agree across posets
            ranking = {sig: k for k, sig in enumerate(sorted(set(sigs)))}
            new = [ranking[sig] for sig in sigs]
            if len(set(new)) == len(set(colors)):
                return new
            colors = new

    def isomorphism(self, other: "Poset"):
        """A poset isomorphism as an index map, or None."""
        if self.n != other.n or len(self.covers) != len(other.covers):
            return None
        ca, cb = self._refine_colors(), other._refine_colors()
        if sorted(ca) != sorted(cb):
            return None
        order = sorted(range(self.n), key=lambda i: (ca.count(ca[i]), ca[i], i))
        candidates = [
            [j for j in range(other.n) if cb[j] == ca[i]] for i in range(self.n)
        ]
        mapping: dict[int, int] = {}
        used = set()

        sup = [set() for _ in range(self.n)]
        sdown = [set() for _ in range(self.n)]
        oup = [set() for _ in range(other.n)]
        odown = [set() for _ in range(other.n)]
        for i, j in self.covers:
            sup[i].add(j)
            sdown[j].add(i)
        for i, j in other.covers:
            oup[i].add(j)
            odown[j].add(i)

        def backtrack(pos):
            if pos == len(order):
                return True
            i = order[pos]
            for j in candidates[i]:
                if j in used:
                    continue
                ok = True
                for k in sup[i]:
                    if k in mapping and mapping[k] not in oup[j]:
                        ok = False
                        break
                if ok:
                    for k in sdown[i]:
                        if k in mapping and mapping[k] not in odown[j]:
                            ok = False
                            break
                if ok:
                    mapping[i] = j
                    used.add(j)
                    if backtrack(pos + 1):
                        return True
                    del mapping[i]
                    used.discard(j)
            return False

        if backtrack(0):
            return dict(mapping)
        return None

    def is_isomorphic(self, other: "Poset") -> bool:
        return self.isomorphism(other) is not None

    def is_self_dual(self) -> bool:
        return self.is_isomorphic(self.dual())

    def check_isomorphism_map(self, other: "Poset", mapping) -> bool:
        """Whether an element-level map label->label is a poset isomorphism."""
        idx = {}
        for a, b in mapping.items():
            idx[self.index[a]] = other.index[b]
        if len(idx) != self.n or len(set(idx.values())) != self.n:
            return False
        for i in range(self.n):
            for j in range(self.n):
                lhs = bool((self.up_mask(i) >> j) & 1)
                rhs = bool((other.up_mask(idx[i]) >> idx[j]) & 1)
                if lhs != rhs:
                    return False
        return True

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for _, j in self.covers:
            deg[j] += 1
        return deg

    def out_degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, _ in self.covers:
            deg[i] += 1
        return deg

    def to_dot(self, name="poset", label_of=str, edge_label_of=None) -> str:
        lines = [f"digraph {name} {{"]
        for i, e in enumerate(self.elements):
            lines.append(f'  n{i} [label="{label_of(e)}"];')
        for i, j in self.covers:
            lab = ""
            if edge_label_of is not None:
                text = edge_label_of((i, j))
                if text:
                    lab = f' [label="{text}"]'
            elif (i, j) in self.edge_labels:
                lab = f' [label="{self.edge_labels[(i, j)]}"]'
            lines.append(f"  n{i} -> n{j}{lab};")
        lines.append("}")
        return "\n".join(lines)


def _reachability(adj: list[int], n: int) -> list[int]:
    """Reflexive-transitive closure masks from one-step masks."""
    reach = [adj[i] | (1 << i) for i in range(n)]
    order = list(range(n))
    changed = True
    while changed:
        changed = False
        for i in order:
            m = reach[i]
            acc = m
            mm = m
            while mm:
                j = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                acc |= reach[j]
            if acc != m:
                reach[i] = acc
                changed = True
    return reach


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b
