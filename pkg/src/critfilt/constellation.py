"""Permutation constellations: the combinatorial side of Belyi and Fried pairs.

Permutations are 0-based image tuples: ``p[i]`` is the image of ``i``.
A constellation is a tuple (s_1, ..., s_k) with s_1 s_2 ... s_k = id
(composition left to right: apply s_1 first) generating a transitive group.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Sequence

from .errors import BudgetExceeded, MalformedTuple, WrongArity

Perm = tuple


# ---------------------------------------------------------------------------
# permutations


def identity(d: int) -> Perm:
    return tuple(range(d))


def compose(p: Perm, q: Perm) -> Perm:
    """p then q: i -> q[p[i]]."""
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def conjugate(p: Perm, g: Perm) -> Perm:
    """g^-1 p g, i.e. relabel i -> g[i]."""
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[g[i]] = g[j]
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def from_cycles(d: int, cyc: Iterable[Sequence[int]], one_based: bool = False) -> Perm:
    out = list(range(d))
    off = 1 if one_based else 0
    for c in cyc:
        c = [x - off for x in c]
        for a, b in zip(c, c[1:] + c[:1]):
            out[a] = b
    return tuple(out)


def is_perm(p) -> bool:
    return sorted(p) == list(range(len(p)))


def product_all(ps: Sequence[Perm]) -> Perm:
    out = identity(len(ps[0]))
    for p in ps:
        out = compose(out, p)
    return out


def is_transitive(ps: Sequence[Perm]) -> bool:
    d = len(ps[0])
    seen = {0}
    todo = [0]
    while todo:
        i = todo.pop()
        for p in ps:
            j = p[i]
            if j not in seen:
                seen.add(j)
                todo.append(j)
    return len(seen) == d


def perms_of_type(d: int, shape: Sequence[int]) -> list[Perm]:
    """All permutations of {0..d-1} with the given cycle type."""
    shape = tuple(sorted(shape, reverse=True))
    if sum(shape) != d:
        raise ValueError(f"cycle type {shape} is not a partition of {d}")
    return [p for p in permutations(range(d)) if cycle_type(p) == shape]


def partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


# ---------------------------------------------------------------------------
# constellations


class Constellation:
    __slots__ = ("perms", "_canon")

    def __init__(self, perms: Sequence[Perm], check: bool = True):
        perms = tuple(tuple(p) for p in perms)
        if check:
            if not 2 <= len(perms) <= 4 and not (len(perms) >= 1 and len(perms[0]) == 1):
                raise MalformedTuple(f"need 2 to 4 permutations, got {len(perms)}")
            d = len(perms[0])
            if any(len(p) != d or not is_perm(p) for p in perms):
                raise MalformedTuple("entries are not permutations of one set")
            if product_all(perms) != identity(d):
                raise MalformedTuple("product is not the identity")
            if not is_transitive(perms):
                raise MalformedTuple("group is not transitive")
        self.perms = perms
        self._canon = None

    @property
    def degree(self) -> int:
        return len(self.perms[0])

    @property
    def k(self) -> int:
        return len(self.perms)

    def __len__(self):
        return len(self.perms)

    def __getitem__(self, i):
        return self.perms[i]

    def __eq__(self, other):
        return isinstance(other, Constellation) and self.perms == other.perms

    def __hash__(self):
        return hash(self.perms)

    def __repr__(self):
        return f"Constellation({self.format()})"

    def format(self) -> str:
        def one(p):
            cs = [c for c in cycles(p) if len(c) > 1]
            return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cs) or "id"
        return ", ".join(one(p) for p in self.perms)

    def passport(self) -> tuple:
        return tuple(cycle_type(p) for p in self.perms)

    def genus(self) -> int:
        return genus(self)


def genus(C) -> int:
    """2 - 2g = sum of cycle counts - (k - 2) d."""
    perms = C.perms if isinstance(C, Constellation) else tuple(C)
    d, k = len(perms[0]), len(perms)
    chi = sum(len(cycles(p)) for p in perms) - (k - 2) * d
    if chi % 2 or chi > 2:
        raise MalformedTuple(f"Euler characteristic {chi} is impossible")
    return (2 - chi) // 2


def genus_from_passport(d: int, passport: Sequence[Sequence[int]]):
    chi = sum(len(p) for p in passport) - (len(passport) - 2) * d
    return (2 - chi) / 2 if chi % 2 else (2 - chi) // 2


# ---------------------------------------------------------------------------
# canonical forms


def _relabel_from(perms: Sequence[Perm], start: int):
    """Relabel by breadth-first order from ``start`` following the perms in order."""
    d = len(perms[0])
    label = [-1] * d
    label[start] = 0
    order = [start]
    nxt = 1
    head = 0
    while head < len(order):
        i = order[head]
        head += 1
        for p in perms:
            j = p[i]
            if label[j] < 0:
                label[j] = nxt
                nxt += 1
                order.append(j)
    return tuple(label)


def canonical_key(perms: Sequence[Perm]) -> tuple:
    """A complete conjugation invariant for transitive tuples (minimum over starting points)."""
    best = None
    for s in range(len(perms[0])):
        g = _relabel_from(perms, s)
        cand = tuple(conjugate(p, g) for p in perms)
        if best is None or cand < best:
            best = cand
    return best


def _standard_first(p: Perm) -> list[tuple[int, ...]]:
    """Cycles of p ordered by length; fixed points first gives the least first row."""
    return sorted(cycles(p), key=len)


def canonical_form(C) -> Constellation:
    """The lexicographically least tuple among all simultaneous conjugates.

    The least first row is the standard form of its cycle type (short cycles
    first, consecutive labels), so only labelings realising that row are
    searched. Each block of labels picks an unused old cycle and a start
    point; a branch is cut once its determined prefix of the later rows
    exceeds the best tuple found so far.
    """
    perms = C.perms if isinstance(C, Constellation) else tuple(tuple(p) for p in C)
    d = len(perms[0])
    first = perms[0]
    lengths = sorted(len(c) for c in cycles(first))
    blocks, pos = [], 0
    for L in lengths:
        blocks.append((pos, L))
        pos += L
    pool = cycles(first)
    rest = perms[1:]
    best = [None]

    def prefix(label, inv):
        out = []
        for p in rest:
            for j in range(d):
                o = inv[j]
                if o < 0:
                    return out
                t = label[p[o]]
                if t < 0:
                    return out
                out.append(t)
        return out

    def search(b, label, inv, used):
        if best[0] is not None:
            pre = prefix(label, inv)
            if pre > best[0][: len(pre)]:
                return
        if b == len(blocks):
            full = prefix(label, inv)
            if best[0] is None or full < best[0]:
                best[0] = full
            return
        start, L = blocks[b]
        for ci, cyc in enumerate(pool):
            if used[ci] or len(cyc) != L:
                continue
            used[ci] = True
            for s in range(L):
                for t in range(L):
                    old = cyc[(s + t) % L]
                    label[old] = start + t
                    inv[start + t] = old
                search(b + 1, label, inv, used)
                for t in range(L):
                    label[cyc[(s + t) % L]] = -1
                    inv[start + t] = -1
            used[ci] = False

    search(0, [-1] * d, [-1] * d, [False] * len(pool))
    row0 = [0] * d
    for start, L in blocks:
        for t in range(L):
            row0[start + t] = start + (t + 1) % L
    flat = best[0]
    out = [tuple(row0)] + [tuple(flat[i * d:(i + 1) * d]) for i in range(len(rest))]
    return Constellation(out, check=False)


def naive_canonical_form(C) -> tuple:
    """Oracle: minimum over all d! conjugators."""
    perms = C.perms if isinstance(C, Constellation) else tuple(C)
    d = len(perms[0])
    return min(tuple(conjugate(p, g) for p in perms) for g in permutations(range(d)))


# ---------------------------------------------------------------------------
# budgets and enumeration


def budgets() -> dict:
    out = {"triples": 8, "braid": 6}
    raw = os.environ.get("CRITFILT_BUDGET", "").strip()
    if not raw:
        return out
    if raw.isdigit():
        return {k: int(raw) for k in out}
    for item in raw.split(","):
        key, _, val = item.partition("=")
        if key.strip() in out and val.strip().isdigit():
            out[key.strip()] = int(val)
    return out


def _check_budget(d: int, kind: str, budget: int | None):
    limit = budgets()[kind] if budget is None else budget
    if d > limit:
        raise BudgetExceeded(f"degree {d} exceeds the {kind} budget {limit}")


def _class_reps(d: int) -> list[Perm]:
    return [from_cycles(d, _standard_cycles(shape)) for shape in partitions(d)]


def _standard_cycles(shape):
    out, i = [], 0
    for k in shape:
        out.append(list(range(i, i + k)))
        i += k
    return out


def enumerate_tuples(d: int, k: int, genus_filter: int | None = None, passport=None) -> list[Constellation]:
    """Transitive k-constellations of degree d up to simultaneous conjugation.

    sigma_1 runs over one representative per cycle type, the middle entries
    over S_d (or over the requested cycle types), and sigma_k is forced by
    the product condition. Classes are merged by a complete invariant and
    then canonicalised.
    """
    if d < 1 or k < 2:
        raise ValueError("need d >= 1 and k >= 2")
    if passport is not None:
        passport = [tuple(sorted(p, reverse=True)) for p in passport]
        if len(passport) != k:
            raise ValueError(f"passport has {len(passport)} entries, expected {k}")
        firsts = [from_cycles(d, _standard_cycles(passport[0]))]
        middles = [perms_of_type(d, t) for t in passport[1:-1]]
        last_type = passport[-1]
    else:
        firsts = _class_reps(d)
        every = list(permutations(range(d)))
        middles = [every] * (k - 2)
        last_type = None
    found = {}
    for s1 in firsts:
        for middle in product(*middles):
            last = inverse(product_all((s1,) + middle))
            if last_type is not None and cycle_type(last) != last_type:
                continue
            perms = (s1,) + middle + (last,)
            if not is_transitive(perms):
                continue
            if genus_filter is not None and genus(perms) != genus_filter:
                continue
            key = canonical_key(perms)
            if key not in found:
                found[key] = perms
    out = [canonical_form(p) for p in found.values()]
    return sorted(out, key=lambda c: c.perms)


def enumerate_triples(d: int, genus_filter: int | None = None, budget: int | None = None) -> list[Constellation]:
    _check_budget(d, "triples", budget)
    return enumerate_tuples(d, 3, genus_filter)


def naive_enumerate(d: int, k: int, genus_filter: int | None = None) -> list[tuple]:
    """Oracle: scan all of S_d^(k-1), dedupe by pairwise conjugacy tests."""
    every = list(permutations(range(d)))
    conj = list(permutations(range(d)))
    reps = []
    for head in product(every, repeat=k - 1):
        perms = head + (inverse(product_all(head)),)
        if not is_transitive(perms):
            continue
        if genus_filter is not None and genus(perms) != genus_filter:
            continue
        if any(_conjugate_tuples(perms, r, conj) for r in reps):
            continue
        reps.append(perms)
    return reps


def _conjugate_tuples(a, b, conj) -> bool:
    if tuple(cycle_type(p) for p in a) != tuple(cycle_type(p) for p in b):
        return False
    return any(all(conjugate(p, g) == q for p, q in zip(a, b)) for g in conj)


# ---------------------------------------------------------------------------
# braid action


def braid_act(i: int, C, inverse_move: bool = False) -> Constellation:
    """sigma_i: (.., a, b, ..) -> (.., a b a^-1, a, ..) at positions i, i+1 (1-based)."""
    perms = list(C.perms if isinstance(C, Constellation) else C)
    if len(perms) != 4:
        raise WrongArity(f"braid moves act on 4-tuples, got {len(perms)}")
    if not 1 <= i <= 3:
        raise WrongArity(f"generator index {i} not in 1..3")
    a, b = perms[i - 1], perms[i]
    if not inverse_move:
        perms[i - 1] = compose(compose(a, b), inverse(a))
        perms[i] = a
    else:
        perms[i - 1] = b
        perms[i] = compose(compose(inverse(b), a), b)
    return Constellation(perms, check=False)


@dataclass
class BraidOrbit:
    representative: Constellation
    size: int
    members: list

    def passports(self) -> Counter:
        return Counter(m.passport() for m in self.members)


def _passport_spec(passport) -> list[tuple[int, ...]]:
    if isinstance(passport, str):
        return [tuple(int(x) for x in part.split(",")) for part in passport.split(";")]
    return [tuple(p) for p in passport]


def braid_orbits(d: int, passport, budget: int | None = None) -> list[BraidOrbit]:
    """Orbits of the braid generators on classes with the given passport (as a multiset)."""
    _check_budget(d, "braid", budget)
    spec = _passport_spec(passport)
    if len(spec) != 4 or any(sum(p) != d for p in spec):
        raise ValueError(f"passport {spec} is not four partitions of {d}")
    target = Counter(tuple(sorted(p, reverse=True)) for p in spec)
    classes = {}
    for shape_order in sorted(set(permutations([tuple(sorted(p, reverse=True)) for p in spec]))):
        for c in enumerate_tuples(d, 4, passport=shape_order):
            classes[canonical_key(c.perms)] = c
    return _orbits(classes, target)


def _orbits(classes: dict, target: Counter) -> list[BraidOrbit]:
    seen = set()
    out = []
    for key in sorted(classes):
        if key in seen:
            continue
        orbit = []
        todo = deque([key])
        seen.add(key)
        while todo:
            cur = todo.popleft()
            orbit.append(cur)
            for i in (1, 2, 3):
                for inv in (False, True):
                    nxt = canonical_key(braid_act(i, Constellation(cur, check=False), inv).perms)
                    if nxt not in seen:
                        seen.add(nxt)
                        todo.append(nxt)
        members = sorted((canonical_form(classes.get(k) or Constellation(k, check=False)) for k in orbit),
                         key=lambda c: c.perms)
        for m in members:
            if Counter(m.passport()) != target:
                raise MalformedTuple("braid move left the passport multiset")
        out.append(BraidOrbit(members[0], len(members), members))
    out.sort(key=lambda o: (-o.size, o.representative.perms))
    return out


def brute_force_orbits(d: int, passport) -> list[frozenset]:
    """Oracle: all 4-tuples with the passport multiset, closed under braid moves, then up to conjugacy."""
    spec = [tuple(sorted(p, reverse=True)) for p in _passport_spec(passport)]
    target = Counter(spec)
    every = list(permutations(range(d)))
    tuples = set()
    for head in product(every, repeat=3):
        perms = head + (inverse(product_all(head)),)
        if Counter(cycle_type(p) for p in perms) != target or not is_transitive(perms):
            continue
        tuples.add(perms)
    comps = []
    seen = set()
    conj = list(permutations(range(d)))
    for t in sorted(tuples):
        if t in seen:
            continue
        comp = set()
        todo = [t]
        seen.add(t)
        while todo:
            cur = todo.pop()
            comp.add(cur)
            nbrs = [braid_act(i, cur, inv).perms for i in (1, 2, 3) for inv in (False, True)]
            nbrs += [tuple(conjugate(p, g) for p in cur) for g in conj]
            for n in nbrs:
                if n not in seen:
                    seen.add(n)
                    todo.append(n)
        comps.append(frozenset(naive_canonical_form(c) for c in comp))
    return comps


# ---------------------------------------------------------------------------
# dessins


@dataclass
class Dessin:
    degree: int
    black: list  # cycles of sigma_1 (rotation at each black vertex)
    white: list  # cycles of sigma_2
    faces: list  # cycles of sigma_3
    genus: int

    def euler(self) -> int:
        return len(self.black) + len(self.white) - self.degree + len(self.faces)

    def to_dot(self, name: str = "dessin") -> str:
        """Plain-text DOT graph; edge labels carry the rotation order at both ends."""
        lines = [f"graph {name} {{", f'  graph [genus="{self.genus}", degree="{self.degree}"];']
        for i, c in enumerate(self.black):
            ports = " ".join(str(e + 1) for e in c)
            lines.append(f'  b{i + 1} [shape=circle, style=filled, fillcolor=black, rotation="{ports}"];')
        for i, c in enumerate(self.white):
            ports = " ".join(str(e + 1) for e in c)
            lines.append(f'  w{i + 1} [shape=circle, rotation="{ports}"];')
        bpos = {e: (i, c.index(e)) for i, c in enumerate(self.black) for e in c}
        wpos = {e: (i, c.index(e)) for i, c in enumerate(self.white) for e in c}
        for e in range(self.degree):
            bi, bp = bpos[e]
            wi, wp = wpos[e]
            lines.append(f'  b{bi + 1} -- w{wi + 1} [label="{e + 1}", ports="{bp + 1}:{wp + 1}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def dessin_export(C, k: int = 3) -> Dessin:
    perms = C.perms if isinstance(C, Constellation) else tuple(C)
    if len(perms) != 3 or k != 3:
        raise WrongArity("dessins come from 3-constellations")
    return Dessin(len(perms[0]), cycles(perms[0]), cycles(perms[1]), cycles(perms[2]), genus(perms))


def parse_dot(text: str) -> dict:
    """Read back the counts written by Dessin.to_dot (used by tests)."""
    black = sum(1 for ln in text.splitlines() if ln.strip().startswith("b") and "[shape" in ln)
    white = sum(1 for ln in text.splitlines() if ln.strip().startswith("w") and "[shape" in ln)
    edges = sum(1 for ln in text.splitlines() if " -- " in ln)
    return {"black": black, "white": white, "edges": edges}
