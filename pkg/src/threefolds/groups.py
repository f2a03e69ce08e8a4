"""Finite groups as explicit objects.

A group is stored as a full multiplication table on element indices
0..n-1 with 0 the identity.  Groups built from permutation generators
inherit associativity from composition; tables supplied directly are
checked once at construction.  Conjugacy classes, element orders,
normal subgroups and quotients are all computed eagerly or on demand
and cached; instances are immutable after construction.
"""

from __future__ import annotations

import math
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence


class GroupConstructionError(ValueError):
    """Raised when constructor data does not define the claimed group."""


def _compose(p: tuple, q: tuple) -> tuple:
    """Permutation composition: (p*q)(x) = p(q(x)), images as tuples."""
    return tuple(p[q[i]] for i in range(len(p)))


def _perm_inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


class FiniteGroup:
    """A finite group with a full multiplication table.

    ``table[a][b]`` is the index of the product a*b.  ``perms`` holds a
    faithful permutation image of each element when the group was built
    from permutations (used for fast closure work), otherwise None.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        *,
        perms: Optional[Sequence[tuple]] = None,
        generators: Optional[Sequence[int]] = None,
        label: Optional[tuple] = None,
        check: bool = True,
    ):
        self.table = [list(row) for row in table]
        self.n = len(self.table)
        self.perms = list(perms) if perms is not None else None
        self.label = label
        if check:
            self._check_axioms(associativity=perms is None)
        self.inverse = self._compute_inverses()
        self.element_orders = self._compute_orders()
        self.exponent = math.lcm(*self.element_orders) if self.n else 1
        if generators is None:
            generators = self._find_generators()
        self.generators = list(generators)

    # -- construction-time verification --

    def _check_axioms(self, associativity: bool) -> None:
        n = self.n
        if n == 0:
            raise GroupConstructionError("empty table")
        for row in self.table:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise GroupConstructionError("table is not square over 0..n-1")
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise GroupConstructionError("index 0 is not an identity")
        for a in range(n):
            if sorted(self.table[a]) != list(range(n)):
                raise GroupConstructionError("rows must be permutations (no inverses)")
            col = sorted(self.table[b][a] for b in range(n))
            if col != list(range(n)):
                raise GroupConstructionError("columns must be permutations")
        if associativity:
            t = self.table
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    tab = ta[b]
                    tb = t[b]
                    row_ab = t[tab]
                    for c in range(n):
                        if row_ab[c] != ta[tb[c]]:
                            raise GroupConstructionError("table is not associative")

    def _compute_inverses(self) -> list:
        return [self.table[a].index(0) for a in range(self.n)]

    def _compute_orders(self) -> list:
        orders = [0] * self.n
        for a in range(self.n):
            x, k = a, 1
            while x != 0:
                x = self.table[x][a]
                k += 1
            orders[a] = k
        return orders

    def _find_generators(self) -> list:
        gens: list = []
        have = {0}
        for a in range(1, self.n):
            if a not in have:
                gens.append(a)
                have = set(self.closure_list(gens))
                if len(have) == self.n:
                    break
        return gens

    # -- basic operations --

    def mult(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse[a], -k)
        result = 0
        base = a
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    def order_of(self, a: int) -> int:
        return self.element_orders[a]

    def closure_list(self, gens: Iterable[int]) -> list:
        """Subgroup generated by gens, as a sorted list of element indices."""
        seen = {0}
        frontier = [0]
        gens = [g for g in set(gens)]
        table = self.table
        while frontier:
            new = []
            for x in frontier:
                row = table[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return sorted(seen)

    def closure_mask(self, gens: Iterable[int]) -> int:
        mask = 0
        for x in self.closure_list(gens):
            mask |= 1 << x
        return mask

    def generates(self, gens: Iterable[int]) -> bool:
        return len(self.closure_list(gens)) == self.n

    # -- conjugacy structure --

    @cached_property
    def conjugacy_classes(self) -> list:
        """Classes as sorted element lists; identity class first, then
        ordered by (element order, class size, least element)."""
        n = self.n
        seen = [False] * n
        classes = []
        for a in range(n):
            if seen[a]:
                continue
            cls = set()
            for g in range(n):
                cls.add(self.conj(g, a))
            cls = sorted(cls)
            for x in cls:
                seen[x] = True
            classes.append(cls)
        classes.sort(key=lambda c: (c != [0], self.element_orders[c[0]], len(c), c[0]))
        return classes

    @cached_property
    def class_of(self) -> list:
        out = [0] * self.n
        for ci, cls in enumerate(self.conjugacy_classes):
            for x in cls:
                out[x] = ci
        return out

    @property
    def num_classes(self) -> int:
        return len(self.conjugacy_classes)

    @cached_property
    def class_reps(self) -> list:
        return [c[0] for c in self.conjugacy_classes]

    @cached_property
    def center(self) -> list:
        return [
            a
            for a in range(self.n)
            if all(self.table[a][b] == self.table[b][a] for b in range(self.n))
        ]

    @cached_property
    def commutator_subgroup(self) -> list:
        comms = set()
        t = self.table
        inv = self.inverse
        for a in range(self.n):
            ta = t[a]
            for b in range(self.n):
                comms.add(t[ta[b]][t[inv[a]][inv[b]]])
        return self.closure_list(comms)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.n) for b in range(a))

    @cached_property
    def abelian_invariants(self) -> tuple:
        """Invariant factors d1 | d2 | ... of the abelianization."""
        der = self.commutator_subgroup
        if len(der) == 1:
            ab = self
        else:
            ab = self.quotient(self.normal_subgroup(der)).group
        # primary decomposition read off from counts of p-power orders
        n = ab.n
        primary: dict = {}
        m = n
        p = 2
        primes = []
        while p * p <= m:
            if m % p == 0:
                primes.append(p)
                while m % p == 0:
                    m //= p
            p += 1
        if m > 1:
            primes.append(m)
        for p in primes:
            # log_p of #{x : x^(p^k) = 1} equals sum_i min(k, lambda_i) for the
            # p-primary partition lambda; successive differences conjugate to lambda
            counts = []
            k = 1
            while True:
                c = sum(1 for a in range(n) if ab.power(a, p**k) == 0)
                counts.append(round(math.log(c, p)))
                if p**k >= ab.exponent:
                    break
                k += 1
            a_k = [counts[0]] + [counts[i] - counts[i - 1] for i in range(1, len(counts))]
            lam = _conjugate_partition(a_k)
            primary[p] = sorted(lam, reverse=True)
        # zip primary parts (largest first) into invariant factors
        width = max((len(v) for v in primary.values()), default=0)
        factors = []
        for i in range(width):
            d = 1
            for p, lam in primary.items():
                if i < len(lam):
                    d *= p ** lam[i]
            factors.append(d)
        factors = [d for d in factors if d > 1]
        return tuple(sorted(factors))

    # -- subgroup machinery --

    def normal_subgroup(self, elements: Iterable[int]) -> "NormalSubgroup":
        return NormalSubgroup(self, elements)

    def normal_subgroups_of_order(self, k: int) -> list:
        """All normal subgroups of order exactly k, found as class-closed
        subsets containing the identity that pass the subgroup test."""
        if self.n % k != 0:
            raise ValueError(f"{k} does not divide the group order {self.n}")
        if k == 1:
            return [self.normal_subgroup([0])]
        if k == self.n:
            return [self.normal_subgroup(range(self.n))]
        classes = self.conjugacy_classes
        sizes = [len(c) for c in classes]
        found = []
        # pick classes (always including the identity class) of total size k
        others = list(range(1, len(classes)))

        def extend(idx: int, remaining: int, chosen: list) -> None:
            if remaining == 0:
                members = [0]
                for ci in chosen:
                    members.extend(classes[ci])
                if self._is_subgroup(members):
                    found.append(self.normal_subgroup(members))
                return
            for j in range(idx, len(others)):
                ci = others[j]
                if sizes[ci] <= remaining:
                    # elements of a subgroup have orders dividing its order
                    if k % self.element_orders[classes[ci][0]] == 0:
                        extend(j + 1, remaining - sizes[ci], chosen + [ci])

        extend(0, k - 1, [])
        found.sort(key=lambda s: s.elements)
        return found

    def _is_subgroup(self, members: Sequence[int]) -> bool:
        mset = set(members)
        for a in members:
            if self.inverse[a] not in mset:
                return False
            row = self.table[a]
            for b in members:
                if row[b] not in mset:
                    return False
        return True

    def all_normal_subgroups(self) -> list:
        out = []
        for k in range(1, self.n + 1):
            if self.n % k == 0:
                out.extend(self.normal_subgroups_of_order(k))
        return out

    def quotient(self, kernel: "NormalSubgroup") -> "QuotientGroup":
        return QuotientGroup(self, kernel)

    # -- fingerprints (isomorphism invariants used for catalog checks) --

    @cached_property
    def fingerprint(self) -> tuple:
        class_profile = tuple(
            sorted((len(c), self.element_orders[c[0]]) for c in self.conjugacy_classes)
        )
        return (
            self.n,
            self.exponent,
            tuple(sorted(self.element_orders)),
            class_profile,
            len(self.center),
            len(self.commutator_subgroup),
            self.abelian_invariants,
        )

    def __repr__(self) -> str:
        tag = f" {self.label}" if self.label else ""
        return f"FiniteGroup(order={self.n}{tag})"


def _conjugate_partition(a: Sequence[int]) -> list:
    """Conjugate of a weakly decreasing-ish integer sequence (treated as a
    partition given by counts #{i: lambda_i >= k})."""
    lam = []
    i = 1
    while True:
        height = sum(1 for x in a if x >= i)
        if height == 0:
            break
        lam.append(height)
        i += 1
    return lam


class NormalSubgroup:
    """A normal subgroup of a parent group, stored as an element bitset."""

    def __init__(self, parent: FiniteGroup, elements: Iterable[int]):
        self.parent = parent
        self.elements = tuple(sorted(set(elements)))
        self.order = len(self.elements)
        self.mask = 0
        for x in self.elements:
            self.mask |= 1 << x
        self._verify()

    def _verify(self) -> None:
        G = self.parent
        if not self.elements or self.elements[0] != 0:
            raise GroupConstructionError("subgroup must contain the identity")
        if not G._is_subgroup(self.elements):
            raise GroupConstructionError("set is not closed under products/inverses")
        for g in range(G.n):
            for x in self.elements:
                if not (self.mask >> G.conj(g, x)) & 1:
                    raise GroupConstructionError("subgroup is not normal")

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)

    def intersect_trivially(self, other: "NormalSubgroup") -> bool:
        return (self.mask & other.mask) == 1

    def __repr__(self) -> str:
        return f"NormalSubgroup(order={self.order} of {self.parent!r})"


class QuotientGroup:
    """G/K with its projection map and coset representatives."""

    def __init__(self, parent: FiniteGroup, kernel: NormalSubgroup):
        if kernel.parent is not parent:
            raise ValueError("kernel does not belong to the parent group")
        self.parent = parent
        self.kernel = kernel
        n = parent.n
        coset_of = [-1] * n
        reps = []
        # cosets enumerated so that the kernel itself is coset 0
        for a in range(n):
            if coset_of[a] != -1:
                continue
            idx = len(reps)
            reps.append(a)
            row = parent.table[a]
            for x in kernel.elements:
                coset_of[row[x]] = idx
        self.projection = coset_of
        self.representatives = reps
        m = len(reps)
        table = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                table[i][j] = coset_of[parent.table[reps[i]][reps[j]]]
        self.group = FiniteGroup(table, check=False, label=None)
        if self.group.n * kernel.order != parent.n:
            raise GroupConstructionError("coset count mismatch")

    def project(self, a: int) -> int:
        return self.projection[a]

    def lift(self, c: int) -> int:
        return self.representatives[c]

    def __repr__(self) -> str:
        return f"QuotientGroup(order={self.group.n} = {self.parent.n}/{self.kernel.order})"


# -- constructors ----------------------------------------------------------


def from_permutations(
    gens: Sequence[Sequence[int]],
    *,
    expected_order: Optional[int] = None,
    label: Optional[tuple] = None,
) -> FiniteGroup:
    """Build the group generated by permutations (images of 0..deg-1)."""
    if not gens:
        gens = [(0,)]
    degree = len(gens[0])
    gens = [tuple(g) for g in gens]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupConstructionError(f"not a permutation of 0..{degree-1}: {g}")
    identity = tuple(range(degree))
    elems = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = _compose(p, g)
                if q not in index:
                    index[q] = len(elems)
                    elems.append(q)
                    new.append(q)
        frontier = new
        if expected_order is not None and len(elems) > expected_order:
            raise GroupConstructionError(
                f"generators produce more than the declared order {expected_order}"
            )
    if expected_order is not None and len(elems) != expected_order:
        raise GroupConstructionError(
            f"generators produce order {len(elems)}, declared {expected_order}"
        )
    n = len(elems)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            table[i][j] = index[_compose(elems[i], elems[j])]
    gen_idx = [index[g] for g in gens]
    return FiniteGroup(table, perms=elems, generators=gen_idx, label=label, check=False)


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    perms = [tuple((i + k) % n for i in range(n)) for k in range(n)]
    return FiniteGroup(table, perms=perms, generators=[1 % n] if n > 1 else [], check=False)


def abelian_group(invariants: Sequence[int]) -> FiniteGroup:
    """Direct product of cyclic groups of the given orders."""
    g = cyclic_group(1)
    for d in invariants:
        g = direct_product(g, cyclic_group(d))
    return g


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n (symmetries of the n-gon), n >= 1."""
    if n < 1:
        raise GroupConstructionError("dihedral parameter must be >= 1")
    if n == 1:
        return cyclic_group(2)
    if n == 2:
        return abelian_group([2, 2])
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return from_permutations([rot, ref], expected_order=2 * n)


def dicyclic_group(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: <a, b | a^(2n), b^2 = a^n, b a b^-1 = a^-1>.

    n = 2 gives the quaternion group.
    """
    if n < 1:
        raise GroupConstructionError("dicyclic parameter must be >= 1")
    m = 4 * n
    # regular-style action on Z_{2n} x {0,1}
    def idx(i, s):
        return i + 2 * n * s

    a = [0] * m
    b = [0] * m
    for i in range(2 * n):
        a[idx(i, 0)] = idx((i + 1) % (2 * n), 0)
        a[idx(i, 1)] = idx((i - 1) % (2 * n), 1)
        b[idx(i, 0)] = idx(i, 1)
        b[idx(i, 1)] = idx((i + n) % (2 * n), 0)
    return from_permutations([tuple(a), tuple(b)], expected_order=m)


def quaternion_group() -> FiniteGroup:
    return dicyclic_group(2)


def symmetric_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupConstructionError("symmetric_group supports degree 1..5")
    if n == 1:
        return cyclic_group(1)
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return from_permutations([cycle, swap], expected_order=math.factorial(n))


def alternating_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupConstructionError("alternating_group supports degree 1..5")
    if n <= 2:
        return cyclic_group(1)
    if n == 3:
        return cyclic_group(3)
    three = tuple([1, 2, 0] + list(range(3, n)))
    if n == 4:
        double = (1, 0, 3, 2)
        return from_permutations([three, double], expected_order=12)
    five = (1, 2, 3, 4, 0)
    return from_permutations([five, (0, 1, 3, 4, 2)], expected_order=60)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    n, m = a.n, b.n
    table = [[0] * (n * m) for _ in range(n * m)]
    for i1 in range(n):
        for j1 in range(m):
            r = i1 * m + j1
            for i2 in range(n):
                row_a = a.table[i1]
                row_b = b.table[j1]
                base = row_a[i2] * m
                for j2 in range(m):
                    table[r][i2 * m + j2] = base + row_b[j2]
    return FiniteGroup(table, check=False)


def semidirect_product(
    n_grp: FiniteGroup, h_grp: FiniteGroup, action: Sequence[Sequence[int]]
) -> FiniteGroup:
    """N x| H where action[h] is the automorphism of N induced by h.

    Elements are pairs (x, h) indexed x*|H|+... stored as h*|N|+x with
    multiplication (x,h)(y,k) = (x * action[h](y), h k).
    """
    nn, nh = n_grp.n, h_grp.n
    for h in range(nh):
        img = action[h]
        if img[0] != 0 or sorted(img) != list(range(nn)):
            raise GroupConstructionError("action entries must be permutations fixing 1")
    # verify action is a homomorphism into Aut(N)
    for h in range(nh):
        for k in range(nh):
            hk = h_grp.table[h][k]
            for x in range(nn):
                if action[hk][x] != action[h][action[k][x]]:
                    raise GroupConstructionError("action is not a homomorphism")
        for x in range(nn):
            for y in range(nn):
                if action[h][n_grp.table[x][y]] != n_grp.table[action[h][x]][action[h][y]]:
                    raise GroupConstructionError("action values are not automorphisms")
    size = nn * nh

    def idx(x, h):
        return h * nn + x

    table = [[0] * size for _ in range(size)]
    for h in range(nh):
        for x in range(nn):
            r = idx(x, h)
            act = action[h]
            for k in range(nh):
                for y in range(nn):
                    table[r][idx(y, k)] = idx(n_grp.table[x][act[y]], h_grp.table[h][k])
    return FiniteGroup(table, check=True)


def construct_group(spec) -> FiniteGroup:
    """Build a group from constructor data.

    Accepted forms: ("cyclic", n), ("abelian", [d1, ...]), ("dihedral", n),
    ("dicyclic", n), ("quaternion",), ("symmetric", n), ("alternating", n),
    ("perm", [gen, ...], expected_order_or_None),
    ("direct", specA, specB), ("semidirect", specN, specH, action).
    """
    kind = spec[0]
    if kind == "cyclic":
        return cyclic_group(spec[1])
    if kind == "abelian":
        return abelian_group(spec[1])
    if kind == "dihedral":
        return dihedral_group(spec[1])
    if kind == "dicyclic":
        return dicyclic_group(spec[1])
    if kind == "quaternion":
        return quaternion_group()
    if kind == "symmetric":
        return symmetric_group(spec[1])
    if kind == "alternating":
        return alternating_group(spec[1])
    if kind == "perm":
        return from_permutations(spec[1], expected_order=spec[2] if len(spec) > 2 else None)
    if kind == "direct":
        return direct_product(construct_group(spec[1]), construct_group(spec[2]))
    if kind == "semidirect":
        return semidirect_product(construct_group(spec[1]), construct_group(spec[2]), spec[3])
    raise GroupConstructionError(f"unknown constructor kind {kind!r}")
