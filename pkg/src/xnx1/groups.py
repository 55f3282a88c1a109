"""Explicit matrix model of the central extensions of PGL_2(F_5).

The main object is the order-480 group generated inside GL_2(F_25) by
SL_2(F_5), the scalar matrix 2*I and the matrix w = [[0, z], [-z^-1, 0]],
where z has multiplicative order 8 and z^2 = 2.  Dropping the scalar
generator gives the order-240 variant.  The module computes conjugacy
classes, the quotient to S_5 (via the exceptional isomorphism with
PGL_2(F_5)), the point stabilizer chain H > N_1, N_2, the 6-point and
48-point permutation actions and the trace/determinant lift tables.

Matrices are 4-tuples (a, b, c, d) of field elements, row-major; field
elements are hashable and totally ordered, so every listing here is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .arith import QuadField, ZETA, f25

CLOSURE_CAP = 10_000


class GroupError(Exception):
    """Structural expectation about the group failed."""


# ---------------------------------------------------------------------------
# matrix helpers

def mat_mul(F, m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (
        F.add(F.mul(a, e), F.mul(b, g)),
        F.add(F.mul(a, f), F.mul(b, h)),
        F.add(F.mul(c, e), F.mul(d, g)),
        F.add(F.mul(c, f), F.mul(d, h)),
    )


def mat_det(F, m):
    a, b, c, d = m
    return F.sub(F.mul(a, d), F.mul(b, c))


def mat_trace(F, m):
    return F.add(m[0], m[3])


def mat_inv(F, m):
    a, b, c, d = m
    di = F.inv(mat_det(F, m))
    return (F.mul(d, di), F.mul(F.neg(b), di), F.mul(F.neg(c), di), F.mul(a, di))


def mat_identity(F):
    return (F.one, F.zero, F.zero, F.one)


def is_scalar(F, m):
    return m[1] == F.zero and m[2] == F.zero and m[0] == m[3]


# ---------------------------------------------------------------------------
# the group container

class MatrixGroup:
    """A finite matrix group held as an explicit, canonically ordered list.

    Built either by generator closure (:meth:`generate`) or from a closed
    element set (:meth:`from_elements`).  Multiplication tables, inverses,
    element orders and conjugacy classes are computed lazily and cached.
    """

    def __init__(self, F, elements, generators):
        self.field = F
        self.elements = sorted(elements)
        self.index = {m: i for i, m in enumerate(self.elements)}
        self.generators = list(generators)
        self.n = len(self.elements)
        self._cayley = None
        self._inverse = None
        self._orders = None
        self._classes = None
        self._class_of = None

    @classmethod
    def generate(cls, F, generators, cap=CLOSURE_CAP):
        ident = mat_identity(F)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                for g in generators:
                    prod = mat_mul(F, m, g)
                    if prod not in seen:
                        seen.add(prod)
                        nxt.append(prod)
                        if len(seen) > cap:
                            raise GroupError(f"closure exceeded cap {cap}")
            frontier = nxt
        return cls(F, seen, generators)

    @classmethod
    def from_elements(cls, F, elements):
        return cls(F, set(elements), [])

    # -- basic structure ----------------------------------------------------

    @property
    def identity(self):
        return mat_identity(self.field)

    def mul(self, m, n):
        return mat_mul(self.field, m, n)

    def inv(self, m):
        return mat_inv(self.field, m)

    def cayley(self) -> np.ndarray:
        """Index-level multiplication table, shape (n, n), int32."""
        if self._cayley is None:
            F, els, idx = self.field, self.elements, self.index
            table = np.empty((self.n, self.n), dtype=np.int32)
            for i, m in enumerate(els):
                row = table[i]
                for j, k in enumerate(els):
                    row[j] = idx[mat_mul(F, m, k)]
            self._cayley = table
        return self._cayley

    def inverse_index(self) -> np.ndarray:
        if self._inverse is None:
            self._inverse = np.array(
                [self.index[self.inv(m)] for m in self.elements], dtype=np.int32
            )
        return self._inverse

    def element_orders(self) -> list[int]:
        if self._orders is None:
            out = []
            ident = self.identity
            for m in self.elements:
                k, acc = 1, m
                while acc != ident:
                    acc = self.mul(acc, m)
                    k += 1
                out.append(k)
            self._orders = out
        return self._orders

    # -- conjugacy ----------------------------------------------------------

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Partition into conjugacy classes, deterministically ordered.

        Classes are sorted by (element order, trace, determinant, smallest
        member); members within a class are in canonical element order.
        The identity class always comes first.
        """
        if self._classes is None:
            F = self.field
            orders = self.element_orders()
            unassigned = set(range(self.n))
            raw = []
            conjugators = self.generators if self.generators else self.elements
            while unassigned:
                i0 = min(unassigned)
                m0 = self.elements[i0]
                orbit = {i0}
                frontier = [m0]
                while frontier:
                    nxt = []
                    for x in frontier:
                        for g in conjugators:
                            y = self.mul(self.mul(g, x), self.inv(g))
                            j = self.index[y]
                            if j not in orbit:
                                orbit.add(j)
                                nxt.append(y)
                    frontier = nxt
                unassigned -= orbit
                members = tuple(sorted(orbit))
                rep = self.elements[members[0]]
                key = (orders[members[0]], mat_trace(F, rep), mat_det(F, rep), rep)
                raw.append((key, members))
            raw.sort(key=lambda kv: kv[0])
            self._classes = [members for _, members in raw]
            self._class_of = np.empty(self.n, dtype=np.int32)
            for ci, members in enumerate(self._classes):
                for i in members:
                    self._class_of[i] = ci
        return self._classes

    def class_of(self) -> np.ndarray:
        self.conjugacy_classes()
        return self._class_of

    def class_reps(self):
        return [self.elements[members[0]] for members in self.conjugacy_classes()]

    def class_sizes(self):
        return [len(members) for members in self.conjugacy_classes()]


# ---------------------------------------------------------------------------
# permutation actions

@dataclass(frozen=True)
class PermAction:
    """A permutation action of a MatrixGroup on {0, ..., domain-1}.

    perms[i] is the image tuple for group element i (in canonical order).
    """

    group: MatrixGroup = dc_field(repr=False)
    domain: int
    perms: tuple[tuple[int, ...], ...]

    def perm_of(self, m):
        return self.perms[self.group.index[m]]

    def cycle_type(self, i: int) -> tuple[int, ...]:
        perm = self.perms[i]
        seen = [False] * self.domain
        parts = []
        for s in range(self.domain):
            if not seen[s]:
                length, t = 0, s
                while not seen[t]:
                    seen[t] = True
                    t = perm[t]
                    length += 1
                parts.append(length)
        return tuple(sorted(parts))

    def is_homomorphism_on(self, pairs) -> bool:
        G = self.group
        for m, n in pairs:
            pm, pn = self.perm_of(m), self.perm_of(n)
            composed = tuple(pm[pn[s]] for s in range(self.domain))
            if composed != self.perm_of(G.mul(m, n)):
                return False
        return True

    def kernel_indices(self) -> list[int]:
        ident = tuple(range(self.domain))
        return [i for i, perm in enumerate(self.perms) if perm == ident]


def p1_points(p: int) -> list[tuple[int, int]]:
    """P^1(F_p) as [z:1] for z in F_p followed by [1:0]."""
    return [(z, 1) for z in range(p)] + [(1, 0)]


def p1_action(G: MatrixGroup) -> PermAction:
    """Projective action on P^1 of the prime subfield.

    Entries may live in a quadratic extension; projectively every image point
    must land back on the prime subfield, which is asserted.
    """
    F = G.field
    if isinstance(F, QuadField):
        p = F.p
        emb = lambda n: (n % p, 0)
        to_base = lambda x: x[0] if x[1] == 0 else None
    else:
        p = F.p
        emb = lambda n: n % p
        to_base = lambda x: x
    points = p1_points(p)
    perms = []
    for m in G.elements:
        a, b, c, d = m
        images = []
        for (x, y) in points:
            xe, ye = emb(x), emb(y)
            xi = F.add(F.mul(a, xe), F.mul(b, ye))
            yi = F.add(F.mul(c, xe), F.mul(d, ye))
            if yi != F.zero:
                z = to_base(F.mul(xi, F.inv(yi)))
                if z is None:
                    raise GroupError("projective image fell outside the base line")
                images.append(z)
            else:
                images.append(p)  # the point [1:0]
        perms.append(tuple(images))
    return PermAction(G, p + 1, tuple(perms))


# ---------------------------------------------------------------------------
# the specific groups

def sl2_f5_generators(F: QuadField):
    one, zero = F.one, F.zero
    two = F.element(2)
    return [
        (one, one, zero, one),
        (zero, F.neg(one), one, zero),
    ]


def w_matrix(F: QuadField):
    """[[0, z], [-z^-1, 0]]: the lift of a transposition used throughout."""
    z = ZETA
    return (F.zero, z, F.neg(F.inv(z)), F.zero)


def scalar_matrix(F, s):
    return (s, F.zero, F.zero, s)


def build_group(r: int = 2) -> MatrixGroup:
    """The order-480 (r=2) or order-240 (r=1) central extension of PGL_2(F_5)."""
    if r not in (1, 2):
        raise GroupError("only r in {1, 2} is modelled")
    F = f25()
    gens = sl2_f5_generators(F) + [w_matrix(F)]
    if r == 2:
        gens.append(scalar_matrix(F, F.element(2)))
    G = MatrixGroup.generate(F, gens)
    expected = 480 if r == 2 else 240
    if G.n != expected:
        raise GroupError(f"closure has order {G.n}, expected {expected}")
    return G


# ---------------------------------------------------------------------------
# projective data and the S_5 dictionary

# (projective order, lies-in-PSL) -> S_5 conjugacy class label
_S5_BY_PROJ = {
    (1, True): "(1)",
    (2, True): "(2,5)(3,4)",
    (2, False): "(1,4)",
    (3, True): "(1,4,5)",
    (4, False): "(1,2,5,3)",
    (5, True): "(1,3,5,4,2)",
    (6, False): "(1,5)(2,3,4)",
}

# label -> cycle type on 5 letters
S5_CYCLE_TYPES = {
    "(1)": (1, 1, 1, 1, 1),
    "(1,4)": (1, 1, 1, 2),
    "(2,5)(3,4)": (1, 2, 2),
    "(1,4,5)": (1, 1, 3),
    "(1,5)(2,3,4)": (2, 3),
    "(1,2,5,3)": (1, 4),
    "(1,3,5,4,2)": (5,),
}

S5_LABELS = list(S5_CYCLE_TYPES)


def s5_fixed_points(label: str) -> int:
    return sum(1 for part in S5_CYCLE_TYPES[label] if part == 1)


def s5_sign(label: str) -> int:
    ctype = S5_CYCLE_TYPES[label]
    return -1 if (5 - len(ctype)) % 2 else 1


def s5_class_size(label: str) -> int:
    # |class| in S_5 from the cycle type, by the standard centralizer formula
    import math
    from collections import Counter

    ctype = S5_CYCLE_TYPES[label]
    cent = 1
    for length, mult in Counter(ctype).items():
        cent *= length**mult * math.factorial(mult)
    return math.factorial(5) // cent


def theta5_trace(label: str) -> int:
    """Trace in the 4-dimensional standard representation of S_5."""
    return s5_fixed_points(label) - 1


def f5_scalar_part(F: QuadField, m):
    """Write m = lam * m0 with m0 over F_5; return (lam, m0) or None."""
    nonzero = next(e for e in m if e != F.zero)
    for z in range(1, 5):
        lam = F.mul(nonzero, F.inv(F.element(z)))
        m0 = tuple(F.mul(F.inv(lam), e) for e in m)
        if all(e[1] == 0 for e in m0):
            return lam, m0
    return None


def projective_data(G: MatrixGroup, m) -> tuple[int, bool]:
    """(order of the image in PGL_2(F_5), whether that image lies in PSL_2(F_5))."""
    F = G.field
    k, acc = 1, m
    while not is_scalar(F, acc):
        acc = G.mul(acc, m)
        k += 1
    dec = f5_scalar_part(F, m)
    if dec is None:
        raise GroupError("element is not projectively defined over F_5")
    _, m0 = dec
    det0 = mat_det(F, m0)[0]
    in_psl = det0 in (1, 4)  # the squares of F_5^x
    return k, in_psl


def s5_class_of(G: MatrixGroup, m) -> str:
    key = projective_data(G, m)
    if key not in _S5_BY_PROJ:
        raise GroupError(f"no S_5 class matches projective data {key}")
    return _S5_BY_PROJ[key]


def s5_labels_by_class(G: MatrixGroup) -> list[str]:
    """S_5 label of each conjugacy class (constant on classes, asserted)."""
    labels = []
    for members in G.conjugacy_classes():
        seen = {s5_class_of(G, G.elements[i]) for i in members}
        if len(seen) != 1:
            raise GroupError("S_5 label not constant on a conjugacy class")
        labels.append(seen.pop())
    return labels


# ---------------------------------------------------------------------------
# the subgroup chain H (order 80) > N_1, N_2 (order 10)

def find_H80(G: MatrixGroup, action6: PermAction | None = None) -> MatrixGroup:
    """Stabilizer of the point [1:0] in the 6-point action: order 480/6 = 80."""
    if action6 is None:
        action6 = p1_action(G)
    pt = action6.domain - 1
    orbit = {perm[pt] for perm in action6.perms}
    if len(orbit) != action6.domain:
        raise GroupError("6-point action is not transitive")
    members = [m for i, m in enumerate(G.elements) if action6.perms[i][pt] == pt]
    if len(members) * 6 != G.n:
        raise GroupError(f"point stabilizer has order {len(members)}")
    return MatrixGroup.from_elements(G.field, members)


def _generated_subgroup(G: MatrixGroup, gens):
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = G.mul(m, g)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return frozenset(seen)


def _is_normal(H: MatrixGroup, subset: frozenset) -> bool:
    return all(
        H.mul(H.mul(h, x), H.inv(h)) in subset for h in H.elements for x in subset
    )


def unique_normal_order5(H: MatrixGroup) -> frozenset:
    subs = {
        _generated_subgroup(H, [m])
        for m, o in zip(H.elements, H.element_orders())
        if o == 5
    }
    normal = [s for s in subs if _is_normal(H, s)]
    if len(normal) != 1:
        raise GroupError(f"expected a unique normal order-5 subgroup, found {len(normal)}")
    return normal[0]


def _coset_group(H: MatrixGroup, N: frozenset):
    """Cosets of a normal subgroup with their multiplication, as index maps."""
    cosets = {}
    for m in H.elements:
        key = min(H.mul(m, x) for x in N)
        cosets.setdefault(key, []).append(m)
    keys = sorted(cosets)
    key_of = {m: k for k, mem in cosets.items() for m in mem}
    mul = {(k1, k2): key_of[H.mul(k1, k2)] for k1 in keys for k2 in keys}
    return keys, mul


def _coset_group_invariants(keys, mul):
    """(order, abelian?, multiset of element orders) of a coset group."""
    ident = next(k for k in keys if all(mul[(k, x)] == x for x in keys))
    orders = []
    for k in keys:
        acc, o = k, 1
        while acc != ident:
            acc = mul[(acc, k)]
            o += 1
        orders.append(o)
    abelian = all(mul[(a, b)] == mul[(b, a)] for a in keys for b in keys)
    return len(keys), abelian, tuple(sorted(orders))


def check_H_quotient_C8xC2(H: MatrixGroup, U: frozenset) -> bool:
    keys, mul = _coset_group(H, U)
    order, abelian, orders = _coset_group_invariants(keys, mul)
    # C_8 x C_2: abelian of order 16, exponent 8, not cyclic
    return order == 16 and abelian and max(orders) == 8 and orders.count(8) == 8


def normal_order10_subgroups(G: MatrixGroup, H: MatrixGroup):
    """The two normal order-10 subgroups of H with cyclic order-8 quotient."""
    U = unique_normal_order5(H)
    found = set()
    for t, o in zip(H.elements, H.element_orders()):
        if o == 2 and t not in U:
            cand = frozenset(U | {H.mul(u, t) for u in U})
            if len(cand) == 10:
                found.add(cand)
    results = []
    for cand in found:
        if not _is_normal(H, cand):
            continue
        keys, mul = _coset_group(H, cand)
        order, _, orders = _coset_group_invariants(keys, mul)
        if order == 8 and 8 in orders:
            results.append(cand)
    if len(results) != 2:
        raise GroupError(f"expected 2 normal order-10 subgroups, found {len(results)}")
    results.sort(key=lambda s: sorted(s))
    for N in results:
        sub = MatrixGroup.from_elements(H.field, N)
        orders = sub.element_orders()
        center = [
            m
            for m in sub.elements
            if all(sub.mul(m, x) == sub.mul(x, m) for x in sub.elements)
        ]
        # D_5 fingerprint: order 10, trivial center, five involutions
        if len(center) != 1 or orders.count(2) != 5:
            raise GroupError("order-10 subgroup is not dihedral")
        if not U <= N:
            raise GroupError("order-10 subgroup misses the order-5 core")
        minus_one = scalar_matrix(G.field, G.field.element(-1))
        if minus_one in N:
            raise GroupError("order-10 subgroup meets the centre of the big group")
    return results[0], results[1]


def coset_action(G: MatrixGroup, N: frozenset) -> PermAction:
    """Left-translation action on the left cosets of N; must be faithful."""
    if G.n % len(N):
        raise GroupError("subgroup order does not divide group order")
    coset_key = {}
    for m in G.elements:
        coset_key[m] = min(G.mul(m, x) for x in N)
    keys = sorted(set(coset_key.values()))
    key_index = {k: i for i, k in enumerate(keys)}
    perms = []
    for g in G.elements:
        perms.append(tuple(key_index[coset_key[G.mul(g, k)]] for k in keys))
    action = PermAction(G, len(keys), tuple(perms))
    kernel = action.kernel_indices()
    if kernel != [G.index[G.identity]]:
        raise GroupError("coset action is not faithful")
    return action


def class_cycletype_table(action: PermAction):
    """Forward map class -> cycle type, plus the inverse multimap."""
    G = action.group
    classes = G.conjugacy_classes()
    forward = [action.cycle_type(members[0]) for members in classes]
    inverse: dict[tuple[int, ...], list[int]] = {}
    for ci, ctype in enumerate(forward):
        inverse.setdefault(ctype, []).append(ci)
    return forward, inverse


# ---------------------------------------------------------------------------
# trace/determinant lift table and the three index-2 kernels

# Expected lift data per S_5 class: (theta5 trace, {(trace, det)}, sgn).
# Field elements in the canonical (a, b) encoding, a + b*zeta.
_Z = lambda k: (0, k % 5)
_C = lambda k: (k % 5, 0)
EXPECTED_LIFT_TABLE = {
    "(1)": (4, {(_C(1), _C(4)), (_C(2), _C(1)), (_C(3), _C(1)), (_C(4), _C(4))}, 1),
    "(1,3,5,4,2)": (-1, {(_C(1), _C(4)), (_C(2), _C(1)), (_C(3), _C(1)), (_C(4), _C(4))}, 1),
    "(2,5)(3,4)": (0, {(_C(0), _C(1)), (_C(0), _C(4))}, 1),
    "(1,4)": (2, {(_C(0), _C(1)), (_C(0), _C(4))}, -1),
    "(1,4,5)": (1, {(_C(1), _C(1)), (_C(2), _C(4)), (_C(3), _C(4)), (_C(4), _C(1))}, 1),
    "(1,5)(2,3,4)": (-1, {(_Z(1), _C(4)), (_Z(2), _C(1)), (_Z(-1), _C(4)), (_Z(-2), _C(1))}, -1),
    "(1,2,5,3)": (0, {(_Z(1), _C(1)), (_Z(2), _C(4)), (_Z(-1), _C(1)), (_Z(-2), _C(4))}, -1),
}


def lift_table(G: MatrixGroup) -> dict:
    """Computed (theta5-trace, trace/det pair set, sgn) for each S_5 class."""
    F = G.field
    out = {}
    for label in S5_LABELS:
        out[label] = (theta5_trace(label), set(), s5_sign(label))
    for m in G.elements:
        label = s5_class_of(G, m)
        out[label][1].add((mat_trace(F, m), mat_det(F, m)))
    return out


def verify_lift_table(G: MatrixGroup) -> list[str]:
    """Check the computed lift table against the expected one; report lines."""
    computed = lift_table(G)
    lines = []
    for label in S5_LABELS:
        ok = computed[label] == (
            EXPECTED_LIFT_TABLE[label][0],
            EXPECTED_LIFT_TABLE[label][1],
            EXPECTED_LIFT_TABLE[label][2],
        )
        lines.append(f"lift-table {label}: {'ok' if ok else 'MISMATCH'}")
        if not ok:
            raise GroupError(f"lift table mismatch at class {label}: {computed[label]}")
    return lines


def character_values(G: MatrixGroup, m) -> dict[str, int]:
    """The three quadratic characters at m: sgn, det and their product.

    det maps determinant 1 to +1 and determinant -1 (= 4) to -1.
    """
    F = G.field
    det = mat_det(F, m)
    if det == F.one:
        det_val = 1
    elif det == F.element(4):
        det_val = -1
    else:
        raise GroupError(f"unexpected determinant {det}")
    sgn_val = 1 if projective_data(G, m)[1] else -1
    return {"sgn": sgn_val, "det": det_val, "det*sgn": det_val * sgn_val}


def index2_kernels(G: MatrixGroup) -> dict[str, MatrixGroup]:
    """The three index-2 normal subgroups, as kernels of sgn, det, det*sgn.

    Also certifies there are exactly three: every square lies in the
    commutator subgroup, so the abelianization is elementary abelian of
    order 4 and index-2 subgroups are exactly the three kernels.
    """
    F = G.field
    members = {"sgn": [], "det": [], "det*sgn": []}
    for m in G.elements:
        vals = character_values(G, m)
        for name in members:
            if vals[name] == 1:
                members[name].append(m)
    kernels = {}
    for name, mem in members.items():
        if len(mem) * 2 != G.n:
            raise GroupError(f"kernel of {name} has index != 2")
        kernels[name] = MatrixGroup.from_elements(F, mem)
    # abelianization check
    comms = {
        G.mul(G.mul(g, h), G.mul(G.inv(g), G.inv(h)))
        for g in G.generators
        for h in G.elements
    }
    commutator_subgroup = _generated_subgroup(G, list(comms))
    if len(commutator_subgroup) * 4 != G.n:
        raise GroupError("abelianization does not have order 4")
    if not all(G.mul(g, g) in commutator_subgroup for g in G.elements):
        raise GroupError("abelianization is not elementary abelian")
    return kernels


def center(G: MatrixGroup) -> list:
    return [
        m
        for m in G.elements
        if all(G.mul(m, x) == G.mul(x, m) for x in G.generators or G.elements)
    ]


def verify_inertia_matrices(G: MatrixGroup) -> list[str]:
    """Finite matrix identities behind the tame ramification bookkeeping.

    Checks the order-4 matrix [[0, 2z], [2z^-1, 0]] (square -I, determinant 1,
    trace 0, characteristic polynomial X^2 + 1, no fixed line) and that every
    lift of a transposition has characteristic polynomial X^2 - 1 or X^2 + 1.
    Also records that w = [[0, z], [-z^-1, 0]] has matrix order 4 even though
    its projective order is 2.
    """
    F = G.field
    lines = []
    z = ZETA
    two = F.element(2)
    m = (F.zero, F.mul(two, z), F.mul(two, F.inv(z)), F.zero)
    if m not in G.index:
        raise GroupError("inertia generator candidate not in the group")
    minus_one = scalar_matrix(F, F.element(-1))
    sq = G.mul(m, m)
    checks = [
        ("square is -I", sq == minus_one),
        ("matrix order 4", G.mul(sq, sq) == G.identity and sq != G.identity),
        ("determinant 1", mat_det(F, m) == F.one),
        ("trace 0", mat_trace(F, m) == F.zero),
        # char poly X^2 + 1 has no root 1, so no fixed line
        ("no eigenvalue 1", F.add(F.one, F.one) != F.zero),
    ]
    # every lift of a transposition has char poly X^2 - 1 or X^2 + 1
    charpolys = set()
    for x in G.elements:
        if s5_class_of(G, x) == "(1,4)":
            tr, det = mat_trace(F, x), mat_det(F, x)
            charpolys.add((tr, det))
    ok_charpolys = charpolys == {(F.zero, F.one), (F.zero, F.element(4))}
    checks.append(("transposition lifts have char poly X^2 -+ 1", ok_charpolys))
    w = w_matrix(F)
    k, acc = 1, w
    while acc != G.identity:
        acc = G.mul(acc, w)
        k += 1
    proj_order = projective_data(G, w)[0]
    checks.append(("w matrix order 4, projective order 2", k == 4 and proj_order == 2))
    lines.append(
        f"note: w has matrix order {k} but projective order {proj_order}; "
        "only the projective order is 2"
    )
    for name, ok in checks:
        lines.append(f"inertia {name}: {'ok' if ok else 'FAILED'}")
        if not ok:
            raise GroupError(f"inertia identity failed: {name}")
    return lines
