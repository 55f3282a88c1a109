"""Class functions, numeric character tables and tensor-induction identities.

Character tables are produced by the Burnside-Dixon class-algebra method in
floating point: simultaneous eigenvectors of a seeded random combination of
the class multiplication matrices, normalized to characters and validated by
orthogonality before being returned.  All downstream comparisons are against
integers or small algebraic numbers, so a 1e-6 tolerance has huge margin at
these group orders (<= 480).

The index-2 tensor induction ("Asai transfer") of a character psi of H <= G
sends h in H to psi(h) psi(g0^-1 h g0) and g outside H to psi(g^2); the
twisted transfer is checked against the 4-dimensional standard character of
S_5 pulled back through the projective quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arith import PrimeField
from .reporting import CheckLine, Report
from .groups import (
    GroupError,
    MatrixGroup,
    S5_LABELS,
    center,
    is_scalar,
    mat_det,
    p1_action,
    s5_class_of,
    s5_sign,
    scalar_matrix,
    theta5_trace,
    w_matrix,
)

DEFAULT_TOL = 1e-6
DEFAULT_SEED = 12345


class CharacterError(Exception):
    """Character-table construction or a character identity failed."""


@dataclass
class ClassFunction:
    """A complex-valued function on the conjugacy classes of a group."""

    group: MatrixGroup
    values: np.ndarray  # complex128, one entry per conjugacy class
    tol: float = DEFAULT_TOL

    def at(self, m) -> complex:
        G = self.group
        return complex(self.values[G.class_of()[G.index[m]]])

    def per_element(self) -> np.ndarray:
        return self.values[self.group.class_of()]

    @property
    def degree(self) -> complex:
        ident_cls = self.group.class_of()[self.group.index[self.group.identity]]
        return complex(self.values[ident_cls])

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if other.group is not self.group:
            raise CharacterError("class functions live on different groups")
        return ClassFunction(self.group, self.values * other.values, self.tol)

    def close_to(self, other: "ClassFunction") -> bool:
        return bool(np.all(np.abs(self.values - other.values) < self.tol))


def inner_product(phi: ClassFunction, psi: ClassFunction) -> complex:
    """<phi, psi> = (1/|G|) sum_g phi(g) conj(psi(g)), via class sizes."""
    if phi.group is not psi.group:
        raise CharacterError("class functions live on different groups")
    sizes = np.array(phi.group.class_sizes(), dtype=float)
    return complex(np.sum(sizes * phi.values * np.conj(psi.values)) / phi.group.n)


@dataclass
class CharacterTable:
    group: MatrixGroup
    characters: list[ClassFunction]
    tol: float = DEFAULT_TOL

    @property
    def degrees(self) -> list[int]:
        return [round(chi.degree.real) for chi in self.characters]

    def validate(self) -> None:
        G = self.group
        k = len(G.conjugacy_classes())
        if len(self.characters) != k:
            raise CharacterError("wrong number of irreducible characters")
        degs = self.degrees
        for chi, d in zip(self.characters, degs):
            if abs(chi.degree - d) > self.tol or d < 1:
                raise CharacterError("non-integral character degree")
        if sum(d * d for d in degs) != G.n:
            raise CharacterError("degrees do not satisfy sum of squares = |G|")
        mat = np.array([chi.values for chi in self.characters])
        sizes = np.array(G.class_sizes(), dtype=float)
        gram = (mat * sizes) @ np.conj(mat.T) / G.n
        if not np.allclose(gram, np.eye(k), atol=10 * self.tol):
            raise CharacterError("row orthogonality failed")
        # column orthogonality: sum_chi chi(g) conj(chi(h)) = |G|/|C(g)| delta
        col = np.conj(mat.T) @ mat
        expected = np.diag(G.n / sizes)
        if not np.allclose(col, expected, atol=1e-4 * G.n):
            raise CharacterError("column orthogonality failed")


def _class_constants(G: MatrixGroup) -> np.ndarray:
    """Structure constants c[i, j, k] of the class algebra.

    c[i, j, k] counts pairs (x, y) in C_i x C_j with x y = g_k, for the fixed
    class representative g_k.
    """
    classes = G.conjugacy_classes()
    k = len(classes)
    cls_of = G.class_of()
    cayley = G.cayley()
    inv_idx = G.inverse_index()
    c = np.zeros((k, k, k), dtype=np.int64)
    for kk, members in enumerate(classes):
        gk = members[0]
        # for every x: y = x^-1 g_k; count (class(x), class(y))
        y_idx = cayley[inv_idx, gk]
        np.add.at(c, (cls_of, cls_of[y_idx], kk), 1)
    return c


def character_table(
    G: MatrixGroup, seed: int = DEFAULT_SEED, tol: float = DEFAULT_TOL, retries: int = 5
) -> CharacterTable:
    """Numeric irreducible character table by the class-algebra method."""
    if G.n > 1000:
        raise CharacterError("group too large for the dense class-algebra method")
    classes = G.conjugacy_classes()
    k = len(classes)
    sizes = np.array(G.class_sizes(), dtype=float)
    c = _class_constants(G)
    # A_i acts on class-sum coordinates: (A_i)[k', j] = c[i, j, k']
    mats = [c[i].T.astype(float) for i in range(k)]
    last_err = None
    for attempt in range(retries):
        rng = np.random.default_rng(seed + attempt)
        coeffs = rng.standard_normal(k)
        M = sum(r * A for r, A in zip(coeffs, mats))
        eigvals, eigvecs = np.linalg.eig(M)
        order = np.lexsort((eigvals.imag, eigvals.real))
        eigvals, eigvecs = eigvals[order], eigvecs[:, order]
        if np.min(np.abs(np.diff(eigvals))) < 1e-8 * max(1.0, np.max(np.abs(eigvals))):
            last_err = "eigenvalue collision"
            continue
        chars = []
        ok = True
        for col in range(k):
            v = eigvecs[:, col]
            pivot = int(np.argmax(np.abs(v)))
            omegas = np.array([(A @ v)[pivot] / v[pivot] for A in mats])
            # residual check: v must be a simultaneous eigenvector
            if any(
                np.linalg.norm(A @ v - om * v) > 1e-7 * np.linalg.norm(A)
                for A, om in zip(mats, omegas)
            ):
                ok = False
                break
            deg = np.sqrt(G.n / np.sum(np.abs(omegas) ** 2 / sizes))
            values = omegas * deg / sizes
            chars.append(ClassFunction(G, values, tol))
        if not ok:
            last_err = "eigenvector residual too large"
            continue
        chars.sort(key=lambda ch: (round(ch.degree.real), _sort_key(ch.values)))
        table = CharacterTable(G, chars, tol)
        table.validate()
        return table
    raise CharacterError(f"character table did not converge: {last_err}")


def _sort_key(values: np.ndarray):
    return tuple((round(v.real, 6), round(v.imag, 6)) for v in values)


# ---------------------------------------------------------------------------
# tensor induction

def asai_transfer(
    psi: ClassFunction, G: MatrixGroup, g0, tol: float = DEFAULT_TOL
) -> ClassFunction:
    """Index-2 tensor-induced character of G from psi on the subgroup.

    Well-definedness (independence of the class representative and of g0)
    is asserted by evaluating on every element of every class.
    """
    H = psi.group
    if 2 * H.n != G.n:
        raise CharacterError("subgroup does not have index 2")
    if g0 in H.index:
        raise CharacterError("g0 must lie outside the subgroup")
    g0_inv = G.inv(g0)

    def value(m):
        if m in H.index:
            conj = G.mul(G.mul(g0_inv, m), g0)
            return psi.at(m) * psi.at(conj)
        return psi.at(G.mul(m, m))

    values = []
    for members in G.conjugacy_classes():
        vals = [value(G.elements[i]) for i in members]
        if max(abs(v - vals[0]) for v in vals) > tol:
            raise CharacterError("transfer value depends on the class representative")
        values.append(vals[0])
    return ClassFunction(G, np.array(values, dtype=complex), tol)


def _projective_key(G: MatrixGroup, m):
    F = G.field
    pivot = next(e for e in m if e != F.zero)
    pinv = F.inv(pivot)
    return tuple(F.mul(pinv, e) for e in m)


def chi_from_lemma(
    G: MatrixGroup,
    alpha: dict,
    beta,
    tol: float = DEFAULT_TOL,
    section_rule: str = "min",
) -> ClassFunction:
    """The unique character restricting to alpha on the centre and to a
    pullback of beta on the determinant-1 half.

    alpha maps each central (scalar) element to a complex value and must be
    trivial on -I; beta maps an S_5 class label to a complex value.  A
    set-theoretic section of the projective quotient is chosen inside the
    determinant-1 subgroup (where the extension cocycle takes values in
    {+-I}, on which alpha is trivial); multiplicativity is then verified on
    all pairs before returning.
    """
    F = G.field
    minus_one = scalar_matrix(F, F.element(-1))
    if abs(alpha[minus_one] - 1) > tol:
        raise CharacterError("alpha must be trivial on -I")
    lifts: dict[tuple, list] = {}
    for m in G.elements:
        lifts.setdefault(_projective_key(G, m), []).append(m)
    section = {}
    for key, ms in lifts.items():
        det_one = [m for m in ms if mat_det(F, m) == F.one]
        if not det_one:
            raise CharacterError("projective class without determinant-1 lift")
        section[key] = min(det_one) if section_rule == "min" else max(det_one)
    chi_elem = np.empty(G.n, dtype=complex)
    for i, m in enumerate(G.elements):
        s = section[_projective_key(G, m)]
        scal = G.mul(m, G.inv(s))
        if not is_scalar(F, scal):
            raise CharacterError("section decomposition failed")
        chi_elem[i] = alpha[scal] * beta(s5_class_of(G, m))
    cayley = G.cayley()
    if not np.allclose(chi_elem[cayley], np.outer(chi_elem, chi_elem), atol=tol):
        raise CharacterError("chi is not multiplicative")
    values = np.array(
        [chi_elem[members[0]] for members in G.conjugacy_classes()], dtype=complex
    )
    return ClassFunction(G, values, tol)


def theta_std(G: MatrixGroup, tol: float = DEFAULT_TOL) -> ClassFunction:
    """Pullback to G of the standard 4-dimensional character of S_5."""
    from .groups import s5_labels_by_class

    values = np.array(
        [theta5_trace(lab) for lab in s5_labels_by_class(G)], dtype=complex
    )
    return ClassFunction(G, values, tol)


def sign_kernel_subgroup(G: MatrixGroup) -> MatrixGroup:
    """The index-2 subgroup of elements projecting into PSL_2(F_5)."""
    from .groups import character_values

    members = [m for m in G.elements if character_values(G, m)["sgn"] == 1]
    if 2 * len(members) != G.n:
        raise CharacterError("sign kernel does not have index 2")
    return MatrixGroup.from_elements(G.field, members)


def degree2_irreducibles(table: CharacterTable) -> list[ClassFunction]:
    return [chi for chi, d in zip(table.characters, table.degrees) if d == 2]


def _fmt(z: complex) -> str:
    if abs(z.imag) < 1e-9:
        r = z.real
        return str(round(r)) if abs(r - round(r)) < 1e-9 else f"{r:.8f}"
    return f"{z.real:.8f}{z.imag:+.8f}i"


def verify_prop_asai(
    G: MatrixGroup, r: int, seed: int = DEFAULT_SEED, tol: float = DEFAULT_TOL
) -> Report:
    """Twisted tensor induction equals the standard character, for every
    2-dimensional irreducible of the index-2 subgroup; plus the central
    identity transfer(c) = 4 det(eta(c))."""
    H = sign_kernel_subgroup(G)
    table = character_table(H, seed=seed, tol=tol)
    etas = degree2_irreducibles(table)
    expected_count = 4 if r == 2 else 2
    lines = [
        CheckLine(
            "deg2-count", f"r={r}", str(len(etas)), str(expected_count),
            len(etas) == expected_count,
        )
    ]
    F = G.field
    theta = theta_std(G, tol)
    g0 = w_matrix(F)
    cen = center(G)
    labels_by_class = _labels(G)
    for which, psi in enumerate(etas):
        lam = {c: psi.at(c) / 2 for c in cen}
        alpha = {c: 1 / (lam[c] ** 2) for c in cen}
        chi = chi_from_lemma(G, alpha, lambda lab: s5_sign(lab), tol)
        chi_alt = chi_from_lemma(G, alpha, lambda lab: s5_sign(lab), tol, "max")
        lines.append(
            CheckLine(
                "chi-section-independence", f"eta{which}",
                _fmt(np.max(np.abs(chi.values - chi_alt.values))), "< tol",
                bool(np.all(np.abs(chi.values - chi_alt.values) < tol)),
            )
        )
        transfer = asai_transfer(psi, G, g0, tol)
        # central identity: transfer(c) = 4 lambda(c)^2 = 4 det(eta(c))
        for c in cen:
            want = 4 * lam[c] ** 2
            got = transfer.at(c)
            lines.append(
                CheckLine(
                    "central-transfer", f"eta{which} c=tr{_fmt(psi.at(c))}",
                    _fmt(got), _fmt(want), abs(got - want) < tol,
                )
            )
        twisted = transfer * chi
        lines.append(
            CheckLine(
                "twisted-equals-standard", f"eta{which}",
                _fmt(np.max(np.abs(twisted.values - theta.values))), "< tol",
                twisted.close_to(theta),
            )
        )
        # factors through S_5: constant on fibres of the projective quotient
        fibre_ok = True
        for lab in S5_LABELS:
            vals = [v for v, l in zip(twisted.values, labels_by_class) if l == lab]
            if max(abs(v - vals[0]) for v in vals) > tol:
                fibre_ok = False
        lines.append(
            CheckLine("factors-through-S5", f"eta{which}", "-", "-", fibre_ok)
        )
        eps = ClassFunction(
            G, np.array([s5_sign(l) for l in labels_by_class], dtype=complex), tol
        )
        ip_std = inner_product(twisted, theta)
        ip_twist = inner_product(twisted, theta * eps)
        lines.append(
            CheckLine(
                "inner-products", f"eta{which}",
                f"({_fmt(ip_std)},{_fmt(ip_twist)})", "(1,0)",
                abs(ip_std - 1) < tol and abs(ip_twist) < tol,
            )
        )
        integral = bool(
            np.all(np.abs(twisted.values - np.round(twisted.values.real)) < tol)
        )
        lines.append(CheckLine("integrality", f"eta{which}", "-", "-", integral))
    return Report(f"tensor-induction identities (r={r})", lines)


def _labels(G: MatrixGroup) -> list[str]:
    from .groups import s5_labels_by_class

    return s5_labels_by_class(G)


def verify_cor_asai(
    G: MatrixGroup, seed: int = DEFAULT_SEED, tol: float = DEFAULT_TOL
) -> Report:
    """Lift-independence of the two closed formulas for the standard character.

    For every 2-dimensional irreducible psi of the index-2 subgroup H and its
    twisting character chi: psi(h) psi(g^-1 h g) chi(h) recovers the standard
    trace for all h in H and ALL g outside H, and psi(g^2) chi(g) recovers it
    for all g outside H.
    """
    H = sign_kernel_subgroup(G)
    table = character_table(H, seed=seed, tol=tol)
    etas = degree2_irreducibles(table)
    cen = center(G)
    labels_by_class = _labels(G)
    theta_elem = np.array(
        [theta5_trace(labels_by_class[c]) for c in G.class_of()], dtype=complex
    )
    cayley = G.cayley()
    inv_idx = G.inverse_index()
    in_H = np.array([m in H.index for m in G.elements])
    h_idx = np.nonzero(in_H)[0]
    g_idx = np.nonzero(~in_H)[0]
    lines = []
    for which, psi in enumerate(etas):
        lam = {c: psi.at(c) / 2 for c in cen}
        alpha = {c: 1 / (lam[c] ** 2) for c in cen}
        chi = chi_from_lemma(G, alpha, lambda lab: s5_sign(lab), tol)
        chi_elem = chi.per_element()
        psi_elem = np.zeros(G.n, dtype=complex)
        psi_vals = psi.per_element()  # on H's own ordering
        for j, m in enumerate(H.elements):
            psi_elem[G.index[m]] = psi_vals[j]
        # even part: all h in H, all g outside H
        max_err = 0.0
        for g in g_idx:
            conj_idx = cayley[cayley[inv_idx[g], h_idx], g]
            vals = psi_elem[h_idx] * psi_elem[conj_idx] * chi_elem[h_idx]
            max_err = max(max_err, float(np.max(np.abs(vals - theta_elem[h_idx]))))
        lines.append(
            CheckLine(
                "even-formula-all-lifts", f"eta{which}", _fmt(max_err), "< tol",
                max_err < tol,
            )
        )
        # odd part: psi(g^2) chi(g)
        sq_idx = cayley[g_idx, g_idx]
        vals = psi_elem[sq_idx] * chi_elem[g_idx]
        err = float(np.max(np.abs(vals - theta_elem[g_idx])))
        lines.append(
            CheckLine(
                "odd-formula-all-lifts", f"eta{which}", _fmt(err), "< tol", err < tol
            )
        )
    return Report("standard-character closed formulas over all lifts", lines)


def predicted_hilbert_product(label: str, chi151_value: int) -> int:
    """Product of the quadratic-field eigenvalues forced by the closed formula.

    The product over primes above p equals chi151 * (standard trace); it
    depends on p through the quadratic symbol for -151, not on the S_5 class
    alone (inverse central classes flip the sign).
    """
    if chi151_value not in (1, -1):
        raise CharacterError("chi151 value must be +-1")
    return chi151_value * theta5_trace(label)


# ---------------------------------------------------------------------------
# the degree-4 identity over GL_2(F_3)

def build_gl2_f3() -> MatrixGroup:
    F = PrimeField(3)
    gens = [
        (1, 1, 0, 1),
        (0, 2, 1, 0),
        (1, 0, 0, 2),
    ]
    G = MatrixGroup.generate(F, gens)
    if G.n != 48:
        raise GroupError(f"GL_2(F_3) closure has order {G.n}")
    return G


def verify_n4_identity(seed: int = DEFAULT_SEED, tol: float = DEFAULT_TOL) -> Report:
    """chi2(g)^2 = eps(gbar) + theta4(gbar) over GL_2(F_3), for each faithful
    2-dimensional irreducible chi2, with gbar the image in S_4 = PGL_2(F_3)."""
    G = build_gl2_f3()
    act = p1_action(G)  # 4 points
    fixed = np.array(
        [sum(1 for s in range(4) if perm[s] == s) for perm in act.perms], dtype=float
    )
    parity = np.array(
        [1 if (4 - len(act.cycle_type(i))) % 2 == 0 else -1 for i in range(G.n)],
        dtype=float,
    )
    cls_of = G.class_of()
    classes = G.conjugacy_classes()
    theta4 = np.array([fixed[members[0]] - 1 for members in classes])
    eps = np.array([parity[members[0]] for members in classes])
    # the S_4 data is constant on conjugacy classes
    for ci, members in enumerate(classes):
        for i in members:
            if fixed[i] - 1 != theta4[ci] or parity[i] != eps[ci]:
                raise CharacterError("projective data not constant on classes")
    table = character_table(G, seed=seed, tol=tol)
    lines = []
    faithful = []
    for chi, d in zip(table.characters, table.degrees):
        if d != 2:
            continue
        kernel_classes = [
            ci for ci in range(len(classes)) if abs(chi.values[ci] - d) < tol
        ]
        if kernel_classes == [0]:
            faithful.append(chi)
    lines.append(
        CheckLine("faithful-deg2-count", "GL2(F3)", str(len(faithful)), "2",
                  len(faithful) == 2)
    )
    for which, chi in enumerate(faithful):
        err = float(np.max(np.abs(chi.values**2 - (eps + theta4))))
        lines.append(
            CheckLine(
                "square-splits", f"chi2-{which}", _fmt(err), "< tol", err < tol
            )
        )
    return Report("degree-4 tensor-square identity over GL_2(F_3)", lines)
