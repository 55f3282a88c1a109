"""Per-prime pipeline: factorization patterns to conjugacy data and checks.

For each prime p not dividing 19*151 the degree pattern of the quintic mod p
names a conjugacy class of S_5; the degree pattern of the degree-48
polynomial mod p narrows the class in the order-480 matrix group down to a
candidate set (a class and possibly its inverse), pinned by the quadratic
symbol for -19 playing the role of the determinant character.  The squared
trace of any candidate is the quantity entering the mod-5 congruence for the
root count N_p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import DomainError, is_prime, kronecker, primes_up_to
from .asai import CheckLine, Report, predicted_hilbert_product
from .polyfactor import (
    Ramified,
    factorization_cycle_type,
    is_squarefree_fp,
    reduce_mod_p,
)
from .groups import (
    S5_CYCLE_TYPES,
    build_group,
    character_values,
    class_cycletype_table,
    coset_action,
    find_H80,
    mat_trace,
    normal_order10_subgroups,
    p1_action,
    s5_class_size,
    s5_labels_by_class,
    s5_sign,
    theta5_trace,
)

RAMIFIED_PRIMES = (19, 151)
QUINTIC_DISC = 2869  # 19 * 151

_LABEL_BY_TYPE5 = {tuple(sorted(t)): lab for lab, t in S5_CYCLE_TYPES.items()}


class PipelineError(Exception):
    """Inconsistent per-prime data (corrupt input or wrong group model)."""


@dataclass(frozen=True)
class ClassInfo:
    """Report-facing summary of one conjugacy class of the matrix group."""

    index: int
    label: str
    size: int
    trace_repr: str
    trace_sq: int  # square of the matrix trace, an element of F_5
    det: int  # +1 if the matrix determinant is a square in F_5, else -1
    sgn: int  # sign of the underlying S_5 class


@dataclass
class FrobeniusContext:
    """Immutable lookup tables shared by every per-prime report."""

    group: object
    infos: list[ClassInfo]
    dict56: dict[str, tuple]  # S_5 class label -> 6-point cycle type
    type48_by_class: dict[int, list[tuple]]  # action id (1 or 2) -> per-class type
    multimap: dict[int, dict[tuple, tuple]]  # action id -> 48-type -> class indices


def build_context() -> FrobeniusContext:
    G = build_group(2)
    F = G.field
    act6 = p1_action(G)
    labels = s5_labels_by_class(G)
    classes = G.conjugacy_classes()

    type6 = []
    for members in classes:
        types = {act6.cycle_type(i) for i in members}
        if len(types) != 1:
            raise PipelineError("6-point cycle type not constant on a class")
        type6.append(types.pop())
    dict56: dict[str, tuple] = {}
    for lab, t6 in zip(labels, type6):
        if dict56.setdefault(lab, t6) != t6:
            raise PipelineError("6-point type not determined by the S_5 class")
    if len(set(dict56.values())) != 7:
        raise PipelineError("5-point / 6-point dictionary is not bijective")

    H = find_H80(G, act6)
    N1, N2 = normal_order10_subgroups(G, H)
    type48_by_class: dict[int, list[tuple]] = {}
    multimap: dict[int, dict[tuple, tuple]] = {}
    for which, N in ((1, N1), (2, N2)):
        action = coset_action(G, N)
        fwd, inv = class_cycletype_table(action)
        type48_by_class[which] = fwd
        multimap[which] = {t: tuple(cs) for t, cs in inv.items()}

    infos = []
    for ci, members in enumerate(classes):
        rep = G.elements[members[0]]
        tr = mat_trace(F, rep)
        sq = F.mul(tr, tr)
        if not F.in_base(sq):
            raise PipelineError("squared trace fell outside the prime field")
        chars = character_values(G, rep)
        infos.append(
            ClassInfo(
                index=ci,
                label=labels[ci],
                size=len(members),
                trace_repr=F.fmt(tr),
                trace_sq=sq[0],
                det=chars["det"],
                sgn=chars["sgn"],
            )
        )
    ctx = FrobeniusContext(G, infos, dict56, type48_by_class, multimap)
    for which in (1, 2):
        verify_trace_square_welldefined(ctx, which)
    return ctx


def verify_trace_square_welldefined(ctx: FrobeniusContext, which: int) -> None:
    """The squared trace is constant on every (48-type, det) candidate set."""
    groups: dict[tuple, set[int]] = {}
    for info, t48 in zip(ctx.infos, ctx.type48_by_class[which]):
        groups.setdefault((t48, info.det), set()).add(info.trace_sq)
    bad = {k: v for k, v in groups.items() if len(v) > 1}
    if bad:
        raise PipelineError(f"squared trace ambiguous on candidate sets: {bad}")


def context_to_payload(ctx: FrobeniusContext) -> dict:
    """JSON-serializable form of the lookup tables (the group is rebuilt,
    never serialized)."""
    return {
        "dict56": {lab: list(t) for lab, t in ctx.dict56.items()},
        "type48": {
            str(w): [list(t) for t in fwd] for w, fwd in ctx.type48_by_class.items()
        },
        "multimap": {
            str(w): [[list(t), list(cs)] for t, cs in sorted(mm.items())]
            for w, mm in ctx.multimap.items()
        },
        "infos": [
            [i.index, i.label, i.size, i.trace_repr, i.trace_sq, i.det, i.sgn]
            for i in ctx.infos
        ],
    }


def context_from_payload(payload: dict) -> FrobeniusContext:
    infos = [ClassInfo(*row) for row in payload["infos"]]
    dict56 = {lab: tuple(t) for lab, t in payload["dict56"].items()}
    type48 = {
        int(w): [tuple(t) for t in fwd] for w, fwd in payload["type48"].items()
    }
    multimap = {
        int(w): {tuple(t): tuple(cs) for t, cs in mm}
        for w, mm in payload["multimap"].items()
    }
    return FrobeniusContext(None, infos, dict56, type48, multimap)


def default_sample(f5_z: list[int], h_z: list[int], count: int = 25) -> list[int]:
    """First `count` unramified primes where the degree-48 polynomial stays
    squarefree, for calibration."""
    out = []
    p = 1
    while len(out) < count:
        p += 1
        if not is_prime(p) or p in RAMIFIED_PRIMES:
            continue
        if is_squarefree_fp(reduce_mod_p(h_z, p)):
            out.append(p)
    return out


@dataclass(frozen=True)
class CalibrationChoice:
    """Which of the two 48-point coset actions the shipped polynomial realizes."""

    chosen: int  # 1 or 2
    survivors: tuple
    evidence: tuple  # (p, label, 48-type, candidate count) per sample prime


def choice_to_payload(choice: CalibrationChoice) -> dict:
    return {
        "chosen": choice.chosen,
        "survivors": list(choice.survivors),
        "evidence": [[p, lab, list(t), n] for p, lab, t, n in choice.evidence],
    }


def choice_from_payload(payload: dict) -> CalibrationChoice:
    return CalibrationChoice(
        payload["chosen"],
        tuple(payload["survivors"]),
        tuple((p, lab, tuple(t), n) for p, lab, t, n in payload["evidence"]),
    )


def calibrate(
    ctx: FrobeniusContext, f5_z: list[int], h_z: list[int], sample: list[int]
) -> CalibrationChoice:
    """Test both candidate actions against factorization data at sample primes.

    An action survives if at every sample prime the observed 48-point cycle
    type, intersected with the determinant constraint from the symbol
    (-19/p), yields candidate classes consistent with the S_5 class seen on 5
    points.  Ties are broken toward action 1 (canonical order).
    """
    if len(sample) < 25:
        raise DomainError("calibration needs at least 25 sample primes")
    evidence: dict[int, list] = {1: [], 2: []}
    survivors = []
    prepared = []
    for p in sample:
        if p in RAMIFIED_PRIMES:
            raise DomainError(f"sample prime {p} is ramified")
        hp = reduce_mod_p(h_z, p)
        if not is_squarefree_fp(hp):
            raise DomainError(f"degree-48 polynomial not squarefree mod {p}")
        label = _LABEL_BY_TYPE5[factorization_cycle_type(reduce_mod_p(f5_z, p))]
        t48 = factorization_cycle_type(hp)
        prepared.append((p, label, t48, kronecker(-19, p)))
    for which in (1, 2):
        ok = True
        for p, label, t48, k19 in prepared:
            cands = [
                ci
                for ci in ctx.multimap[which].get(t48, ())
                if ctx.infos[ci].det == k19
            ]
            consistent = [ci for ci in cands if ctx.infos[ci].label == label]
            evidence[which].append((p, label, t48, len(consistent)))
            if not consistent:
                ok = False
        if ok:
            survivors.append(which)
    if not survivors:
        raise PipelineError(
            "no coset action matches the shipped polynomial (corrupt data?)"
        )
    chosen = survivors[0]
    return CalibrationChoice(chosen, tuple(survivors), tuple(evidence[chosen]))


@dataclass
class FrobeniusReport:
    p: int
    type5: tuple
    type6: tuple
    type48: tuple | None
    label: str
    candidates: tuple  # class indices after the det constraint
    n_p: int
    ap_sq: int | None
    k19: int
    k151: int
    k2869: int
    predicted_product: int
    checks: dict  # check id -> True/False/None (None = skipped)
    trace_pair: tuple  # trace strings of the candidate classes

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.checks.values())

    CSV_HEADER = (
        "p,type5,type6,type48,class,ap_sq,N_p,k19,k151,k2869,verdicts,"
        "predicted_product"
    )

    def csv_row(self) -> str:
        fmt_t = lambda t: "-" if t is None else ".".join(map(str, t))
        verdicts = ";".join(
            f"{k}={'skip' if v is None else ('ok' if v else 'FAIL')}"
            for k, v in sorted(self.checks.items())
        )
        ap = "-" if self.ap_sq is None else str(self.ap_sq)
        return (
            f"{self.p},{fmt_t(self.type5)},{fmt_t(self.type6)},{fmt_t(self.type48)},"
            f"\"{self.label}\",{ap},{self.n_p},{self.k19},{self.k151},{self.k2869},"
            f"{verdicts},{self.predicted_product}"
        )

    def render(self) -> str:
        lines = [
            f"prime {self.p}: class {self.label}, N_p = {self.n_p}",
            f"  cycle types: 5-point {self.type5}, 6-point {self.type6}, "
            f"48-point {self.type48 if self.type48 else 'absent'}",
            f"  symbols: (-19/p) = {self.k19}, (-151/p) = {self.k151}, "
            f"(2869/p) = {self.k2869}",
            f"  candidates {self.candidates} traces {self.trace_pair} "
            f"a_p^2 = {self.ap_sq}",
            f"  predicted eigenvalue product = {self.predicted_product}",
        ]
        for k, v in sorted(self.checks.items()):
            verdict = "skipped" if v is None else ("ok" if v else "FAILED")
            lines.append(f"  check {k}: {verdict}")
        return "\n".join(lines)


def frobenius_report(
    p: int,
    ctx: FrobeniusContext,
    choice: CalibrationChoice,
    f5_z: list[int],
    g_z: list[int],
    h_z: list[int],
) -> FrobeniusReport:
    """All per-prime checks for one admissible prime.

    Checks: (i) the 6-point cycle type matches the class dictionary;
    (ii) symbol identifications (sign vs (2869/p), det constraint nonempty,
    det*sgn vs (-151/p)); (iii) N_p = 1 + standard trace; (iv) the mod-5
    congruence for N_p in terms of a_p^2; (v) squared trace constant on the
    candidate set; (vi) 1 + (-151/p) * predicted product = N_p.
    (iv) and (v) are skipped when the degree-48 polynomial is not squarefree
    mod p, since no 48-point cycle type exists there.
    """
    if p in RAMIFIED_PRIMES:
        raise Ramified(f"{p} ramifies in the quintic field")
    f5p = reduce_mod_p(f5_z, p)
    gp = reduce_mod_p(g_z, p)
    if not is_squarefree_fp(f5p) or not is_squarefree_fp(gp):
        raise PipelineError(f"unexpected repeated factor mod {p}")
    type5 = factorization_cycle_type(f5p)
    type6 = factorization_cycle_type(gp)
    label = _LABEL_BY_TYPE5[type5]
    n_p = sum(1 for part in type5 if part == 1)
    k19, k151, k2869 = kronecker(-19, p), kronecker(-151, p), kronecker(2869, p)

    checks: dict[str, bool | None] = {}
    checks["i-dict6"] = type6 == ctx.dict56[label]

    hp = reduce_mod_p(h_z, p)
    mm = ctx.multimap[choice.chosen]
    if is_squarefree_fp(hp):
        type48 = factorization_cycle_type(hp)
        candidates = tuple(
            ci for ci in mm.get(type48, ()) if ctx.infos[ci].det == k19
        )
        label_ok = any(ctx.infos[ci].label == label for ci in candidates)
        trace_sqs = {ctx.infos[ci].trace_sq for ci in candidates}
        checks["v-trsq"] = len(trace_sqs) == 1
        ap_sq = trace_sqs.pop() if len(trace_sqs) == 1 else None
    else:
        type48, candidates, label_ok, ap_sq = None, (), True, None
        checks["v-trsq"] = None

    checks["ii-symbols"] = (
        s5_sign(label) == k2869 and k19 * k2869 == k151 and label_ok
    )
    checks["iii-count"] = n_p == 1 + theta5_trace(label)
    if ap_sq is not None:
        checks["iv-congruence"] = (
            n_p % 5 == (1 + k2869 * (k19 * ap_sq + k2869 - 1)) % 5
        )
    else:
        checks["iv-congruence"] = None
    predicted = predicted_hilbert_product(label, k151)
    checks["vi-product"] = 1 + k151 * predicted == n_p

    return FrobeniusReport(
        p=p,
        type5=type5,
        type6=type6,
        type48=type48,
        label=label,
        candidates=candidates,
        n_p=n_p,
        ap_sq=ap_sq,
        k19=k19,
        k151=k151,
        k2869=k2869,
        predicted_product=predicted,
        checks=checks,
        trace_pair=tuple(ctx.infos[ci].trace_repr for ci in candidates),
    )


@dataclass
class AggregateReport:
    pmax: int
    reports: list[FrobeniusReport]
    failures: list  # (p, check id)
    skipped: list  # (p, reason)
    class_counts: dict

    @property
    def ok(self) -> bool:
        return not self.failures

    def frequency_rows(self) -> list[tuple]:
        total = len(self.reports)
        rows = []
        for lab in S5_CYCLE_TYPES:
            count = self.class_counts.get(lab, 0)
            expected = s5_class_size(lab) / 120
            observed = count / total if total else 0.0
            rows.append((lab, count, observed, expected))
        return rows

    def render(self) -> str:
        lines = [
            f"primes checked up to {self.pmax}: {len(self.reports)}",
            f"failures: {len(self.failures)}"
            + (f" {self.failures[:10]}" if self.failures else ""),
            f"primes with 48-point data absent: "
            f"{[p for p, _ in self.skipped] or 'none'}",
            "class frequencies (observed vs expected):",
        ]
        for lab, count, obs, exp in self.frequency_rows():
            lines.append(f"  {lab:<15} {count:>6}  {obs:.4f}  {exp:.4f}")
        return "\n".join(lines)


def verify_range(
    pmax: int,
    ctx: FrobeniusContext,
    choice: CalibrationChoice,
    f5_z: list[int],
    g_z: list[int],
    h_z: list[int],
) -> AggregateReport:
    """Run the per-prime checks for every admissible prime up to pmax."""
    if pmax < 100:
        raise DomainError("range verification needs pmax >= 100")
    reports, failures, skipped = [], [], []
    counts: dict[str, int] = {}
    for p in primes_up_to(pmax):
        if p in RAMIFIED_PRIMES:
            continue
        rep = frobenius_report(p, ctx, choice, f5_z, g_z, h_z)
        reports.append(rep)
        counts[rep.label] = counts.get(rep.label, 0) + 1
        if rep.type48 is None:
            skipped.append((p, "degree-48 polynomial not squarefree mod p"))
        for cid, verdict in sorted(rep.checks.items()):
            if verdict is False:
                failures.append((p, cid))
    return AggregateReport(pmax, reports, failures, skipped, counts)


def triple_injectivity_check(ctx: FrobeniusContext) -> Report:
    """The (lift (trace,det) set, sgn, det*sgn) triple separates S_5 classes,
    except that the identity and the 5-cycles genuinely collide."""
    triples: dict[str, tuple] = {}
    for lab in S5_CYCLE_TYPES:
        lift_data = frozenset(
            (info.trace_repr, info.det) for info in ctx.infos if info.label == lab
        )
        sgn = s5_sign(lab)
        det_sgn_set = frozenset(
            info.det * sgn for info in ctx.infos if info.label == lab
        )
        triples[lab] = (lift_data, sgn, det_sgn_set)
    collisions = sorted(
        (a, b)
        for a in triples
        for b in triples
        if a < b and triples[a] == triples[b]
    )
    expected = [("(1)", "(1,3,5,4,2)")]
    return Report(
        "injectivity of the per-prime invariant triple",
        [
            CheckLine(
                "triple-collisions",
                "S5",
                str(collisions),
                str(expected),
                collisions == expected,
            )
        ],
    )
