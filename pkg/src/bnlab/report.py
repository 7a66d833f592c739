"""Replay every numerical claim and collect exact pass/fail entries.

Entries of genus sweeps carry a ``/g=NNN`` (or ``/k=NNN``) suffix so the
sorted order is numeric.  ``assumed`` marks ``h^0`` values obtained as Euler
characteristics, which hold only under the vanishing of ``h^1`` and ``h^2``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from . import elliptic as ec
from . import llschain as lls
from . import modulipic as mp
from . import schubert as sb
from . import surfacelattice as sl
from .rational import render

DEFAULT_G_MAX = 30

STATUSES = ("pass", "fail", "assumed")


@dataclass(frozen=True)
class Entry:
    claim_id: str
    paper_anchor: str
    computed: str
    expected: str
    status: str

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "paper_anchor": self.paper_anchor,
            "computed": self.computed,
            "expected": self.expected,
            "status": self.status,
        }


@dataclass
class VerificationReport:
    entries: list[Entry] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    g_max: int = DEFAULT_G_MAX

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def sorted_entries(self) -> list[Entry]:
        return sorted(self.entries, key=lambda e: e.claim_id)

    def summary(self) -> dict[str, int]:
        counts = {s: 0 for s in STATUSES}
        for e in self.entries:
            counts[e.status] += 1
        return counts

    def to_dict(self) -> dict:
        return {
            "g_max": self.g_max,
            "summary": self.summary(),
            "entries": [e.to_dict() for e in self.sorted_entries()],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        payload = json.loads(text)
        entries = [Entry(**e) for e in payload["entries"]]
        bad = [e.claim_id for e in entries if e.status not in STATUSES]
        if bad:
            raise ValueError(f"unknown status in entries {bad}")
        return cls(entries=entries, notes=list(payload["notes"]), g_max=int(payload["g_max"]))

    def to_table(self, verbose: bool = False) -> str:
        """Human-readable form: one line per claim family, failures in full."""
        groups: dict[str, list[Entry]] = {}
        for e in self.sorted_entries():
            groups.setdefault(e.claim_id.split("/")[0], []).append(e)
        lines = [f"verify-paper (genus sweeps up to g={self.g_max})", ""]
        width = max(len(k) for k in groups) if groups else 10
        for base, items in groups.items():
            statuses = {e.status for e in items}
            status = "fail" if "fail" in statuses else ("assumed" if "assumed" in statuses else "pass")
            if len(items) == 1:
                e = items[0]
                detail = f"computed={_short(e.computed)} expected={_short(e.expected)}"
            else:
                n_ok = sum(1 for e in items if e.status != "fail")
                detail = f"{n_ok}/{len(items)} cases"
            lines.append(f"{status.upper():8} {base:<{width}}  {items[0].paper_anchor}  [{detail}]")
            if verbose or status == "fail":
                for e in items:
                    if verbose or e.status == "fail":
                        lines.append(
                            f"         {e.claim_id}: computed={_short(e.computed)} "
                            f"expected={_short(e.expected)} ({e.status})"
                        )
        s = self.summary()
        lines += ["", f"{s['pass']} pass, {s['assumed']} assumed, {s['fail']} fail"]
        if self.notes:
            lines += ["", "notes:"] + [f"  - {n}" for n in self.notes]
        return "\n".join(lines) + "\n"


def _short(text: str, limit: int = 60) -> str:
    return text if len(text) <= limit else f"{text[:limit - 20]}...<{len(text)} chars>"


def _fmt(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (str, ec.RationalPoint, sb.SchubertIndex, sl.DivClass)):
        return str(value)
    return render(value)


class _Collector:
    def __init__(self, report: VerificationReport) -> None:
        self.report = report

    def check(self, claim_id: str, anchor: str, computed, expected, assumed: bool = False) -> bool:
        c, e = _fmt(computed), _fmt(expected)
        ok = c == e
        status = "fail" if not ok else ("assumed" if assumed else "pass")
        self.report.entries.append(Entry(claim_id, anchor, c, e, status))
        return ok


def build_report(g_max: int = DEFAULT_G_MAX, fixture: ec.NinePointFixture | None = None) -> VerificationReport:
    if g_max < 2:
        raise ValueError("g_max must be at least 2")
    report = VerificationReport(g_max=g_max)
    col = _Collector(report)
    fixture = fixture or ec.nine_point_fixture()
    genera = range(2, g_max + 1)

    _brill_noether(col, genera)
    _fixture(col, fixture, g_max)
    _surfaces(col, genera)
    _pencils(col, genera)
    _chains(col)
    _notes(report, fixture)
    return report


def _tag(g: int, letter: str = "g") -> str:
    return f"/{letter}={g:03d}"


def _brill_noether(col: _Collector, genera) -> None:
    for g in genera:
        w = sb.SchubertIndex(g - 1, 2 * g - 2, (0,) * (g - 1) + (1,))
        col.check("weierstrass-index.weight" + _tag(g), "w(0,...,0,1) = 1", sb.weight(w), 1)
        col.check(
            "weierstrass-index.rho" + _tag(g),
            "rho(g,g-1,2g-2,(0,...,0,1)) = -1",
            sb.pointed_rho(g, g - 1, 2 * g - 2, w),
            -1,
        )
        col.check(
            "weierstrass-index.eh-criterion" + _tag(g),
            "sum max{alpha_i+g-d+r,0} <= g fails",
            sb.eh_exists(g, g - 1, 2 * g - 2, w),
            False,
        )
        col.check("canonical-series.rho" + _tag(g), "rho(g,g-1,2g-2) = 0", sb.rho(g, g - 1, 2 * g - 2), 0)
    for g in [1, *genera]:
        col.check(
            "plucker.canonical" + _tag(g),
            "(r+1)d + r(r+1)(g-1) at the canonical series = g^3 - g",
            sb.plucker_total(g, g - 1, 2 * g - 2),
            g**3 - g,
        )
    col.check("plucker.elliptic-double-cover", "plucker(1,1,2) = 4", sb.plucker_total(1, 1, 2), 4)
    col.check("plucker.rational-line", "plucker(0,1,1) = 0", sb.plucker_total(0, 1, 1), 0)

    # every observed ramification that beats rho produces a divisorial witness
    bad = 0
    for g in range(1, 8):
        for r in range(0, 3):
            for d in range(r, 8):
                base = sb.rho(g, r, d)
                for idx in sb.all_indices(r, d):
                    if not (base >= 0 and sb.weight(idx) > base) and not base < -1:
                        continue
                    dp, wit = sb.divisorial_witness(g, r, d, idx)
                    ok = sb.pointed_rho(g, r, dp, wit) == -1
                    if dp == d:
                        ok = ok and sb.lex_leq(wit, idx)
                    else:
                        ok = ok and dp > d and all(a <= dp - d for a in wit)
                    bad += not ok
    col.check(
        "pointed-divisor.witness-replay",
        "w(alpha') = rho(g,r,d)+1, rho(g,r,d',alpha') = -1",
        bad,
        0,
    )


def _fixture(col: _Collector, fixture: ec.NinePointFixture, g_max: int) -> None:
    curve = fixture.curve
    for i, P in enumerate(fixture.points, start=1):
        col.check(
            f"fixture.on-curve.p{i}",
            "y^2 - (x^3 + ax + b) = 0",
            P.y * P.y - (P.x**3 + curve.a * P.x + curve.b),
            0,
        )
    col.check("fixture.distinct", "nine distinct points", len(set(fixture.points)), 9)
    total = fixture.total()
    order = ec.torsion_order(curve, total)
    col.check("fixture.sum.non-torsion", "p1+...+p9 not torsion", "non-torsion" if order is None else order, "non-torsion")

    points = {k: ec.p10(k, fixture) for k in range(1, g_max + 1)}
    col.check(
        "p10.base-case",
        "p10(1) = -(p1+...+p8)",
        points[1],
        ec.negate(curve, ec.point_sum(curve, fixture.points[:8])),
    )
    for k in range(2, g_max + 1):
        diff = ec.sub(curve, points[k - 1], points[k])
        col.check("p10.difference" + _tag(k, "k"), "p10(k-1) - p10(k) = p1+...+p9", diff, total)
        order = ec.torsion_order(curve, diff)
        col.check(
            "p10.difference.non-torsion" + _tag(k, "k"),
            "p10(k) - p10(k-1) not torsion",
            "non-torsion" if order is None else order,
            "non-torsion",
        )
    everything = list(points.values()) + list(fixture.points)
    col.check(
        "p10.distinct",
        "p10(1..g) pairwise distinct and distinct from p1..p9",
        len(set(everything)),
        len(everything),
    )

    # elliptic ruled surfaces: eta represented by t = p2 - O, r = p1
    r, t = fixture.points[0], fixture.points[1]
    prev = r
    for g in range(1, g_max + 1):
        s = ec.s_point(g, r, t, curve)
        col.check("s-point.not-r" + _tag(g), "s(g) != r", s != r, True)
        diff = ec.sub(curve, s, prev)
        col.check("s-point.difference" + _tag(g), "s(g) - s(g-1) = eta", diff, t)
        prev = s
    order = ec.torsion_order(curve, t)
    col.check("s-point.eta.non-torsion", "eta not torsion", "non-torsion" if order is None else order, "non-torsion")


def _surfaces(col: _Collector, genera) -> None:
    S_prime = sl.blown_up_plane(9)
    S = sl.blown_up_plane(10)
    Y, Xp = sl.ruled_models()
    X_ind = sl.blow_up(Xp, 1, names=["E"])
    models = {
        "plane": sl.blown_up_plane(0),
        "s-prime": S_prime,
        "s": S,
        "ruled-decomposable": Y,
        "ruled-indecomposable": Xp,
        "ruled-indecomposable-blowup": X_ind,
        "k3": sl.k3_model(2),
    }
    for key, model in models.items():
        col.check(f"noether.{key}", "12 chi(O) = K^2 + c2", 12 * model.chi_O, model.K2 + model.c2)
    col.check("surface-s.K2", "K_S^2 = -1", S.K2, -1)
    col.check("surface-s.c2", "c2(S) = 13", S.c2, 13)

    J = sl.elliptic_class(S)
    col.check("cubic.self-intersection", "J = 3l - E1 - ... - E10, J^2 = -1", J.square(), -1)
    col.check("cubic.canonical-degree", "J.K = 1", J.dot(S.canonical), 1)
    col.check("cubic.genus", "J elliptic", sl.adjunction_genus(S, J), 1)

    for g in genera:
        t = _tag(g)
        C = sl.duval_class(g, S)
        col.check("duval-class.self-intersection" + t, "C^2 = 2g-2", C.square(), 2 * g - 2)
        col.check("duval-class.canonical-degree" + t, "C.K = 0", C.dot(S.canonical), 0)
        col.check("duval-class.section-degree" + t, "C.E10 = 1", C.dot(S["E10"]), 1)
        col.check("duval-class.genus" + t, "Du Val curves of genus g", sl.adjunction_genus(S, C), g)
        col.check("duval-class.cubic-degree" + t, "C.J = 0", C.dot(J), 0)
        col.check("l-g.h0" + t, "h0(S', L_g) = g+1", sl.chi_of_class(S_prime, sl.lg_class(g, S_prime)), g + 1, assumed=True)
        D = sl.lambda_class(g, S)
        col.check("lambda-hyperplane.sum" + t, "D + J in L_g", D + J, C)
        col.check("lambda-hyperplane.node" + t, "D.J = 1", D.dot(J), 1)
        col.check("lambda-hyperplane.genus" + t, "D of genus g-1", sl.adjunction_genus(S, D), g - 1)
        X = sl.blow_up(S, 2 * g - 2) if g > 1 else S
        col.check("duval-chain.c2" + t, "c2(Bl_{2g-2} S) = 2g+11", X.c2, 2 * g + 11)

        R = Y.element(J0=g, f=1)
        col.check("ruled.h0" + t, "h0(gJ0 + f) = g+1", sl.chi_of_class(Y, R), g + 1, assumed=True)
        col.check("ruled.genus" + t, "C in |gJ0 + f| of genus g", sl.adjunction_genus(Y, R), g)
        Ci = X_ind.element(J0=g, f=1, E=-1)
        col.check("indecomposable.self-intersection" + t, "C^2 = 2g-1", Ci.square(), 2 * g - 1)
        col.check("indecomposable.section-degree" + t, "C.E = 1", Ci.dot(X_ind["E"]), 1)
        col.check("indecomposable.genus" + t, "C of genus g", sl.adjunction_genus(X_ind, Ci), g)


def _pencils(col: _Collector, genera) -> None:
    S = sl.blown_up_plane(10)
    _, Xp = sl.ruled_models()
    X_ind = sl.blow_up(Xp, 1, names=["E"])
    for g in genera:
        t = _tag(g)
        j = mp.duval_pencil(g)
        geo = sl.pencil_numbers(S, sl.duval_class(g, S), S["E10"])
        col.check("duval-pencil.lambda" + t, "j*(lambda) = g", geo.lambda_, j["lambda"])
        col.check("duval-pencil.lambda.value" + t, "j*(lambda) = g", j["lambda"], g)
        col.check("duval-pencil.psi" + t, "j*(psi) = -E10^2 = 1", geo.psi, j["psi"])
        col.check("duval-pencil.delta_irr" + t, "j*(delta_irr) = 6(g+1)", j["delta_irr"], 6 * (g + 1))
        col.check("duval-pencil.delta_1" + t, "j*(delta_1) = 1", j["delta_1"], 1)
        col.check(
            "duval-pencil.delta_higher" + t,
            "j*(delta_i) = 0 for i >= 2",
            sum(abs(j[f"delta_{i}"]) for i in range(2, g)),
            0,
        )
        col.check("duval-pencil.delta-total" + t, "c2 + 4g - 4 singular fibres", geo.delta_total, j.delta_total)
        col.check("bn-class.pairing.duval" + t, "j*(BN_g) = 0", mp.pair(j, mp.bn_class(g)), 0)
        col.check("weierstrass-class.pairing.duval" + t, "j*([W_g]) = 0", mp.pair(j, mp.weierstrass_class(g)), 0)

        iota = mp.iota_pencil(g)
        Ci = X_ind.element(J0=g, f=1, E=-1)
        geo = sl.pencil_numbers(X_ind, Ci, X_ind["E"])
        col.check("iota-pencil.lambda" + t, "iota*(lambda) = chi + g - 1 = g-1", geo.lambda_, iota["lambda"])
        col.check("iota-pencil.lambda.value" + t, "iota*(lambda) = g-1", iota["lambda"], g - 1)
        col.check("iota-pencil.psi" + t, "iota*(psi) = 1", geo.psi, iota["psi"])
        col.check("iota-pencil.delta_irr" + t, "iota*(delta_irr) = 6(g-1)", iota["delta_irr"], 6 * (g - 1))
        col.check(
            "iota-pencil.delta_1+delta_g-1" + t,
            "iota*(delta_1) = iota*(delta_{g-1}) = 1",
            iota["delta_1"] + (iota[f"delta_{g - 1}"] if g > 2 else 0),
            2,
        )
        col.check("iota-pencil.delta-total" + t, "c2 + 4g - 4 = 6g - 4", geo.delta_total, iota.delta_total)
        col.check("iota-pencil.delta-total.value" + t, "c2 + 4g - 4 = 6g - 4", geo.delta_total, 6 * g - 4)
        col.check("bn-class.pairing.iota" + t, "iota*(BN_g) = 0", mp.pair(iota, mp.bn_class(g)), 0)
        col.check("weierstrass-class.pairing.iota" + t, "iota*([W_g]) = 0", mp.pair(iota, mp.weierstrass_class(g)), 0)

        bar = mp.iota_bar_pencil(g)
        col.check("iota-bar.delta_1" + t, "iota_bar*(delta_1) = 2", bar["delta_1"], 2)
        col.check("iota-bar.forget" + t, "iota_bar = pi o iota", mp.forget_point(iota) == bar, True)
        bad = 0
        for name in mp.generators(g, "M"):
            m = mp.MgClass.from_dict(g, {name: 1})
            bad += mp.pair(bar, m) != mp.pair(iota, mp.pullback_pi(m))
        col.check("pullback.functoriality" + t, "iota_bar*(m) = iota*(pi^* m)", bad, 0)

        R = mp.k3_pencil(g)
        K3 = sl.k3_model(g)
        geo = sl.pencil_numbers(K3, K3["H"], None)
        col.check("k3-pencil.lambda" + t, "R.lambda = g+1", geo.lambda_, R["lambda"])
        col.check("k3-pencil.delta_irr" + t, "R.delta_irr = 6g+18", geo.delta_total, R["delta_irr"])

    j10 = mp.duval_pencil(10)
    col.check("z10.pairing.duval", "j*([Z_10]) = -1 < 0", mp.pair(j10, mp.z10_class()), -1)
    col.check("z10.lambda", "[Z_10] = 7 lambda - ...", mp.z10_class()["lambda"], 7)


def _chains(col: _Collector) -> None:
    for variant in ("two-pointed", "one-pointed", "three-component"):
        checked, exc = lls.additivity_sweep(8, 3, 8, variant)
        col.check(
            f"additivity.{variant}",
            f"Brill-Noether number additivity over {checked} index tuples (g<=8, r<=3, d<=8)",
            len(exc),
            0,
        )
    disagreements = 0
    cases = 0
    for g in range(1, 8):
        for r in range(0, 3):
            for d in range(r, 8):
                for a in sb.all_indices(r, d):
                    cases += 1
                    nonempty = lls.chain_dim(lls.ChainProblem(g, r, d, a)) is not None
                    disagreements += nonempty != sb.eh_exists(g, r, d, a)
    col.check(
        "chain.eh-agreement",
        f"elliptic-tail recursion vs sum max{{alpha_i+g-d+r,0}} <= g over {cases} problems",
        disagreements,
        0,
    )
    for g in range(2, 8):
        w = sb.SchubertIndex(g - 1, 2 * g - 2, (0,) * (g - 1) + (1,))
        res = lls.chain_dim(lls.ChainProblem(g, g - 1, 2 * g - 2, w))
        col.check("chain.weierstrass-empty" + _tag(g), "no g^{g-1}_{2g-2} with a Weierstrass point at p", res, None)
    a = sb.VanishingSequence(1, 2, (0, 2))
    col.check("elliptic-tail.torsion-obstruction", "a_i+b_{r-i} = a_j+b_{r-j} = d", lls.torsion_obstructed(1, 2, a, a), True)


def _notes(report: VerificationReport, fixture: ec.NinePointFixture) -> None:
    truncated = mp.z10_class_truncated()
    report.notes.append(
        "Z_10: the truncated coefficient list (delta_irr -5, delta_1 -1, delta_9 -1, delta_2 -12, delta_8 -12, rest elided) "
        f"pairs to {render(mp.pair(mp.duval_pencil(10), truncated))} with the Du Val pencil, not -1; the pull-back of "
        "7 lambda - delta_irr - 5 delta_1 - 9 delta_2 - 12 delta_3 - 14 delta_4 - 15 delta_5 is used and pairs to -1."
    )
    x, y = ec.E17_P6_TYPO
    if fixture == ec.nine_point_fixture():
        report.notes.append(
            f"fixture p6: the point ({x}, {y}) is not on y^2 = x^3 + 17; the integral point (5234, 378661) is used."
        )
    report.notes.append(
        "h0 claims (l-g.h0, ruled.h0) are Euler characteristics; they equal h0 assuming h1 = h2 = 0."
    )
    report.notes.append(
        "genus 2: delta_1 and delta_{g-1} are the same divisor, so the indecomposable pencil has degree 2 there."
    )
