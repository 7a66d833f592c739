"""Acceptance criteria, each checked exactly (zero tolerance).

Run with ``pytest tests/test_acceptance.py``; the terminal summary lists one
PASS/FAIL line per criterion.
"""
import json
import random
from fractions import Fraction

from _oracle import repeated_sum, to_affine, to_proj
from bnlab import elliptic as ec
from bnlab import llschain as lls
from bnlab import modulipic as mp
from bnlab import schubert as sb
from bnlab import surfacelattice as sl
from bnlab.report import VerificationReport, build_report

GENERA = range(2, 51)


def test_criterion_01_duval_pencil_numbers(criterion):
    S = sl.blown_up_plane(10)
    bad = []
    for g in GENERA:
        geo = sl.pencil_numbers(S, sl.duval_class(g, S), S["E10"])
        j = mp.duval_pencil(g)
        higher = [j[f"delta_{i}"] for i in range(2, g)]
        row = (geo.lambda_, geo.psi, j["delta_irr"], j["delta_1"], sum(abs(x) for x in higher))
        consistent = (geo.lambda_, geo.psi, geo.delta_total) == (j["lambda"], j["psi"], j.delta_total)
        if row != (g, 1, 6 * (g + 1), 1, 0) or not consistent:
            bad.append(g)
    assert criterion(1, "Du Val pencil numbers (g, 1, 6(g+1), 1, 0) for g=2..50", not bad, f"bad genera {bad}" if bad else "49 genera")


def test_criterion_02_zero_pairings(criterion):
    bad = [
        g for g in GENERA
        if mp.pair(mp.duval_pencil(g), mp.bn_class(g)) != 0 or mp.pair(mp.duval_pencil(g), mp.weierstrass_class(g)) != 0
    ]
    assert criterion(2, "j.BN_g = 0 and j.W_g = 0 for g=2..50", not bad, f"bad genera {bad}" if bad else "98 pairings")


def test_criterion_03_indecomposable_pencil(criterion):
    _, Xp = sl.ruled_models()
    X = sl.blow_up(Xp, 1, names=["E"])
    bad = []
    for g in GENERA:
        iota = mp.iota_pencil(g)
        geo = sl.pencil_numbers(X, X.element(J0=g, f=1, E=-1), X["E"])
        if g > 2:
            boundary = (iota["delta_1"], iota[f"delta_{g - 1}"]) == (1, 1)
        else:
            # delta_1 and delta_{g-1} are one divisor in genus 2
            boundary = iota["delta_1"] == 2
        ok = (
            (iota["lambda"], iota["psi"], iota["delta_irr"]) == (g - 1, 1, 6 * (g - 1))
            and boundary
            and (geo.lambda_, geo.psi, geo.delta_total) == (iota["lambda"], iota["psi"], iota.delta_total)
        )
        bar = mp.iota_bar_pencil(g)
        ok = ok and (bar["lambda"], bar["delta_irr"], bar["delta_1"]) == (g - 1, 6 * (g - 1), 2)
        ok = ok and mp.forget_point(iota) == bar
        ok = ok and mp.pair(iota, mp.bn_class(g)) == 0 and mp.pair(iota, mp.weierstrass_class(g)) == 0
        if not ok:
            bad.append(g)
    assert criterion(3, "indecomposable pencil numbers, iota_bar numbers and zero pairings for g=2..50", not bad,
                     f"bad genera {bad}" if bad else "49 genera")


def test_criterion_04_z10(criterion):
    value = mp.pair(mp.duval_pencil(10), mp.z10_class())
    assert criterion(4, "j.Z_10 = -1", value == -1, f"computed {value}")


def test_criterion_05_fixture(criterion):
    fix = ec.nine_point_fixture()
    E = fix.curve
    problems = []
    if not all(P.y**2 == P.x**3 + 17 for P in fix.points):
        problems.append("off-curve point")
    total = fix.total()
    if ec.torsion_order(E, total) is not None:
        problems.append("sum is torsion")
    # the oracle recomputes the sum projectively
    oracle_total = to_affine(repeated_sum(0, [(1, to_proj(P.x, P.y)) for P in fix.points]))
    if ec.RationalPoint(*oracle_total) != total:
        problems.append("sum disagrees with oracle")
    pts = {k: ec.p10(k, fix) for k in range(1, 11)}
    for k in range(2, 11):
        diff = ec.sub(E, pts[k - 1], pts[k])
        if diff != total or ec.torsion_order(E, diff) is not None:
            problems.append(f"k={k}")
    everything = list(pts.values()) + list(fix.points)
    if len(set(everything)) != len(everything):
        problems.append("coincident points")
    assert criterion(5, "fixture on-curve, non-torsion sum, p10 differences for k=2..10, distinctness", not problems,
                     ", ".join(problems))


def test_criterion_06_surface_identities(criterion):
    S = sl.blown_up_plane(10)
    S9 = sl.blown_up_plane(9)
    Y, Xp = sl.ruled_models()
    X = sl.blow_up(Xp, 1, names=["E"])
    J = sl.elliptic_class(S)
    bad = []
    for g in GENERA:
        C = sl.duval_class(g, S)
        D = sl.lambda_class(g, S)
        R = Y.element(J0=g, f=1)
        Ci = X.element(J0=g, f=1, E=-1)
        ok = (
            (C.square(), C.dot(S.canonical), C.dot(S["E10"]), sl.adjunction_genus(S, C)) == (2 * g - 2, 0, 1, g)
            and D + J == C
            and D.dot(J) == 1
            and sl.chi_of_class(S9, sl.lg_class(g, S9)) == g + 1
            and (sl.chi_of_class(Y, R), sl.adjunction_genus(Y, R)) == (g + 1, g)
            and (Ci.square(), Ci.dot(X["E"]), sl.adjunction_genus(X, Ci)) == (2 * g - 1, 1, g)
        )
        if not ok:
            bad.append(g)
    models = [sl.blown_up_plane(n) for n in range(0, 11)] + [Y, Xp, X, sl.k3_model(7)]
    models += [sl.blow_up(S, k) for k in (1, 4, 9)]
    noether = all(12 * m.chi_O == m.K2 + m.c2 for m in models)
    assert criterion(6, "Du Val, hyperplane, ruled and blown-up identities for g=2..50; Noether on every model",
                     not bad and noether, f"bad genera {bad}, Noether {noether}" if bad or not noether else f"49 genera, {len(models)} models")


def test_criterion_07_additivity(criterion):
    results = {v: lls.additivity_sweep(8, 3, 8, v) for v in ("two-pointed", "one-pointed", "three-component")}
    total = sum(c for c, _ in results.values())
    exceptions = sum(len(e) for _, e in results.values())
    assert criterion(7, "additivity sweep g<=8, r<=3, d<=8", exceptions == 0 and results["two-pointed"][0] > 0,
                     f"{total} index tuples, {exceptions} exceptions")


def test_criterion_08_chain_eh(criterion):
    mismatches, cases = 0, 0
    for g in range(1, 8):
        for r in range(0, 3):
            for d in range(r, 8):
                for a in sb.all_indices(r, d):
                    cases += 1
                    mismatches += (lls.chain_dim(lls.ChainProblem(g, r, d, a)) is not None) != sb.eh_exists(g, r, d, a)
    weier = []
    for g in range(2, 8):
        w = sb.SchubertIndex(g - 1, 2 * g - 2, (0,) * (g - 1) + (1,))
        p = lls.ChainProblem(g, g - 1, 2 * g - 2, w)
        weier.append(p.expected_dimension == -1 and lls.chain_dim(p) is None)
    assert criterion(8, "chain/EH agreement for g<=7, r<=2, d<=7; Weierstrass problem empty for g=2..7",
                     mismatches == 0 and all(weier), f"{cases} problems, {mismatches} mismatches")


def test_criterion_09_plucker(criterion):
    ok = all(sb.plucker_total(g, g - 1, 2 * g - 2) == g**3 - g for g in range(1, 21))
    ok = ok and sb.plucker_total(1, 1, 2) == 4 and sb.plucker_total(0, 1, 1) == 0
    assert criterion(9, "Pluecker totals", ok)


def _rand_q(rng):
    return Fraction(rng.randint(-40, 40), rng.randint(1, 12))


def test_criterion_10_property_suites(criterion, tmp_path):
    rng = random.Random(20261014)
    fix = ec.nine_point_fixture()
    E = fix.curve
    pts = []
    for _ in range(10):
        P = ec.O
        for Q in fix.points:
            P = ec.add(E, P, ec.scalar_mul(E, rng.randint(-2, 2), Q))
        pts.append(P)
    identities = 0
    group_ok = True
    for P in pts:
        group_ok &= ec.add(E, P, ec.O) == P and ec.add(E, P, ec.negate(E, P)) == ec.O
        identities += 2
        for Q in pts:
            group_ok &= ec.add(E, P, Q) == ec.add(E, Q, P)
            identities += 1
    for P, Q, R in zip(pts, pts[1:], pts[2:]):
        group_ok &= ec.add(E, ec.add(E, P, Q), R) == ec.add(E, P, ec.add(E, Q, R))
        identities += 1

    complement_ok = all(
        sb.complement(sb.complement(i)) == i and sb.weight(i) + sb.weight(sb.complement(i)) == (r + 1) * (d - r)
        for r in range(4) for d in range(r, 9) for i in sb.all_indices(r, d)
    )

    linear_ok = True
    for _ in range(50):
        g = rng.randint(2, 12)
        names_c, names_m = mp.generators(g, "C"), mp.generators(g, "M")
        a = mp.UCClass.from_dict(g, {n: _rand_q(rng) for n in names_c})
        b = mp.UCClass.from_dict(g, {n: _rand_q(rng) for n in names_c})
        p = mp.PencilNumbers.from_dict(g, {n: _rand_q(rng) for n in names_c})
        q = mp.PencilNumbers.from_dict(g, {n: _rand_q(rng) for n in names_c})
        m = mp.MgClass.from_dict(g, {n: _rand_q(rng) for n in names_m})
        s, t = _rand_q(rng), _rand_q(rng)
        linear_ok &= mp.pair(p, s * a + t * b) == s * mp.pair(p, a) + t * mp.pair(p, b)
        linear_ok &= mp.pair(s * p + t * q, a) == s * mp.pair(p, a) + t * mp.pair(q, a)
        linear_ok &= mp.pair(mp.forget_point(p), m) == mp.pair(p, mp.pullback_pi(m))

    texts = [ec.fixture_to_json(fix), mp.to_json(mp.z10_class()), mp.to_json(mp.iota_bar_pencil(6)),
             sl.model_to_json(sl.blown_up_plane(10))]
    json_ok = (
        ec.fixture_to_json(ec.fixture_from_json(texts[0])) == texts[0]
        and mp.to_json(mp.from_json(texts[1])) == texts[1]
        and mp.to_json(mp.from_json(texts[2])) == texts[2]
        and sl.model_to_json(sl.model_from_json(texts[3])) == texts[3]
    )
    report_text = build_report(4).to_json()
    json_ok = json_ok and VerificationReport.from_json(report_text).to_json() == report_text
    json_ok = json_ok and json.dumps(json.loads(report_text), indent=2, ensure_ascii=False) + "\n" == report_text

    ok = group_ok and identities >= 100 and complement_ok and linear_ok and json_ok
    detail = (f"{identities} group identities; complement {complement_ok}; "
              f"bilinearity/functoriality {linear_ok}; JSON {json_ok}")
    assert criterion(10, "property suites", ok, detail)


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
