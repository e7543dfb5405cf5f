"""Acceptance criteria 1-10, each reported as one PASS/FAIL line."""

import time

from dualweights import cyclodecomp, weights as weights_mod
from dualweights.catalog import AnalysisRecord
from dualweights.cli import main
from dualweights.cyclodecomp import cyclo_decomposition, dual_decomposition, root_multiset
from dualweights.duality import DualTypeData, classify, dual_of, dual_search, family
from dualweights.exact import BiLaurent, BiRational, divisors, mobius
from dualweights.lattice import degree_of_omega_check, omega
from dualweights.orbifold import (
    c_hat_units,
    is_dual_pair,
    is_tms_dual,
    orbifold_poincare,
    principal_group,
    restriction_identity,
    trivial_group,
)
from dualweights.rings import exceptional_length, milnor_report, presentation, verify_theorem_i
from dualweights.weights import WeightSystem, enumerate_regular, exponent_data, signature

EXEMPLARS = [
    ("I", (2, 3, 5), (15, 10, 6), 30),
    ("I", (2, 3, 7), (21, 14, 6), 42),
    ("II", (3, 2, 8), (8, 12, 3), 24),
    ("III", (2, 5, 1, 2), (5, 2, 4), 10),
    ("IV", (2, 4, 8), (4, 2, 3), 8),
    ("V", (2, 2, 3), (4, 5, 3), 13),
]


def dual_type_systems(h_max):
    return [w for h in range(2, h_max + 1) for w in enumerate_regular(h) if classify(w)]


def test_criterion_01_analyze_e12(capsys, acceptance):
    t0 = time.perf_counter()
    code = main(["analyze", "6", "14", "21", "42", "--json"])
    elapsed = time.perf_counter() - t0
    rec = AnalysisRecord.from_json(capsys.readouterr().out)
    expected_e = {str(d): mobius(42 // d) for d in divisors(42) if mobius(42 // d)}
    ok = (
        code == 0
        and rec.regular
        and rec.mu == 12
        and rec.epsilon == -1
        and rec.genus == 0
        and rec.signature == [2, 3, 7]
        and rec.dual == rec.key
        and rec.cyclotomic_exponents == expected_e
        and rec.passed
        and elapsed < 1.0
    )
    acceptance(1, ok, f"analyze 6 14 21 42: mu={rec.mu} eps={rec.epsilon} sig=(0;{rec.signature}) "
                      f"self-dual={rec.dual == rec.key} e(d)=mu(42/d) {elapsed:.2f}s")
    assert ok


def test_criterion_02_regularity_sweep(acceptance):
    weights_mod._enumerate.cache_clear()
    weights_mod._exponent_data.cache_clear()
    cyclodecomp._cached_decomposition.cache_clear()
    t0 = time.perf_counter()
    count, bad = 0, []
    for h in range(2, 41):
        for w in enumerate_regular(h):
            d = exponent_data(w)
            m = d.exponents
            ok = all(m[i] + m[len(m) - 1 - i] == h for i in range(len(m)))
            ok = ok and d.mu == d.chi(1) == len(m) and root_multiset(w).is_galois_closed()
            count += 1
            if not ok:
                bad.append(w.key)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    acceptance(2, ok, f"{count} regular systems with h<=40, failures={bad[:3]} {elapsed:.1f}s")
    assert ok


def test_criterion_03_restriction_identity(acceptance):
    t0 = time.perf_counter()
    systems = [w for h in range(2, 21) for w in enumerate_regular(h)]
    bad = [w.key for w in systems if not restriction_identity(w)]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120
    acceptance(3, ok, f"chi(W,{{1}}) = chi_W for {len(systems)} systems with h<=20, failures={bad[:3]} {elapsed:.1f}s")
    assert ok


def test_criterion_04_duality_suite(acceptance):
    t0 = time.perf_counter()
    systems = dual_type_systems(60)
    bad = []
    orbifold_count = 0
    for w in systems:
        ws = dual_of(w)
        sig = signature(w)
        if cyclo_decomposition(ws) != dual_decomposition(cyclo_decomposition(w)):
            bad.append((w.key, "phi*"))
        if not dual_of(ws).same_system(w):
            bad.append((w.key, "involution"))
        if sig.genus != 0 or len(sig.alphas) > 3:
            bad.append((w.key, "signature"))
        if ws not in dual_search(w).candidates:
            bad.append((w.key, "dual_search"))
        if w.h <= 30:
            orbifold_count += 1
            if not is_dual_pair(w, ws):
                bad.append((w.key, "orbifold"))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 600
    acceptance(4, ok, f"{len(systems)} dual-type systems h<=60, orbifold identity on {orbifold_count} with h<=30, "
                      f"failures={bad[:3]} {elapsed:.1f}s")
    assert ok


def test_criterion_05_lemma_suite(acceptance):
    t0 = time.perf_counter()
    systems = dual_type_systems(60)
    bad = []
    for w in systems:
        for t in classify(w):
            p = omega(w, t)
            if not (p.report.passed and degree_of_omega_check(w, p)):
                bad.append(w.key)
    elapsed = time.perf_counter() - t0
    ok = not bad
    acceptance(5, ok, f"omega_W with both conditions and preconditions for {len(systems)} systems h<=60, "
                      f"deg = h*alpha/(a1a2a3), failures={bad[:3]} {elapsed:.1f}s")
    assert ok


def test_criterion_06_theorem_i(acceptance):
    bad, worst = [], 0.0
    for tag, params, ws, h in EXEMPLARS:
        w = WeightSystem(ws, h)
        t = DualTypeData(tag, params, (0, 1, 2), family(tag, params))
        t0 = time.perf_counter()
        if not verify_theorem_i(w, t, 2 * h).passed:
            bad.append(w.key)
        worst = max(worst, time.perf_counter() - t0)
    systems = dual_type_systems(60)
    for w in systems:
        t0 = time.perf_counter()
        if not verify_theorem_i(w, classify(w)[0], 2 * w.h).passed:
            bad.append(w.key)
        worst = max(worst, time.perf_counter() - t0)
    ok = not bad and worst < 30
    acceptance(6, ok, f"Theorem (i) with N=2h for 6 exemplars and {len(systems)} systems h<=60, "
                      f"failures={bad[:3]} slowest {worst:.2f}s")
    assert ok


def test_criterion_07_milnor(acceptance):
    details, ok = [], True
    for tag, params, ws, h in EXEMPLARS:
        w = WeightSystem(ws, h)
        rep = milnor_report(presentation(DualTypeData(tag, params, (0, 1, 2), family(tag, params))), w)
        ok = ok and rep.passed and rep.total == exponent_data(w).mu
        details.append(f"{w.key}:{rep.total}")
    acceptance(7, ok, "graded Milnor dims = chi_W, totals " + " ".join(details))
    assert ok


def test_criterion_08_exceptional_length(acceptance):
    systems = [w for w in dual_type_systems(60) if w.epsilon < 0]
    bad = [w.key for w in systems if exceptional_length(w) != exponent_data(dual_of(w)).mu]
    e12 = exceptional_length(WeightSystem.of(6, 14, 21, 42))
    e14 = exceptional_length(WeightSystem.of(3, 8, 12, 24))
    ok = not bad and e12 == 12 and e14 == 10
    acceptance(8, ok, f"length = mu(W*) for {len(systems)} systems with eps<0, E12->{e12}, E14->{e14}, failures={bad[:3]}")
    assert ok


def test_criterion_09_hand_oracle(acceptance):
    a1 = WeightSystem.of(1, 1, 1, 2)
    minus_one = BiRational(BiLaurent.constant(4, 2, -1))
    value = orbifold_poincare(a1, principal_group(a1))
    ok = value == minus_one and c_hat_units(a1) == 0 and is_tms_dual(a1, principal_group(a1), a1, trivial_group(a1))
    acceptance(9, ok, "chi((1,1,1;2),G0) = -1, c_hat = 0, duality identity holds")
    assert ok


def test_criterion_10_catalog(tmp_path, acceptance):
    paths = []
    t0 = time.perf_counter()
    for i, jobs in enumerate((1, 1, 4)):
        p = tmp_path / f"catalog{i}.jsonl"
        assert main(["enumerate", "--h-max", "24", "--dual-only", "--jobs", str(jobs), "--out", str(p)]) == 0
        paths.append(p)
    elapsed = time.perf_counter() - t0
    blobs = [p.read_bytes() for p in paths]
    identical = blobs[0] == blobs[1] == blobs[2]
    import json

    links = {}
    for line in blobs[0].decode().splitlines():
        d = json.loads(line)
        links[d["key"]] = d["dual_key"]
    cross = links.get("3,8,12;24") == "6,8,9;24" and links.get("6,8,9;24") == "3,8,12;24"
    ok = identical and cross
    acceptance(10, ok, f"{len(links)} entries, E14<->Q10 cross-linked={cross}, byte-identical over jobs 1,1,4={identical} "
                       f"{elapsed:.1f}s")
    assert ok
