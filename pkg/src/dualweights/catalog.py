"""Analysis pipeline, JSON records and the line-delimited catalog."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Optional

from .cyclodecomp import cyclo_decomposition
from .duality import check_dual_type_props, classify, dual_search, saito_dual
from .errors import VerificationError
from .lattice import degree_of_omega_check, omega
from .orbifold import is_dual_pair
from .rings import exceptional_length, milnor_report, presentation, verify_theorem_i
from .weights import WeightSystem, enumerate_regular, exponent_data, is_regular, signature

ORBIFOLD_AUTO_MAX_H = 30
CHECK_NAMES = ("saito_duality", "orbifold_duality", "lemma_omega", "theorem_i", "milnor", "exceptional_length")


@dataclass
class CheckSummary:
    passed: bool
    detail: str = ""


@dataclass
class AnalysisRecord:
    weights: list[int]
    h: int
    regular: bool
    key: str
    chi: list[int] = field(default_factory=list)
    mu: Optional[int] = None
    epsilon: Optional[int] = None
    genus: Optional[int] = None
    exponents: list[int] = field(default_factory=list)
    signature: list[int] = field(default_factory=list)
    cyclotomic_exponents: dict[str, int] = field(default_factory=dict)
    poset: list[int] = field(default_factory=list)
    classification: list[dict[str, Any]] = field(default_factory=list)
    dual: Optional[str] = None
    dual_candidates: list[str] = field(default_factory=list)
    verifications: dict[str, CheckSummary] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verifications.values())

    @property
    def is_dual_type(self) -> bool:
        return bool(self.classification)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "AnalysisRecord":
        d = dict(d)
        d["verifications"] = {k: CheckSummary(**v) for k, v in d.get("verifications", {}).items()}
        return cls(**d)

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisRecord":
        return cls.from_dict(json.loads(text))


def _run(name: str, fn) -> CheckSummary:
    try:
        ok, detail = fn()
    except VerificationError as exc:
        return CheckSummary(False, f"{name}: {exc}")
    return CheckSummary(bool(ok), detail)


def verification_suite(
    w: WeightSystem,
    checks: Iterable[str] = CHECK_NAMES,
    max_degree: Optional[int] = None,
    orbifold: Optional[bool] = None,
) -> dict[str, CheckSummary]:
    """Run the selected checks for a dual-type system; keys follow CHECK_NAMES order."""
    matches = classify(w)
    t = matches[0]
    wanted = set(checks)
    if orbifold is None:
        orbifold = w.h <= ORBIFOLD_AUTO_MAX_H
    if not orbifold:
        wanted.discard("orbifold_duality")
    ws = WeightSystem(tuple(sorted(t.dual_weights)), t.h)
    n = 2 * w.h if max_degree is None else max_degree
    out: dict[str, CheckSummary] = {}

    def saito():
        rep = check_dual_type_props(w)
        search = dual_search(w)
        rep.add("classified dual among phi* candidates", ws in search.candidates,
                ", ".join(c.key for c in search.candidates))
        return rep.passed and saito_dual(w, ws), rep.summary()

    def orb():
        return is_dual_pair(w, ws), f"chi({ws.key},{{1}}) vs -ybar^c chi({w.key},G0)(y,1/ybar)"

    def lemma():
        p = omega(w, t)
        ok = p.report.passed and degree_of_omega_check(w, p)
        note = f"deg omega={p.omega.degree}, bezout={list(p.bezout)}, letter weights={list(p.letter_weights)}"
        if p.letter_weights != t.family_weights:
            note += f" (printed order {list(t.family_weights)})"
        return ok, note

    def theorem():
        rep = verify_theorem_i(w, t, n)
        return rep.passed, f"N={n}" + ("" if rep.passed else "; " + "; ".join(rep.witnesses[:3]))

    def milnor():
        rep = milnor_report(presentation(t), w)
        return rep.passed, f"total={rep.total}" + ("" if rep.passed else f" dims={rep.dims} expected={rep.expected}")

    def exc():
        return True, f"length={exceptional_length(w)}"

    runners = {"saito_duality": saito, "orbifold_duality": orb, "lemma_omega": lemma,
               "theorem_i": theorem, "milnor": milnor, "exceptional_length": exc}
    for name in CHECK_NAMES:
        if name in wanted:
            out[name] = _run(name, runners[name])
    return out


def analyze(w: WeightSystem, max_degree: Optional[int] = None, orbifold: Optional[bool] = None,
            checks: Iterable[str] = CHECK_NAMES) -> AnalysisRecord:
    data = is_regular(*w.weights, w.h)
    rec = AnalysisRecord(list(w.weights), w.h, data is not None, w.key)
    if data is None:
        return rec
    ed = exponent_data(w)
    rec.chi = list(ed.chi.coeffs)
    rec.mu, rec.epsilon = ed.mu, ed.epsilon
    rec.exponents = list(ed.exponents)
    sig = signature(w)
    rec.genus, rec.signature = sig.genus, list(sig.alphas)
    dec = cyclo_decomposition(w)
    rec.cyclotomic_exponents = {str(d): e for d, e in sorted(dec.e.items())}
    rec.poset = dec.poset
    matches = classify(w)
    rec.classification = [m.to_dict() for m in matches]
    rec.dual_candidates = [c.key for c in dual_search(w).candidates]
    if matches:
        t = matches[0]
        rec.dual = WeightSystem(tuple(sorted(t.dual_weights)), t.h).key
        rec.verifications = verification_suite(w, checks, max_degree, orbifold)
    return rec


def catalog_line(rec: AnalysisRecord) -> str:
    entry = {"key": rec.key, "dual_key": rec.dual, "record": rec.to_dict()}
    return json.dumps(entry, separators=(",", ":"))


def parse_catalog_line(line: str) -> tuple[str, Optional[str], AnalysisRecord]:
    d = json.loads(line)
    return d["key"], d["dual_key"], AnalysisRecord.from_dict(d["record"])


def _analyze_task(args: tuple) -> str:
    weights, h, orbifold = args
    return catalog_line(analyze(WeightSystem(weights, h), orbifold=orbifold))


def catalog_systems(h_max: int, dual_only: bool = False) -> list[WeightSystem]:
    out = []
    for h in range(2, h_max + 1):
        for w in enumerate_regular(h):
            if not dual_only or classify(w):
                out.append(w)
    return out


def build_catalog(h_max: int, dual_only: bool = False, jobs: int = 1,
                  orbifold: Optional[bool] = None) -> list[str]:
    """Catalog lines in h-ascending, lexicographic order; independent of ``jobs``."""
    tasks = [(w.weights, w.h, orbifold) for w in catalog_systems(h_max, dual_only)]
    if jobs <= 1:
        return [_analyze_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_analyze_task, tasks, chunksize=8))
