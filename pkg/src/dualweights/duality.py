"""Dual weight systems: the five Appendix families and the phi* search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd
from typing import Optional

from .cyclodecomp import cyclo_decomposition, dual_decomposition
from .errors import NotDualTypeError, NotRegularError
from .exact import MultiPolynomial, divisors
from .report import VerificationReport
from .weights import SignatureData, WeightSystem, enumerate_regular, exponent_data, is_regular, signature

TYPES = ("I", "II", "III", "IV", "V")


@dataclass(frozen=True)
class Family:
    """One Appendix row instantiated at concrete parameters.

    Generators x, y, z are exponent vectors in X1, X2, X3; they coincide with
    the principal generators l1, l2, l3 written in the X-basis. ``fw`` is a
    polynomial in the letters x, y, z.
    """

    type_tag: str
    params: tuple[int, ...]
    weights: tuple[int, int, int]
    h: int
    dual_weights: tuple[int, int, int]
    alphas: tuple[int, int, int]
    dual_alphas: tuple[int, int, int]
    gens: tuple[tuple[int, int, int], ...]
    fw: MultiPolynomial
    conditions: tuple[tuple[str, bool], ...]

    @property
    def conditions_hold(self) -> bool:
        return all(ok for _, ok in self.conditions)


def _f(*terms: tuple[int, int, int]) -> MultiPolynomial:
    return MultiPolynomial(3, {t: 1 for t in terms})


def family(type_tag: str, params: tuple[int, ...]) -> Optional[Family]:
    """Instantiate an Appendix row; None if the parameters leave the integers."""
    try:
        return _FAMILIES[type_tag](*params)
    except (ZeroDivisionError, _Reject):
        return None


class _Reject(Exception):
    pass


def _div(a: int, b: int) -> int:
    if b <= 0 or a % b:
        raise _Reject
    return a // b


def _type_i(p1, p2, p3):
    h = p1 * p2 * p3
    w = (p2 * p3, p3 * p1, p1 * p2)
    a = (p1, p2, p3)
    cond = (("(p1,p2)=1", gcd(p1, p2) == 1), ("(p2,p3)=1", gcd(p2, p3) == 1), ("(p3,p1)=1", gcd(p3, p1) == 1))
    return Family("I", (p1, p2, p3), w, h, w, a, a, ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
                  _f((p1, 0, 0), (0, p2, 0), (0, 0, p3)), cond)


def _type_ii(p1, p2, p3):
    h = p1 * p3
    r = _div(p3, p2)
    w = (p3, _div(p1 * p3, p2), (p2 - 1) * p1)
    wd = (p3, p1 * p2, (r - 1) * p1)
    cond = (
        ("p2!=p3", p2 != p3),
        ("p2|p3", p3 % p2 == 0),
        ("(p1,p3)=1", gcd(p1, p3) == 1),
        ("(p2-1,p3)=1", gcd(p2 - 1, p3) == 1),
        ("(p3/p2-1,p3)=1", gcd(r - 1, p3) == 1),
    )
    return Family("II", (p1, p2, p3), w, h, wd, (p1, r, (p2 - 1) * p1), (p1, p2, (r - 1) * p1),
                  ((1, 0, 1), (0, 0, p1), (0, 1, 0)),
                  _f((p1, 0, 0), (0, p2, 0), (0, 1, r)), cond)


def _type_iii(p1, p2, q2, q3):
    h = p1 * p2
    w = (p2, p1 * q2, p1 * q3)
    a = (p1, p1 * q2, p1 * q3)
    cond = (
        ("(p1,p2)=1", gcd(p1, p2) == 1),
        ("p2+1=(q2+1)(q3+1)", p2 + 1 == (q2 + 1) * (q3 + 1)),
        ("(q2,q3)=1", gcd(q2, q3) == 1),
    )
    return Family("III", (p1, p2, q2, q3), w, h, w, a, a, ((1, 1, 1), (0, 0, p1), (0, p1, 0)),
                  _f((p1, 0, 0), (0, q3 + 1, 1), (0, 1, q2 + 1)), cond)


def _type_iv(p1, p2, p3):
    s, t, u = _div(p3, p2), _div(p3, p1), _div(p2, p1)
    w = (t, _div((p1 - 1) * p3, p2), p2 - p1 + 1)
    wd = (p2, (s - 1) * p1, t - s + 1)
    cond = (
        ("p1!=p2", p1 != p2),
        ("p2!=p3", p2 != p3),
        ("p1|p2", p2 % p1 == 0),
        ("p2|p3", p3 % p2 == 0),
        ("(p1-1,p2)=1", gcd(p1 - 1, p2) == 1),
        ("(p2-p1+1,p3)=1", gcd(p2 - p1 + 1, p3) == 1),
        ("(p3/p2-1,p3/p1)=1", gcd(s - 1, t) == 1),
        ("(p3/p1-p3/p2+1,p3)=1", gcd(t - s + 1, p3) == 1),
    )
    return Family("IV", (p1, p2, p3), w, p3, wd, (s, (p1 - 1) * s, p2 - p1 + 1), (p1, (s - 1) * p1, t - s + 1),
                  ((0, s, 1), (0, 0, p1), (1, 1, 0)),
                  _f((p1, 0, 0), (1, u, 0), (0, 1, s)), cond)


def _type_v(k, l, m):
    h = k * l * m + 1
    w = (l * m - m + 1, m * k - k + 1, k * l - l + 1)
    wd = (l * m - l + 1, m * k - m + 1, k * l - k + 1)
    cond = tuple((f"({x},{h})=1", gcd(x, h) == 1) for x in w)
    return Family("V", (k, l, m), w, h, wd, w, wd, ((0, 1, l), (1, k, 0), (m, 0, 1)),
                  _f((k, 0, 1), (1, m, 0), (0, 1, l)), cond)


_FAMILIES = {"I": _type_i, "II": _type_ii, "III": _type_iii, "IV": _type_iv, "V": _type_v}

# The principal-generator table in the text lists l3 = p1*X2 for Type IV, while
# the Appendix row lists X1 + X2 (matching z = X1*X2). Kept for comparison only.
TYPE_IV_TABLE_L3 = "p1*X2"


def _candidate_params(type_tag: str, b: tuple[int, int, int], h: int) -> list[tuple[int, ...]]:
    b1, b2, b3 = b
    if type_tag == "I":
        if all(h % x == 0 for x in b):
            return [(h // b1, h // b2, h // b3)]
    elif type_tag == "II":
        if h % b1 == 0 and h % b2 == 0:
            return [(h // b1, h // b2, b1)]
    elif type_tag == "III":
        if h % b1 == 0:
            p1 = h // b1
            if b2 % p1 == 0 and b3 % p1 == 0:
                return [(p1, b1, b2 // p1, b3 // p1)]
    elif type_tag == "IV":
        if h % b1 == 0:
            p1 = h // b1
            return [(p1, b3 + p1 - 1, h)]
    elif type_tag == "V":
        out = []
        for k in divisors(h - 1):
            for l in divisors((h - 1) // k):
                out.append((k, l, (h - 1) // (k * l)))
        return out
    return []


@dataclass(frozen=True)
class DualTypeData:
    """A match of a weight system against one Appendix family.

    ``perm[i]`` is the index, in the canonical (ascending) weights, of the
    weight sitting at family position i.
    """

    type_tag: str
    params: tuple[int, ...]
    perm: tuple[int, int, int]
    family: Family

    @property
    def family_weights(self) -> tuple[int, int, int]:
        return self.family.weights

    @property
    def dual_weights(self) -> tuple[int, int, int]:
        return self.family.dual_weights

    @property
    def h(self) -> int:
        return self.family.h

    def to_dict(self) -> dict:
        return {
            "type": self.type_tag,
            "params": list(self.params),
            "perm": list(self.perm),
            "family_weights": list(self.family_weights),
            "dual_weights": list(self.dual_weights),
        }

    def __str__(self) -> str:
        return f"Type {self.type_tag} {self.params} family order {self.family_weights}"


def _canonical_params(type_tag: str, params: tuple[int, ...]) -> bool:
    """Keep one representative per symmetry of the family formula."""
    if type_tag == "I":
        return list(params) == sorted(params)
    if type_tag == "III":
        return params[2] <= params[3]
    if type_tag == "V":
        k, l, m = params
        return params <= (l, m, k) and params <= (m, k, l)
    return True


def _dual_is_regular(fam: Family) -> bool:
    """W* must itself be a regular system; not every row prints this condition."""
    try:
        return is_regular(*fam.dual_weights, fam.h) is not None
    except ValueError:
        return False


def _perm_of(canon: tuple[int, int, int], fam: tuple[int, int, int]) -> tuple[int, int, int]:
    used, perm = set(), []
    for x in fam:
        i = next(j for j, y in enumerate(canon) if y == x and j not in used)
        used.add(i)
        perm.append(i)
    return tuple(perm)


def classify(w: WeightSystem) -> list[DualTypeData]:
    """All Appendix families (Types I-V) matching w, in deterministic order."""
    if is_regular(*w.weights, w.h) is None:
        raise NotRegularError(f"{w} is not regular")
    canon = tuple(sorted(w.weights))
    found: dict[tuple, DualTypeData] = {}
    for t in TYPES:
        orders = {canon} if t == "V" else set(permutations(canon))
        for b in sorted(orders):
            for params in _candidate_params(t, b, w.h):
                if min(params) <= 0 or not _canonical_params(t, params):
                    continue
                fam = family(t, params)
                if fam is None or fam.h != w.h or sorted(fam.weights) != list(canon):
                    continue
                if t != "V" and fam.weights != b:
                    continue
                if not fam.conditions_hold or not _dual_is_regular(fam):
                    continue
                key = (TYPES.index(t), params)
                found.setdefault(key, DualTypeData(t, params, _perm_of(canon, fam.weights), fam))
    return [found[k] for k in sorted(found)]


def is_dual_type(w: WeightSystem) -> bool:
    return bool(classify(w))


def primary_classification(w: WeightSystem) -> DualTypeData:
    matches = classify(w)
    if not matches:
        raise NotDualTypeError(f"{w} is not of dual type")
    return matches[0]


def dual_of(w: WeightSystem) -> WeightSystem:
    """Dual system from the Appendix W* formula of the first matching family."""
    t = primary_classification(w)
    return WeightSystem(tuple(sorted(t.dual_weights)), t.h)


def dual_candidates_from_classification(w: WeightSystem) -> list[WeightSystem]:
    seen = []
    for t in classify(w):
        d = WeightSystem(tuple(sorted(t.dual_weights)), t.h)
        if d not in seen:
            seen.append(d)
    return seen


@dataclass(frozen=True)
class DualSearchResult:
    candidates: tuple[WeightSystem, ...]
    classified_dual: Optional[WeightSystem]

    def to_dict(self) -> dict:
        return {
            "candidates": [c.key for c in self.candidates],
            "classified_dual": self.classified_dual.key if self.classified_dual else None,
        }


def dual_search(w: WeightSystem) -> DualSearchResult:
    """Regular systems with the same h whose phi equals phi*_w."""
    target = dual_decomposition(cyclo_decomposition(w))
    cands = tuple(v for v in enumerate_regular(w.h) if cyclo_decomposition(v) == target)
    dual = dual_of(w) if is_dual_type(w) else None
    return DualSearchResult(cands, dual)


def saito_dual(w: WeightSystem, w_star: WeightSystem) -> bool:
    """phi_{w*} == phi*_w as divisor-indexed exponents."""
    return w.h == w_star.h and cyclo_decomposition(w_star) == dual_decomposition(cyclo_decomposition(w))


def _drop_ones(xs) -> tuple[int, ...]:
    return tuple(sorted(x for x in xs if x > 1))


def check_dual_type_props(w: WeightSystem) -> VerificationReport:
    t = primary_classification(w)
    rep = VerificationReport(f"dual-type properties of {w.key}")
    ws = dual_of(w)
    back = dual_of(ws) if is_dual_type(ws) else None
    rep.add("(W*)*=W", back is not None and back.same_system(w), f"W*={ws.key}, W**={back.key if back else None}")
    sig = signature(w)
    rep.add("genus 0", sig.genus == 0, str(sig))
    rep.add("at most three isotropy orders", len(sig.alphas) <= 3, str(sig))
    rep.add("A_W matches Appendix row", sig.alphas == _drop_ones(t.family.alphas), f"{sig.alphas} vs {t.family.alphas}")
    sig_d = signature(ws)
    rep.add("A_W* matches Appendix row", sig_d.alphas == _drop_ones(t.family.dual_alphas),
            f"{sig_d.alphas} vs {t.family.dual_alphas}")
    rep.add("phi_W* = phi*_W", saito_dual(w, ws))
    duals = dual_candidates_from_classification(w)
    rep.add("all family matches agree on W*", len(duals) == 1, ", ".join(d.key for d in duals))
    return rep


def dual_signature(w: WeightSystem) -> SignatureData:
    return signature(dual_of(w))


def mu_of(w: WeightSystem) -> int:
    return exponent_data(w).mu


def unclassified_phi_matches(h_max: int) -> list[tuple[WeightSystem, tuple[WeightSystem, ...]]]:
    """Regular systems with a phi*-partner that no Appendix family classifies."""
    out = []
    for h in range(2, h_max + 1):
        for w in enumerate_regular(h):
            if classify(w):
                continue
            cands = dual_search(w).candidates
            if cands:
                out.append((w, cands))
    return out
