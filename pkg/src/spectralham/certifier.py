"""Theorem cascade certifying Hamiltonicity / traceability with evidence.

The cascade applies the sufficient conditions in a fixed order: cheap
integer conditions first (dirac, ore, erdos; moon_moser for the bipartite
branch), then adjacency-rho conditions, then signless-Laplacian conditions,
then complement / quasi-complement conditions.  Each theorem's inequality is
encoded exactly as stated (strict vs non-strict), with a +-tolerance guard
band: a strict comparison landing inside the band is reported as borderline
rather than certified, since the equality cases are precisely where the
exceptional graphs live.

The minimum-degree parameter is always instantiated as k = delta(G), the
strongest admissible choice.  When a theorem's hypotheses hold but the graph
matches the theorem's exceptional family, the verdict is "exceptional" with
the family identified; otherwise "certified_positive".  If nothing fires the
verdict is "inconclusive", optionally resolved by the exact oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .families import FamilySpec, construct, recognize
from .graphs import BipartiteGraph, Graph, complement, degree_profile, quasi_complement
from .oracle import DEFAULT_BUDGET, is_hamiltonian, is_traceable
from .spectral import DEFAULT_TOL, q_radius, spectral_radius

__all__ = [
    "Certificate",
    "certify_hamiltonicity",
    "certify_traceability",
    "certify_bipartite_hamiltonicity",
    "THEOREM_IDS",
]

THEOREM_IDS = (
    "dirac",
    "ore",
    "erdos",
    "fn_rho",
    "fn_rho_complement",
    "main_rho",
    "main_rho_complement",
    "yu_fan_q",
    "main_q",
    "moon_moser_delta",
    "moon_moser_edges",
    "bip_rho",
    "bip_q",
    "bip_rho_qc",
    "bip_q_qc",
)


@dataclass(frozen=True)
class Certificate:
    """Outcome of the certifier cascade.

    verdict: certified_positive | exceptional | inconclusive | oracle_resolved.
    evidence records every numeric value and slack used, plus the cascade
    trail, so a fired theorem can be re-checked without recomputation.
    """

    verdict: str
    theorem: Optional[str]
    evidence: dict
    exceptional: Optional[FamilySpec] = None
    witness: Optional[tuple[int, ...]] = None

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "theorem": self.theorem,
            "evidence": self.evidence,
            "exceptional": self.exceptional.text() if self.exceptional else None,
            "witness": list(self.witness) if self.witness else None,
        }


@lru_cache(maxsize=None)
def _family_value(quantity: str, family: str, n: int, k: int) -> float:
    g = construct(FamilySpec(family, n=n, k=k))
    return (spectral_radius(g) if quantity == "rho" else q_radius(g)).value


class _Values:
    """Lazy spectral values with an optional precomputed override."""

    def __init__(self, g, precomputed=None):
        self.g = g
        self.cache = dict(precomputed or {})

    def get(self, key: str) -> float:
        if key not in self.cache:
            g = self.g
            if key == "rho":
                val = spectral_radius(g).value
            elif key == "q":
                val = q_radius(g).value
            elif key == "rho_complement":
                val = spectral_radius(complement(g)).value
            elif key == "rho_qc":
                val = spectral_radius(quasi_complement(g).to_graph()).value
            elif key == "q_qc":
                val = q_radius(quasi_complement(g).to_graph()).value
            else:
                raise KeyError(key)
            self.cache[key] = float(val)
        return self.cache[key]


@dataclass
class _Cascade:
    evidence: dict
    tol: float
    trail: list = field(default_factory=list)
    borderline: list = field(default_factory=list)

    def int_check(self, theorem, name, value, threshold, strict) -> bool:
        fired = value > threshold if strict else value >= threshold
        if fired:
            self._note(theorem, name, value, threshold, True, "gt" if strict else "ge")
        return fired

    def spectral_check(self, theorem, name, value, threshold, relation) -> bool:
        """relation: 'gt' (strict >), 'ge', 'le' (both non-strict with band)."""
        if relation == "gt":
            if abs(value - threshold) <= self.tol:
                self.borderline.append({"theorem": theorem, "check": name,
                                        "value": value, "threshold": threshold})
                return False
            fired = value > threshold
        elif relation == "ge":
            fired = value >= threshold - self.tol
        elif relation == "le":
            fired = value <= threshold + self.tol
        else:
            raise ValueError(relation)
        if fired:
            self._note(theorem, name, value, threshold, relation in ("gt", "ge"), relation)
        return fired

    def _note(self, theorem, name, value, threshold, greater, relation):
        checks = self.evidence.setdefault("checks", {}).setdefault(theorem, {})
        slack = (value - threshold) if greater else (threshold - value)
        checks[name] = {
            "value": float(value),
            "threshold": float(threshold),
            "relation": relation,
            "slack": float(slack),
        }

    def record(self, theorem: str, status: str):
        self.trail.append([theorem, status])

    def finish(self, verdict, theorem=None, exceptional=None, witness=None) -> Certificate:
        self.evidence["cascade"] = self.trail
        if self.borderline:
            self.evidence["borderline"] = self.borderline
        return Certificate(verdict, theorem, self.evidence, exceptional, witness)


def _resolve(cascade, g, use_oracle, oracle, budget):
    """Shared inconclusive / oracle_resolved tail."""
    if not use_oracle:
        return cascade.finish("inconclusive")
    res = oracle(g, budget=budget)
    cascade.evidence["oracle"] = res.status
    if res.status == "aborted":
        return cascade.finish("inconclusive")
    return cascade.finish("oracle_resolved", witness=res.witness)


def _fire(cascade, theorem, g, exceptionals) -> Certificate:
    cascade.record(theorem, "fired")
    for spec in exceptionals:
        if spec.family == "H":
            matched = recognize(g, "H", n=spec.n)
        elif spec.family in ("Gamma1", "Gamma2"):
            matched = recognize(g, spec.family)
        elif spec.family == "Bset":
            matched = recognize(g, "Bset", n=spec.n, k=spec.k)
        else:
            matched = recognize(g, spec.family, n=spec.n, k=spec.k)
        if matched:
            cascade.evidence["exceptional"] = spec.text()
            return cascade.finish("exceptional", theorem, exceptional=spec)
    return cascade.finish("certified_positive", theorem)


def certify_hamiltonicity(
    g: Graph,
    use_oracle: bool = False,
    tol: float = DEFAULT_TOL,
    oracle_budget: int = DEFAULT_BUDGET,
    precomputed: Optional[dict] = None,
) -> Certificate:
    """Run the Hamiltonicity cascade on a graph of order >= 3."""
    if not isinstance(g, Graph):
        raise TypeError("certify_hamiltonicity expects a Graph")
    n = g.n
    if n < 3:
        raise ValueError("Hamiltonicity certification needs n >= 3")
    _, delta, e = degree_profile(g)
    k = delta
    vals = _Values(g, precomputed)
    ev = {"mode": "hamiltonicity", "n": n, "e": e, "delta": delta, "k": k, "tolerance": tol}
    c = _Cascade(ev, tol)

    # dirac: delta >= n/2
    if c.int_check("dirac", "min_degree", 2 * delta, n, strict=False):
        return _fire(c, "dirac", g, [])
    c.record("dirac", "failed")

    # ore: e > C(n-1, 2) + 1
    if c.int_check("ore", "edges", e, math.comb(n - 1, 2) + 1, strict=True):
        return _fire(c, "ore", g, [])
    c.record("ore", "failed")

    # erdos: 1 <= k <= (n-1)/2 and e > max of the two bounds
    if 1 <= k and 2 * k <= n - 1:
        bound = max(
            math.comb(n - k, 2) + k * k,
            math.comb((n + 1 + 1) // 2, 2) + ((n - 1) // 2) ** 2,
        )
        if c.int_check("erdos", "edges", e, bound, strict=True):
            return _fire(c, "erdos", g, [])
        c.record("erdos", "failed")
    else:
        c.record("erdos", "skipped")

    # fn_rho part (2): rho(G) > n - 2, unless G = N_n^1
    rho = vals.get("rho")
    ev["rho"] = rho
    if c.spectral_check("fn_rho", "rho", rho, n - 2, "gt"):
        return _fire(c, "fn_rho", g, [FamilySpec("N", n=n, k=1)])
    c.record("fn_rho", "failed")

    # main_rho part (2): delta >= k >= 1, n >= max(6k+5, (k^2+6k+4)/2)
    if k >= 1 and n >= max(6 * k + 5, (k * k + 6 * k + 4) / 2):
        thr = _family_value("rho", "N", n, k)
        if c.spectral_check("main_rho", "rho", rho, thr, "ge"):
            return _fire(c, "main_rho", g, [FamilySpec("N", n=n, k=k)])
        c.record("main_rho", "failed")
    else:
        c.record("main_rho", "skipped")

    # yu_fan_q part (2): n >= 6 and q(G) > 2n - 4
    if n >= 6:
        qv = vals.get("q")
        ev["q"] = qv
        if c.spectral_check("yu_fan_q", "q", qv, 2 * n - 4, "gt"):
            return _fire(c, "yu_fan_q", g, [FamilySpec("N", n=n, k=1)])
        c.record("yu_fan_q", "failed")
    else:
        c.record("yu_fan_q", "skipped")

    # main_q part (2)
    if k >= 1 and n >= max(6 * k + 5, (3 * k * k + 5 * k + 4) / 2):
        qv = vals.get("q")
        ev["q"] = qv
        thr = _family_value("q", "N", n, k)
        if c.spectral_check("main_q", "q", qv, thr, "ge"):
            return _fire(c, "main_q", g, [FamilySpec("N", n=n, k=k)])
        c.record("main_q", "failed")
    else:
        c.record("main_q", "skipped")

    # fn_rho_complement part (2): rho(comp) <= sqrt(n-2), unless G = L_n^1
    rho_c = vals.get("rho_complement")
    ev["rho_complement"] = rho_c
    if c.spectral_check("fn_rho_complement", "rho_complement", rho_c, math.sqrt(n - 2), "le"):
        return _fire(c, "fn_rho_complement", g, [FamilySpec("L", n=n, k=1)])
    c.record("fn_rho_complement", "failed")

    # main_rho_complement part (2): k >= 1, n >= 2k+1,
    # rho(comp) <= rho(comp of L_n^k) = sqrt(k(n-k-1))
    if k >= 1 and n >= 2 * k + 1:
        thr = math.sqrt(k * (n - k - 1))
        if c.spectral_check("main_rho_complement", "rho_complement", rho_c, thr, "le"):
            excl = [FamilySpec("L", n=n, k=k)]
            if n == 2 * k + 1:
                excl.append(FamilySpec("H", n=n))
            return _fire(c, "main_rho_complement", g, excl)
        c.record("main_rho_complement", "failed")
    else:
        c.record("main_rho_complement", "skipped")

    return _resolve(c, g, use_oracle, is_hamiltonian, oracle_budget)


def certify_traceability(
    g: Graph,
    use_oracle: bool = False,
    tol: float = DEFAULT_TOL,
    oracle_budget: int = DEFAULT_BUDGET,
    precomputed: Optional[dict] = None,
) -> Certificate:
    """Run the traceability cascade (the part-(1) theorem clauses)."""
    if not isinstance(g, Graph):
        raise TypeError("certify_traceability expects a Graph")
    n = g.n
    if n < 1:
        raise ValueError("traceability certification needs n >= 1")
    _, delta, e = degree_profile(g)
    k = delta
    vals = _Values(g, precomputed)
    ev = {"mode": "traceability", "part": 1, "n": n, "e": e, "delta": delta, "k": k, "tolerance": tol}
    c = _Cascade(ev, tol)

    # fn_rho part (1): rho(G) >= n - 2, unless G = barN_n^0
    rho = vals.get("rho")
    ev["rho"] = rho
    if c.spectral_check("fn_rho", "rho", rho, n - 2, "ge"):
        return _fire(c, "fn_rho", g, [FamilySpec("barN", n=n, k=0)])
    c.record("fn_rho", "failed")

    # main_rho part (1): delta >= k >= 0, n >= max(6k+10, (k^2+7k+8)/2)
    if n >= max(6 * k + 10, (k * k + 7 * k + 8) / 2):
        thr = _family_value("rho", "barN", n, k)
        if c.spectral_check("main_rho", "rho", rho, thr, "ge"):
            return _fire(c, "main_rho", g, [FamilySpec("barN", n=n, k=k)])
        c.record("main_rho", "failed")
    else:
        c.record("main_rho", "skipped")

    # yu_fan_q part (1): n >= 6 and q(G) >= 2n - 4
    if n >= 6:
        qv = vals.get("q")
        ev["q"] = qv
        if c.spectral_check("yu_fan_q", "q", qv, 2 * n - 4, "ge"):
            return _fire(c, "yu_fan_q", g, [FamilySpec("barN", n=n, k=0)])
        c.record("yu_fan_q", "failed")
    else:
        c.record("yu_fan_q", "skipped")

    # main_q part (1)
    if n >= max(6 * k + 10, (3 * k * k + 9 * k + 8) / 2):
        qv = vals.get("q")
        ev["q"] = qv
        thr = _family_value("q", "barN", n, k)
        if c.spectral_check("main_q", "q", qv, thr, "ge"):
            return _fire(c, "main_q", g, [FamilySpec("barN", n=n, k=k)])
        c.record("main_q", "failed")
    else:
        c.record("main_q", "skipped")

    # fn_rho_complement part (1): rho(comp) <= sqrt(n-1), unless G = barL_n^0
    rho_c = vals.get("rho_complement")
    ev["rho_complement"] = rho_c
    if c.spectral_check("fn_rho_complement", "rho_complement", rho_c, math.sqrt(n - 1), "le"):
        return _fire(c, "fn_rho_complement", g, [FamilySpec("barL", n=n, k=0)])
    c.record("fn_rho_complement", "failed")

    # main_rho_complement part (1): n >= 2k+2,
    # rho(comp) <= rho(comp of barL_n^k) = sqrt((k+1)(n-k-1))
    if n >= 2 * k + 2:
        thr = math.sqrt((k + 1) * (n - k - 1))
        if c.spectral_check("main_rho_complement", "rho_complement", rho_c, thr, "le"):
            excl = [FamilySpec("barL", n=n, k=k)]
            if n == 2 * k + 2:
                excl.append(FamilySpec("H", n=n))
            return _fire(c, "main_rho_complement", g, excl)
        c.record("main_rho_complement", "failed")
    else:
        c.record("main_rho_complement", "skipped")

    return _resolve(c, g, use_oracle, is_traceable, oracle_budget)


def certify_bipartite_hamiltonicity(
    b: BipartiteGraph,
    use_oracle: bool = False,
    tol: float = DEFAULT_TOL,
    oracle_budget: int = DEFAULT_BUDGET,
    precomputed: Optional[dict] = None,
) -> Certificate:
    """Run the balanced-bipartite Hamiltonicity cascade (side size >= 2)."""
    if not isinstance(b, BipartiteGraph):
        raise TypeError("certify_bipartite_hamiltonicity expects a BipartiteGraph")
    if not b.balanced:
        raise ValueError("bipartite certification needs a balanced bipartite graph")
    n = b.nx
    if n < 2:
        raise ValueError("bipartite certification needs side size >= 2")
    delta = b.min_degree()
    e = b.edge_count
    k = delta
    vals = _Values(b, precomputed)
    ev = {"mode": "bipartite_hamiltonicity", "side": n, "e": e, "delta": delta, "k": k, "tolerance": tol}
    c = _Cascade(ev, tol)

    def oracle(bb, budget):
        return is_hamiltonian(bb.to_graph(), budget=budget)

    # moon_moser_delta: delta > n/2
    if c.int_check("moon_moser_delta", "min_degree", 2 * delta, n, strict=True):
        return _fire(c, "moon_moser_delta", b, [])
    c.record("moon_moser_delta", "failed")

    # moon_moser_edges: 1 <= k <= n/2 and e > max of the two bounds
    if 1 <= k and 2 * k <= n:
        bound = max(
            n * (n - k) + k * k,
            n * (n - n // 2) + (n // 2) ** 2,
        )
        if c.int_check("moon_moser_edges", "edges", e, bound, strict=True):
            return _fire(c, "moon_moser_edges", b, [])
        c.record("moon_moser_edges", "failed")
    else:
        c.record("moon_moser_edges", "skipped")

    # bip_rho: k >= 1, n >= (k+1)^2, rho >= rho(B_n^k)
    if k >= 1 and n >= (k + 1) ** 2:
        rho = vals.get("rho")
        ev["rho"] = rho
        thr = _family_value("rho", "B", n, k)
        if c.spectral_check("bip_rho", "rho", rho, thr, "ge"):
            return _fire(c, "bip_rho", b, [FamilySpec("B", n=n, k=k)])
        c.record("bip_rho", "failed")
    else:
        c.record("bip_rho", "skipped")

    # bip_q: k >= 1, n >= (k+1)^2, q >= q(B_n^k)
    if k >= 1 and n >= (k + 1) ** 2:
        qv = vals.get("q")
        ev["q"] = qv
        thr = _family_value("q", "B", n, k)
        if c.spectral_check("bip_q", "q", qv, thr, "ge"):
            return _fire(c, "bip_q", b, [FamilySpec("B", n=n, k=k)])
        c.record("bip_q", "failed")
    else:
        c.record("bip_q", "skipped")

    # bip_rho_qc: k >= 1, n >= 2k, rho(qc) <= rho(qc of B_n^k) = sqrt(k(n-k))
    if k >= 1 and n >= 2 * k:
        rho_qc = vals.get("rho_qc")
        ev["rho_qc"] = rho_qc
        thr = math.sqrt(k * (n - k))
        if c.spectral_check("bip_rho_qc", "rho_qc", rho_qc, thr, "le"):
            excl = [FamilySpec("Bset", n=n, k=k)]
            if n == 4 and k == 2:
                excl += [FamilySpec("Gamma1"), FamilySpec("Gamma2")]
            return _fire(c, "bip_rho_qc", b, excl)
        c.record("bip_rho_qc", "failed")
    else:
        c.record("bip_rho_qc", "skipped")

    # bip_q_qc: q(qc) <= n (no minimum-degree hypothesis)
    q_qc = vals.get("q_qc")
    ev["q_qc"] = q_qc
    if c.spectral_check("bip_q_qc", "q_qc", q_qc, float(n), "le"):
        excl = [FamilySpec("Bset", n=n, k=j) for j in range(1, n // 2 + 1)]
        if n == 4:
            excl += [FamilySpec("Gamma1"), FamilySpec("Gamma2")]
        return _fire(c, "bip_q_qc", b, excl)
    c.record("bip_q_qc", "failed")

    return _resolve(c, b, use_oracle, oracle, oracle_budget)
