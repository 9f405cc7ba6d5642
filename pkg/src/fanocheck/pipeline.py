"""End-to-end checking pipeline and machine-readable reports.

A polytope input runs validate -> dual -> face lattice -> invariants ->
identity verifications plus the internal consistency suite; a diamond input
runs the diamond-mode verifications.  Reports serialize rationals as "p/q"
strings so nothing is rounded.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from . import identity as idmod
from .diamond import chi_p, defect
from .errors import DegenerateInput, ParseError, ValidationError
from .files import DiamondFile, loads_diamond, loads_polytope
from .invariants import (
    ToricInvariants,
    compute_invariants,
    second_derivative_at_one,
)
from .lattice import (
    FaceLattice,
    FanoPolytope,
    Halfspace,
    _hull,
    face_lattice,
    facet_enumeration,
    is_reflexive,
    is_smooth,
    polar_dual,
    reflexive_dual,
)


class CheckStatus(enum.Enum):
    OK = "ok"
    IDENTITY_VIOLATION = "identity_violation"
    VALIDATION_ERROR = "validation_error"
    PARSE_ERROR = "parse_error"

    @property
    def exit_code(self) -> int:
        return {
            CheckStatus.OK: 0,
            CheckStatus.IDENTITY_VIOLATION: 1,
            CheckStatus.VALIDATION_ERROR: 2,
            CheckStatus.PARSE_ERROR: 2,
        }[self]


@dataclass(frozen=True)
class ToricAnalysis:
    """Everything computed for one validated smooth toric Fano polytope."""

    polytope: FanoPolytope
    facets: tuple[Halfspace, ...]
    delta: FanoPolytope
    polytope_faces: FaceLattice
    delta_faces: FaceLattice
    invariants: ToricInvariants
    report: idmod.IdentityReport
    consistency: dict[str, bool]


@lru_cache(maxsize=None)
def analyze(P: FanoPolytope) -> ToricAnalysis:
    """Run the full pipeline on P; raises NotReflexive / NotSmooth early.

    Results are cached per polytope (everything involved is immutable).
    """
    facets = facet_enumeration(P)
    delta = polar_dual(P)  # also raises NotReflexive / NotSmooth
    delta_faces = face_lattice(delta)
    p_faces = face_lattice(P)
    inv = compute_invariants(delta, delta_faces)
    report = idmod.toric_identity_report(delta, delta_faces, inv)

    n = P.dim
    fP = p_faces.f_vector()
    fD = delta_faces.f_vector()
    two_f2 = 2 * (fD[2] if n >= 2 else 0)
    consistency = {
        "second_derivative": second_derivative_at_one(inv.e_poly) == two_f2,
        "hrr_derivative": Fraction(two_f2)
        == Fraction(inv.c1_cn1, 6)
        + (Fraction(n * n, 4) - Fraction(5 * n, 12)) * inv.c_n,
        "edge_count": Fraction(fD[1]) == Fraction(n, 2) * fD[0],
        "face_duality": all(fD[k] == fP[n - 1 - k] for k in range(n)),
        "euler": inv.e_poly(1) == sum(inv.betti) == inv.c_n,
    }
    return ToricAnalysis(
        polytope=P,
        facets=facets,
        delta=delta,
        polytope_faces=p_faces,
        delta_faces=delta_faces,
        invariants=inv,
        report=report,
        consistency=consistency,
    )


def clear_caches() -> None:
    """Drop all memoized hulls and analyses (mainly for timing runs)."""
    analyze.cache_clear()
    _hull.cache_clear()


def _frac_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def _report_dict(report: idmod.IdentityReport) -> dict:
    out = {
        "lhs": _frac_str(report.lhs),
        "defect": _frac_str(report.defect),
        "rhs": None if report.rhs is None else _frac_str(report.rhs),
    }
    for key in (
        "equality",
        "inequality_ok",
        "chi_identity_ok",
        "quarter_form_ok",
        "face_count_ok",
    ):
        out[key] = getattr(report, key)
    return out


@dataclass(frozen=True)
class EntryReport:
    """Outcome of checking one input."""

    name: str
    mode: str  # "toric" or "diamond"
    status: CheckStatus
    error: str | None = None
    payload: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.OK

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "mode": self.mode,
            "status": self.status.value,
            "error": self.error,
            **self.payload,
        }

    def to_text(self) -> str:
        lines = [f"== {self.name} ({self.mode}) =="]
        p = self.payload
        if "n" in p:
            lines.append(f"dimension: {p['n']}")
        if "valid" in p:
            flags = " ".join(f"{k}={_yesno(v)}" for k, v in p["valid"].items())
            lines.append(f"validity: {flags}")
        if "f_vector" in p:
            lines.append(f"dual f-vector: {tuple(p['f_vector'])}")
        if "betti" in p:
            lines.append(f"betti: {tuple(p['betti'])}")
        if "c_n" in p:
            lines.append(f"c_n = {p['c_n']}, c1*c_(n-1) = {p['c1_cn1']}")
        if "identity" in p:
            ident = p["identity"]
            lines.append(
                f"identity: lhs = {ident['lhs']}, rhs = {ident['rhs']}, "
                f"defect = {ident['defect']}"
            )
            verdicts = " ".join(
                f"{k}={_yesno(ident[k])}"
                for k in (
                    "equality",
                    "inequality_ok",
                    "chi_identity_ok",
                    "quarter_form_ok",
                    "face_count_ok",
                )
                if ident[k] is not None
            )
            lines.append(f"verdicts: {verdicts}")
        if "consistency" in p:
            lines.append(
                "consistency: "
                + " ".join(f"{k}={_yesno(v)}" for k, v in p["consistency"].items())
            )
        if self.error:
            lines.append(f"error: {self.error}")
        lines.append(f"status: {self.status.value}")
        return "\n".join(lines)


def _yesno(v) -> str:
    return {True: "yes", False: "NO", None: "n/a"}[v]


def check_polytope(P: FanoPolytope, name: str) -> EntryReport:
    """Validate and fully verify one N-side polytope."""
    valid = {"primitive": True, "spanning": None, "reflexive": None, "smooth": None}
    payload: dict = {"n": P.dim, "vertex_count": len(P.vertices), "valid": valid}
    try:
        facet_enumeration(P)
    except ValidationError as exc:
        # non-spanning input is the only failure before the span check passes
        valid["spanning"] = not isinstance(exc, DegenerateInput)
        return EntryReport(
            name, "toric", CheckStatus.VALIDATION_ERROR,
            error=f"{type(exc).__name__}: {exc}", payload=payload,
        )
    valid["spanning"] = True
    valid["reflexive"] = is_reflexive(P)
    if not valid["reflexive"]:
        return EntryReport(
            name, "toric", CheckStatus.VALIDATION_ERROR,
            error="NotReflexive: a facet lies at lattice distance != 1", payload=payload,
        )
    valid["smooth"] = is_smooth(P)
    if not valid["smooth"]:
        return EntryReport(
            name, "toric", CheckStatus.VALIDATION_ERROR,
            error="NotSmooth: a facet is not a unimodular simplex", payload=payload,
        )

    analysis = analyze(P)
    inv = analysis.invariants
    payload.update(
        {
            "f_vector": list(inv.f_vector),
            "betti": list(inv.betti),
            "c_n": inv.c_n,
            "c1_cn1": inv.c1_cn1,
            "identity": _report_dict(analysis.report),
            "consistency": dict(analysis.consistency),
        }
    )
    rep = analysis.report
    passed = (
        bool(rep.equality)
        and rep.defect == 0
        and rep.inequality_ok
        and rep.chi_identity_ok
        and rep.quarter_form_ok
        and rep.face_count_ok
        and all(analysis.consistency.values())
    )
    status = CheckStatus.OK if passed else CheckStatus.IDENTITY_VIOLATION
    return EntryReport(name, "toric", status, payload=payload)


def check_diamond(data: DiamondFile, name: str) -> EntryReport:
    """Verify a user-supplied Hodge diamond.

    A strict inequality is informational, not a failure; only lhs > rhs is a
    violation.  Without both Chern numbers only the defect side is computed.
    """
    diamond = data.diamond
    payload: dict = {
        "n": diamond.n,
        "betti": list(diamond.even_betti()),
        "chi_p": list(chi_p(diamond)),
    }
    if not diamond.is_odd_vanishing:
        return EntryReport(
            name, "diamond", CheckStatus.VALIDATION_ERROR,
            error="HypothesisViolated: diamond has nonzero odd cohomology",
            payload=payload,
        )
    if data.c1_cn1 is None or data.c_n is None:
        payload["identity"] = _report_dict(
            idmod.IdentityReport(
                n=diamond.n,
                lhs=idmod.weighted_betti_sum(diamond.even_betti(), diamond.n),
                defect=defect(diamond),
            )
        )
        payload["note"] = "Chern numbers missing; rhs verifications skipped"
        return EntryReport(name, "diamond", CheckStatus.OK, payload=payload)

    report = idmod.check_betti_chern(diamond, data.c1_cn1, data.c_n)
    payload["c_n"] = data.c_n
    payload["c1_cn1"] = data.c1_cn1
    payload["identity"] = _report_dict(report)
    status = CheckStatus.OK if report.inequality_ok else CheckStatus.IDENTITY_VIOLATION
    return EntryReport(name, "diamond", status, payload=payload)


def _looks_like_diamond(text: str) -> bool:
    stripped = text.lstrip()
    return stripped.startswith("{")


def run_check(path, dual: bool = False, mode: str = "auto") -> EntryReport:
    """Check one input file; never raises for expected input problems.

    mode "auto" treats files whose first nonblank character is '{' as
    diamond JSON and everything else as a polytope file.  With dual=True the
    file holds the dual (M-side) polytope and the N-side one is
    reconstructed by duality before the pipeline runs.
    """
    name = str(path)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        return EntryReport(
            name, "toric", CheckStatus.PARSE_ERROR, error=f"ParseError: {exc}"
        )

    is_diamond = mode == "diamond" or (mode == "auto" and _looks_like_diamond(text))
    try:
        if is_diamond:
            if dual:
                raise ValidationError("--dual applies to polytope files only")
            return check_diamond(loads_diamond(text), name)
        P = loads_polytope(text)
        if dual:
            given = P
            P = reflexive_dual(given)
            entry = check_polytope(P, name)
            if entry.passed:
                recomputed = set(polar_dual(P).vertices)
                if recomputed != set(given.vertices):
                    return EntryReport(
                        name, "toric", CheckStatus.VALIDATION_ERROR,
                        error="dual input does not round-trip under duality",
                        payload=entry.payload,
                    )
            return entry
        return check_polytope(P, name)
    except ParseError as exc:
        return EntryReport(
            name,
            "diamond" if is_diamond else "toric",
            CheckStatus.PARSE_ERROR,
            error=f"ParseError: {exc}",
        )
    except ValidationError as exc:
        return EntryReport(
            name,
            "diamond" if is_diamond else "toric",
            CheckStatus.VALIDATION_ERROR,
            error=f"{type(exc).__name__}: {exc}",
        )


@dataclass(frozen=True)
class RunReport:
    """Per-entry reports plus order-independent aggregate counts."""

    entries: tuple[EntryReport, ...]

    @property
    def counts(self) -> dict[str, int]:
        ok = sum(1 for e in self.entries if e.status is CheckStatus.OK)
        violations = sum(
            1 for e in self.entries if e.status is CheckStatus.IDENTITY_VIOLATION
        )
        errors = len(self.entries) - ok - violations
        return {
            "total": len(self.entries),
            "ok": ok,
            "identity_violations": violations,
            "errors": errors,
        }

    @property
    def exit_status(self) -> int:
        counts = self.counts
        if counts["errors"]:
            return 2
        if counts["identity_violations"]:
            return 1
        return 0

    def to_dict(self) -> dict:
        return {
            "entries": [e.to_dict() for e in self.entries],
            "aggregate": {**self.counts, "exit_status": self.exit_status},
        }

    def to_text(self) -> str:
        blocks = [e.to_text() for e in self.entries]
        counts = self.counts
        blocks.append(
            f"checked {counts['total']} inputs: {counts['ok']} ok, "
            f"{counts['identity_violations']} identity violations, "
            f"{counts['errors']} errors"
        )
        return "\n\n".join(blocks)


def _expand_paths(paths) -> list[Path]:
    out: list[Path] = []
    for p in paths:
        p = Path(p)
        if p.is_dir():
            out.extend(
                sorted(q for q in p.iterdir() if q.suffix in (".poly", ".json"))
            )
        else:
            out.append(p)
    return out


def run_batch(paths, jobs: int = 1) -> RunReport:
    """Check many inputs, optionally concurrently.

    All shared state is immutable, so thread workers are safe; entries are
    sorted by input name, making the report independent of execution order.
    """
    files = _expand_paths(paths)
    if jobs > 1 and len(files) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(run_check, files))
    else:
        entries = [run_check(f) for f in files]
    entries.sort(key=lambda e: e.name)
    return RunReport(tuple(entries))
