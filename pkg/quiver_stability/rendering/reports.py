"""JSON documents written by every subcommand.

Rationals are ``"p/q"`` strings and phases use ``str(PhaseValue)``, so a
document never carries a float.
"""

import json
from typing import Dict, List, Optional, Sequence

from ..stability.functions import StabilityFunction
from ..stability.phase import PhaseValue, format_rational
from ..stability.semistability import HNFiltration, KingStatus
from ..torsion.classes import ModuleSet
from ..torsion.sequences import MGSReport, TorsionChain
from ..torsion.universe import ModuleUniverse
from ..wallchamber.chambers import Chamber
from ..wallchamber.cones import Wall
from ..wallchamber.paths import PathReport, RedPath


def to_json(document: Dict) -> str:
    """Sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _header(command: str, U: ModuleUniverse) -> Dict:
    return {"command": command, "algebra": U.algebra.name or "custom",
            "prime": U.algebra.p, "bound": list(U.bound), "exact": U.exact}


def _members(members: ModuleSet) -> List[str]:
    return members.names


def _stability(sf: StabilityFunction) -> Dict:
    """``stability`` plus the function's ``notes`` when it has any."""
    fields = {"stability": sf.describe()}
    if sf.notes:
        fields["notes"] = list(sf.notes)
    return fields


def indec_document(U: ModuleUniverse, bricks: Optional[Sequence[bool]] = None) -> Dict:
    document = _header("indec", U)
    modules = []
    for k, (name, rep) in enumerate(zip(U.ids, U.indecomposables)):
        entry = {"id": name, **rep.to_dict()}
        if bricks is not None:
            entry["brick"] = bool(bricks[k])
        modules.append(entry)
    document.update(count=len(modules), modules=modules)
    return document


def king_document(U: ModuleUniverse, theta: Sequence,
                  statuses: Sequence[KingStatus]) -> Dict:
    document = _header("king", U)
    document["theta"] = [format_rational(v) for v in theta]
    document["modules"] = [{"id": name, "dims": list(rep.dims), "status": status.value}
                           for name, rep, status in zip(U.ids, U.indecomposables, statuses)]
    return document


def hn_document(U: ModuleUniverse, sf: StabilityFunction, module: str,
                filtration: HNFiltration) -> Dict:
    document = _header("hn", U)
    document.update(
        **_stability(sf),
        module=module,
        phases=[str(p) for p in filtration.phases],
        factors=[{"module": U.name_of(U.decompose(factor)), "dims": list(factor.dims),
                  "phase": str(p)}
                 for factor, p in zip(filtration.factors, filtration.phases)],
        chain=[list(step.dims) for step in filtration.chain],
    )
    return document


def torsion_document(U: ModuleUniverse, sf: StabilityFunction, phase: PhaseValue,
                     torsion: ModuleSet, torsion_free: ModuleSet) -> Dict:
    document = _header("torsion", U)
    document.update(**_stability(sf), phase=str(phase),
                    torsion_class=_members(torsion), torsion_free_class=_members(torsion_free),
                    truncated=torsion.truncated)
    return document


def _chain_fields(chain: TorsionChain) -> Dict:
    return {"phases": [str(p) for p in chain.phases],
            "classes": [_members(c) for c in chain.classes],
            "steps": chain.steps}


def chain_document(U: ModuleUniverse, sf: StabilityFunction, chain: TorsionChain) -> Dict:
    document = _header("chain", U)
    document.update(**_stability(sf), **_chain_fields(chain))
    return document


def mgs_document(U: ModuleUniverse, sf: StabilityFunction, report: MGSReport) -> Dict:
    document = _header("mgs", U)
    document.update(**_stability(sf), mgs=report.verdict,
                    certificates=report.certificates, oracle=report.oracle_verdict,
                    truncated=report.truncated, **_chain_fields(report.chain))
    return document


def walls_document(U: ModuleUniverse, walls: Sequence[Wall]) -> Dict:
    document = _header("walls", U)
    entries = []
    for wall in walls:
        names = [U.ids[U.identify(M)] for M in wall.modules]
        entries.append({"modules": names, "multiplicity": wall.multiplicity,
                        "rays": [list(r) for r in wall.rays], "line": wall.is_line,
                        **wall.cone.to_dict()})
    document.update(count=len(entries), walls=entries)
    return document


def chambers_document(U: ModuleUniverse, chambers: Sequence[Chamber],
                      labels: Sequence[ModuleSet]) -> Dict:
    document = _header("chambers", U)
    document["count"] = len(chambers)
    document["chambers"] = [{**chamber.to_dict(), "torsion_class": _members(label)}
                            for chamber, label in zip(chambers, labels)]
    return document


def path_document(U: ModuleUniverse, path: RedPath, report: PathReport,
                  mgs: Optional[MGSReport] = None) -> Dict:
    document = _header("path", U)
    document.update(
        path=path.to_dict(),
        valid=report.valid,
        phases={name: format_rational(t) for name, t in report.phases.items()},
        crossings=[{"t": format_rational(c.t), "modules": c.modules,
                    "semistable": c.semistable, "genuine_wall": c.genuine_wall}
                   for c in report.crossings],
        violations=report.violations,
        dgeneric=report.dgeneric,
        transversality=report.transversality,
    )
    if mgs is not None:
        document["mgs"] = mgs.verdict
        document["certificates"] = mgs.certificates
        document["chain"] = _chain_fields(mgs.chain)
    return document


def error_document(payload: Dict) -> Dict:
    return {"command": "error", **payload}
