"""JSON schemas for groups, cochains, and the stored 3-cocycle fixtures.

All writers are deterministic: dict keys come out in a fixed order, entries
are sorted, and identity values are omitted so equal objects serialize to
byte-identical documents.
"""

from __future__ import annotations

import itertools
import json
from importlib import resources

from .braidings import CrossedBraidingCertificate, GradingSpec
from .cohomology import Cochain, CohomologyGroup, CoefficientModule, \
    is_cocycle, mu_module, trivial_module
from .errors import NotACocycle, NotAGroup
from .groups import FiniteGroup, build_group, builtin_group
from .subcats import SubcatData, fpdim


def group_to_json(G: FiniteGroup) -> dict:
    out: dict = {}
    if G.name:
        out["name"] = G.name
    out["order"] = G.order
    out["table"] = [list(row) for row in G.table]
    return out


def group_from_json(obj) -> FiniteGroup:
    return build_group(obj)


def _key(gs) -> str:
    return ",".join(str(g) for g in gs)


def _unkey(text: str, degree: int):
    if degree == 0:
        if text:
            raise NotACocycle(f"degree-0 entry key must be empty, got {text!r}")
        return ()
    parts = text.split(",")
    if len(parts) != degree:
        raise NotACocycle(f"entry key {text!r} does not have {degree} ids")
    return tuple(int(p) for p in parts)


def cochain_to_json(c: Cochain) -> dict:
    """Sparse cochain document; omitted entries are the identity."""
    out: dict = {"degree": c.degree}
    A = c.module.group
    if c.module.is_trivial_action and A.exponent == A.order:
        out["modulus"] = A.order
    else:
        out["module"] = group_to_json(A)
    entries = {}
    s = c.group.order
    for i, gs in enumerate(itertools.product(range(s), repeat=c.degree)):
        if c.table[i]:
            entries[_key(gs)] = int(c.table[i])
    out["entries"] = dict(sorted(entries.items()))
    out["normalized"] = c.is_normalized
    return out


def cochain_from_json(G: FiniteGroup, obj) -> Cochain:
    degree = int(obj["degree"])
    if "modulus" in obj:
        module = mu_module(int(obj["modulus"]))
    elif "module" in obj:
        module = trivial_module(build_group(obj["module"]))
    else:
        raise NotACocycle("cochain document needs a modulus or module")
    s = G.order
    table = [0] * (s ** degree)
    for key, val in obj.get("entries", {}).items():
        gs = _unkey(key, degree)
        for g in gs:
            G.check_element(g)
        flat = 0
        for g in gs:
            flat = flat * s + g
        v = int(val)
        if not 0 <= v < module.group.order:
            raise NotACocycle(f"entry value {v} outside the coefficient range")
        table[flat] = v
    return Cochain(degree, G, module, tuple(table),
                   normalized=bool(obj.get("normalized", False)))


def subcat_to_json(s: SubcatData) -> dict:
    """Sparse subcategory document; omitted pairing entries are exponent 0."""
    cols = len(s.M.elements)
    entries = {}
    for i, l in enumerate(s.L.elements):
        for j, m in enumerate(s.M.elements):
            v = s.B.table[i * cols + j]
            if v:
                entries[f"{l},{m}"] = int(v)
    return {
        "L": [int(x) for x in s.L.elements],
        "M": [int(x) for x in s.M.elements],
        "B": dict(sorted(entries.items())),
        "fpdim": fpdim(s),
    }


def grading_to_json(g: GradingSpec) -> dict:
    if g.kind == "pointed":
        return {
            "kind": "pointed",
            "projection": [int(x) for x in g.projection.images],
            "section": [int(x) for x in g.section],
        }
    return {"kind": "rep", "central": [int(x) for x in g.central.elements]}


def certificate_to_json(cert: CrossedBraidingCertificate) -> dict:
    data = cert.witness.parent
    return {
        "ambient": {
            "group": group_to_json(data.group),
            "omega": cochain_to_json(data.omega),
        },
        "grading": grading_to_json(cert.grading),
        "witness": subcat_to_json(cert.witness),
        "checks": {
            "centralizes": cert.checks.centralizes,
            "fpdim": cert.checks.fpdim,
            "transverse": cert.checks.transverse,
        },
    }


# -- stored H^3 representatives ---------------------------------------------

H3_BATTERY = ("C2", "C3", "C4", "C6", "C2xC2", "S3", "D8", "Q8")


def _fixture_text() -> str:
    return resources.files("crossbraid").joinpath("data/h3_reps.json").read_text()


def load_h3_fixture(name: str, verify: bool = True) -> CohomologyGroup:
    """Stored H^3(G, mu_|G|) for a battery group, rebuilt as a CohomologyGroup."""
    doc = json.loads(_fixture_text())
    if name not in doc:
        raise NotAGroup(f"no stored 3-cocycle data for group {name!r}")
    entry = doc[name]
    G = builtin_group(name)
    if int(entry["modulus"]) != G.order:
        raise NotACocycle("stored modulus does not match the group order")
    reps = tuple(cochain_from_json(G, rep) for rep in entry["representatives"])
    if verify:
        for rep in reps:
            if not rep.is_normalized or not is_cocycle(rep):
                raise NotACocycle(f"stored representative for {name} is invalid")
    return CohomologyGroup(G, 3, mu_module(G.order),
                           tuple(int(f) for f in entry["invariant_factors"]),
                           reps)


def dump_json(obj) -> str:
    """Canonical one-true-format dump used by the CLI for byte-stable output."""
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
