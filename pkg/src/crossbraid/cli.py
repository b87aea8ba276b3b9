"""Batch front-end: parse group and cocycle inputs, dispatch, report.

JSON is the single source of truth for output; the aligned-text table
format is rendered from the same record and never parsed back.  Reports
are byte-identical for identical inputs and seed: nothing here runs
concurrently and every collection is emitted in a sorted or otherwise
pinned order.

Exit codes: 0 success, 2 domain rejection (with a structured reason),
1 malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from .braidings import enumerate_pointed, enumerate_rep, gradings_of_rep
from .cohomology import (
    Cochain,
    cohomology_group,
    differential,
    mu_module,
    random_cochain,
    trivial_module,
)
from .cohomology import DEFAULT_BUDGET as COHOMOLOGY_BUDGET
from .errors import (
    BudgetExceeded,
    CrossbraidError,
    DegreeTooHigh,
    GroupTooLarge,
    InvalidGrading,
    NonTrivialAction,
    NotAbelian,
    NotACocycle,
    NotAGroup,
    NotCentral,
    NotNormal,
    NotSurjective,
    UnknownBuiltin,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    all_subgroups,
    build_group,
    builtin_group,
    center,
    conjugacy_classes,
    is_isomorphic,
    is_normal,
    product_group,
    quotient,
    subgroup_as_group,
)
from .obstructions import (
    fibered_enrichment_extends,
    fully_faithful_obstruction,
    zesting_lift_exists,
)
from .serialize import (
    H3_BATTERY,
    certificate_to_json,
    cochain_from_json,
    cochain_to_json,
    dump_json,
    group_to_json,
    load_h3_fixture,
    subcat_to_json,
)
from .subcats import DEFAULT_BUDGET as SUBCAT_BUDGET
from .subcats import centralizer_subcat, enumerate_subcats, fpdim, working_modulus
from .twisted_center import (
    TwistedGroupData,
    beta_restricted_cocycle,
    invertibles_of_center,
    simple_census,
)

DEFAULT_SEED = 17

VERBS = ("group", "subgroups", "cohomology", "center-census", "subcats",
         "crossed-pointed", "crossed-rep", "gradings-rep", "fibered",
         "zesting", "obstruction", "selftest")

# errors where the input parsed fine but the mathematics says no
DOMAIN_ERRORS = (NotNormal, NotCentral, InvalidGrading, NotSurjective,
                 NonTrivialAction, NotAbelian, BudgetExceeded, GroupTooLarge,
                 DegreeTooHigh)


@dataclass(frozen=True)
class RunConfig:
    verb: str
    group: str | None = None
    omega: str = "trivial"
    grading: str = "full"
    center_subgroup: str = "full"
    extension: str | None = None
    normal: str | None = None
    fiber: str | None = None
    degree: int = 3
    modulus: int | None = None
    format: str = "json"
    budget: int | None = None
    seed: int = DEFAULT_SEED
    corrupt_omega: bool = False


# -- input loading -----------------------------------------------------------

def _load_group(spec: str | None, flag: str) -> FiniteGroup:
    if spec is None:
        raise NotAGroup(f"missing required group argument {flag}")
    try:
        return builtin_group(spec)
    except UnknownBuiltin:
        pass
    path = Path(spec)
    if not path.is_file():
        raise NotAGroup(
            f"{spec!r} is neither a builtin group nor a readable file")
    return build_group(json.loads(path.read_text()))


def _load_twist(spec: str, G: FiniteGroup) -> TwistedGroupData:
    if spec == "trivial":
        return TwistedGroupData.trivial(G)
    if spec.startswith("repr:"):
        index = int(spec.split(":", 1)[1])
        if G.name not in H3_BATTERY:
            raise NotACocycle(
                f"no stored 3-cocycle classes for group {G.name!r}")
        H = load_h3_fixture(G.name, verify=False)
        return TwistedGroupData(G, H.class_representative(index))
    path = Path(spec)
    if not path.is_file():
        raise NotACocycle(
            f"omega spec {spec!r} is not trivial, repr:k, or a readable file")
    return TwistedGroupData(G, cochain_from_json(G, json.loads(path.read_text())))


def _load_cochain(spec: str, G: FiniteGroup, degree: int,
                  default_module) -> Cochain:
    if spec == "trivial":
        return Cochain.zero(G, default_module, degree)
    path = Path(spec)
    if not path.is_file():
        raise NotACocycle(
            f"omega spec {spec!r} is not trivial or a readable file")
    return cochain_from_json(G, json.loads(path.read_text()))


def _parse_ids(text: str | None, flag: str) -> tuple[int, ...]:
    if text is None:
        raise NotAGroup(f"missing required id list {flag}")
    try:
        ids = tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise NotAGroup(f"cannot parse element ids from {text!r}") from None
    return tuple(sorted(set(ids)))


def _describe(G: FiniteGroup) -> str:
    return G.name or f"order-{G.order}"


# -- verb handlers -----------------------------------------------------------

def _cmd_group(cfg: RunConfig):
    G = _load_group(cfg.group, "--group")
    report = {
        "name": G.name,
        "order": G.order,
        "abelian": G.is_abelian,
        "exponent": G.exponent,
        "element_orders": [int(o) for o in G.element_orders],
        "center": [int(x) for x in center(G).elements],
        "conjugacy_classes": [[int(x) for x in members]
                              for _, members in conjugacy_classes(G)],
    }
    return 0, report


def _cmd_subgroups(cfg: RunConfig):
    G = _load_group(cfg.group, "--group")
    subs = all_subgroups(G)
    report = {
        "group": _describe(G),
        "order": G.order,
        "count": len(subs),
        "subgroups": [{"elements": [int(x) for x in s.elements],
                       "order": s.order,
                       "normal": is_normal(G, s)} for s in subs],
    }
    return 0, report


def _cmd_cohomology(cfg: RunConfig):
    G = _load_group(cfg.group, "--group")
    modulus = cfg.modulus or G.order
    H = cohomology_group(G, cfg.degree, mu_module(modulus),
                         budget=cfg.budget or COHOMOLOGY_BUDGET)
    report = {
        "group": _describe(G),
        "degree": cfg.degree,
        "modulus": modulus,
        "invariant_factors": [int(f) for f in H.invariant_factors],
        "order": H.order,
        "representatives": [cochain_to_json(r) for r in H.representatives],
    }
    return 0, report


def _cmd_center_census(cfg: RunConfig):
    G = _load_group(cfg.group, "--group")
    data = _load_twist(cfg.omega, G)
    census = simple_census(data)
    report = {
        "group": _describe(G),
        "omega": cfg.omega,
        "modulus": data.modulus,
        "total_simples": census.total_simples,
        "fpdim_square_total": census.fpdim_square_total,
        "labels": [{"representative": l.representative,
                    "class_size": l.class_size,
                    "centralizer_order": l.centralizer_order,
                    "irrep_count": l.irrep_count,
                    "fpdim_square": l.fpdim_square}
                   for l in census.labels],
    }
    return 0, report


def _cmd_subcats(cfg: RunConfig):
    G = _load_group(cfg.group, "--group")
    data = _load_twist(cfg.omega, G)
    subs = enumerate_subcats(data, budget=cfg.budget or SUBCAT_BUDGET)
    report = {
        "group": _describe(G),
        "omega": cfg.omega,
        "working_modulus": working_modulus(data),
        "count": len(subs),
        "subcategories": [subcat_to_json(s) for s in subs],
    }
    return 0, report


def _cmd_crossed_pointed(cfg: RunConfig):
    G = _load_group(cfg.group, "--group")
    data = _load_twist(cfg.omega, G)
    if cfg.grading == "full":
        pi = GroupHom(G, G, tuple(G.elements))
    elif cfg.grading.startswith("quotient-by:"):
        ids = _parse_ids(cfg.grading.split(":", 1)[1], "--grading")
        _, pi = quotient(G, Subgroup(G, ids))
    else:
        raise NotAGroup(
            f"grading {cfg.grading!r} is not full or quotient-by:ids")
    kernel = pi.kernel()
    central = set(center(G).elements)
    base = {
        "group": _describe(G),
        "omega": cfg.omega,
        "grading_order": pi.target.order,
    }
    if not set(kernel.elements) <= central:
        base.update({
            "count": 0,
            "certificates": [],
            "reason": "kernel-not-central",
            "kernel": [int(x) for x in kernel.elements],
            "center": sorted(int(x) for x in central),
        })
        return 2, base
    certs = enumerate_pointed(data, pi)
    base.update({
        "count": len(certs),
        "certificates": [certificate_to_json(c) for c in certs],
    })
    return 0, base


def _cmd_crossed_rep(cfg: RunConfig):
    G = _load_group(cfg.group, "--group")
    if cfg.center_subgroup == "full":
        H = center(G)
    elif cfg.center_subgroup == "trivial":
        H = Subgroup(G, (0,))
    else:
        H = Subgroup(G, _parse_ids(cfg.center_subgroup, "--center-subgroup"))
    certs = enumerate_rep(G, H)
    report = {
        "group": _describe(G),
        "center_subgroup": [int(x) for x in H.elements],
        "count": len(certs),
        "certificates": [certificate_to_json(c) for c in certs],
    }
    return 0, report


def _cmd_gradings_rep(cfg: RunConfig):
    G = _load_group(cfg.group, "--group")
    specs = gradings_of_rep(G)
    report = {
        "group": _describe(G),
        "count": len(specs),
        "gradings": [{"central": [int(x) for x in g.central.elements],
                      "grading_order": g.grading_group().order}
                     for g in specs],
    }
    return 0, report


def _cmd_fibered(cfg: RunConfig):
    E = _load_group(cfg.extension, "--extension")
    N = Subgroup(E, _parse_ids(cfg.normal, "--normal"))
    rep = fibered_enrichment_extends(E, N)
    report = {
        "extension": _describe(E),
        "normal": [int(x) for x in N.elements],
        "extends": rep.extends,
        "reason": rep.reason,
        "torsor_count": rep.torsor_count,
    }
    return 0, report


def _cmd_zesting(cfg: RunConfig):
    N = _load_group(cfg.fiber, "--fiber")
    G = _load_group(cfg.group, "--group")
    inv = invertibles_of_center(N)
    w = _load_cochain(cfg.omega, G, 2, trivial_module(inv.group))
    lifts = zesting_lift_exists(N, G, w)
    report = {
        "fiber": _describe(N),
        "base": _describe(G),
        "invertibles_order": inv.group.order,
        "lifts": lifts,
        "reason": ("center component of the class vanishes" if lifts
                   else "center component of the class is nontrivial"),
    }
    return 0, report


def _cmd_obstruction(cfg: RunConfig):
    G = _load_group(cfg.group, "--group")
    w = _load_cochain(cfg.omega, G, 2, mu_module(cfg.modulus or G.order))
    rep = fully_faithful_obstruction(G, w.module, w)
    report = {
        "group": _describe(G),
        "omega": cfg.omega,
        "vanishes": rep.vanishes,
        "splitting_count": rep.splitting_count,
        "reason": ("second obstruction vanishes" if rep.vanishes
                   else "second obstruction class is nontrivial"),
    }
    return 0, report


# -- selftest ----------------------------------------------------------------

BATTERY = ("C2", "C3", "C4", "C6", "C2xC2", "S3", "D8", "Q8")


def _battery_twists(cfg: RunConfig):
    for name in BATTERY:
        H = load_h3_fixture(name)
        for k in range(H.class_count):
            data = TwistedGroupData(H.group, H.class_representative(k))
            if cfg.corrupt_omega and name == "C4" and k == 1:
                data._w[1, 1, 1] = (data._w[1, 1, 1] + 1) % data.modulus
            yield name, k, data


def _prop_group_axioms(cfg: RunConfig):
    for name in BATTERY:
        G = builtin_group(name)
        covered = sum(len(members) for _, members in conjugacy_classes(G))
        assert covered == G.order, f"{name}: classes do not partition"
        for s in all_subgroups(G):
            assert G.order % s.order == 0, f"{name}: Lagrange fails"


def _prop_beta_cocycle(cfg: RunConfig):
    for name, k, data in _battery_twists(cfg):
        for a, _ in conjugacy_classes(data.group):
            try:
                beta_restricted_cocycle(data, a)
            except CrossbraidError as e:
                raise AssertionError(
                    f"{name} class {k} element {a}: {e}") from None


def _prop_census_total(cfg: RunConfig):
    for name, k, data in _battery_twists(cfg):
        census = simple_census(data)
        expected = data.group.order ** 2
        assert census.fpdim_square_total == expected, \
            f"{name} class {k}: census misses |G|^2"


def _prop_subcat_duality(cfg: RunConfig):
    for name in BATTERY:
        data = TwistedGroupData.trivial(builtin_group(name))
        square = data.group.order ** 2
        for s in enumerate_subcats(data):
            dual = centralizer_subcat(s)
            assert fpdim(s) * fpdim(dual) == square, f"{name}: duality fails"
            assert centralizer_subcat(dual) == s, f"{name}: not involutive"


def _prop_pointed_uniqueness(cfg: RunConfig):
    for name, k, data in _battery_twists(cfg):
        G = data.group
        pi = GroupHom(G, G, tuple(G.elements))
        count = len(enumerate_pointed(data, pi))
        assert count == 1, f"{name} class {k}: {count} certificates"


def _prop_fibered_recognition(cfg: RunConfig):
    for name in BATTERY:
        E = builtin_group(name)
        for N in all_subgroups(E):
            if not is_normal(E, N):
                continue
            Q, _ = quotient(E, N)
            Ngrp, _ = subgroup_as_group(N)
            expected = is_isomorphic(E, product_group(Ngrp, Q))
            got = fibered_enrichment_extends(E, N).extends
            assert got == expected, f"{name} over {N.elements}"


def _prop_differential_squares_to_zero(cfg: RunConfig):
    rng = random.Random(cfg.seed)
    for name in ("C2", "C4", "S3"):
        G = builtin_group(name)
        module = mu_module(G.order)
        for degree in (1, 2):
            for _ in range(5):
                c = random_cochain(G, module, degree, rng)
                assert differential(differential(c)).is_zero, \
                    f"{name}: d(d(c)) nonzero in degree {degree}"


SELFTEST_PROPERTIES = (
    ("group-axioms", _prop_group_axioms),
    ("beta-cocycle", _prop_beta_cocycle),
    ("census-total", _prop_census_total),
    ("subcat-duality", _prop_subcat_duality),
    ("pointed-uniqueness", _prop_pointed_uniqueness),
    ("fibered-recognition", _prop_fibered_recognition),
    ("differential-squares-to-zero", _prop_differential_squares_to_zero),
)


def _cmd_selftest(cfg: RunConfig):
    rows = []
    all_ok = True
    for name, prop in SELFTEST_PROPERTIES:
        try:
            prop(cfg)
            rows.append({"property": name, "ok": True, "detail": ""})
        except (AssertionError, CrossbraidError) as e:
            all_ok = False
            rows.append({"property": name, "ok": False, "detail": str(e)})
    report = {
        "battery": list(BATTERY),
        "seed": cfg.seed,
        "ok": all_ok,
        "properties": rows,
    }
    return (0 if all_ok else 1), report


_DISPATCH = {
    "group": _cmd_group,
    "subgroups": _cmd_subgroups,
    "cohomology": _cmd_cohomology,
    "center-census": _cmd_center_census,
    "subcats": _cmd_subcats,
    "crossed-pointed": _cmd_crossed_pointed,
    "crossed-rep": _cmd_crossed_rep,
    "gradings-rep": _cmd_gradings_rep,
    "fibered": _cmd_fibered,
    "zesting": _cmd_zesting,
    "obstruction": _cmd_obstruction,
    "selftest": _cmd_selftest,
}


# -- argument parsing and entry points ---------------------------------------

def _parse_args(argv) -> RunConfig:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--budget", type=int, default=None)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = argparse.ArgumentParser(
        prog="crossbraid",
        description="Exact enumeration of crossed braidings and "
                    "enrichment obstructions over finite group data.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    for name in ("group", "subgroups", "gradings-rep"):
        verb(name).add_argument("--group", required=True)

    p = verb("cohomology")
    p.add_argument("--group", required=True)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--modulus", type=int, default=None)

    for name in ("center-census", "subcats"):
        p = verb(name)
        p.add_argument("--group", required=True)
        p.add_argument("--omega", default="trivial")

    p = verb("crossed-pointed")
    p.add_argument("--group", required=True)
    p.add_argument("--omega", default="trivial")
    p.add_argument("--grading", default="full")

    p = verb("crossed-rep")
    p.add_argument("--group", required=True)
    p.add_argument("--center-subgroup", default="full")

    p = verb("fibered")
    p.add_argument("--extension", required=True)
    p.add_argument("--normal", required=True)

    p = verb("zesting")
    p.add_argument("--fiber", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--omega", default="trivial")

    p = verb("obstruction")
    p.add_argument("--group", required=True)
    p.add_argument("--omega", default="trivial")
    p.add_argument("--modulus", type=int, default=None)

    verb("selftest").add_argument("--corrupt-omega", action="store_true")

    ns = parser.parse_args(argv)
    return RunConfig(
        verb=ns.verb,
        group=getattr(ns, "group", None),
        omega=getattr(ns, "omega", "trivial"),
        grading=getattr(ns, "grading", "full"),
        center_subgroup=getattr(ns, "center_subgroup", "full"),
        extension=getattr(ns, "extension", None),
        normal=getattr(ns, "normal", None),
        fiber=getattr(ns, "fiber", None),
        degree=getattr(ns, "degree", 3),
        modulus=getattr(ns, "modulus", None),
        format=ns.format,
        budget=ns.budget,
        seed=ns.seed,
        corrupt_omega=getattr(ns, "corrupt_omega", False),
    )


def _render_table(report: dict) -> str:
    rows = []
    for key, value in report.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value, separators=(",", ":"))
        rows.append((key, str(value)))
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        cfg = _parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    try:
        code, report = _DISPATCH[cfg.verb](cfg)
    except DOMAIN_ERRORS as e:
        out.write(dump_json({"error": type(e).__name__, "reason": str(e)}))
        return 2
    except (CrossbraidError, OSError, ValueError, KeyError,
            json.JSONDecodeError) as e:
        out.write(dump_json({"error": type(e).__name__, "reason": str(e)}))
        return 1
    if cfg.format == "json":
        out.write(dump_json(report))
    else:
        out.write(_render_table(report))
    return code


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
