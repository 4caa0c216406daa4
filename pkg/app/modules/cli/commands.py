"""
## Обработчики подкоманд CLI.

Каждый обработчик получает разобранные аргументы, загрузчик входов и
настройки и заполняет отчёт. Исключения `AppError` поднимаются наружу,
код выхода определяет `app.modules.cli.app`.
"""

from __future__ import annotations

from argparse import Namespace
from pathlib import Path
from typing import Callable

from ..classify import (
    chern_number,
    dch,
    holonomy,
    kostant_sequence_check,
    parse_gauge_field,
    preq,
    weil_lift,
    weil_project,
)
from ..complex import DeltaComplex, parse_chain, parse_cochain
from ..dccomplex import DCComplex, parse_dc_triple
from ..descent import descent_equivalence_h1, parse_cover
from ..exactalg import cohomology_of, cohomology_qz, cohomology_rational
from ..exceptions import CertificateError, ParseError
from ..internal import Settings
from ..nerve import DoubleComplex, TotalComplex, build_nerve, parse_group_action, total_cohomology, trivial_action
from .inputs import InputLoader
from .report import Report


Handler = Callable[[Namespace, InputLoader, Settings, Report], None]


def _main_space(args: Namespace, loader: InputLoader) -> DeltaComplex:
    if args.complex is None:
        raise ParseError("<argv>", 0, "не задан --complex")
    return loader.space(args.complex)


def cmd_cohomology(args: Namespace, loader: InputLoader, settings: Settings, report: Report) -> None:
    space = _main_space(args, loader)
    complex_ = space.cochain_complex
    compute = {"Z": cohomology_of, "Q": cohomology_rational, "QZ": cohomology_qz}[args.ring]
    report.add("space", space.name)
    report.add("ring", args.ring)
    report.add("degree", args.degree)
    report.add("group", compute(complex_, args.degree))


def cmd_dc_cohomology(args: Namespace, loader: InputLoader, settings: Settings, report: Report) -> None:
    space = _main_space(args, loader)
    report.add("space", space.name)
    report.add("s", args.s)
    report.add("degree", args.degree)
    report.add("group", DCComplex(space, args.s).cohomology(args.degree))


def _gauge(path: Path, loader: InputLoader):
    text = loader.read("gauge", path)
    return parse_gauge_field(text, loader.base_space(text, path), path)


def cmd_chern(args: Namespace, loader: InputLoader, settings: Settings, report: Report) -> None:
    field = _gauge(Path(args.gauge), loader)
    x = dch(field)
    report.add("space", field.space.name)
    report.add("chern_number", chern_number(x))
    report.add_cochain("c", dict(x.c.items()))  # type: ignore[union-attr]
    report.add_cochain("omega", dict(x.omega.items()))  # type: ignore[union-attr]


def cmd_preq(args: Namespace, loader: InputLoader, settings: Settings, report: Report) -> None:
    path = Path(args.dc)
    text = loader.read("dc", path)
    x = parse_dc_triple(text, loader.base_space(text, path), path)
    field = preq(x)
    report.add("space", field.space.name)
    report.add_cochain("a", dict(field.a.items()))
    roundtrip = x.complex.category(2).hom_triples(x, dch(field, dc=x.complex))
    report.add("roundtrip", "isomorphic" if roundtrip is not None else "curvature_reduced")


def cmd_holonomy(args: Namespace, loader: InputLoader, settings: Settings, report: Report) -> None:
    field = _gauge(Path(args.gauge), loader)
    path = Path(args.cycle)
    z = parse_chain(loader.read("cycle", path), field.space, path)
    report.add("space", field.space.name)
    report.add("holonomy", holonomy(field, z))


def cmd_weil(args: Namespace, loader: InputLoader, settings: Settings, report: Report) -> None:
    space = _main_space(args, loader)
    report.add("space", space.name)
    report.add("h2_integral", cohomology_of(space.cochain_complex, 2))
    report.add("h2_dc1", DCComplex(space, 1).cohomology(2))
    if args.cocycle is None:
        return
    path = Path(args.cocycle)
    c = parse_cochain(loader.read("cocycle", path), space, path)
    x = weil_lift(c)
    if weil_project(x) != c:
        raise CertificateError("weil_roundtrip", "project(lift(c)) ≠ c")
    report.add_cochain("lift.c", dict(x.c.items()))  # type: ignore[union-attr]
    report.add_cochain("lift.h", dict(x.h.items()))  # type: ignore[union-attr]
    report.add_cochain("lift.omega", dict(x.omega.items()))  # type: ignore[union-attr]
    report.status = "CERTIFIED"


def _nerve(args: Namespace, loader: InputLoader, space: DeltaComplex, depth: int):
    if args.group is None:
        action = trivial_action(space)
    else:
        path = Path(args.group)
        action = parse_group_action(loader.read("group", path), space, path)
    return action, build_nerve(action, depth)


def cmd_equivariant(args: Namespace, loader: InputLoader, settings: Settings, report: Report) -> None:
    space = _main_space(args, loader)
    action, nerve = _nerve(args, loader, space, args.degree + 1)
    report.add("space", space.name)
    report.add("group_order", action.order)
    report.add("degree", args.degree)
    if args.s is not None:
        total = TotalComplex(DoubleComplex.dc(nerve, args.s))
        report.add("s", args.s)
        report.add("group", total_cohomology(total, args.degree))
        return
    total = TotalComplex(DoubleComplex.cochains(nerve, "Z"))
    for ring in ("Z", "Q", "QZ"):
        report.add(f"group_{ring}", total_cohomology(total, args.degree, ring))


def cmd_kostant(args: Namespace, loader: InputLoader, settings: Settings, report: Report) -> None:
    space = _main_space(args, loader)
    action, nerve = _nerve(args, loader, space, 3)
    result = kostant_sequence_check(nerve, samples=settings.sample_size, seed=settings.seed)
    report.add("space", space.name)
    report.add("group_order", action.order)
    report.add("kernel", result.kernel)
    report.add("curvature", result.curvature)
    report.add("h2", result.h2)
    report.add("forms_checked", result.forms_checked)
    report.add("samples_checked", result.samples_checked)
    report.status = "CERTIFIED"


def cmd_descent_check(args: Namespace, loader: InputLoader, settings: Settings, report: Report) -> None:
    space = _main_space(args, loader)
    path = Path(args.cover)
    cover, partition = parse_cover(loader.read("cover", path), space, path)
    result = descent_equivalence_h1(
        cover,
        ring=args.ring,
        samples=settings.sample_size,
        seed=settings.seed,
        partition=partition,
    )
    report.add("space", space.name)
    report.add("ring", result.ring)
    report.add("rho", result.variant)
    report.add("h1_base", result.h1_base)
    report.add("h1_total", result.h1_total)
    report.add("automorphisms", result.automorphisms)
    report.add("identities_checked", result.identities_checked)
    report.add("pairs_checked", result.pairs_checked)
    report.add("objects_checked", result.objects_checked)
    report.add("rows_contracted", result.rows_contracted)
    report.status = "CERTIFIED"


COMMANDS: dict[str, Handler] = {
    "cohomology": cmd_cohomology,
    "dc-cohomology": cmd_dc_cohomology,
    "chern": cmd_chern,
    "preq": cmd_preq,
    "holonomy": cmd_holonomy,
    "weil": cmd_weil,
    "equivariant": cmd_equivariant,
    "kostant": cmd_kostant,
    "descent-check": cmd_descent_check,
}


# Экспортируемый интерфейс модуля
__all__ = [
    "Handler",
    "COMMANDS",
]
