"""
Command-line front door

Every subcommand reads its inputs from JSON files, runs the matching
service and prints either a plain-text report or, with ``--json``, the
response model as JSON. Logs go to standard error.

Exit codes: 0 success, 2 invalid input, 64 unknown subcommand, 66 input
file missing or unreadable, 70 failed theorem check.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence, Tuple, Type, TypeVar

import pydantic
import uvicorn
from pydantic import BaseModel

from groupoid_card import __version__
from groupoid_card.core.config import settings
from groupoid_card.core.exceptions import TheoremViolation, ValidationError
from groupoid_card.core.logger import configure_logging
from groupoid_card.models.rep import RepComponentParams
from groupoid_card.reports import report_service
from groupoid_card.schemas.functor import FunctorDocument
from groupoid_card.schemas.group import GroupSpec
from groupoid_card.schemas.groupoid import GroupoidSpec
from groupoid_card.schemas.relfin import RelFinObjectSpec
from groupoid_card.schemas.requests import RepSeriesRequest
from groupoid_card.schemas.space import PiFiniteSpaceSpec
from groupoid_card.schemas.structure import StructureSpec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNKNOWN_COMMAND = 64
EXIT_NO_INPUT = 66
EXIT_THEOREM = 70

Spec = TypeVar("Spec", bound=BaseModel)
Report = Tuple[BaseModel, str]

GROUP_FORMAT = """\
group JSON: {"order": n, "table": [[...], ...]}
        or  {"permutations": {"degree": d, "generators": [[...], ...]}}"""
GROUPOID_FORMAT = """\
groupoid JSON: {"objects": [...], "morphisms": [{"id": f, "src": x, "dst": y}],
                "compose": [[f, g, h], ...]}   (h is f followed by g)
           or  {"components": [{"aut_order_table": [[...]]}, {"group": <group>}]}"""
FUNCTOR_FORMAT = """\
functor JSON: {"source": <groupoid>, "target": <groupoid>,
               "object_map": [...], "morphism_map": [...]}   (target ids)"""
RELFIN_FORMAT = """\
RelFin JSON: {"base": <group>, "components": [{"group": <group>, "map": [...]}]}"""
STRUCTURE_FORMAT = """\
structure JSON: {"signature": [2], "n": 3, "relations": [[[0, 1], [1, 2]]]}"""
REP_FORMAT = """\
representation JSON: {"components": [{"dim_v": 1, "q": 2, "d": 1}, ...]}"""
SPACE_FORMAT = """\
space JSON: {"components": [[3], [1, 2]]}   ([#π₁, #π₂, ...] per component)"""


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _load(path: str, model: Type[Spec]) -> Spec:
    return model.model_validate_json(Path(path).read_bytes())


# ----------------------------------------------------------------------
# Subcommand handlers
# ----------------------------------------------------------------------


def _card(args: argparse.Namespace) -> Report:
    groupoid = _load(args.groupoid, GroupoidSpec).to_domain()
    response = report_service.cardinality(groupoid)
    return response, response.cardinality


def _functor_card(args: argparse.Namespace) -> Report:
    response = report_service.functor_cardinality(
        _load(args.source, GroupoidSpec).to_domain(),
        _load(args.target, GroupoidSpec).to_domain(),
        args.brute,
    )
    text = response.cardinality
    if args.brute:
        text += (
            f"\nbrute force: {response.brute_force} over {response.functors} functors"
        )
    return response, text


def _factorize(args: argparse.Namespace) -> Report:
    functor = _load(args.functor, FunctorDocument).build()
    response = report_service.factorization(functor)
    lines = [
        f"source: {response.source_cardinality}",
        f"target: {response.target_cardinality}",
    ]
    for stage in response.stages:
        lines.append(
            f"{stage.name}: full={_flag(stage.full)} "
            f"faithful={_flag(stage.faithful)} "
            f"essentially_surjective={_flag(stage.essentially_surjective)} "
            f"|target|={stage.target_cardinality}"
        )
    lines.append(f"recomposes: {_flag(response.recomposes)}")
    lines.append(f"equivalence: {_flag(response.is_equivalence)}")
    return response, "\n".join(lines)


def _gset_egf(args: argparse.Namespace) -> Report:
    response = report_service.gset_egf(_load(args.group, GroupSpec).to_domain(), args.N)
    return response, response.text


def _gset_card(args: argparse.Namespace) -> Report:
    response = report_service.gset_cardinality(
        _load(args.groupoid, GroupoidSpec).to_domain()
    )
    if args.float:
        return response, f"{response.value:.{settings.FLOAT_DIGITS}g}"
    return response, f"exp({response.exponent})"


def _gl_order(args: argparse.Namespace) -> Report:
    response = report_service.gl_order(args.n, args.Q)
    return response, str(response.order)


def _rep_series(args: argparse.Namespace) -> Report:
    request = _load(args.params, RepSeriesRequest)
    response = report_service.rep_series(request.components, args.N)
    return response, response.text


def _tameness(args: argparse.Namespace) -> Report:
    response = report_service.tameness(_load(args.params, RepComponentParams), args.N)
    return response, (
        f"partial sum: {response.partial_sum}\n"
        f"bound: {response.borel_bound}\n"
        f"holds: {_flag(response.holds)}"
    )


def _relfin_hom(args: argparse.Namespace) -> Report:
    response = report_service.relfin_hom(
        _load(args.source, RelFinObjectSpec).to_domain(),
        _load(args.target, RelFinObjectSpec).to_domain(),
        not args.no_decompose,
    )
    lines = [
        f"hom: {response.hom_cardinality}",
        f"faithful: {response.faithful_cardinality}",
    ]
    if response.decomposition_holds is not None:
        lines.append(
            f"decomposition: {response.decomposition_lhs} = "
            f"{response.decomposition_rhs}"
        )
    return response, "\n".join(lines)


def _relfin_equiv(args: argparse.Namespace) -> Report:
    response = report_service.relfin_equivalence(
        _load(args.first, RelFinObjectSpec).to_domain(),
        _load(args.second, RelFinObjectSpec).to_domain(),
    )
    text = f"equivalent: {_flag(response.equivalent)}"
    if response.equivalent and response.matching:
        pairs = ", ".join(f"{i}->{j}" for i, j in response.matching)
        text += f"\nmatching: {pairs}"
    return response, text


def _relfin_distinguish(args: argparse.Namespace) -> Report:
    response = report_service.distinguish(
        _load(args.first, RelFinObjectSpec).to_domain(),
        _load(args.second, RelFinObjectSpec).to_domain(),
        args.exhaustive,
    )
    if not response.found:
        return response, f"indistinguishable after {response.probes_checked} probes"
    (component,) = response.witness.components
    return response, (
        f"witness: group of order {component.group.order} mapped by {component.map}\n"
        f"first: {response.lhs}\n"
        f"second: {response.rhs}\n"
        f"probes checked: {response.probes_checked}"
    )


def _homcount(args: argparse.Namespace) -> Report:
    response = report_service.homcount(
        _load(args.source, StructureSpec).to_domain(),
        _load(args.target, StructureSpec).to_domain(),
        args.injective,
    )
    return response, str(response.count)


def _lovasz_test(args: argparse.Namespace) -> Report:
    response = report_service.lovasz(
        _load(args.first, StructureSpec).to_domain(),
        _load(args.second, StructureSpec).to_domain(),
        args.bound,
        args.strategy,
    )
    if not response.distinguished:
        return response, f"indistinguishable; isomorphic: {_flag(response.isomorphic)}"
    witness = response.witness
    return response, (
        f"distinguished by n={witness.n} relations={witness.relations}: "
        f"hom(C, A)={response.hom_a}, hom(C, B)={response.hom_b}"
    )


def _homotopy_card(args: argparse.Namespace) -> Report:
    response = report_service.homotopy_cardinality(
        _load(args.space, PiFiniteSpaceSpec).to_domain()
    )
    return response, response.cardinality


def _serve(args: argparse.Namespace) -> None:
    uvicorn.run("groupoid_card.server:app", host=args.host, port=args.port)


HANDLERS: Dict[str, Callable[[argparse.Namespace], Report]] = {
    "card": _card,
    "functor-card": _functor_card,
    "factorize": _factorize,
    "gset-egf": _gset_egf,
    "gset-card": _gset_card,
    "gl-order": _gl_order,
    "rep-series": _rep_series,
    "tameness": _tameness,
    "relfin-hom": _relfin_hom,
    "relfin-equiv": _relfin_equiv,
    "relfin-distinguish": _relfin_distinguish,
    "homcount": _homcount,
    "lovasz-test": _lovasz_test,
    "homotopy-card": _homotopy_card,
}
COMMANDS = tuple(HANDLERS) + ("serve",)


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupoid-card",
        description="Exact groupoid cardinalities and homomorphism-counting tests",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--json", action="store_true", help="Emit JSON output")
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="Emit JSON"
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name: str, help_text: str, schema: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(
            name,
            help=help_text,
            description=f"{help_text}\n\n{schema}",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            parents=[common],
        )

    sub = add("card", "Cardinality of a finite groupoid", GROUPOID_FORMAT)
    sub.add_argument("groupoid")

    sub = add("functor-card", "Cardinality of the functor groupoid", GROUPOID_FORMAT)
    sub.add_argument("source", help="H")
    sub.add_argument("target", help="G")
    sub.add_argument("--brute", action="store_true", help="Also build G^H explicitly")

    sub = add(
        "factorize",
        "Ternary factorization of a functor",
        f"{FUNCTOR_FORMAT}\n{GROUPOID_FORMAT}",
    )
    sub.add_argument("functor")

    sub = add("gset-egf", "Generating function of finite G-sets", GROUP_FORMAT)
    sub.add_argument("group")
    sub.add_argument("--N", type=int, default=settings.DEFAULT_TRUNCATION)

    sub = add("gset-card", "Cardinality of FinSet^G", GROUPOID_FORMAT)
    sub.add_argument("groupoid")
    sub.add_argument("--float", action="store_true", help="Print e^exponent")

    sub = add("gl-order", "Order of GL_n over the field with Q elements", "")
    sub.add_argument("n", type=int)
    sub.add_argument("Q", type=int)

    sub = add("rep-series", "Generating function of a representation", REP_FORMAT)
    sub.add_argument("params")
    sub.add_argument("--N", type=int, default=settings.DEFAULT_TRUNCATION)

    sub = add(
        "tameness",
        "Partial sum of Φ_V(1) against the block triangular bound",
        'component JSON: {"dim_v": 1, "q": 2, "d": 1}',
    )
    sub.add_argument("params")
    sub.add_argument("--N", type=int, default=settings.DEFAULT_TRUNCATION)

    sub = add("relfin-hom", "Hom-groupoid cardinality |RelFin(S, F)|", RELFIN_FORMAT)
    sub.add_argument("source")
    sub.add_argument("target")
    sub.add_argument(
        "--no-decompose", action="store_true", help="Skip the E-quotient check"
    )

    sub = add("relfin-equiv", "Decide equivalence of RelFin objects", RELFIN_FORMAT)
    sub.add_argument("first")
    sub.add_argument("second")

    sub = add(
        "relfin-distinguish", "Find a probe separating two objects", RELFIN_FORMAT
    )
    sub.add_argument("first")
    sub.add_argument("second")
    sub.add_argument(
        "--exhaustive", action="store_true", help="Probe the small-groups table"
    )

    sub = add("homcount", "Count homomorphisms C → A", STRUCTURE_FORMAT)
    sub.add_argument("source")
    sub.add_argument("target")
    sub.add_argument("--injective", action="store_true")

    sub = add("lovasz-test", "Isomorphism from homomorphism counts", STRUCTURE_FORMAT)
    sub.add_argument("first")
    sub.add_argument("second")
    sub.add_argument("--bound", type=int, default=None)
    sub.add_argument(
        "--strategy", choices=["exhaustive", "quotients"], default="exhaustive"
    )

    sub = add("homotopy-card", "Homotopy cardinality of a space", SPACE_FORMAT)
    sub.add_argument("space")

    sub = add("serve", "Start the HTTP service", "")
    sub.add_argument("--host", default=settings.API_HOST)
    sub.add_argument("--port", type=int, default=settings.API_PORT)
    return parser


def _requested_command(argv: Sequence[str]) -> Optional[str]:
    skip_next = False
    for arg in argv:
        if skip_next:
            skip_next = False
        elif arg == "--log-level":
            skip_next = True
        elif not arg.startswith("-"):
            return arg
    return None


# ----------------------------------------------------------------------
# Entry points
# ----------------------------------------------------------------------


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, dispatch to one subcommand and print its report

    Returns:
        Process exit code
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    command = _requested_command(argv)
    if command is not None and command not in COMMANDS:
        print(f"unknown subcommand: {command}", file=sys.stderr)
        return EXIT_UNKNOWN_COMMAND

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_INVALID

    configure_logging(args.log_level)
    if args.command == "serve":
        _serve(args)
        return EXIT_OK

    try:
        response, text = HANDLERS[args.command](args)
    except FileNotFoundError as exc:
        print(f"input file not found: {exc.filename}", file=sys.stderr)
        return EXIT_NO_INPUT
    except OSError as exc:
        print(f"cannot read input {exc.filename}: {exc.strerror}", file=sys.stderr)
        return EXIT_NO_INPUT
    except pydantic.ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValidationError as exc:
        print(f"{exc.error}: {exc.message}", file=sys.stderr)
        return EXIT_INVALID
    except TheoremViolation as exc:
        logger.error("theorem check failed: %s %s", exc.message, exc.details)
        print(f"{exc.error}: {exc.message}", file=sys.stderr)
        return EXIT_THEOREM

    print(response.model_dump_json() if args.json else text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
