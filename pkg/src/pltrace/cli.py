"""``pltrace`` command-line front end.

Each subcommand reads documents from files (``-`` for stdin), calls the
library, and writes a document, a JSON object of named documents, SVG, or
``true``/``false``.

Exit codes: 0 success or true, 1 decided false, 2 domain error,
3 input error.  Diagnostics go to stderr as ``error: <Name>: <message>``.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence

from . import lattice, stopmap, trace
from .document import Document, dumps, encode, expect, parse, parse_rat, serialize
from .errors import DocumentSyntaxError, DomainError, PLTraceError, ValidationError
from .factorization import left_factor, right_lift
from .plmap import compose
from .svg import render

EXIT_OK, EXIT_FALSE, EXIT_DOMAIN, EXIT_INPUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Result:
    """What a command produced: text plus an exit code."""

    def __init__(self, text: str, code: int = EXIT_OK):
        self.text = text
        self.code = code


def _load(name: str) -> Document:
    if name == "-":
        return parse(sys.stdin.read())
    with open(name, encoding="utf-8") as fh:
        return parse(fh.read())


def _reparam(name):
    return expect(_load(name), "reparam")


def _path(name):
    return expect(_load(name), "path")


def _class(name):
    doc = _load(name)
    if doc.kind == "reparam":
        return lattice.class_of(doc.payload)
    return expect(doc, "class")


def _rats(texts: Sequence[str]) -> List:
    return [parse_rat(t) for t in texts]


def _doc(value) -> Result:
    return Result(serialize(Document.of(value)))


def _named(**values) -> Result:
    return Result(dumps({k: encode(Document.of(v)) for k, v in values.items()}))


def _decision(flag: bool) -> Result:
    return Result("true\n" if flag else "false\n", EXIT_OK if flag else EXIT_FALSE)


def cmd_compose(a):
    left = _load(a.left)
    g = _reparam(a.right)
    if left.kind == "path":
        return _doc(trace.path_reparam(left.payload, g))
    return _doc(compose(expect(left, "reparam"), g))


def cmd_stopmap(a):
    return _doc(stopmap.stop_data(_reparam(a.file)))


def cmd_realize(a):
    return _doc(stopmap.realize(expect(_load(a.file), "stopdata")))


def cmd_realize_values(a):
    return _doc(stopmap.realize_values(_rats(a.values)))


def cmd_build_countable(a):
    return _doc(stopmap.countable_builder(_rats(a.values), a.depth))


def cmd_approx_homeo(a):
    return _doc(stopmap.approx_homeo(_reparam(a.file), a.n))


def cmd_approx_noninjective(a):
    return _doc(stopmap.approx_noninjective(_reparam(a.file), a.n))


def cmd_factor_right(a):
    extra = None if a.extra_stops is None else _rats(a.extra_stops.split(",") if a.extra_stops else [])
    return _doc(right_lift(_reparam(a.eta), _reparam(a.phi), extra))


def cmd_factor_left(a):
    return _doc(left_factor(_reparam(a.eta), _reparam(a.phi)))


def cmd_class(a):
    return _doc(lattice.class_of(_reparam(a.file)))


def cmd_join(a):
    return _doc(lattice.join(_class(a.a), _class(a.b)))


def cmd_meet(a):
    return _doc(lattice.meet(_class(a.a), _class(a.b)))


def cmd_leq(a):
    return _decision(lattice.leq(_class(a.a), _class(a.b)))


def cmd_join_witness(a):
    psi1, psi2 = lattice.join_witness(_reparam(a.a), _reparam(a.b))
    return _named(psi1=psi1, psi2=psi2)


def cmd_meet_witness(a):
    rho, phi, psi1, psi2 = lattice.meet_witness(_reparam(a.a), _reparam(a.b))
    return _named(rho=rho, phi=phi, psi1=psi1, psi2=psi2)


def cmd_regularize(a):
    q, phi = trace.regularize(_path(a.file))
    return _named(q=q, phi=phi)


def cmd_normal_form(a):
    return _doc(trace.normal_form(_path(a.file)))


def cmd_equiv(a):
    return _decision(trace.equivalent(_path(a.p), _path(a.q)))


def cmd_shared_source(a):
    r, phi, psi = trace.shared_source(_path(a.p), _path(a.q))
    return _named(r=r, phi=phi, psi=psi)


def cmd_thin_homotopy(a):
    return _doc(trace.thin_homotopy(_path(a.p), _path(a.q)))


def cmd_concat(a):
    return _doc(trace.concat(_path(a.p), _path(a.q)))


_CHECKS: Dict[str, Callable] = {
    "is-regular": trace.is_regular,
    "is-directed": trace.is_directed,
    "is-loop-free": trace.is_loop_free,
}


def cmd_check(a):
    return _decision(_CHECKS[a.property](_path(a.file)))


def cmd_image_chain(a):
    return _doc(trace.TraceNF(trace.image_chain(_path(a.file))))


def cmd_render(a):
    return Result(render(_load(a.file)))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pltrace", description="Exact PL reparametrizations and path traces.")
    parser.add_argument("-o", "--output", help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, *positionals, help=None):
        p = sub.add_parser(name, help=help)
        for arg in positionals:
            p.add_argument(arg)
        p.set_defaults(func=func)
        return p

    add("compose", cmd_compose, "left", "right", help="reparam o reparam, or path o reparam")
    add("stopmap", cmd_stopmap, "file", help="stop intervals paired with stop values")
    add("realize", cmd_realize, "file", help="canonical reparam with given stop data")
    p = add("realize-values", cmd_realize_values, help="canonical reparam with given stop values")
    p.add_argument("values", nargs="*")
    p = add("build-countable", cmd_build_countable, help="n-th builder step for a value list")
    p.add_argument("values", nargs="+")
    p.add_argument("--depth", type=int, required=True)
    for name, func in (("approx-homeo", cmd_approx_homeo), ("approx-noninjective", cmd_approx_noninjective)):
        p = add(name, func, "file")
        p.add_argument("n", type=int)
    p = add("factor-right", cmd_factor_right, help="psi with phi o psi = eta")
    p.add_argument("--eta", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--extra-stops", help="comma-separated stop values for psi")
    p = add("factor-left", cmd_factor_left, help="psi with psi o phi = eta")
    p.add_argument("--eta", required=True)
    p.add_argument("--phi", required=True)
    add("class", cmd_class, "file")
    for name, func in (("join", cmd_join), ("meet", cmd_meet), ("leq", cmd_leq),
                       ("join-witness", cmd_join_witness), ("meet-witness", cmd_meet_witness)):
        add(name, func, "a", "b")
    add("regularize", cmd_regularize, "file")
    add("normal-form", cmd_normal_form, "file")
    for name, func in (("equiv", cmd_equiv), ("shared-source", cmd_shared_source),
                       ("thin-homotopy", cmd_thin_homotopy), ("concat", cmd_concat)):
        add(name, func, "p", "q")
    p = add("check", cmd_check)
    p.add_argument("property", choices=sorted(_CHECKS))
    p.add_argument("file")
    add("image-chain", cmd_image_chain, "file")
    add("render", cmd_render, "file", help="SVG plot of a reparam, stopdata or path (dim <= 2)")
    return parser


def _diagnostic(err: PLTraceError) -> str:
    if isinstance(err, ValidationError) and type(err) is not ValidationError:
        return f"ValidationError: {err.name}: {err}"
    return f"{err.name}: {err}"


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as err:
        print(f"error: UsageError: {err}", file=stderr)
        return EXIT_INPUT
    except DomainError as err:
        print(f"error: {_diagnostic(err)}", file=stderr)
        return EXIT_DOMAIN
    except (ValidationError, DocumentSyntaxError) as err:
        print(f"error: {_diagnostic(err)}", file=stderr)
        return EXIT_INPUT
    except OSError as err:
        print(f"error: IOError: {err}", file=stderr)
        return EXIT_INPUT

    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(result.text)
        except OSError as err:
            print(f"error: IOError: {err}", file=stderr)
            return EXIT_INPUT
    else:
        stdout.write(result.text)
    return result.code


def main() -> None:
    sys.exit(run())
