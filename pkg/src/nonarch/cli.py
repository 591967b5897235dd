"""Command-line front end: ``nonarch padic|ext|alg|cheese ...``.

Exit codes: 0 success, 1 failed verification, 2 usage or schema error,
3 mathematical precondition failure.
"""

from __future__ import annotations

import argparse
import functools
import json
import os
import random
import re
import sys
import tempfile
from fractions import Fraction
from typing import Any

from .errors import SchemaError
from .valued_fields import padic, series

EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_MATH = 3


class UsageError(Exception):
    pass


def _jsonable(obj: Any):
    if isinstance(obj, float) and obj == float("inf"):
        return "inf"
    if isinstance(obj, (Fraction,)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    return str(obj)


def dumps(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, separators=(",", ":")) + "\n"


def write_atomic(path: str, text: str):
    """Write via a temporary file in the target directory, then rename."""
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".nonarch-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(obj, out: str | None = None):
    text = dumps(obj)
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except json.JSONDecodeError as e:
        raise SchemaError("$", f"invalid JSON ({e.msg} at line {e.lineno})") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed rational {text!r}") from None


def _precision(args) -> int:
    n = getattr(args, "digits", None)
    if n is None:
        n = padic.DEFAULT_PRECISION
    if n < 1:
        raise UsageError("digit count must be positive")
    return n


def _prime(p: int) -> int:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise UsageError(f"{p} is not a prime")
    return p


# -- padic ----------------------------------------------------------------------


def cmd_padic(args) -> int:
    _prime(args.prime)
    if args.action == "expand":
        x = padic.expand(_rational(args.value), args.prime, _precision(args))
        emit(x.to_json())
    elif args.action == "sum":
        n = _precision(args)
        terms = [padic.expand(_rational(t), args.prime, n) for t in args.terms.split(",") if t]
        res = series.sum_series(terms)
        emit({"sum": res.value.to_json(), "verdict": res.verdict,
              "tail_valuation": res.tail_valuation})
    else:
        if args.bound < 8:
            raise UsageError("-N must be at least 8")
        spec = series.pattern_spec(args.pattern, args.prime, args.bound)
        rad = series.radius_of_convergence(spec)
        emit({"pattern": args.pattern, "p": args.prime, "N": args.bound,
              "log_radius_estimate": str(rad.exponent),
              "estimate": repr(rad.estimate),
              "exact_log_radius": None if rad.exact_exponent is None else str(rad.exact_exponent),
              "exact": None if rad.exact is None else repr(rad.exact)})
    return 0


# -- ext ------------------------------------------------------------------------


def _field(name: str):
    from .function_algebras.serialize import parse_field

    return parse_field(name, "--field")


def _element(field, text: str):
    from .function_algebras.serialize import parse_element

    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = text
    return parse_element(field, data, "--element")


def cmd_ext(args) -> int:
    from .extensions import GaloisAut, ord_at, stable_reps
    from .extensions.quadratic import QuadraticExtension

    field = _field(args.field)
    if args.action == "valuation":
        if not isinstance(field, QuadraticExtension):
            raise UsageError("valuation needs a p-adic extension field")
        x = field.element(_rational(args.a), _rational(args.b))
        emit({"omega": field.omega(x), "norm": field.norm(x).to_json(),
              "via_norm": field.extend_valuation(x),
              "residue": None if field.omega(x) < 0 else list(field.residue(x).coeffs)})
    elif args.action == "galois":
        g = GaloisAut(field, args.power)
        x = _element(field, args.element)
        orbit = [x]
        for _ in range(ord_at(g, x) - 1):
            orbit.append(g(orbit[-1]))
        emit({"field": field.name, "ord_g": g.order, "ord_at": len(orbit),
              "orbit": [field.serialize(y) for y in orbit]})
    else:
        if not isinstance(field, QuadraticExtension):
            raise UsageError("reps needs a p-adic extension field")
        reps = stable_reps(GaloisAut(field, args.power))
        emit({"field": field.name, "count": len(reps), "g_closed": reps.is_closed(),
              "contains_zero": reps.index_of(field.zero()) is not None,
              "reps": [[str(r.a.balanced_fraction()), str(r.b.balanced_fraction())]
                       for r in reps]})
    return 0


# -- alg ------------------------------------------------------------------------


def _spec(path: str):
    from .function_algebras.serialize import parse_spec

    return parse_spec(load_json(path))


def default_lattice_spec(field_name: str):
    """Points (0, g^i(z)) forming one tau-cycle plus the fixed point (1, 1)."""
    from .extensions import GaloisAut
    from .function_algebras import spec_from_cycles

    field = _field(field_name)
    d = field.galois_order
    cyc = [f"0:g{i}" for i in range(d)]
    return spec_from_cycles(cyc + ["1:one"], [cyc], GaloisAut(field, 1))


def cmd_alg(args) -> int:
    from . import function_algebras as fa
    from .function_algebras.serialize import parse_table, spec_to_json, table_to_json

    if args.action == "lattice":
        spec = _spec(args.spec) if args.spec else default_lattice_spec(args.field)
        lat = fa.lattice(spec)
        emit({"spec": spec_to_json(spec),
              "nodes": [{"n": nd.n, "tau_order": nd.spec.tau.order, "g_order": nd.spec.g.order,
                         "fixed_field_degree": nd.fixed_field_degree} for nd in lat.nodes],
              "edges": [list(e) for e in lat.edges]})
        return 0
    if args.action == "gelfand":
        field = _field(args.field)
        x = _element(field, args.element)
        demo = fa.gelfand_demo(field, x)
        emit({"characters": [f"({{0}}, g^{c.index})" for c in demo.characters],
              "transform": [field.serialize(v) for v in demo.transform],
              "isometric": demo.isometric, "equivariant": demo.equivariant,
              "constant": demo.constant})
        return 0

    spec = _spec(args.spec)
    if args.action == "check":
        f = parse_table(spec, load_json(args.fn))
        res = fa.is_member(f, spec)
        emit({"member": res.member, "witness": res.witness, "valid_spec": spec.valid})
        return 0 if res.member else EXIT_VERIFY
    if args.action == "separate":
        if not spec.valid:
            raise fa.InvalidSpec("ord(tau) does not divide ord(g)")
        pts = spec.space.points
        pairs = [(args.x, args.y)] if args.x else [(x, y) for x in pts for y in pts if x != y]
        out = []
        for x, y in pairs:
            if x not in pts or y not in pts:
                raise SchemaError("--x/--y", "not a point of the space")
            sep = fa.separating_function(x, y, spec)
            out.append({"x": x, "y": y, "case": sep.case,
                        "member": fa.is_member(sep.function, spec).member,
                        "function": table_to_json(sep.function, spec.field)})
        emit({"separates": fa.separates(spec), "functions": out})
        return 0
    if args.action == "enumerate":
        members = fa.enumerate_members(spec)
        emit({"count": len(members), "formula": fa.member_count_formula(spec),
              "separates": fa.separates(spec),
              "separates_by_enumeration": fa.separates_by_enumeration(spec, members),
              "members": [table_to_json(f, spec.field) for f in members] if args.list else None})
        return 0
    # residue
    ra = fa.residue_algebra(spec)
    rng = random.Random(args.seed)
    samples = []
    for _ in range(args.samples):
        f = fa.random_member(spec, rng, vmin=0, vmax=2)
        samples.append({"f": table_to_json(f, spec.field),
                        "phi": table_to_json(ra.phi(f), ra.residue_spec.field),
                        "in_J": fa.in_J(f, spec)})
    emit({"residue_field": ra.residue_spec.field.name, "g_bar": ra.residue_spec.g.power,
          "residue_members": fa.member_count_formula(ra.residue_spec), "samples": samples})
    return 0


# -- cheese ----------------------------------------------------------------------


def cmd_cheese(args) -> int:
    from . import swiss_cheese as sc

    geo = sc.Geo(args.geo_precision)
    if args.action == "harness":
        rows = sc.run_harness(args.count, args.seed, args.geo_precision, args.jobs)
        emit({"count": len(rows), "all_ok": all(r.ok for r in rows),
              "rows": [r.__dict__ for r in rows]}, args.out)
        return 0 if all(r.ok for r in rows) else EXIT_VERIFY
    if not args.input:
        raise UsageError("--in is required")
    before = sc.parse_cheese(load_json(args.input))
    res = sc.classicalise(before, geo)
    ok = True
    if args.verify:
        ok = sc.verify_certificate(res.certificate, before, res.cheese, geo)
    payload = {"cheese": res.cheese.to_json(), "steps": res.steps,
               "delta_in": str(res.delta_in), "delta_out": str(res.delta_out),
               "classical": sc.is_classical(res.cheese, geo)[0],
               "certificate": res.certificate.to_json(),
               "verified": ok if args.verify else None}
    if not ok:
        sys.stderr.write("certificate verification failed\n")
        return EXIT_VERIFY
    emit(payload, args.out)
    if args.svg:
        write_atomic(args.svg, sc.render_svg(before, res.cheese))
    return 0


# -- parser -----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        # let negative rationals such as -1/4 through as positionals
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


@functools.lru_cache(maxsize=1)
def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nonarch", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    pa = sub.add_parser("padic", help="p-adic expansions and series")
    pas = pa.add_subparsers(dest="action", required=True, parser_class=_Parser)
    e = pas.add_parser("expand")
    e.add_argument("value")
    e.add_argument("-p", "--prime", type=int, default=5)
    e.add_argument("-n", "--digits", type=int)
    s = pas.add_parser("sum")
    s.add_argument("terms", help="comma-separated rationals")
    s.add_argument("-p", "--prime", type=int, default=5)
    s.add_argument("-n", "--digits", type=int)
    r = pas.add_parser("radius")
    r.add_argument("--pattern", choices=sorted(series.PATTERNS), default="factorial")
    r.add_argument("-p", "--prime", type=int, default=5)
    r.add_argument("-N", "--bound", type=int, default=10_000)
    pa.set_defaults(func=cmd_padic)

    ex = sub.add_parser("ext", help="extension fields, Galois data, stable representatives")
    exs = ex.add_subparsers(dest="action", required=True, parser_class=_Parser)
    v = exs.add_parser("valuation")
    v.add_argument("--field", default="Q5_sqrt2")
    v.add_argument("--a", default="0")
    v.add_argument("--b", default="0")
    gl = exs.add_parser("galois")
    gl.add_argument("--field", default="zeta10")
    gl.add_argument("--element", default="z")
    gl.add_argument("--power", type=int, default=1)
    rp = exs.add_parser("reps")
    rp.add_argument("--field", default="Q5_sqrt2")
    rp.add_argument("--power", type=int, default=1)
    ex.set_defaults(func=cmd_ext)

    al = sub.add_parser("alg", help="basic function algebras")
    als = al.add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = als.add_parser("check")
    c.add_argument("--spec", required=True)
    c.add_argument("--fn", required=True)
    sp = als.add_parser("separate")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--x")
    sp.add_argument("--y")
    en = als.add_parser("enumerate")
    en.add_argument("--spec", required=True)
    en.add_argument("--list", action="store_true")
    la = als.add_parser("lattice")
    la.add_argument("--spec")
    la.add_argument("--field", default="zeta14")
    rs = als.add_parser("residue")
    rs.add_argument("--spec", required=True)
    rs.add_argument("--samples", type=int, default=3)
    rs.add_argument("--seed", type=int, default=0)
    ge = als.add_parser("gelfand")
    ge.add_argument("--field", default="Q5_sqrt2")
    ge.add_argument("--element", default="theta")
    al.set_defaults(func=cmd_alg)

    ch = sub.add_parser("cheese", help="Swiss cheese classicalisation")
    chs = ch.add_subparsers(dest="action", required=True, parser_class=_Parser)
    cl = chs.add_parser("classicalise")
    cl.add_argument("--in", dest="input")
    cl.add_argument("--out")
    cl.add_argument("--svg")
    cl.add_argument("--verify", action="store_true")
    cl.add_argument("--geo-precision", type=int, default=50)
    hs = chs.add_parser("harness")
    hs.add_argument("--count", type=int, default=100)
    hs.add_argument("--seed", type=int, default=0)
    hs.add_argument("--jobs", type=int, default=1)
    hs.add_argument("--out")
    hs.add_argument("--geo-precision", type=int, default=50)
    ch.set_defaults(func=cmd_cheese)
    return p


def main(argv=None) -> int:
    from .function_algebras import InvalidSpec
    from .swiss_cheese import GeometryError, NotInH

    args = build_parser().parse_args(argv)
    if getattr(args, "geo_precision", 50) < 12:
        sys.stderr.write("nonarch: error: --geo-precision must be at least 12\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except SchemaError as e:
        sys.stderr.write(f"nonarch: schema error at {e}\n")
        return EXIT_USAGE
    except UsageError as e:
        sys.stderr.write(f"nonarch: error: {e}\n")
        return EXIT_USAGE
    except InvalidSpec as e:
        sys.stderr.write(f"nonarch: InvalidSpec: {e}\n")
        return EXIT_MATH
    except NotInH as e:
        sys.stderr.write(f"nonarch: NotInH: {e}\n")
        return EXIT_MATH
    except GeometryError as e:
        sys.stderr.write(f"nonarch: GeometryError: {e}\n")
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
