"""Command line front end.

Ring files are line oriented::

    # the cusp
    field QQ
    vars x, y
    ideal y^2 - x^3

``field`` accepts ``QQ``, ``GF(p)`` and ``ZZ/p``.  Several ``ideal`` lines
may appear; each may hold several generators separated by ``;``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field as dc_field

from .decomposition import DEFAULT_MAX_DEGREE, IncompleteDecomposition, UnsupportedDegree, minimal_primes, radical
from .groebner import ResourceLimitExceeded, limits
from .ideals import IdealHandle, krull_dimension
from .normalization import NotReduced, conductor, is_reduced, normalize_reduced
from .polyring import QQ, AffineRing, AlgebraError, Field, ParseError, parse_ambient
from .ringmaps import RingMap
from .seminormalization import (
    InjectivityFailure,
    InvariantViolation,
    NameCollision,
    RecursionContext,
    is_seminormal,
    seminormalize,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_REDUCED = 3
EXIT_LIMIT = 4
EXIT_INTERNAL = 5

COMMANDS = ("seminormalize", "is-seminormal", "normalize", "min-primes", "radical", "conductor", "dim", "check-reduced")

_FIELD_RE = re.compile(r"^(?:QQ|GF\(\s*(\d+)\s*\)|ZZ\s*/\s*(\d+))$")
_IDENT = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class RingFileError(ParseError):
    """A ring file failed to parse; carries 1-based line and column."""

    def __init__(self, message, line, column, source="<input>"):
        AlgebraError.__init__(self, f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.position = column - 1


@dataclass
class RingFile:
    field: Field
    vars: list
    generators: list = dc_field(default_factory=list)  # source texts
    polys: list = dc_field(default_factory=list)

    def ring(self) -> AffineRing:
        return AffineRing(self.field, self.vars, self.polys)


def _parse_field(text):
    m = _FIELD_RE.match(text)
    if not m:
        return None
    p = m.group(1) or m.group(2)
    return QQ if p is None else Field(int(p))


def parse_ring_text(text: str, source: str = "<input>") -> RingFile:
    fld = None
    names = None
    gens = []
    pending = []  # (text, line, column) until vars are known
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        keyword, _, rest = stripped.partition(" ")
        rest_col = indent + len(keyword) + 2 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()

        def fail(msg, col=indent + 1):
            raise RingFileError(msg, lineno, col, source)

        if keyword == "field":
            if fld is not None:
                fail("field declared twice")
            try:
                fld = _parse_field(rest)
            except AlgebraError as exc:
                fail(str(exc), rest_col)
            if fld is None:
                fail(f"unknown field {rest!r}", rest_col)
        elif keyword == "vars":
            if names is not None:
                fail("vars declared twice")
            names = []
            col = rest_col
            for piece in rest.split(","):
                name = piece.strip()
                where = col + (len(piece) - len(piece.lstrip()))
                if not _IDENT.match(name):
                    fail(f"invalid variable name {name!r}", where)
                if name in names:
                    fail(f"duplicate variable {name!r}", where)
                names.append(name)
                col += len(piece) + 1
        elif keyword == "ideal":
            if not rest:
                fail("ideal line without generators")
            col = rest_col
            for piece in rest.split(";"):
                body = piece.strip()
                where = col + (len(piece) - len(piece.lstrip()))
                if body:
                    pending.append((body, lineno, where))
                col += len(piece) + 1
        else:
            fail(f"unknown keyword {keyword!r}")
    if fld is None:
        raise RingFileError("missing field declaration", 1, 1, source)
    if names is None:
        raise RingFileError("missing vars declaration", 1, 1, source)
    polys = []
    for body, lineno, col in pending:
        try:
            polys.append(parse_ambient(body, names, fld))
        except ParseError as exc:
            offset = exc.position or 0
            msg = str(exc).rsplit(" (column", 1)[0]
            raise RingFileError(msg, lineno, col + offset, source) from None
        gens.append(body)
    return RingFile(fld, names, gens, polys)


def parse_ring_file(path: str) -> RingFile:
    with open(path, encoding="utf-8") as fh:
        return parse_ring_text(fh.read(), source=path)


# -- serialization -------------------------------------------------------------


def ring_to_json(R: AffineRing) -> dict:
    return {"field": R.field.name, "vars": list(R.vars), "relations": R.format_relations()}


def ring_from_json(data: dict) -> AffineRing:
    fld = _parse_field(data["field"])
    if fld is None:
        raise ParseError(f"unknown field {data['field']!r}")
    return AffineRing(fld, data["vars"], [parse_ambient(t, data["vars"], fld) for t in data["relations"]])


def map_to_json(f: RingMap, source: str, target: str) -> dict:
    return {"from": source, "to": target, "images": f.to_strings()}


def _ideal_texts(I: IdealHandle) -> list:
    return [g.to_str(I.ring.vars) for g in I.gb.elements] if not I.is_unit() else ["1"]


def _ring_text(R: AffineRing) -> str:
    return repr(R)


def _map_text(label, f: RingMap) -> str:
    pairs = ", ".join(f"{v} -> {t}" for v, t in zip(f.source.vars, f.to_strings()))
    return f"{label}: {pairs}" if pairs else f"{label}: (no variables)"


# -- commands --------------------------------------------------------------------


def _require_reduced(R, args):
    if not args.assume_reduced and not is_reduced(R, seed=args.seed, max_degree=args.factor_degree):
        raise NotReduced("ring is not reduced (radical of the defining ideal is larger)")


def _context(args) -> RecursionContext:
    return RecursionContext(variable_symbol=args.variable, rng_seed=args.seed, max_degree=args.factor_degree)


def run(command: str, rf: RingFile, args) -> tuple:
    """Run one command; returns (json payload, text lines)."""
    R = rf.ring()
    payload = {"command": command, "input": ring_to_json(R)}
    lines = []
    seed, fdeg = args.seed, args.factor_degree
    zero = IdealHandle(R, [])
    if command in ("seminormalize", "is-seminormal"):
        _require_reduced(R, args)
        if command == "is-seminormal":
            flag = is_seminormal(R, _context(args))
            payload["ring"] = ring_to_json(R)
            payload["booleans"] = {"seminormal": flag}
            lines.append("true" if flag else "false")
        else:
            res = seminormalize(R, _context(args))
            flag = res.map_in.is_isomorphism()
            N = res.normalization.normal_ring
            payload["ring"] = ring_to_json(res.sn_ring)
            payload["normal_ring"] = ring_to_json(N)
            payload["maps"] = [map_to_json(res.map_in, "R", "R^SN"), map_to_json(res.map_to_norm, "R^SN", "R^N")]
            payload["booleans"] = {"seminormal": flag, "certified": res.certified}
            lines.append(f"R^SN = {_ring_text(res.sn_ring)}")
            lines.append(_map_text("R -> R^SN", res.map_in))
            lines.append(_map_text("R^SN -> R^N", res.map_to_norm))
            lines.append(f"R^N = {_ring_text(N)}")
    elif command == "normalize":
        _require_reduced(R, args)
        n = normalize_reduced(R, seed=seed, max_degree=fdeg)
        payload["ring"] = ring_to_json(n.normal_ring)
        payload["maps"] = [map_to_json(n.map, "R", "R^N")]
        payload["booleans"] = {"certified": n.certified}
        lines.append(f"R^N = {_ring_text(n.normal_ring)}")
        lines.append(_map_text("R -> R^N", n.map))
    elif command == "conductor":
        _require_reduced(R, args)
        c = conductor(normalize_reduced(R, seed=seed, max_degree=fdeg))
        payload["ring"] = ring_to_json(R)
        payload["ideals"] = {"conductor": _ideal_texts(c)}
        lines.append("conductor: (" + ", ".join(_ideal_texts(c)) + ")")
    elif command == "min-primes":
        mp = minimal_primes(zero, seed=seed, max_degree=fdeg)
        payload["ring"] = ring_to_json(R)
        payload["ideals"] = {"minimal_primes": [_ideal_texts(P) for P in mp]}
        payload["booleans"] = {"certified": mp.all_certified}
        for P in mp:
            lines.append("(" + ", ".join(_ideal_texts(P)) + ")")
    elif command == "radical":
        rad = radical(zero, seed=seed, max_degree=fdeg)
        payload["ring"] = ring_to_json(R)
        payload["ideals"] = {"radical": _ideal_texts(rad)}
        lines.append("radical: (" + ", ".join(_ideal_texts(rad)) + ")")
    elif command == "dim":
        d = krull_dimension(R)
        payload["ring"] = ring_to_json(R)
        payload["integers"] = {"dim": d}
        lines.append(str(d))
    elif command == "check-reduced":
        flag = is_reduced(R, seed=seed, max_degree=fdeg)
        payload["ring"] = ring_to_json(R)
        payload["booleans"] = {"reduced": flag}
        lines.append("true" if flag else "false")
    else:  # argparse already restricts the choices
        raise ValueError(command)
    return payload, lines


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="seminormal", description="Seminormalization of reduced affine rings over QQ and GF(p).")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("ring_file")
    ap.add_argument("--json", action="store_true", help="print a JSON payload instead of text")
    ap.add_argument("--variable", default="Yy", metavar="SYMBOL", help="stem for output variables (default Yy)")
    ap.add_argument("--assume-reduced", action="store_true", help="skip the reducedness check")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    ap.add_argument("--max-degree", type=int, default=64, metavar="N", help="Groebner basis degree ceiling (default 64)")
    ap.add_argument("--max-elements", type=int, default=10000, metavar="N", help="Groebner basis size ceiling (default 10000)")
    ap.add_argument("--factor-degree", type=int, default=DEFAULT_MAX_DEGREE, metavar="N", help=f"largest degree the factorizer accepts (default {DEFAULT_MAX_DEGREE})")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rf = parse_ring_file(args.ring_file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        with limits(max_elements=args.max_elements, max_degree=args.max_degree):
            payload, lines = run(args.command, rf, args)
    except (ParseError, NameCollision) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotReduced as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_REDUCED
    except (ResourceLimitExceeded, UnsupportedDegree, IncompleteDecomposition, RecursionError) as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InvariantViolation, InjectivityFailure, AlgebraError, AssertionError) as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
