"""JSON session files: a ring block, named module expressions, and tasks.

The session format (schema 1) is a single JSON document.  Polynomials are
strings in the parser grammar, matrices are row-major arrays of strings,
and module expressions form a DAG over the exported constructors.  Tasks
may carry an "expect" field; a mismatch is a verification failure.
"""

import json
from dataclasses import dataclass, field

from .caps import Caps
from .fields import GF, QQ
from .modules import (
    cyclic,
    dual,
    free_module,
    minimize,
    module_from_rows,
    pushforward,
    syzygy,
    tensor,
    transpose,
)
from .parse import PolyParseError, parse_poly
from .rings import QuotientRing, RIdeal, RingConstructionError, UnsupportedIdealClass
from .verify import RigidityAssertion


class SessionError(ValueError):
    """Malformed session document; maps to exit code 2."""


MODULE_OPS = (
    "cyclic", "coker", "free", "transpose", "dual", "tensor",
    "syzygy", "pushforward", "minimize",
)

TASK_KINDS = (
    "reflexive", "torsionless", "ntf", "tor", "ext", "resolve", "pd",
    "depth", "depth-formula", "is-torsion", "hh-graph", "graph-rank",
    "verify", "rigidity-search", "minimal-primes", "localized-rank",
)


@dataclass
class Session:
    ring: QuotientRing
    modules: dict
    tasks: list
    caps: Caps
    height_one_primes: list = field(default_factory=list)
    source: dict = None


def _parse_field(spec):
    if spec in ("QQ", "Q", "rationals", None):
        return QQ
    if isinstance(spec, dict) and "prime" in spec:
        return GF(int(spec["prime"]))
    raise SessionError(f"unrecognized field spec: {spec!r}")


def _parse_caps(spec, overrides=None) -> Caps:
    spec = dict(spec or {})
    spec.update({k: v for k, v in (overrides or {}).items() if v is not None})
    caps = Caps()
    if "pairs" in spec:
        caps.max_pairs = int(spec["pairs"])
    if "degree" in spec:
        caps.max_degree = int(spec["degree"])
    if "resolution" in spec:
        caps.resolution_length = int(spec["resolution"])
    if "tor_window" in spec:
        caps.tor_window = int(spec["tor_window"])
    return caps


def load_session(document, caps_overrides=None) -> Session:
    """Validate and build a session from a parsed JSON document."""
    if not isinstance(document, dict):
        raise SessionError("session document must be a JSON object")
    if document.get("schema") != 1:
        raise SessionError("unsupported schema (expected \"schema\": 1)")
    ringspec = document.get("ring")
    if not isinstance(ringspec, dict):
        raise SessionError("missing ring block")
    fld = _parse_field(ringspec.get("field"))
    variables = ringspec.get("vars")
    if not variables or not isinstance(variables, list):
        raise SessionError("ring block needs a nonempty vars list")
    from .poly import RingSignature

    try:
        sig = RingSignature(fld, tuple(variables))
    except ValueError as e:
        raise SessionError(f"bad variable list: {e}") from None
    caps = _parse_caps(document.get("caps"), caps_overrides)

    def poly(text, where):
        try:
            return parse_poly(text, sig)
        except PolyParseError as e:
            raise SessionError(f"bad polynomial in {where}: {text!r}: {e}") from None

    ideal_gens = [poly(t, "ring.ideal") for t in ringspec.get("ideal", [])]
    try:
        ring = QuotientRing(sig, ideal_gens, caps)
    except (RingConstructionError, ValueError) as e:
        raise SessionError(f"ring construction failed: {e}") from None

    if "minimal_prime_candidates" in ringspec:
        candidates = [
            [poly(t, "minimal_prime_candidates") for t in group]
            for group in ringspec["minimal_prime_candidates"]
        ]
        try:
            ring.minimal_primes(candidates=candidates, caps=caps)
        except UnsupportedIdealClass as e:
            raise SessionError(f"minimal prime candidates rejected: {e}") from None
    elif "factors" in ringspec:
        try:
            ring.minimal_primes(
                factors=[poly(t, "ring.factors") for t in ringspec["factors"]],
                caps=caps,
            )
        except UnsupportedIdealClass as e:
            raise SessionError(f"factor list rejected: {e}") from None

    height_one = [
        RIdeal(ring, tuple(poly(t, "height_one_primes") for t in group),
               prime_status="asserted")
        for group in ringspec.get("height_one_primes", [])
    ]

    modules = _evaluate_modules(document.get("modules", {}), ring, poly, caps)
    tasks = document.get("tasks", [])
    if not isinstance(tasks, list):
        raise SessionError("tasks must be a list")
    for t in tasks:
        if not isinstance(t, dict) or t.get("task") not in TASK_KINDS:
            raise SessionError(f"unrecognized task: {t!r}")
    return Session(ring, modules, tasks, caps, height_one, document)


def load_session_file(path, caps_overrides=None) -> Session:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            document = json.load(fh)
    except FileNotFoundError:
        raise SessionError(f"session file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise SessionError(f"invalid JSON: {e}") from None
    return load_session(document, caps_overrides)


def _evaluate_modules(specs, ring, poly, caps):
    if not isinstance(specs, dict):
        raise SessionError("modules must be an object of named expressions")
    resolved = {}
    in_progress = set()

    def build(name):
        if name in resolved:
            return resolved[name]
        if name not in specs:
            raise SessionError(f"unknown module name {name!r}")
        if name in in_progress:
            raise SessionError(f"module expressions form a cycle at {name!r}")
        in_progress.add(name)
        value = _evaluate_expr(specs[name], name, ring, poly, caps, build)
        in_progress.discard(name)
        resolved[name] = value
        return value

    for name in specs:
        build(name)
    return resolved


def _evaluate_expr(expr, name, ring, poly, caps, build):
    if not isinstance(expr, dict) or "op" not in expr:
        raise SessionError(f"module {name!r} needs an object with an \"op\"")
    op = expr["op"]
    if op not in MODULE_OPS:
        raise SessionError(f"module {name!r}: unknown op {op!r}")
    if op == "cyclic":
        gens = tuple(poly(t, f"module {name}") for t in expr.get("ideal", []))
        return cyclic(ring, gens)
    if op == "free":
        return free_module(ring, tuple(expr.get("degrees", [0])))
    if op == "coker":
        matrix = expr.get("matrix")
        degrees = expr.get("degrees")
        if not matrix or degrees is None:
            raise SessionError(f"module {name!r}: coker needs matrix and degrees")
        rows = [[poly(t, f"module {name}") for t in row] for row in matrix]
        return module_from_rows(ring, rows, tuple(degrees))
    if op == "tensor":
        args = expr.get("args", [])
        if len(args) != 2:
            raise SessionError(f"module {name!r}: tensor needs two args")
        return tensor(build(args[0]), build(args[1]))
    base = build(expr.get("of", ""))
    if op == "transpose":
        return transpose(base, caps)
    if op == "dual":
        return dual(base, caps)
    if op == "minimize":
        return minimize(base, caps)
    if op == "pushforward":
        return pushforward(base, caps).module
    if op == "syzygy":
        return syzygy(base, int(expr.get("n", 1)), caps)
    raise SessionError(f"module {name!r}: unhandled op {op!r}")


def rigidity_assertion_from(spec):
    if spec is None:
        return None
    if isinstance(spec, str):
        return RigidityAssertion(spec)
    if isinstance(spec, dict) and "kind" in spec:
        return RigidityAssertion(spec["kind"], spec.get("detail", ""))
    raise SessionError(f"bad rigidity assertion: {spec!r}")
