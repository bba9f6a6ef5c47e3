"""Task execution, deterministic report assembly, and revalidation.

The machine-readable report is a pure function of the session document
and the caps: no timestamps, no environment data, keys emitted in a fixed
order.  Certificates carry enough data (bases, differentials, membership
witnesses) for `revalidate_report` to recheck them with independent
engine passes.
"""

import json
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .caps import CapExceeded, ComputationCancelled
from .fields import QQ
from .graphs import graph_rank, hh_graph
from .groebner import FreeVector, buchberger, verify_groebner
from .homology import (
    INFINITE_DEPTH,
    depth,
    depth_formula_check,
    free_resolution,
    is_torsion,
    pd,
    tor,
    ext,
)
from .modules import PresentedModule, localized_rank, minimize, module_from_rows
from .parse import parse_poly
from .rigidity import rigidity_search
from .rings import RIdeal
from .serre import is_reflexive, n_torsion_free
from .session import Session, SessionError, rigidity_assertion_from
from .verify import PIPELINES

EXIT_OK, EXIT_VERIFICATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _field_spec(fld):
    if fld == QQ:
        return "QQ"
    return {"prime": fld.characteristic}


def _vector_strings(v: FreeVector):
    return [str(p) for p in v.coords]


def _module_payload(m: PresentedModule):
    return {
        "generators": m.num_generators,
        "generator_degrees": list(m.gen_degrees),
        "matrix": m.matrix_strings(),
    }


def _depth_value(d):
    return "infinity" if d == INFINITE_DEPTH else d


def _get_module(session, name):
    if name not in session.modules:
        raise SessionError(f"task references unknown module {name!r}")
    return session.modules[name]


def _task_name(task, index):
    return task.get("name", f"task-{index}")


def run_task(session: Session, task: dict, index: int) -> dict:
    kind = task["task"]
    caps = session.caps.fresh()
    out = {"name": _task_name(task, index), "kind": kind}
    try:
        result, ok = _dispatch(session, task, caps)
        out["result"] = result
        out["status"] = "ok" if ok else "mismatch"
    except (CapExceeded, ComputationCancelled) as e:
        out["status"] = "cap_exceeded"
        out["result"] = {"error": str(e)}
    except SessionError:
        raise
    return out


def _expect_check(task, key, value):
    """True when no expectation is present or it matches."""
    if key not in task:
        return True
    return task[key] == value


def _dispatch(session: Session, task: dict, caps):
    kind = task["task"]
    ring = session.ring
    if kind in ("reflexive", "torsionless"):
        m = _get_module(session, task["module"])
        rep = is_reflexive(m, caps)
        verdict = rep.reflexive if kind == "reflexive" else rep.torsionless
        result = {
            "module": task["module"],
            "verdict": verdict,
            "certificate": {
                "ext_verdicts": list(rep.ext_verdicts),
                "biduality_kernel_generators": rep.biduality_kernel_generators,
                "biduality_cokernel_generators": rep.biduality_cokernel_generators,
            },
            "presentation": _module_payload(minimize(m, caps)),
        }
        return result, _expect_check(task, "expect", verdict)
    if kind == "ntf":
        m = _get_module(session, task["module"])
        rep = n_torsion_free(m, int(task.get("n", 1)), caps)
        result = {
            "module": task["module"],
            "verdicts": list(rep.verdicts),
            "interpretation": rep.interpretation,
        }
        return result, _expect_check(task, "expect", list(rep.verdicts))
    if kind in ("tor", "ext"):
        left = _get_module(session, task["left"])
        right = _get_module(session, task["right"])
        if "range" in task:
            lo, hi = task["range"]
        else:
            lo = hi = int(task.get("i", 1))
        fn = tor if kind == "tor" else ext
        entries = []
        all_zero = True
        for i in range(lo, hi + 1):
            rep = fn(left, right, i, caps)
            all_zero = all_zero and rep.is_zero
            entries.append({
                "i": i,
                "is_zero": rep.is_zero,
                "module": _module_payload(rep.module),
                "hilbert_series": str(rep.module.hilbert_series(caps)),
                "certificate": {
                    "kernel_generators": [_vector_strings(v)
                                          for v in rep.kernel_generators],
                    "relations": [_vector_strings(v)
                                  for v in rep.relation_vectors],
                },
            })
        result = {"left": task["left"], "right": task["right"], "values": entries}
        return result, _expect_check(task, "expect_zero", all_zero)
    if kind == "resolve":
        m = _get_module(session, task["module"])
        length = int(task.get("length", caps.resolution_length))
        res = free_resolution(m, length, caps)
        result = {
            "module": task["module"],
            "betti": res.betti_numbers(),
            "shifts": [list(s) for s in res._shifts],
            "differentials": [
                [_vector_strings(c) for c in res.differential(k)]
                for k in range(1, res.length_computed() + 1)
            ],
            "complete": res.complete,
            "periodicity_onset": res.periodicity_onset(),
            "d_squared_zero": res.check_d_squared(),
            "minimal": res.is_minimal(),
        }
        return result, True
    if kind == "pd":
        m = _get_module(session, task["module"])
        r = pd(m, caps)
        result = {
            "module": task["module"],
            "value": r.value,
            "above_cap": r.above_cap,
            "periodicity_onset": r.periodicity_onset,
        }
        expected_ok = _expect_check(task, "expect", r.value)
        return result, expected_ok
    if kind == "depth":
        m = _get_module(session, task["module"])
        d = depth(m, caps)
        return (
            {"module": task["module"], "value": _depth_value(d)},
            _expect_check(task, "expect", _depth_value(d)),
        )
    if kind == "depth-formula":
        left = _get_module(session, task["left"])
        right = _get_module(session, task["right"])
        rep = depth_formula_check(left, right, task.get("window"), caps)
        result = {
            "left": task["left"],
            "right": task["right"],
            "depths": {
                "left": _depth_value(rep.depth_left),
                "right": _depth_value(rep.depth_right),
                "ring": _depth_value(rep.depth_ring),
                "tensor": _depth_value(rep.depth_tensor),
            } if rep.holds is not None else None,
            "holds": rep.holds,
            "tor_window": rep.vanishing.window,
            "tor_certificate": rep.vanishing.certificate,
        }
        return result, _expect_check(task, "expect", rep.holds)
    if kind == "is-torsion":
        m = _get_module(session, task["module"])
        verdict = is_torsion(m, caps)
        return (
            {"module": task["module"], "verdict": verdict},
            _expect_check(task, "expect", verdict),
        )
    if kind == "minimal-primes":
        primes = ring.minimal_primes(caps=caps)
        return (
            {"primes": [[str(g) for g in p.generators] for p in primes],
             "status": [p.prime_status for p in primes]},
            True,
        )
    if kind == "hh-graph":
        g = hh_graph(ring, caps)
        return ({"graph": g.describe()},
                _expect_check(task, "expect_connected", g.is_connected()))
    if kind == "graph-rank":
        m = _get_module(session, task["module"])
        g = hh_graph(ring, caps)
        r = graph_rank(m, g, caps)
        result = {
            "module": task["module"],
            "kind": r.kind,
            "rank": r.rank,
            "vertex_ranks": list(r.vertex_ranks),
            "witness": r.witness,
        }
        return result, _expect_check(task, "expect", r.kind)
    if kind == "localized-rank":
        m = _get_module(session, task["module"])
        prime = RIdeal(
            ring,
            tuple(parse_poly(t, ring.sig) for t in task["prime"]),
            prime_status="asserted",
        )
        r = localized_rank(m, prime, caps)
        result = {
            "module": task["module"],
            "prime": task["prime"],
            "kind": r.kind,
            "rank": r.rank,
            "witness": r.witness,
        }
        return result, _expect_check(task, "expect", r.kind)
    if kind == "verify":
        key = task.get("pipeline")
        if key not in PIPELINES:
            raise SessionError(f"unknown pipeline {key!r}")
        name, fn = PIPELINES[key]
        left = _get_module(session, task["left"])
        right = _get_module(session, task["right"])
        kwargs = {"caps": caps, "window": task.get("window")}
        if key == "thm3.1":
            rep = fn(left, right, int(task.get("n", 1)),
                     rigidity_assertion_from(task.get("rigidity")), **kwargs)
        elif key == "cor4.6":
            rep = fn(left, right, int(task.get("n", 1)),
                     rigidity_assertion_from(task.get("rigidity")),
                     height_one_primes=session.height_one_primes, **kwargs)
        elif key == "thm1.2":
            rep = fn(left, right, height_one_primes=session.height_one_primes,
                     **kwargs)
        else:
            rep = fn(left, right, **kwargs)
        ok = rep.verdict != "counterexample-candidate"
        ok = ok and _expect_check(task, "expect_verdict", rep.verdict)
        return rep.as_dict(), ok
    if kind == "rigidity-search":
        names = task.get("catalog") or sorted(session.modules)
        catalog = [_get_module(session, n) for n in names]
        window = int(task.get("window", 3))
        violations = rigidity_search(ring, catalog, window, caps)
        result = {
            "catalog": list(names),
            "window": window,
            "violations": [
                {"left": names[v.left], "right": names[v.right],
                 "kind": v.kind, "tor_zero_pattern": list(v.tor_pattern)}
                for v in violations
            ],
        }
        ok = _expect_check(task, "expect_empty", not violations)
        return result, ok
    raise SessionError(f"unhandled task kind {kind!r}")


def run_session(session: Session, workers: int = 4) -> dict:
    """Execute every task and assemble the deterministic report."""
    ring = session.ring
    tasks = list(session.tasks)
    results = [None] * len(tasks)
    input_error = None

    def run(i):
        return run_task(session, tasks[i], i)

    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run, i) for i in range(len(tasks))]
            for i, fut in enumerate(futures):
                try:
                    results[i] = fut.result()
                except SessionError as e:
                    input_error = input_error or str(e)
    else:
        for i in range(len(tasks)):
            try:
                results[i] = run(i)
            except SessionError as e:
                input_error = input_error or str(e)
    if input_error is not None:
        return {
            "schema": 1,
            "tool": {"name": "reflextor", "version": __version__},
            "error": input_error,
            "exit_code": EXIT_INPUT,
        }
    statuses = [r["status"] for r in results]
    if any(s == "cap_exceeded" for s in statuses):
        exit_code = EXIT_CAP
    elif any(s == "mismatch" for s in statuses):
        exit_code = EXIT_VERIFICATION
    else:
        exit_code = EXIT_OK
    gb = ring.ideal.gb()
    report = {
        "schema": 1,
        "tool": {"name": "reflextor", "version": __version__},
        "caps": {
            "pairs": session.caps.max_pairs,
            "degree": session.caps.max_degree,
            "resolution": session.caps.resolution_length,
            "tor_window": session.caps.tor_window,
        },
        "ring": {
            "field": _field_spec(ring.sig.field),
            "vars": list(ring.sig.variables),
            "ideal": [str(g) for g in ring.ideal.generators],
            "groebner_basis": [str(g) for g in gb.generators],
            "hypersurface": ring.hypersurface,
            "dim": ring.dim,
        },
        "tasks": results,
        "exit_code": exit_code,
    }
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def render_text(report: dict) -> str:
    lines = [f"reflextor {report['tool']['version']} report"]
    if "error" in report:
        lines.append(f"input error: {report['error']}")
        return "\n".join(lines) + "\n"
    ring = report["ring"]
    lines.append(
        f"ring: {ring['field'] if isinstance(ring['field'], str) else ring['field']}"
        f"[{','.join(ring['vars'])}] / ({', '.join(ring['ideal']) or '0'})"
        f"  dim {ring['dim']}"
        + ("  hypersurface" if ring["hypersurface"] else "")
    )
    for t in report["tasks"]:
        mark = {"ok": "ok", "mismatch": "MISMATCH", "cap_exceeded": "CAP"}[t["status"]]
        summary = _summarize(t)
        lines.append(f"  [{mark:8}] {t['name']} ({t['kind']}): {summary}")
    lines.append(f"exit code: {report['exit_code']}")
    return "\n".join(lines) + "\n"


def _summarize(t):
    r = t.get("result", {})
    kind = t["kind"]
    if "error" in r:
        return r["error"]
    if kind in ("reflexive", "torsionless", "is-torsion"):
        return f"verdict {r['verdict']}"
    if kind == "ntf":
        return f"verdicts {r['verdicts']}"
    if kind in ("tor", "ext"):
        flags = [e["is_zero"] for e in r["values"]]
        return f"is_zero {flags}"
    if kind == "resolve":
        return f"betti {r['betti']} complete={r['complete']}"
    if kind == "pd":
        return "AboveCap" if r["above_cap"] else f"pd {r['value']}"
    if kind == "depth":
        return f"depth {r['value']}"
    if kind == "depth-formula":
        return f"holds {r['holds']}"
    if kind == "hh-graph":
        return f"connected {r['graph']['connected']}"
    if kind == "graph-rank":
        return f"{r['kind']} rank={r['rank']} vertices={r['vertex_ranks']}"
    if kind == "localized-rank":
        return f"{r['kind']} rank={r['rank']}"
    if kind == "verify":
        return f"verdict {r['verdict']}"
    if kind == "rigidity-search":
        return f"{len(r['violations'])} violation(s)"
    if kind == "minimal-primes":
        return f"{len(r['primes'])} prime(s)"
    return ""


# ----------------------------------------------------------------------
# the independent verifier pass


def revalidate_report(report: dict) -> list:
    """Recheck every replayable certificate; returns a list of problems."""
    problems = []
    if "error" in report:
        return problems
    ringspec = report["ring"]
    from .fields import GF
    from .poly import RingSignature
    from .rings import QuotientRing

    fld = QQ if ringspec["field"] == "QQ" else GF(ringspec["field"]["prime"])
    sig = RingSignature(fld, tuple(ringspec["vars"]))
    gens = [parse_poly(t, sig) for t in ringspec["ideal"]]
    ring = QuotientRing(sig, gens)
    if gens:
        gb = buchberger(gens)
        if not verify_groebner(gb):
            problems.append("ring basis failed the S-pair recheck")
        if [str(g) for g in gb.generators] != ringspec["groebner_basis"]:
            problems.append("ring basis drifted from the embedded certificate")
    for t in report["tasks"]:
        r = t.get("result", {})
        if t["kind"] == "resolve" and "differentials" in r:
            problems.extend(_recheck_resolution(ring, r, t["name"]))
        if t["kind"] in ("tor", "ext"):
            for entry in r.get("values", []):
                problems.extend(
                    _recheck_membership(ring, entry, f"{t['name']}[i={entry['i']}]")
                )
        for payload in _presentations_in(r):
            try:
                rows = [[parse_poly(s, sig) for s in row] for row in payload["matrix"]]
                module_from_rows(ring, rows, tuple(payload["generator_degrees"]))
            except Exception as e:
                problems.append(f"{t['name']}: embedded presentation invalid: {e}")
    return problems


def _presentations_in(result):
    if isinstance(result, dict):
        if "matrix" in result and "generator_degrees" in result:
            yield result
        for v in result.values():
            yield from _presentations_in(v)
    elif isinstance(result, list):
        for v in result:
            yield from _presentations_in(v)


def _recheck_resolution(ring, r, name):
    problems = []
    sig = ring.sig
    diffs = []
    for step in r["differentials"]:
        cols = [
            FreeVector(sig, tuple(parse_poly(s, sig) for s in col)) for col in step
        ]
        diffs.append(cols)
    for k in range(1, len(diffs)):
        prev, cur = diffs[k - 1], diffs[k]
        for col in cur:
            acc = FreeVector.zero(sig, prev[0].rank if prev else 0)
            for i, p in enumerate(col.coords):
                if not p.is_zero:
                    acc = acc + prev[i].poly_mul(p)
            if not ring.reduce_vector(acc).is_zero:
                problems.append(f"{name}: d.d != 0 at step {k + 1}")
    if r.get("minimal"):
        for step in diffs:
            for col in step:
                for p in col.coords:
                    if not p.is_zero and p.total_degree() == 0:
                        problems.append(f"{name}: scalar entry in a minimal resolution")
    return problems


def _recheck_membership(ring, entry, name):
    problems = []
    sig = ring.sig
    cert = entry.get("certificate", {})
    kgens = [
        FreeVector(sig, tuple(parse_poly(s, sig) for s in col))
        for col in cert.get("kernel_generators", [])
    ]
    rels = [
        FreeVector(sig, tuple(parse_poly(s, sig) for s in col))
        for col in cert.get("relations", [])
    ]
    if not kgens:
        return problems
    from .modules import ring_membership_span

    span = ring_membership_span(ring, kgens[0].rank, rels)
    contained = all(span.contains(k) for k in kgens)
    if contained != entry["is_zero"]:
        problems.append(f"{name}: membership recheck disagrees with is_zero")
    return problems
