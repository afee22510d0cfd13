"""Golden-corpus runner.

A corpus directory holds manifest.json plus the input files it
references.  Each check carries a provenance tag (PAPER, DERIVED or
TRIVIAL) and a machine-comparable expectation; the runner reports one
line per check in manifest order and fails on any mismatch.
"""

from __future__ import annotations

import os

from . import jsonio
from .errors import InputError
from .moduli import moduli_report, stabilizer_dim
from .pencil import SegreSymbol, classify_geometry, segre_symbol
from .stability import segre_semistable
from .surface import singular_surface, structural_class

DEFAULT_ENV = "QC_CORPUS_DIR"


def default_corpus_dir() -> str:
    env = os.environ.get(DEFAULT_ENV)
    if env:
        return env
    here = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    return os.path.join(here, "corpus")


def _check_segre(base, check):
    P = jsonio.pencil_from_json(jsonio.load_json_file(os.path.join(base, check["pencil"])))
    got = str(segre_symbol(P))
    return got == check["expect"], got


def _check_classify(base, check):
    sym = SegreSymbol.from_string(check["symbol"])
    got = classify_geometry(sym).kind
    return got == check["expect"], got


def _check_semistable(base, check):
    P = jsonio.pencil_from_json(jsonio.load_json_file(os.path.join(base, check["pencil"])))
    got = segre_semistable(P)
    return got == check["expect"], got


def _check_stabilizer(base, check):
    P = jsonio.pencil_from_json(jsonio.load_json_file(os.path.join(base, check["pencil"])))
    got = stabilizer_dim(P)
    return got == check["expect"], got


def _check_moduli(base, check):
    rep = moduli_report(SegreSymbol.from_string(check["symbol"]))
    got = {"dim_mqc": rep.dim_mqc, "dim_mss": rep.dim_mss,
           "dim_fiber": rep.dim_fiber, "dim_stab": rep.dim_stab,
           "dim_R": rep.dim_R}
    return got == check["expect"], got


def _check_surface_class(base, check):
    P = jsonio.pencil_from_json(jsonio.load_json_file(os.path.join(base, check["pencil"])))
    sc = structural_class(singular_surface(P))
    got = {"kind": sc.kind,
           "plane_multiplicities": list(sc.plane_multiplicities()),
           "is_square": sc.is_square,
           "square_root_rank": sc.square_root_rank,
           "quadric_rank": sc.quadric_rank}
    return got == check["expect"], got


_CHECKS = {
    "segre": _check_segre,
    "classify": _check_classify,
    "semistable": _check_semistable,
    "stabilizer": _check_stabilizer,
    "moduli": _check_moduli,
    "surface-class": _check_surface_class,
}


def run_corpus(base: str | None = None, name_filter: str | None = None):
    base = base or default_corpus_dir()
    manifest_path = os.path.join(base, "manifest.json")
    if not os.path.exists(manifest_path):
        raise InputError("corpus manifest not found: %s" % manifest_path)
    manifest = jsonio.load_json_file(manifest_path)
    results = []
    for check in manifest.get("checks", ()):
        name = check.get("name", "?")
        if name_filter and name_filter not in name and name_filter != check.get("kind"):
            continue
        kind = check.get("kind")
        runner = _CHECKS.get(kind)
        if runner is None:
            results.append({"name": name, "kind": kind, "ok": False,
                            "provenance": check.get("provenance", "?"),
                            "detail": "unknown check kind"})
            continue
        try:
            ok, got = runner(base, check)
            detail = None if ok else {"expected": check.get("expect"), "got": got}
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, "%s: %s" % (type(exc).__name__, exc)
        results.append({"name": name, "kind": kind, "ok": ok,
                        "provenance": check.get("provenance", "?"),
                        "detail": detail})
    passed = sum(1 for r in results if r["ok"])
    return {
        "corpus": manifest.get("name", base),
        "total": len(results),
        "passed": passed,
        "failed": len(results) - passed,
        "results": results,
    }
