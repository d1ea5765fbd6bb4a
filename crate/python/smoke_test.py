#!/usr/bin/env python3
"""Smoke test for the stringcentre_py extension module.

Builds nothing itself: it looks for the compiled cdylib under target/
(release preferred), copies it next to a temp dir as an importable module,
and runs a handful of exact checks. Build first with

    cargo build -p stringcentre-py --release
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def locate_extension():
    names = ["libstringcentre_py.so", "stringcentre_py.so", "stringcentre_py.dylib"]
    for profile in ("release", "debug"):
        for name in names:
            p = ROOT / "target" / profile / name
            if p.exists():
                return p
    sys.exit("extension not found; run `cargo build -p stringcentre-py --release` first")


def main():
    ext = locate_extension()
    tmp = Path(tempfile.mkdtemp(prefix="stringcentre-smoke-"))
    shutil.copy(ext, tmp / "stringcentre_py.so")
    sys.path.insert(0, str(tmp))
    import stringcentre_py as sc

    # root data: Bourbaki G2 Cartan matrix and the A1 coweight norm
    assert sc.cartan_matrix("G", 2) == [[2, -1], [-3, 2]]
    assert sc.coweight_norm("A", 1, ["1/2"]) == "1/2"
    factors, lifts = sc.centre_of("A", 2)
    assert factors == ["3"] and len(lifts) == 1

    # simply-connected centres: the SU(2) ladder mod 4
    names = ["VecZ2", "Semi", "sVec", "SemiBar"]
    for k in range(8):
        assert sc.sc_centre("A", 1, k).name() == names[k % 4], k

    # quadratic form counts and the soft cohomology orders
    assert len(sc.enumerate_qforms(4)) == 8
    assert sc.soft_h3_order(4) == 2
    assert sc.soft_h3_order(5) == 1

    # torus centre: J = [[-2]] has finite part Z/4 with q(1) = 1/8
    t = sc.torus_centre([[-2]])
    assert t.invariant_factors() == ["4"]
    assert t.finite_form().eval([1]) == "1/8"
    assert t.vector_dim == 1 and t.torus_dim == 0

    # full pipeline: SO(4) at (2,2) is sVec, (1,1) does not descend
    so4 = {
        "version": 1,
        "simples": [
            {"series": "A", "rank": 1, "level": 2},
            {"series": "A", "rank": 1, "level": 2},
        ],
        "kernel": [{"simples": [[1], [1]]}],
    }
    report, code = sc.compute(json.dumps(so4))
    report = json.loads(report)
    assert code == 0 and report["name"] == "sVec", report
    so4["simples"][0]["level"] = 1
    so4["simples"][1]["level"] = 1
    report, code = sc.compute(json.dumps(so4))
    assert code == 2 and not json.loads(report)["descends"]

    # oracle: trivial class on Z/3 is the hyperbolic double
    factors, form = sc.brute_centre(3, 0)
    assert factors == ["3", "3"]
    assert sc.iso_forms(form, sc.hyperbolic_form([3]))
    assert json.loads(sc.oracle(2, 1))["exact_sequence"] is True

    # table reproduction carries both MATCH and FLAG rows
    rows = json.loads(sc.table1(2))["rows"]
    verdicts = {e["matched"] for r in rows for e in r["entries"]}
    assert verdicts == {True, False}

    print("stringcentre_py smoke test: OK")


if __name__ == "__main__":
    main()
