"""Smoke test for the ldgm_bounds Python extension.

Uses an installed module if there is one (``maturin develop`` in
``crates/python``), otherwise the library built by
``cargo build -p ldgm-bounds-py --release``.
"""

import importlib
import math
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    try:
        return importlib.import_module("ldgm_bounds")
    except ImportError:
        pass
    for profile in ("release", "debug"):
        built = ROOT / "target" / profile / "libldgm_bounds_py.so"
        if built.exists():
            tmp = pathlib.Path(tempfile.mkdtemp())
            shutil.copy(built, tmp / "ldgm_bounds.so")
            sys.path.insert(0, str(tmp))
            return importlib.import_module("ldgm_bounds")
    sys.exit("ldgm_bounds not found: build it with `cargo build -p ldgm-bounds-py --release`")


def check(name, ok):
    print(("PASS " if ok else "FAIL ") + name)
    return ok


def main():
    lb = load()
    results = []

    results.append(check("binary entropy", abs(lb.binary_entropy(0.11) - 0.4999159581645) < 1e-12))
    results.append(check("shannon", abs(lb.shannon_distortion(0.5) - 0.110027) < 1e-5))

    reg2 = lb.DegreeDistribution.regular(2)
    d_half = lb.counting_bound_distortion(reg2, 0.5)
    results.append(check("counting bound at 1/2", abs(d_half - 0.115) < 1e-3))
    results.append(check("string degrees", lb.counting_bound_distortion("2:1", 0.5) == d_half))
    results.append(check(
        "test channel agrees",
        abs(lb.test_channel_distortion_bound(2, 0.5) - d_half) < 1e-6,
    ))
    results.append(check("dwr below counting", lb.dwr_distortion_bound(2, 0.6)
                         <= lb.counting_bound_distortion("poisson:2", 0.6) + 1e-6))
    results.append(check("conjecture", 0 < lb.conjectured_exit_distortion(2, 0.7) < 0.5))

    mixed = lb.DegreeDistribution("1:0.5,3:0.5")
    results.append(check("average degree", mixed.average_degree == 2.0))

    code = lb.LdgmCode.sample(14, 7, "regular:2", seed=3)
    enum = code.weight_enumerator()
    results.append(check("enumerator total", sum(enum) == 2 ** code.n))
    report = code.verify()
    results.append(check("verification", report.passed and report.optimal_distortion >= d_half))
    results.append(check("code text round trip",
                         lb.LdgmCode.from_text(code.to_text()).adjacency == code.adjacency))

    n_w = lb.coefficient_lower_bound(reg2, 100)
    results.append(check("big N(w)", n_w[-1] == 2 ** 100 and n_w[50] == sum(
        math.comb(100, g) for g in range(26))))

    pts = lb.curve("counting", 0.4, 0.9, 6, degrees="regular:2")
    results.append(check("curve", len(pts) == 6 and all(a >= b for (a, _), (b, _) in zip(pts, pts[1:]))))

    try:
        lb.binary_entropy(1.5)
        results.append(check("domain errors raise", False))
    except ValueError:
        results.append(check("domain errors raise", True))

    failed = results.count(False)
    print(f"smoke test: {len(results) - failed} passed, {failed} failed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
