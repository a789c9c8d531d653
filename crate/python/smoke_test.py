"""Builds the extension module and exercises it from Python.

    python3 python/smoke_test.py
"""

import importlib
import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def build():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "affine-qschur-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / ("qschur.dll" if sys.platform == "win32" else
                                         "libqschur.dylib" if sys.platform == "darwin" else "libqschur.so")
    out = pathlib.Path(tempfile.mkdtemp())
    shutil.copy(lib, out / ("qschur.pyd" if sys.platform == "win32" else "qschur.so"))
    sys.path.insert(0, str(out))
    return importlib.import_module("qschur")


def main():
    qs = build()
    a, q, one = qs.Laurent.a(), qs.Laurent.q(), qs.Laurent.integer(1)

    # Ring arithmetic.
    assert (q * q ** -1) == one
    assert sorted(qs.Laurent([("1/2", 0, 1), (-1, 1, 0)]).terms()) == [("-1", 1, 0), ("1/2", 0, 1)]
    assert (q * q - one).exact_div(q - one) == q + one
    assert (q + one).exact_div(q - one) is None

    # Quadratic relation T^2 = (q^2 - 1) T + q^2.
    t1 = qs.HeckeElt.generator(1, 3)
    q2 = q * q
    assert t1 * t1 == t1.scale(q2 - one) + qs.HeckeElt.one(3).scale(q2)

    # L_2 = a q^-2 T_1 T_1 = (a - a q^-2) T_1 + a.
    l2 = qs.murphy_l(2, 2)
    assert l2.coeff([2, 1]) == a - a * q ** -2
    assert l2.coeff([1, 2]) == a
    assert l2 == qs.ev_a("X2", 2)

    # X_1 shifts the first index by -n.
    v = qs.TensorElt.basis(3, [1, 2])
    assert qs.act_word(v, "X1").terms() == [([-2, 2], one)]
    assert qs.act_word(qs.act_word(v, "X1"), "X1^-1") == v
    # K_1 counts entries congruent to 1; E_1 turns the last 2 into a 1.
    assert qs.act_left("K1", v) == v.scale(q)
    assert qs.act_left("E1", v) == qs.TensorElt.basis(3, [1, 1])
    assert qs.act_left("K1", qs.TensorElt.basis(3, [1, 1])).coeff([1, 1]) == q2

    # Drinfeld polynomials and multisegments for (2,1).
    lam = qs.Partition([2, 1])
    dt = qs.q_from_lambda(lam, 4)
    assert dt.degrees == [2, 1, 0, 0]
    assert dt.poly(2) == [one, -(a * q ** -2)]
    assert dt.is_dominant()
    s = qs.s_lambda_a(lam)
    assert s.partition() == lam.dual()
    assert qs.partial_map(s, 4) == dt
    assert qs.partial_inverse(dt) == s
    assert qs.central_scalar(lam, 1) == a * q2 + a + a * q ** -2

    # Suites return JSON reports.
    rep = json.loads(qs.verify("qgl", n=2, r=2))
    assert rep["status"] == "pass" and rep["failures"] == [], rep
    bad = json.loads(qs.verify("hecke", n=2, r=2, variant="flipped-middle-exponent"))
    assert bad["status"] == "fail" and bad["failures_total"] > 0
    assert json.loads(qs.verify("eval-compat", which="Fn", n=2, r=2))["status"] == "report-only"
    assert qs.verify("all", n=2, r=2, no_timing=True) == qs.verify("all", n=2, r=2, no_timing=True)

    for call, exc in [
        (lambda: qs.verify("jm", r=9), NotImplementedError),
        (lambda: qs.Partition([1, 2]), ValueError),
        (lambda: qs.q_from_lambda(qs.Partition([1, 1, 1]), 2), ValueError),
        (lambda: qs.act_left("E7", v), ValueError),
    ]:
        try:
            call()
        except exc:
            pass
        else:
            raise AssertionError(f"expected {exc.__name__}")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
