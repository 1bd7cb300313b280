"""Smoke test for the pyncborel extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import json

import pyncborel as nc


def main():
    x1, x2 = nc.Poly("x1"), nc.Poly("x2")
    assert str(x2 * x1) == "x1*x2 - 2*lam*x2"
    assert str(x1.commutator(x2)) == "2*lam*x2"
    assert not (x1 ** 2).is_central()

    assert str(nc.Poly("x1^2").d()) == "dx1*(2*x1 - lam)"
    assert str(nc.Poly("x1^2").d("paper")) == "dx1*(2*x1 - 2*lam)"
    assert [str(p) for p in nc.Poly("x2^2").partials()] == ["0", "2*x2", "0"]
    assert str(nc.Poly("x2^2").box()) == "2"

    one_form = nc.Form("dx1*x1")
    assert one_form.degree == 1
    assert one_form.d().degree == 2
    assert str(one_form.primitive()) == "1/2*x1^2 + 1/2*lam*x1"
    assert str(nc.Form("dx1").star()) == "dx2/\\dx3"
    assert nc.Form("dx1").wedge(nc.Form("dx2")) == nc.Form("dx1 /\\ dx2")
    assert isinstance(nc.parse("dx3 /\\ dx1"), nc.Form)
    assert isinstance(nc.parse("x3*x1"), nc.Poly)

    assert str(x2.act("J1")) == "2*x2"
    assert str(x2.act("t12")) == "lam"

    rows = nc.cohomology(2)
    assert sum(r[4] for r in rows) == 1

    residuals = nc.wave_residuals(2, "plain", "d", "consistent")
    assert str(residuals[2]) == "-1/2*lam*k1^2*dx1 - lam*k1*k2*dx2 - lam*k1*k3*dx3"

    report = json.loads(nc.report_json())
    assert report["schema"] == "ncborel/1"
    assert len(report["entries"]) >= 20

    for bad in ["x1 +", "x1 /\\ dx2"]:
        try:
            nc.parse(bad)
        except nc.ParseError:
            pass
        else:
            raise AssertionError(bad)
    try:
        nc.Form("dx1*x2").primitive()
    except nc.DomainError:
        pass
    else:
        raise AssertionError("non-closed form has no primitive")

    print("pyncborel smoke test passed")


if __name__ == "__main__":
    main()
