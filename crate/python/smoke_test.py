"""Smoke test for the spinlow_py extension module."""

from fractions import Fraction

import spinlow_py as sl


def main():
    s = sl.Symbol("0,1,6;")
    assert (s.rank, s.defect) == (6, 3)
    d = s.degree("B")
    assert d.degree() == 11 and d.q_valuation() == 1
    # q(q^6-1)(q^5-1)/(2(q+1)) at q=3
    assert d.eval(3) == Fraction(3 * (3**6 - 1) * (3**5 - 1), 2 * 4)
    assert s.shift().degree("B") == d

    one = sl.QPoly(["1"])
    q = sl.QPoly(["0", "1"])
    assert (q * q - one).eval(5) == 24

    chars = sl.unipotent_characters("D-", 4)
    assert len(chars) == 10

    assert sl.orbit_counts("B", 3, 3) == {"singular": 80, "plus": 90, "minus": 72}
    assert [sl.root_trace("B", 3, 3, o) for o in ("singular", "plus", "minus")] == [-1, 9, -9]
    assert sl.fixed_counts("B", 3, 3)["singular"] > 0
    try:
        sl.orbit_counts("B", 6, 5, method="naive", budget=1000)
    except sl.BudgetExceeded:
        pass
    else:
        raise AssertionError("budget not enforced")

    scan = sl.gap_scan("B", 5)
    assert scan["passed"] and scan["exact_match"]

    degrees = {label: (deg, kappa) for label, deg, kappa in sl.brauer_degrees("B", 5, 3, 11)}
    assert degrees["rho_3"] == (14639, "kappa(11, q^5-1)")
    try:
        sl.brauer_degrees("B", 5, 3, 5)
    except sl.HypothesisViolated:
        pass
    else:
        raise AssertionError("guard not enforced")

    rows = sl.verify_suites("all", 8)
    assert all(status in ("PASS", "DEVIATION") for _, status, _ in rows), rows
    print("smoke test passed:", ", ".join(f"{name} {status}" for name, status, _ in rows))


if __name__ == "__main__":
    main()
