"""Smoke test for the qutrit333 extension module.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`,
then run `python python/smoke_test.py`.
"""

import json
import math

import qutrit333 as q


def close(x, y, rel=1e-10):
    return abs(x - y) <= rel * abs(y)


def main():
    m6, m9, m12 = 1 / 18, math.sqrt(6) / 3888, 1 / 7776
    m_delta = math.sqrt(3) / (2**19 * 3**14)

    ah = q.State.named("aharonov")
    assert len(ah) == 27 and close(ah.norm(), 1.0)
    a6, a9, a12, ad = ah.invariants().magnitudes()
    assert close(a6, m6) and close(a9, m9) and close(a12, m12), (a6, a9, a12)
    assert ad < 1e-12 * m_delta

    # Matrix path against closed forms on a semi-simple state.
    a, b, c = 0.3, -0.5, 0.8
    mat = q.State.semisimple(a, b, c).invariants()
    cf = q.closed_form(a, b, c)
    for name in ("i6", "i9", "i12"):
        x, y = getattr(mat, name), getattr(cf, name)
        assert abs(x - y) <= 1e-9 * abs(y), (name, x, y)

    d = q.State.named("maxdelta:1").invariants().delta333
    assert close(abs(d), m_delta, 1e-9), d

    w = q.State.named("w333").invariants()
    assert max(w.magnitudes()) == 0.0

    # JSON round trip.
    ghz = q.State.named("ghz333")
    again = q.State.from_json(ghz.to_json())
    assert again.amplitudes() == ghz.amplitudes()

    try:
        q.State([1.0] * 26)
    except ValueError:
        pass
    else:
        raise AssertionError("26 amplitudes accepted")
    try:
        q.maximize("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown objective accepted")

    r = q.maximize("i6", restarts=8, seed=1)
    assert close(r.best_value, m6, 1e-9), r
    assert r.matched_known is not None
    assert json.loads(r.to_json())["objective"]

    rows = q.sample(1000, seed=3)
    assert len(rows) == 1000
    assert all(row[3] <= m6 * (1 + 1e-9) for row in rows)
    assert rows == q.sample(1000, seed=3)

    edges, counts = q.histogram("delta", 2000, bins=20)
    assert len(edges) == 21 and sum(counts) == 2000

    theta, phi, values = q.sphere_grid("i9", 5, 8)
    assert len(values) == 5 and len(values[0]) == 8

    state, value = q.State.named("psi1").perturb(max_accepted=200, seed=2)
    assert value > abs(q.State.named("psi1").invariants().delta333)
    assert close(state.norm(), 1.0, 1e-9)

    print("qutrit333 smoke test: OK")


if __name__ == "__main__":
    main()
