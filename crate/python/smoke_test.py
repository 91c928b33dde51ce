"""Smoke test for the spectral_lab extension module.

Build and install first, e.g. `maturin build -m crates/python/Cargo.toml`
followed by `pip install` of the wheel, then run `python python/smoke_test.py`.
"""

import math

import spectral_lab as sl


def main():
    c5 = sl.cycle(5)
    assert (c5.order, c5.size) == (5, 5)
    assert c5.odd_girth() == 5
    assert c5.is_forbidden_free(1) and not c5.is_forbidden_free(2)
    spec = c5.spectrum()
    assert abs(spec[0] - 2.0) < 1e-9
    assert abs(spec[1] - (math.sqrt(5) - 1) / 2) < 1e-9
    assert c5.closed_walks(5) == 10
    assert sl.Graph.from_graph6(c5.to_graph6()) == c5

    k23 = sl.complete_bipartite(2, 3)
    (cert,) = sl.certify(k23, "thm1.1", k=1)
    assert cert["verdict"] == "holds_equality", cert
    assert "P2+K1" in cert["structure_note"]

    rk = sl.rk_bipartite(1, 3, 3)
    assert abs(rk.spectral_radius() - sl.rk_spectral_radius(1, 3, 3)) < 1e-9

    report = sl.extremal_search(7, 1, workers=2)
    assert report["confirmed"]
    found = sl.Graph.from_graph6(report["extremal_graphs"][0])
    assert found.is_isomorphic(rk)

    t = sl.t_tree(1, 2, 4)
    assert abs(t.spectral_radius() - 2 * math.cos(math.pi / 30)) < 1e-12

    try:
        sl.cycle(2)
    except ValueError:
        pass
    else:
        raise AssertionError("cycle(2) should fail")

    assert "all-classical" in sl.claim_ids()
    print("smoke test ok")


if __name__ == "__main__":
    main()
