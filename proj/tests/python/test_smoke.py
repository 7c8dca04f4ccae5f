"""Smoke tests for the python bindings (run directly under ctest)."""

import cubik as ck  # the package re-exports _cubik


def test_operator_calculus():
    assert ck.normalize_op("s1 d1_0", 0) == "id0"
    assert ck.compose_ops("g1_0", "d1_1", 1) == "d1_1 s1"
    assert ck.evaluate_op("g1_0", 2) == [0, 1, 1, 1]
    assert ck.hom_count(1, 1) == 3
    assert ck.hom_count(1, 2) == 8
    assert ck.involute_op("d1_0", 1, "co") == "d2_0"


def test_shapes_and_products():
    square = ck.shape("cube", n=2)
    assert square.count(0) == 4 and square.count(1) == 4 and square.count(2) == 1
    ok, msg = square.validate()
    assert ok, msg
    interval = ck.shape("cube", n=1)
    sq = ck.product(interval, interval)
    assert ck.isomorphic(sq, square)
    box = ck.shape("inner_open_box", n=2, i=1, eps=0)
    assert box.count(0) == 3 and box.count(1) == 2


def test_round_trip():
    K = ck.shape("K")
    text = K.to_cub()
    back = ck.from_cub(text)
    assert back.to_cub() == text
    tri = ck.triangulate(K)
    assert ck.from_sim(tri.to_sim()).to_sim() == tri.to_sim()


def test_cones_and_q():
    c = ck.cone(ck.shape("cube", n=1))
    assert c.count(0) == 3 and c.count(1) == 3 and c.count(2) == 1
    qj = ck.q_functor(ck.walking_iso_simplicial())
    assert ck.isomorphic(qj, ck.shape("K"))
    s = ck.integral(ck.shape("cube", n=1), bound=2)
    assert s.count(0) == 2 and s.count(1) == 1


def test_quasicategory_and_theta():
    assert ck.is_quasicategory("poset:2", dim=3)
    assert not ck.is_quasicategory_complex(ck.shape("cube", n=2), dim=2)
    report = ck.theta_verify("poset:1", bound=3)
    assert "failed=0" in report
    assert "failed=1" not in report
    table = ck.ho_table("walking-iso")
    assert len(table) == 4


def test_mapping_space_and_marking():
    N = ck.nerve_truncation("poset:1", bound=3)
    marked = ck.natural_marking(N)
    assert marked.marked_edges() == []
    NI = ck.nerve_truncation("walking-iso", bound=3)
    marked_iso = ck.natural_marking(NI)
    assert len(marked_iso.marked_edges()) == NI.count(1)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
