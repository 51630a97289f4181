"""End-to-end smoke tests for the python bindings."""

import os
import sys
import tempfile

import lincirc as lc


def test_matrix_basics():
    a = lc.BooleanMatrix.complement_identity(4)
    assert a.n_rows == 4 and a.n_cols == 4
    assert a.weight() == 12
    assert not a.has_zero_row()
    assert a.transpose() == a
    assert lc.parse_matrix(lc.format_matrix(a)) == a

    b = lc.BooleanMatrix.from_rows(["101", "010"])
    assert b.test(0, 0) and not b.test(0, 1)
    assert b.row(0) == [0, 2]

    r = lc.BooleanMatrix.random(8, 8, 0.5, seed=11)
    assert r == lc.BooleanMatrix.random(8, 8, 0.5, seed=11)


def test_circuit_eval_and_files():
    a = lc.BooleanMatrix.from_rows(["110", "011"])
    c = lc.trivial_circuit(a, lc.Semiring.OR)
    assert lc.validate(c) == []
    assert c.wire_count() == a.weight()
    assert lc.extract_matrix(c) == a

    y = lc.evaluate(c, lc.Vector(lc.Semiring.OR, [1, 0, 0]))
    assert y.values == [1, 0]

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "a.circ")
        lc.write_circuit_file(path, c)
        assert lc.extract_matrix(lc.read_circuit_file(path)) == a


def test_bounds_and_covers():
    i4c = lc.BooleanMatrix.complement_identity(4)
    assert lc.is_st_free(lc.BooleanMatrix.identity(4), 1, 1).free
    assert lc.mp_lower_bound(lc.BooleanMatrix.identity(4), 3, 3).bound == 4

    rank = lc.rank_cover(i4c, True, 4)
    assert rank.resolved and rank.rank == 4

    cover = lc.complement_identity_cover(4)
    assert len(cover.rectangles) == 4
    assert lc.cover_matches(i4c, cover)

    rebuilt = lc.make_rectangle_cover(
        4, 4, [(r.rows, r.cols) for r in cover.rectangles]
    )
    assert lc.cover_matches(i4c, rebuilt)


def test_tensor_and_oracle():
    b = lc.BooleanMatrix.complement_identity(4)
    a = lc.BooleanMatrix.identity(4)
    c = lc.tensor_or_circuit(b, a, lc.complement_identity_cover(4))
    assert lc.extract_matrix(c) == lc.kronecker(b, a)

    kron = lc.kronecker(lc.BooleanMatrix.complement_identity(2), lc.BooleanMatrix.identity(2))
    assert lc.min_wires(kron, lc.Semiring.SUM, 6).wires == 4
    cert = lc.is_st_free(lc.BooleanMatrix.identity(2), 1, 1)
    rank = lc.rank_cover(lc.BooleanMatrix.complement_identity(2), True, 4).rank
    assert lc.direct_sum_bound(
        lc.BooleanMatrix.complement_identity(2), lc.BooleanMatrix.identity(2), cert, rank
    ) == 4


def test_lupanov_and_rewrite():
    a = lc.BooleanMatrix.random(16, 16, 0.6, seed=5)
    while a.has_zero_row():
        a = lc.BooleanMatrix.random(16, 16, 0.6, seed=6)
    c = lc.lupanov_circuit(a, lc.Semiring.XOR, lc.lupanov_best_b(16, 16))
    assert lc.extract_matrix(c) == a

    source = lc.trivial_circuit(a, lc.Semiring.OR)
    rewritten, report = lc.rewrite(source, lc.Semiring.SUM)
    assert lc.equivalent(source, rewritten)
    assert report.output_wires == a.weight()
    assert report.strategy == lc.RewriteStrategy.depth1


def test_gf2_and_uniform():
    f8 = lc.GF2Field(3)
    assert f8.mul(2, 4) == 3
    assert f8.pow(2, 7) == 1

    code = lc.build_code_matrix(2, 4, 2)
    assert lc.check_k_independence(code) == lc.IndependenceCheck.independent

    sample = lc.generate_kuniform(code, seed=7)
    assert lc.extract_matrix(sample.circuit) == sample.a

    report = lc.uniformity_test(code, 16000, [1, 2], [3, 4], seed=9, threads=2)
    assert report.dof == 15
    assert report.pass_


def test_sat_pipeline():
    f = lc.parse_dimacs("p cnf 3 2\n1 2 0\n-1 3 0\n")
    assert lc.count_sat(f) == 4
    assert lc.parity_sat(f) == 0

    inst = lc.split_to_cover(f)
    direct = lc.count_covering_pairs(inst, lc.CountVia.direct)
    assert lc.count_covering_pairs(inst, lc.CountVia.pipeline_sum) == direct

    built = lc.cover_complement_circuit(inst)
    assert built.circuit.wire_count() <= 2 * len(inst.left) * inst.m


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__} ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
