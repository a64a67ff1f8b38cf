import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import QuantumEvaluation
from qsc.classical import classical_product_in_frame
from qsc.partitions import (
    EMPTY,
    GrassmannFrame,
    Partition,
    dual_in_frame,
    enumerate_partitions_in_frame,
    fits_in_frame,
    frames_up_to,
    partitions_in_box,
)
from qsc.quantum import (
    QElement,
    evaluate_jacobi_trudi,
    extended_sigma,
    giambelli_det,
    gw_invariant,
    qproduct,
    qproduct_pieri,
    qproduct_rimhook,
    quantum_pieri,
    reduce_to_basis,
    straighten,
)

P = Partition
G24 = GrassmannFrame(2, 4)


def s(*parts, f=G24, d=0, c=1):
    return QElement.schubert(parts, f, d=d, coeff=c)


def q(d=1, f=G24):
    return QElement.q(f, d)


class TestQElement:
    def test_zero_coefficients_dropped(self):
        x = QElement(G24, {(0, P((1,))): 0, (1, EMPTY): 2})
        assert len(x) == 1 and x.coefficient(EMPTY, 1) == 2

    def test_rejects_out_of_frame(self):
        with pytest.raises(ValueError):
            QElement(G24, {(0, P((3,))): 1})
        with pytest.raises(ValueError):
            QElement(G24, {(-1, EMPTY): 1})

    def test_frame_mismatch(self):
        with pytest.raises(ValueError):
            s(1) + s(1, f=GrassmannFrame(2, 5))
        with pytest.raises(ValueError):
            qproduct(s(1), s(1, f=GrassmannFrame(1, 4)))

    def test_text_form(self):
        assert (q() * s(2) + q() * s(1, 1)).to_text() == "q*s[2] + q*s[1,1]"
        assert q(2).to_text() == "q^2"
        assert QElement.zero(G24).to_text() == "0"
        assert QElement.one(G24).to_text() == "1"
        assert (s(1, c=-3) + s(2, 2) - q()).to_text() == "-3*s[1] + s[2,2] - q"

    def test_json_form(self):
        x = q() * s(2) + q() * s(1, 1)
        data = x.to_json()
        assert data == {
            "frame": {"l": 2, "n": 4},
            "terms": [{"q": 1, "partition": [2], "coeff": 1}, {"q": 1, "partition": [1, 1], "coeff": 1}],
        }
        assert QElement.from_json(json.loads(json.dumps(data))) == x

    def test_arithmetic(self):
        x = s(1) + s(2)
        assert x - x == QElement.zero(G24)
        assert 2 * x == x + x == x * 2
        assert (q() * s(1)).to_text() == "q*s[1]"
        assert QElement.one(G24) * x == x
        assert hash(s(1) + s(2)) == hash(s(2) + s(1))


class TestStraighten:
    def test_examples(self):
        assert straighten((0, 2)) == (-1, (1, 1))
        assert straighten((1, 2)) is None
        assert straighten((2, 1)) == (1, (2, 1))
        assert straighten((2,), G24) == (1, (2,))

    def test_negative_last_row_is_zero(self):
        assert straighten((0, -1)) is None
        assert straighten((-3, 0)) is None

    def test_moves(self):
        # s_{a,b} = -s_{b-1,a+1} for every pair, compared through straighten itself
        for a in range(-3, 6):
            for b in range(-3, 6):
                one, other = straighten((a, b)), straighten((b - 1, a + 1))
                if one is None:
                    assert other is None
                else:
                    assert other == (-one[0], one[1])

    def test_against_determinant_expansion(self):
        f = GrassmannFrame(2, 4)
        assert evaluate_jacobi_trudi((0, 2), f) == -s(1, 1)


class TestReduce:
    def test_examples(self):
        assert reduce_to_basis(P((4, 2)), G24) == q() * s(1, 1)
        assert reduce_to_basis(P((3, 3)), G24) == q() * s(2)
        for lam in enumerate_partitions_in_frame(G24):
            assert reduce_to_basis(lam, G24) == s(*lam)

    def test_rejects_long(self):
        with pytest.raises(ValueError):
            reduce_to_basis(P((1, 1, 1)), G24)

    def test_lands_in_basis(self):
        for f in frames_up_to(7):
            for lam in partitions_in_box(f.l, f.k + f.n):
                for (d, mu), c in reduce_to_basis(lam, f).items():
                    assert fits_in_frame(mu, f) and c in (1, -1)
                    assert mu.weight + d * f.n == lam.weight


class TestProducts:
    @pytest.mark.parametrize("route", [qproduct_rimhook, qproduct_pieri])
    def test_gr24_examples(self, route):
        assert route(P((2, 1)), P((2, 1)), G24) == q() * s(2) + q() * s(1, 1)
        assert route(P((2, 2)), P((2, 2)), G24) == q(2)
        assert route(P((1, 1)), P((2, 2)), G24) == q() * s(2)
        assert route(P((2,)), P((1, 1)), G24) == q()
        assert route(P((1,)), P((2, 1)), G24) == s(2, 2) + q()
        for lam in enumerate_partitions_in_frame(G24):
            assert route(EMPTY, lam, G24) == route(lam, EMPTY, G24) == s(*lam)

    def test_projective_line(self):
        f = GrassmannFrame(1, 2)
        assert qproduct_rimhook(P((1,)), P((1,)), f) == QElement.q(f)

    def test_rejects_out_of_frame(self):
        with pytest.raises(ValueError):
            qproduct_rimhook(P((3,)), EMPTY, G24)
        with pytest.raises(ValueError):
            qproduct_pieri(EMPTY, P((1, 1, 1)), G24)

    def test_quantum_pieri_examples(self):
        assert quantum_pieri(1, P((2, 1)), G24) == s(2, 2) + q()
        assert quantum_pieri(2, P((1, 1)), G24) == q()
        assert quantum_pieri(0, P((2, 1)), G24) == s(2, 1)
        with pytest.raises(ValueError):
            quantum_pieri(3, EMPTY, G24)

    @pytest.mark.parametrize("f", frames_up_to(8), ids=str)
    def test_k_times_column_is_q(self, f):
        prod = quantum_pieri(f.k, P((1,) * f.l), f)
        assert prod.coefficient(EMPTY, 1) == 1
        assert all(d == 0 for d, nu in prod.terms if (d, nu) != (1, EMPTY))

    def test_qproduct_examples(self):
        assert qproduct(q(), s(1)) == q() * s(1)
        x = s(2, 1) + q() * s(1)
        assert qproduct(QElement.one(G24), x) == x
        assert qproduct(qproduct(s(1), s(1)), s(2, 2)) == qproduct(s(1), qproduct(s(1), s(2, 2)))
        assert qproduct(qproduct(s(1), s(1)), s(2, 2)) == q() * s(2) + q() * s(1, 1)

    @pytest.mark.parametrize("f", frames_up_to(8), ids=str)
    def test_against_evaluation_oracle(self, f):
        basis = enumerate_partitions_in_frame(f)
        ev = QuantumEvaluation(f.l, f.n)
        for lam in basis:
            for mu in basis:
                prod = qproduct_rimhook(lam, mu, f)
                flat: dict = {}
                for (d, nu), c in prod.items():
                    flat[tuple(nu)] = flat.get(tuple(nu), 0) + c
                assert flat == ev.product_coefficients(lam, mu, basis), (lam, mu)


class TestExtendedSigma:
    def test_examples(self):
        assert extended_sigma(4, G24) == -q()
        assert extended_sigma(3, G24) == QElement.zero(G24)
        assert extended_sigma(5, G24) == -q() * s(1)
        assert extended_sigma(-1, G24) == QElement.zero(G24)
        assert extended_sigma(0, G24) == QElement.one(G24)
        assert extended_sigma(8, G24) == q(2)

    def test_projective_line(self):
        f = GrassmannFrame(1, 2)
        assert extended_sigma(2, f) == QElement.q(f)


class TestGiambelli:
    def test_examples(self):
        assert giambelli_det(P((2, 1)), G24) == s(2, 1)
        assert giambelli_det(P((2, 2)), G24) == s(2, 2)
        for p in range(3):
            assert giambelli_det(P((p,)), G24) == s(p)
        with pytest.raises(ValueError):
            giambelli_det(P((3,)), G24)


class TestGW:
    def test_examples(self):
        assert gw_invariant(P((2, 1)), P((2, 1)), P((2,)), 1, G24) == 1
        assert gw_invariant(P((2, 1)), P((2, 1)), P((2,)), 0, G24) == 0
        assert gw_invariant(EMPTY, EMPTY, P((2, 2)), 0, G24) == 1
        assert gw_invariant(P((1,)), P((1,)), P((1,)), 1, G24) == 0

    def test_line_through_two_points(self):
        # one line through two general points of P^2 = Gr(1,3)
        f = GrassmannFrame(1, 3)
        assert gw_invariant(P((2,)), P((2,)), P((1,)), 1, f) == 1

    def test_rejects_out_of_frame(self):
        with pytest.raises(ValueError):
            gw_invariant(P((3,)), EMPTY, EMPTY, 0, G24)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_product_properties(data):
    f = data.draw(st.sampled_from(frames_up_to(7)))
    basis = enumerate_partitions_in_frame(f)
    lam, mu = data.draw(st.sampled_from(basis)), data.draw(st.sampled_from(basis))
    prod = qproduct_rimhook(lam, mu, f)
    assert prod == qproduct_rimhook(mu, lam, f)
    assert prod.degrees() == {lam.weight + mu.weight}
    assert all(c > 0 for _, c in prod.items())
    assert prod.q0_part() == classical_product_in_frame(lam, mu, f)
    for (d, nu), c in prod.items():
        assert gw_invariant(lam, mu, dual_in_frame(nu, f), d, f) == c


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_straightening_soundness(data):
    f = data.draw(st.sampled_from(frames_up_to(7)))
    seq = data.draw(st.lists(st.integers(-f.l, f.k + f.l), min_size=f.l, max_size=f.l))
    st_ = straighten(seq, f)
    want = QElement.zero(f) if st_ is None else reduce_to_basis(st_[1], f).scale(st_[0])
    assert evaluate_jacobi_trudi(seq, f) == want
