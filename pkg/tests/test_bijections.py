import pytest
from hypothesis import given, settings

from catconv import counting
from catconv.bijections import (
    DyckSplit,
    PairE,
    PairO,
    chi,
    chi_inv,
    dyck_from_even_zeroed,
    dyck_split,
    even_zeroed_from_dyck,
    psi,
    psi_inv,
    psi_with_provenance,
    split_at_first_2mod4_intercept,
    theorem9_backward,
    theorem9_forward,
)
from catconv.errors import DomainError
from catconv.paths import (
    Sign,
    SignedDyckPath,
    SignedSeq,
    enumerate_balanced,
    enumerate_dyck,
    is_balanced,
    is_dyck,
    is_even_zeroed,
    parameter,
    parse_path,
    x_intercepts,
)

from conftest import balanced_strings, dyck_strings

P = parse_path


def S(text):
    return SignedSeq.parse(text)


@pytest.mark.parametrize(
    "path, seq",
    [("UUDD", "+(UD)"), ("UDDU", "+() -()"), ("DDUU", "-(UD)"), ("", ""), ("UUDDDDUU", "+(UD) -(UD)")],
)
def test_chi_examples(path, seq):
    assert chi(P(path)) == S(seq)
    assert chi_inv(S(seq)) == P(path)


def test_chi_inv_examples():
    assert chi_inv(S("-()")).steps == "DU"
    assert chi_inv(SignedSeq()).steps == ""


def test_chi_rejects_unbalanced():
    with pytest.raises(DomainError):
        chi(P("UUD"))


def test_chi_round_trip_and_weight_exhaustive():
    for n in range(8):
        seen = set()
        for b in enumerate_balanced(n):
            seq = chi(b)
            assert chi_inv(seq) == b
            assert seq.weight == n
            seen.add(seq)
        assert len(seen) == counting.central_binom(n)


def test_chi_sign_means_below_axis():
    for b in enumerate_balanced(5):
        cuts = x_intercepts(b)
        h = b.heights()
        for item, a, c in zip(chi(b), cuts, cuts[1:]):
            below = all(v <= 0 for v in h[a : c + 1])
            assert (item.sign is Sign.MINUS) == below


def test_even_zeroed_iff_all_items_odd():
    for n in range(1, 8):
        for b in enumerate_balanced(n):
            assert is_even_zeroed(b) == chi(b).all_odd()


@pytest.mark.parametrize("path, left, right", [("UUDD", "UD", ""), ("UDUD", "", "UD"), ("UD", "", "")])
def test_dyck_split_examples(path, left, right):
    split = dyck_split(P(path))
    assert split == DyckSplit(P(left), P(right))
    assert split.join() == P(path)


def test_dyck_split_errors():
    with pytest.raises(DomainError):
        dyck_split(P(""))
    with pytest.raises(DomainError):
        dyck_split(P("DU"))


def test_dyck_split_invariants_exhaustive():
    for n in range(1, 8):
        for d in enumerate_dyck(n):
            s = dyck_split(d)
            assert is_dyck(s.left) and is_dyck(s.right)
            assert parameter(s.left) + parameter(s.right) == n - 1
            assert s.join() == d


@pytest.mark.parametrize("path, seq", [("", ""), ("UUDD", "-(UD)"), ("UDUD", "+(UD)")])
def test_psi_examples(path, seq):
    assert psi(P(path)) == S(seq)
    assert psi_inv(S(seq)) == P(path)


def test_psi_errors():
    with pytest.raises(DomainError):
        psi(P("UD"))
    with pytest.raises(DomainError):
        psi(P("DDUU"))
    with pytest.raises(DomainError):
        psi_inv(S("+()"))


def test_psi_image_law_and_round_trip_exhaustive():
    # parameter 12 covers C_12 = 208012 paths
    for n in range(7):
        count = 0
        for d in enumerate_dyck(2 * n):
            seq = psi(d)
            assert seq.all_odd()
            assert seq.weight == 2 * n
            assert psi_inv(seq) == d
            count += 1
        assert count == counting.catalan(2 * n)


def _odd_sequences(weight):
    """Every sequence of signed odd-parameter Dyck paths with the given weight."""
    if weight == 0:
        yield ()
        return
    for par in range(1, weight, 2):
        for d in enumerate_dyck(par):
            for sign in (Sign.PLUS, Sign.MINUS):
                head = SignedDyckPath(sign, d)
                for tail in _odd_sequences(weight - par - 1):
                    yield (head,) + tail


def test_psi_inverse_direction_exhaustive():
    for n in range(5):
        seqs = [SignedSeq(t) for t in _odd_sequences(2 * n)]
        assert len(seqs) == counting.catalan(2 * n)
        for s in seqs:
            assert psi(psi_inv(s)) == s


def test_psi_sign_means_left_or_right():
    for n in range(5):
        for d in enumerate_dyck(2 * n):
            for step in psi_with_provenance(d):
                assert (step.item.sign is Sign.MINUS) == (step.side == "L")
                assert d.steps[step.start : step.end] == step.item.path.steps
                assert min(d.heights()[step.start : step.end + 1]) == step.base


def test_psi_deep_input_has_no_recursion_limit():
    d = P("U" * 600 + "D" * 600)
    assert psi_inv(psi(d)) == d


@pytest.mark.parametrize("dyck, image", [("UUDD", "DDUU"), ("UDUD", "UUDD"), ("", "")])
def test_even_zeroed_from_dyck_examples(dyck, image):
    assert even_zeroed_from_dyck(P(dyck)) == P(image)
    assert dyck_from_even_zeroed(P(image)) == P(dyck)


def test_dyck_from_even_zeroed_rejects():
    with pytest.raises(DomainError):
        dyck_from_even_zeroed(P("UDUD"))
    with pytest.raises(DomainError):
        dyck_from_even_zeroed(P("UUD"))


def test_main_bijection_exhaustive():
    for n in range(6):
        target = {b for b in enumerate_balanced(2 * n) if is_even_zeroed(b)}
        images = [even_zeroed_from_dyck(d) for d in enumerate_dyck(2 * n)]
        assert len(set(images)) == len(images)
        assert set(images) == target
        assert len(target) == counting.catalan(2 * n)


@pytest.mark.parametrize("path, left, right", [("UDUD", "UD", "UD"), ("DUDU", "DU", "DU")])
def test_split_at_first_2mod4_examples(path, left, right):
    assert split_at_first_2mod4_intercept(P(path)) == (P(left), P(right))


def test_split_at_first_2mod4_rejects():
    with pytest.raises(DomainError):
        split_at_first_2mod4_intercept(P("UUDD"))


@given(balanced_strings())
def test_split_at_first_2mod4_properties(s):
    p = P(s)
    if not any(t % 4 == 2 for t in x_intercepts(p)):
        return
    left, right = split_at_first_2mod4_intercept(p)
    assert left + right == p
    assert is_balanced(left) and parameter(left) % 2 == 1
    assert all(t % 4 == 0 for t in x_intercepts(left)[:-1])


@pytest.mark.parametrize(
    "e, o", [(("UDUD", ""), ("UD", "UD")), (("UDDU", ""), ("UD", "DU")), (("DUUD", ""), ("DU", "UD"))]
)
def test_theorem9_examples(e, o):
    pe = PairE(P(e[0]), P(e[1]))
    po = PairO(P(o[0]), P(o[1]))
    assert theorem9_forward(pe) == po
    assert theorem9_backward(po) == pe
    assert pe.parameter_sum == po.parameter_sum == 2


def test_pair_validation():
    with pytest.raises(DomainError):
        PairE(P("UUDD"), P(""))  # no 4t+2 intercept
    with pytest.raises(DomainError):
        PairE(P("UD"), P("UD"))  # odd parameters
    with pytest.raises(DomainError):
        PairO(P("UUDD"), P("UD"))
    with pytest.raises(DomainError):
        PairO(P("UU"), P("UD"))


def _pairs(total, parity):
    for a in range(parity, total + 1, 2):
        for x in enumerate_balanced(a):
            for y in enumerate_balanced(total - a):
                yield x, y


def test_theorem9_maps_mutually_inverse_exhaustive():
    for n in range(5):
        evens = [PairE(x, y) for x, y in _pairs(2 * n, 0) if any(t % 4 == 2 for t in x_intercepts(x))]
        odds = {PairO(x, y) for x, y in _pairs(2 * n, 1)}
        images = [theorem9_forward(e) for e in evens]
        assert len(set(images)) == len(images)
        assert set(images) == odds
        assert all(theorem9_backward(o) == e for e, o in zip(evens, images))
        assert all(theorem9_forward(theorem9_backward(o)) == o for o in odds)
        assert all(o.parameter_sum == 2 * n for o in odds)


@settings(max_examples=300)
@given(dyck_strings(max_parameter=12, even=True))
def test_psi_fuzz(d):
    p = P(d)
    assert psi_inv(psi(p)) == p
    assert is_even_zeroed(even_zeroed_from_dyck(p))
