import pytest

from constructions import (
    GadgetId,
    GadgetKind,
    build_gadget,
    build_reduction,
    diagonal_embed,
    ghr_symmetrize,
)
from constructions.diagonal import diagonal_labels
from errors import InvalidInputError
from verifiers import DEFAULT_FORMULA


@pytest.fixture(scope="module")
def symmetrized():
    game, _ = build_reduction(build_gadget(GadgetId(GadgetKind.G1, 1)), DEFAULT_FORMULA)
    return ghr_symmetrize(game)


def test_labels():
    assert diagonal_labels(3) == ("diag:1", "diag:2", "diag:3")


def test_embedding_payoffs(symmetrized):
    image, layout = symmetrized
    embedded = diagonal_embed(image, layout, 2)
    m = layout.size
    assert m == 74
    assert embedded.shape == (76, 76)
    assert embedded.is_symmetric
    assert embedded.strategy_labels[0][-2:] == ("diag:1", "diag:2")
    # D_2 between the new strategies
    assert embedded.utility((m, m + 1)) == (1, 0)
    assert embedded.utility((m + 1, m)) == (0, 1)
    assert embedded.utility((m, m)) == (1, 1)
    # literals and their mirrors tie with the diagonal at zero
    assert embedded.utility((1, m)) == (0, 0)
    assert embedded.utility((m + 1, 38)) == (0, 0)
    # everything else loses to it
    assert embedded.utility((0, m)) == (0, 1)
    assert embedded.utility((m, 11)) == (1, 0)
    assert embedded.utility((2, 40)) == image.utility((2, 40))


def test_embedding_preconditions(symmetrized, matching_pennies):
    image, layout = symmetrized
    with pytest.raises(InvalidInputError):
        diagonal_embed(image, layout, 0)
    plain, plain_layout = ghr_symmetrize(matching_pennies)
    with pytest.raises(InvalidInputError):
        diagonal_embed(plain, plain_layout, 2)
    with pytest.raises(InvalidInputError):
        diagonal_embed(plain, layout, 2)
    with pytest.raises(InvalidInputError):
        diagonal_embed(matching_pennies, plain_layout, 2)
