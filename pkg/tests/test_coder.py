import pytest
from hypothesis import given, strategies as st

from conftest import (
    GOLDEN_C1,
    GOLDEN_CODE,
    GOLDEN_LABELS,
    GOLDEN_STRANDS,
    GOLDEN_W_TEXT,
)
from flatbasket import (
    BraidWord,
    encode,
    encode_word,
    expand_positive,
    intermediate_code,
    letter_labels,
    parse_braid,
)


@pytest.fixture
def golden_w():
    return parse_braid(GOLDEN_W_TEXT, GOLDEN_STRANDS)


@st.composite
def words(draw, max_strands=5, max_length=10):
    n = draw(st.integers(2, max_strands))
    letters = draw(
        st.lists(
            st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1))),
            max_size=max_length,
        )
    )
    return BraidWord(n, tuple(q * s for q, s in letters))


class TestLabels:
    def test_golden(self, golden_w):
        assert letter_labels(golden_w).labels == GOLDEN_LABELS

    def test_single_generator_orders_by_position(self):
        assert letter_labels(BraidWord(2, (-1, -1, -1, -1))).labels == (1, 2, 3, 4)

    def test_generator_index_dominates(self):
        assert letter_labels(BraidWord(3, (2, 1))).labels == (2, 1)

    def test_double_indices(self, golden_w):
        assert letter_labels(golden_w).double_indices[:3] == ((2, 1), (1, 2), (2, 3))

    @given(words())
    def test_labels_are_a_permutation(self, w):
        labels = letter_labels(w).labels
        assert sorted(labels) == list(range(1, len(w.letters) + 1))


class TestIntermediateCode:
    def test_golden(self, golden_w):
        c1 = intermediate_code(golden_w, letter_labels(golden_w))
        assert c1.word == GOLDEN_C1

    def test_two_strands_sees_everything_twice(self):
        w = BraidWord(2, (-1, -1, -1, -1))
        assert intermediate_code(w, letter_labels(w)).word == (1, 2, 3, 4, 1, 2, 3, 4)

    def test_three_strands_interleaves(self):
        w = BraidWord(3, (-1, -2))
        assert intermediate_code(w, letter_labels(w)).word == (1, 1, 2, 2)

    @given(words())
    def test_each_label_twice(self, w):
        c1 = intermediate_code(w, letter_labels(w))
        assert len(c1.word) == 2 * len(w.letters)
        for label in range(1, len(w.letters) + 1):
            assert c1.word.count(label) == 2


class TestExpansion:
    def test_golden(self, golden_w):
        labeling = letter_labels(golden_w)
        c1 = intermediate_code(golden_w, labeling)
        assert expand_positive(c1, golden_w, labeling).word == GOLDEN_CODE

    def test_all_negative_is_identity(self):
        w = BraidWord(3, (-1, -2, -1))
        labeling = letter_labels(w)
        c1 = intermediate_code(w, labeling)
        assert expand_positive(c1, w, labeling).word == c1.word

    def test_single_positive(self):
        w = BraidWord(2, (1,))
        labeling = letter_labels(w)
        c1 = intermediate_code(w, labeling)
        assert c1.word == (1, 1)
        assert expand_positive(c1, w, labeling).word == (1, 3, 2, 1, 3, 2)

    @given(words())
    def test_band_count_and_blocks(self, w):
        code = encode_word(w)
        m = len(w.letters)
        s = w.positive_count
        assert len(code.word) == 2 * (m + 2 * s)
        for label in range(1, m + 2 * s + 1):
            assert code.word.count(label) == 2
        # each splice block reads (m+2i, m+2i-1, x, m+2i, m+2i-1)
        for i in range(1, s + 1):
            hi = m + 2 * i
            first = code.word.index(hi)
            block = code.word[first : first + 5]
            assert block[0] == block[3] == hi
            assert block[1] == block[4] == hi - 1
            assert block[2] <= m


class TestEncode:
    def test_negative_trefoil(self):
        code = encode(BraidWord(2, (-1, -1, -1)), reduce=True)
        assert code.word == (1, 2, 3, 4, 1, 2, 3, 4)

    def test_descending_word_gives_empty_code(self):
        for n in (1, 2, 4):
            code = encode(BraidWord(n, tuple(range(n - 1, 0, -1))), reduce=True)
            assert code.word == ()

    def test_positive_square(self):
        code = encode(BraidWord(2, (1, 1)), reduce=True)
        assert code.word == (1, 3, 2, 1, 3, 2)
        assert code.n == 3  # m + 2s = 1 + 2

    def test_reduce_changes_band_count(self):
        b = BraidWord(2, (1, 1))
        assert encode(b, reduce=True).n == 3
        assert encode(b, reduce=False).n == 7  # m=3, s=2 without cancellation
