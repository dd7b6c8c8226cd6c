"""Matching model vs an independently coded brute-force oracle."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from apimigrate import mocklib
from apimigrate.corpus import ApiEntry, DocCorpus, ParamSpec
from apimigrate.errors import ConsistencyError, ValidationError
from apimigrate.matching import (
    EmbeddingTable,
    TokenVector,
    Vocabulary,
    build_similarity,
    cosine,
    embed_sentence,
    load_embeddings,
    rank_targets,
    tfidf_vector,
    tokenize_and_stem,
)

# --- oracle: plain dict/loop reimplementation of the three formulas ---------

def oracle_corpus_frequency(docs: list[dict[str, int]]) -> dict[str, int]:
    total: dict[str, int] = {}
    for doc in docs:
        for tok, n in doc.items():
            total[tok] = total.get(tok, 0) + n
    return total


def oracle_weight_vector(doc: dict[str, int], vocab_order: list[str], totals) -> list[float]:
    return [doc.get(tok, 0) / totals[tok] for tok in vocab_order]


def oracle_embedding(doc: dict[str, int], totals, table: dict[str, list[float]], dim: int):
    out = [0.0] * dim
    for tok, n in doc.items():
        vec = table.get(tok)
        if vec is None:
            continue
        w = n / totals[tok]
        for i in range(dim):
            out[i] += w * vec[i]
    return out


def oracle_cosine(a: list[float], b: list[float]) -> float:
    dot = sum(x * y for x, y in zip(a, b))
    na = math.sqrt(sum(x * x for x in a))
    nb = math.sqrt(sum(x * x for x in b))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return dot / (na * nb)


def counts(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for tok in tokenize_and_stem(text):
        out[tok] = out.get(tok, 0) + 1
    return out


# --- unit examples -----------------------------------------------------------

def test_component_is_one_when_token_unique():
    docs = [TokenVector("a", {"conv": 1}), TokenVector("b", {"dense": 3})]
    vocab = Vocabulary.build(docs)
    vec = tfidf_vector(docs[0], vocab)
    assert vec[vocab.index["conv"]] == 1.0


def test_component_fraction_of_corpus_frequency():
    docs = [TokenVector("a", {"layer": 1}), TokenVector("b", {"layer": 9})]
    vocab = Vocabulary.build(docs)
    vec = tfidf_vector(docs[0], vocab)
    assert vec[vocab.index["layer"]] == pytest.approx(0.1, abs=1e-15)


def test_unknown_token_is_consistency_error():
    vocab = Vocabulary.build([TokenVector("a", {"conv": 1})])
    with pytest.raises(ConsistencyError):
        tfidf_vector(TokenVector("b", {"other": 1}), vocab)


def test_toy_corpus_matches_oracle():
    texts = [
        "2D convolution layer over images",
        "fully connected dense layer",
        "convolution layer for text sequences",
    ]
    docs = [TokenVector.from_text(str(i), t) for i, t in enumerate(texts)]
    vocab = Vocabulary.build(docs)
    totals = oracle_corpus_frequency([d.counts for d in docs])
    for doc in docs:
        got = tfidf_vector(doc, vocab)
        want = oracle_weight_vector(doc.counts, list(vocab.tokens), totals)
        assert np.max(np.abs(got - np.asarray(want))) <= 1e-12


def test_embed_single_token_is_word_vector():
    docs = [TokenVector("a", {"conv": 1})]
    vocab = Vocabulary.build(docs)
    table = EmbeddingTable(2, {"conv": np.array([0.5, -1.0])})
    out = embed_sentence(docs[0], vocab, table)
    assert np.allclose(out, [0.5, -1.0])


def test_embed_all_oov_is_zero_vector():
    docs = [TokenVector("a", {"conv": 2, "layer": 1})]
    vocab = Vocabulary.build(docs)
    table = EmbeddingTable(3, {"unrelated": np.ones(3)})
    assert np.allclose(embed_sentence(docs[0], vocab, table), 0.0)


def test_embed_two_token_hand_expansion():
    # doc: conv x2, layer x1; corpus totals: conv 4, layer 1
    docs = [TokenVector("a", {"conv": 2, "layer": 1}), TokenVector("b", {"conv": 2})]
    vocab = Vocabulary.build(docs)
    table = EmbeddingTable(2, {"conv": np.array([1.0, 0.0]), "layer": np.array([0.0, 2.0])})
    out = embed_sentence(docs[0], vocab, table)
    # (2/4)*[1,0] + (1/1)*[0,2]
    assert np.allclose(out, [0.5, 2.0])


def test_embedding_dimension_mismatch_rejected():
    with pytest.raises(ValidationError):
        EmbeddingTable(2, {"a": np.ones(3)})


def test_cosine_examples():
    v = np.array([0.3, -0.7, 2.0])
    assert cosine(v, v) == pytest.approx(1.0)
    assert cosine(np.array([1.0, 0.0]), np.array([0.0, 1.0])) == 0.0
    assert cosine(np.array([1.0, 2.0]), np.array([2.0, 4.0])) == pytest.approx(1.0)
    assert cosine(np.zeros(2), np.zeros(2)) == 0.0


def test_load_embeddings(tmp_path):
    path = tmp_path / "emb.txt"
    path.write_text("conv 1.0 0.0\nlayer 0.0 2.0\n")
    table = load_embeddings(path)
    assert table.dimension == 2
    assert np.allclose(table.vectors["layer"], [0.0, 2.0])
    path.write_text("conv 1.0 0.0\nlayer 2.0\n")
    with pytest.raises(ValidationError):
        load_embeddings(path)


# --- matrix construction ------------------------------------------------------

def _mini_corpus(lib: str, descs: dict[str, str]) -> DocCorpus:
    entries = tuple(
        ApiEntry(f"{lib}.{name}", text, (ParamSpec("n", "int", True),))
        for name, text in descs.items()
    )
    return DocCorpus(library_id=lib, language_id="mock", entries=entries)


def test_identical_description_is_row_max():
    src = _mini_corpus("s", {"A": "sort the table rows", "B": "scale every element"})
    tgt = _mini_corpus(
        "t", {"X": "sort the table rows", "Y": "compute window totals", "Z": "pad the signal"}
    )
    matrix = build_similarity(src, tgt, "tfidf")
    row = matrix.row("s.A")
    assert matrix.target_ids[int(np.argmax(row))] == "t.X"
    assert rank_targets(matrix, "s.A", 1)[0][0] == "t.X"


def test_synonyms_invisible_to_tfidf_visible_to_embeddings():
    src = _mini_corpus("s", {"A": "remove last item collection"})
    tgt = _mini_corpus("t", {"X": "delete one element from end"})
    table = EmbeddingTable(
        2,
        {
            "remov": np.array([1.0, 0.0]),
            "delet": np.array([1.0, 0.0]),
            "item": np.array([0.0, 1.0]),
            "element": np.array([0.0, 1.0]),
        },
    )
    t = build_similarity(src, tgt, "tfidf")
    e = build_similarity(src, tgt, "tfidf_embedding", table)
    assert t.scores[0, 0] == 0.0
    assert e.scores[0, 0] > 0.0


def test_mock_four_by_four_matches_oracle(source_corpus, target_corpus):
    src_entries = source_corpus.entries[:4]
    tgt_entries = target_corpus.entries[:4]
    src = DocCorpus("s", "mock", src_entries)
    tgt = DocCorpus("t", "mock", tgt_entries)
    matrix = build_similarity(src, tgt, "tfidf")

    src_counts = [counts(e.description) for e in src_entries]
    tgt_counts = [counts(e.description) for e in tgt_entries]
    totals = oracle_corpus_frequency(src_counts + tgt_counts)
    vocab_order: list[str] = []
    for doc in src_counts + tgt_counts:
        for tok in doc:
            if tok not in vocab_order:
                vocab_order.append(tok)
    for i, a in enumerate(src_counts):
        for j, b in enumerate(tgt_counts):
            want = oracle_cosine(
                oracle_weight_vector(a, vocab_order, totals),
                oracle_weight_vector(b, vocab_order, totals),
            )
            assert abs(matrix.scores[i, j] - want) <= 1e-12


def test_mode_requires_table(source_corpus, target_corpus):
    with pytest.raises(ValidationError):
        build_similarity(source_corpus, target_corpus, "tfidf_embedding")
    with pytest.raises(ValidationError):
        build_similarity(source_corpus, target_corpus, "bogus")


def test_rank_tie_break_lexicographic():
    matrix_src = _mini_corpus("s", {"A": "x"})
    # direct construction to pin the tie-break rule on a synthetic row
    from apimigrate.matching import SimilarityMatrix

    matrix = SimilarityMatrix(
        source_ids=("s.A",),
        target_ids=("t.b", "t.a", "t.c"),
        scores=np.array([[0.9, 0.9, 0.1]]),
    )
    assert [n for n, _ in rank_targets(matrix, "s.A", 2)] == ["t.a", "t.b"]
    assert rank_targets(matrix, "s.A", 1)[0][0] == "t.a"
    with pytest.raises(KeyError):
        rank_targets(matrix, "s.unknown", 1)


def test_rank_is_permutation_prefix(source_corpus, target_corpus):
    matrix = build_similarity(source_corpus, target_corpus, "tfidf")
    full = rank_targets(matrix, "nimbus.Scale", len(target_corpus.entries))
    names = [n for n, _ in full]
    assert sorted(names) == sorted(matrix.target_ids)
    assert full == rank_targets(matrix, "nimbus.Scale", len(target_corpus.entries))
    scores = [s for _, s in full]
    assert scores == sorted(scores, reverse=True)


# --- properties ----------------------------------------------------------------

@given(
    st.lists(st.floats(-5, 5), min_size=2, max_size=6),
    st.floats(0.1, 10.0),
)
def test_cosine_scale_invariant_and_symmetric(values, alpha):
    a = np.asarray(values)
    b = np.asarray(values[::-1]) + 1.0
    assert cosine(a, b) == pytest.approx(cosine(b, a), abs=1e-12)
    assert cosine(alpha * a, b) == pytest.approx(cosine(a, b), abs=1e-9)


@given(st.lists(st.text(alphabet="abcd", min_size=1, max_size=4), min_size=1, max_size=8))
def test_tfidf_components_in_unit_interval_and_columns_sum_to_one(words):
    docs = [
        TokenVector("a", {w: 1 + i for i, w in enumerate(words)}),
        TokenVector("b", {words[0]: 2}),
    ]
    vocab = Vocabulary.build(docs)
    vecs = [tfidf_vector(d, vocab) for d in docs]
    for doc, vec in zip(docs, vecs):
        for tok in doc.counts:
            assert 0.0 < vec[vocab.index[tok]] <= 1.0
    sums = np.sum(vecs, axis=0)
    assert np.allclose(sums, 1.0)


def test_modes_agree_on_argmax_for_identical_descriptions(tmp_path):
    src = _mini_corpus("s", {"A": "sort the table rows quickly"})
    tgt = _mini_corpus(
        "t",
        {"X": "sort the table rows quickly", "Y": "unrelated words entirely here"},
    )
    toks = {t for d in ("sort the table rows quickly", "unrelated words entirely here")
            for t in tokenize_and_stem(d)}
    rng = np.random.default_rng(3)
    table = EmbeddingTable(4, {t: rng.normal(size=4) for t in sorted(toks)})
    m_t = build_similarity(src, tgt, "tfidf")
    m_e = build_similarity(src, tgt, "tfidf_embedding", table)
    assert np.argmax(m_t.scores[0]) == np.argmax(m_e.scores[0])
    assert m_e.scores[0, 0] == pytest.approx(1.0)
