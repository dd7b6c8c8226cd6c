"""API description representations and cross-library similarity ranking.

Each documented callable is embedded from its description text alone.
Two representation modes are supported:

* ``tfidf`` — bag of stemmed words where component j of document i is
  ``count_ij / total_count_j`` (raw frequency normalized by corpus-wide
  frequency of the token across all documents of both libraries).
* ``tfidf_embedding`` — the same weights used as coefficients over
  pretrained word vectors, summed into one dense sentence vector.

Similarity is cosine; rankings break ties lexicographically by target
name so results are reproducible.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import DocCorpus
from .errors import ConsistencyError, SchemaError, ValidationError
from .stemming import stem

_WORD_RE = re.compile(r"[a-z0-9]+")


def tokenize_and_stem(description: str) -> list[str]:
    """Lowercase, strip punctuation, stem. Deterministic; '' -> []."""
    return [stem(w) for w in _WORD_RE.findall(description.lower())]


@dataclass(frozen=True)
class TokenVector:
    doc_id: str
    counts: dict[str, int]

    @classmethod
    def from_text(cls, doc_id: str, text: str) -> "TokenVector":
        counts: dict[str, int] = {}
        for tok in tokenize_and_stem(text):
            counts[tok] = counts.get(tok, 0) + 1
        return cls(doc_id=doc_id, counts=counts)


@dataclass(frozen=True)
class Vocabulary:
    tokens: tuple[str, ...]
    corpus_frequency: dict[str, int]
    index: dict[str, int]

    @classmethod
    def build(cls, docs: list[TokenVector]) -> "Vocabulary":
        freq: dict[str, int] = {}
        order: list[str] = []
        for doc in docs:
            for tok, n in doc.counts.items():
                if tok not in freq:
                    freq[tok] = 0
                    order.append(tok)
                freq[tok] += n
        return cls(
            tokens=tuple(order),
            corpus_frequency=freq,
            index={t: j for j, t in enumerate(order)},
        )

    @property
    def size(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class EmbeddingTable:
    dimension: int
    vectors: dict[str, np.ndarray]

    def __post_init__(self) -> None:
        for tok, vec in self.vectors.items():
            if vec.shape != (self.dimension,):
                raise ValidationError(
                    f"embedding for {tok!r} has length {vec.shape[0]}, "
                    f"table dimension is {self.dimension}"
                )


def load_embeddings(path: str | Path) -> EmbeddingTable:
    """Read a GloVe-style text file: token then whitespace-separated floats."""
    vectors: dict[str, np.ndarray] = {}
    dimension: int | None = None
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        tok, comps = parts[0], parts[1:]
        try:
            vec = np.asarray([float(c) for c in comps], dtype=np.float64)
        except ValueError:
            raise SchemaError(f"{path}:{lineno}: non-numeric embedding component") from None
        if dimension is None:
            dimension = len(vec)
        if len(vec) != dimension:
            raise ValidationError(
                f"{path}:{lineno}: embedding length {len(vec)} != dimension {dimension}"
            )
        vectors[tok] = vec
    if dimension is None:
        raise SchemaError(f"{path}: empty embedding file")
    return EmbeddingTable(dimension=dimension, vectors=vectors)


def _weight(doc: TokenVector, token: str, vocab: Vocabulary, classical_idf: bool, m: int) -> float:
    count = doc.counts[token]
    if classical_idf:
        # Smoothed log-idf alternative, off by default.
        df = vocab.corpus_frequency[token]
        return count * (math.log((1 + m) / (1 + df)) + 1.0)
    return count / vocab.corpus_frequency[token]


def tfidf_vector(
    doc: TokenVector, vocab: Vocabulary, *, classical_idf: bool = False, m: int = 0
) -> np.ndarray:
    """Dense frequency-normalized vector over the vocabulary."""
    out = np.zeros(vocab.size, dtype=np.float64)
    for tok in doc.counts:
        j = vocab.index.get(tok)
        if j is None:
            raise ConsistencyError(
                f"token {tok!r} of doc {doc.doc_id!r} not in vocabulary; "
                "vocabulary must be built over the same corpus"
            )
        out[j] = _weight(doc, tok, vocab, classical_idf, m)
    return out


def embed_sentence(
    doc: TokenVector,
    vocab: Vocabulary,
    table: EmbeddingTable,
    *,
    classical_idf: bool = False,
    m: int = 0,
) -> np.ndarray:
    """Weighted sum of word vectors; out-of-table tokens contribute zero."""
    out = np.zeros(table.dimension, dtype=np.float64)
    for tok in doc.counts:
        if tok not in vocab.index:
            raise ConsistencyError(f"token {tok!r} of doc {doc.doc_id!r} not in vocabulary")
        vec = table.vectors.get(tok)
        if vec is None:
            continue
        out += _weight(doc, tok, vocab, classical_idf, m) * vec
    return out


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """a.b / (|a||b|); defined as 0.0 when either vector is all zeros."""
    if a.shape != b.shape:
        raise ValidationError(f"cosine on mismatched lengths {a.shape} vs {b.shape}")
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(a, b) / (na * nb))


@dataclass(frozen=True)
class SimilarityMatrix:
    source_ids: tuple[str, ...]
    target_ids: tuple[str, ...]
    scores: np.ndarray  # |source| x |target|

    def row(self, source_api: str) -> np.ndarray:
        try:
            i = self.source_ids.index(source_api)
        except ValueError:
            raise KeyError(source_api) from None
        return self.scores[i]


def build_similarity(
    source: DocCorpus,
    target: DocCorpus,
    mode: str = "tfidf",
    table: EmbeddingTable | None = None,
    *,
    classical_idf: bool = False,
) -> SimilarityMatrix:
    """Pre-compute the score matrix between all source/target entries.

    The vocabulary spans the union of both corpora so all vectors live in
    one space.
    """
    if mode not in ("tfidf", "tfidf_embedding"):
        raise ValidationError(f"unknown matching mode {mode!r}")
    if mode == "tfidf_embedding" and table is None:
        raise ValidationError("tfidf_embedding mode requires an embedding table")
    src_docs = [
        TokenVector.from_text(e.qualified_name, e.description) for e in source.entries
    ]
    tgt_docs = [
        TokenVector.from_text(e.qualified_name, e.description) for e in target.entries
    ]
    vocab = Vocabulary.build(src_docs + tgt_docs)
    m = len(src_docs) + len(tgt_docs)

    def rep(doc: TokenVector) -> np.ndarray:
        if mode == "tfidf":
            return tfidf_vector(doc, vocab, classical_idf=classical_idf, m=m)
        assert table is not None
        return embed_sentence(doc, vocab, table, classical_idf=classical_idf, m=m)

    src_vecs = [rep(d) for d in src_docs]
    tgt_vecs = [rep(d) for d in tgt_docs]
    scores = np.zeros((len(src_vecs), len(tgt_vecs)), dtype=np.float64)
    for i, sv in enumerate(src_vecs):
        for j, tv in enumerate(tgt_vecs):
            scores[i, j] = cosine(sv, tv)
    return SimilarityMatrix(
        source_ids=tuple(d.doc_id for d in src_docs),
        target_ids=tuple(d.doc_id for d in tgt_docs),
        scores=scores,
    )


def rank_targets(
    matrix: SimilarityMatrix, source_api: str, top_k: int
) -> list[tuple[str, float]]:
    """Top-k target names by descending score, ties lexicographic by name."""
    if top_k < 1:
        raise ValidationError("top_k must be positive")
    row = matrix.row(source_api)
    pairs = sorted(
        zip(matrix.target_ids, row), key=lambda p: (-p[1], p[0])
    )
    return [(name, float(score)) for name, score in pairs[:top_k]]
