"""Title tokenization and tf-idf weighting for word relations.

Titles are lowercased, stripped of punctuation, cleared of stop words,
and stemmed. A document is one (stream, year) bag of title terms; tf-idf
over these documents weights the stream-word relations and suppresses
nondescriptive terms that occur everywhere.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Mapping, Sequence

from .stemming import stem

__all__ = ["DEFAULT_STOPWORDS", "extract_word_pairs", "extract_words", "tfidf"]

DEFAULT_STOPWORDS = frozenset(
    """
    a about above after again all also among an and any are as at be because
    been before being below between both but by can could did do does doing
    down during each few for from further had has have having here how i if
    in into is it its itself more most no nor not of off on once only or
    other our out over own same should so some such than that the their
    theirs them then there these they this those through to too under until
    up very was we were what when where which while who whom why will with
    without would you your
    """.split()
)

_TOKEN = re.compile(r"[a-z0-9]+")


def extract_word_pairs(
    title: str, stopwords: frozenset[str] | set[str] = DEFAULT_STOPWORDS
) -> list[tuple[str, str]]:
    """(stem, original token) pairs of a title, in order, duplicates kept.

    Lowercases, strips punctuation, drops stop words and bare numbers,
    then stems what remains.
    """
    pairs = []
    for token in _TOKEN.findall(title.lower()):
        if token in stopwords or token.isdigit():
            continue
        pairs.append((stem(token), token))
    return pairs


def extract_words(
    title: str, stopwords: frozenset[str] | set[str] = DEFAULT_STOPWORDS
) -> list[str]:
    """Normalized terms of a title, in order, duplicates preserved."""
    return [term for term, _ in extract_word_pairs(title, stopwords)]


def tfidf(
    term: str,
    doc: Mapping[str, int],
    docs: Sequence[Mapping[str, int]] | Iterable[Mapping[str, int]],
) -> float:
    """Raw term count times ln(N / document frequency).

    Zero when the term is absent from the document, and zero when the
    term occurs in every document (ln 1 = 0), which is exactly how
    nondescriptive words vanish.
    """
    tf = doc.get(term, 0)
    if tf == 0:
        return 0.0
    docs = list(docs)
    df = sum(1 for d in docs if d.get(term, 0) > 0)
    return tf * math.log(len(docs) / df)
