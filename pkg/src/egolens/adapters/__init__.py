"""Data adapters: the source contract plus the bundled loaders."""

from .base import AdapterContract, MemoryDataset, RelationDescriptor
from .dblp import parse_dblp, read_dblp_records
from .edgelist import load_edge_list, serialize_dataset
from .fillspec import format_filling, parse_filling
from .snapshot import load_snapshot, save_snapshot
from .stemming import stem
from .words import DEFAULT_STOPWORDS, extract_word_pairs, extract_words, tfidf

__all__ = [
    "AdapterContract",
    "MemoryDataset",
    "RelationDescriptor",
    "parse_dblp",
    "read_dblp_records",
    "load_edge_list",
    "serialize_dataset",
    "format_filling",
    "parse_filling",
    "load_snapshot",
    "save_snapshot",
    "stem",
    "DEFAULT_STOPWORDS",
    "extract_word_pairs",
    "extract_words",
    "tfidf",
]
