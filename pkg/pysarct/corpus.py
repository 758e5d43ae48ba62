# -*- coding: utf-8 -*-
# ***************************************************************************
# *                                                                         *
# * This program is free software: you can redistribute it and/or modify    *
# * it under the terms of the GNU General Public License as published by    *
# * the Free Software Foundation, either version 3 of the License, or       *
# * (at your option) any later version.                                     *
# *                                                                         *
# * This program is distributed in the hope that it will be useful,         *
# * but WITHOUT ANY WARRANTY; without even the implied warranty of          *
# * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the           *
# * GNU General Public License for more details.                            *
# *                                                                         *
# * You should have received a copy of the GNU General Public License       *
# * along with this program.  If not, see <http://www.gnu.org/licenses/>.   *
# *                                                                         *
# ***************************************************************************

"""Annotated corpora: `id<TAB>text<TAB>target` records.

The target is `word(|word)*` or the literal OUTSIDE.
"""

import logging
import os
from collections import Counter
from dataclasses import dataclass

import numpy as np

from ._functions import iter_records
from .errors import AnnotationMismatch, ParseError
from .sentiment import default_lexicon, polarity_strength
from .tagging import pos_tag, tokenize
from .target import OUTSIDE, OUTSIDE_LABEL, TargetAnnotation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Document:
    """one annotated text; an empty `gold` means the target is Outside"""

    id: str
    text: str
    gold: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gold", tuple(self.gold))
        if OUTSIDE_LABEL in self.gold:
            raise ParseError("{} cannot be combined with target words".format(OUTSIDE_LABEL))

    @property
    def is_outside(self):
        return not self.gold

    @property
    def target_field(self):
        return "|".join(self.gold) if self.gold else OUTSIDE_LABEL


def parse_target(field, line=None):
    field = field.strip()
    if not field:
        raise ParseError("empty target field", line=line)
    if field == OUTSIDE_LABEL:
        return ()
    words = tuple(word.strip() for word in field.split("|"))
    if any(not word for word in words):
        raise ParseError("empty word in target '{}'".format(field), line=line)
    if OUTSIDE_LABEL in words:
        raise ParseError("{} cannot be combined with target words".format(OUTSIDE_LABEL), line=line)
    return words


def check_gold(document, tokens=None, line=None):
    """raises AnnotationMismatch unless every gold word occurs in the text"""
    tokens = tokenize(document.text) if tokens is None else tokens
    available = Counter(token.lower for token in tokens)
    for word, count in Counter(word.lower() for word in document.gold).items():
        if available[word] < count:
            raise AnnotationMismatch(
                "target word '{}' not found in document {}".format(word, document.id),
                line=line,
            )


def load_corpus(path):
    """reads and validates a corpus file

    Args:
        path (str): UTF-8 corpus; a line starting with `#` and holding no tab
            is a comment. The id column may be left empty (or omitted) and
            defaults to the line number

    Returns:
        list of Document
    """
    if not os.path.exists(path):
        raise FileNotFoundError("corpus not found: {}".format(path))
    documents = []
    for line_no, fields in iter_records(path, tabbed_hash_lines=True):
        if len(fields) == 2:
            fields = [""] + fields
        if len(fields) != 3:
            raise ParseError("expected id<TAB>text<TAB>target", line=line_no)
        doc_id, text, target = fields
        if not text.strip():
            raise ParseError("empty text", line=line_no)
        document = Document(doc_id.strip() or str(line_no), text, parse_target(target, line_no))
        check_gold(document, line=line_no)
        documents.append(document)
    logger.debug("loaded %d documents from %s", len(documents), path)
    return documents


def storable_target(words):
    """the words of a predicted target that a target field can carry

    Words holding the `|` separator, and the Outside label itself, are dropped.
    """
    kept = tuple(word for word in words if "|" not in word and word != OUTSIDE_LABEL)
    if len(kept) != len(words):
        logger.debug("dropped %d target words a target field cannot hold", len(words) - len(kept))
    return kept


def save_corpus(documents, path):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for document in documents:
            handle.write("{}\t{}\t{}\n".format(document.id, document.text, document.target_field))


def resolve_gold_indices(d, s):
    """maps the gold words of `d` to token indices of `s`

    A repeated word claims its leftmost occurrence not claimed before.

    Args:
        d (Document): annotated document
        s (TaggedSentence): tokenization of `d.text`

    Returns:
        TargetAnnotation
    """
    if d.is_outside:
        return OUTSIDE
    claimed = set()
    lowers = s.lowers
    for word in d.gold:
        word = word.lower()
        index = next((i for i, lower in enumerate(lowers) if lower == word and i not in claimed), None)
        if index is None:
            raise AnnotationMismatch("cannot resolve '{}' in document {}".format(word, d.id))
        claimed.add(index)
    return TargetAnnotation.of(claimed)


def prepare_corpus(documents, tagger):
    """tags every document and resolves its gold target

    Returns:
        list of (TaggedSentence, TargetAnnotation): aligned with `documents`
    """
    prepared = []
    for document in documents:
        s = pos_tag(tokenize(document.text), tagger)
        prepared.append((s, resolve_gold_indices(document, s)))
    return prepared


@dataclass(frozen=True)
class CorpusStats:
    count: int
    avg_words: float
    vocabulary: int
    total_words: int
    avg_target_length: float
    avg_target_polarity_strength: float
    avg_rest_polarity_strength: float
    outside_only: bool = False


def corpus_stats(corpus, lex=None):
    """dataset statistics of a list of Documents

    Target figures average over the documents with a word target; the
    polarity strength of the rest averages over every document.
    """
    lex = lex or default_lexicon()
    documents = list(corpus)
    if not documents:
        raise ValueError("corpus is empty")
    lengths = []
    vocabulary = set()
    target_lengths = []
    target_strengths = []
    rest_strengths = []
    for document in documents:
        tokens = tokenize(document.text)
        lowers = [token.lower for token in tokens]
        lengths.append(len(lowers))
        vocabulary.update(lowers)
        rest = list(lowers)
        if not document.is_outside:
            target = [word.lower() for word in document.gold]
            for word in target:
                rest.remove(word)
            target_lengths.append(len(target))
            target_strengths.append(polarity_strength(lex, target))
        rest_strengths.append(polarity_strength(lex, rest))
    outside_only = not target_lengths
    return CorpusStats(
        count=len(documents),
        avg_words=float(np.mean(lengths)),
        vocabulary=len(vocabulary),
        total_words=int(np.sum(lengths)),
        avg_target_length=0.0 if outside_only else float(np.mean(target_lengths)),
        avg_target_polarity_strength=0.0 if outside_only else float(np.mean(target_strengths)),
        avg_rest_polarity_strength=float(np.mean(rest_strengths)),
        outside_only=outside_only,
    )


def format_stats(stats):
    rows = [
        ("Count", str(stats.count)),
        ("Average #words", "{:.2f}".format(stats.avg_words)),
        ("Vocabulary", str(stats.vocabulary)),
        ("Total words", str(stats.total_words)),
        ("Average length of sarcasm target", "{:.2f}".format(stats.avg_target_length)),
        ("Average polarity strength of sarcasm target", "{:.2f}".format(stats.avg_target_polarity_strength)),
        ("Average polarity strength of portion apart from sarcasm target",
         "{:.2f}".format(stats.avg_rest_polarity_strength)),
    ]
    if stats.outside_only:
        rows.append(("Note", "every target is Outside, target figures are 0"))
    width = max(len(name) for name, _ in rows)
    return "\n".join("{}  {}".format(name.ljust(width), value) for name, value in rows)
