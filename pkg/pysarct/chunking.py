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

"""Shallow parsing over a TaggedSentence.

Chunk spans are inclusive token index ranges.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from nltk.chunk import RegexpParser

from ._functions import (
    ADVERB_TAGS,
    AUXILIARIES,
    BE_FORMS,
    FINITE_VERB_TAGS,
    VERB_TAGS,
    data_path,
    is_interrogative_form,
    read_word_list,
)
from .errors import NotAVerb


class ChunkKind(Enum):
    NOUN_PHRASE = "NounPhrase"
    GERUND_PHRASE = "GerundPhrase"
    INFINITIVE_PHRASE = "InfinitivePhrase"
    NAMED_ENTITY = "NamedEntity"
    SUBJECT = "Subject"
    OBJECT = "Object"


@dataclass(frozen=True)
class Chunk:
    kind: ChunkKind
    start: int
    end: int

    def __post_init__(self):
        if self.start < 0 or self.end < self.start:
            raise ValueError("invalid chunk span ({}, {})".format(self.start, self.end))

    @property
    def indices(self):
        return range(self.start, self.end + 1)

    def __len__(self):
        return self.end - self.start + 1

    def __contains__(self, index):
        return self.start <= index <= self.end

    def as_kind(self, kind):
        return Chunk(kind, self.start, self.end)


NP_GRAMMAR = r"NP: {<DT|PRP\$>?<CD>*<RB.*>*<JJ.*>*<NN.*>+}"

_NP_PARSER = RegexpParser(NP_GRAMMAR)

# a gerund or infinitive span stops before any of these
_BOUNDARY_TAGS = frozenset([",", ":", ".", "CC", "(", ")"]) | FINITE_VERB_TAGS


@lru_cache(maxsize=None)
def common_words(path=None):
    """the common-word lexicon used to screen sentence initial capitals"""
    return read_word_list(path or data_path("common_words.txt"))


def noun_phrases(s):
    """maximal determiner-adjective-noun runs, left to right

    Args:
        s (TaggedSentence): tagged sentence

    Returns:
        list of Chunk: NounPhrase chunks
    """
    if not len(s):
        return []
    # leaves carry the token index in place of the word
    tree = _NP_PARSER.parse([(token.index, token.pos) for token in s.tokens])
    chunks = []
    for subtree in tree.subtrees(filter=lambda t: t.label() == "NP"):
        indices = [index for index, _ in subtree.leaves()]
        chunks.append(Chunk(ChunkKind.NOUN_PHRASE, indices[0], indices[-1]))
    return sorted(chunks, key=lambda chunk: chunk.start)


def _is_progressive(s, index):
    j = index - 1
    while j >= 0 and s.tokens[j].pos in ADVERB_TAGS:
        j -= 1
    return j >= 0 and s.tokens[j].lower in BE_FORMS


def _phrase_end(s, index):
    _, sentence_end = s.sentence_span(index)
    end = index
    while end + 1 < sentence_end and s.tokens[end + 1].pos not in _BOUNDARY_TAGS:
        end += 1
    return end


def gerund_and_infinitive_phrases(s):
    """gerund phrases (VBG ...) and infinitives (TO VB ...)

    A phrase extends over its complements up to a comma, semicolon, colon,
    coordinating conjunction, finite verb or the end of the sentence.
    Progressive participles (after a form of "be") do not open a gerund.

    Args:
        s (TaggedSentence): tagged sentence

    Returns:
        list of Chunk: GerundPhrase and InfinitivePhrase chunks sorted by start
    """
    chunks = []
    gerund_end = infinitive_end = -1
    tags = s.tags
    for i, tag in enumerate(tags):
        if tag == "VBG" and i > gerund_end and not _is_progressive(s, i):
            gerund_end = _phrase_end(s, i)
            chunks.append(Chunk(ChunkKind.GERUND_PHRASE, i, gerund_end))
        elif tag == "TO" and i > infinitive_end:
            j = i + 1
            while j < len(tags) and tags[j] in ADVERB_TAGS:
                j += 1
            if j < len(tags) and tags[j] == "VB":
                infinitive_end = _phrase_end(s, j)
                chunks.append(Chunk(ChunkKind.INFINITIVE_PHRASE, i, infinitive_end))
    return sorted(chunks, key=lambda chunk: (chunk.start, chunk.kind.value))


def _is_entity_token(token, common):
    if token.pos in ("NNP", "NNPS"):
        return True
    if token.pos in ("NN", "NNS") and token.surface[:1].isupper():
        if token.sentence_start or token.index == 0:
            return token.lower not in common
        return True
    return False


def named_entities(s, common=None):
    """runs of capitalized nominal tokens

    Args:
        s (TaggedSentence): tagged sentence
        common (frozenset): common-word lexicon, bundled list by default

    Returns:
        list of Chunk: NamedEntity chunks
    """
    common = common_words() if common is None else common
    chunks = []
    start = None
    for token in s.tokens:
        if _is_entity_token(token, common):
            if start is None:
                start = token.index
        elif start is not None:
            chunks.append(Chunk(ChunkKind.NAMED_ENTITY, start, token.index - 1))
            start = None
    if start is not None:
        chunks.append(Chunk(ChunkKind.NAMED_ENTITY, start, len(s) - 1))
    return chunks


def pronouns(s):
    """single token chunks for the personal pronouns"""
    return [Chunk(ChunkKind.NOUN_PHRASE, t.index, t.index) for t in s.tokens if t.pos == "PRP"]


def subject_object(s, verb_index):
    """subject and object around a verb, by chunk adjacency

    The subject is the rightmost noun phrase or pronoun ending before the
    verb, the object the first noun phrase, gerund, infinitive or pronoun
    after it, both within the verb's sentence.

    Args:
        s (TaggedSentence): tagged sentence
        verb_index (int): index of a verb-tagged token

    Returns:
        (Chunk or None, Chunk or None): Subject and Object chunks
    """
    if not 0 <= verb_index < len(s) or s.tokens[verb_index].pos not in VERB_TAGS:
        raise NotAVerb("token {} is not a verb".format(verb_index))
    start, end = s.sentence_span(verb_index)
    nominals = noun_phrases(s) + pronouns(s)

    before = [c for c in nominals if c.start >= start and c.end < verb_index]
    subject = None
    if before:
        best = max(before, key=lambda c: (c.end, -c.start))
        subject = best.as_kind(ChunkKind.SUBJECT)

    after = [
        c
        for c in nominals + gerund_and_infinitive_phrases(s)
        if verb_index < c.start and c.end < end
    ]
    obj = None
    if after:
        best = min(after, key=lambda c: (c.start, -len(c)))
        obj = best.as_kind(ChunkKind.OBJECT)
    return subject, obj


def is_interrogative(s):
    """True iff the sentence ends with '?' or opens with a question word"""
    return is_interrogative_form(s.lowers)


def _governs_verb(s, index, end, inside):
    j = index + 1
    while j < end and (s.tokens[j].pos in ADVERB_TAGS or s.tokens[j].pos == "PRP"):
        j += 1
    return j < end and s.tokens[j].pos in VERB_TAGS and j not in inside


def main_verb(s, start=0, end=None):
    """leftmost verb outside gerund and infinitive phrases

    Auxiliaries and modals that govern a following verb are skipped.

    Args:
        s (TaggedSentence): tagged sentence
        start (int): first token to consider
        end (int): stop before this token, defaults to the sentence length

    Returns:
        int or None: token index of the main verb
    """
    end = len(s) if end is None else end
    inside = set()
    for chunk in gerund_and_infinitive_phrases(s):
        inside.update(chunk.indices)
    for i in range(start, end):
        token = s.tokens[i]
        if token.pos not in VERB_TAGS or i in inside:
            continue
        if token.lower in AUXILIARIES or token.pos == "MD":
            clause_end = min(end, s.sentence_span(i)[1])
            if _governs_verb(s, i, clause_end, inside):
                continue
        return i
    return None
