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

"""Tokenization and part-of-speech tagging.

Two taggers emit Penn Treebank tags: the bundled `RuleTagger` (lexicon with
suffix backoff and a few contextual repairs) and a trainable averaged
perceptron, `AveragedPerceptronTagger`.
"""

import logging
import os
import random
from dataclasses import dataclass, field, replace

from nltk.tag import RegexpTagger, UnigramTagger
from nltk.tag.perceptron import PerceptronTagger
from nltk.tokenize import PunktSentenceTokenizer, TreebankWordTokenizer

from ._functions import (
    ADJECTIVE_TAGS,
    ADVERB_TAGS,
    AUXILIARIES,
    NOUN_CONTEXT_TAGS,
    NOUN_TAGS,
    SENTENCE_FINAL,
    data_path,
    is_interrogative_form,
    iter_records,
)
from .errors import EmptyInput, EmptyTrainingSet, InvalidTag, ModelNotFound, ParseError

logger = logging.getLogger(__name__)

TAGSET = frozenset(
    [
        "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
        "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
        "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
        "VBZ", "WDT", "WP", "WP$", "WRB",
        ".", ",", ":", "``", "''", "(", ")", "#", "$",
    ]
)

FALLBACK_TAG = "NN"

_TAGDICT_PREFIX = "__word__="
_CLASS_FEATURE = "__class__"

# applied to the surface form, in order; the last pattern always matches
SUFFIX_PATTERNS = [
    (r"^[.!?]+$", "."),
    (r"^,$", ","),
    (r"^(?:[:;]|-+|\.\.\.)$", ":"),
    (r"^(?:``|\")$", "``"),
    (r"^''$", "''"),
    (r"^[(\[{]$", "("),
    (r"^[)\]}]$", ")"),
    (r"^#$", "#"),
    (r"^\$$", "$"),
    (r"^-?\d+(?:[.,:/]\d+)*(?:st|nd|rd|th|s)?$", "CD"),
    (r"^[A-Z][A-Za-z'.-]*$", "NNP"),
    (r"^[A-Za-z-]+ing$", "VBG"),
    (r"^[A-Za-z-]+ed$", "VBN"),
    (r"^[A-Za-z-]+ly$", "RB"),
    (r"^[A-Za-z-]+(?:able|ible|ful|ous|ive|less|ic|ical)$", "JJ"),
    (r"^[A-Za-z-]+[^s']s$", "NNS"),
    (r".*", FALLBACK_TAG),
]


@dataclass(frozen=True)
class Token:
    surface: str
    index: int
    start: int = 0
    end: int = 0
    sentence_start: bool = False
    pos: str = None
    lower: str = field(init=False)
    capital_count: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "lower", self.surface.lower())
        object.__setattr__(self, "capital_count", sum(1 for c in self.surface if c.isupper()))


@dataclass(frozen=True)
class TaggedSentence:
    text: str
    tokens: tuple
    is_question: bool = False

    def __len__(self):
        return len(self.tokens)

    @property
    def tags(self):
        return [token.pos for token in self.tokens]

    @property
    def lowers(self):
        return [token.lower for token in self.tokens]

    @property
    def sentence_starts(self):
        starts = [token.index for token in self.tokens if token.sentence_start]
        if not starts or starts[0] != 0:
            starts.insert(0, 0)
        return starts

    def sentence_spans(self):
        """(start, end) index pairs of the sentences, end exclusive"""
        starts = self.sentence_starts
        ends = starts[1:] + [len(self.tokens)]
        return list(zip(starts, ends))

    def sentence_span(self, index):
        for start, end in self.sentence_spans():
            if start <= index < end:
                return start, end
        raise IndexError(index)

    def words(self, indices):
        return [self.tokens[i].surface for i in sorted(indices)]


_SENTENCE_SPLITTER = PunktSentenceTokenizer()
_WORD_SPLITTER = TreebankWordTokenizer()


def tokenize(text):
    """split a text into untagged tokens

    Sentences are split first so that sentence final punctuation in the
    middle of a tweet is separated as well.

    Args:
        text (str): raw input

    Returns:
        list of Token: tokens with character offsets into `text`
    """
    if text is None or not text.strip():
        raise EmptyInput("input text is empty")
    tokens = []
    for sent_start, sent_end in _SENTENCE_SPLITTER.span_tokenize(text):
        first = True
        for start, end in _WORD_SPLITTER.span_tokenize(text[sent_start:sent_end]):
            tokens.append(
                Token(
                    surface=text[sent_start + start:sent_start + end],
                    index=len(tokens),
                    start=sent_start + start,
                    end=sent_start + end,
                    sentence_start=first,
                )
            )
            first = False
    return tokens


def pos_tag(tokens, model):
    """tags every token with the given tagger

    Args:
        tokens (list of Token): output of `tokenize`
        model (RuleTagger or AveragedPerceptronTagger): a loaded tagger

    Returns:
        TaggedSentence
    """
    if not tokens:
        raise EmptyInput("nothing to tag")
    if model is None:
        raise ModelNotFound("no tagger model loaded")
    tags = model.tag([token.surface for token in tokens])
    tagged = tuple(replace(token, pos=tag or FALLBACK_TAG) for token, tag in zip(tokens, tags))
    text = _reconstruct(tagged)
    return TaggedSentence(
        text=text,
        tokens=tagged,
        is_question=is_interrogative_form([token.lower for token in tagged]),
    )


def tag_text(text, model):
    """tokenize and tag a raw text, keeping the original string"""
    sentence = pos_tag(tokenize(text), model)
    return replace(sentence, text=text)


def _reconstruct(tokens):
    parts = []
    for previous, token in zip((None,) + tokens[:-1], tokens):
        if previous is not None and token.start > previous.end:
            parts.append(" ")
        parts.append(token.surface)
    return "".join(parts)


class _LowercaseUnigramTagger(UnigramTagger):
    """unigram lookup on the case folded token"""

    def context(self, tokens, index, history):
        return tokens[index].lower()


class RuleTagger:
    """A zero-setup tagger: lexicon lookup, suffix patterns, contextual repairs.

    Args:
        lexicon_path (str): `word<TAB>TAG [TAG ...]` file, the first tag is the
            default reading. Defaults to the bundled lexicon.
    """

    def __init__(self, lexicon_path=None):
        self.lexicon_path = lexicon_path or data_path("tag_lexicon.tsv")
        if not os.path.exists(self.lexicon_path):
            raise ModelNotFound("tagger lexicon not found: {}".format(self.lexicon_path))
        self.readings = load_tag_lexicon(self.lexicon_path)
        self._tagger = _LowercaseUnigramTagger(
            model={word: tags[0] for word, tags in self.readings.items()},
            backoff=RegexpTagger(SUFFIX_PATTERNS),
        )

    def tag(self, words):
        tags = [tag for _, tag in self._tagger.tag(list(words))]
        return self._repair(list(words), tags)

    def _has_reading(self, word, tags):
        return any(tag in tags for tag in self.readings.get(word.lower(), ()))

    def _first_reading(self, word, tags):
        for tag in self.readings.get(word.lower(), ()):
            if tag in tags:
                return tag
        return None

    def _repair(self, words, tags):
        lowers = [word.lower() for word in words]
        n = len(words)
        for i in range(n):
            known = lowers[i] in self.readings
            sentence_initial = i == 0 or tags[i - 1] == "." and words[i - 1] in SENTENCE_FINAL

            # unknown capitalized word at sentence start is a proper noun
            # only when a capitalized word follows
            if not known and tags[i] == "NNP" and sentence_initial:
                if not (i + 1 < n and words[i + 1][:1].isupper()):
                    tags[i] = _suffix_tag(lowers[i])

            if not sentence_initial and words[i][:1].isupper() and tags[i] in ("NN", "NNS"):
                tags[i] = "NNP" if tags[i] == "NN" else "NNPS"

            if sentence_initial and tags[i] == "VBP" and lowers[i] not in AUXILIARIES:
                tags[i] = "VB"

            j = i - 1
            while j >= 0 and (tags[j] in ADVERB_TAGS or tags[j] == "PRP"):
                j -= 1
            governor = lowers[j] if j >= 0 else None
            governor_tag = tags[j] if j >= 0 else None
            if governor_tag in ("TO", "MD") or governor in ("do", "does", "did"):
                if self._has_reading(words[i], ("VB",)):
                    tags[i] = "VB"

            if i > 0 and tags[i - 1] in NOUN_CONTEXT_TAGS:
                if tags[i] not in NOUN_TAGS and tags[i] not in ADJECTIVE_TAGS:
                    noun = self._first_reading(words[i], NOUN_TAGS)
                    if noun is not None:
                        tags[i] = noun

            if lowers[i] == "like" and i > 0 and lowers[i - 1] in ("i", "you", "we", "they"):
                tags[i] = "VBP"

        for i in range(n):
            if lowers[i] == "that":
                tags[i] = _that_tag(tags, i)
        return tags


_COMMON_TAGGER = RegexpTagger([pattern for pattern in SUFFIX_PATTERNS if pattern[1] != "NNP"])


def _suffix_tag(word):
    return _COMMON_TAGGER.tag([word])[0][1]


def _that_tag(tags, i):
    following = tags[i + 1] if i + 1 < len(tags) else None
    previous = tags[i - 1] if i > 0 else None
    if previous in NOUN_TAGS and following in ("VBZ", "VBP", "VBD", "MD"):
        return "WDT"
    if following in NOUN_TAGS or following in ADJECTIVE_TAGS:
        return "DT"
    if following in ("VBZ", "VBP", "VBD", "MD", ".", None):
        return "DT"
    return "IN"


def load_tag_lexicon(path):
    """reads `word<TAB>TAG [TAG ...]` lines

    Returns:
        dict: lowercase word -> tuple of tags, default reading first
    """
    readings = {}
    for line_no, fields in iter_records(path):
        if len(fields) != 2:
            raise ParseError("expected word<TAB>tags", line=line_no)
        tags = tuple(fields[1].split())
        unknown = [tag for tag in tags if tag not in TAGSET]
        if not tags or unknown:
            raise InvalidTag("line {}: unknown tag(s) {}".format(line_no, unknown))
        readings[fields[0].strip().lower()] = tags
    return readings


class AveragedPerceptronTagger:
    """trainable tagger on top of nltk's averaged perceptron

    Args:
        tagger (nltk.tag.perceptron.PerceptronTagger): a trained tagger
    """

    def __init__(self, tagger):
        self._tagger = tagger

    def tag(self, words):
        return [tag for _, tag in self._tagger.tag(list(words))]

    @property
    def weights(self):
        return self._tagger.model.weights

    @property
    def classes(self):
        return self._tagger.model.classes

    @property
    def tagdict(self):
        return self._tagger.tagdict


def train_tagger(tagged_corpus, nr_iter=5, seed=42):
    """trains an averaged perceptron tagger

    Args:
        tagged_corpus (list of (list of str, list of str)): tokens and tags
        nr_iter (int): training passes
        seed (int): seeds the sentence shuffling between passes

    Returns:
        AveragedPerceptronTagger
    """
    sentences = []
    for words, tags in tagged_corpus:
        unknown = sorted(str(tag) for tag in set(tags) - TAGSET)
        if unknown:
            raise InvalidTag("tags outside the tagset: {}".format(unknown))
        if len(words) != len(tags):
            raise InvalidTag("token and tag counts differ")
        sentences.append(list(zip(words, tags)))
    if not sentences:
        raise EmptyTrainingSet("tagger training corpus is empty")

    tagger = PerceptronTagger(load=False)
    state = random.getstate()
    random.seed(seed)
    try:
        tagger.train(sentences, nr_iter=nr_iter)
    finally:
        random.setstate(state)
    logger.debug("trained tagger on %d sentences, %d features", len(sentences), len(tagger.model.weights))
    return AveragedPerceptronTagger(tagger)


def save_tagger(model, path):
    """writes the `feature<TAB>tag<TAB>weight` model file"""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for tag in sorted(model.classes):
            handle.write("{}\t{}\t0\n".format(_CLASS_FEATURE, tag))
        for word, tag in sorted(model.tagdict.items()):
            handle.write("{}{}\t{}\t1\n".format(_TAGDICT_PREFIX, word, tag))
        for feature in sorted(model.weights):
            for tag, weight in sorted(model.weights[feature].items()):
                if weight:
                    handle.write("{}\t{}\t{!r}\n".format(feature, tag, float(weight)))
    logger.debug("saved tagger model to %s", path)


def load_tagger(path=None):
    """loads a perceptron tagger file, or the bundled rule tagger if path is None"""
    if path is None:
        return RuleTagger()
    if not os.path.exists(path):
        raise ModelNotFound("tagger model not found: {}".format(path))
    weights, classes, tagdict = {}, set(), {}
    for line_no, fields in iter_records(path):
        if len(fields) != 3:
            raise ParseError("expected feature<TAB>tag<TAB>weight", line=line_no)
        feature, tag, value = fields
        if tag not in TAGSET:
            raise InvalidTag("line {}: unknown tag {}".format(line_no, tag))
        classes.add(tag)
        if feature == _CLASS_FEATURE:
            continue
        if feature.startswith(_TAGDICT_PREFIX):
            tagdict[feature[len(_TAGDICT_PREFIX):]] = tag
            continue
        try:
            weights.setdefault(feature, {})[tag] = float(value)
        except ValueError:
            raise ParseError("weight is not a number: {}".format(value), line=line_no)
    tagger = PerceptronTagger(load=False)
    tagger.model.weights = weights
    tagger.model.classes = classes
    tagger.classes = classes
    tagger.tagdict = tagdict
    logger.debug("loaded tagger model from %s (%d features)", path, len(weights))
    return AveragedPerceptronTagger(tagger)
