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

"""The nine-rule extractor and its weighted majority combination.

A rule returns None (no match) when its trigger pattern is absent; this is
distinct from a matched rule with an empty candidate.
"""

import logging
import math
import os
from collections import defaultdict
from enum import Enum

from ._functions import (
    ADJECTIVE_TAGS,
    ADVERB_TAGS,
    DEMONSTRATIVES,
    NOUN_TAGS,
    PUNCTUATION_TAGS,
    QUESTION_WORDS,
    VERB_TAGS,
    iter_records,
)
from .chunking import (
    gerund_and_infinitive_phrases,
    main_verb,
    named_entities,
    noun_phrases,
    pronouns,
    subject_object,
)
from .errors import ModelNotFound, NothingToCombine, ParseError, RangeError
from .metrics import Slice, summarize
from .sentiment import default_lexicon, polarity_strength
from .target import OUTSIDE_ELEMENT, CandidateSet, TargetAnnotation

logger = logging.getLogger(__name__)


class RuleId(Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"
    R6 = "R6"
    R7 = "R7"
    R8 = "R8"
    R9 = "R9"


class WeightMetric(Enum):
    OVERALL_DICE = "overall-dice"
    OVERALL_EM = "overall-em"
    CONDITIONAL_DICE = "conditional-dice"
    CONDITIONAL_EM = "conditional-em"


class RuleWeights:
    """per-rule accuracies in [0, 1]

    Args:
        weights (dict): RuleId -> weight, missing rules get `default`
        default (float): weight of rules not listed
    """

    def __init__(self, weights=None, default=1.0):
        weights = dict(weights or {})
        self._weights = {}
        for rule in RuleId:
            value = float(weights.get(rule, default))
            if not 0.0 <= value <= 1.0:
                raise RangeError("weight of {} outside [0, 1]: {}".format(rule.value, value))
            self._weights[rule] = value

    def __getitem__(self, rule):
        return self._weights[rule]

    def items(self):
        return self._weights.items()

    def as_dict(self):
        return dict(self._weights)

    def __eq__(self, other):
        return isinstance(other, RuleWeights) and self._weights == other._weights

    def __repr__(self):
        return "RuleWeights({})".format(
            ", ".join("{}={:.4f}".format(r.value, w) for r, w in self._weights.items())
        )


def _content(s, start, end):
    return [i for i in range(start, end) if s.tokens[i].pos not in PUNCTUATION_TAGS]


def _pronoun_rule(s, lex):
    indices = {chunk.start for chunk in pronouns(s)}
    possessive_phrases = {c.start: c for c in noun_phrases(s)}
    for token in s.tokens:
        if token.pos == "PRP$":
            chunk = possessive_phrases.get(token.index)
            indices.update(chunk.indices if chunk else [token.index])
    return CandidateSet(indices) if indices else None


def _named_entity_rule(s, lex):
    indices = set()
    for chunk in named_entities(s):
        indices.update(chunk.indices)
    return CandidateSet(indices) if indices else None


def _positive_verb_rule(s, lex):
    verb = main_verb(s)
    if verb is None:
        return None
    polarity = lex.get(s.tokens[verb].surface)
    if polarity < 0:
        return CandidateSet.outside()
    if polarity > 0:
        _, obj = subject_object(s, verb)
        if obj is not None:
            return CandidateSet(obj.indices)
    return None


def _neutral_verb_rule(s, lex):
    verb = main_verb(s)
    if verb is None or lex.get(s.tokens[verb].surface) != 0:
        return None
    start, end = s.sentence_span(verb)
    left = _content(s, start, verb)
    right = _content(s, verb + 1, end)
    if not left and not right:
        return None
    if not left or not right:
        return CandidateSet(left or right)
    left_strength = polarity_strength(lex, s.words(left))
    right_strength = polarity_strength(lex, s.words(right))
    # ties go to the object side
    return CandidateSet(left if left_strength < right_strength else right)


def _verb_phrase_rule(s, lex):
    indices = set()
    for chunk in gerund_and_infinitive_phrases(s):
        indices.update(chunk.indices)
    return CandidateSet(indices) if indices else None


def _positive_adjective_rule(s, lex, window=3):
    indices = set()
    for token in s.tokens:
        if token.pos not in NOUN_TAGS:
            continue
        start, _ = s.sentence_span(token.index)
        for j in range(max(start, token.index - window), token.index):
            other = s.tokens[j]
            if other.pos in ADJECTIVE_TAGS and lex.get(other.surface) > 0:
                indices.add(token.index)
                break
    return CandidateSet(indices) if indices else None


def _nominals(s):
    return noun_phrases(s) + pronouns(s)


def _question_span(s):
    question = None
    for start, end in s.sentence_spans():
        lowers = s.lowers[start:end]
        if lowers and (lowers[-1] == "?" or lowers[0] in QUESTION_WORDS):
            question = (start, end)
    return question


def _interrogative_rule(s, lex):
    if not s.is_question:
        return None
    span = _question_span(s)
    if span is None:
        return CandidateSet()
    start, end = span
    subject = None
    inverted = s.lowers[start] in QUESTION_WORDS
    first = start + 1 if inverted else start
    verbs = [i for i in range(first, end) if s.tokens[i].pos in VERB_TAGS]
    if verbs:
        subject, _ = subject_object(s, verbs[0])
        if subject is not None and subject.start < first:
            subject = None
    if subject is None:
        following = [c for c in _nominals(s) if first <= c.start and c.end < end]
        if following:
            subject = min(following, key=lambda c: c.start)
    return CandidateSet(subject.indices) if subject is not None else CandidateSet()


def _simile_triggers(s):
    tags, lowers = s.tags, s.lowers
    for start, end in s.sentence_spans():
        for i in range(start, end):
            if lowers[i] == "as" and i + 1 < end:
                if lowers[i + 1] == "if":
                    yield i, i + 1, end
                elif tags[i + 1] in ADJECTIVE_TAGS or tags[i + 1] in ADVERB_TAGS:
                    for k in range(i + 2, end):
                        if lowers[k] == "as":
                            yield i, k, end
                            break
            elif lowers[i] == "like" and tags[i] == "IN":
                if any(tags[k] in VERB_TAGS for k in range(i + 1, end)):
                    yield i, i, end


def _simile_rule(s, lex):
    triggers = list(_simile_triggers(s))
    if not triggers:
        return None
    indices = set()
    nominals = _nominals(s)
    for first, second, end in triggers:
        start, _ = s.sentence_span(first)
        verbs = [i for i in range(start, first) if s.tokens[i].pos in VERB_TAGS]
        left = subject_object(s, verbs[-1])[0] if verbs else None
        if left is None:
            before = [c for c in nominals if start <= c.start and c.end < first]
            left = max(before, key=lambda c: c.end) if before else None
        after = [c for c in nominals if second < c.start and c.end < end]
        right = min(after, key=lambda c: c.start) if after else None
        for chunk in (left, right):
            if chunk is not None:
                indices.update(chunk.indices)
    return CandidateSet(indices)


def _demonstrative_rule(s, lex):
    indices = set()
    for chunk in noun_phrases(s):
        head = s.tokens[chunk.start]
        if len(chunk) > 1 and head.pos == "DT" and head.lower in DEMONSTRATIVES:
            indices.update(chunk.indices)
    return CandidateSet(indices) if indices else None


RULES = {
    RuleId.R1: _pronoun_rule,
    RuleId.R2: _named_entity_rule,
    RuleId.R3: _positive_verb_rule,
    RuleId.R4: _neutral_verb_rule,
    RuleId.R5: _verb_phrase_rule,
    RuleId.R6: _positive_adjective_rule,
    RuleId.R7: _interrogative_rule,
    RuleId.R8: _simile_rule,
    RuleId.R9: _demonstrative_rule,
}


def apply_rule(rule, s, lex):
    """runs one rule

    Args:
        rule (RuleId): the rule
        s (TaggedSentence): tagged sentence
        lex (Lexicon): polarity lexicon

    Returns:
        CandidateSet or None: None when the rule's trigger is absent
    """
    candidate = RULES[rule](s, lex)
    if candidate is not None:
        candidate.check_bounds(len(s))
    return candidate


def apply_all(s, lex, weights=None):
    """all nine rules, in rule order; `weights` is accepted for symmetry and unused"""
    return {rule: apply_rule(rule, s, lex) for rule in RuleId}


def confine_negated_clause(s, candidates):
    """drops the clause of a negative main verb from the other rules' votes

    When the sentiment-bearing verb votes Outside, the words of its sentence
    are no longer candidates of any other rule; a rule left without words
    counts as not matched.

    Args:
        s (TaggedSentence): tagged sentence
        candidates (dict): RuleId -> CandidateSet or None, as from `apply_all`

    Returns:
        dict: RuleId -> CandidateSet or None
    """
    vote = candidates.get(RuleId.R3)
    if vote is None or not vote.outside_vote:
        return candidates
    start, end = s.sentence_span(main_verb(s))
    confined = {}
    for rule, candidate in candidates.items():
        if rule is RuleId.R3 or candidate is None or candidate.outside_vote:
            confined[rule] = candidate
            continue
        kept = {i for i in candidate.word_indices if not start <= i < end}
        if kept or not candidate.word_indices:
            confined[rule] = CandidateSet(kept)
        else:
            logger.debug("%s dropped, its words lie in a negated clause", rule.value)
            confined[rule] = None
    return confined


def combine_weighted_majority(candidates, weights, include_outside=True):
    """sums the weights of the rules voting for each word and keeps the best

    Args:
        candidates (dict): RuleId -> CandidateSet or None
        weights (RuleWeights or dict): non-negative weight per rule
        include_outside (bool): let Outside votes compete as a pseudo word

    Returns:
        CandidateSet: the maximum scoring words, or an Outside vote if the
        Outside pseudo word strictly wins or no word received a vote
    """
    matched = {rule: c for rule, c in candidates.items() if c is not None}
    if not matched:
        raise NothingToCombine("no rule matched")
    scores = defaultdict(float)
    for rule, candidate in matched.items():
        weight = weights[rule]
        for index in candidate.word_indices:
            scores[index] += weight
        if candidate.outside_vote and include_outside:
            scores[OUTSIDE_ELEMENT] += weight
    if not scores:
        return CandidateSet.outside()
    best = max(scores.values())
    winners = {
        key for key, score in scores.items() if math.isclose(score, best, rel_tol=1e-9, abs_tol=1e-12)
    }
    words = winners - {OUTSIDE_ELEMENT}
    if words:
        return CandidateSet(words)
    return CandidateSet.outside()


class RuleExtractor:
    """rule-based extractor: apply every rule, combine by weighted majority

    Args:
        lexicon (Lexicon): polarity lexicon, bundled list by default
        weights (RuleWeights): per-rule weights, uniform by default
        include_outside (bool): see `combine_weighted_majority`
    """

    def __init__(self, lexicon=None, weights=None, include_outside=True):
        self.lexicon = lexicon or default_lexicon()
        self.weights = weights or RuleWeights()
        self.include_outside = include_outside

    def candidates(self, s):
        return confine_negated_clause(s, apply_all(s, self.lexicon))

    def extract(self, s):
        candidates = self.candidates(s)
        if all(c is None for c in candidates.values()):
            return CandidateSet.outside()
        return combine_weighted_majority(candidates, self.weights, self.include_outside)


def rule_predictions(rule, corpus, lex):
    """(prediction or None, gold) per sentence for a single rule"""
    result = []
    for s, gold in corpus:
        candidate = apply_rule(rule, s, lex)
        prediction = None if candidate is None else candidate.to_annotation()
        result.append((prediction, gold))
    return result


def rule_scores(rule, corpus, lex):
    """overall and conditional reports of one rule

    Overall scores a non-matching rule as an empty prediction (Outside),
    conditional keeps only the sentences where the rule matched.
    """
    predictions = rule_predictions(rule, corpus, lex)
    overall = summarize(
        [(p if p is not None else TargetAnnotation.of(()), g) for p, g in predictions],
        slice=Slice.OVERALL,
        name=rule.value,
    )
    conditional = summarize(
        [(p, g) for p, g in predictions if p is not None],
        slice=Slice.CONDITIONAL,
        name=rule.value,
    )
    return overall, conditional


def calibrate_rule_weights(corpus, lex=None, metric=WeightMetric.OVERALL_DICE):
    """weights each rule by its accuracy when used alone

    Args:
        corpus (list of (TaggedSentence, TargetAnnotation)): gold corpus
        lex (Lexicon): polarity lexicon
        metric (WeightMetric): which accuracy becomes the weight

    Returns:
        RuleWeights
    """
    lex = lex or default_lexicon()
    corpus = list(corpus)
    weights = {}
    for rule in RuleId:
        overall, conditional = rule_scores(rule, corpus, lex)
        report = overall if metric in (WeightMetric.OVERALL_DICE, WeightMetric.OVERALL_EM) else conditional
        if not report.applicable:
            weights[rule] = 0.0
        elif metric in (WeightMetric.OVERALL_EM, WeightMetric.CONDITIONAL_EM):
            weights[rule] = report.exact_match_accuracy
        else:
            weights[rule] = report.dice_score
        logger.info("rule %s weight %.4f (%s)", rule.value, weights[rule], metric.value)
    return RuleWeights(weights)


def save_rule_weights(weights, path):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for rule, weight in weights.items():
            handle.write("{}\t{!r}\n".format(rule.value, weight))


def load_rule_weights(path):
    """reads `R<k><TAB>weight` lines; rules not listed get weight 0.0"""
    if not os.path.exists(path):
        raise ModelNotFound("rule weights not found: {}".format(path))
    weights = {}
    for line_no, fields in iter_records(path):
        if len(fields) != 2:
            raise ParseError("expected R<k><TAB>weight", line=line_no)
        try:
            rule = RuleId(fields[0].strip())
            value = float(fields[1])
        except ValueError:
            raise ParseError("bad rule weight record", line=line_no)
        if not 0.0 <= value <= 1.0:
            raise RangeError("weight outside [0, 1]: {}".format(value), line=line_no)
        weights[rule] = value
    missing = [rule.value for rule in RuleId if rule not in weights]
    if missing:
        logger.warning("%s: no weight for %s, using 0.0", path, ", ".join(missing))
    return RuleWeights(weights, default=0.0)
