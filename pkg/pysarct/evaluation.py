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

"""System, rule and Outside-case evaluation, baselines and cross-validation.

A corpus here is a list of (TaggedSentence, TargetAnnotation) pairs and a
system is a callable mapping a TaggedSentence to a TargetAnnotation.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from ._functions import data_path, read_word_list
from .errors import InvalidFoldPlan, ModelNotFound
from .metrics import EvalReport, Slice, dice, exact_match, summarize
from .pipeline import IntegratorMode, integrate
from .rules import RuleExtractor, RuleId, WeightMetric, calibrate_rule_weights, rule_scores
from .sentiment import default_lexicon
from .sequence import SequenceLabeler
from .statistical import TrainConfig, decompose, extract_candidates, predict_word, train
from .target import CandidateSet, TargetAnnotation

__all__ = [
    "EvalReport",
    "FoldPlan",
    "Granularity",
    "Slice",
    "baseline_objective_words",
    "baseline_sequence_labeler",
    "cross_validate",
    "dice",
    "evaluate_predictions",
    "evaluate_system",
    "exact_match",
    "outside_slice_report",
    "rule_report",
]

logger = logging.getLogger(__name__)

_WORD = re.compile(r"^[a-z]+(?:-[a-z]+)*$")


def evaluate_predictions(pairs, name="", slice=Slice.OVERALL):
    """EM and Dice of precomputed (prediction, gold) pairs"""
    return summarize(pairs, slice=slice, name=name)


def evaluate_system(system, corpus, name=""):
    """macro averaged EM and Dice of `system` over the corpus"""
    return evaluate_predictions([(system(s), gold) for s, gold in corpus], name=name)


def outside_slice_report(system, corpus, name=""):
    """`evaluate_system` restricted to the sentences whose gold is Outside"""
    pairs = [(system(s), gold) for s, gold in corpus if gold.is_outside]
    return evaluate_predictions(pairs, name=name, slice=Slice.OUTSIDE_ONLY)


def rule_report(r, corpus, weights=None, lex=None):
    """overall and conditional report of one rule used alone

    `weights` does not influence a single rule's output and is accepted so
    that all reports share one signature.
    """
    return rule_scores(r, list(corpus), lex or default_lexicon())


@lru_cache(maxsize=None)
def default_stopwords():
    return read_word_list(data_path("stopwords.txt"))


def baseline_objective_words(s, lex=None, stopwords=None):
    """every alphabetic word that is neither a stopword nor polar"""
    lex = lex or default_lexicon()
    stopwords = default_stopwords() if stopwords is None else stopwords
    return TargetAnnotation.of(
        token.index
        for token in s.tokens
        if _WORD.match(token.lower) and token.lower not in stopwords and lex.get(token.surface) == 0.0
    )


def baseline_sequence_labeler(train_corpus, test_sentence, lex=None, epochs=10, seed=42):
    """trains a sequence labeler and labels one sentence"""
    labeler = SequenceLabeler(epochs=epochs, seed=seed, lexicon=lex).fit(train_corpus)
    return _labels_to_target(labeler.predict(test_sentence))


def _labels_to_target(labels):
    return TargetAnnotation.of(i for i, label in enumerate(labels) if label)


def hybrid_system(rule_extractor, model, lex, mode):
    def _func(s):
        rule_cand = rule_extractor.extract(s) if mode.uses_rules else CandidateSet()
        stat_cand = extract_candidates(model, s, lex) if mode.uses_statistics else CandidateSet()
        return integrate(rule_cand, stat_cand, mode)

    return _func


SYSTEM_NAMES = {
    IntegratorMode.RULE_ONLY: "Rule-only",
    IntegratorMode.STAT_ONLY: "Stat-only",
    IntegratorMode.HYBRID_OR: "Hybrid OR",
    IntegratorMode.HYBRID_AND: "Hybrid AND",
}


def build_systems(models, train_corpus, lex=None, stopwords=None, seed=42):
    """the six compared systems, in table order

    Args:
        models (Models): tagger, lexicon, rule weights and linear model
        train_corpus (list): training pairs for the sequence labeler
        stopwords (frozenset): stopword list of the objective-words baseline
        seed (int): sequence labeler seed

    Returns:
        dict: system name -> callable
    """
    if models.linear is None:
        raise ModelNotFound("comparing systems needs a linear model")
    lex = lex or models.lexicon
    labeler = SequenceLabeler(seed=seed, lexicon=lex).fit(train_corpus)
    rules = RuleExtractor(lex, models.weights)
    systems = {
        "Baseline 1": lambda s: baseline_objective_words(s, lex, stopwords),
        "Baseline 2": lambda s: _labels_to_target(labeler.predict(s)),
    }
    for mode, name in SYSTEM_NAMES.items():
        systems[name] = hybrid_system(rules, models.linear, lex, mode)
    return systems


def compare_systems(systems, corpus):
    corpus = list(corpus)
    return [evaluate_system(system, corpus, name=name) for name, system in systems.items()]


def outside_comparison(systems, corpus):
    """overall and Outside-slice report of every system"""
    corpus = list(corpus)
    reports = []
    for name, system in systems.items():
        reports.append(evaluate_system(system, corpus, name=name))
        reports.append(outside_slice_report(system, corpus, name=name))
    return reports


class Granularity(Enum):
    WORD_INSTANCE = "word"
    SENTENCE = "sentence"


@dataclass(frozen=True)
class FoldPlan:
    """k folds over instance ids

    `assignment` maps an instance id (sentence position, or
    (sentence position, token index) for word instances) to its fold.
    """

    k: int = 4
    assignment: dict = field(default_factory=dict)
    granularity: Granularity = Granularity.SENTENCE

    def folds(self):
        folds = [[] for _ in range(self.k)]
        for instance, fold in self.assignment.items():
            folds[fold].append(instance)
        return folds

    def fold_of(self, instance):
        return self.assignment[instance]

    def split(self, fold):
        """(training ids, held-out ids) of one fold, in id order"""
        if not 0 <= fold < self.k:
            raise InvalidFoldPlan("no fold {} in a {}-fold plan".format(fold, self.k))
        training, test = [], []
        for instance in sorted(self.assignment):
            (test if self.assignment[instance] == fold else training).append(instance)
        return training, test


def make_fold_plan(corpus, k=4, granularity=Granularity.SENTENCE, seed=42):
    """random balanced fold assignment

    Args:
        corpus (list): (TaggedSentence, TargetAnnotation) pairs
        k (int): number of folds, at least 2
        granularity (Granularity): fold sentences or single word instances
        seed (int): permutation seed

    Returns:
        FoldPlan: fold sizes differ by at most one
    """
    if granularity is Granularity.SENTENCE:
        ids = list(range(len(corpus)))
    else:
        ids = [(n, i) for n, (s, _) in enumerate(corpus) for i in range(len(s))]
    if k < 2:
        raise InvalidFoldPlan("k must be at least 2, got {}".format(k))
    if k > len(ids):
        raise InvalidFoldPlan("{} folds for {} instances".format(k, len(ids)))
    order = np.random.default_rng(seed).permutation(len(ids))
    assignment = {ids[int(j)]: position % k for position, j in enumerate(order)}
    return FoldPlan(k, dict(sorted(assignment.items())), granularity)


def _check_plan(plan, corpus):
    if plan.k < 2:
        raise InvalidFoldPlan("k must be at least 2, got {}".format(plan.k))
    if plan.granularity is Granularity.SENTENCE:
        expected = set(range(len(corpus)))
    else:
        expected = {(n, i) for n, (s, _) in enumerate(corpus) for i in range(len(s))}
    if plan.k > len(expected):
        raise InvalidFoldPlan("{} folds for {} instances".format(plan.k, len(expected)))
    if set(plan.assignment) != expected:
        raise InvalidFoldPlan("fold assignment does not cover the corpus")
    if any(not 0 <= fold < plan.k for fold in plan.assignment.values()):
        raise InvalidFoldPlan("fold index outside 0..{}".format(plan.k - 1))


def _sentence_fold_predictions(corpus, plan, mode, lex, config, metric):
    predictions = {}
    for fold in range(plan.k):
        training_ids, test = plan.split(fold)
        training = [corpus[n] for n in training_ids]
        rules = model = None
        if mode.uses_rules:
            rules = RuleExtractor(lex, calibrate_rule_weights(training, lex, metric))
        if mode.uses_statistics:
            instances = []
            for n, (s, gold) in enumerate(training):
                instances.extend(decompose(s, gold, lex, sentence_id=n))
            model = train(instances, config)
        system = hybrid_system(rules, model, lex, mode)
        for n in test:
            predictions[n] = (fold, system(corpus[n][0]))
        logger.info("fold %d/%d: %d test sentences", fold + 1, plan.k, len(test))
    return predictions


def _word_fold_predictions(corpus, plan, mode, lex, config, metric):
    instances = {}
    for n, (s, gold) in enumerate(corpus):
        for instance in decompose(s, gold, lex, sentence_id=n):
            instances[(n, instance.token_index)] = instance
    positive = set()
    if mode.uses_statistics:
        for fold in range(plan.k):
            training_ids, test = plan.split(fold)
            training = [instances[key] for key in training_ids]
            model = train(training, config)
            positive.update(key for key in test if predict_word(model, instances[key].features))
            logger.info("fold %d/%d: %d test instances", fold + 1, plan.k, len(test))
    rules = None
    if mode.uses_rules:
        # sentences straddle folds, so the rule weights come from the full corpus
        rules = RuleExtractor(lex, calibrate_rule_weights(corpus, lex, metric))
    predictions = {}
    for n, (s, _) in enumerate(corpus):
        words = [i for i in range(len(s)) if (n, i) in positive]
        stat_cand = CandidateSet(words) if words else CandidateSet.outside()
        rule_cand = rules.extract(s) if rules else CandidateSet()
        predictions[n] = (None, integrate(rule_cand, stat_cand, mode))
    return predictions


def cross_validation_predictions(corpus, plan, mode, lex=None, config=None, metric=WeightMetric.OVERALL_DICE):
    """held-out prediction of every sentence

    Returns:
        dict: sentence position -> (fold or None, TargetAnnotation); the
        fold is None for word-instance plans, where a sentence spans folds
    """
    corpus = list(corpus)
    _check_plan(plan, corpus)
    lex = lex or default_lexicon()
    config = config or TrainConfig()
    if plan.granularity is Granularity.SENTENCE:
        return _sentence_fold_predictions(corpus, plan, mode, lex, config, metric)
    return _word_fold_predictions(corpus, plan, mode, lex, config, metric)


def cross_validate(corpus, plan, mode, lex=None, config=None, metric=WeightMetric.OVERALL_DICE):
    """k-fold evaluation, pooled over every held-out sentence

    Args:
        corpus (list): (TaggedSentence, TargetAnnotation) pairs
        plan (FoldPlan): fold assignment, see `make_fold_plan`
        mode (IntegratorMode): system under evaluation
        lex (Lexicon): polarity lexicon
        config (TrainConfig): linear trainer settings
        metric (WeightMetric): rule weight calibration metric

    Returns:
        EvalReport
    """
    corpus = list(corpus)
    predictions = cross_validation_predictions(corpus, plan, mode, lex, config, metric)
    pairs = [(predictions[n][1], gold) for n, (_, gold) in enumerate(corpus)]
    return evaluate_predictions(pairs, name=SYSTEM_NAMES[mode])


def fold_reports(corpus, plan, mode, lex=None, config=None, metric=WeightMetric.OVERALL_DICE):
    """one report per held-out fold of a sentence plan"""
    if plan.granularity is not Granularity.SENTENCE:
        raise InvalidFoldPlan("per-fold reports need sentence folds")
    corpus = list(corpus)
    predictions = cross_validation_predictions(corpus, plan, mode, lex, config, metric)
    reports = []
    for fold in range(plan.k):
        pairs = [(predictions[n][1], gold) for n, (_, gold) in enumerate(corpus) if predictions[n][0] == fold]
        reports.append(evaluate_predictions(pairs, name="{} fold {}".format(SYSTEM_NAMES[mode], fold + 1)))
    return reports


def rule_table(corpus, lex=None):
    """(overall, conditional) reports of every rule, in rule order"""
    corpus = list(corpus)
    lex = lex or default_lexicon()
    return [rule_scores(rule, corpus, lex) for rule in RuleId]


def _cell(value):
    return "n/a" if value is None else "{:.3f}".format(value)


def format_table(reports, title="System"):
    """aligned text table with EM, DS and N columns"""
    rows = [(title, "Slice", "EM", "DS", "N")]
    for report in reports:
        rows.append(
            (
                report.name,
                report.slice.value,
                _cell(report.exact_match_accuracy),
                _cell(report.dice_score),
                str(report.n_instances),
            )
        )
    widths = [max(len(row[col]) for row in rows) for col in range(5)]
    lines = []
    for row in rows:
        cells = [row[0].ljust(widths[0]), row[1].ljust(widths[1])]
        cells += [cell.rjust(width) for cell, width in zip(row[2:], widths[2:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def format_records(reports, key="system"):
    """one JSON object per report and line"""
    lines = []
    for report in reports:
        record = report.as_record()
        record[key] = record.pop("name")
        lines.append(json.dumps(record, sort_keys=True))
    return "\n".join(lines)


def format_reports(reports, fmt="text", title="System"):
    if fmt == "records":
        return format_records(reports, key=title.lower())
    return format_table(reports, title=title)
