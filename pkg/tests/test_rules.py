import itertools
import os
import tempfile
import unittest

from pysarct.errors import ModelNotFound, NothingToCombine, ParseError, RangeError
from pysarct.rules import (
    RuleExtractor,
    RuleId,
    RuleWeights,
    WeightMetric,
    apply_all,
    apply_rule,
    calibrate_rule_weights,
    combine_weighted_majority,
    confine_negated_clause,
    load_rule_weights,
    rule_scores,
    save_rule_weights,
)
from pysarct.sentiment import default_lexicon
from pysarct.target import CandidateSet, TargetAnnotation

from helpers import tagged, write_file

LEX = default_lexicon()


def words_of(rule, text):
    candidate = apply_rule(rule, tagged(text), LEX)
    return None if candidate is None else set(candidate.word_indices)


def reference_majority(candidates, weights, include_outside=True):
    votes = {}
    for rule, candidate in candidates.items():
        if candidate is None:
            continue
        keys = list(candidate.word_indices)
        if candidate.outside_vote and include_outside:
            keys.append("outside")
        for key in keys:
            votes[key] = votes.get(key, 0.0) + weights[rule]
    if not votes:
        return CandidateSet.outside()
    top = max(votes.values())
    words = {k for k, v in votes.items() if v == top and k != "outside"}
    return CandidateSet(words) if words else CandidateSet.outside()


class RuleExampleTests(unittest.TestCase):
    def test_pronouns(self):
        self.assertEqual(words_of(RuleId.R1, "I am so in love with my job."), {0, 6, 7})

    def test_named_entity(self):
        text = "Don't you just love it when Microsoft tells you that you're spelling your own name wrong."
        self.assertEqual(words_of(RuleId.R2, text), {7})
        self.assertIsNone(words_of(RuleId.R2, "I love being ignored."))

    def test_positive_verb(self):
        self.assertEqual(words_of(RuleId.R3, "I love being ignored."), {2, 3})

    def test_negative_verb_votes_outside(self):
        candidate = apply_rule(RuleId.R3, tagged("Yeah, right! I hate catching the bus on time anyway!"), LEX)
        self.assertTrue(candidate.outside_vote)
        self.assertFalse(candidate.word_indices)

    def test_neutral_verb(self):
        text = "Excited that the teacher has decided to have a test on my birthday!"
        self.assertEqual(words_of(RuleId.R4, text), set(range(6, 13)))
        self.assertIsNone(words_of(RuleId.R4, "I love being ignored."))

    def test_verb_phrases(self):
        self.assertEqual(words_of(RuleId.R5, "Being covered in rashes is fun."), {0, 1, 2, 3})
        self.assertEqual(words_of(RuleId.R5, "Can't wait to wake up early to babysit!"), set(range(3, 9)))

    def test_positive_adjective(self):
        self.assertEqual(words_of(RuleId.R6, "Look at the most realistic walls in a video game."), {5})
        self.assertEqual(words_of(RuleId.R6, "Yep, this is indeed an amazing donut."), {7})

    def test_interrogative(self):
        self.assertEqual(words_of(RuleId.R7, "A murderer is stalking me. Could life be more fun?"), {7})
        self.assertIsNone(words_of(RuleId.R7, "I love being ignored."))

    def test_simile(self):
        text = "He is as good at coding as Tiger Woods is at avoiding controversy."
        self.assertEqual(words_of(RuleId.R8, text), {0, 7, 8})

    def test_demonstrative(self):
        self.assertEqual(words_of(RuleId.R9, "Oh, I love this jacket!"), {4, 5})

    def test_apply_all(self):
        candidates = apply_all(tagged("I love being ignored."), LEX)
        self.assertEqual(list(candidates), list(RuleId))
        found = {rule: set(c.word_indices) for rule, c in candidates.items() if c is not None}
        self.assertEqual(found, {RuleId.R1: {0}, RuleId.R3: {2, 3}, RuleId.R5: {2, 3}})

    def test_no_rule_matches(self):
        s = tagged("Ok.")
        self.assertTrue(all(c is None for c in apply_all(s, LEX).values()))
        self.assertTrue(RuleExtractor().extract(s).outside_vote)


class CombinerTests(unittest.TestCase):
    def test_majority(self):
        extractor = RuleExtractor(LEX, RuleWeights())
        self.assertEqual(extractor.extract(tagged("I love being ignored.")).word_indices, frozenset([2, 3]))

    def test_negated_clause_leaves_only_outside(self):
        s = tagged("Yeah, right! I hate catching the bus on time anyway!")
        raw = apply_all(s, LEX)
        self.assertEqual(set(raw[RuleId.R5].word_indices), set(range(6, 12)))
        confined = confine_negated_clause(s, raw)
        self.assertIsNone(confined[RuleId.R1])
        self.assertIsNone(confined[RuleId.R5])
        self.assertTrue(confined[RuleId.R3].outside_vote)
        self.assertTrue(RuleExtractor(LEX, RuleWeights()).extract(s).outside_vote)

    def test_negated_clause_keeps_other_sentences(self):
        s = tagged("I hate Mondays. Could life be more fun?")
        confined = confine_negated_clause(s, apply_all(s, LEX))
        self.assertEqual(set(confined[RuleId.R7].word_indices), {5})
        self.assertIsNone(confined[RuleId.R1])
        self.assertEqual(RuleExtractor(LEX, RuleWeights()).extract(s).word_indices, frozenset([5]))
        positive = apply_all(tagged("I love being ignored."), LEX)
        self.assertEqual(confine_negated_clause(tagged("I love being ignored."), positive), positive)

    def test_nothing_to_combine(self):
        with self.assertRaises(NothingToCombine):
            combine_weighted_majority({rule: None for rule in RuleId}, RuleWeights())

    def test_word_beats_outside_on_tie(self):
        candidates = {RuleId.R1: CandidateSet([1]), RuleId.R3: CandidateSet.outside()}
        result = combine_weighted_majority(candidates, RuleWeights())
        self.assertEqual(result.word_indices, frozenset([1]))
        weights = RuleWeights({RuleId.R1: 0.25, RuleId.R3: 0.5})
        self.assertTrue(combine_weighted_majority(candidates, weights).outside_vote)
        without = combine_weighted_majority(candidates, weights, include_outside=False)
        self.assertEqual(without.word_indices, frozenset([1]))

    def test_brute_force(self):
        n = 4
        subsets = [
            CandidateSet(c) for size in range(n + 1) for c in itertools.combinations(range(n), size)
        ]
        options = [None, CandidateSet.outside()] + subsets
        rules = [RuleId.R1, RuleId.R2, RuleId.R3]
        for values in [(0.5, 0.25, 0.75), (1.0, 1.0, 1.0), (0.25, 0.25, 0.5)]:
            weights = dict(zip(rules, values))
            doubled = {rule: 2.0 * w for rule, w in weights.items()}
            for choice in itertools.product(options, repeat=len(rules)):
                candidates = dict(zip(rules, choice))
                if all(c is None for c in choice):
                    continue
                for include_outside in (True, False):
                    result = combine_weighted_majority(candidates, weights, include_outside)
                    self.assertEqual(result, reference_majority(candidates, weights, include_outside))
                    self.assertEqual(result, combine_weighted_majority(candidates, doubled, include_outside))

    def test_adding_a_vote_keeps_the_winner(self):
        candidates = {RuleId.R1: CandidateSet([0, 1]), RuleId.R2: CandidateSet([1])}
        before = combine_weighted_majority(candidates, RuleWeights())
        self.assertEqual(before.word_indices, frozenset([1]))
        candidates[RuleId.R3] = CandidateSet([1, 2])
        after = combine_weighted_majority(candidates, RuleWeights())
        self.assertEqual(after.word_indices, frozenset([1]))


class CalibrationTests(unittest.TestCase):
    def setUp(self):
        self.corpus = [(tagged("I love being ignored."), TargetAnnotation.of([2, 3]))]

    def test_scores(self):
        overall, conditional = rule_scores(RuleId.R3, self.corpus, LEX)
        self.assertEqual(overall.dice_score, 1.0)
        self.assertEqual(conditional.n_instances, 1)
        overall, conditional = rule_scores(RuleId.R2, self.corpus, LEX)
        self.assertEqual(overall.n_instances, 1)
        self.assertEqual(overall.exact_match_accuracy, 0.0)
        self.assertFalse(conditional.applicable)

    def test_calibrate(self):
        weights = calibrate_rule_weights(self.corpus, LEX)
        self.assertEqual(weights[RuleId.R3], 1.0)
        self.assertEqual(weights[RuleId.R5], 1.0)
        self.assertEqual(weights[RuleId.R1], 0.0)
        conditional = calibrate_rule_weights(self.corpus, LEX, WeightMetric.CONDITIONAL_EM)
        self.assertEqual(conditional[RuleId.R2], 0.0)
        self.assertEqual(conditional[RuleId.R3], 1.0)

    def test_range(self):
        with self.assertRaises(RangeError):
            RuleWeights({RuleId.R1: 1.5})


class WeightsFileTests(unittest.TestCase):
    def test_save_and_load(self):
        weights = RuleWeights({RuleId.R1: 0.125, RuleId.R9: 0.0}, default=0.5)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "weights.tsv")
            save_rule_weights(weights, path)
            self.assertEqual(load_rule_weights(path), weights)

    def test_missing_rules_default_to_zero(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_file(tmp, "w.tsv", "R1\t0.5\n")
            with self.assertLogs("pysarct.rules", level="WARNING"):
                weights = load_rule_weights(path)
        self.assertEqual(weights[RuleId.R1], 0.5)
        self.assertEqual(weights[RuleId.R2], 0.0)

    def test_errors(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(ModelNotFound):
                load_rule_weights(os.path.join(tmp, "missing.tsv"))
            with self.assertRaises(ParseError):
                load_rule_weights(write_file(tmp, "a.tsv", "R10\t0.5\n"))
            with self.assertRaises(ParseError):
                load_rule_weights(write_file(tmp, "b.tsv", "R1 0.5\n"))
            with self.assertRaises(RangeError):
                load_rule_weights(write_file(tmp, "c.tsv", "R1\t1.5\n"))


if __name__ == "__main__":
    unittest.main(verbosity=4)
