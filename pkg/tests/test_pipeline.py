import tempfile
import unittest

import numpy as np

from pysarct.errors import ModelNotFound
from pysarct.pipeline import IntegratorMode, Models, analyze, extract_batch, extract_target, integrate
from pysarct.rules import RuleWeights, calibrate_rule_weights
from pysarct.sentiment import default_lexicon
from pysarct.statistical import LinearModel
from pysarct.tagging import RuleTagger
from pysarct.target import OUTSIDE, CandidateSet, TargetAnnotation

from helpers import fixture_corpus, rule_tagger


def models(linear=None, weights=None):
    return Models(rule_tagger(), default_lexicon(), weights or RuleWeights(), linear)


def random_candidate(rng, n=5):
    if rng.random() < 0.2:
        return CandidateSet.outside()
    return CandidateSet(i for i in range(n) if rng.random() < 0.4)


class IntegrateTests(unittest.TestCase):
    def test_modes(self):
        rule, stat = CandidateSet([1, 2]), CandidateSet([2, 3])
        self.assertEqual(integrate(rule, stat, IntegratorMode.RULE_ONLY).words, {1, 2})
        self.assertEqual(integrate(rule, stat, IntegratorMode.STAT_ONLY).words, {2, 3})
        self.assertEqual(integrate(rule, stat, IntegratorMode.HYBRID_OR).words, {1, 2, 3})
        self.assertEqual(integrate(rule, stat, IntegratorMode.HYBRID_AND).words, {2})

    def test_outside_contributes_nothing(self):
        outside = CandidateSet.outside()
        self.assertIs(integrate(outside, outside, IntegratorMode.HYBRID_OR), OUTSIDE)
        self.assertEqual(integrate(outside, CandidateSet([4]), IntegratorMode.HYBRID_OR).words, {4})
        self.assertIs(integrate(CandidateSet([1]), CandidateSet([2]), IntegratorMode.HYBRID_AND), OUTSIDE)

    def test_random_properties(self):
        rng = np.random.default_rng(3)
        for _ in range(1000):
            rule, stat = random_candidate(rng), random_candidate(rng)
            both = integrate(rule, stat, IntegratorMode.HYBRID_AND).words
            either = integrate(rule, stat, IntegratorMode.HYBRID_OR).words
            self.assertTrue(both <= rule.word_indices and both <= stat.word_indices)
            self.assertTrue(rule.word_indices <= either and stat.word_indices <= either)
            for mode in IntegratorMode:
                target = integrate(rule, stat, mode)
                self.assertEqual(target.is_outside, not target.words)

    def test_mode_flags(self):
        self.assertFalse(IntegratorMode.RULE_ONLY.uses_statistics)
        self.assertFalse(IntegratorMode.STAT_ONLY.uses_rules)
        self.assertTrue(IntegratorMode.HYBRID_AND.uses_rules)


class ExtractTests(unittest.TestCase):
    def test_rule_only(self):
        target = extract_target("I love being ignored.", models(), IntegratorMode.RULE_ONLY)
        self.assertEqual(target, TargetAnnotation.of([2, 3]))

    def test_hybrid(self):
        linear = LinearModel({"w=being": 1.0, "w=ignored": 1.0}, bias=-0.5)
        result = analyze("I love being ignored.", models(linear), IntegratorMode.HYBRID_AND)
        self.assertEqual(result.target.words, {2, 3})
        self.assertEqual(result.sentence.words(sorted(result.target.words)), ["being", "ignored"])

    def test_outside(self):
        text = "Yeah, right! I hate catching the bus on time anyway!"
        for weights in (RuleWeights(), calibrate_rule_weights(fixture_corpus())):
            self.assertIs(extract_target(text, models(weights=weights), IntegratorMode.RULE_ONLY), OUTSIDE)
            target = extract_target(text, models(LinearModel(bias=-1.0), weights), IntegratorMode.HYBRID_OR)
            self.assertIs(target, OUTSIDE)

    def test_statistics_need_a_model(self):
        with self.assertRaises(ModelNotFound):
            extract_target("I love being ignored.", models(), IntegratorMode.STAT_ONLY)

    def test_batch_keeps_order(self):
        texts = ["I love being ignored.", "Oh, I love this jacket!", "Tooth-ache is fun.", "Ok."]
        serial = extract_batch(texts, models(), IntegratorMode.RULE_ONLY)
        threaded = extract_batch(texts, models(), IntegratorMode.RULE_ONLY, jobs=4)
        self.assertEqual([r.target for r in serial], [r.target for r in threaded])
        self.assertEqual([r.sentence.text for r in threaded], texts)

    def test_from_empty_directory(self):
        with tempfile.TemporaryDirectory() as tmp:
            loaded = Models.from_directory(tmp)
        self.assertIsInstance(loaded.tagger, RuleTagger)
        self.assertIsNone(loaded.linear)
        self.assertEqual(loaded.weights, RuleWeights())


if __name__ == "__main__":
    unittest.main(verbosity=4)
