import tempfile
import unittest

from pysarct.errors import ParseError, RangeError
from pysarct.sentiment import (
    Lexicon,
    default_lexicon,
    load_lexicon,
    polarity_strength,
    signed_polarity_strength,
    trigram_polarity,
    word_polarity,
)

from helpers import tagged, write_file

LEX = Lexicon({"love": 1.0, "fun": 0.5, "hate": -1.0})


class LexiconTests(unittest.TestCase):
    def test_lookup_is_case_insensitive(self):
        self.assertEqual(word_polarity(LEX, "LOVE"), 1.0)
        self.assertEqual(word_polarity(LEX, "table"), 0.0)
        self.assertIn("Hate", LEX)
        self.assertEqual(len(LEX), 3)

    def test_out_of_range(self):
        with self.assertRaises(RangeError):
            Lexicon({"great": 1.5})

    def test_bundled_lexicon(self):
        lex = default_lexicon()
        self.assertEqual(lex.get("love"), 1.0)
        self.assertEqual(lex.get("hate"), -1.0)
        self.assertEqual(len(lex), 6800)
        self.assertEqual(lex.duplicates, 0)
        self.assertEqual(set(lex.entries.values()), {-1.0, 1.0})
        for word in ("jacket", "test", "birthday", "walls", "donut", "life", "being"):
            self.assertEqual(lex.get(word), 0.0, word)
        self.assertIs(default_lexicon(), lex)


class LoadLexiconTests(unittest.TestCase):
    def test_duplicates_keep_last(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_file(tmp, "lex.tsv", "# comment\ngood\t0.5\n\nGood\t0.75\nbad\t-0.25\n")
            with self.assertLogs("pysarct.sentiment", level="WARNING"):
                lex = load_lexicon(path)
        self.assertEqual(lex.get("good"), 0.75)
        self.assertEqual(lex.duplicates, 1)
        self.assertEqual(len(lex), 2)

    def test_malformed_lines(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(ParseError) as ctx:
                load_lexicon(write_file(tmp, "a.tsv", "good\t0.5\ngood 0.5\n"))
            self.assertEqual(ctx.exception.line, 2)
            with self.assertRaises(ParseError):
                load_lexicon(write_file(tmp, "b.tsv", "good\thigh\n"))
            with self.assertRaises(RangeError):
                load_lexicon(write_file(tmp, "c.tsv", "good\t2\n"))
            with self.assertRaises(RangeError):
                load_lexicon(write_file(tmp, "d.tsv", "good\tnan\n"))


class PolarityTests(unittest.TestCase):
    def test_trigram_at_edges(self):
        s = tagged("I love it")
        self.assertAlmostEqual(trigram_polarity(LEX, s, 0), 1.0 / 3.0)
        self.assertAlmostEqual(trigram_polarity(LEX, s, 1), 1.0 / 3.0)
        self.assertAlmostEqual(trigram_polarity(LEX, s, 2), 1.0 / 3.0)
        with self.assertRaises(IndexError):
            trigram_polarity(LEX, s, 3)

    def test_trigram_stays_in_range(self):
        s = tagged("love love love hate")
        for i in range(len(s)):
            self.assertTrue(-1.0 <= trigram_polarity(LEX, s, i) <= 1.0)
        self.assertAlmostEqual(trigram_polarity(LEX, s, 1), 1.0)

    def test_strength(self):
        words = ["I", "love", "to", "hate", "fun"]
        self.assertAlmostEqual(polarity_strength(LEX, words), 2.5)
        self.assertAlmostEqual(signed_polarity_strength(LEX, words), 0.5)
        self.assertEqual(polarity_strength(LEX, []), 0.0)


if __name__ == "__main__":
    unittest.main(verbosity=4)
