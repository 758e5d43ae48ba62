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

import json
import logging
import os
import sys
from dataclasses import asdict, dataclass

from nltk.tag import str2tuple

from pysarct._functions import iter_records, read_word_list
from pysarct.corpus import (
    Document,
    corpus_stats,
    format_stats,
    load_corpus,
    prepare_corpus,
    save_corpus,
    storable_target,
)
from pysarct.errors import ModelNotFound
from pysarct.evaluation import (
    SYSTEM_NAMES,
    Granularity,
    build_systems,
    compare_systems,
    cross_validate,
    evaluate_system,
    fold_reports,
    format_reports,
    hybrid_system,
    make_fold_plan,
    outside_slice_report,
    rule_table,
)
from pysarct.pipeline import IntegratorMode, Models, extract_batch
from pysarct.rules import RuleExtractor, WeightMetric, calibrate_rule_weights, save_rule_weights
from pysarct.statistical import TrainConfig, decompose, save_model, train
from pysarct.tagging import save_tagger, train_tagger
from pysarct.target import OUTSIDE_LABEL

logger = logging.getLogger(__name__)

MODEL_DIR_ENV = "SARCT_MODEL_DIR"
DEFAULT_MODEL_DIR = "models"
TAGGER_FILE = "tagger.tsv"
LINEAR_FILE = "linear.model"
WEIGHTS_FILE = "rule_weights.tsv"


def default_model_dir():
    return os.environ.get(MODEL_DIR_ENV) or DEFAULT_MODEL_DIR


@dataclass
class RunConfig:
    mode: IntegratorMode = IntegratorMode.HYBRID_OR
    corpus: str = None
    lexicon: str = None
    model_dir: str = None
    tagger_model: str = None
    linear_model: str = None
    rule_weights: str = None
    stopwords: str = None
    folds: int = 4
    granularity: Granularity = Granularity.SENTENCE
    seed: int = 42
    weight_metric: WeightMetric = WeightMetric.OVERALL_DICE
    jobs: int = 1
    fmt: str = "text"
    output: str = None

    @classmethod
    def from_args(cls, args):
        return cls(
            mode=IntegratorMode(args.mode),
            corpus=getattr(args, "corpus", None),
            lexicon=args.lexicon,
            model_dir=args.model_dir or default_model_dir(),
            tagger_model=args.tagger_model,
            linear_model=args.linear_model,
            rule_weights=args.rule_weights,
            stopwords=args.stopwords,
            folds=getattr(args, "folds", 4),
            granularity=Granularity(getattr(args, "granularity", Granularity.SENTENCE.value)),
            seed=args.seed,
            weight_metric=WeightMetric(args.weight_metric),
            jobs=args.jobs,
            fmt=args.format,
            output=args.output,
        )

    def model_path(self, explicit, name):
        """an explicit path must exist, a model directory file is optional"""
        if explicit:
            if not os.path.exists(explicit):
                raise ModelNotFound("model file not found: {}".format(explicit))
            return explicit
        path = os.path.join(self.model_dir, name)
        return path if os.path.exists(path) else None

    def output_path(self, explicit, name):
        path = explicit or os.path.join(self.model_dir, name)
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        return path

    def load_models(self, weights=True, linear=True):
        """loads the models; commands that write a model skip reading it"""
        return Models.load(
            tagger_path=self.model_path(self.tagger_model, TAGGER_FILE),
            lexicon_path=self.lexicon,
            weights_path=self.model_path(self.rule_weights, WEIGHTS_FILE) if weights else None,
            linear_path=self.model_path(self.linear_model, LINEAR_FILE) if linear else None,
        )

    def load_stopwords(self):
        return read_word_list(self.stopwords) if self.stopwords else None


def write_output(text, path=None):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


class BaseCommand(object):
    NAME = ""
    HELP = ""
    NEEDS_CORPUS = True

    def add_arguments(self, parser):
        pass

    def run(self, config, args):
        raise NotImplementedError

    def prepared_corpus(self, config, models, path=None):
        documents = load_corpus(path or config.corpus)
        return documents, prepare_corpus(documents, models.tagger)


class ExtractCommand(BaseCommand):
    NAME = "extract"
    HELP = "print the sarcasm target of a text or of every corpus document"
    NEEDS_CORPUS = False

    def add_arguments(self, parser):
        parser.add_argument("--text", help="a single text to analyse")

    def run(self, config, args):
        if (args.text is None) == (config.corpus is None):
            raise ValueError("give exactly one of --text and --corpus")
        models = config.load_models()
        if args.text is not None:
            s, target = extract_batch([args.text], models, config.mode)[0]
            write_output(" ".join(s.words(sorted(target.words))) if target.words else OUTSIDE_LABEL)
            return 0
        documents = load_corpus(config.corpus)
        results = extract_batch([d.text for d in documents], models, config.mode, jobs=config.jobs)
        predicted = []
        lines = []
        for document, (s, target) in zip(documents, results):
            words = storable_target(s.words(sorted(target.words)))
            predicted.append(Document(document.id, document.text, words))
            lines.append("{}\t{}".format(document.id, predicted[-1].target_field))
        if config.output:
            save_corpus(predicted, config.output)
        else:
            write_output("\n".join(lines))
        return 0


class TrainCommand(BaseCommand):
    NAME = "train"
    HELP = "train the word level linear model"

    def add_arguments(self, parser):
        parser.add_argument("--epochs", type=int, default=60)
        parser.add_argument("--learning-rate", type=float, default=0.5)
        parser.add_argument("--regularization", type=float, default=1e-4)
        parser.add_argument("--positive-weight", type=float, default=None)

    def run(self, config, args):
        models = config.load_models(linear=False)
        _, corpus = self.prepared_corpus(config, models)
        instances = []
        for n, (s, gold) in enumerate(corpus):
            instances.extend(decompose(s, gold, models.lexicon, sentence_id=n))
        train_config = TrainConfig(
            epochs=args.epochs,
            learning_rate=args.learning_rate,
            regularization=args.regularization,
            seed=config.seed,
            positive_weight=args.positive_weight,
        )
        model = train(instances, train_config)
        path = config.output_path(config.linear_model, LINEAR_FILE)
        save_model(model, path)
        logger.info("trained on %d word instances, model written to %s", len(instances), path)
        return 0


class TrainTaggerCommand(BaseCommand):
    NAME = "train-tagger"
    HELP = "train the averaged perceptron tagger on word/TAG sentences"
    NEEDS_CORPUS = False

    def add_arguments(self, parser):
        parser.add_argument("--tagged", required=True, help="one sentence of word/TAG tokens per line")
        parser.add_argument("--iterations", type=int, default=5)

    def run(self, config, args):
        sentences = []
        for _, fields in iter_records(args.tagged):
            pairs = [str2tuple(item) for item in " ".join(fields).split()]
            sentences.append(([word for word, _ in pairs], [tag for _, tag in pairs]))
        model = train_tagger(sentences, nr_iter=args.iterations, seed=config.seed)
        path = config.output_path(config.tagger_model, TAGGER_FILE)
        save_tagger(model, path)
        logger.info("trained tagger on %d sentences, model written to %s", len(sentences), path)
        return 0


class CalibrateCommand(BaseCommand):
    NAME = "calibrate"
    HELP = "weight every rule by its accuracy on a corpus"

    def run(self, config, args):
        models = config.load_models(weights=False)
        _, corpus = self.prepared_corpus(config, models)
        weights = calibrate_rule_weights(corpus, models.lexicon, config.weight_metric)
        path = config.output_path(config.rule_weights, WEIGHTS_FILE)
        save_rule_weights(weights, path)
        logger.info("rule weights written to %s", path)
        return 0


class EvalCommand(BaseCommand):
    NAME = "eval"
    HELP = "compare the baselines and the four extractor configurations"

    def add_arguments(self, parser):
        parser.add_argument("--train-corpus", help="training corpus of the sequence labeling baseline")

    def run(self, config, args):
        models = config.load_models()
        _, corpus = self.prepared_corpus(config, models)
        train_corpus = corpus
        if args.train_corpus:
            _, train_corpus = self.prepared_corpus(config, models, args.train_corpus)
        else:
            logger.warning("no --train-corpus: the sequence labeler trains on the evaluation corpus")
        systems = build_systems(models, train_corpus, stopwords=config.load_stopwords(), seed=config.seed)
        reports = compare_systems(systems, corpus)
        write_output(format_reports(reports, config.fmt, title="System"), config.output)
        return 0


class RulesCommand(BaseCommand):
    NAME = "rules"
    HELP = "overall and conditional accuracy of every rule"

    def run(self, config, args):
        models = config.load_models(weights=False, linear=False)
        _, corpus = self.prepared_corpus(config, models)
        reports = [report for pair in rule_table(corpus, models.lexicon) for report in pair]
        write_output(format_reports(reports, config.fmt, title="Rule"), config.output)
        return 0


class StatsCommand(BaseCommand):
    NAME = "stats"
    HELP = "dataset statistics of a corpus"

    def run(self, config, args):
        models = config.load_models(weights=False, linear=False)
        stats = corpus_stats(load_corpus(config.corpus), models.lexicon)
        if config.fmt == "records":
            text = json.dumps(asdict(stats), sort_keys=True)
        else:
            text = format_stats(stats)
        write_output(text, config.output)
        return 0


class CrossvalCommand(BaseCommand):
    NAME = "crossval"
    HELP = "k-fold cross-validation of one extractor configuration"

    def add_arguments(self, parser):
        parser.add_argument("--folds", type=int, default=4)
        parser.add_argument(
            "--granularity",
            choices=[g.value for g in Granularity],
            default=Granularity.SENTENCE.value,
        )

    def run(self, config, args):
        models = config.load_models(weights=False, linear=False)
        _, corpus = self.prepared_corpus(config, models)
        plan = make_fold_plan(corpus, config.folds, config.granularity, config.seed)
        train_config = TrainConfig(seed=config.seed)
        reports = []
        if config.granularity is Granularity.SENTENCE:
            reports.extend(
                fold_reports(corpus, plan, config.mode, models.lexicon, train_config, config.weight_metric)
            )
        reports.append(
            cross_validate(corpus, plan, config.mode, models.lexicon, train_config, config.weight_metric)
        )
        write_output(format_reports(reports, config.fmt, title="System"), config.output)
        return 0


class ReportCommand(BaseCommand):
    NAME = "report"
    HELP = "overall against Outside-case accuracy of one configuration"

    def run(self, config, args):
        models = config.load_models()
        if config.mode.uses_statistics and models.linear is None:
            raise ModelNotFound("mode {} needs a linear model".format(config.mode.value))
        _, corpus = self.prepared_corpus(config, models)
        rules = RuleExtractor(models.lexicon, models.weights)
        system = hybrid_system(rules, models.linear, models.lexicon, config.mode)
        name = SYSTEM_NAMES[config.mode]
        reports = [
            evaluate_system(system, corpus, name=name),
            outside_slice_report(system, corpus, name=name),
        ]
        write_output(format_reports(reports, config.fmt, title="System"), config.output)
        return 0


COMMANDS = [
    ExtractCommand,
    TrainCommand,
    TrainTaggerCommand,
    CalibrateCommand,
    EvalCommand,
    RulesCommand,
    StatsCommand,
    CrossvalCommand,
    ReportCommand,
]
