# Copyright 2026 The emotext Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Emotion classification of short texts."""

import json

from ._emotext import (
    CLASSIFIERS,
    LABELS,
    EmotextError,
    TextClassifier,
    default_stop_words,
    evaluate,
    load_corpus,
    preprocess,
    render_markdown,
    separable_corpus,
    split,
    strip_punctuation,
    tfidf,
    tokenize,
)
from ._emotext import run_benchmark as _run_benchmark

__version__ = "0.1.0"


def run_benchmark(rows, zero_timing=False, **options):
    """Runs the benchmark and returns the report as a dict.

    Keyword options use the CLI setting names with underscores, for example
    ``classifiers="naive_bayes,knn"``, ``seeds="1,2"`` or ``knn__k=5`` for the
    per-classifier key ``knn.k``.
    """
    settings = [(key.replace("__", "."), str(value)) for key, value in options.items()]
    return json.loads(_run_benchmark(list(rows), settings, zero_timing))


__all__ = [
    "CLASSIFIERS",
    "LABELS",
    "EmotextError",
    "TextClassifier",
    "default_stop_words",
    "evaluate",
    "load_corpus",
    "preprocess",
    "render_markdown",
    "run_benchmark",
    "separable_corpus",
    "split",
    "strip_punctuation",
    "tfidf",
    "tokenize",
]
