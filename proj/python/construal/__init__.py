# Copyright 2026 The Construal Toolkit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the construal annotation toolkit."""

from ._core import (
    AnnotationRecord,
    Construal,
    ConstrualError,
    Corpus,
    Hierarchy,
    Lexicon,
    RevisionMap,
    TagModel,
    cohen_kappa,
    compute_stats,
    format_construal,
    load_corpus,
    pairwise_agreement,
    parse_construal,
    revise_corpus,
    simplify_chain,
    soft_similarity,
    train,
    validate_construal,
)

__all__ = [
    "AnnotationRecord",
    "Construal",
    "ConstrualError",
    "Corpus",
    "Hierarchy",
    "Lexicon",
    "RevisionMap",
    "TagModel",
    "cohen_kappa",
    "compute_stats",
    "format_construal",
    "load_corpus",
    "pairwise_agreement",
    "parse_construal",
    "revise_corpus",
    "simplify_chain",
    "soft_similarity",
    "train",
    "validate_construal",
]
