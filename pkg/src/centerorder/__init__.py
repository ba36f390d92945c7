"""Graded discourse centers for English clauses and salience-driven
constituent ordering for their Polish renderings."""

from .lexicon import Lexicon, load_lexicon, same_lexeme
from .model import (Config, Constituent, Document, NounPhraseDescriptor, Utterance,
                    cf_rank, validate_document)
from .ordering import OrderPlan, discriminate, fire_preferences, plan_orders, preprocess
from .patterns import OrderPattern, matches, parse_pattern, satisfying_orders
from .scoring import ScoredNP, ScoredUtterance, center_value, score_document, score_utterance
from .ingest import read_document, write_document
from .demo import annotate_demo

__all__ = [
    'Config', 'Constituent', 'Document', 'Lexicon', 'NounPhraseDescriptor', 'OrderPattern',
    'OrderPlan', 'ScoredNP', 'ScoredUtterance', 'Utterance', 'annotate_demo', 'center_value',
    'cf_rank', 'discriminate', 'fire_preferences', 'load_lexicon', 'matches', 'parse_pattern',
    'plan_orders', 'preprocess', 'read_document', 'same_lexeme', 'satisfying_orders',
    'score_document', 'score_utterance', 'validate_document', 'write_document',
]
__version__ = '0.1.0'
