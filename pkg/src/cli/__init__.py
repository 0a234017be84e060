# コマンドライン
from .app import build_parser, run
from .suite import AcceptanceSuite, CriterionResult, format_table

__all__ = ['build_parser', 'run', 'AcceptanceSuite', 'CriterionResult', 'format_table']
