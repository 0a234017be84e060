# 設定モジュール
from .environment import config, get_config, is_debug_mode, get_search_config

__all__ = ['config', 'get_config', 'is_debug_mode', 'get_search_config']
