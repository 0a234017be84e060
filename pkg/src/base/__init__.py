# 基底圏バックエンド
from .cache import BoundedCache
from .category import ALL, Arrow, ArrowClass, CategoryBackend, object_key, sort_arrows
from .backends import (
    DiscreteCat, DiscreteNat, FinPoset, FreeCat, MonoidNat, SimplexCat,
    interval, omega_chain, point,
)
from .functor import FunctorDef, constant_point, identity_functor
from .presentation import load_backend, load_functor, load_presentation, parse_functor, parse_presentation

__all__ = [
    'BoundedCache', 'ALL', 'Arrow', 'ArrowClass', 'CategoryBackend', 'object_key', 'sort_arrows',
    'DiscreteCat', 'DiscreteNat', 'FinPoset', 'FreeCat', 'MonoidNat', 'SimplexCat',
    'interval', 'omega_chain', 'point',
    'FunctorDef', 'constant_point', 'identity_functor',
    'load_backend', 'load_functor', 'load_presentation', 'parse_functor', 'parse_presentation',
]
