"""
エンジン共通の例外定義

エラー3要素（what / why / how）を必ず保持し、
メッセージは "what - why - how" 形式で組み立てる。
"""

from typing import Any, Dict


class BifibError(Exception):
    """全ドメイン例外の基底クラス"""

    def __init__(self, what: str, why: str, how: str):
        self.what = what
        self.why = why
        self.how = how
        super().__init__(f"{what} - {why} - {how}")

    @property
    def code(self) -> str:
        """機械可読なエラーコード（クラス名）"""
        return type(self).__name__

    def to_dict(self) -> Dict[str, Any]:
        return {
            'error': self.code,
            'message': str(self),
            'what': self.what,
            'why': self.why,
            'how': self.how,
        }


class NonComposable(BifibError):
    """射の合成・カットの境界が一致しない"""


class SquareNotCommuting(BifibError):
    """フィラー問い合わせの四角形が可換でない"""


class FPViolation(BifibError):
    """FP 宣言下で対角フィラー（除算結果）が複数見つかった"""


class NotFP(BifibError):
    """FP 性を要求する操作をFPでない基底で呼び出した"""


class IllFormed(BifibError):
    """論理式・導出の側条件違反"""

    def __init__(self, what: str, why: str, how: str, node: Any = None):
        self.node = node
        super().__init__(what, why, how)


class BudgetExceeded(BifibError):
    """BFS の探索ノード数が予算を超えた"""


class NotStrictlyAlternating(BifibError):
    """厳密交代でない論理式を含む導出が渡された"""


class BoundaryMismatch(BifibError):
    """二重セルのスタック境界が一致しない"""


class UndecidableConfiguration(BifibError):
    """FP でも局所有限でもなく等価判定手段がない"""


class TargetDivisionFailed(BifibError):
    """解釈先の除算が定義されていない"""


class NotAWalk(BifibError):
    """木モードで変位が負になった"""


class PresentationError(BifibError):
    """圏の提示ファイルの内容が不正"""


class ParseError(BifibError):
    """S式の構文エラー"""
