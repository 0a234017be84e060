"""
上限付きのメモ表

判断推論のキャッシュに使う。上限を超えたら最も古く参照された項目から捨てる。
"""

from collections import OrderedDict
from typing import Generic, Hashable, Optional, TypeVar

V = TypeVar('V')


class BoundedCache(Generic[V]):
    """
    最近使われた順に maxsize 件までを保持する辞書

    Args:
        maxsize: int - 保持する件数の上限（0 以下ならキャッシュしない）
    """

    def __init__(self, maxsize: int):
        self.maxsize = maxsize
        self._data: "OrderedDict[Hashable, V]" = OrderedDict()

    def get(self, key: Hashable) -> Optional[V]:
        value = self._data.get(key)
        if value is not None:
            self._data.move_to_end(key)
        return value

    def put(self, key: Hashable, value: V):
        if self.maxsize <= 0:
            return
        self._data[key] = value
        self._data.move_to_end(key)
        while len(self._data) > self.maxsize:
            self._data.popitem(last=False)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._data

    def __len__(self) -> int:
        return len(self._data)
