"""并查集：排列细分的连通分量与 K(Φ) 的顶点粘接共用。"""

from __future__ import annotations


class UnionFind:
    """
    0..n−1 上的并查集（路径减半）。

    合并时较小的编号当根，find 的结果因此与合并顺序无关：
    每个类的代表元总是类中最小的编号。
    """

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def groups(self) -> list[list[int]]:
        """全部等价类，类内升序，类之间按最小元排序。"""
        classes: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            classes.setdefault(self.find(i), []).append(i)
        return sorted(classes.values())
