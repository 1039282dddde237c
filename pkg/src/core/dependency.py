"""
依赖注入装饰器。

职责：
- Flow 函数的仓储与配置参数（file_store / cnf_store / kit_settings）按参数名自动填充
- 测试中可直接传入替身，或用 override() 临时替换工厂

约定：
- 只注入仅限关键字参数（Flow 统一写成 `def f(*, ...)`）
- 注册名与参数名完全一致，大小写敏感
- 调用方传入非 None 值时不覆盖

使用示例：
    @register("file_store")
    def get_file_store() -> JsonFileStore:
        return JsonFileStore()

    @dependency
    def check_cycle(*, path: str, file_store: JsonFileStore | None = None) -> CommandResult:
        chain = chain_from_file(file_store.read(path, ChainFile))
        ...

    check_cycle(path="chain.json")                        # 自动注入
    check_cycle(path="chain.json", file_store=FakeStore())  # 手动替身

注册在 src/core/container.py 完成，由 src/flows/__init__.py 导入触发。
"""

from __future__ import annotations

import inspect
from collections.abc import Iterator
from contextlib import contextmanager
from functools import wraps
from typing import Any, Callable, TypeVar

# ========== 注册表 ==========

# 参数名 -> 工厂函数
_REGISTRY: dict[str, Callable[[], Any]] = {}

T = TypeVar("T")


def register(name: str) -> Callable[[Callable[[], T]], Callable[[], T]]:
    """
    把工厂函数登记为名为 name 的依赖。

    示例：
        @register("cnf_store")
        def get_cnf_store() -> CnfFileStore:
            return CnfFileStore()
    """

    def decorator(factory: Callable[[], T]) -> Callable[[], T]:
        _REGISTRY[name] = factory
        return factory

    return decorator


def registered_names() -> list[str]:
    """已登记的依赖名（排序后）。"""
    return sorted(_REGISTRY)


@contextmanager
def override(name: str, factory: Callable[[], Any]) -> Iterator[None]:
    """
    临时替换某个依赖的工厂，退出 with 块后恢复。

    示例：
        with override("kit_settings", lambda: KitSettings(4, 256, Fraction(1009, 7), 32, 0)):
            check_sgp(path="points.json")  # sgp_cap = 4

    Raises:
        KeyError: name 未登记。
    """
    if name not in _REGISTRY:
        raise KeyError(f"依赖 {name!r} 未登记")
    previous = _REGISTRY[name]
    _REGISTRY[name] = factory
    try:
        yield
    finally:
        _REGISTRY[name] = previous


# ========== 装饰器 ==========


def dependency(func: Callable[..., T]) -> Callable[..., T]:
    """
    为 func 的仅限关键字参数自动注入已登记的依赖。

    签名在装饰时解析一次；每次调用时，值为 None 且名字已登记的参数
    由对应工厂创建。工厂每次调用都会执行，配置快照因此总是反映当前环境变量。

    示例：
        @dependency
        def reduce_formula(*, k: int, d: int, cnf_store=None, kit_settings=None) -> CommandResult:
            ...

        reduce_formula(k=2, d=4)
        reduce_formula(k=2, d=4, kit_settings=KitSettings(12, 256, Fraction(1009, 7), 32, seed=7))
    """
    injectable = [
        name for name, param in inspect.signature(func).parameters.items() if param.kind is inspect.Parameter.KEYWORD_ONLY
    ]

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> T:
        for name in injectable:
            if kwargs.get(name) is None and name in _REGISTRY:
                kwargs[name] = _REGISTRY[name]()
        return func(*args, **kwargs)

    return wrapper
