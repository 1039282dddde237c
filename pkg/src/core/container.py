"""
依赖容器模块（Dependency Container）。

职责：
- 集中管理所有依赖对象的创建逻辑
- 通过 @register 装饰器注册到依赖注入容器
- 为 Flow 函数提供自动依赖注入支持

设计原则：
- 单一职责：只负责创建依赖对象
- 配置快照每次按环境变量重新读取（测试中 monkeypatch 环境变量即可生效）
- 文件仓储无状态，模块级复用

使用方式：
    # 1. 在 Flow 函数中自动注入
    @dependency
    def check_cycle(*, path: str, file_store=None):
        # file_store 自动创建
        pass

    # 2. 在 CLI 中直接调用工厂函数
    store = get_file_store()

    # 3. 测试时手动传入替身
    check_cycle(path="c.json", file_store=FakeStore())

注意事项：
    - @register 的名字必须与 Flow 函数参数名一致
    - 本模块在 src/flows/__init__.py 中自动导入，确保注册表在任何 Flow 使用前被填充
"""

from __future__ import annotations

from src.core.config import KitSettings, load_settings
from src.core.dependency import register
from src.data.files.dimacs_store import CnfFileStore
from src.data.files.json_store import JsonFileStore

# ========== 全局单例 ==========

_file_store: JsonFileStore | None = None
_cnf_store: CnfFileStore | None = None


# ========== 依赖工厂函数（注册到容器） ==========


@register("kit_settings")
def get_kit_settings() -> KitSettings:
    """
    获取运行期配置快照。

    Returns:
        KitSettings（枚举上限、锥顶序列参数、默认种子）。

    注册名：kit_settings
    """
    return load_settings()


@register("file_store")
def get_file_store() -> JsonFileStore:
    """
    获取 JSON 文件仓储。

    注册名：file_store
    """
    global _file_store
    if _file_store is None:
        _file_store = JsonFileStore()
    return _file_store


@register("cnf_store")
def get_cnf_store() -> CnfFileStore:
    """
    获取 DIMACS 文件仓储。

    注册名：cnf_store
    """
    global _cnf_store
    if _cnf_store is None:
        _cnf_store = CnfFileStore()
    return _cnf_store
