from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction


def get_sgp_cap() -> int:
    """
    返回强一般位置检查的点数上限。

    Returns:
        点数上限；默认 12（可由 `PLKIT_SGP_CAP` 覆盖）。

    说明：强一般位置需要枚举互不相交子集族，超过上限直接报错，不做抽样。
    """
    return int(os.getenv("PLKIT_SGP_CAP", "12"))


def get_arrangement_cap() -> int:
    """
    返回多面体排列细分的输入数量上限。

    Returns:
        输入多面体个数上限；默认 256（由 `PLKIT_ARRANGEMENT_CAP` 配置）。
    """
    return int(os.getenv("PLKIT_ARRANGEMENT_CAP", "256"))


def get_default_seed() -> int:
    """返回随机生成的默认种子（`PLKIT_SEED`，默认 0）。"""
    return int(os.getenv("PLKIT_SEED", "0"))


def is_debug() -> bool:
    """是否打开调试日志（`PLKIT_DEBUG=true`）。"""
    return os.getenv("PLKIT_DEBUG", "false").lower() == "true"


# ========== 锥顶序列配置 ==========


class ApexConfig:
    """
    锥顶点序列配置。

    第 t 个锥顶取矩曲线上的点 (q, q², …, q^d)，q = M + t。

    环境变量：
    - PLKIT_APEX_BASE: 基数 M（有理数字符串，默认 1009/7）
    - PLKIT_APEX_RETRIES: 遇到退化时最多换几次锥顶（默认 32）
    """

    @staticmethod
    def get_base() -> Fraction:
        """返回基数 M。"""
        return Fraction(os.getenv("PLKIT_APEX_BASE", "1009/7"))

    @staticmethod
    def get_retries() -> int:
        """返回最大重试次数。"""
        return int(os.getenv("PLKIT_APEX_RETRIES", "32"))


@dataclass(slots=True, frozen=True)
class KitSettings:
    """运行期配置快照（由容器注入到 Flow）。"""

    sgp_cap: int
    arrangement_cap: int
    apex_base: Fraction
    apex_retries: int
    seed: int


def load_settings() -> KitSettings:
    """按当前环境变量构造配置快照。"""
    return KitSettings(
        sgp_cap=get_sgp_cap(),
        arrangement_cap=get_arrangement_cap(),
        apex_base=ApexConfig.get_base(),
        apex_retries=ApexConfig.get_retries(),
        seed=get_default_seed(),
    )
