"""PL 拓扑工具箱 CLI：每个子命令对应一个 Flow，文件输入/输出可复现。"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

# 加载 .env 文件
try:
    from dotenv import load_dotenv

    load_dotenv()
except ImportError:
    pass  # python-dotenv 未安装，跳过

from src.core.config import is_debug
from src.core.dependency import registered_names
from src.core.errors import ConjectureAlarm, LemmaViolation, MalformedFileError, TopologyError
from src.core.log import capture_transcript, log
from src.core.models.result import CommandResult
from src.data.files.codec import witness_to_data
from src.data.files.json_store import JsonFileStore
from src.data.files.schemas import get_format_schemas
from src.flows.chain import check_cycle, check_simplicial, compute_boundary, lemma_eq
from src.flows.complex import deleted_product, gen_sphere, gen_torus
from src.flows.link import borromean_check, compute_linking, gen_remark_a, leibniz
from src.flows.position import check_gp, check_sgp, resimplicialize_chain
from src.flows.preimage import check_almost_embedding, compute_preimage
from src.flows.reduce import reduce_formula

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """命令行参数错误（退出码 1，而不是 argparse 默认的 2）。"""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    """构造参数解析器（全部子命令共享同一组选项）。"""
    common = _Parser(add_help=False)
    common.add_argument("--in", dest="inputs", action="append", default=[], metavar="FILE", help="输入文件（可重复）")
    common.add_argument("--out", help="输出文件（默认写到 stdout）")
    common.add_argument("--k", type=int, help="球面 / 复形维数")
    common.add_argument("--l", type=int, help="环面参数 l（环面为 2l 维）")
    common.add_argument("--d", type=int, help="目标空间维数")
    common.add_argument("--seed", type=int, help="随机种子（MT19937，默认 PLKIT_SEED）")
    common.add_argument("--cap", type=int, help="强一般位置枚举点数上限（默认 PLKIT_SGP_CAP）")
    common.add_argument(
        "--arrangement-cap", type=int, help="排列细分的输入多胞形个数上限（默认 PLKIT_ARRANGEMENT_CAP）"
    )
    common.add_argument("--debug", action="store_true", help="打开调试日志")

    parser = _Parser(prog="python -m src.cli.topo", description="精确有理数 PL 拓扑工具箱")
    parser.add_argument("--schema", action="store_true", help="打印全部文件格式的 JSON Schema")
    subparsers = parser.add_subparsers(dest="command", help="子命令", parser_class=_Parser)

    # ========== 生成 ==========
    subparsers.add_parser("gen-sphere", parents=[common], help="∂Δ^{k+1}；给 --d 时输出随机 PL 映射")
    subparsers.add_parser("gen-torus", parents=[common], help="2l 维环面小工具；给 --d 时输出随机 PL 映射")
    subparsers.add_parser("gen-remark-a", parents=[common], help="l = 0 的显式 Borromean 配置")
    subparsers.add_parser("deleted-product", parents=[common], help="单纯删积")

    # ========== 链 ==========
    subparsers.add_parser("boundary", parents=[common], help="模 2 边界")
    subparsers.add_parser("check-cycle", parents=[common], help="闭链检查")
    subparsers.add_parser("check-simplicial", parents=[common], help="单纯性检查")
    subparsers.add_parser("lemma-eq", parents=[common], help="多面体链引理")

    # ========== 位置 ==========
    subparsers.add_parser("check-gp", parents=[common], help="一般位置检查")
    subparsers.add_parser("check-sgp", parents=[common], help="强一般位置检查")
    subparsers.add_parser("resimplicialize", parents=[common], help="重新单纯化（--in 链 --in 点集）")

    # ========== 映射 ==========
    subparsers.add_parser("preimage", parents=[common], help="闭链原像（--in 映射 --in 链）")
    subparsers.add_parser("check-almost-embedding", parents=[common], help="几乎嵌入检查")

    # ========== 环绕数 ==========
    subparsers.add_parser("linking", parents=[common], help="模 2 环绕数（--in X --in Y）")
    subparsers.add_parser("borromean-check", parents=[common], help="奇异 Borromean 环性质检查")
    subparsers.add_parser("leibniz", parents=[common], help="Leibniz 三项（不给 --in 时按 --k --l --seed 生成）")

    # ========== 归约 ==========
    subparsers.add_parser("reduce", parents=[common], help="CNF → K(Φ)（不给 --in 时随机 3-CNF）")

    return parser


def _inputs(args: argparse.Namespace, count: int) -> list[str]:
    if len(args.inputs) != count:
        raise UsageError(f"{args.command} 需要 {count} 个 --in，实际 {len(args.inputs)} 个")
    return list(args.inputs)


def _required(args: argparse.Namespace, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"{args.command} 需要 --{name}")
    return value


def _optional_input(args: argparse.Namespace) -> str | None:
    if len(args.inputs) > 1:
        raise UsageError(f"{args.command} 最多接受 1 个 --in")
    return args.inputs[0] if args.inputs else None


# ========== 子命令 ==========


def _do_gen_sphere(args: argparse.Namespace) -> CommandResult:
    return gen_sphere(n=_required(args, "k"), d=args.d, seed=args.seed)


def _do_gen_torus(args: argparse.Namespace) -> CommandResult:
    return gen_torus(l=_required(args, "l"), d=args.d, seed=args.seed)


def _do_gen_remark_a(args: argparse.Namespace) -> CommandResult:
    return gen_remark_a(k=_required(args, "k"))


def _do_deleted_product(args: argparse.Namespace) -> CommandResult:
    (path,) = _inputs(args, 1)
    return deleted_product(path=path)


def _do_boundary(args: argparse.Namespace) -> CommandResult:
    (path,) = _inputs(args, 1)
    return compute_boundary(path=path)


def _do_check_cycle(args: argparse.Namespace) -> CommandResult:
    (path,) = _inputs(args, 1)
    return check_cycle(path=path)


def _do_check_simplicial(args: argparse.Namespace) -> CommandResult:
    (path,) = _inputs(args, 1)
    return check_simplicial(path=path)


def _do_lemma_eq(args: argparse.Namespace) -> CommandResult:
    (path,) = _inputs(args, 1)
    return lemma_eq(path=path, arrangement_cap=args.arrangement_cap)


def _do_check_gp(args: argparse.Namespace) -> CommandResult:
    (path,) = _inputs(args, 1)
    return check_gp(path=path)


def _do_check_sgp(args: argparse.Namespace) -> CommandResult:
    (path,) = _inputs(args, 1)
    return check_sgp(path=path, cap=args.cap)


def _do_resimplicialize(args: argparse.Namespace) -> CommandResult:
    chain_path, points_path = _inputs(args, 2)
    return resimplicialize_chain(
        chain_path=chain_path,
        points_path=points_path,
        cap=args.cap,
        arrangement_cap=args.arrangement_cap,
    )


def _do_preimage(args: argparse.Namespace) -> CommandResult:
    map_path, chain_path = _inputs(args, 2)
    return compute_preimage(
        map_path=map_path,
        chain_path=chain_path,
        cap=args.cap,
        arrangement_cap=args.arrangement_cap,
    )


def _do_check_almost_embedding(args: argparse.Namespace) -> CommandResult:
    (path,) = _inputs(args, 1)
    return check_almost_embedding(path=path)


def _do_linking(args: argparse.Namespace) -> CommandResult:
    x_path, y_path = _inputs(args, 2)
    return compute_linking(x_path=x_path, y_path=y_path)


def _do_borromean_check(args: argparse.Namespace) -> CommandResult:
    (path,) = _inputs(args, 1)
    return borromean_check(path=path)


def _do_leibniz(args: argparse.Namespace) -> CommandResult:
    return leibniz(path=_optional_input(args), k=args.k, l=args.l, seed=args.seed)


def _do_reduce(args: argparse.Namespace) -> CommandResult:
    return reduce_formula(k=_required(args, "k"), d=_required(args, "d"), path=_optional_input(args), seed=args.seed)


_HANDLERS: dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    "gen-sphere": _do_gen_sphere,
    "gen-torus": _do_gen_torus,
    "gen-remark-a": _do_gen_remark_a,
    "deleted-product": _do_deleted_product,
    "boundary": _do_boundary,
    "check-cycle": _do_check_cycle,
    "check-simplicial": _do_check_simplicial,
    "lemma-eq": _do_lemma_eq,
    "check-gp": _do_check_gp,
    "check-sgp": _do_check_sgp,
    "resimplicialize": _do_resimplicialize,
    "preimage": _do_preimage,
    "check-almost-embedding": _do_check_almost_embedding,
    "linking": _do_linking,
    "borromean-check": _do_borromean_check,
    "leibniz": _do_leibniz,
    "reduce": _do_reduce,
}


# ========== 执行与输出 ==========


def _error_result(err: Exception) -> CommandResult:
    """异常 → CommandResult：引理违例 / 猜想警报为 violation，其余为 error。"""
    if isinstance(err, (LemmaViolation, ConjectureAlarm)):
        log(f"⚠️  {err.code.value}：{err.message}")
        return CommandResult(
            "violation",
            payload={"code": err.code.value, "message": err.message},
            witness={"code": err.code.value, "witness": witness_to_data(err.witness)},
        )
    if isinstance(err, MalformedFileError):
        where = err.path + (f":{err.line}" if err.line is not None else "") + (f" [{err.location}]" if err.location else "")
        log(f"❌ 输入文件错误 {where}：{err.message}")
        payload = {"code": err.code.value, "message": err.message, "path": err.path, "location": err.location, "line": err.line}
        return CommandResult("error", payload=payload)
    if isinstance(err, TopologyError):
        log(f"❌ {err.code.value}：{err.message}")
        return CommandResult("error", payload={"code": err.code.value, "message": err.message, "witness": witness_to_data(err.witness)})
    if isinstance(err, UsageError):
        log(f"❌ 参数错误：{err}")
        return CommandResult("error", payload={"code": "usage", "message": str(err)})
    logger.exception("[CLI] 未预期的异常")
    log(f"❌ 执行失败：{err}")
    return CommandResult("error", payload={"code": "internal", "message": str(err)})


def _sidecar(out: str, suffix: str) -> Path:
    """<out 去掉 .json>.<suffix>.json"""
    base = out[: -len(".json")] if out.endswith(".json") else out
    return Path(f"{base}.{suffix}.json")


def _write_outputs(args: argparse.Namespace, result: CommandResult, store: JsonFileStore) -> None:
    """
    写出结果：
    - error：不写文件；
    - payload → --out（未给时写 stdout）；
    - witness / extras → --out 旁的 .witness.json / .<名>.json。
    """
    if result.status == "error":
        return
    out = getattr(args, "out", None)
    if out is None:
        sys.stdout.write(store.dumps(result.payload))
        return
    store.write(out, result.payload)
    if result.witness is not None:
        store.write(_sidecar(out, "witness"), result.witness)
        log(f"[CLI] 反例已写入 {_sidecar(out, 'witness')}")
    for suffix, data in sorted(result.extras.items()):
        store.write(_sidecar(out, suffix), data)


def run(argv: Sequence[str] | None = None) -> CommandResult:
    """
    解析参数并执行一个子命令。

    Returns:
        CommandResult（transcript 为执行期间的全部 log 行）。
    """
    store = JsonFileStore()
    with capture_transcript() as lines:
        # 1. 解析参数
        try:
            args = _build_parser().parse_args(argv)
        except UsageError as err:
            result = _error_result(err)
            result.transcript = list(lines)
            return result

        if getattr(args, "debug", False) or is_debug():
            logging.basicConfig(level=logging.DEBUG, format="%(name)s - %(message)s")
        else:
            logging.basicConfig(level=logging.WARNING)
        logger.debug(f"[CLI] 已登记依赖：{registered_names()}")

        # 2. --schema
        if args.schema:
            result = CommandResult("ok", payload=get_format_schemas())
            sys.stdout.write(store.dumps(result.payload))
            return result
        if args.command is None:
            result = _error_result(UsageError("缺少子命令"))
            result.transcript = list(lines)
            return result

        # 3. 执行
        try:
            result = _HANDLERS[args.command](args)
        except Exception as err:  # noqa: BLE001
            result = _error_result(err)

        # 4. 输出
        try:
            _write_outputs(args, result, store)
        except OSError as err:
            result = _error_result(err)
        result.transcript = list(lines)
    return result


def main() -> int:
    """
    PL 拓扑工具箱 CLI。

    Returns:
        退出码：0=成功；2=检查完成但不成立；1=无法运行。
    """
    return run().exit_code


if __name__ == "__main__":
    sys.exit(main())
