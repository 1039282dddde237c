"""样例输入文件生成脚本。

职责：
- 生成各子命令可直接使用的输入文件（链、多面体链、点集、映射、配置、CNF）
- 固定种子，输出逐字节可复现

使用方式：
    python -m scripts.make_samples                 # 写到 samples/
    SAMPLES_DIR=/tmp/plkit python -m scripts.make_samples

环境变量：
    SAMPLES_DIR: 输出目录（默认 samples）
    SAMPLES_SEED: 随机映射的种子（默认 7）
"""

from __future__ import annotations

import os
import random
from pathlib import Path

from src.core.models.reduce import CnfFormula
from src.core.rules.chain import boundary, make_chain, make_simplex
from src.core.rules.complex import boundary_sphere, make_complex, torus_gadget
from src.core.rules.link import product_torus_config, remark_a_config
from src.core.rules.plmap import concurrent_diameters_scenario, random_plmap
from src.core.rules.precision import format_point, to_point
from src.data.files.codec import borromean_to_file, chain_to_file, complex_to_file, plmap_to_file, points_to_file
from src.data.files.dimacs_store import CnfFileStore
from src.data.files.json_store import JsonFileStore
from src.data.files.schemas import PolytopeChainFile


def _chains(store: JsonFileStore, out: Path) -> None:
    """链与多面体链样例。"""
    triangle = make_chain([make_simplex([to_point(p) for p in ((0, 0), (4, 0), (0, 4))])])
    store.write(out / "triangle.json", chain_to_file(triangle))
    store.write(out / "triangle-boundary.json", chain_to_file(boundary(triangle)))

    # 开折线：check-cycle 不成立
    path = make_chain([make_simplex([to_point(a), to_point(b)]) for a, b in (((0, 0), (1, 0)), ((1, 0), (1, 1)))])
    store.write(out / "open-path.json", chain_to_file(path))

    corners = [(0, 0), (1, 0), (1, 1), (0, 1)]
    edges = [[format_point(to_point(corners[i])), format_point(to_point(corners[(i + 1) % 4]))] for i in range(4)]
    store.write(out / "square-edges.json", PolytopeChainFile(dim=1, ambient=2, cells=edges))
    store.write(out / "square-three-edges.json", PolytopeChainFile(dim=1, ambient=2, cells=edges[:3]))
    print("[Samples] 链：triangle / triangle-boundary / open-path / square-edges / square-three-edges")


def _points(store: JsonFileStore, out: Path) -> None:
    """强一般位置不成立的三直径点集。"""
    chain, points = concurrent_diameters_scenario()
    vertices = sorted({v for s in chain.simplices for v in s.vertices})
    store.write(out / "diameters.json", points_to_file(points + vertices, 2))
    store.write(out / "diameters-chain.json", chain_to_file(chain))
    store.write(out / "diameters-points.json", points_to_file(points, 2))
    print("[Samples] 点集：diameters（check-sgp 不成立）")


def _maps(store: JsonFileStore, out: Path, seed: int) -> None:
    """复形、随机映射与 Borromean 配置。"""
    rng = random.Random(seed)
    store.write(out / "sphere2.json", complex_to_file(boundary_sphere(2)))
    store.write(out / "torus1.json", complex_to_file(torus_gadget(1)))

    polygon = make_complex(5, [(i, (i + 1) % 5) for i in range(5)], realization=[to_point((i, i * i)) for i in range(5)])
    store.write(out / "polygon-map.json", plmap_to_file(random_plmap(polygon, 2, rng)))
    loop = make_chain([make_simplex([to_point(a), to_point(b)]) for a, b in (
        ((-300, -200), (400, -250)),
        ((400, -250), (50, 500)),
        ((50, 500), (-300, -200)),
    )])
    store.write(out / "loop.json", chain_to_file(loop))

    k5 = make_complex(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    store.write(out / "k5-map.json", plmap_to_file(random_plmap(k5, 2, rng)))

    store.write(out / "remark-a-k2.json", borromean_to_file(remark_a_config(2)))
    store.write(out / "product-torus.json", borromean_to_file(product_torus_config(2, 1, rng)))
    print(f"[Samples] 映射：polygon-map / loop / k5-map / remark-a-k2 / product-torus（seed={seed}）")


def _formulas(out: Path) -> None:
    phi = CnfFormula(variable_count=3, clauses=[[1, -2, 3], [-1, 2]], comments=["sample"])
    CnfFileStore().write(out / "phi.cnf", phi)
    print("[Samples] 公式：phi.cnf")


def main() -> None:
    out = Path(os.getenv("SAMPLES_DIR", "samples"))
    seed = int(os.getenv("SAMPLES_SEED", "7"))
    store = JsonFileStore()
    _chains(store, out)
    _points(store, out)
    _maps(store, out, seed)
    _formulas(out)
    print(f"✅ 样例已写入 {out}/")


if __name__ == "__main__":
    main()
