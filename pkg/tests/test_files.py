from __future__ import annotations

import json
from pathlib import Path

import pytest

from src.core.errors import DimensionMismatchError, MalformedFileError
from src.core.rules.complex import torus_gadget
from src.core.rules.link import remark_a_config
from src.data.files.codec import (
    borromean_from_file,
    borromean_to_file,
    chain_from_file,
    complex_from_file,
    complex_to_file,
    plmap_from_file,
    witness_to_data,
)
from src.data.files.dimacs_store import CnfFileStore
from src.data.files.json_store import JsonFileStore
from src.data.files.schemas import ChainFile, ComplexFile, PLMapFile, get_format_schemas
from tests.helpers import F, pt


def test_rationals_are_canonicalized(store: JsonFileStore, write_json) -> None:
    path = write_json("c.json", {"dim": 1, "ambient": 2, "simplices": [[[0, "2/4"], ["0.5", 3]]]})
    data = store.read(path, ChainFile)
    assert data.simplices == [[["0", "1/2"], ["1/2", "3"]]]
    chain = chain_from_file(data)
    assert chain.sorted_simplices()[0].vertices == (pt(0, "1/2"), pt("1/2", 3))


def test_float_coordinates_are_rejected(store: JsonFileStore, write_json) -> None:
    path = write_json("c.json", {"dim": 0, "ambient": 1, "simplices": [[[0.5]]]})
    with pytest.raises(MalformedFileError) as info:
        store.read(path, ChainFile)
    assert info.value.location == "simplices.0.0.0"


def test_json_syntax_error_has_line(store: JsonFileStore, tmp_path: Path) -> None:
    path = tmp_path / "broken.json"
    path.write_text('{\n  "dim": 1,\n  "ambient": \n}\n', encoding="utf-8")
    with pytest.raises(MalformedFileError) as info:
        store.read(path, ChainFile)
    assert info.value.line == 4
    assert info.value.path == str(path)


def test_missing_file(store: JsonFileStore, tmp_path: Path) -> None:
    with pytest.raises(MalformedFileError):
        store.read(tmp_path / "nope.json", ChainFile)


def test_write_is_stable(store: JsonFileStore, tmp_path: Path) -> None:
    data = complex_to_file(torus_gadget(1))
    a = store.write(tmp_path / "a" / "torus.json", data)
    b = store.write(tmp_path / "b.json", data.model_dump(mode="json"))
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text(encoding="utf-8").endswith("}\n")


def test_complex_round_trip_keeps_marks() -> None:
    torus = torus_gadget(1)
    back = complex_from_file(ComplexFile.model_validate(complex_to_file(torus).model_dump(mode="json")))
    assert back.facets == torus.facets
    assert back.marks == torus.marks


def test_plmap_target_dim_must_match() -> None:
    data = PLMapFile.model_validate(
        {"domain": {"vertices": 2, "facets": [[0, 1]]}, "images": [[0, 0], [1, 1]], "target_dim": 3}
    )
    with pytest.raises(DimensionMismatchError):
        plmap_from_file(data)


def test_borromean_config_file_round_trip() -> None:
    cfg = remark_a_config(1)
    back = borromean_from_file(borromean_to_file(cfg))
    assert back.k == 1 and back.l == 0
    assert back.sphere_p_map.vertex_images == cfg.sphere_p_map.vertex_images
    assert back.torus_map.domain.marks == cfg.torus_map.domain.marks


def test_witness_to_data_handles_nested_structures() -> None:
    data = witness_to_data({"points": [pt(1, "1/3")], "value": F(2, 4), "pair": ((1, 2), (3,))})
    assert data == {"points": [["1", "1/3"]], "value": "1/2", "pair": [[1, 2], [3]]}
    json.dumps(data)


def test_format_schemas_are_registered() -> None:
    schemas = get_format_schemas()
    assert {"chain", "points", "complex", "plmap", "borromean-config", "provenance"} <= set(schemas)
    assert list(schemas) == sorted(schemas)


def test_cnf_store_round_trip(tmp_path: Path) -> None:
    store = CnfFileStore()
    path = tmp_path / "phi.cnf"
    path.write_text("p cnf 2 1\n1 -2 0\n", encoding="utf-8")
    phi = store.read(path)
    out = store.write(tmp_path / "copy.cnf", phi)
    assert store.read(out).clauses == [[1, -2]]
    with pytest.raises(MalformedFileError):
        store.read(tmp_path / "missing.cnf")
