"""
Readers for group, algebra, cobordism word and triangulation files.
"""
import json
import logging
import os
from typing import Any, Dict, Union

import numpy as np

from core.cobordism import CobordismWord, parse_word
from core.errors import ValidationError
from core.frobenius import (
    FrobeniusAlgebra, build_algebra, class_function_algebra, dual_numbers, group_algebra,
    matrix_algebra, semisimple_algebra,
)
from core.group import FiniteGroup, build_preset, group_from_alias, load_cayley_table
from core.lattice import Triangulation, triangulation_from_dict

logger = logging.getLogger('cli')


def read_json(filename: str) -> Dict[str, Any]:
    """Read a JSON object, turning IO and syntax problems into ValidationError."""
    try:
        with open(filename, 'r') as f:
            data = json.load(f)
    except OSError as e:
        raise ValidationError(f"cannot read {filename}: {e}")
    except json.JSONDecodeError as e:
        raise ValidationError(f"malformed JSON in {filename}: {e}")
    if not isinstance(data, dict):
        raise ValidationError(f"{filename} must contain a JSON object")
    return data


def group_from_dict(data: Dict[str, Any], name: str = None) -> FiniteGroup:
    """
    {"name", "order", "cayley"} with an explicit table, or {"preset", "params"}.
    """
    if "preset" in data:
        params = data.get("params", [])
        if not isinstance(params, list):
            params = [params]
        return build_preset(str(data["preset"]), [int(p) for p in params])
    if "cayley" not in data:
        raise ValidationError("group data needs either 'cayley' or 'preset'")
    G = load_cayley_table(data["cayley"], name=data.get("name", name or "table"))
    if "order" in data and int(data["order"]) != G.order:
        raise ValidationError(f"declared order {data['order']} does not match the table ({G.order})")
    return G


def load_group(source: str) -> FiniteGroup:
    """A JSON file path, or a preset alias such as S3, Z2xZ2, dihedral:4."""
    if source.endswith('.json') or os.path.isfile(source):
        logger.debug(f"Loading group from {source}")
        return group_from_dict(read_json(source), name=os.path.splitext(os.path.basename(source))[0])
    return group_from_alias(source)


def _group_value(value: Any) -> FiniteGroup:
    """A nested group object, or a file name or alias."""
    if isinstance(value, dict):
        return group_from_dict(value)
    if isinstance(value, str):
        return load_group(value)
    raise ValidationError(f"expected a group object or name, got {value!r}")


def algebra_from_dict(data: Dict[str, Any]) -> FrobeniusAlgebra:
    """
    Algebra descriptions:
      {"mu", "unit", "trace", "labels"?}        explicit structure constants
      {"class_functions_of": group}             class functions of a group
      {"group_algebra_of": group, "normalization"?}
      {"semisimple": [traces]}                 direct sum of copies of C
      {"matrix": n, "scale"?}                  Mat_n with a scaled trace
      {"dual_numbers": [eps(1), eps(x)]}

    Complex entries may be written as [re, im] when "complex": true.
    """
    if "class_functions_of" in data:
        return class_function_algebra(_group_value(data["class_functions_of"]))
    if "group_algebra_of" in data:
        return group_algebra(_group_value(data["group_algebra_of"]), data.get("normalization", "lattice"))
    if "semisimple" in data:
        return semisimple_algebra([_scalar(x) for x in data["semisimple"]])
    if "matrix" in data:
        return matrix_algebra(int(data["matrix"]), _scalar(data.get("scale", 1.0)))
    if "dual_numbers" in data:
        a, b = data["dual_numbers"]
        return dual_numbers(_scalar(a), _scalar(b))
    missing = [k for k in ("mu", "unit", "trace") if k not in data]
    if missing:
        raise ValidationError(f"algebra data is missing {', '.join(missing)}")
    as_pairs = bool(data.get("complex", False))
    mu = _array(data["mu"], as_pairs)
    unit = _array(data["unit"], as_pairs)
    trace = _array(data["trace"], as_pairs)
    return build_algebra(mu, unit, trace, labels=data.get("labels"), name=data.get("name", "algebra"))


def _scalar(x: Union[float, list]) -> complex:
    if isinstance(x, list):
        if len(x) != 2:
            raise ValidationError(f"complex entries are [re, im] pairs, got {x}")
        return complex(float(x[0]), float(x[1]))
    return complex(x)


def _array(value: Any, as_pairs: bool) -> np.ndarray:
    try:
        if as_pairs:
            real = np.asarray(value, dtype=float)
            if real.shape[-1] != 2:
                raise ValidationError("complex arrays need [re, im] pairs at the innermost level")
            return real[..., 0] + 1j * real[..., 1]
        return np.asarray(value, dtype=complex)
    except (TypeError, ValueError) as e:
        raise ValidationError(f"malformed numeric array: {e}")


def load_algebra(source: str) -> FrobeniusAlgebra:
    """A JSON algebra file, or 'classfun:<group>', 'semisimple:t1,t2,..', 'matrix:n'."""
    if source.endswith('.json') or os.path.isfile(source):
        return algebra_from_dict(read_json(source))
    kind, _, arg = source.partition(':')
    if kind == 'classfun' and arg:
        return class_function_algebra(load_group(arg))
    if kind == 'groupalg' and arg:
        return group_algebra(load_group(arg))
    if kind == 'semisimple' and arg:
        try:
            return semisimple_algebra([complex(x) for x in arg.split(',')])
        except ValueError:
            raise ValidationError(f"malformed traces in '{source}'")
    if kind == 'matrix' and arg.isdigit():
        return matrix_algebra(int(arg))
    raise ValidationError(f"unknown algebra '{source}' (use a JSON file, classfun:G, groupalg:G, semisimple:..., matrix:n)")


def load_word(source: str) -> CobordismWord:
    """A word file (one slice per line) or an inline word with ';' between slices."""
    if os.path.isfile(source):
        try:
            with open(source, 'r') as f:
                return parse_word(f.read())
        except OSError as e:
            raise ValidationError(f"cannot read {source}: {e}")
    return parse_word(source.replace(';', '\n'))


def load_triangulation(filename: str) -> Triangulation:
    data = read_json(filename)
    return triangulation_from_dict(data, name=data.get("name", os.path.splitext(os.path.basename(filename))[0]))
