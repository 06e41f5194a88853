"""Snark morphology from Python: thin wrappers over the C++ library."""
import json

from ._snarkmorph import (
    InputError,
    Multipole,
    VerificationError,
    build,
    colouring_set,
    count_colourings,
    cyclic_connectivity,
    family_names,
    flower_snark,
    from_graph6,
    from_text,
    girth,
    is_colourable,
    isomorphic,
    petersen,
)
from . import _snarkmorph


def grade(g):
    """Criticality grade as a dict with keys such as 'grade' and 'witness'."""
    return json.loads(_snarkmorph.grade_json(g))


def classify(g, id=""):
    return json.loads(_snarkmorph.classify_json(g, id))


def classify_files(paths, min_cc=0):
    return json.loads(_snarkmorph.classify_files_json(list(paths), min_cc))
