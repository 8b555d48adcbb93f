"""Hand-transcribed crystal-graph figures used as exact fixtures.

All three graphs share one edge skeleton on 24 named nodes; the vertex
dictionaries identify the nodes with shifted tableaux, orthogonal
factorizations, and symplectic factorizations respectively.
"""

EDGE_SKELETON = [
    ("T62", "1", "T51"), ("T62", "2", "T52"), ("T62", "1bar", "T53"),
    ("T51", "1bar", "T40"), ("T51", "1", "T40"), ("T51", "2", "T41"),
    ("T52", "1", "T42"), ("T52", "1bar", "T43"),
    ("T53", "2", "T43"),
    ("T40", "2", "T30"),
    ("T41", "1bar", "T30"), ("T41", "1", "T30"), ("T41", "2", "T31"),
    ("T42", "1", "T32"), ("T42", "1bar", "T33"),
    ("T43", "1", "T33"), ("T43", "2", "T34"),
    ("T45", "1bar", "T35"), ("T45", "1", "T35"),
    ("T30", "2", "T20"),
    ("T31", "1bar", "T20"), ("T31", "1", "T21"),
    ("T32", "2", "T21"), ("T32", "1bar", "T22"), ("T32", "1", "T22"),
    ("T33", "2", "T23"),
    ("T34", "1", "T23"), ("T34", "1bar", "T25"),
    ("T35", "2", "T25"),
    ("T20", "2", "T11"),
    ("T21", "1bar", "T12"), ("T21", "1", "T12"),
    ("T22", "2", "T12"),
    ("T23", "1bar", "T13"), ("T23", "1", "T13"),
    ("T11", "1bar", "T02"), ("T11", "1", "T02"),
    ("T12", "2", "T02"),
]

# ShTab_3((3,1)); rows bottom-to-top as entry strings
SHTAB_VERTICES = {
    "T02": [["2", "3'", "3"], ["3"]],
    "T11": [["1", "3'", "3"], ["3"]],
    "T12": [["2", "2", "3"], ["3"]],
    "T13": [["2", "2", "3'"], ["3"]],
    "T20": [["1", "2'", "3"], ["3"]],
    "T21": [["1", "2", "3"], ["3"]],
    "T22": [["2", "2", "2"], ["3"]],
    "T23": [["1", "2", "3'"], ["3"]],
    "T25": [["1", "2'", "3'"], ["3"]],
    "T30": [["1", "2'", "3"], ["2"]],
    "T31": [["1", "1", "3"], ["3"]],
    "T32": [["1", "2", "2"], ["3"]],
    "T33": [["1", "2'", "2"], ["3"]],
    "T34": [["1", "1", "3'"], ["3"]],
    "T35": [["1", "2'", "3'"], ["2"]],
    "T40": [["1", "2'", "2"], ["2"]],
    "T41": [["1", "1", "3"], ["2"]],
    "T42": [["1", "1", "2"], ["3"]],
    "T43": [["1", "1", "2'"], ["3"]],
    "T45": [["1", "1", "3'"], ["2"]],
    "T51": [["1", "1", "2"], ["2"]],
    "T52": [["1", "1", "1"], ["3"]],
    "T53": [["1", "1", "2'"], ["2"]],
    "T62": [["1", "1", "1"], ["2"]],
}

# R^O_3((1,3)(2,5)); factors as strings, "" for the empty factor
ORTH_VERTICES = {
    "T02": ["", "3", "124"],
    "T11": ["3", "", "124"],
    "T12": ["", "13", "24"],
    "T13": ["", "34", "12"],
    "T20": ["3", "1", "24"],
    "T21": ["1", "3", "24"],
    "T22": ["", "134", "2"],
    "T23": ["3", "4", "12"],
    "T25": ["4", "3", "12"],
    "T30": ["3", "12", "4"],
    "T31": ["13", "", "24"],
    "T32": ["1", "34", "2"],
    "T33": ["3", "14", "2"],
    "T34": ["34", "", "12"],
    "T35": ["4", "13", "2"],
    "T40": ["3", "124", ""],
    "T41": ["13", "2", "4"],
    "T42": ["13", "4", "2"],
    "T43": ["34", "1", "2"],
    "T45": ["14", "3", "2"],
    "T51": ["13", "24", ""],
    "T52": ["134", "", "2"],
    "T53": ["34", "12", ""],
    "T62": ["134", "2", ""],
}

# R^Sp_3((1,4)(2,6)(3,5))
SYMP_VERTICES = {
    "T02": ["", "4", "235"],
    "T11": ["4", "", "235"],
    "T12": ["", "24", "35"],
    "T13": ["", "45", "23"],
    "T20": ["4", "2", "35"],
    "T21": ["2", "4", "35"],
    "T22": ["", "245", "3"],
    "T23": ["4", "5", "23"],
    "T25": ["4", "3", "23"],
    "T30": ["4", "23", "5"],
    "T31": ["24", "", "35"],
    "T32": ["2", "45", "3"],
    "T33": ["4", "25", "3"],
    "T34": ["45", "", "23"],
    "T35": ["4", "23", "2"],
    "T40": ["4", "235", ""],
    "T41": ["24", "3", "5"],
    "T42": ["24", "5", "3"],
    "T43": ["45", "2", "3"],
    "T45": ["24", "3", "2"],
    "T51": ["24", "35", ""],
    "T52": ["245", "", "3"],
    "T53": ["45", "23", ""],
    "T62": ["245", "3", ""],
}


def factorization_vertex(strings):
    from queercrystals.insertion import Factorization

    return Factorization(tuple(tuple(int(ch) for ch in s) for s in strings))


def shtab_vertex(rows):
    from queercrystals.tableaux import ShiftedTableau

    return ShiftedTableau.from_strings(rows)


def expected_edges(vertex_map, build):
    return {
        (build(vertex_map[a]), lab, build(vertex_map[b]))
        for a, lab, b in EDGE_SKELETON
    }


def shtab_figure():
    verts = {k: shtab_vertex(v) for k, v in SHTAB_VERTICES.items()}
    return set(verts.values()), {
        (verts[a], lab, verts[b]) for a, lab, b in EDGE_SKELETON
    }


def orth_figure():
    verts = {k: factorization_vertex(v) for k, v in ORTH_VERTICES.items()}
    return set(verts.values()), {
        (verts[a], lab, verts[b]) for a, lab, b in EDGE_SKELETON
    }


def symp_figure():
    verts = {k: factorization_vertex(v) for k, v in SYMP_VERTICES.items()}
    return set(verts.values()), {
        (verts[a], lab, verts[b]) for a, lab, b in EDGE_SKELETON
    }
