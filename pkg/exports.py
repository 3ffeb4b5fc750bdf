# exports.py - JSON, DOT and CSV renderings of every payload the CLI prints
import orjson
import pandas as pd

from utils import to_decimal_strings

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE | orjson.OPT_SERIALIZE_NUMPY

SCAN_COLUMNS = ['k', 'genus', 'boundary', 'identity_verified', 'dilatation', 'runtime_ms']


def to_json(payload):
    """Serialize a payload to text; key order is insertion order, so output is byte-stable."""
    return orjson.dumps(payload, option=JSON_OPTIONS).decode("utf-8")


def matrix_payload(m):
    return {"n": m.n, "rows": [to_decimal_strings(row) for row in m.rows()]}


def poly_payload(poly):
    return {"coeffs": to_decimal_strings(poly.coeffs)}


def label_sequence_payload(seq):
    return seq.to_list()


def graph_payload(k, graph):
    return {"k": k, "adjacency": [list(row) for row in graph.adjacency]}


def graph_dot(graph, name="G"):
    """
    Undirected DOT text with vertices "1".."n" in order, then edges v -- w with v < w.
    """
    lines = [f"graph {name} {{"]
    for v in range(1, graph.n + 1):
        lines.append(f'  "{v}";')
    for v, w in graph.edges():
        lines.append(f'  "{v}" -- "{w}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def topology_payload(report):
    return {
        "k": report.k,
        "euler": report.euler_characteristic,
        "boundary": report.boundary_components,
        "orientable": report.orientable,
        "genus": report.genus,
    }


def spectral_payload(report):
    """SpectralReport as a JSON-ready dict; exact integers travel as decimal strings."""
    return {
        "k": report.k,
        "char_poly": to_decimal_strings(report.char_poly.coeffs),
        "expected_char_poly": to_decimal_strings(report.expected_char_poly.coeffs),
        "identity_verified": report.identity_verified,
        "blocks": [list(block) for block in report.blocks.blocks],
        "sink": list(report.sink_block),
        "sink_matrix": [to_decimal_strings(row) for row in report.sink_restriction.rows()],
        "sink_char_poly": to_decimal_strings(report.sink_char_poly.coeffs),
        "dilatation": report.dilatation,
        "entropy": report.entropy,
        "sink_determinant": report.sink_determinant,
        "block_product_verified": report.block_product_verified,
        "failures": list(report.failures),
    }


def word_payload(k, word, matrix, poly):
    return {
        "k": k,
        "word": str(word),
        "matrix": matrix_payload(matrix),
        "char_poly": poly_payload(poly),
    }


def scan_frame(rows):
    """
    Tabulate scan rows.

    Parameters:
    - rows: List of ScanRow, already sorted by k

    Returns:
    - DataFrame with the SCAN_COLUMNS, one row per k
    """
    records = [{column: getattr(row, column) for column in SCAN_COLUMNS} for row in rows]
    return pd.DataFrame(records, columns=SCAN_COLUMNS)


def scan_csv(rows):
    return scan_frame(rows).to_csv(index=False, lineterminator="\n")


def scan_json(rows):
    return to_json(scan_frame(rows).to_dict(orient="records"))
