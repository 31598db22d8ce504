from .codefile import (
    CodeFileError,
    format_code_file,
    format_dimacs,
    load_code,
    parse_code_file,
    read_code_file,
    write_code_file,
)
from .mapping import (
    CliqueGraphOrder,
    cl_map,
    cl_values,
    classical_error_data,
    clique_graph_order,
    clique_instance,
    parity,
)
from .verify import build_code, export_standard_form, verify_code

__all__ = [
    "CliqueGraphOrder",
    "CodeFileError",
    "build_code",
    "cl_map",
    "cl_values",
    "classical_error_data",
    "clique_graph_order",
    "clique_instance",
    "export_standard_form",
    "format_code_file",
    "format_dimacs",
    "load_code",
    "parse_code_file",
    "parity",
    "read_code_file",
    "verify_code",
    "write_code_file",
]
