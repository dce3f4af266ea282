"""Python interface to the exact spherical Hecke algebra core."""

try:
    from ._satake import (  # type: ignore[attr-defined]
        BasedRootDatum,
        SatakeError,
        catalog,
        catalog_names,
        convolve_table,
        datum_from_json,
        datum_to_json,
        double_coset_basis,
        kostka_foulkes,
        m_element,
        run_acceptance,
        satake_count,
        satake_vector,
        structure_constants,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _satake import (
        BasedRootDatum,
        SatakeError,
        catalog,
        catalog_names,
        convolve_table,
        datum_from_json,
        datum_to_json,
        double_coset_basis,
        kostka_foulkes,
        m_element,
        run_acceptance,
        satake_count,
        satake_vector,
        structure_constants,
    )

__all__ = [
    "BasedRootDatum",
    "SatakeError",
    "catalog",
    "catalog_names",
    "convolve_table",
    "datum_from_json",
    "datum_to_json",
    "double_coset_basis",
    "kostka_foulkes",
    "m_element",
    "run_acceptance",
    "satake_count",
    "satake_vector",
    "structure_constants",
]
