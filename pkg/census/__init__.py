"""
The census and family datasets and the harness that verifies them.
"""

from .loader import (CensusRow, DatasetCorrupt, FamilyRow, census_row,
                     complexity_bound, complexity_of, family_by_primary,
                     file_checksum, is_census_name, load_census, load_checksums,
                     load_families, verify_checksum)
from .verify import (CF_ERRATA, CensusReport, FamilyReport, RowReport,
                     check_knot_complement, verify_all, verify_families,
                     verify_family, verify_row)

__all__ = [
    'CensusRow', 'DatasetCorrupt', 'FamilyRow', 'census_row',
    'complexity_bound', 'complexity_of', 'family_by_primary',
    'file_checksum', 'is_census_name', 'load_census', 'load_checksums',
    'load_families', 'verify_checksum', 'CF_ERRATA', 'CensusReport',
    'FamilyReport', 'RowReport', 'check_knot_complement', 'verify_all',
    'verify_families', 'verify_family', 'verify_row',
]
