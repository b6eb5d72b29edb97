# -*- coding: utf-8 -*-
"""
Package-wide defaults. Operations take explicit keyword arguments for their
caps; these constants are only the defaults.
"""
import os
import logging

__all__ = ['DEFAULT_MAX_BITS',
           'MAX_BITS_ENV',
           'CODEBOOK_SCAN_CAP',
           'SEARCH_NODE_CAP',
           'SURVEY_GROUP_CAP',
           'JSON_SAFE_INT',
           'max_bits']

# every exact value must stay strictly below 2**max_bits() in magnitude
DEFAULT_MAX_BITS = 127
# may lower the bound for testing, never raise it
MAX_BITS_ENV = 'LIMAG_MAX_BITS'

# words of sigma**n scanned by extract_codebook
CODEBOOK_SCAN_CAP = 2 ** 24
# backtracking nodes per search_bh call
SEARCH_NODE_CAP = 2 ** 20
# largest group order the survey will search
SURVEY_GROUP_CAP = 4096

# larger magnitudes are serialized as decimal strings
JSON_SAFE_INT = 2 ** 53


def max_bits():
  """Returns the active magnitude bound, in bits.

  Reads LIMAG_MAX_BITS on every call. Values that are not integers, are
  below 2 or above DEFAULT_MAX_BITS are ignored.
  """
  raw = os.environ.get(MAX_BITS_ENV)
  if not raw:
    return DEFAULT_MAX_BITS

  try:
    bits = int(raw)
  except ValueError:
    logging.warning('Ignoring non-integer %s=%r', MAX_BITS_ENV, raw)
    return DEFAULT_MAX_BITS

  if bits < 2 or bits > DEFAULT_MAX_BITS:
    logging.warning('Ignoring %s=%d (allowed range 2..%d)',
                    MAX_BITS_ENV, bits, DEFAULT_MAX_BITS)
    return DEFAULT_MAX_BITS
  return bits
