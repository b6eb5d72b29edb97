# -*- coding: utf-8 -*-
"""
File formats: JSON documents for sequences, lattices, verdicts, decode
results and channel reports, run manifests, and the CSV survey table.

Every document is checked against a JSON Schema shipped in limag/schemas
when it is read and when it is written. Integers of magnitude 2**53 or more
are written as decimal strings; readers accept both spellings.
"""
import csv
import datetime
import functools
import hashlib
import json
import os
from collections import namedtuple

import jsonschema
from jsonschema.exceptions import best_match

from . import __version__
from .config import JSON_SAFE_INT
from .errors import Error, FormatError
from .groups import AbelianGroup
from .lattice import LatticeCode
from .sequences import BhSequence
from .sphere import CodeParams

__all__ = ['RunManifest',
           'SCHEMA_DIR',
           'SCHEMAS',
           'SEQUENCE_SCHEMA',
           'LATTICE_SCHEMA',
           'VERDICT_SCHEMA',
           'DECODE_SCHEMA',
           'REPORT_SCHEMA',
           'EXISTENCE_SCHEMA',
           'PROPERTIES_SCHEMA',
           'SPHERE_SCHEMA',
           'NORMAL_FORM_SCHEMA',
           'DETERMINANT_SCHEMA',
           'CODEBOOK_SCHEMA',
           'CONDITION_SCHEMA',
           'MANIFEST_SCHEMA',
           'ARTIFACT_SCHEMA',
           'SURVEY_COLUMNS',
           'load_schema',
           'validate',
           'json_int',
           'canonical_json',
           'payload_digest',
           'make_manifest',
           'wrap_artifact',
           'unwrap_artifact',
           'load_document',
           'dump_document',
           'sequence_to_document',
           'sequence_from_document',
           'lattice_to_document',
           'lattice_from_document',
           'verdict_to_document',
           'decoded_to_document',
           'report_to_document',
           'existence_to_document',
           'witness_text',
           'write_survey_csv']


#
# schemas
#

SCHEMA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                          'schemas')

# schema names, one file each under SCHEMA_DIR
SEQUENCE_SCHEMA = 'sequence'
LATTICE_SCHEMA = 'lattice'
VERDICT_SCHEMA = 'verdict'
DECODE_SCHEMA = 'decode'
REPORT_SCHEMA = 'report'
EXISTENCE_SCHEMA = 'existence'
PROPERTIES_SCHEMA = 'properties'
SPHERE_SCHEMA = 'sphere'
NORMAL_FORM_SCHEMA = 'normal_form'
DETERMINANT_SCHEMA = 'determinant'
CODEBOOK_SCHEMA = 'codebook'
CONDITION_SCHEMA = 'condition'
MANIFEST_SCHEMA = 'manifest'
ARTIFACT_SCHEMA = 'artifact'

SCHEMAS = (SEQUENCE_SCHEMA, LATTICE_SCHEMA, VERDICT_SCHEMA, DECODE_SCHEMA,
           REPORT_SCHEMA, EXISTENCE_SCHEMA, PROPERTIES_SCHEMA, SPHERE_SCHEMA,
           NORMAL_FORM_SCHEMA, DETERMINANT_SCHEMA, CODEBOOK_SCHEMA,
           CONDITION_SCHEMA, MANIFEST_SCHEMA, ARTIFACT_SCHEMA)

SURVEY_COLUMNS = ('n', 't', 'ell', 'status', 'witness')


@functools.lru_cache(maxsize=None)
def load_schema(name):
  """The parsed JSON Schema called name."""
  if name not in SCHEMAS:
    raise FormatError('unknown schema %r' % (name,))
  with open(os.path.join(SCHEMA_DIR, name + '.json'), encoding='utf-8') as fp:
    return json.load(fp)


@functools.lru_cache(maxsize=None)
def _validator(name):
  return jsonschema.Draft7Validator(load_schema(name))


def _json_path(base, parts):
  for part in parts:
    base += '[%d]' % part if isinstance(part, int) else '.%s' % part
  return base


def validate(doc, schema, path='$'):
  """Checks doc against the named schema.

  Raises:
    FormatError located at the JSON path of the most relevant violation.
  """
  error = best_match(_validator(schema).iter_errors(doc))
  if error is not None:
    raise FormatError(error.message, _json_path(path, error.absolute_path))
  return doc


def _parse_int(value, path):
  if isinstance(value, bool):
    raise FormatError('expected an integer, got %r' % (value,), path)
  if isinstance(value, int):
    return value
  if isinstance(value, str):
    try:
      return int(value, 10)
    except ValueError:
      pass
  raise FormatError('expected an integer, got %r' % (value,), path)


def json_int(x):
  return x if abs(x) < JSON_SAFE_INT else str(x)


def _ints(values, path):
  return [_parse_int(v, '%s[%d]' % (path, i)) for i, v in enumerate(values)]


#
# manifests and files
#

RunManifest = namedtuple('RunManifest', [
  'command', 'parameters', 'version', 'schema', 'seed', 'timestamp',
  'payload_sha256'])


def canonical_json(data):
  return json.dumps(data, sort_keys=True, separators=(',', ':'))


def payload_digest(data):
  return hashlib.sha256(canonical_json(data).encode('utf-8')).hexdigest()


def _param(v):
  if isinstance(v, int) and not isinstance(v, bool):
    return json_int(v)
  return v


def make_manifest(command, parameters, data, seed=None, schema=None):
  """Manifest for a data payload. The timestamp is outside the digest.

  schema names the schema data conforms to, if any.
  """
  now = datetime.datetime.now(datetime.timezone.utc)
  params = dict((k, _param(v)) for k, v in parameters.items())
  manifest = RunManifest(command, params, __version__, schema,
                         None if seed is None else json_int(seed),
                         now.strftime('%Y-%m-%dT%H:%M:%SZ'),
                         payload_digest(data))
  validate(dict(manifest._asdict()), MANIFEST_SCHEMA)
  return manifest


def wrap_artifact(manifest, data):
  return validate({'manifest': dict(manifest._asdict()), 'data': data},
                  ARTIFACT_SCHEMA)


def unwrap_artifact(doc):
  """The data of a wrapped artifact, checked against its digest and its
  declared schema, or doc itself when it is a bare document.
  """
  if not (isinstance(doc, dict) and set(doc) == set(['manifest', 'data'])):
    return doc
  validate(doc, ARTIFACT_SCHEMA)
  manifest = validate(doc['manifest'], MANIFEST_SCHEMA, '$.manifest')
  if manifest['payload_sha256'] != payload_digest(doc['data']):
    raise FormatError('payload digest mismatch', '$.manifest.payload_sha256')
  if manifest['schema'] is not None:
    validate(doc['data'], manifest['schema'], '$.data')
  return doc['data']


def load_document(fp, name=None):
  """Parses JSON from an open file and unwraps a manifest if there is one.

  Raises:
    FormatError with a 'name:line:column' location on a syntax error.
  """
  name = name or getattr(fp, 'name', '<input>')
  try:
    doc = json.load(fp)
  except ValueError as e:
    location = '%s:%d:%d' % (name, getattr(e, 'lineno', 0),
                             getattr(e, 'colno', 0))
    raise FormatError('invalid JSON: %s' % getattr(e, 'msg', e), location)
  return unwrap_artifact(doc)


def dump_document(doc, fp):
  json.dump(doc, fp, indent=2, sort_keys=True)
  fp.write('\n')


#
# documents
#

def sequence_to_document(seq):
  doc = {
    'group': {'factors': [json_int(d) for d in seq.group.factors]},
    'elements': [[json_int(c) for c in b] for b in seq.elements],
    't': seq.t,
    'ell': seq.ell,
  }
  return validate(doc, SEQUENCE_SCHEMA)


def sequence_from_document(doc):
  validate(doc, SEQUENCE_SCHEMA)
  try:
    group = AbelianGroup(_ints(doc['group']['factors'], '$.group.factors'))
    elements = [_ints(b, '$.elements[%d]' % i)
                for i, b in enumerate(doc['elements'])]
    return BhSequence(group, elements, _parse_int(doc['t'], '$.t'),
                      _parse_int(doc['ell'], '$.ell'))
  except FormatError:
    raise
  except Error as e:
    raise FormatError(str(e), '$')


def _params_document(p):
  return None if p is None else {'n': p.n, 't': p.t, 'ell': p.ell}


def _params_from(doc, path):
  if doc is None:
    return None
  return CodeParams(*[_parse_int(doc[k], '%s.%s' % (path, k))
                      for k in ('n', 't', 'ell')])


def lattice_to_document(L):
  doc = {
    'generator': [[json_int(x) for x in row] for row in L.generator],
    'params': _params_document(L.params),
    'volume': json_int(L.volume),
  }
  return validate(doc, LATTICE_SCHEMA)


def lattice_from_document(doc):
  validate(doc, LATTICE_SCHEMA)
  try:
    rows = [_ints(row, '$.generator[%d]' % i)
            for i, row in enumerate(doc['generator'])]
    L = LatticeCode(rows, _params_from(doc.get('params'), '$.params'))
  except FormatError:
    raise
  except Error as e:
    raise FormatError(str(e), '$')
  if doc.get('volume') is not None:
    if _parse_int(doc['volume'], '$.volume') != L.volume:
      raise FormatError('volume %s, generator has %d'
                        % (doc['volume'], L.volume), '$.volume')
  return L


def verdict_to_document(verdict, witness=None, params=None):
  doc = {
    'verdict': verdict,
    'witness': None if witness is None else [list(e) for e in witness],
    'params': _params_document(params),
  }
  return validate(doc, VERDICT_SCHEMA)


def decoded_to_document(result):
  doc = {
    'ok': result.ok,
    'codeword': None if result.codeword is None else list(result.codeword),
    'error': None if result.error is None else list(result.error),
  }
  return validate(doc, DECODE_SCHEMA)


def report_to_document(report):
  doc = dict((k, json_int(v) if isinstance(v, int) else v)
             for k, v in report._asdict().items())
  return validate(doc, REPORT_SCHEMA)


def witness_text(verdict):
  """CSV-friendly rendering of an ExistenceVerdict witness (no commas)."""
  w = verdict.witness
  if isinstance(w, BhSequence):
    if w.group.is_cyclic:
      elements = ' '.join(str(b[0]) if b else '0' for b in w.elements)
    else:
      elements = ' '.join('(%s)' % ' '.join(str(c) for c in b)
                          for b in w.elements)
    return '%s: %s' % (w.group, elements)
  parts = []
  if w is not None:
    parts.append('alpha tried %s' % ' '.join(str(a) for a in w))
  if verdict.note:
    parts.append(verdict.note)
  return '; '.join(parts)


def existence_to_document(verdicts):
  cells = []
  for v in verdicts:
    cells.append({'n': v.params.n, 't': v.params.t, 'ell': v.params.ell,
                  'status': v.status, 'witness': witness_text(v) or None})
  return validate({'cells': cells}, EXISTENCE_SCHEMA)


def write_survey_csv(verdicts, fp):
  """Writes the n,t,ell,status,witness table, one row per verdict."""
  writer = csv.writer(fp, lineterminator='\n')
  writer.writerow(SURVEY_COLUMNS)
  for v in verdicts:
    writer.writerow([v.params.n, v.params.t, v.params.ell, v.status,
                     witness_text(v)])
