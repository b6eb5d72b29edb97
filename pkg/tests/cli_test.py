# -*- coding: utf-8 -*-
import contextlib
import io
import json
import os
import shutil
import tempfile
import unittest

from tests import TestMixin

import limag
from limag.cli import COMMANDS, EXIT_ERROR, EXIT_OK, EXIT_REFUTED, main
from limag.formats import (ARTIFACT_SCHEMA, MANIFEST_SCHEMA, payload_digest,
                           unwrap_artifact, validate)


class CommandTestCase(TestMixin, unittest.TestCase):

  def setUp(self):
    super(CommandTestCase, self).setUp()
    self.tmp = tempfile.mkdtemp()

  def tearDown(self):
    shutil.rmtree(self.tmp)
    super(CommandTestCase, self).tearDown()

  def path(self, name):
    return os.path.join(self.tmp, name)

  def run_cli(self, *argv):
    """Returns (exit status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
      code = main(list(argv))
    return code, out.getvalue(), err.getvalue()

  def run_json(self, *argv):
    code, out, _err = self.run_cli(*argv)
    artifact = json.loads(out)
    return code, unwrap_artifact(artifact), artifact['manifest']

  def write_json(self, name, doc):
    with open(self.path(name), 'w') as fp:
      json.dump(doc, fp)
    return self.path(name)

  def construct(self, n=3, ell=1, name='seq.json'):
    code, _out, _err = self.run_cli('construct', '--n', str(n), '--ell',
                                    str(ell), '--out', self.path(name))
    self.assertEqual(code, EXIT_OK)
    return self.path(name)


class ConstructTestCase(CommandTestCase):

  def test_perfect(self):
    code, data, manifest = self.run_json('construct', '--n', '3', '--ell', '1')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data, {'group': {'factors': [7]},
                            'elements': [[1], [2], [4]], 't': 2, 'ell': 1})
    self.assertEqual(manifest['command'], 'construct')
    self.assertEqual(manifest['parameters'],
                     {'kind': 'perfect', 'n': 3, 'ell': 1})
    self.assertEqual(manifest['version'], limag.__version__)
    self.assertIsNone(manifest['seed'])

    code, data, _ = self.run_json('construct', '--n', '2', '--ell', '2')
    self.assertEqual(data['group'], {'factors': [5]})
    self.assertEqual(data['elements'], [[1], [4]])

  def test_other_kinds(self):
    code, data, _ = self.run_json('construct', '--n', '2', '--ell', '1',
                                  '--kind', 'cube')
    self.assertEqual(data['group']['factors'], [2, 2])
    code, data, _ = self.run_json('construct', '--n', '5', '--kind',
                                  'repetition')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data['group']['factors'], [2, 2, 2, 2])
    self.assertEqual(data['t'], 2)

  def test_overflow(self):
    code, out, err = self.run_cli('construct', '--n', '200', '--ell', '9')
    self.assertEqual(code, EXIT_ERROR)
    self.assertEqual(out, '')
    self.assertIn('overflow', err)

  def test_usage(self):
    code, _out, err = self.run_cli('construct', '--n', '3')
    self.assertEqual(code, EXIT_ERROR)
    self.assertIn('--ell', err)
    code, _out, _err = self.run_cli('construct', '--n', '4', '--kind',
                                    'repetition')
    self.assertEqual(code, EXIT_ERROR)


class VerifyTestCase(CommandTestCase):

  def test_perfect_sequence(self):
    code, data, _ = self.run_json('verify', self.construct())
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data, {'verdict': 'perfect', 'witness': None,
                            'params': {'n': 3, 't': 2, 'ell': 1}})

  def test_override_params(self):
    code, data, _ = self.run_json('verify', self.construct(), '--t', '1')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data['verdict'], 'bh')

  def test_collision(self):
    path = self.write_json('bad.json', {'group': {'factors': [3]},
                                        'elements': [[1], [1]], 't': 1,
                                        'ell': 1})
    code, data, _ = self.run_json('verify', path)
    self.assertEqual(code, EXIT_REFUTED)
    self.assertEqual(data['verdict'], 'not-bh')
    self.assertEqual(data['witness'], [[1, 0], [0, 1]])

  def test_lattice(self):
    path = self.write_json('lat.json', {'generator': [[1, 1], [0, 3]]})
    code, data, _ = self.run_json('verify', path, '--t', '1', '--ell', '1')
    self.assertEqual((code, data['verdict']), (EXIT_OK, 'perfect'))
    path = self.write_json('lat.json', {'generator': [[1, 0], [0, 1]]})
    code, data, _ = self.run_json('verify', path, '--t', '1', '--ell', '1')
    self.assertEqual((code, data['verdict']), (EXIT_REFUTED, 'not-packing'))
    code, _out, _err = self.run_cli('verify', path)
    self.assertEqual(code, EXIT_ERROR)

  def test_malformed_input(self):
    path = self.path('trunc.json')
    with open(path, 'w') as fp:
      fp.write('{"group": {"factors": [7]}, "elements": [[1], ')
    code, out, err = self.run_cli('verify', path)
    self.assertEqual(code, EXIT_ERROR)
    self.assertEqual(out, '')
    self.assertIn(path + ':1:', err)

    path = self.write_json('bad.json', {'group': {'factors': [7]},
                                        'elements': [[1], ['x']], 't': 1,
                                        'ell': 1})
    code, _out, err = self.run_cli('verify', path)
    self.assertEqual(code, EXIT_ERROR)
    self.assertIn('$.elements[1][0]', err)

  def test_missing_file(self):
    code, _out, _err = self.run_cli('verify', self.path('nothing.json'))
    self.assertEqual(code, EXIT_ERROR)


class ConvertTestCase(CommandTestCase):

  def test_round_trip(self):
    seq = self.construct()
    lattice = self.path('lat.json')
    code, _out, _err = self.run_cli('convert', '--to', 'lattice', seq,
                                    '--out', lattice)
    self.assertEqual(code, EXIT_OK)
    with open(lattice) as fp:
      doc = unwrap_artifact(json.load(fp))
    self.assertEqual(doc['generator'], [[1, 0, 5], [0, 1, 3], [0, 0, 7]])
    self.assertEqual(doc['volume'], 7)

    code, data, _ = self.run_json('convert', '--to', 'sequence', lattice)
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data['group'], {'factors': [7]})
    self.assertEqual((data['t'], data['ell']), (2, 1))

    back = self.write_json('back.json', data)
    code, data, _ = self.run_json('verify', back)
    self.assertEqual(data['verdict'], 'perfect')

  def test_wrong_direction(self):
    code, _out, _err = self.run_cli('convert', '--to', 'sequence',
                                    self.construct())
    self.assertEqual(code, EXIT_ERROR)

  def test_non_generating_sequence_warns(self):
    path = self.write_json('sub.json', {'group': {'factors': [8]},
                                        'elements': [[2], [4]], 't': 1,
                                        'ell': 1})
    with self.assertLogs(level='WARNING') as logs:
      code, out, _err = self.run_cli('convert', '--to', 'lattice', path)
    self.assertEqual(code, EXIT_OK)
    self.assertIn('do not generate', logs.output[0])
    self.assertEqual(unwrap_artifact(json.loads(out))['volume'], 4)


class CodecCommandsTestCase(CommandTestCase):

  def test_decode(self):
    seq = self.construct()
    code, data, _ = self.run_json('decode', seq, '--word', '1,1,0')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data, {'ok': True, 'codeword': [0, 0, 0],
                            'error': [1, 1, 0]})
    # offset (0, 2, 0) has syndrome 4; 0 - 4 = 3 needs e = (1, 1, 0)
    code, data, _ = self.run_json('decode', seq, '--word', '0,0,0',
                                  '--offset', '0,2,0')
    self.assertEqual(code, EXIT_REFUTED)
    self.assertFalse(data['ok'])

  def test_codebook(self):
    code, data, _ = self.run_json('codebook', self.construct(), '--sigma', '3')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data['words'], [[0, 0, 0], [1, 1, 1], [2, 2, 2]])
    self.assertEqual(data['syndrome'], [0])

  def test_simulate(self):
    seq = self.construct()
    argv = ('simulate', seq, '--sigma', '3', '--seed', '42', '--trials',
            '500')
    code, data, manifest = self.run_json(*argv)
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data['trials'], 500)
    self.assertEqual(data['decode_successes'], 500)
    self.assertEqual(data['seed'], 42)
    self.assertEqual(manifest['seed'], 42)
    self.assertEqual(self.run_json(*argv)[1], data)

  def test_simulate_needs_seed(self):
    with contextlib.redirect_stderr(io.StringIO()):
      with self.assertRaises(SystemExit) as cm:
        main(['simulate', self.construct(), '--sigma', '3'])
    self.assertEqual(cm.exception.code, 2)


class SurveyTestCase(CommandTestCase):

  def test_stdout(self):
    code, out, _err = self.run_cli('survey', '--max-n', '4', '--max-ell', '1')
    self.assertEqual(code, EXIT_OK)
    lines = out.splitlines()
    self.assertEqual(lines[0], 'n,t,ell,status,witness')
    self.assertTrue(any(line.startswith('4,2,1,necessary-condition-fails')
                        for line in lines), out)

  def test_file_and_manifest(self):
    path = self.path('survey.csv')
    code, out, _err = self.run_cli('survey', '--max-n', '3', '--max-ell', '2',
                                   '--out', path)
    self.assertEqual((code, out), (EXIT_OK, ''))
    with open(path, newline='') as fp:
      text = fp.read()
    with open(path + '.manifest.json') as fp:
      manifest = json.load(fp)
    self.assertEqual(manifest['command'], 'survey')
    self.assertEqual(manifest['parameters']['max_ell'], 2)
    self.assertEqual(manifest['payload_sha256'], payload_digest(text))
    self.assertIn('3,1,2,necessary-condition-fails', text)


class SmallCommandsTestCase(CommandTestCase):

  def test_properties(self):
    code, data, _ = self.run_json('properties', '--n', '3', '--ell', '1')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data['modulus'], 7)
    self.assertEqual(data['x'], 2)
    self.assertEqual(data['order'], 3)
    self.assertTrue(data['p1'] and data['p2'] and data['p3'])

  def test_properties_wide_modulus(self):
    code, data, _ = self.run_json('properties', '--n', '40', '--ell', '3')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data['modulus'], str(4 ** 40 - 3 ** 40))
    self.assertIsNone(data['order'])

  def test_sphere(self):
    code, data, _ = self.run_json('sphere', '--n', '2', '--t', '1', '--ell',
                                  '1', '--list', '--contains', '1,1')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data['size'], 3)
    self.assertEqual(data['vectors'], [[0, 0], [0, 1], [1, 0]])
    self.assertFalse(data['contains'])

  def test_matrix(self):
    code, data, _ = self.run_json('matrix', '--rows', '2,0;0,3')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data['D'], [[1, 0], [0, 6]])
    code, data, _ = self.run_json('matrix', '--rows', '2,0;0,3', '--form',
                                  'det')
    self.assertEqual(data, {'det': 6})
    code, _out, _err = self.run_cli('matrix', '--rows', '1,2;2,4')
    self.assertEqual(code, EXIT_ERROR)

  def test_search(self):
    code, data, manifest = self.run_json('search', '--n', '3', '--t', '1',
                                         '--ell', '1')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(data['group'], {'factors': [4]})
    self.assertEqual(data['elements'], [[1], [2], [3]])
    self.assertEqual(manifest['parameters']['groups'], ['Z4', 'Z2 x Z2'])

    code, data, _ = self.run_json('search', '--n', '3', '--t', '1', '--ell',
                                  '2')
    self.assertEqual(code, EXIT_REFUTED)
    self.assertEqual(data['verdict'], 'none')

    code, data, _ = self.run_json('search', '--n', '3', '--t', '1', '--ell',
                                  '1', '--factors', '2,2')
    self.assertEqual(data['elements'], [[0, 1], [1, 0], [1, 1]])

  def test_nonexistence(self):
    code, data, _ = self.run_json('nonexistence', '--max-n', '10')
    self.assertEqual(code, EXIT_OK)
    self.assertEqual(len(data['cells']), 7)
    code, data, _ = self.run_json('nonexistence', '--n', '3')
    self.assertEqual((code, data['holds']), (EXIT_OK, True))
    code, data, _ = self.run_json('nonexistence', '--n', '4')
    self.assertEqual((code, data['holds']), (EXIT_REFUTED, False))


class OutputSchemaTestCase(CommandTestCase):

  def assertArtifact(self, text):
    artifact = validate(json.loads(text), ARTIFACT_SCHEMA)
    manifest = validate(artifact['manifest'], MANIFEST_SCHEMA)
    self.assertIsNotNone(manifest['schema'])
    validate(artifact['data'], manifest['schema'])
    return manifest

  def test_every_subcommand_output_matches_its_schema(self):
    seq = self.construct()
    lattice = self.path('lat.json')
    self.run_cli('convert', '--to', 'lattice', seq, '--out', lattice)
    invocations = [
      ('construct', '--n', '4', '--ell', '2'),
      ('construct', '--n', '5', '--kind', 'repetition'),
      ('verify', seq),
      ('verify', lattice),
      ('decode', seq, '--word', '1,1,0'),
      ('simulate', seq, '--sigma', '3', '--seed', '7', '--trials', '50'),
      ('convert', '--to', 'lattice', seq),
      ('convert', '--to', 'sequence', lattice),
      ('properties', '--n', '40', '--ell', '3'),
      ('sphere', '--n', '2', '--t', '1', '--ell', '2', '--list',
       '--contains', '1,0'),
      ('matrix', '--rows', '2,0;0,3'),
      ('matrix', '--rows', '2,0;0,3', '--form', 'hnf'),
      ('matrix', '--rows', '2,0;0,3', '--form', 'det'),
      ('search', '--n', '3', '--t', '1', '--ell', '1'),
      ('search', '--n', '3', '--t', '1', '--ell', '2'),
      ('codebook', seq, '--sigma', '3'),
      ('nonexistence', '--max-n', '8'),
      ('nonexistence', '--n', '4'),
    ]
    schemas = {}
    for argv in invocations:
      code, out, err = self.run_cli(*argv)
      self.assertIn(code, (EXIT_OK, EXIT_REFUTED), (argv, err))
      manifest = self.assertArtifact(out)
      self.assertEqual(manifest['command'], argv[0])
      schemas.setdefault(argv[0], set()).add(manifest['schema'])

    # survey writes CSV; only its sidecar manifest is JSON
    path = self.path('survey.csv')
    code, _out, _err = self.run_cli('survey', '--max-n', '3', '--max-ell',
                                    '1', '--out', path)
    self.assertEqual(code, EXIT_OK)
    with open(path + '.manifest.json') as fp:
      manifest = validate(json.load(fp), MANIFEST_SCHEMA)
    self.assertIsNone(manifest['schema'])
    schemas['survey'] = set([None])

    self.assertEqual(set(schemas), set(COMMANDS))
    self.assertEqual(schemas['matrix'], set(['normal_form', 'determinant']))
    self.assertEqual(schemas['search'], set(['sequence', 'verdict']))
    self.assertEqual(schemas['nonexistence'],
                     set(['existence', 'condition']))
    self.assertEqual(schemas['convert'], set(['lattice', 'sequence']))


class CommandCoverageTestCase(TestMixin, unittest.TestCase):

  def test_every_operation_exposed_once(self):
    names = [op for ops in COMMANDS.values() for op in ops]
    self.assertEqual(len(names), len(set(names)))
    for name in names:
      self.assertIn(name, limag.__all__)
      self.assertTrue(callable(getattr(limag, name)), name)

  def test_every_subcommand_registered(self):
    from limag.cli import build_parser
    parser = build_parser()
    for command in COMMANDS:
      with contextlib.redirect_stdout(io.StringIO()):
        with self.assertRaises(SystemExit) as cm:
          parser.parse_args([command, '--help'])
      self.assertEqual(cm.exception.code, 0)


if __name__ == '__main__':
  unittest.main()
