# -*- coding: utf-8 -*-
"""
Command line front end of specocc.

Usage::

    specocc generate --seed 0 --bands 3,9 --out synth
    specocc attribute --dataset synth/synthetic.txt --model synth/model.json \\
        --seed 0 --out attributions
    specocc evaluate --dataset synth/synthetic.txt --model synth/model.json \\
        --seed 0 --methods frequency,random --deletion-space frequency \\
        --out evaluation
    specocc report --input evaluation --out figures

Every command writes a manifest first and a ``SUCCESS`` marker last in its
output directory. Exit codes: 0 success, 1 unexpected failure, 2
configuration error, 3 I/O or file format error, 4 numeric error, 5
incomplete result grid.
"""
import argparse
import json
import logging
import os
import sys

import numpy as np
import pandas as pd

from specocc.api.errors import DimensionError
from specocc.api.errors import EXIT_FAILURE
from specocc.api.errors import EXIT_OK
from specocc.api.errors import IncompleteGridError
from specocc.api.errors import MissingPathError
from specocc.api.errors import NothingToPlotError
from specocc.api.errors import SpecoccError
from specocc.attribution.config import MaskPolicy
from specocc.attribution.config import OcclusionConfig
from specocc.attribution.frequency import optimize_signal
from specocc.attribution.frequency import signal_change
from specocc.attribution.maps import AttributionMap
from specocc.attribution.maps import FREQUENCY
from specocc.attribution.maps import METHODS
from specocc.attribution.maps import normalize
from specocc.attribution.maps import normalize_scores
from specocc.attribution.maps import save_map
from specocc.backend.pool import WorkerPool
from specocc.backend.pool import make_requests
from specocc.backend.workers import request_data
from specocc.data.config import RunConfig
from specocc.data.dataset import Dataset
from specocc.data.dataset import FORMATS
from specocc.data.dataset import load_dataset
from specocc.data.dataset import save_dataset
from specocc.data.dataset import subsample
from specocc.data.synthetic import SyntheticSpec
from specocc.data.synthetic import parse_bands
from specocc.metrics.evaluation import DELETION_SPACES
from specocc.metrics.ranking import average_rank_table
from specocc.metrics.report import MetricReport
from specocc.metrics.report import curves_to_frame
from specocc.metrics.report import mean_curves
from specocc.metrics.report import read_frame
from specocc.metrics.report import reports_to_frame
from specocc.metrics.report import summarize
from specocc.metrics.report import write_frame
from specocc.metrics.similarity import MEASURES
from specocc.models.spec import ModelSpec
from specocc.models.spec import load_model
from specocc.models.spec import save_model
from specocc.tools import svg
from specocc.tools.manifest import mark_success
from specocc.tools.manifest import prepare_output
from specocc.tools.manifest import read_manifest


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


VERBS = ('attribute', 'optimize', 'evaluate', 'compare', 'report',
         'generate')

REPORT_FILE = 'report.csv'
CURVES_FILE = 'curves.csv'
SIMILARITY_FILE = 'similarity.csv'
ATTRIBUTIONS_DIR = 'attributions'
FIGURES_DIR = 'figures'


def _common_parser():
    """
    Flags shared by every verb. Defaults are None so that the values of a
    ``--config`` document are only overridden by explicit flags.
    """
    parser = argparse.ArgumentParser(add_help=False)
    add = parser.add_argument
    add('--config', help='json run configuration document')
    add('--dataset', action='append',
        help='dataset file (repeat for several datasets)')
    add('--format', choices=FORMATS, help='dataset file format')
    add('--model', help='json model document')
    add('--methods', help='comma separated methods among %s' %
        ','.join(METHODS))
    add('--window', type=int, help='occlusion window (default: 1)')
    add('--stride', type=int, help='occlusion stride (default: window)')
    add('--baseline', choices=OcclusionConfig.BASELINES,
        help='fill of occluded time steps (default: zero)')
    add('--mask', help='mask policy: soft, all, topk:K or threshold:T')
    add('--metrics', help='comma separated metrics (default: all)')
    add('--sigma', type=float, help='infidelity noise, relative to the '
        'channel standard deviation (default: 0.1)')
    add('--n-perturb', type=int, help='Monte Carlo draws (default: 16)')
    add('--radius', type=float, help='sensitivity radius (default: 0.05)')
    add('--steps', type=int, help='deletion steps, 0 for one step per '
        'unit (default: 50)')
    add('--deletion-space', choices=DELETION_SPACES,
        help='deletion space (default: input)')
    add('--samples', type=int, help='samples drawn per dataset '
        '(default: 100)')
    add('--seed', type=int, help='random seed (mandatory)')
    add('--out', help='output directory')
    add('--workers', type=int, help='worker processes (default: cores)')
    add('--znorm', action='store_true', default=None,
        help='z-normalize the samples')
    add('--input', help='result directory to report (default: --out)')
    add('--synthetic', help='json synthetic spec document')
    add('--bands', help='synthetic bands, one per class (e.g. 3,9)')
    add('--length', type=int, help='synthetic series length')
    add('--channels', type=int, help='synthetic channel count')
    add('--count', type=int, help='synthetic sample count')
    add('--noise', type=float, help='synthetic noise std')
    add('--amplitude', type=float, help='synthetic sinusoid amplitude')
    add('-v', '--verbose', action='count', default=0,
        help='increase verbosity (repeat up to 3 times)')
    return parser


def default_parser():
    """
    Configures and returns the argument parser of the specocc command.
    """
    parser = argparse.ArgumentParser(
        prog='specocc', description='Occlusion attribution of time series '
        'classifiers in the input and in the frequency space.')
    verbs = parser.add_subparsers(dest='verb', metavar='verb')
    verbs.required = True
    common = _common_parser()
    helps = {
        'attribute': 'compute the attribution maps of every sample',
        'optimize': 'remove the irrelevant frequencies of every sample',
        'evaluate': 'compute the metrics of every method',
        'compare': 'optimize every sample toward every class',
        'report': 'render the figures of a result directory',
        'generate': 'generate a synthetic dataset and its model'}
    for verb in VERBS:
        verbs.add_parser(verb, parents=[common], help=helps[verb])
    return parser


def setup_logging(verbosity):
    levels = [logging.WARNING, logging.INFO, logging.DEBUG, 5]
    logging.basicConfig(
        level=levels[min(verbosity, len(levels) - 1)],
        format='%(levelname)s %(name)s: %(message)s')


def _load_inputs(cfg):
    oracle = load_model(cfg.model)
    datasets = []
    for path in cfg.dataset:
        ds = load_dataset(path, cfg.format, znorm=cfg.znorm)
        if (ds.length, ds.channels) != (oracle.expected_length,
                                        oracle.expected_channels):
            raise DimensionError(
                (oracle.expected_length, oracle.expected_channels),
                (ds.length, ds.channels))
        if len(ds) > cfg.samples:
            ds = subsample(ds, int(cfg.samples), cfg.seed)
        datasets.append(ds)
    return oracle, ModelSpec.from_oracle(oracle), datasets


def _run(cfg, oracle, worker, datas):
    pool = WorkerPool(cfg.workers)
    responses = pool.run(make_requests(worker, datas), oracle)
    return [response['results'] for response in responses]


def _requests(cfg, spec, ds, **extra):
    return [request_data(spec, x, sample_id, label, ds.name, cfg.occlusion(),
                         cfg.mask_policy(), **extra)
            for sample_id, x, label in ds]


def cmd_attribute(cfg):
    """
    Writes one attribution map document per (sample, method).
    """
    cfg.validate()
    oracle, spec, datasets = _load_inputs(cfg)
    prepare_output(cfg.out, 'attribute', cfg.to_dict())
    directory = os.path.join(cfg.out, ATTRIBUTIONS_DIR)
    if not os.path.isdir(directory):
        os.makedirs(directory)
    count = 0
    for ds in datasets:
        datas = _requests(cfg, spec, ds, methods=cfg.methods, seed=cfg.seed)
        for data, results in zip(datas, _run(
                cfg, oracle, 'specocc.backend.workers.attribute_worker',
                datas)):
            for document in results['maps']:
                amap = AttributionMap.from_dict(document)
                name = '%s_%06d_%s.json' % (ds.name, data['sample_id'],
                                            amap.method)
                save_map(amap, os.path.join(directory, name),
                         sample_id=data['sample_id'], dataset=ds.name)
                count += 1
    _logger().info('%d maps written, %d forward passes', count,
                   oracle.forward_pass_count)
    mark_success(cfg.out)


def cmd_optimize(cfg):
    """
    Writes the optimized version of every dataset.
    """
    cfg.validate()
    oracle, spec, datasets = _load_inputs(cfg)
    prepare_output(cfg.out, 'optimize', cfg.to_dict())
    for ds in datasets:
        results = _run(cfg, oracle, 'specocc.backend.workers.optimize_worker',
                       _requests(cfg, spec, ds))
        optimized = Dataset([r['optimized'] for r in results], ds.labels,
                            ds.name, ds.split, ids=ds.ids,
                            label_names=ds.label_names)
        save_dataset(optimized, os.path.join(
            cfg.out, '%s_optimized.txt' % ds.name))
        write_frame(pd.DataFrame({
            'sample_id': ds.ids, 'label': ds.labels,
            'target_class': [r['target_class'] for r in results],
            'change': [r['change'] for r in results]}),
            os.path.join(cfg.out, '%s_optimized.csv' % ds.name))
    mark_success(cfg.out)


def cmd_evaluate(cfg):
    """
    Writes the metric report, the deletion curves, the per-method means,
    the model accuracy and the average ranks.
    """
    cfg.validate(evaluation=True)
    settings = cfg.evaluation()
    oracle, spec, datasets = _load_inputs(cfg)
    prepare_output(cfg.out, 'evaluate', cfg.to_dict())
    reports = []
    accuracy = []
    for ds in datasets:
        results = _run(cfg, oracle, 'specocc.backend.workers.evaluate_worker',
                       _requests(cfg, spec, ds, methods=cfg.methods,
                                 settings=settings.to_dict()))
        for result in results:
            reports.extend(MetricReport.from_dict(document)
                           for document in result['reports'])
        predicted = np.array([result['predicted'] for result in results])
        accuracy.append({'dataset': ds.name, 'samples': len(ds),
                         'accuracy': float(np.mean(predicted == ds.labels))})
    present = set((r.dataset, r.method) for r in reports)
    missing = [(ds.name, m) for ds in datasets for m in cfg.methods
               if (ds.name, m) not in present]
    if missing:
        raise IncompleteGridError(missing)
    frame = reports_to_frame(reports)
    write_frame(frame, os.path.join(cfg.out, REPORT_FILE))
    write_frame(curves_to_frame(reports), os.path.join(cfg.out, CURVES_FILE))
    write_frame(summarize(frame), os.path.join(cfg.out, 'summary.csv'))
    write_frame(pd.DataFrame(accuracy, columns=['dataset', 'samples',
                                                'accuracy']),
                os.path.join(cfg.out, 'accuracy.csv'))
    write_frame(average_rank_table(frame).reset_index(),
                os.path.join(cfg.out, 'ranks.csv'))
    _logger().info('%d reports, %d forward passes', len(reports),
                   oracle.forward_pass_count)
    mark_success(cfg.out)


def cmd_compare(cfg):
    """
    Writes the class similarity rows of every sample and their means per
    (true class, target class).
    """
    cfg.validate()
    oracle, spec, datasets = _load_inputs(cfg)
    prepare_output(cfg.out, 'compare', cfg.to_dict())
    rows = []
    for ds in datasets:
        for result in _run(cfg, oracle,
                           'specocc.backend.workers.similarity_worker',
                           _requests(cfg, spec, ds)):
            rows.extend(result['rows'])
    columns = ['dataset', 'sample_id', 'true_class', 'target_class'] + \
        list(MEASURES)
    frame = pd.DataFrame(rows, columns=columns)
    write_frame(frame, os.path.join(cfg.out, SIMILARITY_FILE))
    means = frame.groupby(['dataset', 'true_class', 'target_class'],
                          sort=True)[list(MEASURES)].mean().reset_index()
    write_frame(means, os.path.join(cfg.out, 'similarity_summary.csv'))
    mark_success(cfg.out)


def _emit(directory, name, document, frame):
    svg.write_svg(document, os.path.join(directory, name + '.svg'))
    write_frame(frame, os.path.join(directory, name + '.csv'))


def _report_curves(source, figures):
    path = os.path.join(source, CURVES_FILE)
    if not os.path.isfile(path):
        return
    curves = mean_curves(read_frame(path))
    for dataset, group in curves.groupby('dataset', sort=True):
        series = [(method, list(g['fraction']), list(g['score']))
                  for method, g in group.groupby('method', sort=True)]
        _emit(figures, 'deletion_%s' % dataset, svg.line_chart_svg(
            'Deletion curves (%s)' % dataset, series, 'deleted fraction',
            'target class score'), group)


def _report_metrics(frame, figures):
    for metric, group in frame.groupby('metric', sort=True):
        means = group.groupby('method', sort=True)['value'].mean()
        _emit(figures, 'metric_%s' % metric, svg.bar_chart_svg(
            metric, list(means.index), list(means.values), metric),
            means.reset_index())


def _report_overlays(cfg, source, config, figures):
    directory = os.path.join(source, ATTRIBUTIONS_DIR)
    if not os.path.isdir(directory):
        return
    paths = cfg.dataset or config.get('dataset') or []
    datasets = {}
    for path in paths:
        ds = load_dataset(path, config.get('format', cfg.format),
                          znorm=config.get('znorm', cfg.znorm))
        datasets[ds.name] = ds
    mask = MaskPolicy.parse(str(config.get('mask', cfg.mask)))
    for name in sorted(os.listdir(directory)):
        with open(os.path.join(directory, name), 'r') as f:
            document = json.load(f)
        ds = datasets.get(document.get('dataset'))
        if ds is None:
            _logger().warning('%s: dataset not available, no overlay', name)
            continue
        x = ds.samples[ds.ids.index(document['sample_id'])]
        amap = AttributionMap.from_dict(document)
        if amap.domain == FREQUENCY:
            shape = optimize_signal(x, normalize(amap), mask)
            intensity = normalize_scores(signal_change(x, shape))
            title = 'Signal change (%s)' % name
        else:
            shape = x
            intensity = normalize_scores(amap.scores)
            title = 'Attribution (%s)' % name
        stem = 'overlay_' + os.path.splitext(name)[0]
        _emit(figures, stem, svg.heat_strip_svg(
            title, shape.channel(0), intensity[:, 0]), pd.DataFrame({
                'step': np.arange(x.length), 'value': shape.channel(0),
                'intensity': intensity[:, 0]}))


def _report_similarity(source, figures):
    path = os.path.join(source, SIMILARITY_FILE)
    if not os.path.isfile(path):
        return
    frame = read_frame(path)
    for dataset, group in frame.groupby('dataset', sort=True):
        for measure in MEASURES:
            table = group.pivot_table(index='true_class',
                                      columns='target_class', values=measure,
                                      aggfunc='mean')
            _emit(figures, 'similarity_%s_%s' % (dataset, measure),
                  svg.matrix_svg('%s (%s)' % (measure, dataset),
                                 list(table.index), list(table.columns),
                                 table.values, 'target class', 'true class'),
                  table.reset_index())


def cmd_report(cfg):
    """
    Renders the figures of a result directory as svg documents, each next
    to the csv it was drawn from.
    """
    source = cfg.input or cfg.out
    path = os.path.join(source, REPORT_FILE)
    has_similarity = os.path.isfile(os.path.join(source, SIMILARITY_FILE))
    has_maps = os.path.isdir(os.path.join(source, ATTRIBUTIONS_DIR))
    if not os.path.isfile(path) and not (has_similarity or has_maps):
        raise MissingPathError(path, 'report')
    frame = read_frame(path) if os.path.isfile(path) else None
    if frame is not None and frame.empty:
        raise NothingToPlotError('%s has no rows' % path)
    # the source manifest is replaced when reporting in place
    config = (read_manifest(source) or {}).get('config', {})
    prepare_output(cfg.out, 'report', cfg.to_dict())
    figures = os.path.join(cfg.out, FIGURES_DIR)
    if not os.path.isdir(figures):
        os.makedirs(figures)
    if frame is not None:
        _report_curves(source, figures)
        _report_metrics(frame, figures)
    _report_overlays(cfg, source, config, figures)
    _report_similarity(source, figures)
    mark_success(cfg.out)


def cmd_generate(cfg):
    """
    Writes a synthetic dataset, the model that classifies it and its spec.
    """
    cfg.validate(paths=())
    if cfg.synthetic:
        if not os.path.isfile(cfg.synthetic):
            raise MissingPathError(cfg.synthetic, 'synthetic spec')
        document = SyntheticSpec.load(cfg.synthetic).to_dict()
        document['seed'] = cfg.seed
        spec = SyntheticSpec.from_dict(document)
    else:
        spec = SyntheticSpec(parse_bands(cfg.bands), cfg.length, cfg.channels,
                             cfg.count, cfg.noise, cfg.seed, cfg.amplitude)
    prepare_output(cfg.out, 'generate', cfg.to_dict())
    dataset, model = spec.generate()
    save_dataset(dataset, os.path.join(cfg.out, '%s.txt' % spec.name))
    save_model(model, os.path.join(cfg.out, 'model.json'))
    spec.save(os.path.join(cfg.out, 'synthetic_spec.json'))
    mark_success(cfg.out)


COMMANDS = {
    'attribute': cmd_attribute,
    'optimize': cmd_optimize,
    'evaluate': cmd_evaluate,
    'compare': cmd_compare,
    'report': cmd_report,
    'generate': cmd_generate,
}


def main(argv=None):
    """
    specocc main function.

    :param argv: command line arguments (default: ``sys.argv[1:]``)
    :returns: the process exit code
    """
    args = default_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        cfg = RunConfig.from_args(args)
        COMMANDS[args.verb](cfg)
    except SpecoccError as e:
        _logger().debug('%s failed', args.verb, exc_info=True)
        sys.stderr.write('specocc %s: error: %s\n' % (args.verb, e))
        return e.exit_code
    except Exception:
        _logger().exception('%s: unexpected failure', args.verb)
        return EXIT_FAILURE
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
