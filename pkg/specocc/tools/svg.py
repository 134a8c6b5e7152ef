# -*- coding: utf-8 -*-
"""
This module contains the svg chart emitters of the report command.

Every function returns a standalone svg document as a string. Coordinates
are written with a fixed precision so a chart only depends on its data:
the same data always yields the same bytes.
"""
from xml.sax.saxutils import escape

import numpy as np

WIDTH = 640
HEIGHT = 360
MARGIN = 56

#: Series colors, cycled.
PALETTE = ('#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd',
           '#8c564b', '#e377c2', '#7f7f7f')


def _num(value):
    return '%.2f' % value


def _open(title, width=WIDTH, height=HEIGHT):
    return [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (width, height, width, height),
        '<title>%s</title>' % escape(title),
        '<rect x="0" y="0" width="%d" height="%d" fill="#ffffff"/>' % (
            width, height),
        '<text x="%s" y="24" text-anchor="middle" font-size="16">%s</text>'
        % (_num(width / 2.0), escape(title))]


def _close(parts):
    parts.append('</svg>')
    return '\n'.join(parts) + '\n'


def _scale(low, high, start, stop):
    """ Returns a function mapping [low, high] onto [start, stop] """
    span = (high - low) or 1.0

    def scale(value):
        return start + (value - low) * (stop - start) / span
    return scale


def _axes(parts, x_label, y_label, width=WIDTH, height=HEIGHT):
    parts.append('<line class="axis" x1="%d" y1="%d" x2="%d" y2="%d" '
                 'stroke="#000000"/>' % (MARGIN, height - MARGIN,
                                         width - MARGIN, height - MARGIN))
    parts.append('<line class="axis" x1="%d" y1="%d" x2="%d" y2="%d" '
                 'stroke="#000000"/>' % (MARGIN, MARGIN, MARGIN,
                                         height - MARGIN))
    if x_label:
        parts.append('<text x="%s" y="%d" text-anchor="middle" '
                     'font-size="12">%s</text>' % (
                         _num(width / 2.0), height - 16, escape(x_label)))
    if y_label:
        parts.append('<text x="16" y="%s" text-anchor="middle" '
                     'font-size="12" transform="rotate(-90 16 %s)">%s</text>'
                     % (_num(height / 2.0), _num(height / 2.0),
                        escape(y_label)))


def _tick(parts, x, y, text, anchor='end'):
    parts.append('<text x="%s" y="%s" text-anchor="%s" font-size="10">%s'
                 '</text>' % (_num(x), _num(y), anchor, escape(str(text))))


def line_chart_svg(title, series, x_label='', y_label=''):
    """
    Renders a line chart.

    :param title: chart title
    :param series: list of ``(label, xs, ys)`` tuples, one polyline each
    :param x_label: x axis label
    :param y_label: y axis label
    """
    parts = _open(title)
    _axes(parts, x_label, y_label)
    points = [(x, y) for _, xs, ys in series for x, y in zip(xs, ys)]
    if points:
        xs, ys = zip(*points)
        low, high = min(0.0, min(ys)), max(1.0, max(ys))
        sx = _scale(min(xs), max(xs), MARGIN, WIDTH - MARGIN)
        sy = _scale(low, high, HEIGHT - MARGIN, MARGIN)
        _tick(parts, MARGIN - 4, sy(low), '%.3g' % low)
        _tick(parts, MARGIN - 4, sy(high), '%.3g' % high)
        _tick(parts, MARGIN, HEIGHT - MARGIN + 14, '%.3g' % min(xs), 'start')
        _tick(parts, WIDTH - MARGIN, HEIGHT - MARGIN + 14, '%.3g' % max(xs))
        for i, (label, xs, ys) in enumerate(series):
            color = PALETTE[i % len(PALETTE)]
            coords = ' '.join('%s,%s' % (_num(sx(x)), _num(sy(y)))
                              for x, y in zip(xs, ys))
            parts.append('<polyline class="series" points="%s" fill="none" '
                         'stroke="%s" stroke-width="2"/>' % (coords, color))
            parts.append('<text x="%d" y="%d" font-size="12" fill="%s">%s'
                         '</text>' % (WIDTH - MARGIN - 120, MARGIN + 16 * i,
                                      color, escape(str(label))))
    return _close(parts)


def bar_chart_svg(title, labels, values, y_label=''):
    """
    Renders a bar chart, one bar per label.

    :param title: chart title
    :param labels: bar labels
    :param values: bar heights
    :param y_label: y axis label
    """
    parts = _open(title)
    _axes(parts, '', y_label)
    if len(values):
        low, high = min(0.0, min(values)), max(0.0, max(values))
        sy = _scale(low, high, HEIGHT - MARGIN, MARGIN)
        slot = (WIDTH - 2.0 * MARGIN) / len(values)
        for i, (label, value) in enumerate(zip(labels, values)):
            top, bottom = sorted((sy(value), sy(0.0)))
            x = MARGIN + i * slot + slot * 0.15
            parts.append('<rect class="bar" x="%s" y="%s" width="%s" '
                         'height="%s" fill="%s"/>' % (
                             _num(x), _num(top), _num(slot * 0.7),
                             _num(bottom - top), PALETTE[i % len(PALETTE)]))
            _tick(parts, x + slot * 0.35, HEIGHT - MARGIN + 14, label,
                  'middle')
            _tick(parts, x + slot * 0.35, top - 4, '%.4g' % value, 'middle')
    return _close(parts)


def _heat(value):
    level = int(round(255 * (1.0 - min(max(value, 0.0), 1.0))))
    return '#ff%02x%02x' % (level, level)


def heat_strip_svg(title, signal, intensity, x_label='time step',
                   y_label='value'):
    """
    Renders a signal over a heat strip: the background of every time step
    is colored by its intensity (white: 0, red: 1).

    :param title: chart title
    :param signal: values of one channel
    :param intensity: one value in [0, 1] per time step
    """
    signal = np.asarray(signal, dtype=float)
    intensity = np.asarray(intensity, dtype=float)
    parts = _open(title)
    length = len(signal)
    slot = (WIDTH - 2.0 * MARGIN) / length
    for i, value in enumerate(intensity):
        parts.append('<rect class="heat" x="%s" y="%d" width="%s" '
                     'height="%d" fill="%s"/>' % (
                         _num(MARGIN + i * slot), MARGIN, _num(slot),
                         HEIGHT - 2 * MARGIN, _heat(value)))
    _axes(parts, x_label, y_label)
    sx = _scale(0, max(length - 1, 1), MARGIN + slot / 2.0,
                WIDTH - MARGIN - slot / 2.0)
    sy = _scale(float(signal.min()), float(signal.max()), HEIGHT - MARGIN,
                MARGIN)
    coords = ' '.join('%s,%s' % (_num(sx(i)), _num(sy(v)))
                      for i, v in enumerate(signal))
    parts.append('<polyline class="series" points="%s" fill="none" '
                 'stroke="#000000" stroke-width="1.5"/>' % coords)
    return _close(parts)


def matrix_svg(title, row_labels, col_labels, values, x_label='',
               y_label=''):
    """
    Renders a matrix of values as a grid of colored, annotated cells.

    :param title: chart title
    :param row_labels: one label per row
    :param col_labels: one label per column
    :param values: ``(rows, columns)`` values
    """
    values = np.asarray(values, dtype=float)
    parts = _open(title)
    rows, columns = values.shape
    cell_w = (WIDTH - 2.0 * MARGIN) / columns
    cell_h = (HEIGHT - 2.0 * MARGIN) / rows
    low, high = float(np.min(values)), float(np.max(values))
    shade = _scale(low, high, 0.0, 1.0)
    for r in range(rows):
        _tick(parts, MARGIN - 4, MARGIN + (r + 0.5) * cell_h, row_labels[r])
        for c in range(columns):
            x = MARGIN + c * cell_w
            y = MARGIN + r * cell_h
            parts.append('<rect class="cell" x="%s" y="%s" width="%s" '
                         'height="%s" fill="%s" stroke="#ffffff"/>' % (
                             _num(x), _num(y), _num(cell_w), _num(cell_h),
                             _heat(shade(values[r, c]))))
            _tick(parts, x + cell_w / 2.0, y + cell_h / 2.0,
                  '%.3g' % values[r, c], 'middle')
    for c in range(columns):
        _tick(parts, MARGIN + (c + 0.5) * cell_w, HEIGHT - MARGIN + 14,
              col_labels[c], 'middle')
    if x_label:
        _tick(parts, WIDTH / 2.0, HEIGHT - 16, x_label, 'middle')
    if y_label:
        parts.append('<text x="16" y="%s" text-anchor="middle" '
                     'font-size="12" transform="rotate(-90 16 %s)">%s</text>'
                     % (_num(HEIGHT / 2.0), _num(HEIGHT / 2.0),
                        escape(y_label)))
    return _close(parts)


def write_svg(svg, path):
    """ Writes an svg document """
    with open(path, 'w') as f:
        f.write('<?xml version="1.0" encoding="UTF-8"?>\n')
        f.write(svg)
