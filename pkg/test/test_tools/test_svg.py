import xml.etree.ElementTree as ElementTree

import numpy as np
import pytest

from specocc.tools import svg

NS = '{http://www.w3.org/2000/svg}'


def parse(document):
    assert document.startswith('<svg')
    return ElementTree.fromstring(document)


def count(root, tag, klass=None):
    return len([e for e in root.iter(NS + tag)
                if klass is None or e.get('class') == klass])


def test_line_chart():
    series = [('frequency', [0, 0.5, 1], [1.0, 0.4, 0.2]),
              ('random', [0, 0.5, 1], [1.0, 0.8, 0.5])]
    root = parse(svg.line_chart_svg('Deletion', series, 'fraction', 'score'))
    assert count(root, 'polyline', 'series') == 2
    assert root.find(NS + 'title').text == 'Deletion'


def test_empty_line_chart():
    root = parse(svg.line_chart_svg('Nothing', []))
    assert count(root, 'polyline') == 0


def test_bar_chart():
    root = parse(svg.bar_chart_svg('auc', ['a', 'b', 'c'], [0.2, 0.5, -0.1]))
    bars = [e for e in root.iter(NS + 'rect') if e.get('class') == 'bar']
    assert len(bars) == 3
    assert all(float(bar.get('height')) >= 0 for bar in bars)


def test_heat_strip():
    signal = np.sin(np.arange(20))
    root = parse(svg.heat_strip_svg('overlay', signal, np.linspace(0, 1, 20)))
    assert count(root, 'rect', 'heat') == 20
    assert count(root, 'polyline', 'series') == 1


def test_matrix():
    root = parse(svg.matrix_svg('l2', [0, 1], [0, 1, 2], np.arange(6.0)
                                .reshape(2, 3)))
    assert count(root, 'rect', 'cell') == 6


def test_text_is_escaped():
    title = 'a < b & "c" > d'
    root = parse(svg.bar_chart_svg(title, ['<x>'], [1.0]))
    assert root.find(NS + 'title').text == title


def test_same_data_same_bytes():
    series = [('m', [0.0, 1.0], [0.3, 0.1])]
    assert svg.line_chart_svg('t', series) == svg.line_chart_svg('t', series)


@pytest.mark.parametrize('document', [
    svg.line_chart_svg('t', [('m', [0.0, 1.0], [0.3, 0.1])]),
    svg.bar_chart_svg('t', ['m'], [0.3])])
def test_write_svg(tmpdir, document):
    path = str(tmpdir.join('chart.svg'))
    svg.write_svg(document, path)
    with open(path) as f:
        assert f.readline().startswith('<?xml')
    assert ElementTree.parse(path).getroot().tag == NS + 'svg'
