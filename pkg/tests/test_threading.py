#!/usr/bin/env python
# -*- coding: utf-8 -*-

# test_threading.py

from pubsub import pub
from vsopt.threading import QueueWorker, PROGRESS_TOPIC


def square(value):
    if value < 0:
        raise ValueError("negative")
    return value * value


def finished(obj_list, **kwargs):
    worker = QueueWorker(obj_list, square, **kwargs)
    worker.join(timeout=30)
    assert not worker.is_alive()
    return worker.results


def test_results_keep_input_order():
    results = finished(list(range(10)), workers=4)
    assert [r.index for r in results] == list(range(10))
    assert [r.data for r in results] == [v * v for v in range(10)]


def test_errors_are_captured():
    results = finished([2, -1, 3], workers=2)
    assert [r.ok for r in results] == [True, False, True]
    assert isinstance(results[1].error, ValueError)
    assert results[2].data == 9


def test_messages():
    progress, done, closed = [], [], []

    def on_progress(msg):
        progress.append(msg)

    def on_done(msg):
        done.append(msg['index'])

    def on_close(msg):
        closed.append(msg)

    pub.subscribe(on_progress, PROGRESS_TOPIC)
    pub.subscribe(on_done, 'test_item_done')
    pub.subscribe(on_close, 'test_all_done')
    try:
        finished([1, -2, 3], close_msg='test_all_done', action_msg='test_item_done')
    finally:
        pub.unsubscribe(on_progress, PROGRESS_TOPIC)
        pub.unsubscribe(on_done, 'test_item_done')
        pub.unsubscribe(on_close, 'test_all_done')

    assert [m['gauge'] for m in progress][-1] == 1.
    assert len(progress) == 4
    assert done == [0, 2]
    assert len(closed) == 1
    assert [r.ok for r in closed[0]] == [True, False, True]


def test_failing_listener_does_not_stall_workers():
    def broken(msg):
        raise RuntimeError("listener failed")

    pub.subscribe(broken, 'test_broken_listener')
    try:
        results = finished([1, 2, 3], action_msg='test_broken_listener', workers=1)
    finally:
        pub.unsubscribe(broken, 'test_broken_listener')

    assert [r.data for r in results] == [1, 4, 9]


def test_empty_list():
    assert finished([]) == []
