#!/usr/bin/env python
# -*- coding: utf-8 -*-

# threading.py
"""
Generic classes to perform an action on each item of a list with worker threads and pubsub progress messages
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import logging
from pubsub import pub
from queue import Queue, Empty
from threading import Thread, Lock


logger = logging.getLogger(__name__)

PROGRESS_TOPIC = 'progress_update'


class WorkItemResult:
    """Outcome of one work item: its data, or the exception it raised"""
    def __init__(self, index, obj, data=None, error=None):
        self.index = index
        self.obj = obj
        self.data = data
        self.error = error

    @property
    def ok(self):
        return self.error is None

    def __repr__(self):
        return "WorkItemResult(index=%s, ok=%s)" % (self.index, self.ok)


class QueueWorker(Thread):
    """Create a thread, perform action on each item in obj_list with a pool of daemon workers"""
    def __init__(self, obj_list, action, close_msg=None, action_msg=None, action_phrase='Processing',
                 workers=1, start=True):
        """
        :param obj_list: work items
        :type obj_list: list
        :param action: callable applied to each item
        :param close_msg: pubsub topic sent (with msg=results) after the last item
        :type close_msg: str
        :param action_msg: pubsub topic sent with {'obj', 'data', 'index'} after each successful item
        :type action_msg: str
        :param action_phrase: progress label prefix
        :type action_phrase: str
        :param workers: number of worker threads
        :type workers: int
        :param start: start the thread immediately
        :type start: bool
        """
        Thread.__init__(self)

        self.obj_list = list(obj_list)
        self.obj_count = len(self.obj_list)
        self.action = action
        self.close_msg = close_msg
        self.action_msg = action_msg
        self.action_phrase = action_phrase
        self.workers = max(1, int(workers))

        self.results = [None] * self.obj_count
        self.completed = 0
        self._lock = Lock()

        if start:
            self.start()

    def run(self):
        queue = self.get_queue()
        for _ in range(min(self.workers, max(self.obj_count, 1))):
            worker = Thread(target=self.target, args=[queue])
            worker.daemon = True
            worker.start()
        queue.join()

        self.publish(PROGRESS_TOPIC, {'label': '%s complete' % self.action_phrase, 'gauge': 1.})
        if self.close_msg is not None:
            self.publish(self.close_msg, self.results)

    def get_queue(self):
        queue = Queue()
        for i, obj in enumerate(self.obj_list):
            queue.put((i, obj))
        return queue

    def target(self, queue):
        while True:
            try:
                index, obj = queue.get_nowait()
            except Empty:
                return
            try:
                self.do_action(index, obj)
            finally:
                queue.task_done()

    @staticmethod
    def publish(topic, msg):
        """Send a pubsub message; a failing listener is logged and never stops the workers"""
        try:
            pub.sendMessage(topic, msg=msg)
        except Exception as e:
            logger.error("Listener of %s failed: %s", topic, e)

    def do_action(self, index, obj):
        try:
            result = WorkItemResult(index, obj, data=self.action(obj))
        except Exception as e:
            logger.error("%s %s of %s failed: %s", self.action_phrase, index + 1, self.obj_count, e)
            result = WorkItemResult(index, obj, error=e)

        with self._lock:
            self.results[index] = result
            self.completed += 1
            msg = {'label': '%s %s of %s' % (self.action_phrase, self.completed, self.obj_count),
                   'gauge': float(self.completed) / self.obj_count}
            self.publish(PROGRESS_TOPIC, msg)
            if self.action_msg is not None and result.ok:
                self.publish(self.action_msg, {'obj': obj, 'data': result.data, 'index': index})
